#include "schubert/cli.hpp"

#include <CLI11.hpp>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "schubert/verify.hpp"

namespace schubert {

namespace {

struct Args {
  std::string type;
  int rank = 0;
  std::string element;
  std::string suite;
  int max_rank = 4;
  std::string filter = "all";
  std::string format = "jsonl";
  std::string leaf;
  std::string J;
  std::string side = "right";
  bool check = false;
  std::string cache_dir;
  std::size_t cap = kDefaultCap;
};

SystemPtr system_from(const Args& a) { return RootSystem::build(CartanType::parse(a.type, a.rank)); }

Json analysis_report(const WeylElement& w, const Args& a, bool& check_failed) {
  const RootSystem& sys = w.system();
  Json j;
  j["type"] = sys.type().name();
  j["element"] = format_element(w);
  j["length"] = w.length();
  Json word = Json::array();
  for (int i : reduced_word(w)) word.push_back("s" + std::to_string(i + 1));
  j["reduced_word"] = word;
  j["support"] = simple_names(sys, support(w));
  j["left_descents"] = simple_names(sys, left_descents(w));
  j["right_descents"] = simple_names(sys, right_descents(w));
  j["N"] = root_names(sys, w.left_mask());
  j["I"] = root_names(sys, w.right_mask());
  j["N_Delta"] = simple_names(sys, simple_inversions(w));
  SmoothnessReport sm = is_smooth(w, a.cap);
  j["smoothness"] = to_json(sm);
  j["poincare"] = to_json(poincare(w, a.cap));

  Json bp;
  if (auto c = find_chain_bp(w, a.cap))
    bp["chain"] = to_json(*c);
  else
    bp["chain"] = nullptr;
  Json per_leaf = Json::array();
  SimpleSubset S = support(w);
  for (int s : leaves(sys, S)) per_leaf.push_back(to_json(decompose(w, S.without(s), Side::Right, a.cap)));
  bp["leaves"] = per_leaf;
  j["bp"] = bp;

  SphericalCertificate cert = decide_spherical(w, {a.cap});
  j["certificate"] = to_json(cert);

  if (a.check) {
    Json failures = Json::array();
    if (levi_support_via_covers(w) != simple_inversions(w)) failures.push_back("N_Delta differs from the cover union");
    if (!(element_from_biclosed(inversions_left(w).roots) == w)) failures.push_back("N(w) does not invert to w");
    if (static_cast<int>(w.left_mask().count()) != w.length()) failures.push_back("|N(w)| differs from the length");
    if (auto e = recheck_certificate(cert, a.cap)) failures.push_back("certificate: " + *e);
    check_failed = !failures.empty();
    j["check"] = {{"passed", failures.empty()}, {"failures", failures}};
  }
  return j;
}

int cmd_analyze(const Args& a, std::ostream& out) {
  SystemPtr sys = system_from(a);
  WeylElement w = parse_element(*sys, a.element);
  bool failed = false;
  out << analysis_report(w, a, failed).dump(2) << '\n';
  return failed ? kExitVerifyFailure : kExitOk;
}

int cmd_enumerate(const Args& a, std::ostream& out, const Cache& cache) {
  SystemPtr sys = system_from(a);
  std::vector<std::vector<std::string>> rows;
  for (const auto& w : cached_group(*sys, &cache, a.cap)) {
    Json j;
    j["element"] = format_element(w);
    j["length"] = w.length();
    j["N_Delta"] = simple_names(*sys, simple_inversions(w));
    std::string extra;
    if (a.filter == "smooth") {
      SmoothnessReport r = is_smooth(w, a.cap);
      bool keep = r.smooth == Tri::True || (r.smooth == Tri::Unsupported && r.rationally_smooth);
      if (!keep) continue;
      j["smoothness"] = to_json(r);
      extra = to_string(r.method);
    } else if (a.filter == "toral-cell") {
      if (!toral_cell_test(w)) continue;
    } else if (a.filter == "spherical") {
      SphericalCertificate c = decide_spherical(w, {a.cap});
      if (c.verdict != Verdict::Spherical) continue;
      j["reason"] = reason_kind(c.reason);
      extra = reason_kind(c.reason);
    }
    if (a.format == "jsonl") {
      out << j.dump() << '\n';
    } else {
      std::string nd;
      for (const auto& n : j["N_Delta"]) nd += (nd.empty() ? "" : ",") + n.get<std::string>();
      rows.push_back({j["element"].get<std::string>(), std::to_string(w.length()), nd.empty() ? "-" : nd, extra});
    }
  }
  if (a.format == "table") {
    std::vector<std::string> head = {"element", "length", "N_Delta", a.filter == "all" || a.filter == "toral-cell" ? "" : "detail"};
    std::vector<std::size_t> width(4, 0);
    for (std::size_t c = 0; c < 4; ++c) {
      width[c] = head[c].size();
      for (const auto& r : rows) width[c] = std::max(width[c], r[c].size());
    }
    auto emit = [&](const std::vector<std::string>& r) {
      std::string line;
      for (std::size_t c = 0; c < 4; ++c) {
        if (width[c] == 0) continue;
        std::string cell = r[c];
        cell.resize(width[c], ' ');
        line += (c ? "  " : "") + cell;
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out << line << '\n';
    };
    emit(head);
    for (const auto& r : rows) emit(r);
  }
  return kExitOk;
}

int cmd_verify(const Args& a, std::ostream& out, const Cache& cache) {
  std::vector<std::string> suites;
  if (a.suite == "all")
    suites = suite_names();
  else
    suites = {a.suite};
  bool ok = true;
  for (const auto& s : suites) {
    SuiteReport r = run_suite(s, a.max_rank, &cache, a.cap);
    for (const auto& l : r.lines) out << l << '\n';
    ok = ok && r.passed;
  }
  out << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? kExitOk : kExitVerifyFailure;
}

int cmd_bp(const Args& a, std::ostream& out) {
  SystemPtr sys = system_from(a);
  WeylElement w = parse_element(*sys, a.element);
  if (!a.leaf.empty() && !a.J.empty()) throw InvalidArgument("give either --leaf or --J, not both");
  SimpleSubset J = SimpleSubset::none(sys->rank());
  if (!a.leaf.empty())
    J = SimpleSubset::all(sys->rank()).without(parse_generator(*sys, a.leaf));
  else
    J = parse_subset(*sys, a.J);
  Side side = a.side == "left" ? Side::Left : Side::Right;
  BPDecomposition d = decompose(w, J, side, a.cap);
  Json j;
  j["type"] = sys->type().name();
  j["element"] = format_element(w);
  j["decomposition"] = to_json(d);
  out << j.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Schubert variety combinatorics: inversion sets, BP decompositions, sphericity certificates"};
  app.require_subcommand(1);
  Args a;
  auto common = [&](CLI::App* sub, bool element) {
    sub->add_option("-t,--type", a.type, "Cartan family A..G")->required();
    sub->add_option("-r,--rank", a.rank, "rank")->required();
    if (element) sub->add_option("-e,--element", a.element, "one-line permutation or word such as \"s1 s2\"")->required();
  };
  app.add_option("--cache-dir", a.cache_dir, "cache directory (default: $SCHUBERT_CACHE_DIR or the user cache home)");
  app.add_option("--cap", a.cap, "maximum number of elements in any enumeration");

  auto* analyze = app.add_subcommand("analyze", "full report and sphericity certificate for one element");
  common(analyze, true);
  analyze->add_flag("--check", a.check, "re-derive N_Delta and re-check the certificate");

  auto* enumerate = app.add_subcommand("enumerate", "list group elements");
  common(enumerate, false);
  enumerate->add_option("--filter", a.filter)->check(CLI::IsMember({"all", "smooth", "toral-cell", "spherical"}));
  enumerate->add_option("--format", a.format)->check(CLI::IsMember({"jsonl", "table"}));

  auto* verify = app.add_subcommand("verify", "run a reproduction suite");
  std::vector<std::string> choices = suite_names();
  choices.push_back("all");
  verify->add_option("--suite", a.suite)->required()->check(CLI::IsMember(choices));
  verify->add_option("--max-rank", a.max_rank)->check(CLI::Range(1, kMaxRank));

  auto* bp = app.add_subcommand("bp", "parabolic decomposition and BP flags");
  common(bp, true);
  bp->add_option("--leaf", a.leaf, "J is every simple reflection except this one");
  bp->add_option("--J", a.J, "explicit J, e.g. \"s1,s2\"");
  bp->add_option("--side", a.side)->check(CLI::IsMember({"right", "left"}));

  for (auto* sub : {analyze, enumerate, verify, bp}) {
    sub->add_option("--cache-dir", a.cache_dir, "cache directory");
    sub->add_option("--cap", a.cap, "maximum number of elements in any enumeration");
  }

  std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    Cache cache(Cache::resolve_dir(a.cache_dir.empty() ? std::nullopt : std::optional<std::string>(a.cache_dir)));
    if (analyze->parsed()) return cmd_analyze(a, out);
    if (enumerate->parsed()) return cmd_enumerate(a, out, cache);
    if (verify->parsed()) return cmd_verify(a, out, cache);
    return cmd_bp(a, out);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceCapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitResourceCap;
  } catch (const InternalInconsistency& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitVerifyFailure;
  }
}

}  // namespace schubert
