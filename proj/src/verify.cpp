#include "schubert/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace schubert {

namespace {

struct Check {
  SuiteReport& rep;
  void operator()(bool ok, const std::string& what, const std::string& witness = "") {
    std::string line = (ok ? "PASS " : "FAIL ") + rep.suite + ": " + what;
    if (!ok && !witness.empty()) line += " [witness " + witness + "]";
    rep.lines.push_back(line);
    rep.passed = rep.passed && ok;
  }
};

// Right weak order on S4: element, simple inversions (1-based).
const std::vector<std::pair<std::string, std::vector<int>>> kS4Labels = {
    {"1234", {}},     {"1243", {3}},    {"1324", {2}},       {"2134", {1}},    {"1423", {3}},
    {"1342", {2}},    {"2143", {1, 3}}, {"3124", {2}},       {"2314", {1}},    {"1432", {2, 3}},
    {"4123", {3}},    {"2413", {1, 3}}, {"3142", {2}},       {"3214", {1, 2}}, {"2341", {1}},
    {"4132", {2, 3}}, {"4213", {1, 3}}, {"3412", {2}},       {"2431", {1, 3}}, {"3241", {1, 2}},
    {"4312", {2, 3}}, {"4231", {1, 3}}, {"3421", {1, 2}},    {"4321", {1, 2, 3}}};

const std::vector<std::pair<std::string, std::string>> kS4Edges = {
    {"1234", "1243"}, {"1234", "1324"}, {"1234", "2134"}, {"1243", "1423"}, {"1243", "2143"}, {"1324", "1342"},
    {"1324", "3124"}, {"2134", "2143"}, {"2134", "2314"}, {"1423", "1432"}, {"1423", "4123"}, {"1342", "1432"},
    {"1342", "3142"}, {"2143", "2413"}, {"3124", "3142"}, {"3124", "3214"}, {"2314", "3214"}, {"2314", "2341"},
    {"1432", "4132"}, {"4123", "4132"}, {"4123", "4213"}, {"2413", "4213"}, {"2413", "2431"}, {"3142", "3412"},
    {"3214", "3241"}, {"2341", "2431"}, {"2341", "3241"}, {"4132", "4312"}, {"4213", "4231"}, {"3412", "4312"},
    {"3412", "3421"}, {"2431", "4231"}, {"3241", "3421"}, {"4312", "4321"}, {"4231", "4321"}, {"3421", "4321"}};

const std::set<std::string> kS4Toral = {"1234", "2134", "1324", "1243", "1432", "2143", "3214", "4321"};

std::vector<CartanType> types_up_to(int max_rank, std::initializer_list<Family> fams) {
  std::vector<CartanType> out;
  for (Family f : fams)
    for (int r = 1; r <= max_rank; ++r) {
      try {
        out.push_back(CartanType::make(f, r));
      } catch (const InvalidArgument&) {
      }
    }
  return out;
}

void suite_s4(SuiteReport& rep, const Cache* cache, std::size_t cap) {
  Check check{rep};
  auto sys = RootSystem::build({Family::A, 3});
  bool labels_ok = true;
  std::string bad;
  for (const auto& [p, lab] : kS4Labels) {
    std::vector<int> idx;
    for (int l : lab) idx.push_back(l - 1);
    if (simple_inversions(parse_element(*sys, p)) != SimpleSubset::of(3, idx)) {
      labels_ok = false;
      bad = p;
    }
  }
  check(labels_ok, "simple inversion labels of all 24 elements", bad);

  std::set<std::pair<std::string, std::string>> want(kS4Edges.begin(), kS4Edges.end()), got;
  for (const auto& w : cached_group(*sys, cache, cap))
    for (const auto& v : covers_weak_right(w)) got.insert({format_element(v), format_element(w)});
  check(want == got, "right weak order Hasse diagram (" + std::to_string(got.size()) + " edges)");

  std::set<std::string> toral, singular;
  for (const auto& w : cached_group(*sys, cache, cap)) {
    if (toral_cell_test(w)) toral.insert(format_element(w));
    if (is_smooth(w, cap).smooth == Tri::False) singular.insert(format_element(w));
  }
  check(toral == kS4Toral, "toral-cell elements are exactly the 8 listed");
  check(singular == std::set<std::string>{"3412", "4231"}, "non-smooth elements are exactly 3412 and 4231");
}

void suite_g2(SuiteReport& rep, const Cache* cache, std::size_t cap) {
  Check check{rep};
  auto sys = RootSystem::build({Family::G, 2});
  auto group = cached_group(*sys, cache, cap);
  int sph = 0;
  std::string bad;
  for (const auto& w : group) {
    if (decide_spherical(w, {cap}).verdict == Verdict::Spherical)
      ++sph;
    else
      bad = format_element(w);
  }
  check(sph == 12 && group.size() == 12, std::to_string(sph) + "/" + std::to_string(group.size()) + " spherical", bad);

  // maximal chains of the right weak order, walked upwards from id
  std::vector<std::vector<WeylElement>> chains{{identity(*sys)}};
  std::vector<std::vector<WeylElement>> done;
  while (!chains.empty()) {
    auto c = chains.back();
    chains.pop_back();
    std::vector<WeylElement> ups;
    for (int i = 0; i < 2; ++i)
      if (!right_descents(c.back()).contains(i)) ups.push_back(times_simple(c.back(), i));
    if (ups.empty()) done.push_back(c);
    for (auto& u : ups) {
      auto d = c;
      d.push_back(u);
      chains.push_back(d);
    }
  }
  check(done.size() == 2, "right weak order has " + std::to_string(done.size()) + " maximal chains");
  bool constant = true;
  for (const auto& c : done)
    for (std::size_t k = 2; k + 1 < c.size(); ++k)
      if (simple_inversions(c[k]) != simple_inversions(c[k - 1])) {
        constant = false;
        bad = format_element(c[k]);
      }
  check(constant, "simple inversions constant on chain interiors", bad);
}

void suite_gl4(SuiteReport& rep, const Cache* cache, std::size_t cap) {
  Check check{rep};
  auto sys = RootSystem::build({Family::A, 3});
  int sph = 0;
  std::string bad;
  auto group = cached_group(*sys, cache, cap);
  for (const auto& w : group) {
    if (decide_spherical(w, {cap}).verdict == Verdict::Spherical)
      ++sph;
    else
      bad = format_element(w);
  }
  check(sph == static_cast<int>(group.size()), std::to_string(sph) + "/" + std::to_string(group.size()) + " spherical",
        bad);
}

void suite_weak_iso(SuiteReport& rep, int max_rank, const Cache* cache, std::size_t cap) {
  Check check{rep};
  for (const auto& t : types_up_to(max_rank, {Family::A, Family::B, Family::C, Family::D, Family::G})) {
    auto sys = RootSystem::build(t);
    const int m = sys->num_positive();
    if (m > 12) continue;
    auto group = cached_group(*sys, cache, cap);
    std::size_t biclosed = 0;
    bool dyer = true;
    for (std::uint64_t bits = 0; bits < (1ull << m); ++bits) {
      RootSubset A(*sys, RootMask(bits));
      bool bc = is_biclosed(A);
      biclosed += bc;
      if (bc != is_biconvex(A)) dyer = false;
    }
    bool roundtrip = true;
    std::string bad;
    for (const auto& w : group)
      if (!(element_from_biclosed(inversions_left(w).roots) == w)) {
        roundtrip = false;
        bad = format_element(w);
      }
    check(biclosed == group.size(),
          t.name() + ": " + std::to_string(biclosed) + " biclosed sets for " + std::to_string(group.size()) + " elements");
    check(dyer, t.name() + ": biclosed iff biconvex on all masks");
    check(roundtrip, t.name() + ": inversion sets invert back to their elements", bad);
  }
}

void suite_bp(SuiteReport& rep, int max_rank, const Cache* cache, std::size_t cap) {
  Check check{rep};
  auto run_pairs = [&](const RootSystem& sys, const std::vector<std::pair<WeylElement, SimpleSubset>>& pairs,
                       const std::string& label) {
    bool ok = true;
    std::string bad;
    for (const auto& [w, J] : pairs) {
      BPConditions c = bp_conditions(w, J, cap);
      if (c.max_in_interval != c.poincare_factors || c.poincare_factors != c.support_descents) {
        ok = false;
        bad = format_element(w) + " J=" + simple_names(sys, J).dump();
      }
    }
    check(ok, label + ": conditions agree on " + std::to_string(pairs.size()) + " pairs", bad);
  };
  for (auto t : {CartanType{Family::A, 3}, CartanType{Family::B, 3}, CartanType{Family::G, 2}}) {
    if (t.rank > max_rank) continue;
    auto sys = RootSystem::build(t);
    std::vector<std::pair<WeylElement, SimpleSubset>> pairs;
    for (const auto& w : cached_group(*sys, cache, cap))
      for (std::uint32_t b = 0; b < (1u << t.rank); ++b) pairs.emplace_back(w, SimpleSubset(t.rank, b));
    run_pairs(*sys, pairs, t.name() + " exhaustive");
  }
  for (auto t : {CartanType{Family::A, 5}, CartanType{Family::D, 4}}) {
    if (t.rank > max_rank) continue;
    auto sys = RootSystem::build(t);
    auto group = cached_group(*sys, cache, cap);
    std::mt19937 rng(20240601);
    std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
    std::uniform_int_distribution<std::uint32_t> sub(0, (1u << t.rank) - 1);
    std::vector<std::pair<WeylElement, SimpleSubset>> pairs;
    for (int k = 0; k < 1000; ++k) {
      const WeylElement& w = group[pick(rng)];
      pairs.emplace_back(w, SimpleSubset(t.rank, sub(rng)));
    }
    run_pairs(*sys, pairs, t.name() + " random");
  }
}

void suite_divisors(SuiteReport& rep, int max_rank, const Cache* cache, std::size_t cap) {
  Check check{rep};
  std::vector<CartanType> types = types_up_to(max_rank, {Family::A});
  if (max_rank >= 4) types.push_back({Family::D, 4});
  for (const auto& t : types) {
    auto sys = RootSystem::build(t);
    int tested = 0;
    bool ok = true;
    std::string bad;
    for (const auto& w : cached_group(*sys, cache, cap)) {
      if (is_smooth(w, cap).smooth != Tri::True || w == longest_element(*sys, support(w))) continue;
      ++tested;
      auto divs = smooth_divisors(w, cap);
      bool shaped = false;
      for (const auto& x : divs) {
        for (int s : left_descents(w).indices()) shaped |= x == simple_times(s, w);
        for (int s : right_descents(w).indices()) shaped |= x == times_simple(w, s);
      }
      if (divs.empty() || !shaped) {
        ok = false;
        bad = format_element(w);
      }
    }
    check(ok, t.name() + ": " + std::to_string(tested) + " smooth non-maximal elements have a smooth divisor of the form s w or w s",
          bad);
  }
}

void suite_main(SuiteReport& rep, int max_rank, const Cache* cache, std::size_t cap) {
  Check check{rep};
  for (const auto& t : types_up_to(max_rank, {Family::A, Family::D})) {
    auto sys = RootSystem::build(t);
    int smooth = 0, sph = 0;
    std::string bad;
    for (const auto& w : cached_group(*sys, cache, cap)) {
      if (is_smooth(w, cap).smooth != Tri::True) continue;
      ++smooth;
      if (decide_spherical(w, {cap}).verdict == Verdict::Spherical)
        ++sph;
      else
        bad = format_element(w);
    }
    check(smooth == sph, t.name() + ": " + std::to_string(sph) + "/" + std::to_string(smooth) + " smooth elements spherical",
          bad);
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"s4",      "g2",       "gl4",         "weak-iso",
                                                  "bp-consistency", "divisors", "main-theorem"};
  return names;
}

SuiteReport run_suite(const std::string& suite, int max_rank, const Cache* cache, std::size_t cap) {
  SuiteReport rep{suite, true, {}};
  if (suite == "s4")
    suite_s4(rep, cache, cap);
  else if (suite == "g2")
    suite_g2(rep, cache, cap);
  else if (suite == "gl4")
    suite_gl4(rep, cache, cap);
  else if (suite == "weak-iso")
    suite_weak_iso(rep, max_rank, cache, cap);
  else if (suite == "bp-consistency")
    suite_bp(rep, max_rank, cache, cap);
  else if (suite == "divisors")
    suite_divisors(rep, max_rank, cache, cap);
  else if (suite == "main-theorem")
    suite_main(rep, max_rank, cache, cap);
  else
    throw InvalidArgument("unknown suite '" + suite + "'");
  if (rep.lines.empty()) {
    rep.lines.push_back("FAIL " + suite + ": nothing to check at max rank " + std::to_string(max_rank));
    rep.passed = false;
  }
  return rep;
}

}  // namespace schubert
