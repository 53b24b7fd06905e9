#include "schubert/io.hpp"

#include <cctype>
#include <sstream>

namespace schubert {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

bool all_digits(const std::string& s) {
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return !s.empty();
}

std::vector<std::string> split(const std::string& s, const std::string& seps) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (seps.find(c) != std::string::npos) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

int parse_generator(const RootSystem& sys, const std::string& token) {
  std::string t = token;
  if (!t.empty() && (t[0] == 's' || t[0] == 'a')) t = t.substr(1);
  if (!all_digits(t) || t.size() > 2) throw InvalidArgument("cannot parse generator '" + token + "'");
  int k = std::stoi(t);
  if (k < 1 || k > sys.rank())
    throw InvalidArgument("generator '" + token + "' out of range for " + sys.type().name());
  return k - 1;
}

WeylElement parse_element(const RootSystem& sys, const std::string& text) {
  std::string s = trim(text);
  if (s.empty() || s == "e" || s == "id") return identity(sys);
  if (sys.type().family == Family::A) {
    if (all_digits(s) && static_cast<int>(s.size()) == sys.rank() + 1 && sys.rank() + 1 <= 9) {
      std::vector<int> p;
      for (char c : s) p.push_back(c - '0');
      return perm_to_element(sys, p);
    }
    if (s.find(',') != std::string::npos) {
      std::vector<int> p;
      for (const auto& tok : split(s, ", ")) {
        if (!all_digits(tok)) throw InvalidArgument("cannot parse permutation entry '" + tok + "'");
        p.push_back(std::stoi(tok));
      }
      return perm_to_element(sys, p);
    }
  }
  std::vector<int> word;
  for (const auto& tok : split(s, " \t,")) {
    bool st_run = sys.type().family == Family::G && tok.find_first_not_of("st") == std::string::npos;
    if (st_run) {
      for (char c : tok) word.push_back(c == 's' ? 0 : 1);
      continue;
    }
    word.push_back(parse_generator(sys, tok));
  }
  return from_word(sys, word);
}

std::string format_element(const WeylElement& w) {
  if (w.system().type().family == Family::A) {
    std::vector<int> p = element_to_perm(w);
    std::string out;
    bool compact = p.size() <= 9;
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (!compact && k) out += ',';
      out += std::to_string(p[k]);
    }
    return out;
  }
  std::vector<int> word = reduced_word(w);
  if (word.empty()) return "e";
  std::string out;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) out += ' ';
    out += "s" + std::to_string(word[k] + 1);
  }
  return out;
}

SimpleSubset parse_subset(const RootSystem& sys, const std::string& text) {
  std::vector<int> idx;
  for (const auto& tok : split(trim(text), " \t,{}[]")) idx.push_back(parse_generator(sys, tok));
  return SimpleSubset::of(sys.rank(), idx);
}

Json simple_names(const RootSystem& sys, const SimpleSubset& s) {
  Json a = Json::array();
  for (int i : s.indices()) a.push_back(sys.simple_name(i));
  return a;
}

Json root_names(const RootSystem& sys, const RootMask& m) {
  Json a = Json::array();
  for (int k = 0; k < sys.num_positive(); ++k)
    if (m.test(k)) a.push_back(sys.root_name(k));
  return a;
}

Json root_indices(const RootSystem& sys, const RootMask& m) {
  Json a = Json::array();
  for (int k = 0; k < sys.num_positive(); ++k)
    if (m.test(k)) a.push_back(k);
  return a;
}

Json to_json(const PoincarePolynomial& p) { return Json(p.coeffs); }

Json to_json(const SmoothnessReport& r) {
  Json j;
  j["rationally_smooth"] = r.rationally_smooth;
  if (r.smooth == Tri::Unsupported)
    j["smooth"] = "unsupported";
  else
    j["smooth"] = r.smooth == Tri::True;
  j["method"] = to_string(r.method);
  return j;
}

Json to_json(const BPDecomposition& d) {
  const RootSystem& sys = d.v.system();
  Json j;
  j["side"] = d.side == Side::Right ? "right" : "left";
  j["J"] = simple_names(sys, d.J);
  j["v"] = format_element(d.v);
  j["u"] = format_element(d.u);
  j["is_bp"] = d.is_bp;
  j["is_chain"] = d.is_chain;
  j["is_grassmannian"] = d.is_grassmannian;
  return j;
}

Json to_json(const RootSystem& sys, const PairCheck& p) {
  Json j;
  j["group"] = simple_names(sys, p.group);
  j["I"] = simple_names(sys, p.I);
  j["J"] = simple_names(sys, p.J);
  j["accepted"] = p.accepted;
  Json fs = Json::array();
  for (const auto& f : p.factors) {
    Json fj;
    fj["type"] = f.component.type.name();
    fj["nodes"] = simple_names(sys, f.component.as_subset(sys.rank()));
    auto local = [](const SimpleSubset& s) {
      Json a = Json::array();
      for (int i : s.indices()) a.push_back("s" + std::to_string(i + 1));
      return a;
    };
    fj["Ic"] = local(f.Ic);
    fj["Jc"] = local(f.Jc);
    fj["table"] = f.table;
    fj["accepted"] = f.match.accepted;
    fj["case"] = f.match.case_id;
    fj["swapped"] = f.match.swapped;
    fs.push_back(fj);
  }
  j["factors"] = fs;
  return j;
}

Json to_json(const SphericalCertificate& c) {
  const RootSystem& sys = c.element.system();
  Json j;
  j["verdict"] = to_string(c.verdict);
  j["element"] = format_element(c.element);
  Json r;
  r["kind"] = reason_kind(c.reason);
  if (auto* m = std::get_if<MaximalParabolic>(&c.reason)) {
    r["J"] = simple_names(sys, m->J);
  } else if (auto* f = std::get_if<ChainBPFibration>(&c.reason)) {
    r["leaf"] = sys.simple_name(f->leaf);
    r["bp"] = to_json(f->bp);
    r["pair_check"] = to_json(sys, f->pair);
  } else if (auto* e = std::get_if<EReduction>(&c.reason)) {
    r["k"] = e->index.k;
    r["l"] = e->index.l;
    r["inverse"] = e->inverse;
  } else if (auto* k = std::get_if<KempfTransfer>(&c.reason)) {
    r["alpha"] = sys.simple_name(k->alpha);
    r["variant"] = k->variant == KempfVariant::Quotient ? "quotient" : "right";
    r["target"] = format_element(k->target);
    if (k->pair) r["pair_check"] = to_json(sys, *k->pair);
  } else if (auto* n = std::get_if<NegativeClassification>(&c.reason)) {
    r["node"] = sys.simple_name(n->node);
    r["pair_check"] = to_json(sys, n->pair);
  }
  j["reason"] = r;
  j["levi"] = simple_names(sys, c.levi.simples);
  Json ch = Json::array();
  for (const auto& x : c.children) ch.push_back(to_json(x));
  j["children"] = ch;
  return j;
}

}  // namespace schubert
