#include "schubert/spherical.hpp"

#include <algorithm>
#include <unordered_set>

#include "schubert/inversion.hpp"
#include "schubert/order.hpp"
#include "schubert/smooth.hpp"

namespace schubert {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Spherical:
      return "spherical";
    case Verdict::NotSpherical:
      return "not_spherical";
    case Verdict::Unknown:
      return "unknown";
  }
  return "?";
}

std::string reason_kind(const Reason& r) {
  struct {
    std::string operator()(const MaximalParabolic&) const { return "MaximalParabolic"; }
    std::string operator()(const ToralCell&) const { return "ToralCell"; }
    std::string operator()(const ChainBPFibration&) const { return "ChainBPFibration"; }
    std::string operator()(const EReduction&) const { return "EReduction"; }
    std::string operator()(const KempfTransfer&) const { return "KempfTransfer"; }
    std::string operator()(const NegativeClassification&) const { return "NegativeClassification"; }
    std::string operator()(const UnknownReason&) const { return "Unknown"; }
  } v;
  return std::visit(v, r);
}

namespace {

// 1-based label helpers over a local subset of rank n
bool is_set(const SimpleSubset& s, std::initializer_list<int> labels) {
  std::uint32_t b = 0;
  for (int l : labels) b |= 1u << (l - 1);
  return s.bits() == b;
}

bool within(const SimpleSubset& s, std::initializer_list<int> labels) {
  std::uint32_t b = 0;
  for (int l : labels) b |= 1u << (l - 1);
  return (s.bits() & ~b) == 0;
}

int mwz_case(int n, const SimpleSubset& ic, const SimpleSubset& jc) {
  if (ic.empty() || is_set(ic, {1}) || is_set(ic, {n})) return 1;
  if (n >= 2 && (is_set(ic, {2}) || is_set(ic, {n - 1})) && jc.size() == 2) return 2;
  if (ic.size() == 1 && jc.size() == 1) return 3;
  if (ic.size() == 1)
    for (int j = 2; j < n; ++j)
      if (is_set(jc, {1, j}) || is_set(jc, {j, j + 1}) || is_set(jc, {j, n})) return 4;
  return 0;
}

int stembridge_case(int n, const SimpleSubset& ic, const SimpleSubset& jc) {
  if (is_set(ic, {n}))
    for (int i = 1; i <= n; ++i)
      if (is_set(jc, {i}) || is_set(jc, {1, i}) || is_set(jc, {2, i})) return 1;
  if (is_set(ic, {1}) || is_set(ic, {2})) {
    bool proper_of_three = within(jc, {1, 2, n}) && !is_set(jc, {1, 2, n});
    if (proper_of_three || within(jc, {n - 1, n}) || is_set(jc, {n - 2})) return 2;
  }
  if (n == 4 && ((is_set(ic, {1}) && is_set(jc, {2, 3})) || (is_set(ic, {2}) && is_set(jc, {1, 3})))) return 3;
  return 0;
}

template <class F>
TableMatch match_up_to_swap(const PairTableQuery& q, F cases) {
  if (int c = cases(q.type.rank, q.Ic, q.Jc)) return {true, c, false};
  if (int c = cases(q.type.rank, q.Jc, q.Ic)) return {true, c, true};
  return {};
}

void check_query(const PairTableQuery& q, Family f) {
  if (q.type.family != f) throw InvalidArgument("pair table called with the wrong family");
  if (q.Ic.rank() != q.type.rank || q.Jc.rank() != q.type.rank)
    throw InvalidArgument("pair table subsets have the wrong width");
}

std::string canonical(const CartanType& t) {
  if (t.family == Family::C && t.rank == 2) return "B2";
  if (t.family == Family::D && t.rank == 3) return "A3";
  if ((t.family == Family::B || t.family == Family::C) && t.rank == 1) return "A1";
  return t.name();
}

}  // namespace

TableMatch mwz_typeA_pair(const PairTableQuery& q) {
  check_query(q, Family::A);
  return match_up_to_swap(q, mwz_case);
}

TableMatch stembridge_typeD_pair(const PairTableQuery& q) {
  check_query(q, Family::D);
  if (q.Ic.empty() || q.Jc.empty()) return {true, 0, false};
  return match_up_to_swap(q, stembridge_case);
}

bool brundan_spherical_levi(CartanType type, const SimpleSubset& I) {
  SystemPtr sys = RootSystem::build(type);
  return brundan_spherical_levi(*sys, I);
}

bool brundan_spherical_levi(const RootSystem& sys, const SimpleSubset& I) {
  for (const auto& g : sys.components(SimpleSubset::all(sys.rank()))) {
    SimpleSubset gi = g.as_subset(sys.rank());
    SimpleSubset li = I & gi;
    if (li == gi) continue;
    SimpleSubset removed = gi - li;
    if (removed.size() != 1) return false;
    std::vector<std::string> parts;
    for (const auto& c : sys.components(li)) parts.push_back(canonical(c.type));
    const int n = g.type.rank;
    auto one = [&](CartanType t) { return parts.size() == 1 && parts[0] == canonical(t); };
    bool ok = false;
    switch (g.type.family) {
      case Family::A:
        ok = true;
        break;
      case Family::B:
      case Family::C:
        ok = n == 2 || one({g.type.family, n - 1}) || one({Family::A, n - 1});
        break;
      case Family::D:
        ok = one({Family::D, n - 1}) || one({Family::A, n - 1});
        break;
      case Family::E:
        ok = (n == 6 && one({Family::D, 5})) || (n == 7 && one({Family::E, 6}));
        break;
      default:
        ok = false;
    }
    if (!ok) return false;
  }
  return true;
}

PairCheck levi_pair_spherical(const RootSystem& sys, const SimpleSubset& group, const SimpleSubset& I,
                              const SimpleSubset& J) {
  PairCheck pc{group, I & group, J & group, true, {}};
  for (const auto& comp : sys.components(group)) {
    const int r = comp.type.rank;
    std::uint32_t ic = 0, jc = 0;
    for (int k = 0; k < r; ++k) {
      if (!I.contains(comp.nodes[k])) ic |= 1u << k;
      if (!J.contains(comp.nodes[k])) jc |= 1u << k;
    }
    FactorCheck f{comp, {r, ic}, {r, jc}, "none", {}};
    if (ic == 0 || jc == 0) {
      f.table = "trivial";
      f.match = {true, 0, jc == 0};
    } else if (comp.type.family == Family::A) {
      f.table = "mwz";
      f.match = mwz_typeA_pair({comp.type, f.Ic, f.Jc});
    } else if (comp.type.family == Family::D) {
      f.table = "stembridge";
      f.match = stembridge_typeD_pair({comp.type, f.Ic, f.Jc});
    }
    pc.accepted = pc.accepted && f.match.accepted;
    pc.factors.push_back(f);
  }
  return pc;
}

bool toral_cell_test(const WeylElement& w) {
  RootMask phi = w.system().sub_root_mask(simple_inversions(w));
  return (w.right_mask() & ~phi).none();
}

namespace {

class Decider {
 public:
  explicit Decider(const DecideOptions& o) : opts_(o) {}

  SphericalCertificate run(const WeylElement& w) {
    const RootSystem& sys = w.system();
    const SimpleSubset S = support(w);
    const SimpleSubset nd = simple_inversions(w);
    auto cert = [&](Verdict v, Reason r) { return SphericalCertificate{v, w, {nd}, std::move(r), {}}; };

    const WeylElement top = longest_element(sys, S);
    if (w == top) return cert(Verdict::Spherical, MaximalParabolic{S});
    if (toral_cell_test(w)) return cert(Verdict::Spherical, ToralCell{});

    if (auto neg = negative_case(w, S, nd, top)) return cert(Verdict::NotSpherical, *neg);

    if (auto fib = main_path(w, S, nd)) {
      if (fib->ereduction) {
        SphericalCertificate inner = cert(Verdict::Spherical, fib->fibration);
        SphericalCertificate outer = cert(Verdict::Spherical, *fib->ereduction);
        outer.children.push_back(std::move(inner));
        return outer;
      }
      return cert(Verdict::Spherical, fib->fibration);
    }

    // Kempf transfer onto the top of the support
    for (int a : S.indices()) {
      if (right_descents(w).contains(a)) continue;
      if (!(times_simple(w, a) == top)) continue;
      PairCheck pc = levi_pair_spherical(sys, S, nd, SimpleSubset::none(sys.rank()).with(a));
      if (pc.accepted) return cert(Verdict::Spherical, KempfTransfer{a, KempfVariant::Quotient, top, pc});
    }
    // Kempf transfer along a right descent that keeps the Levi
    for (int a : right_descents(w).indices()) {
      WeylElement v = times_simple(w, a);
      if (simple_inversions(v) != nd || dead_.count(v)) continue;
      SphericalCertificate inner = run(v);
      if (inner.verdict != Verdict::Spherical) {
        dead_.insert(v);
        continue;
      }
      SphericalCertificate c = cert(Verdict::Spherical, KempfTransfer{a, KempfVariant::Right, v, std::nullopt});
      c.children.push_back(std::move(inner));
      return c;
    }
    return cert(Verdict::Unknown, UnknownReason{});
  }

 private:
  struct MainPathHit {
    ChainBPFibration fibration;
    std::optional<EReduction> ereduction;
  };

  std::optional<NegativeClassification> negative_case(const WeylElement& w, const SimpleSubset& S,
                                                      const SimpleSubset& nd, const WeylElement& top) {
    const RootSystem& sys = w.system();
    if (sys.type().family != Family::A) return std::nullopt;
    auto comps = sys.components(S);
    if (comps.size() != 1 || comps[0].type.rank < 4) return std::nullopt;
    const auto& nodes = comps[0].nodes;
    for (std::size_t k = 1; k + 1 < nodes.size(); ++k) {
      int i = nodes[k];
      if (!(w == times_simple(top, i))) continue;
      PairCheck pc = levi_pair_spherical(sys, S, nd, SimpleSubset::none(sys.rank()).with(i));
      if (pc.accepted || pc.factors.size() != 1 || pc.factors[0].Jc.size() < 3)
        throw InternalInconsistency("negative case not confirmed by the type A pair table");
      return NegativeClassification{i, pc};
    }
    return std::nullopt;
  }

  std::optional<MainPathHit> main_path(const WeylElement& w, const SimpleSubset& S, const SimpleSubset& nd) {
    const RootSystem& sys = w.system();
    const Family fam = sys.type().family;
    std::optional<EReduction> ered;
    if (fam == Family::E) {
      for (const auto& e : ekl_catalogue(sys))
        if (e.element == w) {
          ered = EReduction{e.index, e.inverse};
          break;
        }
      if (!ered) return std::nullopt;
    }
    if (fam == Family::A || fam == Family::D || fam == Family::E) {
      if (is_smooth(w, opts_.cap).smooth != Tri::True) return std::nullopt;
    } else if (fam != Family::G) {
      return std::nullopt;
    }
    for (int s : leaves(sys, S)) {
      SimpleSubset J = S.without(s);
      if (!is_bp(w, J, Side::Right)) continue;
      BPDecomposition bp = decompose(w, J, Side::Right, opts_.cap);
      if (!is_maximal_in_quotient(bp.v, J)) continue;
      if (!support(bp.v).subset_of(nd)) throw InternalInconsistency("support of v is not inside N_Delta(w)");
      SimpleSubset group;
      for (const auto& c : sys.components(nd))
        if (c.as_subset(sys.rank()).contains(s)) group = c.as_subset(sys.rank());
      PairCheck pc = levi_pair_spherical(sys, group, group.without(s), group.without(s));
      if (!pc.accepted) continue;
      return MainPathHit{ChainBPFibration{bp, s, pc}, ered};
    }
    return std::nullopt;
  }

  DecideOptions opts_;
  std::unordered_set<WeylElement, WeylHash> dead_;
};

}  // namespace

SphericalCertificate decide_spherical(const WeylElement& w, const DecideOptions& opts) {
  Decider d(opts);
  return d.run(w);
}

std::optional<std::string> recheck_certificate(const SphericalCertificate& c, std::size_t cap) {
  const WeylElement& w = c.element;
  const RootSystem& sys = w.system();
  const SimpleSubset S = support(w);
  if (c.levi.simples != simple_inversions(w)) return "levi support does not match N_Delta";
  if (c.verdict == Verdict::Spherical &&
      (std::holds_alternative<UnknownReason>(c.reason) || std::holds_alternative<NegativeClassification>(c.reason)))
    return "spherical verdict with a non-constructive reason";
  for (const auto& ch : c.children)
    if (auto e = recheck_certificate(ch, cap)) return e;

  if (auto* m = std::get_if<MaximalParabolic>(&c.reason)) {
    if (!(w == longest_element(sys, m->J))) return "element is not the longest element of its support";
  } else if (std::holds_alternative<ToralCell>(c.reason)) {
    if (!toral_cell_test(w)) return "I(w) is not inside the root subsystem of N_Delta(w)";
  } else if (auto* f = std::get_if<ChainBPFibration>(&c.reason)) {
    const BPDecomposition& d = f->bp;
    if (!(d.v * d.u == w) || d.v.length() + d.u.length() != w.length()) return "BP factors do not multiply to w";
    if (!is_bp(w, d.J, Side::Right, BPMode::Verify, cap)) return "decomposition is not BP";
    if (!is_maximal_in_quotient(d.v, d.J)) return "v is not maximal in its quotient";
    if (!support(d.v).subset_of(simple_inversions(w))) return "support of v escapes N_Delta(w)";
    PairCheck pc = levi_pair_spherical(sys, f->pair.group, f->pair.I, f->pair.J);
    if (!pc.accepted) return "pair table rejects";
  } else if (auto* k = std::get_if<KempfTransfer>(&c.reason)) {
    WeylElement v = times_simple(w, k->alpha);
    if (!(v == k->target)) return "Kempf target mismatch";
    if (k->variant == KempfVariant::Quotient) {
      if (!(k->target == longest_element(sys, S)) || v.length() != w.length() + 1) return "quotient target mismatch";
      if (!k->pair || !levi_pair_spherical(sys, S, simple_inversions(w), k->pair->J).accepted)
        return "pair table rejects";
    } else {
      if (v.length() + 1 != w.length()) return "Kempf transfer does not drop length";
      if (simple_inversions(v) != simple_inversions(w)) return "Kempf transfer changes the Levi";
      if (c.children.size() != 1 || !(c.children[0].element == v)) return "Kempf transfer child mismatch";
    }
  } else if (auto* n = std::get_if<NegativeClassification>(&c.reason)) {
    if (!(w == times_simple(longest_element(sys, S), n->node))) return "element is not w0 s_i";
    if (levi_pair_spherical(sys, S, simple_inversions(w), SimpleSubset::none(sys.rank()).with(n->node)).accepted)
      return "pair table accepts in the negative case";
  } else if (auto* e = std::get_if<EReduction>(&c.reason)) {
    WeylElement x = ekl_element(sys, e->index);
    if (!(w == (e->inverse ? inverse(x) : x))) return "catalogue element mismatch";
  }
  return std::nullopt;
}

}  // namespace schubert
