#include "schubert/bp.hpp"

#include "schubert/order.hpp"

namespace schubert {

BPDecomposition parabolic_decompose(const WeylElement& w, const SimpleSubset& J, Side side) {
  if (side == Side::Right) {
    WeylElement v = min_coset_rep(w, J);
    WeylElement u = inverse(v) * w;
    return {side, J, v, u};
  }
  WeylElement v = min_left_coset_rep(w, J);
  WeylElement u = w * inverse(v);
  return {side, J, v, u};
}

BPConditions bp_conditions(const WeylElement& w, const SimpleSubset& J, std::size_t cap) {
  BPDecomposition d = parabolic_decompose(w, J, Side::Right);
  BPConditions c{};
  c.support_descents = ((support(d.v) & J).bits() & ~left_descents(d.u).bits()) == 0;

  std::vector<WeylElement> interval = lower_interval_bruhat(w, cap);
  c.max_in_interval = true;
  std::vector<WeylElement> lower_u;
  for (const auto& x : interval) {
    if (!in_parabolic(x, J)) continue;
    if (!bruhat_leq(x, d.u)) {
      c.max_in_interval = false;
      break;
    }
  }
  PoincarePolynomial pq;
  for (const auto& x : lower_interval_bruhat(d.v, cap))
    if (is_min_coset_rep(x, J)) lower_u.push_back(x);
  pq = grade(lower_u);
  c.poincare_factors = grade(interval) == pq * poincare(d.u, cap);
  return c;
}

bool is_bp(const WeylElement& w, const SimpleSubset& J, Side side, BPMode mode, std::size_t cap) {
  if (side == Side::Left) return is_bp(inverse(w), J, Side::Right, mode, cap);
  if (mode == BPMode::Verify) {
    BPConditions c = bp_conditions(w, J, cap);
    if (c.max_in_interval != c.poincare_factors || c.poincare_factors != c.support_descents)
      throw InternalInconsistency("BP conditions disagree");
    return c.support_descents;
  }
  BPDecomposition d = parabolic_decompose(w, J, Side::Right);
  return ((support(d.v) & J).bits() & ~left_descents(d.u).bits()) == 0;
}

bool is_chain_bp(const WeylElement& w, const SimpleSubset& J, Side side, std::size_t cap) {
  if (side == Side::Left) return is_chain_bp(inverse(w), J, Side::Right, cap);
  if (!is_bp(w, J, Side::Right)) return false;
  return is_chain_in_WJ(min_coset_rep(w, J), J, cap);
}

bool is_grassmannian_bp(const WeylElement& w, const SimpleSubset& J, Side side) {
  if (side == Side::Left) return is_grassmannian_bp(inverse(w), J, Side::Right);
  if (!is_bp(w, J, Side::Right)) return false;
  return support(w).size() == support(min_coset_rep(w, J)).size() + 1;
}

BPDecomposition decompose(const WeylElement& w, const SimpleSubset& J, Side side, std::size_t cap) {
  BPDecomposition d = parabolic_decompose(w, J, side);
  d.is_bp = is_bp(w, J, side);
  if (d.is_bp) {
    d.is_chain = is_chain_bp(w, J, side, cap);
    d.is_grassmannian = is_grassmannian_bp(w, J, side);
  }
  return d;
}

std::vector<int> leaves(const RootSystem& sys, const SimpleSubset& S) {
  std::vector<int> out;
  for (int i : S.indices()) {
    int deg = 0;
    for (int j : S.indices()) deg += sys.adjacent(i, j);
    if (deg <= 1) out.push_back(i);
  }
  return out;
}

std::optional<BPDecomposition> find_chain_bp(const WeylElement& w, std::size_t cap) {
  SimpleSubset S = support(w);
  for (Side side : {Side::Right, Side::Left})
    for (int s : leaves(w.system(), S)) {
      SimpleSubset J = S.without(s);
      if (is_chain_bp(w, J, side, cap)) return decompose(w, J, side, cap);
    }
  return std::nullopt;
}

bool is_maximal_in_quotient(const WeylElement& v, const SimpleSubset& J) {
  SimpleSubset sv = support(v);
  WeylElement top = min_coset_rep(longest_element(v.system(), sv), sv & J);
  return top == v;
}

EKLIndex EKLIndex::make(int k, int l) {
  if (!(5 <= l && l < k && k <= 8)) throw InvalidArgument("catalogue index needs 5 <= l < k <= 8");
  return {k, l};
}

namespace {

void need_e(const RootSystem& sys, int k) {
  if (sys.type().family != Family::E) throw InvalidArgument("catalogue elements need a type E system");
  if (k > sys.rank()) throw InvalidArgument("catalogue index exceeds the rank of " + sys.type().name());
}

}  // namespace

SimpleSubset ekl_S(const RootSystem& sys, int k) {
  need_e(sys, k);
  return {sys.rank(), (1u << k) - 1};
}

SimpleSubset ekl_J(const RootSystem& sys, int k) { return ekl_S(sys, k).without(1); }

WeylElement ekl_u(const RootSystem& sys, int k) { return longest_element(sys, ekl_J(sys, k)); }

WeylElement ekl_v(const RootSystem& sys, int l) {
  return min_coset_rep(longest_element(sys, ekl_S(sys, l)), ekl_J(sys, l));
}

WeylElement ekl_element(const RootSystem& sys, EKLIndex idx) {
  EKLIndex::make(idx.k, idx.l);
  return ekl_v(sys, idx.l) * ekl_u(sys, idx.k);
}

std::vector<EKLEntry> ekl_catalogue(const RootSystem& sys) {
  std::vector<EKLEntry> out;
  if (sys.type().family != Family::E) return out;
  for (int k = 6; k <= sys.rank(); ++k)
    for (int l = 5; l < k; ++l) {
      WeylElement w = ekl_element(sys, {k, l});
      out.push_back({{k, l}, false, w});
      out.push_back({{k, l}, true, inverse(w)});
    }
  return out;
}

}  // namespace schubert
