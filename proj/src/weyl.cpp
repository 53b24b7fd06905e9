#include "schubert/weyl.hpp"

#include <bit>
#include <deque>
#include <string_view>
#include <unordered_set>

namespace schubert {

namespace {

ActionMatrix matmul(const ActionMatrix& a, const ActionMatrix& b, int r) {
  ActionMatrix out{};
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < r; ++i) {
      int acc = 0;
      for (int k = 0; k < r; ++k) acc += a[k * kMaxRank + i] * b[j * kMaxRank + k];
      out[j * kMaxRank + i] = static_cast<std::int8_t>(acc);
    }
  return out;
}

ActionMatrix identity_matrix(int r) {
  ActionMatrix m{};
  for (int i = 0; i < r; ++i) m[i * kMaxRank + i] = 1;
  return m;
}

RootMask negative_mask(const RootSystem& sys, const ActionMatrix& m) {
  const int r = sys.rank();
  std::array<int, kMaxRank> h{};
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < r; ++i) h[j] += m[j * kMaxRank + i];
  RootMask out;
  for (int k = 0; k < sys.num_positive(); ++k) {
    const Root& b = sys.positive_root(k);
    int s = 0;
    for (int j = 0; j < r; ++j) s += b.coords[j] * h[j];
    if (s < 0) out.set(k);
  }
  return out;
}

void same_system(const WeylElement& x, const WeylElement& y) {
  if (&x.system() != &y.system()) throw InvalidArgument("elements belong to different root systems");
}

}  // namespace

WeylElement WeylElement::from_matrices(const RootSystem& sys, const ActionMatrix& action, const ActionMatrix& inverse) {
  WeylElement w;
  w.sys_ = &sys;
  w.action_ = action;
  w.inverse_ = inverse;
  w.refresh();
  return w;
}

void WeylElement::refresh() {
  right_ = negative_mask(*sys_, action_);
  left_ = negative_mask(*sys_, inverse_);
  length_ = static_cast<int>(right_.count());
}

Root WeylElement::apply(const Root& r) const {
  Root out;
  out.rank = rank();
  for (int j = 0; j < rank(); ++j)
    for (int i = 0; i < rank(); ++i) out.coords[i] += r.coords[j] * entry(i, j);
  return out;
}

std::size_t WeylElement::hash() const {
  std::string_view bytes(reinterpret_cast<const char*>(action_.data()), action_.size());
  return std::hash<std::string_view>{}(bytes) ^ std::hash<const void*>{}(sys_);
}

WeylElement identity(const RootSystem& sys) {
  ActionMatrix id = identity_matrix(sys.rank());
  return WeylElement::from_matrices(sys, id, id);
}

WeylElement simple_reflection(const RootSystem& sys, int i) {
  if (i < 0 || i >= sys.rank())
    throw InvalidArgument("generator index " + std::to_string(i + 1) + " out of range for rank " +
                          std::to_string(sys.rank()));
  const ActionMatrix& s = sys.reflection_matrix(sys.simple_index(i));
  return WeylElement::from_matrices(sys, s, s);
}

WeylElement from_word(const RootSystem& sys, const std::vector<int>& word) {
  WeylElement w = identity(sys);
  for (int i : word) {
    if (i < 0 || i >= sys.rank())
      throw InvalidArgument("generator index " + std::to_string(i + 1) + " out of range for rank " +
                            std::to_string(sys.rank()));
    w = times_simple(w, i);
  }
  return w;
}

WeylElement multiply(const WeylElement& x, const WeylElement& y) {
  same_system(x, y);
  const int r = x.rank();
  return WeylElement::from_matrices(x.system(), matmul(x.action(), y.action(), r),
                                    matmul(y.inverse_action(), x.inverse_action(), r));
}

WeylElement operator*(const WeylElement& x, const WeylElement& y) { return multiply(x, y); }

WeylElement inverse(const WeylElement& x) {
  return WeylElement::from_matrices(x.system(), x.inverse_action(), x.action());
}

WeylElement times_simple(const WeylElement& w, int i) {
  const RootSystem& sys = w.system();
  const int r = sys.rank();
  ActionMatrix a = w.action();
  // column j becomes col_j - C[i][j] col_i
  for (int j = 0; j < r; ++j) {
    int c = sys.cartan(i, j);
    if (j == i || c == 0) continue;
    for (int k = 0; k < r; ++k) a[j * kMaxRank + k] = static_cast<std::int8_t>(a[j * kMaxRank + k] - c * a[i * kMaxRank + k]);
  }
  for (int k = 0; k < r; ++k) a[i * kMaxRank + k] = static_cast<std::int8_t>(-a[i * kMaxRank + k]);
  // s_i applied to every column of the inverse
  ActionMatrix b = w.inverse_action();
  for (int j = 0; j < r; ++j) {
    int pairing = 0;
    for (int k = 0; k < r; ++k) pairing += b[j * kMaxRank + k] * sys.cartan(i, k);
    b[j * kMaxRank + i] = static_cast<std::int8_t>(b[j * kMaxRank + i] - pairing);
  }
  return WeylElement::from_matrices(sys, a, b);
}

WeylElement simple_times(int i, const WeylElement& w) { return inverse(times_simple(inverse(w), i)); }

WeylElement times_reflection(const WeylElement& w, int root_idx) {
  const RootSystem& sys = w.system();
  const ActionMatrix& t = sys.reflection_matrix(root_idx);
  const int r = sys.rank();
  return WeylElement::from_matrices(sys, matmul(w.action(), t, r), matmul(t, w.inverse_action(), r));
}

int length(const WeylElement& w) { return w.length(); }

SimpleSubset left_descents(const WeylElement& w) {
  std::uint32_t b = 0;
  for (int i = 0; i < w.rank(); ++i)
    if (w.left_mask().test(i)) b |= 1u << i;
  return {w.rank(), b};
}

SimpleSubset right_descents(const WeylElement& w) {
  std::uint32_t b = 0;
  for (int i = 0; i < w.rank(); ++i)
    if (w.right_mask().test(i)) b |= 1u << i;
  return {w.rank(), b};
}

std::vector<int> reduced_word(const WeylElement& w) {
  std::vector<int> word;
  WeylElement x = w;
  while (x.length() > 0) {
    int i = std::countr_zero(left_descents(x).bits());
    word.push_back(i);
    x = simple_times(i, x);
  }
  return word;
}

SimpleSubset support(const WeylElement& w) {
  std::uint32_t b = 0;
  WeylElement x = w;
  while (x.length() > 0) {
    int i = std::countr_zero(left_descents(x).bits());
    b |= 1u << i;
    x = simple_times(i, x);
  }
  return {w.rank(), b};
}

bool is_involution(const WeylElement& w) { return w == inverse(w); }

bool in_parabolic(const WeylElement& w, const SimpleSubset& J) {
  return (w.left_mask() & ~w.system().sub_root_mask(J)).none();
}

WeylElement perm_to_element(const RootSystem& sys, const std::vector<int>& p) {
  if (sys.type().family != Family::A) throw InvalidArgument("one-line notation needs a type A system");
  const int n = sys.rank() + 1;
  if (static_cast<int>(p.size()) != n)
    throw InvalidArgument("permutation must have " + std::to_string(n) + " entries for " + sys.type().name());
  std::vector<int> inv(n + 1, 0);
  for (int k = 0; k < n; ++k) {
    if (p[k] < 1 || p[k] > n || inv[p[k]]) throw InvalidArgument("not a permutation of 1.." + std::to_string(n));
    inv[p[k]] = k + 1;
  }
  // eps_a - eps_b in simple coordinates
  auto column = [&](ActionMatrix& m, int j, int a, int b) {
    int lo = std::min(a, b), hi = std::max(a, b), sign = a < b ? 1 : -1;
    for (int i = lo; i < hi; ++i) m[j * kMaxRank + (i - 1)] = static_cast<std::int8_t>(sign);
  };
  ActionMatrix act{}, invm{};
  for (int j = 0; j < n - 1; ++j) {
    column(act, j, p[j], p[j + 1]);
    column(invm, j, inv[j + 1], inv[j + 2]);
  }
  return WeylElement::from_matrices(sys, act, invm);
}

std::vector<int> element_to_perm(const WeylElement& w) {
  if (w.system().type().family != Family::A) throw InvalidArgument("one-line notation needs a type A system");
  const int n = w.rank() + 1;
  std::vector<int> p(n);
  for (int k = 0; k < n; ++k) p[k] = k + 1;
  for (int i : reduced_word(w)) std::swap(p[i], p[i + 1]);
  return p;
}

WeylElement min_coset_rep(const WeylElement& w, const SimpleSubset& J) {
  WeylElement v = w;
  while (true) {
    std::uint32_t d = right_descents(v).bits() & J.bits();
    if (!d) return v;
    v = times_simple(v, std::countr_zero(d));
  }
}

WeylElement min_left_coset_rep(const WeylElement& w, const SimpleSubset& J) {
  return inverse(min_coset_rep(inverse(w), J));
}

bool is_min_coset_rep(const WeylElement& w, const SimpleSubset& J) { return (right_descents(w).bits() & J.bits()) == 0; }

WeylElement longest_element(const RootSystem& sys, const SimpleSubset& J) {
  WeylElement w = identity(sys);
  while (true) {
    std::uint32_t up = J.bits() & ~right_descents(w).bits();
    if (!up) return w;
    w = times_simple(w, std::countr_zero(up));
  }
}

std::vector<WeylElement> enumerate_parabolic(const RootSystem& sys, const SimpleSubset& J, std::size_t cap) {
  std::vector<WeylElement> out{identity(sys)};
  std::unordered_set<WeylElement, WeylHash> seen{out[0]};
  for (std::size_t k = 0; k < out.size(); ++k)
    for (int i : J.indices()) {
      WeylElement x = times_simple(out[k], i);
      if (x.length() < out[k].length() || !seen.insert(x).second) continue;
      if (out.size() >= cap) throw ResourceCapExceeded("group enumeration exceeds cap of " + std::to_string(cap));
      out.push_back(x);
    }
  return out;
}

std::vector<WeylElement> enumerate_group(const RootSystem& sys, std::size_t cap) {
  return enumerate_parabolic(sys, SimpleSubset::all(sys.rank()), cap);
}

}  // namespace schubert
