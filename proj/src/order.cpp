#include "schubert/order.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace schubert {

std::uint64_t PoincarePolynomial::total() const {
  std::uint64_t s = 0;
  for (auto c : coeffs) s += c;
  return s;
}

bool PoincarePolynomial::is_palindromic() const {
  for (std::size_t k = 0, n = coeffs.size(); k < n; ++k)
    if (coeffs[k] != coeffs[n - 1 - k]) return false;
  return true;
}

PoincarePolynomial PoincarePolynomial::operator*(const PoincarePolynomial& o) const {
  if (coeffs.empty() || o.coeffs.empty()) return {};
  PoincarePolynomial out;
  out.coeffs.assign(coeffs.size() + o.coeffs.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs.size(); ++j) out.coeffs[i + j] += coeffs[i] * o.coeffs[j];
  return out;
}

bool bruhat_leq(const WeylElement& x, const WeylElement& w) {
  if (&x.system() != &w.system()) throw InvalidArgument("elements belong to different root systems");
  WeylElement a = x, b = w;
  while (true) {
    if (a.length() > b.length()) return false;
    if (a.length() == 0) return true;
    if (a.length() == b.length()) return a == b;
    int s = std::countr_zero(left_descents(b).bits());
    if (a.left_mask().test(s)) a = simple_times(s, a);
    b = simple_times(s, b);
  }
}

bool weak_leq_right(const WeylElement& x, const WeylElement& w) {
  if (&x.system() != &w.system()) throw InvalidArgument("elements belong to different root systems");
  return (x.left_mask() & ~w.left_mask()).none();
}

bool weak_leq_left(const WeylElement& x, const WeylElement& w) {
  if (&x.system() != &w.system()) throw InvalidArgument("elements belong to different root systems");
  return (x.right_mask() & ~w.right_mask()).none();
}

std::vector<WeylElement> covers_bruhat(const WeylElement& w) {
  std::vector<WeylElement> out;
  const RootMask& inv = w.right_mask();
  for (int k = 0; k < w.system().num_positive(); ++k) {
    if (!inv.test(k)) continue;
    WeylElement x = times_reflection(w, k);
    if (x.length() == w.length() - 1) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<WeylElement> covers_weak_right(const WeylElement& w) {
  std::vector<WeylElement> out;
  for (int i : right_descents(w).indices()) out.push_back(times_simple(w, i));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

template <class Down>
std::vector<WeylElement> close_downward(const WeylElement& w, std::size_t cap, Down down) {
  std::vector<WeylElement> out{w};
  std::unordered_set<WeylElement, WeylHash> seen{w};
  for (std::size_t k = 0; k < out.size(); ++k)
    for (WeylElement& x : down(out[k])) {
      if (!seen.insert(x).second) continue;
      if (out.size() >= cap) throw ResourceCapExceeded("interval enumeration exceeds cap of " + std::to_string(cap));
      out.push_back(std::move(x));
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<WeylElement> lower_interval_bruhat(const WeylElement& w, std::size_t cap) {
  return close_downward(w, cap, covers_bruhat);
}

std::vector<WeylElement> lower_interval_weak_right(const WeylElement& w, std::size_t cap) {
  return close_downward(w, cap, covers_weak_right);
}

PoincarePolynomial grade(const std::vector<WeylElement>& elems) {
  PoincarePolynomial p;
  for (const auto& x : elems) {
    if (static_cast<int>(p.coeffs.size()) <= x.length()) p.coeffs.resize(x.length() + 1, 0);
    ++p.coeffs[x.length()];
  }
  return p;
}

PoincarePolynomial poincare(const WeylElement& w, std::size_t cap) { return grade(lower_interval_bruhat(w, cap)); }

PoincarePolynomial poincare_quotient(const WeylElement& v, const SimpleSubset& J, std::size_t cap) {
  std::vector<WeylElement> q;
  for (auto& x : lower_interval_bruhat(v, cap))
    if (is_min_coset_rep(x, J)) q.push_back(x);
  return grade(q);
}

bool is_chain_in_WJ(const WeylElement& v, const SimpleSubset& J, std::size_t cap) {
  if (!is_min_coset_rep(v, J)) throw InvalidArgument("element is not a minimal coset representative for J");
  std::vector<WeylElement> q;
  for (auto& x : lower_interval_bruhat(v, cap))
    if (is_min_coset_rep(x, J)) q.push_back(x);
  // sorted by length already
  for (std::size_t k = 1; k < q.size(); ++k) {
    if (q[k].length() == q[k - 1].length()) return false;
    if (!bruhat_leq(q[k - 1], q[k])) return false;
  }
  return true;
}

}  // namespace schubert
