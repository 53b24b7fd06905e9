#pragma once

#include <cstdint>
#include <vector>

#include "schubert/weyl.hpp"

namespace schubert {

// coeffs[k] counts elements of length k.
struct PoincarePolynomial {
  std::vector<std::uint64_t> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  std::uint64_t total() const;
  bool is_palindromic() const;
  PoincarePolynomial operator*(const PoincarePolynomial& o) const;
  friend bool operator==(const PoincarePolynomial&, const PoincarePolynomial&) = default;
};

bool bruhat_leq(const WeylElement& x, const WeylElement& w);
bool weak_leq_right(const WeylElement& x, const WeylElement& w);  // N(x) inside N(w)
bool weak_leq_left(const WeylElement& x, const WeylElement& w);   // I(x) inside I(w)

// Elements covered by w in the Bruhat order, sorted.
std::vector<WeylElement> covers_bruhat(const WeylElement& w);
// {w s : s a right descent}, sorted.
std::vector<WeylElement> covers_weak_right(const WeylElement& w);

// [id, w] in the Bruhat order, sorted. Throws ResourceCapExceeded.
std::vector<WeylElement> lower_interval_bruhat(const WeylElement& w, std::size_t cap = kDefaultCap);
// {x : x <=_R w}, sorted.
std::vector<WeylElement> lower_interval_weak_right(const WeylElement& w, std::size_t cap = kDefaultCap);

PoincarePolynomial grade(const std::vector<WeylElement>& elems);
PoincarePolynomial poincare(const WeylElement& w, std::size_t cap = kDefaultCap);
// Graded count of [id, v] cap W^J.
PoincarePolynomial poincare_quotient(const WeylElement& v, const SimpleSubset& J, std::size_t cap = kDefaultCap);

// Is [id, v] cap W^J totally ordered? Requires v in W^J.
bool is_chain_in_WJ(const WeylElement& v, const SimpleSubset& J, std::size_t cap = kDefaultCap);

}  // namespace schubert
