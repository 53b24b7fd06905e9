#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "schubert/root_system.hpp"

namespace schubert {

// An element of the Weyl group, stored as its action on the simple roots
// together with the inverse action and both inversion masks.
class WeylElement {
 public:
  const RootSystem& system() const { return *sys_; }
  int rank() const { return sys_->rank(); }
  int length() const { return length_; }

  // coefficient of alpha_i in w(alpha_j)
  int entry(int i, int j) const { return action_[j * kMaxRank + i]; }
  const ActionMatrix& action() const { return action_; }
  const ActionMatrix& inverse_action() const { return inverse_; }

  // N(w) = Phi+ cap w(Phi-)
  const RootMask& left_mask() const { return left_; }
  // I(w) = Phi+ cap w^{-1}(Phi-)
  const RootMask& right_mask() const { return right_; }

  Root apply(const Root& r) const;
  // Sign of w(beta) for a positive root index.
  bool sends_negative(int idx) const { return right_.test(idx); }

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.sys_ == b.sys_ && a.action_ == b.action_;
  }
  // Arbitrary but deterministic total order.
  friend bool operator<(const WeylElement& a, const WeylElement& b) {
    if (a.length_ != b.length_) return a.length_ < b.length_;
    return a.action_ < b.action_;
  }
  std::size_t hash() const;

  // Assembles an element from a matrix pair; no validation.
  static WeylElement from_matrices(const RootSystem& sys, const ActionMatrix& action, const ActionMatrix& inverse);

 private:
  WeylElement() = default;
  void refresh();

  const RootSystem* sys_ = nullptr;
  ActionMatrix action_{};
  ActionMatrix inverse_{};
  RootMask left_;
  RootMask right_;
  int length_ = 0;
};

struct WeylHash {
  std::size_t operator()(const WeylElement& w) const { return w.hash(); }
};

WeylElement identity(const RootSystem& sys);
WeylElement simple_reflection(const RootSystem& sys, int i);
WeylElement from_word(const RootSystem& sys, const std::vector<int>& word);

// Throws InvalidArgument when the systems differ.
WeylElement multiply(const WeylElement& x, const WeylElement& y);
WeylElement operator*(const WeylElement& x, const WeylElement& y);
WeylElement inverse(const WeylElement& x);
WeylElement times_simple(const WeylElement& w, int i);   // w s_i
WeylElement simple_times(int i, const WeylElement& w);   // s_i w
WeylElement times_reflection(const WeylElement& w, int root_idx);  // w t_beta

int length(const WeylElement& w);
SimpleSubset left_descents(const WeylElement& w);
SimpleSubset right_descents(const WeylElement& w);
SimpleSubset support(const WeylElement& w);
bool is_involution(const WeylElement& w);
bool in_parabolic(const WeylElement& w, const SimpleSubset& J);

// Lexicographically smallest reduced word.
std::vector<int> reduced_word(const WeylElement& w);

// One-line notation p(1..n) for type A rank n-1, values 1-based.
WeylElement perm_to_element(const RootSystem& sys, const std::vector<int>& p);
std::vector<int> element_to_perm(const WeylElement& w);

// Minimal representative v of w W_J, so w = v u with u in W_J.
WeylElement min_coset_rep(const WeylElement& w, const SimpleSubset& J);
// Minimal representative of W_J w.
WeylElement min_left_coset_rep(const WeylElement& w, const SimpleSubset& J);
WeylElement longest_element(const RootSystem& sys, const SimpleSubset& J);
bool is_min_coset_rep(const WeylElement& w, const SimpleSubset& J);

// All elements of W_J, breadth first from the identity. Throws
// ResourceCapExceeded past `cap` elements.
std::vector<WeylElement> enumerate_parabolic(const RootSystem& sys, const SimpleSubset& J, std::size_t cap);
std::vector<WeylElement> enumerate_group(const RootSystem& sys, std::size_t cap);

inline constexpr std::size_t kDefaultCap = 10'000'000;

}  // namespace schubert
