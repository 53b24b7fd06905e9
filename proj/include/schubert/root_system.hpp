#pragma once

#include <array>
#include <bitset>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schubert/errors.hpp"

namespace schubert {

inline constexpr int kMaxRank = 8;
inline constexpr int kMaxPositiveRoots = 128;  // E8 has 120

using RootMask = std::bitset<kMaxPositiveRoots>;

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct CartanType {
  Family family = Family::A;
  int rank = 1;

  // Throws InvalidArgument when the rank is not allowed for the family.
  static CartanType make(Family family, int rank);
  static CartanType parse(const std::string& family, int rank);

  std::string name() const;
  bool simply_laced() const {
    return family == Family::A || family == Family::D || family == Family::E;
  }
  friend bool operator==(const CartanType&, const CartanType&) = default;
};

// A set of simple indices 0..rank-1.
class SimpleSubset {
 public:
  SimpleSubset() = default;
  SimpleSubset(int rank, std::uint32_t bits);
  static SimpleSubset none(int rank) { return SimpleSubset(rank, 0); }
  static SimpleSubset all(int rank) { return SimpleSubset(rank, (1u << rank) - 1); }
  static SimpleSubset of(int rank, const std::vector<int>& indices);

  int rank() const { return rank_; }
  std::uint32_t bits() const { return bits_; }
  bool contains(int i) const { return (bits_ >> i) & 1u; }
  bool empty() const { return bits_ == 0; }
  int size() const;
  std::vector<int> indices() const;

  SimpleSubset with(int i) const { return {rank_, bits_ | (1u << i)}; }
  SimpleSubset without(int i) const { return {rank_, bits_ & ~(1u << i)}; }
  SimpleSubset complement() const { return {rank_, ~bits_ & ((1u << rank_) - 1)}; }
  bool subset_of(const SimpleSubset& o) const { return (bits_ & ~o.bits_) == 0; }

  SimpleSubset operator|(const SimpleSubset& o) const { return {rank_, bits_ | o.bits_}; }
  SimpleSubset operator&(const SimpleSubset& o) const { return {rank_, bits_ & o.bits_}; }
  SimpleSubset operator-(const SimpleSubset& o) const { return {rank_, bits_ & ~o.bits_}; }
  friend bool operator==(const SimpleSubset&, const SimpleSubset&) = default;

 private:
  int rank_ = 0;
  std::uint32_t bits_ = 0;
};

struct Root {
  std::array<int, kMaxRank> coords{};
  int rank = 0;

  static Root simple(int rank, int i);
  int height() const;
  bool is_positive() const;
  bool is_negative() const;
  Root operator-() const;
  friend bool operator==(const Root&, const Root&) = default;
};

// Position of a root in the positive table together with its sign.
struct SignedRoot {
  int index = -1;
  bool positive = true;
  friend bool operator==(const SignedRoot&, const SignedRoot&) = default;
};

// Column-major rank x rank matrix: entry(i, j) is the coefficient of
// alpha_i in the image of alpha_j.
using ActionMatrix = std::array<std::int8_t, kMaxRank * kMaxRank>;

// A connected piece of a Dynkin subdiagram. nodes[k] is the ambient index
// that plays the role of standard label k+1 for `type`.
struct DynkinComponent {
  CartanType type;
  std::vector<int> nodes;
  SimpleSubset as_subset(int ambient_rank) const;
};

class RootSystem {
 public:
  static std::shared_ptr<const RootSystem> build(CartanType type);

  const CartanType& type() const { return type_; }
  int rank() const { return type_.rank; }
  // C[i][j] = <alpha_j, alpha_i^vee>
  int cartan(int i, int j) const { return cartan_[i][j]; }
  bool adjacent(int i, int j) const { return i != j && cartan_[i][j] != 0; }

  int num_positive() const { return static_cast<int>(roots_.size()); }
  const Root& positive_root(int idx) const { return roots_[idx]; }
  int height(int idx) const { return roots_[idx].height(); }
  // Table index of the simple root alpha_i.
  int simple_index(int i) const { return i; }

  std::optional<SignedRoot> find(const Root& r) const;
  // Throws InvalidArgument when r is not a root.
  Root reflect(int i, const Root& r) const;
  SignedRoot reflect_index(int idx, int i) const { return reflection_table_[idx][i]; }

  RootMask all_positive() const { return all_; }
  // Positive roots of the sub root system spanned by I.
  RootMask sub_root_mask(const SimpleSubset& I) const;
  // Simple-root support of each positive root, as a bit set over indices.
  std::uint32_t root_support(int idx) const { return supports_[idx]; }

  // Matrix of the reflection in the positive root with the given index.
  const ActionMatrix& reflection_matrix(int idx) const { return reflections_[idx]; }

  // Positive roots lying in the real cone spanned by roots a and b.
  const RootMask& pair_cone(int a, int b) const { return pair_cone_[a * roots_.size() + b]; }

  std::vector<DynkinComponent> components(const SimpleSubset& I) const;

  std::string simple_name(int i) const;   // "a1"
  std::string root_name(int idx) const;   // "a1+2a2"

 private:
  explicit RootSystem(CartanType type);

  CartanType type_;
  std::array<std::array<int, kMaxRank>, kMaxRank> cartan_{};
  std::vector<Root> roots_;
  std::vector<std::array<SignedRoot, kMaxRank>> reflection_table_;
  std::vector<std::uint32_t> supports_;
  std::vector<ActionMatrix> reflections_;
  std::vector<RootMask> pair_cone_;
  RootMask all_;
};

using SystemPtr = std::shared_ptr<const RootSystem>;

// A set of positive roots of a particular system.
class RootSubset {
 public:
  RootSubset(const RootSystem& sys, RootMask mask);
  static RootSubset from_indices(const RootSystem& sys, const std::vector<int>& idx);

  const RootSystem& system() const { return *sys_; }
  const RootMask& mask() const { return mask_; }
  std::vector<int> indices() const;
  std::size_t size() const { return mask_.count(); }
  bool contains(int idx) const { return mask_.test(idx); }
  RootSubset complement() const;
  friend bool operator==(const RootSubset& a, const RootSubset& b) {
    return a.sys_ == b.sys_ && a.mask_ == b.mask_;
  }

 private:
  const RootSystem* sys_;
  RootMask mask_;
};

RootSubset sub_root_subset(const RootSystem& sys, const SimpleSubset& I);

// Closure: alpha, beta in A and a positive combination of them a root
// implies that root is in A.
bool is_closed(const RootSubset& A);
bool is_coclosed(const RootSubset& A);
bool is_biclosed(const RootSubset& A);
// Convexity: cone(A) meets the positive roots exactly in A.
bool is_convex(const RootSubset& A);
bool is_coconvex(const RootSubset& A);
bool is_biconvex(const RootSubset& A);

// A pair (alpha, beta) in A whose cone contains a root outside A.
std::optional<std::pair<int, int>> closure_violation(const RootSubset& A);

}  // namespace schubert
