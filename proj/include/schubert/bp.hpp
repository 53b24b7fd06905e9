#pragma once

#include <optional>
#include <vector>

#include "schubert/inversion.hpp"
#include "schubert/weyl.hpp"

namespace schubert {

// Right: w = v u with v in W^J, u in W_J.
// Left:  w = u v with u in W_J, v in ^J W.
struct BPDecomposition {
  Side side;
  SimpleSubset J;
  WeylElement v;
  WeylElement u;
  bool is_bp = false;
  bool is_chain = false;
  bool is_grassmannian = false;
};

enum class BPMode { Fast, Verify };

struct BPConditions {
  bool max_in_interval;    // u is the maximum of [e, w] cap W_J
  bool poincare_factors;   // P_w = P^J_v * P_u
  bool support_descents;   // S(v) cap J inside D_L(u)
};

// Flags left unset.
BPDecomposition parabolic_decompose(const WeylElement& w, const SimpleSubset& J, Side side);

// The three right-side conditions, each computed independently.
BPConditions bp_conditions(const WeylElement& w, const SimpleSubset& J, std::size_t cap = kDefaultCap);

// Fast mode evaluates the support/descent condition only. Verify mode
// evaluates all three and throws InternalInconsistency if they disagree.
bool is_bp(const WeylElement& w, const SimpleSubset& J, Side side, BPMode mode = BPMode::Fast,
           std::size_t cap = kDefaultCap);
bool is_chain_bp(const WeylElement& w, const SimpleSubset& J, Side side, std::size_t cap = kDefaultCap);
bool is_grassmannian_bp(const WeylElement& w, const SimpleSubset& J, Side side = Side::Right);

// Decomposition with all three flags filled.
BPDecomposition decompose(const WeylElement& w, const SimpleSubset& J, Side side, std::size_t cap = kDefaultCap);

// Nodes of degree <= 1 in the Dynkin diagram restricted to S, ascending.
std::vector<int> leaves(const RootSystem& sys, const SimpleSubset& S);

// J = S(w) minus a leaf; right side first, leaves ascending.
std::optional<BPDecomposition> find_chain_bp(const WeylElement& w, std::size_t cap = kDefaultCap);

// Is v the longest element of W^{S(v) cap J} inside W_{S(v)}?
bool is_maximal_in_quotient(const WeylElement& v, const SimpleSubset& J);

// Catalogue elements of type E, nodes labelled as in the E8 diagram with
// node 1 attached to node 4 and the chain 2-3-4-...-8.
struct EKLIndex {
  int k;
  int l;
  static EKLIndex make(int k, int l);  // requires 5 <= l < k <= 8
};

SimpleSubset ekl_S(const RootSystem& sys, int k);  // {s1..sk}
SimpleSubset ekl_J(const RootSystem& sys, int k);  // S_k minus s2
WeylElement ekl_u(const RootSystem& sys, int k);   // longest element of W_{J_k}
WeylElement ekl_v(const RootSystem& sys, int l);   // longest element of W_{S_l}^{J_l}
WeylElement ekl_element(const RootSystem& sys, EKLIndex idx);

struct EKLEntry {
  EKLIndex index;
  bool inverse;
  WeylElement element;
};
// Every w_kl and its inverse available in sys, ordered by (k, l, inverse).
std::vector<EKLEntry> ekl_catalogue(const RootSystem& sys);

}  // namespace schubert
