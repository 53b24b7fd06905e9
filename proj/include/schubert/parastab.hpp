#pragma once

#include <optional>

#include "schubert/weyl.hpp"

namespace schubert {

// Simple roots generating the Levi factor L(w) of the stabilizer of X_w.
struct LeviSupport {
  SimpleSubset simples;
};

LeviSupport levi_support(const WeylElement& w);
// Same set rebuilt from right weak covers; an atom s contributes its own root.
SimpleSubset levi_support_via_covers(const WeylElement& w);
// {a in Delta : v^{-1}(a) in Phi- or Phi_K}; requires v in W^K.
SimpleSubset coset_stabilizer_support(const WeylElement& v, const SimpleSubset& K);

struct StabMonotoneReport {
  bool strict = false;
  // A root a in N(u), w = v u, with v(a) simple.
  std::optional<int> witness;
};

// Requires v <=_R w. Throws InternalInconsistency when inclusion fails or
// when strictness and the witness disagree.
StabMonotoneReport check_stab_monotone(const WeylElement& v, const WeylElement& w);

}  // namespace schubert
