#pragma once

#include "schubert/weyl.hpp"

namespace schubert {

enum class Side { Left, Right };

struct InversionSet {
  RootSubset roots;
  Side side;
};

InversionSet inversions_left(const WeylElement& w);   // N(w)
InversionSet inversions_right(const WeylElement& w);  // I(w) = N(w^{-1})

// N_Delta(w): simple roots in N(w), equivalently the left descents.
SimpleSubset simple_inversions(const WeylElement& w);

// Inverse of w -> N(w) on biclosed sets. Throws InvalidArgument naming a
// violating pair when A is not biclosed.
WeylElement element_from_biclosed(const RootSubset& A);

// For w = v u: additivity of lengths, checked against the disjoint union
// N(w) = N(v) + v N(u). Throws InvalidArgument if w != v u and
// InternalInconsistency if the two tests disagree.
bool check_concat(const WeylElement& w, const WeylElement& v, const WeylElement& u);

// v applied to a set of positive roots; roots sent negative are dropped
// and reported through `all_positive`.
RootMask act_on_mask(const WeylElement& v, const RootMask& m, bool* all_positive = nullptr);

}  // namespace schubert
