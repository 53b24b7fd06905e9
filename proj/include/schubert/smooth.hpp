#pragma once

#include <string>
#include <vector>

#include "schubert/weyl.hpp"

namespace schubert {

enum class Tri { False, True, Unsupported };

enum class SmoothMethod { PatternAvoidance, Palindromic, PetersonTransfer };

struct SmoothnessReport {
  bool rationally_smooth = false;
  Tri smooth = Tri::Unsupported;
  SmoothMethod method = SmoothMethod::Palindromic;
};

std::string to_string(SmoothMethod m);
std::string to_string(Tri t);

// Both arguments in one-line notation with values 1..n and 1..k.
bool avoids_pattern(const std::vector<int>& p, const std::vector<int>& q);

// Palindromic Poincare polynomial of [id, w].
bool is_rationally_smooth(const WeylElement& w, std::size_t cap = kDefaultCap);

// Type A: 4231/3412 avoidance, cross-checked against palindromicity.
// Types D, E: palindromicity. Other types: smooth is Unsupported.
SmoothnessReport is_smooth(const WeylElement& w, std::size_t cap = kDefaultCap);

// Smooth Bruhat covers of a smooth w in types A, D, E, sorted.
std::vector<WeylElement> smooth_divisors(const WeylElement& w, std::size_t cap = kDefaultCap);

}  // namespace schubert
