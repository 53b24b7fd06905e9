#pragma once

#include <vector>

namespace schubert::detail {

// Is target a nonnegative combination of gens? Exact rational arithmetic.
bool in_cone(const std::vector<std::vector<int>>& gens, const std::vector<int>& target);

}  // namespace schubert::detail
