#pragma once

#include <optional>
#include <vector>

#include "zsr/rational.hpp"

namespace zsr {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// A point of {x : A x = b} (with x >= 0 when `nonneg`), or nullopt if the
/// system is infeasible. Phase-one simplex in exact arithmetic with Bland's
/// rule; free variables are split as x = x+ - x-. The returned point is
/// substituted back before it is returned. Throws InputError on mismatched
/// dimensions.
std::optional<std::vector<Rational>> lp_feasible(const RationalMatrix& a, const std::vector<Rational>& b,
                                                 bool nonneg = true);

}  // namespace zsr
