#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "zsr/groups.hpp"
#include "zsr/rational.hpp"

namespace zsr {

/// Injection i -> injection[i] (0-based measure positions) and weights
/// lambda_i with sum_i lambda_i (mu_{injection[i]} + i) uniform.
struct FractionalWitness {
    std::vector<std::size_t> injection;
    std::vector<Rational> lambdas;

    friend bool operator==(const FractionalWitness&, const FractionalWitness&) = default;
};

/// Weights for one fixed injection, or nullopt if none exist.
std::optional<std::vector<Rational>> fractional_weights(const std::vector<RationalMeasure>& measures,
                                                        const std::vector<std::size_t>& injection);

/// First injection in lexicographic order whose weight system is feasible.
/// Requires p prime and exactly 2p - 1 measures on Z/p; a miss throws
/// TheoremViolation.
FractionalWitness fractional_egz(const std::vector<RationalMeasure>& measures);

bool verify_fractional(const std::vector<RationalMeasure>& measures, const FractionalWitness& w);

/// Sets A_{injection[i]} + i with weights forming a perfect fractional
/// matching of Z/p.
struct BalancedWitness {
    std::vector<std::size_t> injection;
    std::vector<std::vector<Element>> shifted_sets;  // sorted
    std::vector<Rational> weights;

    friend bool operator==(const BalancedWitness&, const BalancedWitness&) = default;
};

/// Requires p prime, 2p - 1 sets, all nonempty and inside Z/p.
BalancedWitness balanced_witness(std::size_t p, const std::vector<std::vector<Element>>& sets);

/// Every element covered with total weight exactly 1, weights nonnegative.
bool verify_balanced(std::size_t p, const BalancedWitness& w);

/// Exact check: square, nonnegative, all row and column sums 1.
bool is_doubly_stochastic(const std::vector<std::vector<Rational>>& m);

/// Lexicographically least permutation with every m[i][pi(i)] > 0. Throws
/// InputError unless m is doubly stochastic, and TheoremViolation if the
/// positive support has no perfect matching.
std::vector<std::size_t> positive_permutation(const std::vector<std::vector<Rational>>& m);

}  // namespace zsr
