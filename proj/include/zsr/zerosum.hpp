#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "zsr/groups.hpp"
#include "zsr/set_system.hpp"

namespace zsr {

/// n positions of a sequence whose elements multiply to the identity in the
/// order given by `ordering`. Positions are 0-based here; the I/O layer
/// presents them 1-based.
struct ZeroSumWitness {
    std::vector<std::size_t> indices;   // strictly increasing
    std::vector<std::size_t> ordering;  // a permutation of `indices`
    bool increasing_order_works = false;

    friend bool operator==(const ZeroSumWitness&, const ZeroSumWitness&) = default;
};

/// Lexicographically least n-subset of positions summing to 0 mod n.
/// Returns nullopt only for sequences shorter than 2n - 1; at or beyond that
/// length a miss throws TheoremViolation.
std::optional<ZeroSumWitness> egz_find(std::size_t n, std::span<const Element> seq);

/// Lexicographically least set of |G| positions admitting some ordering with
/// product 1, together with the lexicographically least such ordering.
/// Abelian groups short-circuit to the increasing-order search.
std::optional<ZeroSumWitness> olson_find(const FiniteGroup& group, std::span<const Element> seq);

/// Lexicographically least set of |G| positions whose product taken in
/// increasing position order is 1. No existence guarantee is asserted.
std::optional<ZeroSumWitness> olson_find_increasing(const FiniteGroup& group,
                                                    std::span<const Element> seq);

/// Lexicographically least ordering (as a permutation of 0..k-1) of `items`
/// whose left-to-right product is the identity.
std::optional<std::vector<std::size_t>> identity_ordering(const FiniteGroup& group,
                                                          std::span<const Element> items);

/// Re-multiplies the witness; also checks index shape and that it has
/// exactly `size` positions.
bool verify_zero_sum(const FiniteGroup& group, std::span<const Element> seq,
                     const ZeroSumWitness& witness, std::size_t size);

/// a_i = b_i - c_i over Z/p with b and c permutations of Z/p.
struct HallDecomposition {
    std::vector<Element> b;
    std::vector<Element> c;

    friend bool operator==(const HallDecomposition&, const HallDecomposition&) = default;
};

/// Decomposition of a length-p sequence over Z/p, or nullopt exactly when the
/// sequence does not sum to zero. Returns the lexicographically least c.
std::optional<HallDecomposition> hall_decompose(std::size_t p, std::span<const Element> a);

/// The chessboard-degree route: a partial transversal of a_1..a_{p-1} onto
/// {0..p-2}, completed by the one unused shift. Requires p prime and a
/// zero-sum sequence.
HallDecomposition hall_decompose_via_transversal(std::size_t p, std::span<const Element> a);

bool verify_hall(std::size_t p, std::span<const Element> a, const HallDecomposition& d);

/// Pairwise distinct b_1..b_{p-1} with {a_i + b_i} = {0, ..., p-2}; the
/// lexicographically least such b. Throws InputError unless p is prime.
std::vector<Element> partial_transversal(std::size_t p, std::span<const Element> a);

bool verify_partial_transversal(std::size_t p, std::span<const Element> a,
                                std::span<const Element> b);

/// Which d entry governs an adjacent constrained pair (i_j, i_j + 1) with i_j
/// odd (1-based): the subsequence position j, or the column pair (i_j + 1)/2.
enum class DifferenceIndexing { kBySubsequencePosition, kByColumnPair };

struct ConstrainedWitness {
    std::vector<std::size_t> indices;  // 0-based, strictly increasing
    std::vector<Element> b;            // pairwise distinct

    friend bool operator==(const ConstrainedWitness&, const ConstrainedWitness&) = default;
};

/// Lexicographically least (indices, b) with {a_{i_j} + b_j} = Z/p subject to
/// b_{j+1} = b_j + d whenever i_j is odd (1-based) and i_{j+1} = i_j + 1.
/// Requires p prime, |seq| = 2p - 1, |d| = p - 1 and every d nonzero.
ConstrainedWitness constrained_egz(
    std::size_t p, std::span<const Element> seq, std::span<const Element> d,
    DifferenceIndexing indexing = DifferenceIndexing::kBySubsequencePosition);

bool verify_constrained(std::size_t p, std::span<const Element> seq, std::span<const Element> d,
                        const ConstrainedWitness& w,
                        DifferenceIndexing indexing = DifferenceIndexing::kBySubsequencePosition);

/// A hyperedge (by position in the edge list) together with an ordering of
/// its vertices whose colors multiply to the identity.
struct HyperedgeWitness {
    std::size_t edge = 0;
    std::vector<std::size_t> vertices;  // product order

    friend bool operator==(const HyperedgeWitness&, const HyperedgeWitness&) = default;
};

/// First hyperedge in edge-list order that is zero-sum under `coloring`
/// (some ordering of its colors multiplies to 1). Requires uniformity = |G|.
std::optional<HyperedgeWitness> zero_sum_hyperedge(const UniformHypergraph& h,
                                                   std::span<const Element> coloring,
                                                   const FiniteGroup& group);

}  // namespace zsr
