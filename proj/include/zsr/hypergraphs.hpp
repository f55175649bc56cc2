#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "zsr/groups.hpp"
#include "zsr/set_system.hpp"
#include "zsr/zerosum.hpp"

namespace zsr {

/// Vertices are the members of F (vertex i = member i); hyperedges are the
/// n-sets of pairwise-disjoint members, in lexicographic order.
UniformHypergraph kneser_hypergraph(const SetFamily& family, std::size_t n);

/// n pairwise-disjoint parts of [m], none containing a member of F, of
/// maximum total size. Parts are listed with increasing minimum element;
/// empty parts come last.
struct DefectWitness {
    std::size_t defect = 0;
    std::vector<SetMask> parts;
};

/// cd^n(F) by branch-and-bound over element-to-part assignments. A new part
/// can only be opened by its smallest element, which removes the n!
/// relabelings of the parts. Throws InputError if the empty set is a member.
DefectWitness colorability_defect(const SetFamily& family, std::size_t n);

/// cd^n(F) by plain enumeration of all (n+1)^m assignments. Reference route
/// for the branch-and-bound; only practical for small m.
std::size_t colorability_defect_exhaustive(const SetFamily& family, std::size_t n);

struct CdZeroSumReport {
    std::size_t defect = 0;
    bool guarantee_applies = false;  // defect >= 2n - 1
    std::optional<HyperedgeWitness> hyperedge;
};

/// Searches KG^n(F) for a zero-sum hyperedge under a Z/n-coloring of the
/// members. When cd^n(F) >= 2n - 1 a miss throws TheoremViolation.
CdZeroSumReport verify_cd_zero_sum(const SetFamily& family, std::size_t n,
                                   std::span<const Element> coloring);

/// Least number of colors with no monochromatic hyperedge (exact search).
std::size_t chromatic_number(const UniformHypergraph& h);

/// A proper coloring with chromatic_number(h) colors.
std::vector<std::size_t> optimal_coloring(const UniformHypergraph& h);

}  // namespace zsr
