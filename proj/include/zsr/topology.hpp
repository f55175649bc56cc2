#pragma once

#include <climits>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "zsr/complexes.hpp"
#include "zsr/smith.hpp"

namespace zsr {

/// Sparse boundary map from d-faces (columns) to (d-1)-faces (rows). The
/// sign of dropping the i-th vertex of a sorted face is (-1)^i. For d = 0 the
/// single row is the augmentation.
struct BoundaryMatrix {
    int dimension = 0;
    std::size_t rows = 0;
    std::vector<std::vector<std::pair<std::size_t, int>>> columns;

    IntMatrix dense() const;
};

/// Boundary matrices for d = 0..dim K over the faces of faces_by_dimension().
/// Verifies that consecutive maps compose to zero.
std::vector<BoundaryMatrix> boundary_matrices(const SimplicialComplex& k);

struct HomologyProfile {
    std::vector<std::size_t> betti;               // reduced, index = dimension
    std::vector<std::vector<mpz_class>> torsion;  // divisors > 1
    std::vector<std::size_t> f_vector;

    /// Reduced Euler characteristic from face counts.
    long euler_from_faces() const;
    long euler_from_betti() const;
    bool vanishes(std::size_t d) const;
};

/// Reduced integer homology in dimensions 0..dim K. Throws InputError for a
/// complex without vertices.
HomologyProfile reduced_homology(const SimplicialComplex& k);

/// Returned by homological_connectivity when every reduced group vanishes.
inline constexpr int kAcyclic = INT_MAX;

/// Largest k with reduced H_i = 0 for all i <= k; -1 if H_0 is nonzero.
int homological_connectivity(const SimplicialComplex& k);
int homological_connectivity(const HomologyProfile& h);

/// Pure of dimension d, every (d-1)-face in exactly two facets, and the
/// facet adjacency graph connected.
bool is_pseudomanifold(const SimplicialComplex& k, int d);

/// One sign per facet (in facets() order); the facet with sorted vertices
/// v_0 < ... < v_d carries sign * [v_0, ..., v_d].
struct Orientation {
    std::vector<int> signs;
};

/// Orients a pseudomanifold starting from +1 on the first facet. Throws
/// StructureError if K is not a pseudomanifold and NonOrientableError if the
/// signs cannot be made consistent.
Orientation orient(const SimplicialComplex& k);

struct DegreeReport {
    long degree = 0;          // relative to the orientations below
    long magnitude = 0;
    Orientation source;
    Orientation target;
};

/// Degree of a simplicial map between oriented pseudomanifolds of equal
/// dimension, counted on every target facet and checked constant. Throws
/// DegenerateMapError if no source facet maps onto a facet, and
/// StructureError on mismatched dimensions or inconsistent counts.
DegreeReport degree(const SimplicialMap& map);
DegreeReport degree(const SimplicialMap& map, const Orientation& source, const Orientation& target);

/// The map Delta_{m,n} -> boundary of the simplex on [n], (i, j) -> j.
/// Requires m < n.
SimplicialMap chessboard_column_projection(std::size_t m, std::size_t n);

struct DoldCertificate {
    bool free = false;
    int connectivity = -1;
    int sphere_dim = 0;
    bool certified = false;
    std::string verdict;
    std::string note;
};

/// Homology-level check of the hypotheses of Dold's theorem for a Z/p^k or
/// (Z/p)^k action: free, and homologically sphere_dim-connected. Throws
/// InputError for other groups.
DoldCertificate dold_certificate(const ComplexAction& action, int sphere_dim);

}  // namespace zsr
