#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zsr/groups.hpp"
#include "zsr/set_system.hpp"

namespace zsr {

/// Sorted list of vertex indices.
using Face = std::vector<std::size_t>;

/// Finite abstract simplicial complex stored by its inclusion-maximal faces.
///
/// Vertices carry string labels (structured vertices such as (v, i) are
/// serialized into the label); all computation uses the dense indices.
/// Facets are kept sorted, so two complexes built from the same data compare
/// equal. A complex with no facets is the void complex; the complex {empty
/// face} has the single facet [].
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Facets must be distinct and inclusion-maximal, and every vertex must
    /// lie in some facet. Throws StructureError naming the offending facets.
    static SimplicialComplex from_facets(std::vector<std::string> labels, std::vector<Face> facets);

    /// Downward closure of an arbitrary face list; non-maximal faces are dropped.
    static SimplicialComplex from_faces(std::vector<std::string> labels, std::vector<Face> faces);

    /// Full simplex on `vertex_count` vertices labelled 0..n-1.
    static SimplicialComplex simplex(std::size_t vertex_count);

    /// Boundary of the simplex on `vertex_count` vertices.
    static SimplicialComplex simplex_boundary(std::size_t vertex_count);

    /// `vertex_count` isolated points (the complex [n]).
    static SimplicialComplex points(std::size_t vertex_count);

    std::size_t vertex_count() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t v) const { return labels_[v]; }
    const std::vector<Face>& facets() const { return facets_; }
    bool includes_empty_face() const { return !facets_.empty(); }

    /// Largest facet size minus one; -1 for {empty face} and the void complex.
    int dimension() const;
    bool is_pure() const;

    /// Face membership under downward closure.
    bool contains(std::span<const std::size_t> sorted_face) const;

    /// All nonempty faces grouped by dimension, each group sorted.
    std::vector<std::vector<Face>> faces_by_dimension() const;

    /// (f_0, f_1, ..., f_d).
    std::vector<std::size_t> f_vector() const;

    /// Number of faces counting the empty face.
    std::size_t face_count_with_empty() const;

    std::optional<std::size_t> find_label(const std::string& label) const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    SimplicialComplex(std::vector<std::string> labels, std::vector<Face> facets);
    void index_facets();

    std::vector<std::string> labels_;
    std::vector<Face> facets_;
    // facet_bits_[f] is a bitset over vertices, (vertex_count + 63) / 64 words each
    std::vector<std::uint64_t> facet_bits_;
    std::size_t words_ = 0;
};

using ComplexPtr = std::shared_ptr<const SimplicialComplex>;

/// A vertex map whose image of every source face is a face of the target.
class SimplicialMap {
public:
    /// Throws StructureError if some source facet is not carried to a face.
    static SimplicialMap create(ComplexPtr source, ComplexPtr target,
                                std::vector<std::size_t> vertex_map);

    const SimplicialComplex& source() const { return *source_; }
    const SimplicialComplex& target() const { return *target_; }
    const ComplexPtr& source_ptr() const { return source_; }
    const ComplexPtr& target_ptr() const { return target_; }
    const std::vector<std::size_t>& vertex_map() const { return map_; }
    std::size_t operator()(std::size_t v) const { return map_[v]; }

    /// g after this.
    SimplicialMap then(const SimplicialMap& g) const;

private:
    SimplicialMap(ComplexPtr s, ComplexPtr t, std::vector<std::size_t> m)
        : source_(std::move(s)), target_(std::move(t)), map_(std::move(m)) {}

    ComplexPtr source_;
    ComplexPtr target_;
    std::vector<std::size_t> map_;
};

/// A group acting on a complex through vertex permutations.
class ComplexAction {
public:
    /// vertex_perms[g][v] = g . v. Validates perm_e = id, perm_g o perm_h =
    /// perm_{gh} for all pairs, and that every perm carries facets to facets.
    static ComplexAction create(ComplexPtr complex, FiniteGroup group,
                                std::vector<std::vector<std::size_t>> vertex_perms);

    const SimplicialComplex& complex() const { return *complex_; }
    const ComplexPtr& complex_ptr() const { return complex_; }
    const FiniteGroup& group() const { return group_; }
    const std::vector<std::vector<std::size_t>>& vertex_perms() const { return perms_; }
    std::size_t apply(Element g, std::size_t v) const { return perms_[g][v]; }

private:
    ComplexAction(ComplexPtr c, FiniteGroup g, std::vector<std::vector<std::size_t>> p)
        : complex_(std::move(c)), group_(std::move(g)), perms_(std::move(p)) {}

    ComplexPtr complex_;
    FiniteGroup group_;
    std::vector<std::vector<std::size_t>> perms_;
};

// -- constructions ----------------------------------------------------------

/// K * L on the tagged disjoint union; K's vertices come first, labelled
/// "(label,0)", then L's as "(label,1)".
SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l);

/// K^{*n}: vertex (v, i) sits at index i * |V| + v with label "(label,i)".
SimplicialComplex n_fold_join(const SimplicialComplex& k, std::size_t n);

/// Subcomplex of K^{*n} of unions of pairwise-disjoint faces (empty parts
/// allowed), with the same vertex layout as n_fold_join.
SimplicialComplex deleted_join(const SimplicialComplex& k, std::size_t n);

/// Chessboard complex on [m] x [n] (0-based), vertex (i, j) at index
/// i * n + j, labelled "(i,j)". Faces are non-attacking rook placements.
SimplicialComplex chessboard(std::size_t m, std::size_t n);

/// Z/m acting on Delta_{m,n} by cycling rows: g . (i, j) = (i + g, j).
ComplexAction chessboard_row_action(std::size_t m, std::size_t n);

/// Z/n acting on Delta_{m,n} by cycling columns: g . (i, j) = (i, j + g).
ComplexAction chessboard_column_action(std::size_t m, std::size_t n);

/// Z/n acting on the full simplex on Z/n by translation.
ComplexAction simplex_translation_action(std::size_t n);

enum class BoxFaces {
    /// Faces with some empty part are included (vacuous condition).
    kIncludeEmptyParts,
    /// Only faces whose parts are all nonempty generate the complex.
    kNonemptyPartsOnly,
};

struct BoxComplex {
    ComplexPtr complex;
    ComplexAction action;  // left multiplication on the group coordinate
};

/// Box complex B(H) on V x G: vertex (v, g) at index g * |V| + v with label
/// "(vlabel,g)". A face is a family of pairwise-disjoint parts A_g such that
/// every transversal is a hyperedge. Parts are indexed by group elements in
/// Cayley-table order. Requires uniformity = |G|.
BoxComplex box_complex(const UniformHypergraph& h, const FiniteGroup& group,
                       BoxFaces faces = BoxFaces::kIncludeEmptyParts);

/// Complex Y on G x G of subsets containing no graph of a permutation of G.
/// Vertex (g, h) at index g * |G| + h, labelled "(g,h)".
SimplicialComplex permutation_avoidance_complex(const FiniteGroup& group);

/// Y' = Y_b u Delta_{p,p}, where Y_b avoids the graph of every function
/// z: Z/p -> Z/p with sum z(i) = b. Requires `group` to be Z/p with p prime.
SimplicialComplex permutation_avoidance_complex(const FiniteGroup& group, Element target_sum);

/// Sum of all elements of Z/p (1 for p = 2, otherwise 0).
Element sum_of_residues(std::size_t p);

/// The vertex map B(H) -> Y, (v, g) -> (g, g c(v)). It is simplicial exactly
/// when the coloring has no zero-sum hyperedge.
std::vector<std::size_t> box_to_avoidance_vertex_map(const UniformHypergraph& h,
                                                     const FiniteGroup& group,
                                                     std::span<const Element> coloring);

/// Vertices are nonempty faces of K (by dimension, then lexicographic), facets
/// are maximal chains.
SimplicialComplex barycentric_subdivision(const SimplicialComplex& k);

/// True iff no non-identity element maps a nonempty face onto itself (which
/// is exactly when the action on the geometric realization is free).
bool action_is_free(const ComplexAction& action);

bool is_equivariant(const SimplicialMap& map, const ComplexAction& source_action,
                    const ComplexAction& target_action);

/// True iff every facet of the target is the image of some source face.
bool is_surjective_onto_facets(const SimplicialMap& map);

/// Enumerates the Z/n-equivariant maps Delta_{n,2n-1} -> Delta_{n-1} for the
/// row action and translation on Z/n. Each map is fixed by the images
/// a_j = f(0, j) of the orbit representatives; f(i, j) = a_j + i. Maps come
/// out in lexicographic order of (a_0, ..., a_{2n-2}). Single consumer.
class EquivariantMapEnumerator {
public:
    explicit EquivariantMapEnumerator(std::size_t n);

    std::optional<SimplicialMap> next();
    std::size_t total() const;

    const ComplexAction& source_action() const { return source_action_; }
    const ComplexAction& target_action() const { return target_action_; }
    /// Representative images of the map most recently returned.
    const std::vector<Element>& representatives() const { return reps_; }

private:
    std::size_t n_;
    ComplexAction source_action_;
    ComplexAction target_action_;
    std::vector<Element> reps_;
    bool started_ = false;
    bool done_ = false;
};

}  // namespace zsr
