#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace zsr {

/// Subset of a ground set [m] (m <= 64), bit i standing for element i + 1.
using SetMask = std::uint64_t;

/// A family of distinct subsets of the ground set {1, ..., m}.
class SetFamily {
public:
    /// Throws InputError on a member outside [m] or a duplicate member.
    SetFamily(std::size_t ground_size, std::vector<SetMask> members);

    /// Builds from 1-based element lists.
    static SetFamily from_lists(std::size_t ground_size,
                                const std::vector<std::vector<int>>& sets);

    /// All k-element subsets of [m], lexicographic in their sorted element lists.
    static SetFamily k_subsets(std::size_t m, std::size_t k);

    std::size_t ground_size() const { return ground_size_; }
    const std::vector<SetMask>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }

    /// 1-based sorted element list of member i.
    std::vector<int> member_elements(std::size_t i) const;

    /// Every superset within [m] of some member. Not applied implicitly by
    /// any operation.
    SetFamily upward_closure() const;

private:
    std::size_t ground_size_;
    std::vector<SetMask> members_;
};

/// An n-uniform hypergraph on vertices 0..vertex_count-1. Edges are stored
/// with sorted vertex lists, in the order given.
class UniformHypergraph {
public:
    /// Throws InputError if an edge has the wrong size, a repeated vertex, or a
    /// vertex out of range.
    UniformHypergraph(std::size_t vertex_count, std::size_t uniformity,
                      std::vector<std::vector<std::size_t>> edges,
                      std::vector<std::string> labels = {});

    /// All n-subsets of vertex_count vertices, lexicographically.
    static UniformHypergraph complete(std::size_t vertex_count, std::size_t uniformity);

    std::size_t vertex_count() const { return vertex_count_; }
    std::size_t uniformity() const { return uniformity_; }
    const std::vector<std::vector<std::size_t>>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    /// Label of vertex v; defaults to its index.
    std::string label(std::size_t v) const;
    const std::vector<std::string>& labels() const { return labels_; }

    bool has_edge(const std::vector<std::size_t>& sorted_vertices) const;

private:
    std::size_t vertex_count_;
    std::size_t uniformity_;
    std::vector<std::vector<std::size_t>> edges_;
    std::vector<std::string> labels_;
    std::vector<std::vector<std::size_t>> sorted_edges_;
};

}  // namespace zsr
