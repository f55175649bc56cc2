#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace zsr {

/// Index of an element relative to an owning FiniteGroup (0..order-1).
using Element = std::uint32_t;

/// A finite group stored as its full Cayley table. Element indices are
/// 0..n-1; table[g][h] = g*h. Immutable once constructed.
class FiniteGroup {
public:
    /// Z/n with (g + h) mod n.
    static FiniteGroup cyclic(std::size_t n);

    /// Validates Latin-square structure, identity, inverses and all n^3
    /// associativity triples. Throws GroupAxiomError naming the violation.
    static FiniteGroup from_cayley_table(const std::vector<std::vector<int>>& table,
                                         std::string name = {});

    /// Symmetric group on k symbols, elements in lexicographic order of the
    /// permutation words (so the identity is element 0).
    static FiniteGroup symmetric(std::size_t k);

    /// G x H with (g, h) at index g * |H| + h.
    static FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

    std::size_t order() const { return order_; }
    Element identity() const { return identity_; }
    Element mul(Element a, Element b) const { return table_[a * order_ + b]; }
    Element inverse(Element a) const { return inverse_[a]; }
    bool contains(Element a) const { return a < order_; }
    bool is_abelian() const { return abelian_; }
    const std::string& name() const { return name_; }

    /// Left-to-right product of a sequence; identity for an empty sequence.
    Element product(std::span<const Element> items) const;

    /// Order of the element (least k >= 1 with a^k = 1).
    std::size_t element_order(Element a) const;

    bool is_cyclic() const;

    std::vector<std::vector<int>> table() const;

    friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
        return a.order_ == b.order_ && a.table_ == b.table_;
    }

private:
    FiniteGroup() = default;
    void finish();

    std::size_t order_ = 0;
    std::vector<Element> table_;
    std::vector<Element> inverse_;
    Element identity_ = 0;
    bool abelian_ = true;
    std::string name_;
};

/// Given two orderings g, h of the same m-element subset of G, returns a
/// permutation pi of 0..m-1 with x_{pi(0)} * ... * x_{pi(m-1)} = 1, where
/// x_i = g_i^{-1} h_i.
///
/// The construction chases the chain i -> j with g_j = h_i. Each such chain
/// closes into a cycle whose x-product telescopes to the identity, and the
/// permutation is the concatenation of those cycles in order of their
/// smallest index.
std::vector<std::size_t> product_ordering(const FiniteGroup& group,
                                          std::span<const Element> g_list,
                                          std::span<const Element> h_list);

bool is_prime(std::size_t n);

}  // namespace zsr
