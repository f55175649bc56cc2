#pragma once

// Brute-force references for the tests. Everything here enumerates the
// definition directly and is only meant for tiny inputs.

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "zsr/complexes.hpp"
#include "zsr/groups.hpp"

namespace oracle {

using zsr::Element;

// S3 as composition of permutations of {0,1,2}, elements in lexicographic
// order of their one-line words; (a*b)(x) = a(b(x)).
inline std::vector<std::vector<int>> s3_table() {
    std::vector<std::vector<int>> perms{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            std::vector<int> c(3);
            for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
            t[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
        }
    return t;
}

inline std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t len, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    for (std::uint32_t mask = 0; mask < (1U << len); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < len; ++i)
            if (mask >> i & 1U) s.push_back(i);
        out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool some_ordering_is_identity(const zsr::FiniteGroup& g, std::vector<Element> items) {
    std::sort(items.begin(), items.end());
    do {
        if (g.product(items) == g.identity()) return true;
    } while (std::next_permutation(items.begin(), items.end()));
    return false;
}

// Lexicographically least |G|-subset of positions admitting an identity ordering.
inline std::optional<std::vector<std::size_t>> least_zero_sum_subset(const zsr::FiniteGroup& g,
                                                                     const std::vector<Element>& seq,
                                                                     bool increasing_only) {
    for (const auto& s : subsets_of_size(seq.size(), g.order())) {
        std::vector<Element> items;
        for (auto i : s) items.push_back(seq[i]);
        const bool ok = increasing_only ? g.product(items) == g.identity() : some_ordering_is_identity(g, items);
        if (ok) return s;
    }
    return std::nullopt;
}

// Least c (lexicographic) with c and a + c both permutations of Z/p.
inline std::optional<std::vector<Element>> least_hall_shift(std::size_t p, const std::vector<Element>& a) {
    std::vector<Element> c(p);
    std::iota(c.begin(), c.end(), 0);
    do {
        std::vector<bool> seen(p);
        bool ok = true;
        for (std::size_t i = 0; i < p && ok; ++i) {
            auto b = (a[i] + c[i]) % p;
            if (seen[b]) ok = false;
            seen[b] = true;
        }
        if (ok) return c;
    } while (std::next_permutation(c.begin(), c.end()));
    return std::nullopt;
}

// Faces of the complex Y on G x G by subset enumeration (|G| <= 3).
inline std::set<zsr::Face> avoidance_facets(const zsr::FiniteGroup& g) {
    const std::size_t n = g.order();
    std::vector<std::vector<Element>> perms;
    std::vector<Element> p(n);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::vector<std::uint32_t> faces;
    for (std::uint32_t mask = 0; mask < (1U << (n * n)); ++mask) {
        bool contains_graph = false;
        for (const auto& q : perms) {
            bool all = true;
            for (std::size_t i = 0; i < n && all; ++i) all = mask >> (i * n + q[i]) & 1U;
            if (all) {
                contains_graph = true;
                break;
            }
        }
        if (!contains_graph) faces.push_back(mask);
    }
    std::set<zsr::Face> out;
    for (auto f : faces) {
        bool maximal = std::none_of(faces.begin(), faces.end(), [&](std::uint32_t g2) { return g2 != f && (f & g2) == f; });
        if (!maximal) continue;
        zsr::Face face;
        for (std::size_t c = 0; c < n * n; ++c)
            if (f >> c & 1U) face.push_back(c);
        out.insert(face);
    }
    return out;
}

// Every subset of every facet, including the empty face.
inline std::set<zsr::Face> all_faces(const zsr::SimplicialComplex& k) {
    std::set<zsr::Face> out;
    for (const auto& f : k.facets())
        for (std::uint32_t mask = 0; mask < (1U << f.size()); ++mask) {
            zsr::Face s;
            for (std::size_t i = 0; i < f.size(); ++i)
                if (mask >> i & 1U) s.push_back(f[i]);
            out.insert(s);
        }
    return out;
}

// Least number of colors with no monochromatic edge, by trying every coloring.
inline std::size_t brute_chromatic(std::size_t vertices, const std::vector<std::vector<std::size_t>>& edges) {
    for (std::size_t k = 1;; ++k) {
        std::vector<std::size_t> c(vertices, 0);
        while (true) {
            bool proper = std::none_of(edges.begin(), edges.end(), [&](const auto& e) {
                return std::all_of(e.begin(), e.end(), [&](std::size_t v) { return c[v] == c[e[0]]; });
            });
            if (proper) return k;
            std::size_t i = 0;
            while (i < vertices && ++c[i] == k) c[i++] = 0;
            if (i == vertices) break;
        }
    }
}

}  // namespace oracle
