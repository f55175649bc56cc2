#include "zsr/zerosum.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "zsr/error.hpp"

namespace zsr {
namespace {

using Bits = std::uint64_t;

constexpr std::size_t kMaxBitsetOrder = 64;

void require_bitset_order(const FiniteGroup& group) {
    if (group.order() > kMaxBitsetOrder)
        throw InputError("group order " + std::to_string(group.order()) + " exceeds " +
                         std::to_string(kMaxBitsetOrder));
}

void require_members(const FiniteGroup& group, std::span<const Element> seq) {
    for (std::size_t i = 0; i < seq.size(); ++i)
        if (!group.contains(seq[i]))
            throw InputError("sequence item " + std::to_string(i + 1) + " = " +
                             std::to_string(seq[i]) + " is not an element of " + group.name());
}

bool has(Bits s, Element x) { return (s >> x) & 1U; }

// {q * a : q in s}
Bits right_mul(const FiniteGroup& g, Bits s, Element a) {
    Bits out = 0;
    for (Element q = 0; q < g.order(); ++q)
        if (has(s, q)) out |= Bits{1} << g.mul(q, a);
    return out;
}

// Lexicographically least `size`-subset with increasing-order product 1.
//
// finish[pos][k] holds every prefix product q such that choosing k more
// positions from pos.. can bring the running product to 1.
std::optional<ZeroSumWitness> increasing_search(const FiniteGroup& g, std::span<const Element> seq,
                                                std::size_t size) {
    const std::size_t len = seq.size();
    if (size > len) return std::nullopt;
    std::vector<Bits> finish((len + 1) * (size + 1), 0);
    auto at = [&](std::size_t pos, std::size_t k) -> Bits& { return finish[pos * (size + 1) + k]; };
    at(len, 0) = Bits{1} << g.identity();
    for (std::size_t pos = len; pos-- > 0;) {
        at(pos, 0) = Bits{1} << g.identity();
        Element inv = g.inverse(seq[pos]);
        for (std::size_t k = 1; k <= size; ++k)
            at(pos, k) = at(pos + 1, k) | right_mul(g, at(pos + 1, k - 1), inv);
    }
    if (!has(at(0, size), g.identity())) return std::nullopt;

    ZeroSumWitness w;
    Element prefix = g.identity();
    std::size_t need = size;
    for (std::size_t pos = 0; pos < len && need > 0; ++pos) {
        Element next = g.mul(prefix, seq[pos]);
        if (has(at(pos + 1, need - 1), next)) {
            w.indices.push_back(pos);
            prefix = next;
            --need;
        }
    }
    w.ordering = w.indices;
    w.increasing_order_works = true;
    return w;
}

// Advances c to the next k-subset of 0..len-1 in lexicographic order.
bool next_combination(std::vector<std::size_t>& c, std::size_t len) {
    const std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;) {
        if (c[i] < len - k + i) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

void check_threshold(std::size_t n, std::size_t len, const std::optional<ZeroSumWitness>& w,
                     const char* what) {
    if (!w && len + 1 >= 2 * n)
        throw TheoremViolation(std::string(what) + ": no witness in a sequence of length " +
                               std::to_string(len) + " >= 2n-1 for n = " + std::to_string(n));
}

// Lexicographically least x with distinct entries, distinct a_i + x_i, and
// every a_i + x_i inside `targets`.
class ShiftSearch {
public:
    ShiftSearch(std::size_t p, std::span<const Element> a, Bits targets)
        : p_(p), a_(a), targets_(targets), x_(a.size()) {}

    std::optional<std::vector<Element>> run() {
        if (dfs(0, 0, 0)) return x_;
        return std::nullopt;
    }

private:
    bool dfs(std::size_t i, Bits used, Bits hit) {
        if (i == a_.size()) return true;
        for (Element x = 0; x < p_; ++x) {
            if (has(used, x)) continue;
            Element s = static_cast<Element>((a_[i] + x) % p_);
            if (!has(targets_, s) || has(hit, s)) continue;
            x_[i] = x;
            if (dfs(i + 1, used | (Bits{1} << x), hit | (Bits{1} << s))) return true;
        }
        return false;
    }

    std::size_t p_;
    std::span<const Element> a_;
    Bits targets_;
    std::vector<Element> x_;
};

void require_residues(std::size_t p, std::span<const Element> v, const char* what) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] >= p)
            throw InputError(std::string(what) + " item " + std::to_string(i + 1) + " = " +
                             std::to_string(v[i]) + " is not in Z/" + std::to_string(p));
}

Bits low_bits(std::size_t count) {
    return count >= 64 ? ~Bits{0} : (Bits{1} << count) - 1;
}

}  // namespace

std::optional<ZeroSumWitness> egz_find(std::size_t n, std::span<const Element> seq) {
    FiniteGroup g = FiniteGroup::cyclic(n);
    require_bitset_order(g);
    require_members(g, seq);
    auto w = increasing_search(g, seq, n);
    check_threshold(n, seq.size(), w, "egz_find");
    return w;
}

std::optional<std::vector<std::size_t>> identity_ordering(const FiniteGroup& g,
                                                          std::span<const Element> items) {
    require_bitset_order(g);
    const std::size_t k = items.size();
    if (k > 20) throw InputError("identity_ordering supports at most 20 items");
    if (g.is_abelian()) {
        if (g.product(items) != g.identity()) return std::nullopt;
        std::vector<std::size_t> id(k);
        std::iota(id.begin(), id.end(), 0);
        return id;
    }
    // good[mask]: running products q, with `mask` already used, that the
    // unused items can complete to 1.
    const std::size_t full = (std::size_t{1} << k) - 1;
    std::vector<Bits> good(full + 1, 0);
    good[full] = Bits{1} << g.identity();
    for (std::size_t mask = full; mask-- > 0;) {
        Bits acc = 0;
        for (std::size_t j = 0; j < k; ++j)
            if (!(mask >> j & 1U)) acc |= right_mul(g, good[mask | (std::size_t{1} << j)], g.inverse(items[j]));
        good[mask] = acc;
    }
    if (!has(good[0], g.identity())) return std::nullopt;

    std::vector<std::size_t> order;
    std::size_t mask = 0;
    Element prefix = g.identity();
    while (mask != full) {
        for (std::size_t j = 0; j < k; ++j) {
            if (mask >> j & 1U) continue;
            Element next = g.mul(prefix, items[j]);
            if (has(good[mask | (std::size_t{1} << j)], next)) {
                order.push_back(j);
                mask |= std::size_t{1} << j;
                prefix = next;
                break;
            }
        }
    }
    return order;
}

std::optional<ZeroSumWitness> olson_find(const FiniteGroup& g, std::span<const Element> seq) {
    require_bitset_order(g);
    require_members(g, seq);
    const std::size_t n = g.order();
    std::optional<ZeroSumWitness> result;
    if (g.is_abelian()) {
        result = increasing_search(g, seq, n);
    } else if (n <= seq.size()) {
        std::map<std::vector<Element>, bool> feasible_multiset;
        std::vector<std::size_t> subset(n);
        std::iota(subset.begin(), subset.end(), 0);
        std::vector<Element> items(n);
        do {
            for (std::size_t i = 0; i < n; ++i) items[i] = seq[subset[i]];
            std::vector<Element> key = items;
            std::sort(key.begin(), key.end());
            auto it = feasible_multiset.find(key);
            if (it != feasible_multiset.end() && !it->second) continue;
            auto order = identity_ordering(g, items);
            feasible_multiset[key] = order.has_value();
            if (!order) continue;
            ZeroSumWitness w;
            w.indices = subset;
            for (std::size_t j : *order) w.ordering.push_back(subset[j]);
            w.increasing_order_works = g.product(items) == g.identity();
            result = std::move(w);
            break;
        } while (next_combination(subset, seq.size()));
    }
    check_threshold(n, seq.size(), result, "olson_find");
    return result;
}

std::optional<ZeroSumWitness> olson_find_increasing(const FiniteGroup& g,
                                                    std::span<const Element> seq) {
    require_bitset_order(g);
    require_members(g, seq);
    return increasing_search(g, seq, g.order());
}

bool verify_zero_sum(const FiniteGroup& g, std::span<const Element> seq,
                     const ZeroSumWitness& w, std::size_t size) {
    if (w.indices.size() != size || w.ordering.size() != size) return false;
    for (std::size_t i = 0; i < size; ++i) {
        if (w.indices[i] >= seq.size()) return false;
        if (i > 0 && w.indices[i] <= w.indices[i - 1]) return false;
    }
    std::vector<std::size_t> a = w.indices, b = w.ordering;
    std::sort(b.begin(), b.end());
    if (a != b) return false;
    Element acc = g.identity();
    for (std::size_t idx : w.ordering) acc = g.mul(acc, seq[idx]);
    return acc == g.identity();
}

std::optional<HallDecomposition> hall_decompose(std::size_t p, std::span<const Element> a) {
    if (p == 0 || p > kMaxBitsetOrder) throw InputError("hall_decompose: modulus out of range");
    if (a.size() != p)
        throw InputError("hall_decompose: sequence length " + std::to_string(a.size()) +
                         " differs from p = " + std::to_string(p));
    require_residues(p, a, "sequence");
    std::size_t sum = 0;
    for (Element x : a) sum += x;
    const bool zero_sum = sum % p == 0;

    auto c = ShiftSearch(p, a, low_bits(p)).run();
    if (c.has_value() != zero_sum)
        throw TheoremViolation("hall_decompose: decomposability disagrees with the sum condition");
    if (!c) return std::nullopt;
    HallDecomposition d;
    d.c = *c;
    d.b.resize(p);
    for (std::size_t i = 0; i < p; ++i) d.b[i] = static_cast<Element>((a[i] + d.c[i]) % p);
    return d;
}

HallDecomposition hall_decompose_via_transversal(std::size_t p, std::span<const Element> a) {
    if (a.size() != p)
        throw InputError("hall_decompose_via_transversal: sequence length must equal p");
    require_residues(p, a, "sequence");
    std::size_t sum = 0;
    for (Element x : a) sum += x;
    if (sum % p != 0) throw InputError("hall_decompose_via_transversal: sequence is not zero-sum");

    std::vector<Element> partial = partial_transversal(p, a.first(p - 1));
    Bits used = 0;
    for (Element x : partial) used |= Bits{1} << x;
    Element last = 0;
    while (has(used, last)) ++last;

    HallDecomposition d;
    d.c = partial;
    d.c.push_back(last);
    d.b.resize(p);
    for (std::size_t i = 0; i < p; ++i) d.b[i] = static_cast<Element>((a[i] + d.c[i]) % p);
    // The sums over {0..p-2} force a_p + c_p = p - 1.
    if (d.b[p - 1] != p - 1)
        throw TheoremViolation("hall_decompose_via_transversal: forced coordinate mismatch");
    return d;
}

bool verify_hall(std::size_t p, std::span<const Element> a, const HallDecomposition& d) {
    if (a.size() != p || d.b.size() != p || d.c.size() != p) return false;
    std::vector<bool> seen_b(p), seen_c(p);
    for (std::size_t i = 0; i < p; ++i) {
        if (d.b[i] >= p || d.c[i] >= p || seen_b[d.b[i]] || seen_c[d.c[i]]) return false;
        seen_b[d.b[i]] = seen_c[d.c[i]] = true;
        if ((d.b[i] + p - d.c[i]) % p != a[i] % p) return false;
    }
    return true;
}

std::vector<Element> partial_transversal(std::size_t p, std::span<const Element> a) {
    if (!is_prime(p)) throw InputError("partial_transversal: p = " + std::to_string(p) + " is not prime");
    if (p > kMaxBitsetOrder) throw InputError("partial_transversal: modulus too large");
    if (a.size() != p - 1)
        throw InputError("partial_transversal: expected " + std::to_string(p - 1) + " entries");
    require_residues(p, a, "sequence");
    auto b = ShiftSearch(p, a, low_bits(p - 1)).run();
    if (!b) throw TheoremViolation("partial_transversal: no transversal found for prime p");
    return *b;
}

bool verify_partial_transversal(std::size_t p, std::span<const Element> a,
                                std::span<const Element> b) {
    if (p == 0 || a.size() != p - 1 || b.size() != p - 1) return false;
    std::vector<bool> seen_b(p), seen_sum(p);
    for (std::size_t i = 0; i + 1 < p; ++i) {
        if (b[i] >= p || seen_b[b[i]]) return false;
        seen_b[b[i]] = true;
        std::size_t s = (a[i] + b[i]) % p;
        if (s > p - 2 || seen_sum[s]) return false;
        seen_sum[s] = true;
    }
    return true;
}

namespace {

class ConstrainedSearch {
public:
    ConstrainedSearch(std::size_t p, std::span<const Element> seq, std::span<const Element> d,
                      DifferenceIndexing indexing)
        : p_(p), seq_(seq), d_(d), indexing_(indexing), b_(p) {}

    std::optional<ConstrainedWitness> run() {
        indices_.resize(p_);
        std::iota(indices_.begin(), indices_.end(), 0);
        do {
            if (dfs(0, 0, 0)) return ConstrainedWitness{indices_, b_};
        } while (next_combination(indices_, seq_.size()));
        return std::nullopt;
    }

private:
    // Prescribed difference between b_{j} and b_{j+1}, or nullopt when free.
    std::optional<Element> difference(std::size_t j) const {
        std::size_t i = indices_[j];
        // 1-based position i + 1 odd  <=>  i even
        if (i % 2 != 0 || indices_[j + 1] != i + 1) return std::nullopt;
        std::size_t k = indexing_ == DifferenceIndexing::kBySubsequencePosition ? j : i / 2;
        return d_[k];
    }

    bool dfs(std::size_t j, Bits used, Bits hit) {
        if (j == p_) return true;
        Element lo = 0, hi = static_cast<Element>(p_);
        if (j > 0) {
            if (auto diff = difference(j - 1)) {
                lo = static_cast<Element>((b_[j - 1] + *diff) % p_);
                hi = lo + 1;
            }
        }
        for (Element x = lo; x < hi; ++x) {
            if (has(used, x)) continue;
            Element s = static_cast<Element>((seq_[indices_[j]] + x) % p_);
            if (has(hit, s)) continue;
            b_[j] = x;
            if (dfs(j + 1, used | (Bits{1} << x), hit | (Bits{1} << s))) return true;
        }
        return false;
    }

    std::size_t p_;
    std::span<const Element> seq_;
    std::span<const Element> d_;
    DifferenceIndexing indexing_;
    std::vector<std::size_t> indices_;
    std::vector<Element> b_;
};

void check_constrained_input(std::size_t p, std::span<const Element> seq,
                             std::span<const Element> d) {
    if (!is_prime(p)) throw InputError("constrained_egz: p = " + std::to_string(p) + " is not prime");
    if (p > kMaxBitsetOrder) throw InputError("constrained_egz: modulus too large");
    if (seq.size() != 2 * p - 1)
        throw InputError("constrained_egz: sequence length " + std::to_string(seq.size()) +
                         " differs from 2p-1 = " + std::to_string(2 * p - 1));
    if (d.size() != p - 1)
        throw InputError("constrained_egz: expected " + std::to_string(p - 1) + " differences");
    require_residues(p, seq, "sequence");
    require_residues(p, d, "difference");
    for (std::size_t j = 0; j < d.size(); ++j)
        if (d[j] == 0)
            throw InputError("constrained_egz: difference d_" + std::to_string(j + 1) + " is zero");
}

}  // namespace

ConstrainedWitness constrained_egz(std::size_t p, std::span<const Element> seq,
                                   std::span<const Element> d, DifferenceIndexing indexing) {
    check_constrained_input(p, seq, d);
    auto w = ConstrainedSearch(p, seq, d, indexing).run();
    if (!w) throw TheoremViolation("constrained_egz: no constrained witness found");
    return *w;
}

bool verify_constrained(std::size_t p, std::span<const Element> seq, std::span<const Element> d,
                        const ConstrainedWitness& w, DifferenceIndexing indexing) {
    if (w.indices.size() != p || w.b.size() != p || d.size() + 1 != p) return false;
    std::vector<bool> seen_b(p), seen_sum(p);
    for (std::size_t j = 0; j < p; ++j) {
        if (w.indices[j] >= seq.size() || (j > 0 && w.indices[j] <= w.indices[j - 1])) return false;
        if (w.b[j] >= p || seen_b[w.b[j]]) return false;
        seen_b[w.b[j]] = true;
        std::size_t s = (seq[w.indices[j]] + w.b[j]) % p;
        if (seen_sum[s]) return false;
        seen_sum[s] = true;
    }
    for (std::size_t j = 0; j + 1 < p; ++j) {
        std::size_t one_based = w.indices[j] + 1;
        if (one_based % 2 == 1 && w.indices[j + 1] == w.indices[j] + 1) {
            std::size_t k = indexing == DifferenceIndexing::kBySubsequencePosition ? j : (one_based - 1) / 2;
            if (w.b[j + 1] != (w.b[j] + d[k]) % p) return false;
        }
    }
    return true;
}

std::optional<HyperedgeWitness> zero_sum_hyperedge(const UniformHypergraph& h,
                                                   std::span<const Element> coloring,
                                                   const FiniteGroup& g) {
    if (h.uniformity() != g.order())
        throw InputError("zero_sum_hyperedge: hypergraph is " + std::to_string(h.uniformity()) +
                         "-uniform but the group has order " + std::to_string(g.order()));
    if (coloring.size() != h.vertex_count())
        throw InputError("zero_sum_hyperedge: coloring has " + std::to_string(coloring.size()) +
                         " entries for " + std::to_string(h.vertex_count()) + " vertices");
    require_members(g, coloring);
    std::vector<Element> colors(h.uniformity());
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
        const auto& edge = h.edges()[e];
        for (std::size_t i = 0; i < edge.size(); ++i) colors[i] = coloring[edge[i]];
        auto order = identity_ordering(g, colors);
        if (!order) continue;
        HyperedgeWitness w;
        w.edge = e;
        for (std::size_t j : *order) w.vertices.push_back(edge[j]);
        return w;
    }
    return std::nullopt;
}

}  // namespace zsr
