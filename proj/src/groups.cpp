#include "zsr/groups.hpp"

#include <algorithm>
#include <numeric>

#include "zsr/error.hpp"

namespace zsr {

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
    if (n == 0) throw InputError("invalid group order 0");
    FiniteGroup g;
    g.order_ = n;
    g.table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            g.table_[a * n + b] = static_cast<Element>((a + b) % n);
    g.name_ = "Z/" + std::to_string(n);
    g.finish();
    return g;
}

FiniteGroup FiniteGroup::from_cayley_table(const std::vector<std::vector<int>>& table,
                                           std::string name) {
    const std::size_t n = table.size();
    if (n == 0) throw InputError("invalid group order 0");
    FiniteGroup g;
    g.order_ = n;
    g.table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
        if (table[a].size() != n)
            throw InputError("Cayley table row " + std::to_string(a) + " has length " +
                             std::to_string(table[a].size()) + ", expected " + std::to_string(n));
        for (std::size_t b = 0; b < n; ++b) {
            int v = table[a][b];
            if (v < 0 || static_cast<std::size_t>(v) >= n)
                throw InputError("Cayley table entry [" + std::to_string(a) + "][" +
                                 std::to_string(b) + "] = " + std::to_string(v) + " out of range");
            g.table_[a * n + b] = static_cast<Element>(v);
        }
    }

    // Latin square
    for (std::size_t a = 0; a < n; ++a) {
        std::vector<bool> row(n), col(n);
        for (std::size_t b = 0; b < n; ++b) {
            Element r = g.table_[a * n + b];
            Element c = g.table_[b * n + a];
            if (row[r])
                throw GroupAxiomError("not a Latin square: row " + std::to_string(a) +
                                          " repeats element " + std::to_string(r),
                                      static_cast<int>(a));
            if (col[c])
                throw GroupAxiomError("not a Latin square: column " + std::to_string(a) +
                                          " repeats element " + std::to_string(c),
                                      -1, static_cast<int>(a));
            row[r] = col[c] = true;
        }
    }

    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                Element lhs = g.table_[g.table_[a * n + b] * n + c];
                Element rhs = g.table_[a * n + g.table_[b * n + c]];
                if (lhs != rhs)
                    throw GroupAxiomError("associativity fails for (" + std::to_string(a) + ", " +
                                              std::to_string(b) + ", " + std::to_string(c) + ")",
                                          static_cast<int>(a), static_cast<int>(b),
                                          static_cast<int>(c));
            }

    // In an associative Latin square the idempotent is unique; check it is two-sided.
    std::size_t e = n;
    for (std::size_t a = 0; a < n && e == n; ++a)
        if (g.table_[a * n + a] == a) e = a;
    if (e == n) throw GroupAxiomError("missing identity element");
    for (std::size_t a = 0; a < n; ++a)
        if (g.table_[e * n + a] != a || g.table_[a * n + e] != a)
            throw GroupAxiomError("missing identity element: " + std::to_string(e) +
                                      " is not two-sided for " + std::to_string(a),
                                  static_cast<int>(e), static_cast<int>(a));

    g.name_ = std::move(name);
    g.finish();
    return g;
}

FiniteGroup FiniteGroup::symmetric(std::size_t k) {
    if (k == 0) throw InputError("symmetric group needs k >= 1");
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> p(k);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));

    const std::size_t n = perms.size();
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    std::vector<std::size_t> composed(k);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            // (a*b)(x) = a(b(x))
            for (std::size_t x = 0; x < k; ++x) composed[x] = perms[a][perms[b][x]];
            auto it = std::lower_bound(perms.begin(), perms.end(), composed);
            table[a][b] = static_cast<int>(it - perms.begin());
        }
    return from_cayley_table(table, "S" + std::to_string(k));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& g, const FiniteGroup& h) {
    const std::size_t gn = g.order(), hn = h.order(), n = gn * hn;
    FiniteGroup out;
    out.order_ = n;
    out.table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Element x = g.mul(static_cast<Element>(a / hn), static_cast<Element>(b / hn));
            Element y = h.mul(static_cast<Element>(a % hn), static_cast<Element>(b % hn));
            out.table_[a * n + b] = static_cast<Element>(x * hn + y);
        }
    out.name_ = g.name() + "x" + h.name();
    out.finish();
    return out;
}

void FiniteGroup::finish() {
    const std::size_t n = order_;
    for (std::size_t a = 0; a < n; ++a)
        if (table_[a * n + a] == a) identity_ = static_cast<Element>(a);
    inverse_.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (table_[a * n + b] == identity_) inverse_[a] = static_cast<Element>(b);
    abelian_ = true;
    for (std::size_t a = 0; a < n && abelian_; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (table_[a * n + b] != table_[b * n + a]) {
                abelian_ = false;
                break;
            }
}

Element FiniteGroup::product(std::span<const Element> items) const {
    Element acc = identity_;
    for (Element x : items) acc = mul(acc, x);
    return acc;
}

std::size_t FiniteGroup::element_order(Element a) const {
    std::size_t k = 1;
    for (Element x = a; x != identity_; x = mul(x, a)) ++k;
    return k;
}

bool FiniteGroup::is_cyclic() const {
    for (Element a = 0; a < order_; ++a)
        if (element_order(a) == order_) return true;
    return false;
}

std::vector<std::vector<int>> FiniteGroup::table() const {
    std::vector<std::vector<int>> out(order_, std::vector<int>(order_));
    for (std::size_t a = 0; a < order_; ++a)
        for (std::size_t b = 0; b < order_; ++b) out[a][b] = static_cast<int>(table_[a * order_ + b]);
    return out;
}

std::vector<std::size_t> product_ordering(const FiniteGroup& group,
                                          std::span<const Element> g_list,
                                          std::span<const Element> h_list) {
    const std::size_t m = g_list.size();
    if (h_list.size() != m)
        throw InputError("product_ordering: orderings have different lengths");
    std::vector<std::size_t> position_in_g(group.order(), m);
    for (std::size_t i = 0; i < m; ++i) {
        if (!group.contains(g_list[i]) || !group.contains(h_list[i]))
            throw InputError("product_ordering: element out of range");
        if (position_in_g[g_list[i]] != m)
            throw InputError("product_ordering: repeated element in first ordering");
        position_in_g[g_list[i]] = i;
    }
    std::vector<bool> seen_h(group.order());
    for (Element h : h_list) {
        if (position_in_g[h] == m)
            throw InputError("product_ordering: orderings are not of the same set");
        if (seen_h[h]) throw InputError("product_ordering: repeated element in second ordering");
        seen_h[h] = true;
    }

    std::vector<std::size_t> pi;
    pi.reserve(m);
    std::vector<bool> done(m);
    for (std::size_t start = 0; start < m; ++start) {
        if (done[start]) continue;
        // x_start x_j ... telescopes to g_start^{-1} h_last; the chain closes
        // when h_last = g_start.
        std::size_t cur = start;
        while (true) {
            pi.push_back(cur);
            done[cur] = true;
            if (h_list[cur] == g_list[start]) break;
            cur = position_in_g[h_list[cur]];
        }
    }
    return pi;
}

bool is_prime(std::size_t n) {
    if (n < 2) return false;
    for (std::size_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace zsr
