#include "zsr/smith.hpp"

#include <algorithm>
#include <optional>

namespace zsr {
namespace {

struct Overflow {};

// 64-bit arithmetic that throws Overflow instead of wrapping
struct Checked {
    using T = std::int64_t;
    static T mul(T a, T b) {
        T r;
        if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
        return r;
    }
    static T sub(T a, T b) {
        T r;
        if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
        return r;
    }
    static T add(T a, T b) {
        T r;
        if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
        return r;
    }
    static T abs(T a) {
        if (a == INT64_MIN) throw Overflow{};
        return a < 0 ? -a : a;
    }
    static T quot(T a, T b) { return a / b; }
    static bool zero(T a) { return a == 0; }
    static mpz_class big(T a) { return mpz_class(static_cast<long>(a)); }
};

struct Big {
    using T = mpz_class;
    static T mul(const T& a, const T& b) { return a * b; }
    static T sub(const T& a, const T& b) { return a - b; }
    static T add(const T& a, const T& b) { return a + b; }
    static T abs(const T& a) { return ::abs(a); }
    static T quot(const T& a, const T& b) {
        T q;
        mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q;
    }
    static bool zero(const T& a) { return sgn(a) == 0; }
    static mpz_class big(const T& a) { return a; }
};

template <class A>
std::vector<mpz_class> eliminate(std::vector<std::vector<typename A::T>> a) {
    using T = typename A::T;
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::vector<mpz_class> diag;

    auto row_op = [&](std::size_t dst, std::size_t src, const T& q, std::size_t from) {
        for (std::size_t c = from; c < cols; ++c)
            if (!A::zero(a[src][c])) a[dst][c] = A::sub(a[dst][c], A::mul(q, a[src][c]));
    };
    auto col_op = [&](std::size_t dst, std::size_t src, const T& q, std::size_t from) {
        for (std::size_t r = from; r < rows; ++r)
            if (!A::zero(a[r][src])) a[r][dst] = A::sub(a[r][dst], A::mul(q, a[r][src]));
    };

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        // least nonzero |entry| in the trailing block
        std::optional<std::pair<std::size_t, std::size_t>> best;
        T best_abs{};
        for (std::size_t r = t; r < rows; ++r)
            for (std::size_t c = t; c < cols; ++c) {
                if (A::zero(a[r][c])) continue;
                T v = A::abs(a[r][c]);
                if (!best || v < best_abs) {
                    best = {r, c};
                    best_abs = v;
                    if (v == T(1)) goto found;
                }
            }
        if (!best) break;
    found:
        std::swap(a[t], a[best->first]);
        for (std::size_t r = 0; r < rows; ++r) std::swap(a[r][t], a[r][best->second]);

        while (true) {
            bool dirty = false;
            for (std::size_t r = t + 1; r < rows; ++r) {
                if (A::zero(a[r][t])) continue;
                row_op(r, t, A::quot(a[r][t], a[t][t]), t);
                if (!A::zero(a[r][t])) dirty = true;
            }
            for (std::size_t c = t + 1; c < cols; ++c) {
                if (A::zero(a[t][c])) continue;
                col_op(c, t, A::quot(a[t][c], a[t][t]), t);
                if (!A::zero(a[t][c])) dirty = true;
            }
            if (!dirty) break;
            // a remainder is smaller than the pivot; move it into place
            std::size_t br = t, bc = t;
            T bv = A::abs(a[t][t]);
            for (std::size_t r = t + 1; r < rows; ++r)
                if (!A::zero(a[r][t]) && A::abs(a[r][t]) < bv) br = r, bc = t, bv = A::abs(a[r][t]);
            for (std::size_t c = t + 1; c < cols; ++c)
                if (!A::zero(a[t][c]) && A::abs(a[t][c]) < bv) br = t, bc = c, bv = A::abs(a[t][c]);
            std::swap(a[t], a[br]);
            for (std::size_t r = 0; r < rows; ++r) std::swap(a[r][t], a[r][bc]);
        }
        diag.push_back(A::big(A::abs(a[t][t])));
    }
    return diag;
}

// Turns any diagonal into the divisibility chain with the same product of
// leading minors.
std::vector<mpz_class> normalize(std::vector<mpz_class> d) {
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            mpz_class g = gcd(d[i], d[j]);
            mpz_class l = d[i] / g * d[j];
            d[i] = g;
            d[j] = l;
        }
    return d;
}

SmithForm finish(std::vector<mpz_class> diag) {
    SmithForm out;
    out.rank = diag.size();
    out.divisors = normalize(std::move(diag));
    return out;
}

std::vector<std::vector<mpz_class>> to_big(const IntMatrix& m) {
    std::vector<std::vector<mpz_class>> b(m.size());
    for (std::size_t r = 0; r < m.size(); ++r)
        for (auto v : m[r]) b[r].push_back(mpz_class(static_cast<long>(v)));
    return b;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
    try {
        return finish(eliminate<Checked>(m));
    } catch (const Overflow&) {
        return smith_normal_form_exact(m);
    }
}

SmithForm smith_normal_form_exact(const IntMatrix& m) {
    return finish(eliminate<Big>(to_big(m)));
}

}  // namespace zsr
