#include "zsr/lp.hpp"

#include <stdexcept>

#include "zsr/error.hpp"

namespace zsr {
namespace {

// Phase one on A x = b, x >= 0, b >= 0, with artificials n..n+m-1.
std::optional<std::vector<Rational>> phase_one(RationalMatrix t, std::vector<Rational> rhs, std::size_t n) {
    const std::size_t m = t.size();
    const std::size_t width = n + m;
    for (std::size_t i = 0; i < m; ++i) {
        t[i].resize(width, Rational(0));
        t[i][n + i] = 1;
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

    // reduced costs of  min sum(artificials)
    std::vector<Rational> cost(width, Rational(0));
    Rational value = 0;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) cost[j] -= t[i][j];
        value -= rhs[i];
    }

    while (true) {
        std::size_t enter = width;
        for (std::size_t j = 0; j < width; ++j)
            if (cost[j] < 0) {
                enter = j;
                break;
            }
        if (enter == width) break;
        std::size_t leave = m;
        Rational best;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            Rational ratio = rhs[i] / t[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) throw std::logic_error("phase-one objective is unbounded");
        const Rational piv = t[leave][enter];
        for (auto& x : t[leave]) x /= piv;
        rhs[leave] /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            const Rational f = t[i][enter];
            for (std::size_t j = 0; j < width; ++j)
                if (t[leave][j] != 0) t[i][j] -= f * t[leave][j];
            rhs[i] -= f * rhs[leave];
        }
        if (cost[enter] != 0) {
            const Rational f = cost[enter];
            for (std::size_t j = 0; j < width; ++j)
                if (t[leave][j] != 0) cost[j] -= f * t[leave][j];
            value -= f * rhs[leave];
        }
        basis[leave] = enter;
    }
    if (value != 0) return std::nullopt;
    std::vector<Rational> x(n, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n) x[basis[i]] = rhs[i];
    return x;
}

}  // namespace

std::optional<std::vector<Rational>> lp_feasible(const RationalMatrix& a, const std::vector<Rational>& b,
                                                 bool nonneg) {
    const std::size_t m = a.size();
    if (b.size() != m)
        throw InputError("lp: " + std::to_string(m) + " rows but " + std::to_string(b.size()) + " right-hand sides");
    const std::size_t n = m ? a[0].size() : 0;
    for (std::size_t i = 0; i < m; ++i)
        if (a[i].size() != n) throw InputError("lp: row " + std::to_string(i) + " has the wrong length");

    const std::size_t vars = nonneg ? n : 2 * n;
    RationalMatrix t(m, std::vector<Rational>(vars));
    std::vector<Rational> rhs(b);
    for (std::size_t i = 0; i < m; ++i) {
        const bool flip = rhs[i] < 0;
        if (flip) rhs[i] = -rhs[i];
        for (std::size_t j = 0; j < n; ++j) {
            const Rational v = flip ? Rational(-a[i][j]) : a[i][j];
            t[i][j] = v;
            if (!nonneg) t[i][n + j] = -v;
        }
    }
    auto y = phase_one(std::move(t), std::move(rhs), vars);
    if (!y) return std::nullopt;
    std::vector<Rational> x(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = nonneg ? (*y)[j] : Rational((*y)[j] - (*y)[n + j]);

    for (std::size_t i = 0; i < m; ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < n; ++j) s += a[i][j] * x[j];
        if (s != b[i]) throw std::logic_error("lp: returned point fails substitution");
    }
    return x;
}

}  // namespace zsr
