#include "zsr/fractional.hpp"

#include <algorithm>
#include <functional>

#include "zsr/error.hpp"
#include "zsr/lp.hpp"

namespace zsr {
namespace {

std::size_t check_measures(const std::vector<RationalMeasure>& measures) {
    if (measures.empty()) throw InputError("no measures given");
    const std::size_t p = measures[0].modulus();
    if (!is_prime(p)) throw InputError("modulus " + std::to_string(p) + " is not prime");
    for (std::size_t k = 0; k < measures.size(); ++k)
        if (measures[k].modulus() != p)
            throw InputError("measure " + std::to_string(k) + " lives on a different Z/p");
    return p;
}

// Lexicographic successor among injections [p] -> [len].
bool next_injection(std::vector<std::size_t>& inj, std::size_t len) {
    const std::size_t p = inj.size();
    std::vector<char> used(len, 0);
    for (std::size_t i = 0; i < p; ++i) used[inj[i]] = 1;
    for (std::size_t i = p; i-- > 0;) {
        used[inj[i]] = 0;
        std::size_t c = inj[i] + 1;
        while (c < len && used[c]) ++c;
        if (c == len) continue;
        inj[i] = c;
        used[c] = 1;
        std::size_t next = 0;
        for (std::size_t j = i + 1; j < p; ++j) {
            while (used[next]) ++next;
            inj[j] = next;
            used[next] = 1;
        }
        return true;
    }
    return false;
}

// Kuhn augmenting path on rows >= from, columns not in `taken`.
bool perfect_matching_exists(const std::vector<std::vector<char>>& pos, std::size_t from,
                             const std::vector<char>& taken) {
    const std::size_t n = pos.size();
    std::vector<long> match_col(n, -1);
    std::function<bool(std::size_t, std::vector<char>&)> augment = [&](std::size_t r, std::vector<char>& seen) {
        for (std::size_t c = 0; c < n; ++c) {
            if (!pos[r][c] || taken[c] || seen[c]) continue;
            seen[c] = 1;
            if (match_col[c] < 0 || augment(static_cast<std::size_t>(match_col[c]), seen)) {
                match_col[c] = static_cast<long>(r);
                return true;
            }
        }
        return false;
    };
    for (std::size_t r = from; r < n; ++r) {
        std::vector<char> seen(n, 0);
        if (!augment(r, seen)) return false;
    }
    return true;
}

}  // namespace

std::optional<std::vector<Rational>> fractional_weights(const std::vector<RationalMeasure>& measures,
                                                        const std::vector<std::size_t>& injection) {
    const std::size_t p = injection.size();
    RationalMatrix a(p, std::vector<Rational>(p));
    for (std::size_t i = 0; i < p; ++i) {
        const auto shifted = shift_measure(measures[injection[i]], static_cast<Element>(i));
        for (std::size_t x = 0; x < p; ++x) a[x][i] = shifted[x];
    }
    std::vector<Rational> b(p, Rational(mpz_class(1), mpz_class(p)));
    return lp_feasible(a, b, true);
}

FractionalWitness fractional_egz(const std::vector<RationalMeasure>& measures) {
    const std::size_t p = check_measures(measures);
    if (measures.size() != 2 * p - 1)
        throw InputError("expected " + std::to_string(2 * p - 1) + " measures, got " +
                         std::to_string(measures.size()));
    std::vector<std::size_t> inj(p);
    for (std::size_t i = 0; i < p; ++i) inj[i] = i;
    do {
        if (auto w = fractional_weights(measures, inj)) {
            FractionalWitness out{inj, std::move(*w)};
            if (!verify_fractional(measures, out)) throw std::logic_error("fractional witness fails re-verification");
            return out;
        }
    } while (next_injection(inj, measures.size()));
    throw TheoremViolation("no injection admits weights reaching the uniform measure");
}

bool verify_fractional(const std::vector<RationalMeasure>& measures, const FractionalWitness& w) {
    const std::size_t p = w.injection.size();
    if (p == 0 || w.lambdas.size() != p) return false;
    std::vector<char> used(measures.size(), 0);
    for (auto k : w.injection) {
        if (k >= measures.size() || used[k] || measures[k].modulus() != p) return false;
        used[k] = 1;
    }
    Rational total = 0;
    std::vector<Rational> mix(p, Rational(0));
    for (std::size_t i = 0; i < p; ++i) {
        if (w.lambdas[i] < 0) return false;
        total += w.lambdas[i];
        const auto shifted = shift_measure(measures[w.injection[i]], static_cast<Element>(i));
        for (std::size_t x = 0; x < p; ++x) mix[x] += w.lambdas[i] * shifted[x];
    }
    if (total != 1) return false;
    for (auto& v : mix)
        if (v != Rational(mpz_class(1), mpz_class(p))) return false;
    return true;
}

BalancedWitness balanced_witness(std::size_t p, const std::vector<std::vector<Element>>& sets) {
    if (!is_prime(p)) throw InputError("modulus " + std::to_string(p) + " is not prime");
    if (sets.size() != 2 * p - 1)
        throw InputError("expected " + std::to_string(2 * p - 1) + " sets, got " + std::to_string(sets.size()));
    std::vector<std::vector<Element>> clean;
    std::vector<RationalMeasure> measures;
    for (std::size_t k = 0; k < sets.size(); ++k) {
        auto s = sets[k];
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (s.empty()) throw InputError("set " + std::to_string(k) + " is empty");
        if (s.back() >= p) throw InputError("set " + std::to_string(k) + " leaves Z/" + std::to_string(p));
        std::vector<Rational> w(p, Rational(0));
        for (auto x : s) w[x] = Rational(mpz_class(1), mpz_class(s.size()));
        measures.emplace_back(p, std::move(w));
        clean.push_back(std::move(s));
    }
    auto f = fractional_egz(measures);
    BalancedWitness out;
    out.injection = f.injection;
    for (std::size_t i = 0; i < p; ++i) {
        const auto& a = clean[f.injection[i]];
        std::vector<Element> shifted;
        for (auto x : a) shifted.push_back(static_cast<Element>((x + i) % p));
        std::sort(shifted.begin(), shifted.end());
        out.shifted_sets.push_back(std::move(shifted));
        out.weights.push_back(f.lambdas[i] * Rational(mpz_class(p), mpz_class(a.size())));
    }
    if (!verify_balanced(p, out)) throw std::logic_error("balanced witness fails re-verification");
    return out;
}

bool verify_balanced(std::size_t p, const BalancedWitness& w) {
    if (w.weights.size() != w.shifted_sets.size()) return false;
    std::vector<Rational> cover(p, Rational(0));
    for (std::size_t i = 0; i < w.weights.size(); ++i) {
        if (w.weights[i] < 0) return false;
        for (auto x : w.shifted_sets[i]) {
            if (x >= p) return false;
            cover[x] += w.weights[i];
        }
    }
    return std::all_of(cover.begin(), cover.end(), [](const Rational& c) { return c == 1; });
}

bool is_doubly_stochastic(const std::vector<std::vector<Rational>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return false;
    std::vector<Rational> col(n, Rational(0));
    for (const auto& row : m) {
        if (row.size() != n) return false;
        Rational s = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (row[j] < 0) return false;
            s += row[j];
            col[j] += row[j];
        }
        if (s != 1) return false;
    }
    return std::all_of(col.begin(), col.end(), [](const Rational& c) { return c == 1; });
}

std::vector<std::size_t> positive_permutation(const std::vector<std::vector<Rational>>& m) {
    if (!is_doubly_stochastic(m)) throw InputError("matrix is not doubly stochastic");
    const std::size_t n = m.size();
    std::vector<std::vector<char>> pos(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) pos[i][j] = m[i][j] > 0;
    std::vector<char> taken(n, 0);
    if (!perfect_matching_exists(pos, 0, taken))
        throw TheoremViolation("positive support of a doubly stochastic matrix has no perfect matching");
    std::vector<std::size_t> pi(n);
    for (std::size_t i = 0; i < n; ++i) {
        bool placed = false;
        for (std::size_t j = 0; j < n && !placed; ++j) {
            if (!pos[i][j] || taken[j]) continue;
            taken[j] = 1;
            if (perfect_matching_exists(pos, i + 1, taken)) {
                pi[i] = j;
                placed = true;
            } else {
                taken[j] = 0;
            }
        }
        if (!placed) throw std::logic_error("greedy matching lost its completion");
    }
    return pi;
}

}  // namespace zsr
