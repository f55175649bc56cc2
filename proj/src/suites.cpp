#include "zsr/suites.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

#include "zsr/complexes.hpp"
#include "zsr/error.hpp"
#include "zsr/fractional.hpp"
#include "zsr/hypergraphs.hpp"
#include "zsr/topology.hpp"
#include "zsr/zerosum.hpp"

namespace zsr {
namespace {

std::string show(std::span<const Element> seq) {
    std::string s = "(";
    for (std::size_t i = 0; i < seq.size(); ++i) s += (i ? "," : "") + std::to_string(seq[i]);
    return s + ")";
}

// i-th sequence of length len over 0..n-1, first position most significant
std::vector<Element> nth_sequence(std::size_t index, std::size_t n, std::size_t len) {
    std::vector<Element> seq(len);
    for (std::size_t k = len; k-- > 0;) {
        seq[k] = static_cast<Element>(index % n);
        index /= n;
    }
    return seq;
}

std::size_t power(std::size_t b, std::size_t e) {
    std::size_t r = 1;
    while (e--) r *= b;
    return r;
}

std::vector<Element> random_sequence(std::mt19937_64& rng, std::size_t n, std::size_t len) {
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::vector<Element> seq(len);
    for (auto& x : seq) x = static_cast<Element>(pick(rng));
    return seq;
}

struct Batch {
    std::string label;
    std::size_t count;
    std::function<std::string(std::size_t)> body;
};

void run_batches(VerificationReport& r, const std::vector<Batch>& batches, std::size_t jobs) {
    for (const auto& b : batches) {
        const auto start = std::chrono::steady_clock::now();
        auto results = parallel_for(b.count, jobs, b.body);
        std::size_t failed = 0;
        for (auto& msg : results)
            if (!msg.empty()) {
                r.failures.push_back(b.label + ": " + msg);
                ++failed;
            }
        r.instances += b.count;
        r.notes.push_back(b.label + ": " + std::to_string(b.count) + " instances, " + std::to_string(failed) +
                          " failures");
        r.batches.push_back(
            {b.label, b.count, failed,
             std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()});
    }
}

std::string zero_sum_check(const FiniteGroup& g, const std::vector<Element>& seq, bool olson) {
    auto w = olson ? olson_find(g, seq) : egz_find(g.order(), seq);
    if (!w) return "no witness for " + show(seq);
    if (!verify_zero_sum(g, seq, *w, g.order())) return "witness fails re-verification for " + show(seq);
    return {};
}

std::vector<Batch> egz_batches(const SuiteOptions& o) {
    std::vector<Batch> out;
    for (auto [n, len] : {std::pair<std::size_t, std::size_t>{3, 5}, {4, 7}}) {
        auto g = FiniteGroup::cyclic(n);
        out.push_back({"(Z/" + std::to_string(n) + ")^" + std::to_string(len) + " exhaustive", power(n, len),
                       [g, n, len](std::size_t i) { return zero_sum_check(g, nth_sequence(i, n, len), false); }});
    }
    if (o.scale == Scale::kFull) {
        auto g = FiniteGroup::cyclic(5);
        const auto seed = o.seed;
        out.push_back({"(Z/5)^9 sampled", 100000, [g, seed](std::size_t i) {
                           auto rng = instance_rng(seed, i);
                           return zero_sum_check(g, random_sequence(rng, 5, 9), false);
                       }});
    }
    return out;
}

std::vector<Batch> olson_batches(const SuiteOptions& o) {
    std::vector<FiniteGroup> groups{FiniteGroup::cyclic(1), FiniteGroup::cyclic(2), FiniteGroup::cyclic(3),
                                    FiniteGroup::cyclic(4),
                                    FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2))};
    std::vector<Batch> out;
    for (const auto& g : groups) {
        const std::size_t n = g.order(), len = 2 * n - 1;
        out.push_back({g.name() + " exhaustive", power(n, len),
                       [g, n, len](std::size_t i) { return zero_sum_check(g, nth_sequence(i, n, len), true); }});
    }
    if (o.scale == Scale::kFull) {
        auto g = FiniteGroup::symmetric(3);
        const auto seed = o.seed;
        out.push_back({"S3 sampled", 10000, [g, seed](std::size_t i) {
                           auto rng = instance_rng(seed, i);
                           return zero_sum_check(g, random_sequence(rng, 6, 11), true);
                       }});
    }
    return out;
}

std::vector<Batch> hall_batches(const SuiteOptions& o) {
    std::vector<std::size_t> primes{2, 3};
    if (o.scale == Scale::kFull) primes.push_back(5);
    std::vector<Batch> out;
    for (std::size_t p : primes) {
        out.push_back({"p=" + std::to_string(p) + " exhaustive", power(p, p), [p](std::size_t i) -> std::string {
                           auto a = nth_sequence(i, p, p);
                           const bool zero = std::accumulate(a.begin(), a.end(), std::size_t{0}) % p == 0;
                           auto d = hall_decompose(p, a);
                           if (d.has_value() != zero)
                               return (zero ? "missed zero-sum " : "decomposed nonzero-sum ") + show(a);
                           if (d && !verify_hall(p, a, *d)) return "decomposition fails for " + show(a);
                           if (zero && !verify_hall(p, a, hall_decompose_via_transversal(p, a)))
                               return "transversal route fails for " + show(a);
                           return {};
                       }});
    }
    return out;
}

std::vector<Batch> constrained_batches(const SuiteOptions& o) {
    std::vector<std::pair<std::string, DifferenceIndexing>> modes{
        {"subsequence-position d", DifferenceIndexing::kBySubsequencePosition}};
    if (o.scale == Scale::kFull) modes.emplace_back("column-pair d", DifferenceIndexing::kByColumnPair);
    std::vector<Batch> out;
    for (auto [label, mode] : modes) {
        out.push_back({"(Z/3)^5 x d in {1,2}^2, " + label, 243 * 4, [mode](std::size_t i) -> std::string {
                           auto seq = nth_sequence(i / 4, 3, 5);
                           std::vector<Element> d{static_cast<Element>(1 + (i % 4) / 2),
                                                  static_cast<Element>(1 + i % 2)};
                           auto w = constrained_egz(3, seq, d, mode);
                           if (!verify_constrained(3, seq, d, w, mode))
                               return "constraint check fails for " + show(seq) + " d=" + show(d);
                           return {};
                       }});
    }
    return out;
}

std::vector<Batch> cd_batches(const SuiteOptions& o) {
    const std::size_t max_m = o.scale == Scale::kFull ? 8 : 6;
    std::vector<std::array<std::size_t, 3>> cases;
    for (std::size_t n = 1; n <= 3; ++n)
        for (std::size_t k = 1; k <= 3; ++k)
            for (std::size_t m = 1; m <= max_m; ++m)
                if (m + 1 >= n * (k + 1)) cases.push_back({m, n, k});
    std::vector<Batch> out;
    out.push_back({"cd^n(k-subsets of [m]) formula", cases.size(), [cases](std::size_t i) -> std::string {
                       auto [m, n, k] = cases[i];
                       auto f = SetFamily::k_subsets(m, k);
                       const std::size_t expect = m - n * (k - 1);
                       const auto bb = colorability_defect(f, n).defect;
                       const auto brute = colorability_defect_exhaustive(f, n);
                       if (bb != expect || brute != expect)
                           return "m=" + std::to_string(m) + " n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                  ": branch-and-bound " + std::to_string(bb) + ", exhaustive " +
                                  std::to_string(brute) + ", formula " + std::to_string(expect);
                       return {};
                   }});
    const std::size_t samples = o.scale == Scale::kFull ? 1000 : 100;
    const auto seed = o.seed;
    out.push_back({"KG^3(2-subsets of [8]) random colorings", samples, [seed](std::size_t i) -> std::string {
                       static const auto family = SetFamily::k_subsets(8, 2);
                       auto rng = instance_rng(seed, i);
                       auto coloring = random_sequence(rng, 3, family.size());
                       auto r = verify_cd_zero_sum(family, 3, coloring);
                       if (!r.guarantee_applies) return "defect below 2n-1";
                       if (!r.hyperedge) return "no zero-sum hyperedge for coloring " + show(coloring);
                       return {};
                   }});
    return out;
}

std::vector<Rational> random_weights(std::mt19937_64& rng, std::size_t p) {
    std::uniform_int_distribution<long> den_pick(1, 8);
    const long den = den_pick(rng);
    std::uniform_int_distribution<std::size_t> slot(0, p - 1);
    std::vector<long> counts(p, 0);
    for (long u = 0; u < den; ++u) ++counts[slot(rng)];
    std::vector<Rational> w;
    for (long c : counts) {
        Rational q{mpz_class(c), mpz_class(den)};
        q.canonicalize();
        w.push_back(q);
    }
    return w;
}

std::vector<Batch> fractional_batches(const SuiteOptions& o) {
    std::vector<Batch> out;
    for (std::size_t p : {2, 3}) {
        const std::size_t len = 2 * p - 1;
        out.push_back({"Dirac inputs p=" + std::to_string(p), power(p, len), [p, len](std::size_t i) -> std::string {
                           auto a = nth_sequence(i, p, len);
                           std::vector<RationalMeasure> ms;
                           for (auto x : a) ms.push_back(RationalMeasure::dirac(p, x));
                           auto w = fractional_egz(ms);
                           if (!verify_fractional(ms, w)) return "witness fails for " + show(a);
                           std::size_t sum = 0;
                           for (std::size_t k = 0; k < p; ++k) {
                               if (w.lambdas[k] != Rational(mpz_class(1), mpz_class(p)))
                                   return "non-uniform weights for Dirac input " + show(a);
                               sum += a[w.injection[k]];
                           }
                           if (sum % p != 0) return "support is not zero-sum for " + show(a);
                           if (!egz_find(p, a)) return "EGZ solver disagrees on " + show(a);
                           return {};
                       }});
    }
    const std::size_t samples = o.scale == Scale::kFull ? 1000 : 100;
    const auto seed = o.seed;
    out.push_back({"random rational measures p in {2,3}", samples, [seed](std::size_t i) -> std::string {
                       auto rng = instance_rng(seed, i);
                       const std::size_t p = 2 + i % 2;
                       std::vector<RationalMeasure> ms;
                       for (std::size_t k = 0; k < 2 * p - 1; ++k) ms.emplace_back(p, random_weights(rng, p));
                       auto w = fractional_egz(ms);
                       if (!verify_fractional(ms, w)) return "witness fails re-verification";
                       return {};
                   }});
    return out;
}

std::string surjectivity_run(std::size_t n) {
    EquivariantMapEnumerator e(n);
    std::size_t seen = 0;
    while (auto f = e.next()) {
        ++seen;
        if (!is_equivariant(*f, e.source_action(), e.target_action()))
            return "map " + show(e.representatives()) + " is not equivariant";
        if (!is_surjective_onto_facets(*f)) return "map " + show(e.representatives()) + " is not surjective";
    }
    if (seen != e.total()) return "enumerated " + std::to_string(seen) + " of " + std::to_string(e.total());
    return {};
}

std::string expect_homology(const std::string& what, const SimplicialComplex& k,
                            const std::vector<std::size_t>& betti, std::size_t upto) {
    auto h = reduced_homology(k);
    for (std::size_t d = 0; d <= upto; ++d) {
        const std::size_t b = d < h.betti.size() ? h.betti[d] : 0;
        const std::size_t want = d < betti.size() ? betti[d] : 0;
        if (b != want || (d < h.torsion.size() && !h.torsion[d].empty()))
            return what + ": reduced H_" + std::to_string(d) + " has rank " + std::to_string(b) + ", expected " +
                   std::to_string(want) + " and no torsion";
    }
    return {};
}

}  // namespace

std::mt19937_64 instance_rng(std::uint64_t seed, std::size_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(std::uint64_t{index} >> 32)};
    return std::mt19937_64(seq);
}

std::vector<std::string> parallel_for(std::size_t count, std::size_t jobs,
                                      const std::function<std::string(std::size_t)>& body) {
    if (jobs == 0) jobs = std::max(1U, std::thread::hardware_concurrency());
    jobs = std::min(jobs, std::max<std::size_t>(count, 1));
    std::vector<std::string> results(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) {
            try {
                results[i] = body(i);
            } catch (const TheoremViolation& e) {
                results[i] = std::string("theorem violation: ") + e.what();
            } catch (const std::exception& e) {
                results[i] = std::string("error: ") + e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return results;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"egz", "olson", "hall", "constrained", "cd",
                                                "fractional", "surjectivity", "homology", "degree"};
    return names;
}

VerificationReport run_suite(const std::string& name, const SuiteOptions& o) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport r;
    r.suite = name;
    if (name == "egz") {
        run_batches(r, egz_batches(o), o.jobs);
    } else if (name == "olson") {
        run_batches(r, olson_batches(o), o.jobs);
    } else if (name == "hall") {
        run_batches(r, hall_batches(o), o.jobs);
    } else if (name == "constrained") {
        run_batches(r, constrained_batches(o), o.jobs);
    } else if (name == "cd") {
        run_batches(r, cd_batches(o), o.jobs);
    } else if (name == "fractional") {
        run_batches(r, fractional_batches(o), o.jobs);
    } else if (name == "surjectivity") {
        std::vector<std::size_t> ns{2, 3};
        if (o.scale == Scale::kFull) ns.push_back(4);
        std::vector<Batch> batches;
        for (auto n : ns) {
            const std::size_t maps = power(n, 2 * n - 1);
            batches.push_back({"n=" + std::to_string(n) + " (" + std::to_string(maps) + " maps)", 1,
                               [n](std::size_t) { return surjectivity_run(n); }});
        }
        run_batches(r, batches, o.jobs);
    } else if (name == "homology") {
        std::vector<Batch> batches{
            {"chessboard 2x3", 1, [](std::size_t) { return expect_homology("D(2,3)", chessboard(2, 3), {0, 1}, 1); }},
            {"chessboard 3x5", 1, [](std::size_t) { return expect_homology("D(3,5)", chessboard(3, 5), {0, 0}, 1); }},
            {"subdivision", 1, [](std::size_t) -> std::string {
                 for (const auto& k : {chessboard(2, 3), SimplicialComplex::simplex_boundary(3)}) {
                     auto a = reduced_homology(k), b = reduced_homology(barycentric_subdivision(k));
                     if (a.betti != b.betti || a.torsion != b.torsion) return "subdivision changed homology";
                 }
                 return {};
             }}};
        if (o.scale == Scale::kFull)
            batches.push_back({"box complex of complete 3-uniform on [5]", 1, [](std::size_t) -> std::string {
                                   auto box = box_complex(UniformHypergraph::complete(5, 3), FiniteGroup::cyclic(3));
                                   const int c = homological_connectivity(*box.complex);
                                   if (c != 3) return "connectivity " + std::to_string(c) + ", expected 3";
                                   return {};
                               }});
        run_batches(r, batches, o.jobs);
    } else if (name == "degree") {
        std::vector<Batch> batches;
        for (std::size_t p : {3, 5}) {
            batches.push_back({"p=" + std::to_string(p), 1, [p](std::size_t) -> std::string {
                                   auto rep = degree(chessboard_column_projection(p - 1, p));
                                   long want = 1;
                                   for (std::size_t k = 2; k < p; ++k) want *= static_cast<long>(k);
                                   if (rep.magnitude != want)
                                       return "|degree| " + std::to_string(rep.magnitude) + ", expected " +
                                              std::to_string(want);
                                   return {};
                               }});
        }
        run_batches(r, batches, o.jobs);
    } else {
        throw InputError("unknown suite \"" + name + "\"");
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace zsr
