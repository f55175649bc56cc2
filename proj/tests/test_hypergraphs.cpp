#include <doctest.h>

#include <bit>
#include <random>

#include "oracles.hpp"
#include "zsr/error.hpp"
#include "zsr/hypergraphs.hpp"

using namespace zsr;

namespace {

// The 7-vertex 3-uniform hypergraph: A = {1,2,3}, B = {4,5,6}, and the
// triples meeting A or B in exactly two vertices.
UniformHypergraph two_block_hypergraph() {
    std::vector<std::vector<std::size_t>> edges;
    auto in_a = [](std::size_t v) { return v >= 1 && v <= 3; };
    auto in_b = [](std::size_t v) { return v >= 4; };
    for (const auto& e : oracle::subsets_of_size(7, 3)) {
        auto a = std::count_if(e.begin(), e.end(), in_a);
        auto b = std::count_if(e.begin(), e.end(), in_b);
        if (a == 2 || b == 2) edges.push_back(e);
    }
    return UniformHypergraph(7, 3, edges);
}

SetFamily random_family(std::mt19937_64& rng, std::size_t m, std::size_t members) {
    std::uniform_int_distribution<SetMask> pick(1, (SetMask{1} << m) - 1);
    std::set<SetMask> s;
    while (s.size() < members) s.insert(pick(rng));
    return SetFamily(m, {s.begin(), s.end()});
}

}  // namespace

TEST_CASE("kneser hypergraphs") {
    auto petersen = kneser_hypergraph(SetFamily::k_subsets(5, 2), 2);
    CHECK(petersen.vertex_count() == 10);
    CHECK(petersen.edge_count() == 15);

    CHECK(kneser_hypergraph(SetFamily::from_lists(3, {{1, 2}}), 2).edge_count() == 0);

    auto singles = kneser_hypergraph(SetFamily::k_subsets(5, 1), 3);
    CHECK(singles.edges() == UniformHypergraph::complete(5, 3).edges());
}

TEST_CASE("colorability defect examples") {
    CHECK(colorability_defect(SetFamily::k_subsets(8, 2), 3).defect == 5);
    CHECK(colorability_defect_exhaustive(SetFamily::k_subsets(8, 2), 3) == 5);

    auto whole = SetFamily::from_lists(3, {{1, 2, 3}});
    CHECK(colorability_defect(whole, 2).defect == 0);
    CHECK(colorability_defect_exhaustive(whole, 2) == 0);

    CHECK(colorability_defect(SetFamily(4, {}), 2).defect == 0);

    auto w = colorability_defect(SetFamily::k_subsets(5, 2), 2);
    CHECK(w.defect == 3);
    REQUIRE(w.parts.size() == 2);
    CHECK((w.parts[0] & w.parts[1]) == 0);
    CHECK(std::popcount(w.parts[0] | w.parts[1]) == 2);

    CHECK_THROWS_AS(colorability_defect(SetFamily(3, {0}), 2), InputError);
}

TEST_CASE("colorability defect formula for k-subsets") {
    for (std::size_t n = 1; n <= 3; ++n)
        for (std::size_t k = 1; k <= 3; ++k)
            for (std::size_t m = n * (k + 1) - 1; m <= 8; ++m)
                CHECK(colorability_defect(SetFamily::k_subsets(m, k), n).defect == m - n * (k - 1));
}

TEST_CASE("branch-and-bound matches exhaustive search") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t m = 3 + trial % 5;
        std::size_t members = 1 + trial % 6;
        auto f = random_family(rng, m, std::min<std::size_t>(members, (1U << m) - 1));
        for (std::size_t n = 1; n <= 3; ++n) REQUIRE(colorability_defect(f, n).defect == colorability_defect_exhaustive(f, n));
    }
}

TEST_CASE("cd zero-sum verification") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<Element> pick(0, 2);
    auto singles = SetFamily::k_subsets(5, 1);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Element> c(5);
        for (auto& x : c) x = pick(rng);
        auto r = verify_cd_zero_sum(singles, 3, c);
        CHECK(r.guarantee_applies);
        CHECK(r.hyperedge.has_value());
    }

    auto pairs = SetFamily::k_subsets(8, 2);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Element> c(pairs.size());
        for (auto& x : c) x = pick(rng);
        auto r = verify_cd_zero_sum(pairs, 3, c);
        CHECK(r.defect == 5);
        CHECK(r.hyperedge.has_value());
    }

    auto below = verify_cd_zero_sum(SetFamily::k_subsets(4, 1), 3, std::vector<Element>{0, 0, 1, 1});
    CHECK(below.defect == 4);
    CHECK_FALSE(below.guarantee_applies);
    CHECK_FALSE(below.hyperedge.has_value());
}

TEST_CASE("chromatic numbers") {
    auto h = two_block_hypergraph();
    CHECK(chromatic_number(h) == 3);
    CHECK(oracle::brute_chromatic(7, h.edges()) == 3);

    CHECK(chromatic_number(UniformHypergraph(4, 2, {})) == 1);
    CHECK(chromatic_number(UniformHypergraph::complete(5, 3)) == 3);

    auto petersen = kneser_hypergraph(SetFamily::k_subsets(5, 2), 2);
    CHECK(chromatic_number(petersen) == 3);
    auto col = optimal_coloring(petersen);
    for (const auto& e : petersen.edges()) CHECK(col[e[0]] != col[e[1]]);

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t v = 4 + trial % 4;
        std::vector<std::vector<std::size_t>> edges;
        for (const auto& e : oracle::subsets_of_size(v, 3))
            if (rng() % 3 == 0) edges.push_back(e);
        UniformHypergraph g(v, 3, edges);
        CHECK(chromatic_number(g) == oracle::brute_chromatic(v, edges));
    }
}

TEST_CASE("the two-block hypergraph has no zero-sum edge") {
    auto h = two_block_hypergraph();
    std::vector<Element> c{2, 0, 0, 0, 1, 1, 1};
    CHECK_FALSE(zero_sum_hyperedge(h, c, FiniteGroup::cyclic(3)).has_value());
}

TEST_CASE("defect bounds the kneser chromatic number") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t m = 4 + trial % 3;
        auto f = random_family(rng, m, 2 + trial % 8);
        for (std::size_t n = 2; n <= 3; ++n) {
            auto kg = kneser_hypergraph(f, n);
            CHECK((n - 1) * chromatic_number(kg) >= colorability_defect(f, n).defect);
        }
    }
}

TEST_CASE("set families") {
    auto f = SetFamily::from_lists(4, {{1, 3}, {2}});
    CHECK(f.member_elements(0) == std::vector<int>{1, 3});
    CHECK_THROWS_AS(SetFamily::from_lists(3, {{4}}), InputError);
    CHECK_THROWS_AS(SetFamily::from_lists(3, {{1}, {1}}), InputError);
    CHECK(SetFamily::from_lists(2, {{1}}).upward_closure().size() == 2);
    CHECK_THROWS_AS(UniformHypergraph(3, 2, {{0, 0}}), InputError);
    CHECK_THROWS_AS(UniformHypergraph(3, 2, {{0, 1, 2}}), InputError);
}
