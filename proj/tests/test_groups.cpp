#include <doctest.h>

#include "oracles.hpp"
#include "zsr/error.hpp"
#include "zsr/groups.hpp"

using namespace zsr;

TEST_CASE("cyclic groups") {
    auto z1 = FiniteGroup::cyclic(1);
    CHECK(z1.order() == 1);
    CHECK(z1.identity() == 0);
    CHECK(z1.mul(0, 0) == 0);

    auto z2 = FiniteGroup::cyclic(2);
    CHECK(z2.table() == std::vector<std::vector<int>>{{0, 1}, {1, 0}});

    auto z5 = FiniteGroup::cyclic(5);
    CHECK(z5.inverse(2) == 3);
    CHECK(z5.is_abelian());
    CHECK(z5.is_cyclic());
    CHECK(z5.name() == "Z/5");

    CHECK_THROWS_AS(FiniteGroup::cyclic(0), InputError);
}

TEST_CASE("Cayley table validation") {
    auto z2 = FiniteGroup::from_cayley_table({{0, 1}, {1, 0}});
    CHECK(z2 == FiniteGroup::cyclic(2));

    auto s3 = FiniteGroup::from_cayley_table(oracle::s3_table(), "S3");
    CHECK(s3.order() == 6);
    CHECK_FALSE(s3.is_abelian());
    CHECK_FALSE(s3.is_cyclic());
    CHECK(s3.identity() == 0);
    CHECK(s3 == FiniteGroup::symmetric(3));
    for (Element g = 0; g < 6; ++g) {
        CHECK(s3.mul(g, s3.inverse(g)) == s3.identity());
        CHECK(s3.mul(s3.inverse(g), g) == s3.identity());
    }

    CHECK_THROWS_AS(FiniteGroup::from_cayley_table({{0, 1}, {0, 1}}), GroupAxiomError);
    CHECK_THROWS_AS(FiniteGroup::from_cayley_table({{0, 2}, {1, 0}}), InputError);
    CHECK_THROWS_AS(FiniteGroup::from_cayley_table({{0, 1}}), InputError);

    // a Latin square with identity 0 that is not associative (a loop of order 5)
    std::vector<std::vector<int>> loop{
        {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
    try {
        FiniteGroup::from_cayley_table(loop);
        FAIL("non-associative table accepted");
    } catch (const GroupAxiomError& e) {
        REQUIRE(e.a() >= 0);
        auto m = [&](int x, int y) { return loop[x][y]; };
        CHECK(m(m(e.a(), e.b()), e.c()) != m(e.a(), m(e.b(), e.c())));
    }

    // x*y = -x-y mod 3: a Latin square with no identity
    CHECK_THROWS_AS(FiniteGroup::from_cayley_table({{0, 2, 1}, {2, 1, 0}, {1, 0, 2}}), GroupAxiomError);
}

TEST_CASE("derived groups") {
    auto v4 = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
    CHECK(v4.order() == 4);
    CHECK(v4.is_abelian());
    CHECK_FALSE(v4.is_cyclic());
    for (Element g = 0; g < 4; ++g) CHECK(v4.mul(g, g) == v4.identity());
    CHECK(v4.name() == "Z/2xZ/2");

    auto z6 = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(3));
    CHECK(z6.is_cyclic());

    CHECK(FiniteGroup::symmetric(4).order() == 24);
    CHECK(FiniteGroup::cyclic(6).element_order(2) == 3);
}

TEST_CASE("product ordering") {
    auto z4 = FiniteGroup::cyclic(4);
    std::vector<Element> e{0};
    CHECK(product_ordering(z4, e, e) == std::vector<std::size_t>{0});

    // abelian: x_i sum to zero already
    std::vector<Element> g{1, 3, 2}, h{2, 1, 3};
    auto pi = product_ordering(z4, g, h);
    std::vector<Element> xs;
    for (auto i : pi) xs.push_back(z4.mul(z4.inverse(g[i]), h[i]));
    CHECK(z4.product(xs) == 0);

    auto s3 = FiniteGroup::symmetric(3);
    // e, (12) = [1,0,2], (123) = [1,2,0]
    std::vector<Element> gs{0, 2, 3}, hs{3, 0, 2};
    auto p = product_ordering(s3, gs, hs);
    std::vector<Element> ys;
    for (auto i : p) ys.push_back(s3.mul(s3.inverse(gs[i]), hs[i]));
    CHECK(s3.product(ys) == s3.identity());
    std::vector<Element> raw;
    for (std::size_t i = 0; i < 3; ++i) raw.push_back(s3.mul(s3.inverse(gs[i]), hs[i]));
    CHECK(oracle::some_ordering_is_identity(s3, raw));

    CHECK_THROWS_AS(product_ordering(s3, std::vector<Element>{0, 1}, std::vector<Element>{0, 2}), InputError);
    CHECK_THROWS_AS(product_ordering(s3, std::vector<Element>{1, 1}, std::vector<Element>{1, 1}), InputError);
}

TEST_CASE("product ordering exhaustive over S3") {
    auto s3 = FiniteGroup::symmetric(3);
    std::size_t checked = 0;
    for (std::size_t m = 1; m <= 5; ++m)
        for (const auto& subset : oracle::subsets_of_size(6, m)) {
            std::vector<Element> gs(subset.begin(), subset.end());
            do {
                std::vector<Element> hs(subset.begin(), subset.end());
                do {
                    auto pi = product_ordering(s3, gs, hs);
                    std::vector<std::size_t> sorted = pi;
                    std::sort(sorted.begin(), sorted.end());
                    std::vector<std::size_t> iota(m);
                    std::iota(iota.begin(), iota.end(), 0);
                    REQUIRE(sorted == iota);
                    Element acc = s3.identity();
                    for (auto i : pi) acc = s3.mul(acc, s3.mul(s3.inverse(gs[i]), hs[i]));
                    REQUIRE(acc == s3.identity());
                    ++checked;
                } while (std::next_permutation(hs.begin(), hs.end()));
            } while (std::next_permutation(gs.begin(), gs.end()));
        }
    CHECK(checked > 90000);
}

TEST_CASE("primality") {
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(2));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(91));
}
