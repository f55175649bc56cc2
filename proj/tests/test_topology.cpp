#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "zsr/complexes.hpp"
#include "zsr/error.hpp"
#include "zsr/smith.hpp"
#include "zsr/topology.hpp"

using namespace zsr;

namespace {

using Divisors = std::vector<mpz_class>;

ComplexPtr share(SimplicialComplex k) { return std::make_shared<const SimplicialComplex>(std::move(k)); }

// Circle as an n-gon on vertices 0..n-1.
SimplicialComplex polygon(std::size_t n) {
    std::vector<std::string> labels;
    std::vector<Face> facets;
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back(std::to_string(i));
        Face f{i, (i + 1) % n};
        std::sort(f.begin(), f.end());
        facets.push_back(f);
    }
    return SimplicialComplex::from_facets(labels, facets);
}

// Wraps a 2n-gon around an n-gon twice.
SimplicialMap double_cover(std::size_t n) {
    std::vector<std::size_t> vm(2 * n);
    for (std::size_t i = 0; i < 2 * n; ++i) vm[i] = i % n;
    return SimplicialMap::create(share(polygon(2 * n)), share(polygon(n)), vm);
}

}  // namespace

TEST_CASE("smith normal form") {
    auto id = smith_normal_form({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(id.divisors == Divisors{1, 1, 1});
    CHECK(id.rank == 3);

    auto m = smith_normal_form({{2, 4}, {6, 8}});
    CHECK(m.divisors == Divisors{2, 4});
    CHECK(m.rank == 2);

    auto z = smith_normal_form({{0, 0}, {0, 0}});
    CHECK(z.divisors.empty());
    CHECK(z.rank == 0);

    CHECK(smith_normal_form({{2, 0}, {0, 3}}).divisors == Divisors{1, 6});
    CHECK(smith_normal_form({{6, 0, 0}, {0, 10, 0}, {0, 0, 15}}).divisors == Divisors{1, 30, 30});
    CHECK(smith_normal_form({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}).divisors == Divisors{1, 3});

    IntMatrix big{{INT64_MAX / 2, 3}, {5, INT64_MAX / 3}};
    auto fast = smith_normal_form(big);
    auto exact = smith_normal_form_exact(big);
    CHECK(fast.divisors == exact.divisors);
    CHECK(fast.rank == 2);
}

TEST_CASE("reduced homology") {
    auto c23 = reduced_homology(chessboard(2, 3));
    CHECK(c23.betti == std::vector<std::size_t>{0, 1});
    CHECK(c23.euler_from_faces() == c23.euler_from_betti());

    auto oct = reduced_homology(n_fold_join(SimplicialComplex::points(2), 3));
    CHECK(oct.betti == std::vector<std::size_t>{0, 0, 1});

    auto c35 = reduced_homology(chessboard(3, 5));
    CHECK(c35.vanishes(0));
    CHECK(c35.vanishes(1));

    auto pts = reduced_homology(SimplicialComplex::points(2));
    CHECK(pts.betti == std::vector<std::size_t>{1});

    CHECK(reduced_homology(SimplicialComplex::simplex(4)).betti == std::vector<std::size_t>{0, 0, 0, 0});

    CHECK_THROWS_AS(reduced_homology(SimplicialComplex()), InputError);
}

TEST_CASE("torsion is detected") {
    // six-vertex projective plane, H_1 = Z/2
    std::vector<std::string> labels{"1", "2", "3", "4", "5", "6"};
    std::vector<Face> rp2{{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                          {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}};
    auto k = SimplicialComplex::from_facets(labels, rp2);
    auto h = reduced_homology(k);
    CHECK(h.betti == std::vector<std::size_t>{0, 0, 0});
    CHECK(h.torsion[1] == Divisors{2});
    CHECK(homological_connectivity(h) == 0);
    CHECK(is_pseudomanifold(k, 2));
    CHECK_THROWS_AS(orient(k), NonOrientableError);
}

TEST_CASE("boundary matrices compose to zero") {
    auto k = chessboard(3, 4);
    auto ds = boundary_matrices(k);
    REQUIRE(ds.size() == 3);
    for (std::size_t d = 1; d < ds.size(); ++d) {
        auto a = ds[d - 1].dense();
        auto b = ds[d].dense();
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.front().size(); ++j) {
                std::int64_t s = 0;
                for (std::size_t t = 0; t < b.size(); ++t) s += a[i][t] * b[t][j];
                REQUIRE(s == 0);
            }
    }
}

TEST_CASE("homological connectivity") {
    CHECK(homological_connectivity(chessboard(2, 3)) == 0);
    CHECK(homological_connectivity(n_fold_join(SimplicialComplex::points(3), 5)) == 3);
    CHECK(homological_connectivity(SimplicialComplex::points(2)) == -1);
    CHECK(homological_connectivity(SimplicialComplex::simplex(3)) == kAcyclic);
}

TEST_CASE("subdivision preserves homology") {
    for (const auto& k : {chessboard(2, 3), SimplicialComplex::simplex_boundary(3)}) {
        auto a = reduced_homology(k);
        auto b = reduced_homology(barycentric_subdivision(k));
        CHECK(a.betti == b.betti);
        CHECK(a.torsion == b.torsion);
    }
}

TEST_CASE("pseudomanifolds and orientation") {
    auto c23 = chessboard(2, 3);
    CHECK(is_pseudomanifold(c23, 1));
    CHECK(orient(c23).signs.size() == 6);

    CHECK_FALSE(is_pseudomanifold(SimplicialComplex::simplex(3), 2));
    CHECK_THROWS_AS(orient(SimplicialComplex::simplex(3)), StructureError);

    auto c45 = chessboard(4, 5);
    CHECK(c45.facets().size() == 120);
    CHECK(is_pseudomanifold(c45, 3));
    CHECK_NOTHROW(orient(c45));

    // two disjoint circles: not connected
    CHECK_FALSE(is_pseudomanifold(SimplicialComplex::from_facets(
                                      {"a", "b", "c", "d", "e", "f"},
                                      {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}}),
                                  1));
}

TEST_CASE("degree") {
    auto c23 = share(chessboard(2, 3));
    std::vector<std::size_t> id(6);
    std::iota(id.begin(), id.end(), 0);
    CHECK(degree(SimplicialMap::create(c23, c23, id)).magnitude == 1);

    CHECK(degree(chessboard_column_projection(2, 3)).magnitude == 2);
    CHECK(degree(chessboard_column_projection(4, 5)).magnitude == 24);

    auto cover = double_cover(3);
    auto r = degree(cover);
    CHECK(r.magnitude == 2);

    // flipping an orientation flips the sign only
    auto flipped = r.target;
    for (auto& s : flipped.signs) s = -s;
    CHECK(degree(cover, r.source, flipped).degree == -r.degree);

    // composition multiplies degrees: 12-gon -> 6-gon -> 3-gon
    auto a = double_cover(6);
    auto b = double_cover(3);
    auto ab = a.then(b);
    CHECK(degree(ab).magnitude == degree(a).magnitude * degree(b).magnitude);

    auto circle = share(polygon(3));
    CHECK_THROWS_AS(degree(SimplicialMap::create(circle, circle, {0, 0, 0})), DegenerateMapError);
}

TEST_CASE("dold certificate") {
    auto b = box_complex(UniformHypergraph::complete(5, 3), FiniteGroup::cyclic(3));
    auto cert = dold_certificate(b.action, 3);
    CHECK(cert.free);
    CHECK(cert.connectivity == 3);
    CHECK(cert.certified);
    CHECK(cert.verdict == "certified (homology-level)");
    CHECK_FALSE(cert.note.empty());

    auto row = dold_certificate(chessboard_row_action(2, 3), 0);
    CHECK(row.certified);

    auto low = dold_certificate(chessboard_row_action(2, 3), 1);
    CHECK_FALSE(low.certified);
    CHECK(low.verdict == "connectivity too low");

    auto c23 = share(chessboard(2, 3));
    std::vector<std::size_t> id(6);
    std::iota(id.begin(), id.end(), 0);
    auto trivial = ComplexAction::create(c23, FiniteGroup::cyclic(2), {id, id});
    auto none = dold_certificate(trivial, 0);
    CHECK_FALSE(none.certified);
    CHECK(none.verdict == "not free");

    auto pts = share(SimplicialComplex::points(6));
    auto s3 = FiniteGroup::symmetric(3);
    std::vector<std::vector<std::size_t>> perms;
    for (Element g = 0; g < 6; ++g) {
        std::vector<std::size_t> p(6);
        for (Element h = 0; h < 6; ++h) p[h] = s3.mul(g, h);
        perms.push_back(p);
    }
    CHECK_THROWS_AS(dold_certificate(ComplexAction::create(pts, s3, perms), 0), InputError);
}
