#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "zsr/cli.hpp"
#include "zsr/io.hpp"

using zsr::io::Json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = zsr::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
    auto dir = std::filesystem::temp_directory_path() / "zsr_cli_test";
    std::filesystem::create_directories(dir);
    auto path = dir / name;
    std::ofstream(path) << content;
    return path.string();
}

}  // namespace

TEST_CASE("zerosum commands") {
    auto r = run({"zerosum", "egz", "--n", "3", "--seq", "0,1,1,2,2"});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["witness"]["indices"] == Json({1, 2, 4}));

    r = run({"--json", "zerosum", "egz", "-n", "3", "0", "1", "1", "2", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find('\n') == r.out.size() - 1);

    CHECK(run({"zerosum", "egz", "--n", "3", "--seq", "0,0,1,1"}).code == 1);
    CHECK(run({"zerosum", "egz", "--n", "3", "--seq", "0,5"}).code == 2);
    CHECK(run({"zerosum", "egz", "--seq", "0,1"}).code == 2);

    r = run({"zerosum", "olson", "--group", "S3", "--seq", "2,2,2,2,2,2,2,2,2,2,2"});
    CHECK(r.code == 0);

    r = run({"zerosum", "hall", "--p", "3", "--seq", "0,1,2"});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["b"] == Json({0, 2, 1}));
    CHECK(run({"zerosum", "hall", "--p", "3", "--seq", "1,0,0"}).code == 1);

    r = run({"zerosum", "constrained", "--p", "3", "--seq", "0,0,0,0,0", "--d", "1,1"});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["indices"] == Json({1, 2, 3}));
    CHECK(run({"zerosum", "constrained", "--p", "3", "--seq", "0,0,0,0,0", "--d", "0,1"}).code == 2);

    CHECK(run({"zerosum", "transversal", "--p", "4", "--seq", "0,0,0"}).code == 2);
    CHECK(run({"zerosum", "ordering", "--group", "S3", "--first", "0,2,3", "--second", "3,0,2"}).code == 0);
}

TEST_CASE("hypergraph commands") {
    auto fam = write_temp("pairs.json", R"({"ground":5,"sets":[[1,2],[3,4],[1,5],[2,3],[4,5]]})");
    auto r = run({"hyper", "cd", fam, "--n", "2"});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out).contains("defect"));

    auto h = write_temp("two_block.json", R"({"vertices":4,"uniformity":2,"edges":[[0,1],[1,2],[0,2],[2,3]]})");
    r = run({"hyper", "chromatic", h});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["chromatic_number"] == 3);
    CHECK(run({"hyper", "edge", h, "--group", "Z/2", "--coloring", "0,1,0,1"}).code == 0);
    CHECK(run({"hyper", "edge", h, "--group", "Z/3", "--coloring", "0,1,0,1"}).code == 2);

    auto broken = write_temp("broken.json", R"({"ground":5,"sets":[[1,2],)");
    CHECK(run({"hyper", "cd", broken, "--n", "2"}).code == 2);
    CHECK(run({"hyper", "cd", "/nonexistent/file.json", "--n", "2"}).code == 2);
}

TEST_CASE("complex and topology commands") {
    auto r = run({"complex", "chessboard", "2", "3"});
    REQUIRE(r.code == 0);
    auto path = write_temp("c23.json", r.out);

    r = run({"topo", "homology", path});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["homological_connectivity"] == 0);

    r = run({"topo", "degree", "--projection", "3"});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["magnitude"] == 2);

    r = run({"complex", "fvector", path});
    CHECK(Json::parse(r.out)["f_vector"] == Json({6, 6}));

    auto contained = write_temp("contained.json", R"({"vertices":["a","b","c"],"facets":[["a","b","c"],["a","b"]]})");
    r = run({"topo", "homology", contained});
    CHECK(r.code == 2);
    CHECK(r.err.find("{a,b}") != std::string::npos);

    auto hg = write_temp("k53.json", R"({"vertices":5,"uniformity":3,"edges":[[0,1,2],[0,1,3],[0,1,4],[0,2,3],[0,2,4],[0,3,4],[1,2,3],[1,2,4],[1,3,4],[2,3,4]]})");
    r = run({"complex", "boxcomplex", hg, "--group", "Z/3"});
    REQUIRE(r.code == 0);
    auto action = write_temp("box.json", r.out);
    r = run({"topo", "certify", action, "--sphere-dim", "3"});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["verdict"] == "certified (homology-level)");
}

TEST_CASE("fractional commands") {
    auto m = write_temp("m.json", R"({"p":2,"measures":[["3/4","1/4"],["3/4","1/4"],["1/2","1/2"]]})");
    CHECK(run({"frac", "egz", m}).code == 0);

    auto nr = write_temp("nr.json", R"({"p":3,"weights":["2/4","1/4","1/4"]})");
    CHECK(run({"frac", "shift", nr, "--by", "1"}).code == 2);
    auto r = run({"--normalize", "frac", "shift", nr, "--by", "1"});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["weights"] == Json({"1/4", "1/2", "1/4"}));

    auto mat = write_temp("mat.json", R"([["1/2","1/2","0"],["0","1/2","1/2"],["1/2","0","1/2"]])");
    r = run({"frac", "birkhoff", mat});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["permutation"] == Json({1, 2, 3}));

    auto sets = write_temp("sets.json", R"({"p":3,"sets":[[0,1],[0],[1,2],[2],[0,2]]})");
    CHECK(run({"frac", "balanced", sets}).code == 0);
}

TEST_CASE("verify and usage") {
    auto r = run({"verify", "homology", "degree"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS homology") != std::string::npos);
    CHECK(r.out.find("PASS degree") != std::string::npos);
    CHECK(run({"verify", "nonsense"}).code == 2);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({}).code == 2);
    CHECK(run({"zerosum", "frobnicate"}).code == 2);
}
