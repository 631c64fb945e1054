#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "graphlets/feasibility.hpp"
#include "graphlets/generate.hpp"
#include "graphlets/graph_alg.hpp"
#include "test_util.hpp"

using namespace graphlets;
using namespace testutil;

namespace {

const Catalog& cat() {
    static Catalog c = Catalog::build(3);
    return c;
}

std::vector<std::array<int64_t, 3>> sorted_rows(const Gds3Matrix& m) {
    auto rows = m.rows;
    std::sort(rows.begin(), rows.end());
    return rows;
}

}  // namespace

TEST_CASE("direct {2,3} counter on named graphs") {
    Gds3Matrix k3 = gds3_of_graph(make_complete(3));
    for (int v = 0; v < 3; ++v) {
        CHECK(k3.rows[v][0] == 2);
        CHECK(k3.rows[v][1] == 0);
        CHECK(k3.rows[v][2] == 1);
    }
    Gds3Matrix p3 = gds3_of_graph(make_path(3));
    CHECK(p3.rows[1] == std::array<int64_t, 3>{2, 0, 0});  // center
    CHECK(p3.rows[0] == std::array<int64_t, 3>{1, 1, 0});  // leaf
}

TEST_CASE("local identities hold on graphs of every stripe") {
    CHECK(verify_local_identities(make_complete(3), cat()).ok);
    CHECK(verify_local_identities(make_path(3), cat()).ok);
    CHECK(verify_local_identities(make_cycle(5), cat()).ok);
    CHECK(verify_local_identities(petersen(), cat()).ok);

    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : generate_all(n)) CHECK(verify_local_identities(g, cat()).ok);

    std::mt19937 rng(17);
    for (int i = 0; i < 200; ++i) {
        Graph g = random_graph(4 + int(rng() % 9), 0.4, rng);
        CHECK(verify_local_identities(g, cat()).ok);
    }
}

TEST_CASE("filters: pass and named failures") {
    CHECK(filter_candidate(gds3_of_graph(make_cycle(5))).pass);

    Gds3Matrix div;  // triangle sum 5, not divisible by 3
    div.n = 5;
    div.rows = {{2, 0, 1}, {2, 0, 1}, {2, 0, 1}, {1, 0, 1}, {1, 0, 1}};
    FilterResult f = filter_candidate(div);
    CHECK_FALSE(f.pass);
    CHECK(f.reason.find("divisible") != std::string::npos);

    Gds3Matrix bound;  // 3 triangles at a degree-2 vertex
    bound.n = 3;
    bound.rows = {{2, 0, 3}, {2, 0, 0}, {2, 0, 0}};
    f = filter_candidate(bound);
    CHECK_FALSE(f.pass);
    CHECK(f.reason.find("C(deg,2)") != std::string::npos);

    Gds3Matrix odd;
    odd.n = 2;
    odd.rows = {{1, 0, 0}, {2, 0, 0}};
    CHECK_FALSE(filter_candidate(odd).pass);

    Gds3Matrix hh;  // degree 3 among three vertices: graphical fails
    hh.n = 3;
    hh.rows = {{3, 0, 0}, {2, 0, 0}, {1, 0, 0}};
    f = filter_candidate(hh);
    CHECK_FALSE(f.pass);
    CHECK(f.reason.find("graphical") != std::string::npos);

    // optional mid column must match exactly
    Gds3Matrix mid = gds3_of_graph(make_cycle(5));
    mid.has_mid = true;
    mid.mid.assign(5, 1);  // C(2,2) - 0
    CHECK(filter_candidate(mid).pass);
    mid.mid[2] = 2;
    CHECK_FALSE(filter_candidate(mid).pass);
}

TEST_CASE("decide: witnesses and refusals") {
    Realizability c5 = decide_realizability(gds3_of_graph(make_cycle(5)));
    REQUIRE(c5.kind == Realizability::Witness);
    CHECK(sorted_rows(gds3_of_graph(*c5.witness)) == sorted_rows(gds3_of_graph(make_cycle(5))));

    Gds3Matrix k2;
    k2.n = 2;
    k2.rows = {{1, 0, 0}, {1, 0, 0}};
    Realizability rk2 = decide_realizability(k2);
    REQUIRE(rk2.kind == Realizability::Witness);
    CHECK(rk2.witness->edge_count() == 1);

    // passes every filter but cannot be realized: degree-1 vertices with a
    // path-end count
    Gds3Matrix no;
    no.n = 4;
    no.rows = {{1, 1, 0}, {1, 1, 0}, {1, 1, 0}, {1, 1, 0}};
    CHECK(filter_candidate(no).pass);
    CHECK(decide_realizability(no).kind == Realizability::No);

    Gds3Matrix big;
    big.n = 10;
    big.rows.assign(10, {2, 2, 0});
    CHECK(decide_realizability(big).kind == Realizability::Undecided);
}

TEST_CASE("true matrices always pass the filter and get a matching witness") {
    for (int n = 2; n <= 5; ++n)
        for (const Graph& g : generate_all(n)) {
            Gds3Matrix m = gds3_of_graph(g);
            CHECK(filter_candidate(m).pass);
            Realizability r = decide_realizability(m);
            REQUIRE(r.kind == Realizability::Witness);
            CHECK(sorted_rows(gds3_of_graph(*r.witness)) == sorted_rows(m));
        }
}

TEST_CASE("csv round trip, 3 and 4 column forms") {
    Gds3Matrix m = gds3_of_graph(make_cycle(5));
    Gds3Matrix back = gds3_from_csv(gds3_to_csv(m));
    CHECK(back.rows == m.rows);

    Gds3Matrix four = gds3_from_csv("2,0,1,0\n2,0,1,0\n2,0,1,0\n");
    CHECK(four.has_mid);
    CHECK(four.rows[0] == std::array<int64_t, 3>{2, 0, 0});
    CHECK(four.mid[0] == 1);
    CHECK_THROWS(gds3_from_csv("1,2\n"));
}
