#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "graphlets/motifs.hpp"
#include "graphlets/io.hpp"
#include "graphlets/generate.hpp"
#include "graphlets/graph_alg.hpp"
#include "test_util.hpp"

using namespace graphlets;
using namespace testutil;

namespace {

const Catalog& cat() {
    static Catalog c = Catalog::build(5);
    return c;
}

int gamma_of(const Graph& g) { return cat().find_gamma(canonical_code(g)); }

}  // namespace

TEST_CASE("K3 motif counts") {
    MotifVector m = motifs_from_gdd(compute_gdd(make_complete(3), 2, cat()), cat());
    CHECK(m.at(gamma_of(parse_graph6("A_"))) == 3);  // edges

    // with size-3 classes included
    Graph k3 = make_complete(3);
    Graph p3 = make_path(3);
    Graph c4 = make_cycle(4);
    MotifVector m4 = motifs_from_gdd(compute_gdd(c4, 3, cat()), cat());
    CHECK(m4.at(gamma_of(parse_graph6("A_"))) == 4);
    CHECK(m4.at(gamma_of(p3)) == 4);
    CHECK(m4.at(gamma_of(k3)) == 0);
}

TEST_CASE("C5 motif vector up to size 4") {
    MotifVector m = motifs_from_gdd(compute_gdd(make_cycle(5), 4, cat()), cat());
    CHECK(m.at(gamma_of(parse_graph6("A_"))) == 5);
    CHECK(m.at(gamma_of(make_path(3))) == 5);
    CHECK(m.at(gamma_of(make_complete(3))) == 0);
    CHECK(m.at(gamma_of(make_path(4))) == 5);
    CHECK(m.at(gamma_of(make_star(4))) == 0);
    CHECK(m.at(gamma_of(make_cycle(4))) == 0);
}

TEST_CASE("edge count is half the degree sum") {
    std::mt19937 rng(3);
    for (int i = 0; i < 40; ++i) {
        Graph g = random_connected_graph(5 + int(rng() % 3), 0.5, rng);
        MotifVector m = motifs_from_gdd(compute_gdd(g, 3, cat()), cat());
        CHECK(m.at(gamma_of(parse_graph6("A_"))) == g.edge_count());
    }
}

TEST_CASE("gdd folding equals the direct whole-graph counter, n <= 6") {
    for (int n = 3; n <= 6; ++n)
        for (const Graph& g : generate_connected(n)) {
            int max_size = std::min(n - 1, 5);
            MotifVector folded = motifs_from_gdd(compute_gdd(g, max_size, cat()), cat());
            MotifVector direct = count_motifs_direct(g, max_size, cat());
            CHECK(folded.counts == direct.counts);
        }
}

TEST_CASE("no distinguishing pair exists at n = 5") {
    Catalog c4 = Catalog::build(4);
    CHECK_FALSE(find_distinguishing_pair(5, 4, c4).has_value());
}

TEST_CASE("distinguishing pair at n = 8 is valid") {
    Catalog c4 = Catalog::build(4);
    auto pair = find_distinguishing_pair(8, 4, c4);
    REQUIRE(pair.has_value());
    CHECK_FALSE(isomorphic(pair->g1, pair->g2));
    MotifVector m1 = count_motifs_direct(pair->g1, 4, c4);
    MotifVector m2 = count_motifs_direct(pair->g2, 4, c4);
    CHECK(m1.counts == m2.counts);
    CHECK(m1.counts == pair->motifs.counts);
    GddMatrix d1 = compute_gdd(pair->g1, 4, c4);
    GddMatrix d2 = compute_gdd(pair->g2, 4, c4);
    auto rows1 = d1.rows, rows2 = d2.rows;
    std::sort(rows1.begin(), rows1.end());
    std::sort(rows2.begin(), rows2.end());
    CHECK(rows1 != rows2);
}
