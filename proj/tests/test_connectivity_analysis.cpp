#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "graphlets/connectivity_analysis.hpp"
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

GddMatrix exact_block(const Graph& g, int size) {
    return compute_gdd(g, size, cat()).block(size, cat());
}

// all (k)-subsets whose removal disconnects g
std::vector<uint64_t> vertex_cuts(const Graph& g, int k) {
    std::vector<uint64_t> cuts;
    int n = g.n();
    for (uint64_t mask = 0; mask < (uint64_t(1) << n); ++mask) {
        if (Graph::popcount(mask) != k) continue;
        std::vector<int> keep;
        for (int v = 0; v < n; ++v)
            if (!((mask >> v) & 1)) keep.push_back(v);
        if (keep.size() >= 2 && !is_connected(g.induced(keep))) cuts.push_back(mask);
    }
    return cuts;
}

}  // namespace

TEST_CASE("k-connectivity from the matrix: examples") {
    CHECK(k_connectivity_from_gdd(exact_block(make_cycle(4), 3), 4, 2));
    CHECK_FALSE(k_connectivity_from_gdd(exact_block(make_path(3), 2), 3, 2));
    CHECK(k_connectivity_from_gdd(exact_block(make_complete(5), 2), 5, 4));
}

TEST_CASE("k-connectivity matches the cut oracle, n <= 6, all k") {
    for (int n = 3; n <= 6; ++n)
        for (const Graph& g : generate_connected(n)) {
            int kappa = vertex_connectivity(g);
            for (int k = 2; k <= n - 1; ++k)
                CHECK(k_connectivity_from_gdd(exact_block(g, n - k + 1), n, k) == (kappa >= k));
        }
}

TEST_CASE("articulation analysis: examples") {
    ConnectivityReport p3 = articulation_analysis(exact_block(make_path(3), 2), 3);
    CHECK(p3.verdict == ConnVerdict::UniqueArticulation);
    CHECK(p3.articulation == 1);

    CHECK(articulation_analysis(exact_block(make_cycle(5), 4), 5).verdict ==
          ConnVerdict::KConnected);

    CHECK(articulation_analysis(exact_block(make_path(4), 3), 4).verdict ==
          ConnVerdict::MultipleArticulations);
}

TEST_CASE("articulation analysis agrees with the direct oracle, n <= 6") {
    for (int n = 3; n <= 6; ++n)
        for (const Graph& g : generate_connected(n)) {
            ConnectivityReport rep = articulation_analysis(exact_block(g, n - 1), n);
            std::vector<int> arts = articulation_vertices(g);
            if (arts.empty()) {
                CHECK(rep.verdict == ConnVerdict::KConnected);
            } else if (arts.size() == 1) {
                CHECK(rep.verdict == ConnVerdict::UniqueArticulation);
                CHECK(rep.articulation == arts[0]);
            } else {
                CHECK(rep.verdict == ConnVerdict::MultipleArticulations);
            }
        }
}

TEST_CASE("doctored matrices raise integrity errors") {
    GddMatrix block = exact_block(make_cycle(4), 3);
    block.rows[0].assign(block.rows[0].size(), 0);  // one silenced row
    CHECK_THROWS_AS(articulation_analysis(block, 4), IntegrityError);
}

TEST_CASE("cut core: examples") {
    // 3-connected: every vertex attains the sum
    std::vector<int> all = cut_core_vertices(exact_block(make_complete(4), 2), 4, 3);
    CHECK(all == std::vector<int>{0, 1, 2, 3});

    // C6 has disjoint 2-cuts: nobody attains it
    CHECK(cut_core_vertices(exact_block(make_cycle(6), 4), 6, 3).empty());

    // two triangles sharing an edge {a,b}, so {a,b} is the only 2-cut core:
    // bowtie-with-shared-edge = K4 minus an edge plus ... use the diamond
    Graph diamond(4);
    diamond.add_edge(0, 1);
    diamond.add_edge(0, 2);
    diamond.add_edge(0, 3);
    diamond.add_edge(1, 2);
    diamond.add_edge(1, 3);
    std::vector<int> core = cut_core_vertices(exact_block(diamond, 2), 4, 3);
    CHECK(core == std::vector<int>{0, 1});
}

TEST_CASE("cut core matches cut membership, n <= 6") {
    for (int n = 4; n <= 6; ++n)
        for (const Graph& g : generate_connected(n))
            for (int k = 3; k <= n - 1; ++k) {
                if (vertex_connectivity(g) < k - 1) continue;  // hypothesis
                std::vector<int> core = cut_core_vertices(exact_block(g, n - k + 1), n, k);
                int p = int(core.size());
                CHECK((p <= k - 1 || p == n));
                std::vector<uint64_t> cuts = vertex_cuts(g, k - 1);
                if (p == n) {
                    CHECK(cuts.empty());  // (k)-connected case
                } else {
                    for (int v : core)
                        for (uint64_t cut : cuts) CHECK(((cut >> v) & 1) == 1);
                }
            }
}
