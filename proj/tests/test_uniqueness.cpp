#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "graphlets/uniqueness.hpp"
#include "graphlets/graph_alg.hpp"
#include "test_util.hpp"

using namespace graphlets;
using namespace testutil;

TEST_CASE("pair construction at n = 4: paw versus star") {
    SameGdsPair p = same_gds_pair(4);
    CHECK(p.g1.edge_count() == 4);  // triangle with a pendant
    CHECK(p.g2.edge_count() == 3);
    CHECK(isomorphic(p.g2, make_star(4)));
    CHECK_FALSE(isomorphic(p.g1, p.g2));
    CHECK(gds_signature(p.g1, p.v1, 3) == gds_signature(p.g2, p.v2, 3));
}

TEST_CASE("pair construction verifies for every n up to 12") {
    for (int n = 4; n <= 12; ++n) {
        SameGdsPair p = same_gds_pair(n);  // throws if the rows ever differ
        CHECK_FALSE(isomorphic(p.g1, p.g2));
        CHECK(p.g1.edge_count() == p.g2.edge_count() + 1);
    }
    CHECK_THROWS(same_gds_pair(3));
}

TEST_CASE("the shared row is all path-end classes, largest size twice") {
    int n = 6;
    SameGdsPair p = same_gds_pair(n);
    GdsSignature sig = gds_signature(p.g1, p.v1, n - 1);
    std::map<RootedCode, int64_t> by_code(sig.begin(), sig.end());
    REQUIRE(by_code.size() == size_t(n - 2));  // one class per size 2..n-1
    for (int s = 2; s <= n - 1; ++s) {
        RootedCode path_end = rooted_code(make_path(s), 0);
        REQUIRE(by_code.count(path_end));
        CHECK(by_code[path_end] == (s == n - 1 ? 2 : 1));
    }
}

TEST_CASE("collision scan: n = 3 degenerates to a degree collision") {
    // a (<= 2)-gds is just the degree, so the middle of the 3-path and any
    // triangle vertex share a row; the construction-only statement starts
    // at n = 4 where real path-end structure exists
    std::vector<CollisionRecord> recs = collision_search(3, false, 2);
    REQUIRE(recs.size() == 1);
    CHECK_FALSE(recs[0].is_triangle_fork_instance);
    std::set<std::vector<uint64_t>> got = {recs[0].code1.bits, recs[0].code2.bits};
    std::set<std::vector<uint64_t>> want = {canonical_code(make_path(3)).bits,
                                            canonical_code(make_complete(3)).bits};
    CHECK(got == want);
    CHECK((recs[0].vertices1.size() == 1 || recs[0].vertices2.size() == 1));
}

TEST_CASE("collision scan: n = 4 and 5 find exactly the construction") {
    for (int n : {4, 5}) {
        std::vector<CollisionRecord> recs = collision_search(n, false, n - 1);
        REQUIRE(recs.size() == 1);
        CHECK(recs[0].is_triangle_fork_instance);
        SameGdsPair p = same_gds_pair(n);
        CanonicalCode c1 = canonical_code(p.g1), c2 = canonical_code(p.g2);
        CHECK(((recs[0].code1 == c1 && recs[0].code2 == c2) ||
               (recs[0].code1 == c2 && recs[0].code2 == c1)));
    }
}

TEST_CASE("whole-gdd collision scan is empty at n <= 6") {
    for (int n = 4; n <= 6; ++n) CHECK(collision_search(n, true, n - 1).empty());
}

TEST_CASE("scan is deterministic and refuses oversized inputs") {
    std::vector<CollisionRecord> a = collision_search(5, false, 4);
    std::vector<CollisionRecord> b = collision_search(5, false, 4);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].code1 == b[i].code1);
        CHECK(a[i].vertices1 == b[i].vertices1);
    }
    CHECK_THROWS_AS(collision_search(8, false, 7), std::invalid_argument);
}

TEST_CASE("disconnected mode stays available behind the flag") {
    std::vector<CollisionRecord> recs = collision_search(4, false, 3, true);
    for (auto& r : recs) CHECK(!r.graph6_1.empty());
}
