#pragma once

#include <string>
#include <vector>

#include "graphlets/gdd.hpp"

namespace graphlets {

// Path on n-2 vertices ended with a triangle (g1) or a fork (g2). The far
// path endpoints v1 and v2 carry identical (<= n-1)-gds although the graphs
// differ; equality is re-verified by the engine at construction.
struct SameGdsPair {
    Graph g1, g2;
    int v1 = 0, v2 = 0;
};
SameGdsPair same_gds_pair(int n);

struct CollisionRecord {
    CanonicalCode code1, code2;
    std::string graph6_1, graph6_2;
    // colliding vertices on each side (all of them); empty in whole-gdd mode
    std::vector<int> vertices1, vertices2;
    bool whole_gdd = false;
    bool is_triangle_fork_instance = false;
    GdsSignature shared_row;  // one colliding row (vertex mode)
};

// Exhaustive cross-graph gds collision scan over the classes on n vertices.
// vertex mode: records one entry per (class pair, shared row signature);
// whole-gdd mode: pairs of classes with identical row multisets. Deterministic
// output order.
std::vector<CollisionRecord> collision_search(int n, bool whole_gdd_mode, int k,
                                              bool include_disconnected = false);

}  // namespace graphlets
