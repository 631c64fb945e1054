#pragma once

#include "graphlets/graph.hpp"

namespace graphlets {

// Visits every connected vertex subset S with root in S and
// min_size <= |S| <= max_size exactly once, as a bitmask. Subsets are grown
// along a frontier; a popped frontier vertex is either taken into S or
// banned from the whole remaining subtree, so no subset repeats.
template <class F>
void for_each_connected_subset(const Graph& g, int root, int min_size, int max_size, F&& visit) {
    if (g.n() > 64) throw std::invalid_argument("for_each_connected_subset: n > 64");
    struct Rec {
        const Graph& g;
        int min_size, max_size;
        F& visit;
        void go(uint64_t s, int sz, uint64_t ext, uint64_t banned) {
            while (ext) {
                uint64_t ubit = ext & (~ext + 1);
                ext ^= ubit;
                uint64_t s2 = s | ubit;
                if (sz + 1 >= min_size) visit(s2);
                if (sz + 1 < max_size) {
                    int u = bit_index(ubit);
                    go(s2, sz + 1, ext | (g.adj(u) & ~(s2 | banned | ext)), banned);
                }
                banned |= ubit;
            }
        }
    };
    uint64_t rbit = uint64_t(1) << root;
    if (min_size <= 1 && max_size >= 1) visit(rbit);
    if (max_size < 2) return;
    Rec r{g, min_size, max_size, visit};
    r.go(rbit, 1, g.adj(root), rbit);
}

}  // namespace graphlets
