#pragma once

#include <optional>
#include <vector>

#include "graphlets/gdd.hpp"

namespace graphlets {

// Whole-graph induced counts of every connected class up to max_size, one
// entry per gamma in [gamma_lo, gamma_hi).
struct MotifVector {
    int min_size = 2;
    int max_size = 0;
    int gamma_lo = 0, gamma_hi = 0;
    std::vector<int64_t> counts;

    int64_t at(int gamma) const { return counts[gamma - gamma_lo]; }
    bool operator==(const MotifVector& o) const = default;
};

// Fold a gdd into motif counts: add all rows, merge the rootings of each
// underlying class, divide by the class size. Inexact division means the
// matrix is not a valid gdd.
MotifVector motifs_from_gdd(const GddMatrix& d, const Catalog& c);

// Independent recount straight off the graph: every vertex subset once,
// connectivity filter, unrooted classification.
MotifVector count_motifs_direct(const Graph& g, int max_size, const Catalog& c);

struct DistinguishingPair {
    Graph g1, g2;
    MotifVector motifs;  // shared motif vector
};

// Smallest-index pair of non-isomorphic connected n-vertex graphs with equal
// motif vectors but different gdd row multisets (both up to max_size), or
// nullopt when none exists. Exhaustive; n <= 8.
std::optional<DistinguishingPair> find_distinguishing_pair(int n, int max_size, const Catalog& c);

}  // namespace graphlets
