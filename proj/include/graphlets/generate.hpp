#pragma once

#include <vector>

#include "graphlets/graph.hpp"

namespace graphlets {

// Isomorph-free exhaustive generation by canonical augmentation: graphs are
// grown one vertex at a time, a child is kept iff the new vertex lies in the
// canonical-deletion orbit, and extension masks are deduplicated up to
// automorphisms of the parent. Results are canonically labeled
// representatives sorted by (edge count, canonical code).
std::vector<Graph> generate_connected(int n);

// Same, but over all graphs (disconnected included).
std::vector<Graph> generate_all(int n);

// All trees on n vertices, grown by leaf additions.
std::vector<Graph> generate_trees(int n);

}  // namespace graphlets
