#pragma once

#include <vector>

#include "graphlets/graph.hpp"

namespace graphlets {

bool is_connected(const Graph& g);

// Connectivity of the subgraph induced by `mask` (n <= 64). Empty mask is
// not connected.
bool mask_connected(const Graph& g, uint64_t mask);

// Component mask containing v, restricted to `mask`.
uint64_t component_of(const Graph& g, int v, uint64_t mask);

std::vector<uint64_t> components(const Graph& g);

// BFS distances from v; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, int v);

// max_u d(v, u); throws if g is disconnected.
int eccentricity(const Graph& g, int v);

bool is_articulation(const Graph& g, int v);
std::vector<int> articulation_vertices(const Graph& g);

// Largest k such that g is k-vertex-connected. Minimum vertex cut over all
// non-adjacent pairs via unit-capacity max-flow; K_n returns n-1 by
// convention. Disconnected graphs return 0. Requires n >= 2.
int vertex_connectivity(const Graph& g);

inline bool is_biconnected(const Graph& g) { return g.n() >= 3 && vertex_connectivity(g) >= 2; }

}  // namespace graphlets
