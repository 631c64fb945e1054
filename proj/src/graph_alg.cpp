#include "graphlets/graph_alg.hpp"

#include <algorithm>

namespace graphlets {

uint64_t component_of(const Graph& g, int v, uint64_t mask) {
    if (g.n() > 64) throw std::invalid_argument("component_of: n > 64");
    uint64_t seen = uint64_t(1) << v;
    uint64_t frontier = seen;
    while (frontier) {
        uint64_t next = 0;
        for (uint64_t f = frontier; f; f &= f - 1) next |= g.adj(bit_index(f & -f));
        next &= mask & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

bool mask_connected(const Graph& g, uint64_t mask) {
    if (!mask) return false;
    int v = bit_index(mask & -mask);
    return component_of(g, v, mask) == mask;
}

bool is_connected(const Graph& g) {
    if (g.n() == 0) return false;
    if (g.n() == 1) return true;
    uint64_t all = (g.n() == 64) ? ~uint64_t(0) : ((uint64_t(1) << g.n()) - 1);
    return mask_connected(g, all);
}

std::vector<uint64_t> components(const Graph& g) {
    uint64_t all = (g.n() == 64) ? ~uint64_t(0) : ((uint64_t(1) << g.n()) - 1);
    std::vector<uint64_t> out;
    uint64_t left = all;
    while (left) {
        uint64_t c = component_of(g, bit_index(left & -left), left);
        out.push_back(c);
        left &= ~c;
    }
    return out;
}

std::vector<int> bfs_distances(const Graph& g, int v) {
    if (g.n() > 64) throw std::invalid_argument("bfs_distances: n > 64");
    std::vector<int> dist(g.n(), -1);
    dist[v] = 0;
    uint64_t seen = uint64_t(1) << v;
    uint64_t frontier = seen;
    int d = 0;
    while (frontier) {
        uint64_t next = 0;
        for (uint64_t f = frontier; f; f &= f - 1) next |= g.adj(bit_index(f & -f));
        next &= ~seen;
        ++d;
        for (uint64_t f = next; f; f &= f - 1) dist[bit_index(f & -f)] = d;
        seen |= next;
        frontier = next;
    }
    return dist;
}

int eccentricity(const Graph& g, int v) {
    std::vector<int> dist = bfs_distances(g, v);
    int ecc = 0;
    for (int d : dist) {
        if (d < 0) throw std::invalid_argument("eccentricity: graph is disconnected");
        ecc = std::max(ecc, d);
    }
    return ecc;
}

bool is_articulation(const Graph& g, int v) {
    if (g.n() <= 2) return false;
    return !is_connected(g.without_vertex(v));
}

std::vector<int> articulation_vertices(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.n(); ++v)
        if (is_articulation(g, v)) out.push_back(v);
    return out;
}

namespace {

// Unit vertex capacities: max number of internally disjoint s-t paths for
// non-adjacent s,t, via BFS augmentation on the split-node flow network.
int vertex_disjoint_paths(const Graph& g, int s, int t) {
    int n = g.n();
    // node 2v = in, 2v+1 = out
    int N = 2 * n;
    std::vector<std::vector<int>> cap(N, std::vector<int>(N, 0));
    for (int v = 0; v < n; ++v) cap[2 * v][2 * v + 1] = (v == s || v == t) ? n : 1;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && g.has_edge(u, v)) cap[2 * u + 1][2 * v] = n;

    int flow = 0;
    while (true) {
        std::vector<int> prev(N, -1);
        std::vector<int> queue{2 * s};
        prev[2 * s] = 2 * s;
        for (size_t qi = 0; qi < queue.size() && prev[2 * t + 1] < 0; ++qi) {
            int u = queue[qi];
            for (int w = 0; w < N; ++w)
                if (prev[w] < 0 && cap[u][w] > 0) {
                    prev[w] = u;
                    queue.push_back(w);
                }
        }
        if (prev[2 * t + 1] < 0) break;
        for (int w = 2 * t + 1; w != 2 * s; w = prev[w]) {
            cap[prev[w]][w] -= 1;
            cap[w][prev[w]] += 1;
        }
        ++flow;
    }
    return flow;
}

}  // namespace

int vertex_connectivity(const Graph& g) {
    int n = g.n();
    if (n < 2) throw std::invalid_argument("vertex_connectivity: n < 2");
    if (!is_connected(g)) return 0;

    int best = n - 1;  // complete-graph convention
    bool any_pair = false;
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t)
            if (!g.has_edge(s, t)) {
                any_pair = true;
                best = std::min(best, vertex_disjoint_paths(g, s, t));
            }
    return any_pair ? best : n - 1;
}

}  // namespace graphlets
