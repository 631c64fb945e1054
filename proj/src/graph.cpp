#include "graphlets/graph.hpp"

namespace graphlets {

Graph Graph::induced(uint64_t mask) const {
    if (n_ > 64) throw std::logic_error("Graph::induced(mask): n > 64");
    std::vector<int> verts;
    for (uint64_t m = mask; m; m &= m - 1) verts.push_back(bit_index(m & -m));
    return induced(verts);
}

Graph Graph::induced(const std::vector<int>& verts) const {
    Graph h(int(verts.size()));
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (has_edge(verts[i], verts[j])) h.add_edge(int(i), int(j));
    return h;
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
    Graph h(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (has_edge(u, v)) h.add_edge(perm[u], perm[v]);
    return h;
}

Graph Graph::without_vertex(int x) const {
    std::vector<int> verts;
    verts.reserve(n_ - 1);
    for (int v = 0; v < n_; ++v)
        if (v != x) verts.push_back(v);
    return induced(verts);
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    for (int u = 0; u < n_; ++u)
        if (u != v && has_edge(v, u)) out.push_back(u);
    return out;
}

Graph make_path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph make_cycle(int n) {
    Graph g = make_path(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

Graph make_complete(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph make_star(int n) {
    Graph g(n);
    for (int i = 1; i < n; ++i) g.add_edge(0, i);
    return g;
}

}  // namespace graphlets
