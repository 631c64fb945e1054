#include "graphlets/generate.hpp"

#include <algorithm>
#include <unordered_set>

#include "graphlets/canonical.hpp"
#include "graphlets/graph_alg.hpp"

namespace graphlets {

namespace {

void sort_reps(std::vector<Graph>& reps) {
    std::vector<std::pair<std::pair<int, CanonicalCode>, Graph>> keyed;
    keyed.reserve(reps.size());
    for (auto& g : reps) keyed.push_back({{g.edge_count(), canonical_code(g)}, g});
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    reps.clear();
    for (auto& k : keyed) reps.push_back(std::move(k.second));
}

Graph extend(const Graph& parent, uint64_t mask) {
    int k = parent.n();
    Graph child(k + 1);
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v)
            if (parent.has_edge(u, v)) child.add_edge(u, v);
    for (uint64_t m = mask; m; m &= m - 1) child.add_edge(k, bit_index(m & -m));
    return child;
}

// One augmentation level. `connected_only` controls both the admissible
// masks (nonempty) and the canonical-deletion rule (delete a non-cut vertex).
std::vector<Graph> augment(const std::vector<Graph>& parents, bool connected_only) {
    std::vector<Graph> out;
    for (const Graph& p : parents) {
        int k = p.n();
        std::unordered_set<MaskCode, CodeHash> seen_masks;
        uint64_t mask_lo = connected_only ? 1 : 0;
        uint64_t mask_hi = uint64_t(1) << k;
        for (uint64_t mask = mask_lo; mask < mask_hi; ++mask) {
            if (!seen_masks.insert(mask_code(p, mask)).second) continue;

            Graph child = extend(p, mask);
            int nn = child.n();
            std::vector<int> label = canonical_labeling(child);

            // canonical deletion vertex: highest canonical label among the
            // vertices whose removal is admissible
            int del = -1;
            for (int v = 0; v < nn; ++v) {
                if (connected_only && nn > 1 && !is_connected(child.without_vertex(v))) continue;
                if (del < 0 || label[v] > label[del]) del = v;
            }
            if (del != nn - 1 && rooted_code(child, nn - 1) != rooted_code(child, del)) continue;

            out.push_back(child.relabeled(label));
        }
    }
    sort_reps(out);
    return out;
}

std::vector<Graph> generate(int n, bool connected_only) {
    if (n < 1) throw std::invalid_argument("generate: n < 1");
    std::vector<Graph> level{Graph(1)};
    for (int k = 1; k < n; ++k) level = augment(level, connected_only);
    return level;
}

}  // namespace

std::vector<Graph> generate_connected(int n) { return generate(n, true); }

std::vector<Graph> generate_all(int n) { return generate(n, false); }

std::vector<Graph> generate_trees(int n) {
    if (n < 1) throw std::invalid_argument("generate_trees: n < 1");
    std::vector<Graph> level{Graph(1)};
    for (int k = 1; k < n; ++k) {
        std::vector<Graph> next;
        std::unordered_set<CanonicalCode, CodeHash> seen;
        for (const Graph& p : level)
            for (int v = 0; v < k; ++v) {
                Graph child = extend(p, uint64_t(1) << v);
                CanonicalCode code = canonical_code(child);
                if (seen.insert(code).second) next.push_back(code.to_graph());
            }
        level = std::move(next);
    }
    sort_reps(level);
    return level;
}

}  // namespace graphlets
