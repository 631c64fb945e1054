#include "graphlets/canonical.hpp"

#include <algorithm>

namespace graphlets {

namespace {

uint64_t fnv1a(uint64_t h, uint64_t x) {
    for (int i = 0; i < 8; ++i) {
        h ^= (x >> (8 * i)) & 0xff;
        h *= 0x100000001b3ull;
    }
    return h;
}

size_t hash_words(uint32_t a, uint32_t b, const std::vector<uint64_t>& ws) {
    uint64_t h = 0xcbf29ce484222325ull;
    h = fnv1a(h, a);
    h = fnv1a(h, b);
    for (uint64_t w : ws) h = fnv1a(h, w);
    return size_t(h);
}

using Cells = std::vector<std::vector<int>>;

// Individualization-refinement search for the minimum adjacency code over
// all leaves of the refinement tree. Exact for every input; intended for the
// desk scales this project works at (n <= ~16).
struct Canonizer {
    int n;
    std::vector<uint64_t> adj;
    std::vector<uint64_t> best;
    std::vector<int> best_label;
    bool have_best = false;

    explicit Canonizer(const Graph& g) : n(g.n()), adj(n) {
        if (n > 64) throw std::invalid_argument("canonical form: n > 64 unsupported");
        for (int v = 0; v < n; ++v) adj[v] = g.adj(v);
    }

    // Equitable refinement: repeatedly split cells by neighbor counts against
    // every cell, keeping splits ordered by count vector. A pure function of
    // (adjacency, ordered partition), so it commutes with relabeling.
    void refine(Cells& cells) const {
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<uint64_t> cmask(cells.size(), 0);
            for (size_t ci = 0; ci < cells.size(); ++ci)
                for (int v : cells[ci]) cmask[ci] |= uint64_t(1) << v;

            Cells out;
            out.reserve(cells.size());
            for (auto& cell : cells) {
                if (cell.size() == 1) {
                    out.push_back(cell);
                    continue;
                }
                std::vector<std::pair<std::vector<int>, int>> keyed;
                keyed.reserve(cell.size());
                for (int v : cell) {
                    std::vector<int> key(cells.size());
                    for (size_t ci = 0; ci < cells.size(); ++ci)
                        key[ci] = Graph::popcount(adj[v] & cmask[ci]);
                    keyed.emplace_back(std::move(key), v);
                }
                std::stable_sort(keyed.begin(), keyed.end(),
                                 [](const auto& a, const auto& b) { return a.first < b.first; });
                size_t i = 0;
                while (i < keyed.size()) {
                    size_t j = i;
                    std::vector<int> run;
                    while (j < keyed.size() && keyed[j].first == keyed[i].first)
                        run.push_back(keyed[j++].second);
                    if (run.size() != cell.size()) changed = true;
                    out.push_back(std::move(run));
                    i = j;
                }
            }
            cells = std::move(out);
        }
    }

    void leaf(const Cells& cells) {
        std::vector<int> order(n);
        int pos = 0;
        for (auto& c : cells) order[pos++] = c[0];

        std::vector<uint64_t> code((size_t(n) * (n - 1) / 2 + 63) / 64, 0);
        int t = 0;
        for (int i = 0; i < n; ++i) {
            uint64_t row = adj[order[i]];
            for (int j = i + 1; j < n; ++j, ++t)
                if ((row >> order[j]) & 1) code[t >> 6] |= uint64_t(1) << (t & 63);
        }
        if (!have_best || code < best) {
            best = std::move(code);
            have_best = true;
            best_label.assign(n, 0);
            for (int i = 0; i < n; ++i) best_label[order[i]] = i;
        }
    }

    void search(Cells cells) {
        refine(cells);
        int target = -1;
        for (size_t i = 0; i < cells.size(); ++i)
            if (cells[i].size() > 1) {
                target = int(i);
                break;
            }
        if (target < 0) {
            leaf(cells);
            return;
        }
        for (int v : cells[target]) {
            Cells child;
            child.reserve(cells.size() + 1);
            for (int i = 0; i < target; ++i) child.push_back(cells[i]);
            child.push_back({v});
            std::vector<int> rest;
            for (int u : cells[target])
                if (u != v) rest.push_back(u);
            child.push_back(std::move(rest));
            for (size_t i = target + 1; i < cells.size(); ++i) child.push_back(cells[i]);
            search(std::move(child));
        }
    }

    void run(Cells initial) {
        // drop empty cells
        Cells start;
        for (auto& c : initial)
            if (!c.empty()) start.push_back(std::move(c));
        search(std::move(start));
    }
};

Cells unit_partition(int n) {
    Cells cells(1);
    for (int v = 0; v < n; ++v) cells[0].push_back(v);
    return cells;
}

}  // namespace

size_t CodeHash::operator()(const CanonicalCode& c) const { return hash_words(c.size, 0, c.bits); }
size_t CodeHash::operator()(const RootedCode& c) const { return hash_words(c.size, 1, c.bits); }
size_t CodeHash::operator()(const MaskCode& c) const { return hash_words(c.size, c.mask_size, c.bits); }

std::string CanonicalCode::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out = std::to_string(size) + ":";
    for (uint64_t w : bits)
        for (int i = 0; i < 16; ++i) out.push_back(digits[(w >> (4 * i)) & 15]);
    return out;
}

Graph CanonicalCode::to_graph() const {
    Graph g{int(size)};
    int t = 0;
    for (uint32_t i = 0; i < size; ++i)
        for (uint32_t j = i + 1; j < size; ++j, ++t)
            if (t >> 6 < int(bits.size()) && ((bits[t >> 6] >> (t & 63)) & 1)) g.add_edge(int(i), int(j));
    return g;
}

CanonicalCode canonical_code(const Graph& g) {
    if (g.n() < 1) throw std::invalid_argument("canonical_code: empty graph");
    Canonizer c(g);
    c.run(unit_partition(g.n()));
    return CanonicalCode{uint32_t(g.n()), std::move(c.best)};
}

std::vector<int> canonical_labeling(const Graph& g) {
    if (g.n() < 1) throw std::invalid_argument("canonical_labeling: empty graph");
    Canonizer c(g);
    c.run(unit_partition(g.n()));
    return c.best_label;
}

RootedCode rooted_code(const Graph& g, int root) {
    if (root < 0 || root >= g.n()) throw std::invalid_argument("rooted_code: bad root");
    Canonizer c(g);
    Cells cells(2);
    cells[0].push_back(root);
    for (int v = 0; v < g.n(); ++v)
        if (v != root) cells[1].push_back(v);
    c.run(std::move(cells));
    return RootedCode{uint32_t(g.n()), std::move(c.best)};
}

MaskCode mask_code(const Graph& g, uint64_t mask) {
    Canonizer c(g);
    Cells cells(2);
    for (int v = 0; v < g.n(); ++v) cells[(mask >> v) & 1 ? 0 : 1].push_back(v);
    uint32_t msize = uint32_t(Graph::popcount(mask));
    c.run(std::move(cells));
    return MaskCode{uint32_t(g.n()), msize, std::move(c.best)};
}

OrbitPartition automorphism_orbits(const Graph& g) {
    int n = g.n();
    if (n < 1) throw std::invalid_argument("automorphism_orbits: empty graph");
    std::vector<int> label = canonical_labeling(g);

    std::vector<RootedCode> codes(n);
    for (int v = 0; v < n; ++v) codes[v] = rooted_code(g, v);

    // group vertices with equal rooted codes, order groups by their smallest
    // canonical label
    std::vector<int> group(n, -1);
    std::vector<int> min_label;
    std::vector<int> rep;
    for (int v = 0; v < n; ++v) {
        for (int u = 0; u < v; ++u)
            if (group[u] >= 0 && codes[u] == codes[v]) {
                group[v] = group[u];
                break;
            }
        if (group[v] < 0) {
            group[v] = int(min_label.size());
            min_label.push_back(label[v]);
            rep.push_back(v);
        } else if (label[v] < min_label[group[v]]) {
            min_label[group[v]] = label[v];
            rep[group[v]] = v;
        }
    }

    std::vector<int> order(min_label.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = int(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return min_label[a] < min_label[b]; });
    std::vector<int> rank(order.size());
    for (size_t i = 0; i < order.size(); ++i) rank[order[i]] = int(i);

    OrbitPartition out;
    out.orbit_count = int(order.size());
    out.orbit_id.resize(n);
    out.reps.resize(order.size());
    for (int v = 0; v < n; ++v) out.orbit_id[v] = rank[group[v]];
    for (size_t i = 0; i < order.size(); ++i) out.reps[rank[order[i]]] = rep[order[i]];
    return out;
}

}  // namespace graphlets
