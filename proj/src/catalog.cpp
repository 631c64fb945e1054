#include "graphlets/catalog.hpp"

#include <algorithm>

#include <json.hpp>

#include "graphlets/generate.hpp"
#include "graphlets/graph_alg.hpp"
#include "graphlets/io.hpp"
#include "graphlets/numeric.hpp"
#include "graphlets/subsets.hpp"

namespace graphlets {

Catalog Catalog::build(int max_size) {
    if (max_size < 2 || max_size > 9) throw CatalogError("catalog: max_size must be in 2..9");
    Catalog cat;
    cat.max_size_ = max_size;
    for (int s = 2; s <= max_size; ++s) {
        for (Graph& rep : generate_connected(s)) {
            GraphClass gc;
            gc.code = canonical_code(rep);
            gc.rep = std::move(rep);
            gc.size = s;
            gc.edges = gc.rep.edge_count();
            cat.classes_.push_back(std::move(gc));
        }
    }
    cat.finish_build();
    return cat;
}

void Catalog::finish_build() {
    gamma_begin_.assign(max_size_ + 2, 0);
    theta_begin_.assign(max_size_ + 2, 0);
    graphlets_.clear();
    gamma_by_code_.clear();
    theta_by_code_.clear();

    for (size_t gi = 0; gi < classes_.size(); ++gi) {
        GraphClass& gc = classes_[gi];
        gc.theta_begin = int(graphlets_.size());
        OrbitPartition orbits = automorphism_orbits(gc.rep);
        std::vector<int> orbit_size(orbits.orbit_count, 0);
        for (int v = 0; v < gc.rep.n(); ++v) orbit_size[orbits.orbit_id[v]]++;
        for (int k = 0; k < orbits.orbit_count; ++k) {
            GraphletClass t;
            t.gamma = int(gi);
            t.root = orbits.reps[k];
            t.orbit_size = orbit_size[k];
            t.root_degree = gc.rep.degree(t.root);
            t.root_ecc = eccentricity(gc.rep, t.root);
            t.code = rooted_code(gc.rep, t.root);
            theta_by_code_.emplace(t.code, int(graphlets_.size()));
            graphlets_.push_back(std::move(t));
        }
        gc.theta_end = int(graphlets_.size());
        gamma_by_code_.emplace(gc.code, int(gi));
        gamma_begin_[gc.size + 1] = int(gi) + 1;
        theta_begin_[gc.size + 1] = gc.theta_end;
    }
    for (int s = 1; s <= max_size_ + 1; ++s) {
        gamma_begin_[s] = std::max(gamma_begin_[s], gamma_begin_[s - 1]);
        theta_begin_[s] = std::max(theta_begin_[s], theta_begin_[s - 1]);
    }

    root_counts_.clear();
    root_counts_.resize(graphlets_.size());

    // Attach the published <=5 numbering and validate it structurally: the
    // mapping must be a bijection between the table entries of each size and
    // the catalog's rooted classes of that size.
    theta_by_przulj_.assign(73, -1);
    int expect = 0;
    for (const PrzuljEntry& e : przulj_orbit_table()) {
        int nv = 0;
        for (auto& [u, v] : e.edges) nv = std::max({nv, u + 1, v + 1});
        if (nv > max_size_) continue;
        Graph g(nv);
        for (auto& [u, v] : e.edges) g.add_edge(u, v);
        GraphletId t = classify_rooted(g, e.root);
        if (graphlets_[t].przulj != -1)
            throw CatalogError("przulj table: duplicate assignment for theta " + std::to_string(t));
        graphlets_[t].przulj = e.orbit;
        classes_[graphlets_[t].gamma].przulj = e.graph;
        theta_by_przulj_[e.orbit] = t;
        ++expect;
    }
    if (expect != theta_end(std::min(max_size_, 5)))
        throw CatalogError("przulj table: not a bijection onto the <=5 rooted classes");
    // size-group boundaries of the published numbering
    static const int size_lo[6] = {0, 0, 0, 1, 4, 15};
    static const int size_hi[6] = {0, 0, 0, 3, 14, 72};
    for (GraphletId t = 0; t < theta_end(std::min(max_size_, 5)); ++t) {
        int s = size_of(t);
        if (graphlets_[t].przulj < size_lo[s] || graphlets_[t].przulj > size_hi[s])
            throw CatalogError("przulj table: orbit number outside its size group");
    }
}

int Catalog::find_gamma(const CanonicalCode& code) const {
    auto it = gamma_by_code_.find(code);
    return it == gamma_by_code_.end() ? -1 : it->second;
}

GraphletId Catalog::classify_rooted(const Graph& g, int root) const {
    if (g.n() < 2 || g.n() > max_size_)
        throw CatalogError("classify_rooted: size " + std::to_string(g.n()) + " outside 2.." +
                           std::to_string(max_size_));
    if (!is_connected(g)) throw CatalogError("classify_rooted: graph is disconnected");
    auto it = theta_by_code_.find(rooted_code(g, root));
    if (it == theta_by_code_.end()) throw CatalogError("classify_rooted: unknown rooted class");
    return it->second;
}

const std::vector<int64_t>& Catalog::root_counts_row(GraphletId j) const {
    std::lock_guard<std::mutex> lock(*cache_mu_);
    if (!root_counts_[j]) {
        const GraphletClass& t = graphlets_[j];
        const GraphClass& gc = classes_[t.gamma];
        auto row = std::make_unique<std::vector<int64_t>>(theta_end(gc.size), 0);
        for_each_connected_subset(gc.rep, t.root, 2, gc.size, [&](uint64_t mask) {
            std::vector<int> verts;
            int pos = -1;
            for (uint64_t m = mask; m; m &= m - 1) {
                int v = bit_index(m & -m);
                if (v == t.root) pos = int(verts.size());
                verts.push_back(v);
            }
            (*row)[classify_rooted(gc.rep.induced(verts), pos)]++;
        });
        root_counts_[j] = std::move(row);
    }
    return *root_counts_[j];
}

int64_t Catalog::root_counts_within(GraphletId j, GraphletId i) const {
    if (j < 0 || j >= theta_count() || i < 0 || i >= theta_count())
        throw CatalogError("root_counts_within: theta out of range");
    if (size_of(i) > size_of(j)) throw CatalogError("root_counts_within: |g_i| > |g_j|");
    return root_counts_row(j)[i];
}

GraphletId Catalog::theta_of_przulj(int orbit) const {
    if (orbit < 0 || orbit >= int(theta_by_przulj_.size())) return -1;
    return theta_by_przulj_[orbit];
}

std::string Catalog::export_json() const {
    nlohmann::json out;
    out["max_size"] = max_size_;
    auto& arr = out["classes"] = nlohmann::json::array();
    for (size_t gi = 0; gi < classes_.size(); ++gi) {
        const GraphClass& gc = classes_[gi];
        nlohmann::json c;
        c["gamma"] = gi;
        c["size"] = gc.size;
        c["edges"] = gc.edges;
        c["code"] = gc.code.hex();
        c["graph6"] = write_graph6(gc.rep);
        if (gc.przulj >= 0) c["przulj_graph"] = gc.przulj;
        auto& ths = c["thetas"] = nlohmann::json::array();
        for (int t = gc.theta_begin; t < gc.theta_end; ++t) {
            const GraphletClass& g = graphlets_[t];
            nlohmann::json tj;
            tj["theta"] = t;
            tj["root"] = g.root;
            tj["orbit_size"] = g.orbit_size;
            tj["root_degree"] = g.root_degree;
            tj["root_ecc"] = g.root_ecc;
            if (g.przulj >= 0) tj["przulj"] = g.przulj;
            ths.push_back(std::move(tj));
        }
        arr.push_back(std::move(c));
    }
    return out.dump(2);
}

Catalog Catalog::import_json(const std::string& text) {
    nlohmann::json in = nlohmann::json::parse(text);
    Catalog cat;
    cat.max_size_ = in.at("max_size").get<int>();
    if (cat.max_size_ < 2 || cat.max_size_ > 9) throw CatalogError("catalog import: bad max_size");
    for (auto& c : in.at("classes")) {
        GraphClass gc;
        gc.rep = parse_graph6(c.at("graph6").get<std::string>());
        gc.code = canonical_code(gc.rep);
        gc.size = gc.rep.n();
        gc.edges = gc.rep.edge_count();
        if (gc.code.hex() != c.at("code").get<std::string>())
            throw CatalogError("catalog import: canonical code mismatch");
        if (gc.size != c.at("size").get<int>() || gc.edges != c.at("edges").get<int>())
            throw CatalogError("catalog import: structure mismatch");
        cat.classes_.push_back(std::move(gc));
    }
    // The file must list classes in catalog order and be complete; rebuild
    // the derived structure, then verify the per-class orbit counts agree.
    for (size_t gi = 1; gi < cat.classes_.size(); ++gi) {
        const GraphClass& a = cat.classes_[gi - 1];
        const GraphClass& b = cat.classes_[gi];
        if (std::tuple(a.size, a.edges, a.code) >= std::tuple(b.size, b.edges, b.code))
            throw CatalogError("catalog import: classes out of order");
    }
    // connected class counts per size are fixed constants
    static const int64_t kConnectedCounts[] = {0, 1, 1, 2, 6, 21, 112, 853, 11117, 261080};
    std::vector<int64_t> per_size(cat.max_size_ + 1, 0);
    for (const GraphClass& gc : cat.classes_) {
        if (gc.size < 2 || gc.size > cat.max_size_)
            throw CatalogError("catalog import: class size outside 2..max_size");
        per_size[gc.size]++;
    }
    for (int s = 2; s <= cat.max_size_; ++s)
        if (per_size[s] != kConnectedCounts[s])
            throw CatalogError("catalog import: incomplete class list at size " +
                               std::to_string(s));
    cat.finish_build();
    size_t gi = 0;
    for (auto& c : in.at("classes")) {
        int want = int(c.at("thetas").size());
        if (want != cat.classes_[gi].theta_end - cat.classes_[gi].theta_begin)
            throw CatalogError("catalog import: orbit count mismatch");
        ++gi;
    }
    return cat;
}

}  // namespace graphlets
