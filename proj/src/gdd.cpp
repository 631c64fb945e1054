#include "graphlets/gdd.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "graphlets/graph_alg.hpp"
#include "graphlets/numeric.hpp"
#include "graphlets/subsets.hpp"

namespace graphlets {

namespace {

GraphletId classify_mask(const Graph& g, uint64_t mask, int v, const Catalog& c) {
    std::vector<int> verts;
    int pos = -1;
    for (uint64_t m = mask; m; m &= m - 1) {
        int u = bit_index(m & -m);
        if (u == v) pos = int(verts.size());
        verts.push_back(u);
    }
    return c.classify_rooted(g.induced(verts), pos);
}

void check_engine_pre(const Graph& g, int max_size, const Catalog& c) {
    if (g.n() > 32) throw GddError("gdd: n > 32 is outside the enumeration contract");
    if (!is_connected(g)) throw GddError("gdd: input graph is disconnected");
    if (max_size < 2 || max_size > std::min(g.n() - 1, c.max_size()))
        throw GddError("gdd: max_size must be in 2..min(n-1, catalog max)");
}

}  // namespace

GddMatrix GddMatrix::block(int exact_size, const Catalog& c) const {
    if (exact_size < min_size || exact_size > max_size)
        throw GddError("gdd block: size outside matrix range");
    GddMatrix out;
    out.n = n;
    out.min_size = out.max_size = exact_size;
    out.theta_lo = c.theta_begin(exact_size);
    out.theta_hi = c.theta_end(exact_size);
    out.rows.reserve(n);
    for (int v = 0; v < n; ++v)
        out.rows.emplace_back(rows[v].begin() + (out.theta_lo - theta_lo),
                              rows[v].begin() + (out.theta_hi - theta_lo));
    return out;
}

int64_t GddMatrix::size_sum(int v, int exact_size, const Catalog& c) const {
    int64_t s = 0;
    for (GraphletId t = c.theta_begin(exact_size); t < c.theta_end(exact_size); ++t)
        s = checked_add(s, at(v, t));
    return s;
}

std::vector<int64_t> gds_row(const Graph& g, int v, int max_size, const Catalog& c,
                             bool include_whole_graph) {
    if (max_size > c.max_size()) throw GddError("gds_row: max_size beyond catalog");
    std::vector<int64_t> row(c.theta_end(max_size), 0);
    int cap = std::min(max_size, include_whole_graph ? g.n() : g.n() - 1);
    if (cap >= 2)
        for_each_connected_subset(g, v, 2, cap,
                                  [&](uint64_t mask) { row[classify_mask(g, mask, v, c)]++; });
    return row;
}

GddMatrix compute_gdd(const Graph& g, int max_size, const Catalog& c, int jobs) {
    check_engine_pre(g, max_size, c);
    GddMatrix d;
    d.n = g.n();
    d.min_size = 2;
    d.max_size = max_size;
    d.theta_lo = 0;
    d.theta_hi = c.theta_end(max_size);
    d.rows.assign(g.n(), {});

    auto work = [&](int lo, int hi) {
        for (int v = lo; v < hi; ++v) d.rows[v] = gds_row(g, v, max_size, c, false);
    };
    if (jobs <= 1 || g.n() == 1) {
        work(0, g.n());
    } else {
        int t = std::min(jobs, g.n());
        std::vector<std::thread> workers;
        for (int i = 0; i < t; ++i)
            workers.emplace_back(work, g.n() * i / t, g.n() * (i + 1) / t);
        for (auto& w : workers) w.join();
    }
    return d;
}

std::vector<int64_t> oracle_gds(const Graph& g, int v, int max_size, const Catalog& c) {
    check_engine_pre(g, max_size, c);
    int n = g.n();
    std::vector<int64_t> row(c.theta_end(max_size), 0);
    std::vector<int> parent(n), verts;
    for (uint64_t mask = 1; mask < (uint64_t(1) << n); ++mask) {
        if (!((mask >> v) & 1)) continue;
        int sz = Graph::popcount(mask);
        if (sz < 2 || sz > max_size) continue;

        // union-find connectivity over the subset
        verts.clear();
        for (uint64_t m = mask; m; m &= m - 1) verts.push_back(bit_index(m & -m));
        for (int u : verts) parent[u] = u;
        auto find = [&](int u) {
            while (parent[u] != u) u = parent[u] = parent[parent[u]];
            return u;
        };
        for (size_t i = 0; i < verts.size(); ++i)
            for (size_t j = i + 1; j < verts.size(); ++j)
                if (g.has_edge(verts[i], verts[j])) parent[find(verts[i])] = find(verts[j]);
        int roots = 0;
        for (int u : verts) roots += (find(u) == u);
        if (roots != 1) continue;

        row[classify_mask(g, mask, v, c)]++;
    }
    return row;
}

GddMatrix project_gdd(const GddMatrix& block, int n, int k, const Catalog& c) {
    if (k < 2) throw GddError("project_gdd: k must be >= 2");
    int src = n - k + 1;
    if (block.min_size != src || block.max_size != src)
        throw GddError("project_gdd: expected the exact-size-" + std::to_string(src) + " block");
    if (block.n != n) throw GddError("project_gdd: row count differs from n");
    if (n - k < 2) throw GddError("project_gdd: no target sizes below " + std::to_string(src));

    GddMatrix out;
    out.n = n;
    out.min_size = 2;
    out.max_size = n - k;
    out.theta_lo = 0;
    out.theta_hi = c.theta_end(n - k);
    out.rows.assign(n, std::vector<int64_t>(out.cols(), 0));

    for (int v = 0; v < n; ++v) {
        for (GraphletId j = block.theta_lo; j < block.theta_hi; ++j) {
            int64_t dj = block.at(v, j);
            if (dj == 0) continue;
            const std::vector<int64_t>& rc = c.root_counts_row(j);
            for (GraphletId i = 0; i < out.theta_hi; ++i)
                if (rc[i]) out.rows[v][i] = checked_add(out.rows[v][i], checked_mul(dj, rc[i]));
        }
        for (GraphletId i = 0; i < out.theta_hi; ++i) {
            int64_t den = binom(n - c.size_of(i), k - 1);
            if (out.rows[v][i] % den != 0)
                throw GddError("project_gdd: inexact division, connectivity hypothesis violated");
            out.rows[v][i] /= den;
        }
    }
    return out;
}

DeletionDelta deletion_delta(const Graph& g, int v, int x, int max_size, const Catalog& c) {
    if (v == x) throw GddError("deletion_delta: v == x");
    check_engine_pre(g, max_size, c);
    Graph h = g.without_vertex(x);
    if (!is_connected(h))
        throw GddError("deletion_delta: deleting x disconnects the graph; run articulation analysis");

    std::vector<int64_t> row_g = gds_row(g, v, max_size, c, false);
    std::vector<int64_t> row_h = gds_row(h, v - (v > x ? 1 : 0), max_size, c, true);

    DeletionDelta out;
    out.v = v;
    out.x = x;
    out.distance = bfs_distances(g, v)[x];
    out.theta_lo = 0;
    out.theta_hi = c.theta_end(max_size);
    out.delta.resize(row_g.size());
    for (size_t i = 0; i < row_g.size(); ++i) {
        out.delta[i] = row_g[i] - row_h[i];
        if (out.delta[i] < 0) throw GddError("deletion_delta: count increased, engine defect");
        if (out.delta[i] > 0 && c.graphlets()[i].root_ecc < out.distance) out.localization_ok = false;
    }
    return out;
}

GdsSignature gds_signature(const Graph& g, int v, int max_size) {
    std::map<RootedCode, int64_t> acc;
    int cap = std::min(max_size, g.n() - 1);
    if (cap >= 2)
        for_each_connected_subset(g, v, 2, cap, [&](uint64_t mask) {
            std::vector<int> verts;
            int pos = -1;
            for (uint64_t m = mask; m; m &= m - 1) {
                int u = bit_index(m & -m);
                if (u == v) pos = int(verts.size());
                verts.push_back(u);
            }
            acc[rooted_code(g.induced(verts), pos)]++;
        });
    return GdsSignature(acc.begin(), acc.end());
}

std::string gdd_to_csv(const GddMatrix& d, const Catalog& c, bool przulj_headers) {
    std::ostringstream out;
    out << "# n=" << d.n << " min_size=" << d.min_size << " max_size=" << d.max_size
        << " catalog_max_size=" << c.max_size() << "\n";
    for (GraphletId t = d.theta_lo; t < d.theta_hi; ++t) {
        if (t > d.theta_lo) out << ',';
        if (przulj_headers) {
            int p = c.graphlets()[t].przulj;
            if (p < 0) throw GddError("csv: no published orbit id for theta " + std::to_string(t));
            out << 'o' << p;
        } else {
            out << 't' << t;
        }
    }
    out << '\n';
    for (int v = 0; v < d.n; ++v) {
        for (int i = 0; i < d.cols(); ++i) {
            if (i) out << ',';
            out << d.rows[v][i];
        }
        out << '\n';
    }
    return out.str();
}

std::string gdd_to_json_text(const GddMatrix& d, const Catalog& c) {
    nlohmann::json j;
    j["n"] = d.n;
    j["min_size"] = d.min_size;
    j["max_size"] = d.max_size;
    j["catalog_max_size"] = c.max_size();
    j["theta_lo"] = d.theta_lo;
    j["theta_hi"] = d.theta_hi;
    auto& cols = j["columns"] = nlohmann::json::array();
    for (GraphletId t = d.theta_lo; t < d.theta_hi; ++t) {
        nlohmann::json col;
        col["theta"] = t;
        col["gamma"] = c.underlying(t);
        col["size"] = c.size_of(t);
        col["code"] = c.classes()[c.underlying(t)].code.hex();
        cols.push_back(std::move(col));
    }
    j["rows"] = d.rows;
    return j.dump();
}

GddMatrix gdd_from_json_text(const std::string& text, const Catalog& c) {
    nlohmann::json j = nlohmann::json::parse(text);
    GddMatrix d;
    d.n = j.at("n").get<int>();
    d.min_size = j.at("min_size").get<int>();
    d.max_size = j.at("max_size").get<int>();
    d.theta_lo = j.at("theta_lo").get<GraphletId>();
    d.theta_hi = j.at("theta_hi").get<GraphletId>();
    if (j.at("catalog_max_size").get<int>() > c.max_size())
        throw GddError("gdd import: catalog smaller than the one that wrote the file");
    if (d.max_size > c.max_size() || d.theta_hi > c.theta_end(d.max_size) ||
        d.theta_lo != c.theta_begin(d.min_size) || d.theta_hi != c.theta_end(d.max_size))
        throw GddError("gdd import: column range does not match the catalog");
    for (auto& col : j.at("columns")) {
        GraphletId t = col.at("theta").get<GraphletId>();
        if (c.classes()[c.underlying(t)].code.hex() != col.at("code").get<std::string>())
            throw GddError("gdd import: column class code mismatch at theta " + std::to_string(t));
    }
    d.rows = j.at("rows").get<std::vector<std::vector<int64_t>>>();
    if (int(d.rows.size()) != d.n) throw GddError("gdd import: row count mismatch");
    for (auto& r : d.rows)
        if (int(r.size()) != d.cols()) throw GddError("gdd import: column count mismatch");
    return d;
}

GddMatrix gdd_from_csv_text(const std::string& text, const Catalog& c) {
    std::istringstream in(text);
    std::string line;
    GddMatrix d;
    bool have_meta = false, have_header = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream meta(line.substr(1));
            std::string kv;
            while (meta >> kv) {
                auto eq = kv.find('=');
                if (eq == std::string::npos) continue;
                std::string key = kv.substr(0, eq);
                int val = std::stoi(kv.substr(eq + 1));
                if (key == "n") d.n = val;
                if (key == "min_size") d.min_size = val;
                if (key == "max_size") d.max_size = val;
                have_meta = true;
            }
            continue;
        }
        if (!have_header) {
            have_header = true;  // column ids are implied by the size range
            continue;
        }
        std::vector<int64_t> row;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) row.push_back(std::stoll(cell));
        d.rows.push_back(std::move(row));
    }
    if (!have_meta) throw GddError("gdd csv: missing '# n=.. min_size=.. max_size=..' metadata");
    if (d.max_size > c.max_size()) throw GddError("gdd csv: catalog too small for max_size");
    d.theta_lo = c.theta_begin(d.min_size);
    d.theta_hi = c.theta_end(d.max_size);
    if (int(d.rows.size()) != d.n) throw GddError("gdd csv: row count mismatch");
    for (auto& r : d.rows)
        if (int(r.size()) != d.cols()) throw GddError("gdd csv: column count mismatch");
    return d;
}

}  // namespace graphlets
