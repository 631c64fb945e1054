#include "graphlets/feasibility.hpp"

#include <algorithm>
#include <sstream>

#include "graphlets/gdd.hpp"
#include "graphlets/generate.hpp"
#include "graphlets/graph_alg.hpp"
#include "graphlets/numeric.hpp"

namespace graphlets {

Gds3Matrix gds3_of_graph(const Graph& g) {
    int n = g.n();
    Gds3Matrix m;
    m.n = n;
    m.rows.assign(n, {0, 0, 0});
    for (int v = 0; v < n; ++v) m.rows[v][0] = g.degree(v);
    for (int v = 0; v < n; ++v)
        for (int a = 0; a < n; ++a) {
            if (a == v) continue;
            for (int b = a + 1; b < n; ++b) {
                if (b == v) continue;
                bool va = g.has_edge(v, a), vb = g.has_edge(v, b), ab = g.has_edge(a, b);
                if (va && vb && ab)
                    m.rows[v][2]++;  // triangle at v
                else if (ab && (va != vb))
                    m.rows[v][1]++;  // induced path with v at the end
            }
        }
    return m;
}

IdentityReport verify_local_identities(const Graph& g, const Catalog& c) {
    int n = g.n();
    IdentityReport rep;

    // engine counts, one component at a time
    std::vector<int64_t> p3end(n, 0), tri(n, 0);
    int p3end_theta = c.classify_rooted(make_path(3), 0);
    int tri_theta = c.classify_rooted(make_complete(3), 0);
    for (uint64_t comp : components(g)) {
        std::vector<int> verts;
        for (uint64_t m = comp; m; m &= m - 1) verts.push_back(bit_index(m & -m));
        if (verts.size() < 3) continue;
        Graph sub = g.induced(comp);
        for (size_t i = 0; i < verts.size(); ++i) {
            std::vector<int64_t> row = gds_row(sub, int(i), 3, c, true);
            p3end[verts[i]] = row[p3end_theta];
            tri[verts[i]] = row[tri_theta];
        }
    }

    for (int v = 0; v < n; ++v) {
        int64_t nbr_deg = 0;
        for (int u : g.neighbors(v)) nbr_deg += g.degree(u);
        if (g.degree(v) != nbr_deg - p3end[v] - 2 * tri[v]) {
            rep.ok = false;
            rep.first_violation = v;
            rep.detail = "vertex identity fails at " + std::to_string(v);
            return rep;
        }
    }

    int64_t common_sum = 0, tri_sum = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.has_edge(u, v)) common_sum += Graph::popcount(g.adj(u) & g.adj(v));
    for (int v = 0; v < n; ++v) tri_sum += tri[v];
    if (common_sum != tri_sum) {
        rep.ok = false;
        rep.detail = "edge-triangle double count fails";
    }
    return rep;
}

namespace {

bool havel_hakimi(std::vector<int64_t> deg) {
    for (int64_t d : deg)
        if (d < 0 || d >= int64_t(deg.size())) return false;
    while (true) {
        std::sort(deg.begin(), deg.end(), std::greater<>());
        if (deg[0] == 0) return true;
        int64_t d = deg[0];
        deg[0] = 0;
        if (d >= int64_t(deg.size())) return false;
        for (int64_t i = 1; i <= d; ++i) {
            if (--deg[i] < 0) return false;
        }
    }
}

}  // namespace

FilterResult filter_candidate(const Gds3Matrix& m) {
    for (auto& r : m.rows)
        for (int64_t x : r)
            if (x < 0) return {false, "negative count"};

    std::vector<int64_t> deg;
    for (auto& r : m.rows) deg.push_back(r[0]);
    int64_t deg_sum = 0, tri_sum = 0;
    for (auto& r : m.rows) {
        deg_sum += r[0];
        tri_sum += r[2];
    }
    if (deg_sum % 2 != 0) return {false, "odd degree sum"};
    if (!havel_hakimi(deg)) return {false, "edge column is not a graphical degree sequence"};
    if (tri_sum % 3 != 0) return {false, "triangle column sum not divisible by 3"};
    for (int v = 0; v < m.n; ++v)
        if (m.rows[v][2] > binom(m.rows[v][0], 2))
            return {false, "triangle count exceeds C(deg,2) at vertex " + std::to_string(v)};
    if (m.has_mid)
        for (int v = 0; v < m.n; ++v)
            if (m.mid[v] != binom(m.rows[v][0], 2) - m.rows[v][2])
                return {false, "mid column violates C(deg,2) - triangles at vertex " + std::to_string(v)};
    return {true, ""};
}

Realizability decide_realizability(const Gds3Matrix& m) {
    Realizability out;
    FilterResult f = filter_candidate(m);
    if (!f.pass) {
        out.kind = Realizability::No;
        out.reason = f.reason;
        return out;
    }
    if (m.n > 8) {
        out.kind = Realizability::Undecided;
        out.reason = "exhaustive search is limited to n <= 8";
        return out;
    }

    std::vector<std::array<int64_t, 3>> want = m.rows;
    std::sort(want.begin(), want.end());
    for (const Graph& g : generate_all(m.n)) {
        Gds3Matrix gm = gds3_of_graph(g);
        std::vector<std::array<int64_t, 3>> have = gm.rows;
        std::sort(have.begin(), have.end());
        if (have == want) {
            out.kind = Realizability::Witness;
            out.witness = g;
            return out;
        }
    }
    out.kind = Realizability::No;
    out.reason = "no graph on " + std::to_string(m.n) + " vertices has this row multiset";
    return out;
}

Gds3Matrix gds3_from_csv(const std::string& text) {
    Gds3Matrix m;
    std::istringstream in(text);
    std::string line;
    int cols = -1;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<int64_t> row;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) row.push_back(std::stoll(cell));
        if (cols < 0) {
            cols = int(row.size());
            if (cols != 3 && cols != 4)
                throw std::runtime_error("gds3 csv: expected 3 or 4 columns");
            m.has_mid = (cols == 4);
        } else if (int(row.size()) != cols) {
            throw std::runtime_error("gds3 csv: ragged rows");
        }
        if (m.has_mid) {
            // column order follows the class ordering: edge, end, mid, triangle
            m.rows.push_back({row[0], row[1], row[3]});
            m.mid.push_back(row[2]);
        } else {
            m.rows.push_back({row[0], row[1], row[2]});
        }
    }
    m.n = int(m.rows.size());
    if (m.n == 0) throw std::runtime_error("gds3 csv: empty matrix");
    return m;
}

std::string gds3_to_csv(const Gds3Matrix& m) {
    std::ostringstream out;
    for (int v = 0; v < m.n; ++v) {
        out << m.rows[v][0] << ',' << m.rows[v][1];
        if (m.has_mid) out << ',' << m.mid[v];
        out << ',' << m.rows[v][2] << '\n';
    }
    return out.str();
}

}  // namespace graphlets
