#include "graphlets/motifs.hpp"

#include <algorithm>
#include <map>

#include "graphlets/generate.hpp"
#include "graphlets/graph_alg.hpp"
#include "graphlets/numeric.hpp"

namespace graphlets {

MotifVector motifs_from_gdd(const GddMatrix& d, const Catalog& c) {
    if (d.min_size != 2) throw GddError("motifs_from_gdd: matrix must cover sizes from 2");
    MotifVector m;
    m.min_size = 2;
    m.max_size = d.max_size;
    m.gamma_lo = c.gamma_begin(2);
    m.gamma_hi = c.gamma_end(d.max_size);
    m.counts.assign(m.gamma_hi - m.gamma_lo, 0);

    for (int v = 0; v < d.n; ++v)
        for (GraphletId t = d.theta_lo; t < d.theta_hi; ++t)
            m.counts[c.underlying(t) - m.gamma_lo] =
                checked_add(m.counts[c.underlying(t) - m.gamma_lo], d.at(v, t));

    for (int g = m.gamma_lo; g < m.gamma_hi; ++g) {
        int size = c.classes()[g].size;
        if (m.counts[g - m.gamma_lo] % size != 0)
            throw GddError("motifs_from_gdd: inexact division, matrix is not a valid gdd");
        m.counts[g - m.gamma_lo] /= size;
    }
    return m;
}

MotifVector count_motifs_direct(const Graph& g, int max_size, const Catalog& c) {
    if (g.n() > 24) throw GddError("count_motifs_direct: mask loop limited to n <= 24");
    MotifVector m;
    m.min_size = 2;
    m.max_size = max_size;
    m.gamma_lo = c.gamma_begin(2);
    m.gamma_hi = c.gamma_end(max_size);
    m.counts.assign(m.gamma_hi - m.gamma_lo, 0);

    for (uint64_t mask = 1; mask < (uint64_t(1) << g.n()); ++mask) {
        int sz = Graph::popcount(mask);
        if (sz < 2 || sz > max_size) continue;
        if (!mask_connected(g, mask)) continue;
        int gamma = c.find_gamma(canonical_code(g.induced(mask)));
        if (gamma < 0) throw GddError("count_motifs_direct: class missing from catalog");
        m.counts[gamma - m.gamma_lo]++;
    }
    return m;
}

std::optional<DistinguishingPair> find_distinguishing_pair(int n, int max_size, const Catalog& c) {
    if (n > 8) throw GddError("find_distinguishing_pair: exhaustive mode is limited to n <= 8");

    std::vector<Graph> classes = generate_connected(n);
    using RowMultiset = std::vector<std::vector<int64_t>>;

    // bucket class indices by motif vector, remembering each one's sorted
    // gdd rows
    std::map<std::vector<int64_t>, std::vector<std::pair<int, RowMultiset>>> buckets;
    for (size_t i = 0; i < classes.size(); ++i) {
        GddMatrix d = compute_gdd(classes[i], max_size, c);
        MotifVector m = motifs_from_gdd(d, c);
        RowMultiset rows = d.rows;
        std::sort(rows.begin(), rows.end());
        buckets[m.counts].push_back({int(i), std::move(rows)});
    }

    for (auto& [motif, members] : buckets) {
        for (size_t a = 0; a < members.size(); ++a)
            for (size_t b = a + 1; b < members.size(); ++b)
                if (members[a].second != members[b].second) {
                    DistinguishingPair out;
                    out.g1 = classes[members[a].first];
                    out.g2 = classes[members[b].first];
                    out.motifs.min_size = 2;
                    out.motifs.max_size = max_size;
                    out.motifs.gamma_lo = c.gamma_begin(2);
                    out.motifs.gamma_hi = c.gamma_end(max_size);
                    out.motifs.counts = motif;
                    return out;
                }
    }
    return std::nullopt;
}

}  // namespace graphlets
