#include "graphlets/connectivity_analysis.hpp"

#include "graphlets/numeric.hpp"

namespace graphlets {

namespace {

std::vector<int64_t> block_sums(const GddMatrix& block, int n, int expected_size) {
    if (block.min_size != block.max_size || block.min_size != expected_size)
        throw IntegrityError("expected the exact-size-" + std::to_string(expected_size) + " block");
    if (block.n != n) throw IntegrityError("block row count differs from n");
    std::vector<int64_t> sums(n, 0);
    for (int v = 0; v < n; ++v)
        for (int64_t x : block.rows[v]) sums[v] = checked_add(sums[v], x);
    return sums;
}

}  // namespace

bool k_connectivity_from_gdd(const GddMatrix& block, int n, int k) {
    std::vector<int64_t> sums = block_sums(block, n, n - k + 1);
    int64_t want = binom(n - 1, k - 1);
    for (int64_t s : sums)
        if (s != want) return false;
    return true;
}

ConnectivityReport articulation_analysis(const GddMatrix& block, int n) {
    ConnectivityReport rep;
    rep.n = n;
    rep.k = 2;
    rep.per_vertex_sums = block_sums(block, n, n - 1);

    int hits = 0, last = -1;
    for (int v = 0; v < n; ++v)
        if (rep.per_vertex_sums[v] == n - 1) {
            ++hits;
            last = v;
        }
    if (hits == n) {
        rep.verdict = ConnVerdict::KConnected;
    } else if (hits == 1) {
        rep.verdict = ConnVerdict::UniqueArticulation;
        rep.articulation = last;
    } else if (hits == 0) {
        rep.verdict = ConnVerdict::MultipleArticulations;
    } else {
        throw IntegrityError("articulation analysis: " + std::to_string(hits) +
                             " of " + std::to_string(n) +
                             " vertices hit the sum n-1; not a valid gdd");
    }
    return rep;
}

std::vector<int> cut_core_vertices(const GddMatrix& block, int n, int k) {
    std::vector<int64_t> sums = block_sums(block, n, n - k + 1);
    int64_t want = binom(n - 1, k - 1);
    std::vector<int> core;
    for (int v = 0; v < n; ++v)
        if (sums[v] == want) core.push_back(v);
    int p = int(core.size());
    if (p > k - 1 && p != n)
        throw IntegrityError("cut core: cardinality " + std::to_string(p) +
                             " is impossible for a (k-1)-connected source");
    return core;
}

}  // namespace graphlets
