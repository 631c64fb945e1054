#pragma once

#include <string>
#include <vector>

#include "graphlets/catalog.hpp"
#include "graphlets/graph.hpp"

namespace graphlets {

struct GddError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Per-vertex graphlet counts, one column per theta in [theta_lo, theta_hi).
// D[v][i] = number of vertex subsets S containing v that induce the class
// U(g_i) with v in the root orbit (one count per subset, not per embedding).
struct GddMatrix {
    int n = 0;
    int min_size = 2;
    int max_size = 0;
    GraphletId theta_lo = 0, theta_hi = 0;
    std::vector<std::vector<int64_t>> rows;

    int cols() const { return theta_hi - theta_lo; }
    int64_t at(int v, GraphletId t) const { return rows[v][t - theta_lo]; }

    // Columns of one exact size, as their own matrix.
    GddMatrix block(int exact_size, const Catalog& c) const;

    // Sum of row v over the columns of one exact size.
    int64_t size_sum(int v, int exact_size, const Catalog& c) const;
};

// Exact gdd of a connected graph via rooted connected-subset enumeration.
// Requires 2 <= max_size <= min(n-1, catalog max) and n <= 32. `jobs`
// parallelizes over root vertices; results are identical for any value.
GddMatrix compute_gdd(const Graph& g, int max_size, const Catalog& c, int jobs = 1);

// One gds row by brute force: every vertex subset containing v, connectivity
// checked by union-find, then classified. Structurally independent of
// compute_gdd's enumeration; intended for n <= 12.
std::vector<int64_t> oracle_gds(const Graph& g, int v, int max_size, const Catalog& c);

// One row of subset counts with the size cap made explicit. Strict rows cap
// subsets at n-1 (proper subgraphs only); with include_whole_graph the
// whole vertex set counts when it is within max_size. Length
// c.theta_end(max_size).
std::vector<int64_t> gds_row(const Graph& g, int v, int max_size, const Catalog& c,
                             bool include_whole_graph);

// Projection of an exact-size-(n-k+1) block down to every size <= n-k, valid
// when the source graph is k-vertex-connected. Divisions must be exact;
// a remainder means the connectivity hypothesis fails.
GddMatrix project_gdd(const GddMatrix& block, int n, int k, const Catalog& c);

// Drop of v's gds when x is deleted. Entries are nonnegative and equal the
// number of subsets through both v and x; a class whose root eccentricity is
// below d(v,x) can never decrease.
struct DeletionDelta {
    int v = 0, x = 0;
    int distance = 0;
    GraphletId theta_lo = 0, theta_hi = 0;
    std::vector<int64_t> delta;
    bool localization_ok = true;
};
DeletionDelta deletion_delta(const Graph& g, int v, int x, int max_size, const Catalog& c);

// Catalog-free gds fingerprint: sorted (rooted class code, count) pairs over
// proper connected subsets containing v of size <= max_size.
using GdsSignature = std::vector<std::pair<RootedCode, int64_t>>;
GdsSignature gds_signature(const Graph& g, int v, int max_size);

// CSV: one header line of theta ids (or published orbit ids), one row per
// vertex. JSON carries the column metadata needed to reload the matrix.
std::string gdd_to_csv(const GddMatrix& d, const Catalog& c, bool przulj_headers);
std::string gdd_to_json_text(const GddMatrix& d, const Catalog& c);
GddMatrix gdd_from_json_text(const std::string& text, const Catalog& c);
GddMatrix gdd_from_csv_text(const std::string& text, const Catalog& c);

}  // namespace graphlets
