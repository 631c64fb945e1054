#pragma once

#include <vector>

#include "graphlets/gdd.hpp"

namespace graphlets {

// Everything here reads only the matrix, never the graph: the point is that
// the counts alone settle the connectivity questions.

enum class ConnVerdict {
    KConnected,
    UniqueArticulation,
    MultipleArticulations,
    CutCore,
};

struct ConnectivityReport {
    int n = 0;
    int k = 0;
    ConnVerdict verdict = ConnVerdict::KConnected;
    int articulation = -1;
    std::vector<int> core;
    std::vector<int64_t> per_vertex_sums;
};

struct IntegrityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// True iff every vertex has exactly C(n-1, k-1) graphlets of size n-k+1.
bool k_connectivity_from_gdd(const GddMatrix& block, int n, int k);

// Classifies a connected source graph from its exact-size-(n-1) block:
// all n vertices hit the sum n-1 -> 2-connected; exactly one -> that vertex
// is the unique articulation; zero -> several articulations. Any other
// cardinality is impossible for a valid gdd and raises IntegrityError.
ConnectivityReport articulation_analysis(const GddMatrix& block, int n);

// Vertices attaining the (@) sum C(n-1, k-1) in the exact-size-(n-k+1)
// block of a (k-1)-connected graph. The count must be <= k-1 or exactly n;
// when 0 < p <= k-1 the returned vertices lie in every (k-1)-cut.
std::vector<int> cut_core_vertices(const GddMatrix& block, int n, int k);

}  // namespace graphlets
