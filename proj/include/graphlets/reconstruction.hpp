#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graphlets/gdd.hpp"

namespace graphlets {

// Multiset of the n vertex-deleted subgraphs, keyed by gamma.
struct Deck {
    int n = 0;
    std::vector<std::pair<int, int64_t>> classes;  // (gamma, multiplicity)
};

// Deck of a 2-connected graph recovered from its exact-size-(n-1) block:
// each card of class F shows up once per rooting per vertex, so summing the
// F-columns over all rows and dividing by n-1 gives its multiplicity.
Deck deck_from_gdd(const GddMatrix& block, int n, const Catalog& c);

// Rebuilds a tree from its gdd: locate the center via longest path-end
// classes, then peel maximal trunked-tree classes off the center's row.
Graph reconstruct_tree(const GddMatrix& d, int n, const Catalog& c);

struct ReconstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// For a rigid size-(n-1) class: every row may touch the class in at most
// one orbit. Rows touching it nowhere are only allowed for the single
// deleted vertex of the k=1 case.
bool check_condition_star(const GddMatrix& d, GraphletId theta, const Catalog& c);

struct AsymCertificate {
    bool two_connected = false;
    int chosen_gamma = -1;
    GraphletId chosen_theta = -1;
    bool rigid = false;
    bool cond_star = false;
    int k = 0;
    int deleted_row = -1;
    std::vector<int> deleted_candidates;
    std::vector<int> orbit_vertex;  // row -> vertex of the rebuilt card (-1 for the deleted row)
    std::vector<int> degree_h;      // degrees recovered by projection
};

struct ReconstructionReport {
    std::optional<Graph> result;
    std::string failure_stage;  // empty on success
    AsymCertificate certificate;
    // result vertex carrying each input row (deleted row -> the new vertex)
    std::vector<int> row_to_vertex;
};

// Rebuild of a 2-connected graph whose gdd exhibits a rigid vertex-deleted
// class satisfying the one-orbit-per-row condition. The returned graph's
// gdd is recomputed and compared against the input before reporting success.
ReconstructionReport reconstruct_asymmetric(const GddMatrix& d, int n, const Catalog& c);

// Graph-side oracle for the same hypotheses, computed from the graph itself
// (tests and scans only; the matrix-side path never sees the graph).
struct AsymHypotheses {
    bool two_connected = false;
    struct Qualifying {
        CanonicalCode code;
        std::vector<int> deleted_vertices;
    };
    std::vector<Qualifying> qualifying;  // rigid deletion classes meeting (*), in deletion order
};
AsymHypotheses asym_hypotheses(const Graph& h);

}  // namespace graphlets
