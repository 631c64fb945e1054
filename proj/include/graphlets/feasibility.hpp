#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "graphlets/catalog.hpp"
#include "graphlets/graph.hpp"

namespace graphlets {

// Candidate n x 3 matrix of per-vertex (edge, path-end, triangle) counts.
// A fourth path-middle column may ride along; it is redundant and checked
// against C(deg, 2) - triangles when present. Counts follow the natural
// size-2/3 convention: every connected 2- or 3-subset counts, including the
// whole graph on tiny inputs, so the first column is always the degree.
struct Gds3Matrix {
    int n = 0;
    std::vector<std::array<int64_t, 3>> rows;  // edge, p3-end, triangle
    bool has_mid = false;
    std::vector<int64_t> mid;
};

// Direct {2,3}-counter (no catalog, no engine): shape-checks every pair of
// co-vertices.
Gds3Matrix gds3_of_graph(const Graph& g);

struct IdentityReport {
    bool ok = true;
    int first_violation = -1;
    std::string detail;
};

// Per-vertex identity deg(v) = sum of neighbor degrees - p3end(v) - 2 tri(v)
// and the global edge-triangle double count, with the graphlet counts taken
// from the enumeration engine and the degree side straight from the
// adjacency. A failure means the engine miscounts, not that g is special.
IdentityReport verify_local_identities(const Graph& g, const Catalog& c);

struct FilterResult {
    bool pass = true;
    std::string reason;
};

// Necessary conditions only: graphical edge column (Havel-Hakimi), triangle
// column sums divisible by 3, per-vertex triangle bound C(deg,2), and the
// exact mid-column identity when a 4th column is present.
FilterResult filter_candidate(const Gds3Matrix& m);

struct Realizability {
    enum Kind { Witness, No, Undecided } kind = Undecided;
    std::optional<Graph> witness;
    std::string reason;
};

// Exhaustive decision for n <= 8: searches all graph classes (disconnected
// included) for one whose {2,3}-gdd row multiset equals m's.
Realizability decide_realizability(const Gds3Matrix& m);

Gds3Matrix gds3_from_csv(const std::string& text);
std::string gds3_to_csv(const Gds3Matrix& m);

}  // namespace graphlets
