#pragma once

#include <memory>
#include <mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "graphlets/canonical.hpp"
#include "graphlets/graph.hpp"

namespace graphlets {

// Index of a rooted graphlet class under the fixed ordering theta.
using GraphletId = int;

struct CatalogError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One unrooted class under the ordering gamma.
struct GraphClass {
    Graph rep;  // canonically labeled representative
    CanonicalCode code;
    int size = 0;
    int edges = 0;
    int theta_begin = 0, theta_end = 0;
    int przulj = -1;  // published graph number (0..29) for sizes <= 5
};

// One rooted class: an unrooted class plus one automorphism orbit.
struct GraphletClass {
    int gamma = 0;
    int root = 0;  // orbit representative inside the rep graph
    int orbit_size = 0;
    int root_degree = 0;
    int root_ecc = 0;
    RootedCode code;
    int przulj = -1;  // published orbit number (0..72) for sizes <= 5
};

// Deterministic registry of every connected graph class of size
// 2..max_size and of every rooted class derived from them. gamma sorts by
// (size, edge count, canonical code); theta enumerates orbits per class in
// orbit order, so theta respects gamma.
class Catalog {
public:
    static Catalog build(int max_size);

    int max_size() const { return max_size_; }
    const std::vector<GraphClass>& classes() const { return classes_; }
    const std::vector<GraphletClass>& graphlets() const { return graphlets_; }

    int size_of(GraphletId t) const { return classes_[graphlets_[t].gamma].size; }
    int underlying(GraphletId t) const { return graphlets_[t].gamma; }

    int find_gamma(const CanonicalCode& code) const;

    // The unique theta whose class contains (g, root). g must be connected
    // with 2 <= |g| <= max_size.
    GraphletId classify_rooted(const Graph& g, int root) const;

    int gamma_count() const { return int(classes_.size()); }
    int theta_count() const { return int(graphlets_.size()); }
    int gamma_begin(int size) const { return gamma_begin_[size]; }
    int gamma_end(int size) const { return gamma_begin_[size + 1]; }
    int theta_begin(int size) const { return theta_begin_[size]; }
    int theta_end(int size) const { return theta_begin_[size + 1]; }

    // gds of the root of g_j within its own underlying graph (the whole
    // graph counts as a subset, so row[j] == 1). Indexed by theta; length
    // theta_end(size_of(j)). Computed lazily, cached.
    const std::vector<int64_t>& root_counts_row(GraphletId j) const;
    int64_t root_counts_within(GraphletId j, GraphletId i) const;

    GraphletId theta_of_przulj(int orbit) const;

    std::string export_json() const;
    static Catalog import_json(const std::string& text);

private:
    void finish_build();

    int max_size_ = 0;
    std::vector<GraphClass> classes_;
    std::vector<GraphletClass> graphlets_;
    std::vector<int> gamma_begin_, theta_begin_;
    std::unordered_map<CanonicalCode, int, CodeHash> gamma_by_code_;
    std::unordered_map<RootedCode, int, CodeHash> theta_by_code_;
    std::vector<GraphletId> theta_by_przulj_;

    mutable std::unique_ptr<std::mutex> cache_mu_ = std::make_unique<std::mutex>();
    mutable std::vector<std::unique_ptr<std::vector<int64_t>>> root_counts_;
};

// Published numbering of graphlet orbits up to size 5 (0..72), shipped as an
// explicit structure table and matched against the catalog at build time.
struct PrzuljEntry {
    int orbit;
    int graph;
    std::vector<std::pair<int, int>> edges;
    int root;
};
const std::vector<PrzuljEntry>& przulj_orbit_table();

}  // namespace graphlets
