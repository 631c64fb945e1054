#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graphlets/graph.hpp"

namespace graphlets {

// Bit-exact canonical form of an isomorphism class: upper-triangle adjacency
// of the canonically relabeled graph, packed row-major. Two graphs get equal
// codes iff they are isomorphic.
struct CanonicalCode {
    uint32_t size = 0;
    std::vector<uint64_t> bits;

    bool operator==(const CanonicalCode& o) const { return size == o.size && bits == o.bits; }
    bool operator!=(const CanonicalCode& o) const { return !(*this == o); }
    bool operator<(const CanonicalCode& o) const {
        if (size != o.size) return size < o.size;
        return bits < o.bits;
    }
    std::string hex() const;
    // Rebuild the canonical representative graph encoded by this code.
    Graph to_graph() const;
};

// Canonical form of a rooted graph; the root is always mapped to label 0.
// Equal codes iff there is an isomorphism mapping root to root.
struct RootedCode {
    uint32_t size = 0;
    std::vector<uint64_t> bits;

    bool operator==(const RootedCode& o) const { return size == o.size && bits == o.bits; }
    bool operator!=(const RootedCode& o) const { return !(*this == o); }
    bool operator<(const RootedCode& o) const {
        if (size != o.size) return size < o.size;
        return bits < o.bits;
    }
};

// Canonical form of (graph, vertex subset): equal iff some isomorphism maps
// one subset onto the other. Used to deduplicate extension masks during
// isomorph-free generation.
struct MaskCode {
    uint32_t size = 0;
    uint32_t mask_size = 0;
    std::vector<uint64_t> bits;

    bool operator==(const MaskCode& o) const {
        return size == o.size && mask_size == o.mask_size && bits == o.bits;
    }
};

struct CodeHash {
    size_t operator()(const CanonicalCode& c) const;
    size_t operator()(const RootedCode& c) const;
    size_t operator()(const MaskCode& c) const;
};

CanonicalCode canonical_code(const Graph& g);

// label[v] = canonical position of v; applying it to g yields the canonical
// representative.
std::vector<int> canonical_labeling(const Graph& g);

RootedCode rooted_code(const Graph& g, int root);
MaskCode mask_code(const Graph& g, uint64_t mask);

// Automorphism orbits of g. Orbit ids are dense, ordered by the smallest
// canonical label occurring in each orbit; reps[k] is that smallest-label
// member.
struct OrbitPartition {
    std::vector<int> orbit_id;
    int orbit_count = 0;
    std::vector<int> reps;
};

OrbitPartition automorphism_orbits(const Graph& g);

inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
    return canonical_code(a) == canonical_code(b);
}

}  // namespace graphlets
