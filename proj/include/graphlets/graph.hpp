#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace graphlets {

using std::int64_t;
using std::uint64_t;

// Simple undirected graph on vertices 0..n-1. Adjacency is stored as one
// bit row per vertex (ceil(n/64) words). Graphs with n <= 64 expose their
// rows as plain 64-bit masks, which is what every enumeration kernel uses;
// larger graphs are supported for I/O only.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n), stride_((n + 63) / 64), bits_(size_t(n) * stride_, 0) {
        if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    }

    int n() const { return n_; }

    bool has_edge(int u, int v) const {
        return (bits_[size_t(u) * stride_ + (v >> 6)] >> (v & 63)) & 1u;
    }

    void add_edge(int u, int v) {
        check_pair(u, v);
        bits_[size_t(u) * stride_ + (v >> 6)] |= uint64_t(1) << (v & 63);
        bits_[size_t(v) * stride_ + (u >> 6)] |= uint64_t(1) << (u & 63);
    }

    void remove_edge(int u, int v) {
        check_pair(u, v);
        bits_[size_t(u) * stride_ + (v >> 6)] &= ~(uint64_t(1) << (v & 63));
        bits_[size_t(v) * stride_ + (u >> 6)] &= ~(uint64_t(1) << (u & 63));
    }

    // Adjacency row as a single mask. Valid only when n <= 64.
    uint64_t adj(int v) const { return bits_[size_t(v) * stride_]; }

    int degree(int v) const {
        int d = 0;
        for (int w = 0; w < stride_; ++w) d += popcount(bits_[size_t(v) * stride_ + w]);
        return d;
    }

    int edge_count() const {
        int64_t total = 0;
        for (int v = 0; v < n_; ++v) total += degree(v);
        return int(total / 2);
    }

    // Induced subgraph on the vertices of `mask`, relabeled 0..k-1 in
    // ascending original order. Requires n <= 64.
    Graph induced(uint64_t mask) const;
    Graph induced(const std::vector<int>& verts) const;

    // Relabeled copy: vertex v becomes perm[v].
    Graph relabeled(const std::vector<int>& perm) const;

    Graph without_vertex(int x) const;

    std::vector<int> neighbors(int v) const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && bits_ == o.bits_; }
    bool operator!=(const Graph& o) const { return !(*this == o); }

    static int popcount(uint64_t x) { return __builtin_popcountll(x); }

private:
    void check_pair(int u, int v) const {
        if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
            throw std::invalid_argument("Graph: bad vertex pair");
    }

    int n_ = 0;
    int stride_ = 0;
    std::vector<uint64_t> bits_;
};

// Convenience constructors used all over the tests and experiments.
Graph make_path(int n);
Graph make_cycle(int n);
Graph make_complete(int n);
Graph make_star(int n);  // K_{1,n-1}, center 0

// Lowest set bit index helpers for mask loops.
inline int bit_index(uint64_t bit) { return __builtin_ctzll(bit); }

}  // namespace graphlets
