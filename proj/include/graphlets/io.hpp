#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "graphlets/graph.hpp"

namespace graphlets {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, size_t offset)
        : std::runtime_error(msg + " (byte " + std::to_string(offset) + ")"), offset(offset) {}
    size_t offset;
};

// Dense header-less graph6, one graph per line.
Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

// Plain text edge list: "n m" on the first line, then one "u v" per edge,
// 0-based vertex ids.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

// All non-empty lines of a file, parsed as graph6.
std::vector<Graph> read_graph6_file(const std::string& path);

}  // namespace graphlets
