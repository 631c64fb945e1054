#include "graphlets/io.hpp"

#include <fstream>
#include <sstream>

namespace graphlets {

namespace {

constexpr int kG6Lo = 63;    // '?'
constexpr int kG6Hi = 126;   // '~'
constexpr int kMaxIoVertices = 4096;

int g6_byte(std::string_view s, size_t i) {
    if (i >= s.size()) throw ParseError("graph6: truncated input", i);
    unsigned char c = s[i];
    if (c < kG6Lo || c > kG6Hi) throw ParseError("graph6: byte out of range", i);
    return c - kG6Lo;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.empty()) throw ParseError("graph6: empty input", 0);

    size_t pos = 0;
    int64_t n;
    if (static_cast<unsigned char>(line[0]) == 126) {
        if (line.size() >= 2 && static_cast<unsigned char>(line[1]) == 126) {
            n = 0;
            for (size_t i = 2; i < 8; ++i) n = (n << 6) | g6_byte(line, i);
            pos = 8;
        } else {
            n = 0;
            for (size_t i = 1; i < 4; ++i) n = (n << 6) | g6_byte(line, i);
            pos = 4;
        }
    } else {
        n = g6_byte(line, 0);
        pos = 1;
    }
    if (n <= 0) throw ParseError("graph6: vertex count must be positive", 0);
    if (n > kMaxIoVertices) throw ParseError("graph6: graph too large for this tool", 0);

    Graph g{int(n)};
    int64_t nbits = n * (n - 1) / 2;
    size_t expect = pos + size_t((nbits + 5) / 6);
    if (line.size() > expect) throw ParseError("graph6: trailing garbage", expect);

    int64_t t = 0;
    int cur = 0, avail = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++t) {
            if (avail == 0) {
                cur = g6_byte(line, pos);
                ++pos;
                avail = 6;
            }
            if ((cur >> (avail - 1)) & 1) g.add_edge(u, v);
            --avail;
        }
    }
    if (pos != expect && nbits > 0) throw ParseError("graph6: truncated input", pos);
    return g;
}

std::string write_graph6(const Graph& g) {
    int n = g.n();
    std::string out;
    if (n <= 62) {
        out.push_back(char(n + kG6Lo));
    } else if (n <= 258047) {
        out.push_back(char(126));
        out.push_back(char(((n >> 12) & 63) + kG6Lo));
        out.push_back(char(((n >> 6) & 63) + kG6Lo));
        out.push_back(char((n & 63) + kG6Lo));
    } else {
        throw std::invalid_argument("write_graph6: graph too large");
    }
    int cur = 0, used = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            cur = (cur << 1) | int(g.has_edge(u, v));
            if (++used == 6) {
                out.push_back(char(cur + kG6Lo));
                cur = used = 0;
            }
        }
    }
    if (used) out.push_back(char((cur << (6 - used)) + kG6Lo));
    return out;
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    int64_t n = -1, m = -1;
    if (!(in >> n >> m)) throw ParseError("edge list: missing 'n m' header", 0);
    if (n <= 0 || n > kMaxIoVertices || m < 0) throw ParseError("edge list: bad header", 0);
    Graph g{int(n)};
    for (int64_t i = 0; i < m; ++i) {
        int64_t u, v;
        if (!(in >> u >> v)) throw ParseError("edge list: truncated edge " + std::to_string(i), 0);
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw ParseError("edge list: bad edge " + std::to_string(i), 0);
        g.add_edge(int(u), int(v));
    }
    return g;
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.n() << ' ' << g.edge_count() << '\n';
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.has_edge(u, v)) out << u << ' ' << v << '\n';
    return out.str();
}

std::vector<Graph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        out.push_back(parse_graph6(line));
    }
    return out;
}

}  // namespace graphlets
