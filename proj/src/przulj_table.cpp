#include "graphlets/catalog.hpp"

namespace graphlets {

namespace {

using E = std::vector<std::pair<int, int>>;

struct GraphSpec {
    int graph;
    E edges;
    std::vector<std::pair<int, int>> orbits;  // (orbit number, root vertex)
};

// The published numbering of graphlets G0..G29 and orbits 0..72. Roots name
// one representative vertex per orbit of the structure given by `edges`.
std::vector<PrzuljEntry> make_table() {
    std::vector<GraphSpec> specs = {
        // size 2
        {0, {{0, 1}}, {{0, 0}}},
        // size 3
        {1, {{0, 1}, {1, 2}}, {{1, 0}, {2, 1}}},
        {2, {{0, 1}, {0, 2}, {1, 2}}, {{3, 0}}},
        // size 4
        {3, {{0, 1}, {1, 2}, {2, 3}}, {{4, 0}, {5, 1}}},
        {4, {{0, 1}, {0, 2}, {0, 3}}, {{6, 1}, {7, 0}}},
        {5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, {{8, 0}}},
        {6, {{0, 1}, {1, 2}, {1, 3}, {2, 3}}, {{9, 0}, {10, 2}, {11, 1}}},
        {7, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}, {{12, 2}, {13, 0}}},
        {8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, {{14, 0}}},
        // size 5
        {9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}, {{15, 0}, {16, 1}, {17, 2}}},
        {10, {{0, 1}, {1, 2}, {2, 3}, {2, 4}}, {{18, 0}, {19, 3}, {20, 1}, {21, 2}}},
        {11, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}, {{22, 1}, {23, 0}}},
        {12, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}}, {{24, 3}, {25, 2}, {26, 0}}},
        {13, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}}, {{27, 4}, {28, 3}, {29, 0}, {30, 2}}},
        {14, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}}, {{31, 3}, {32, 1}, {33, 0}}},
        {15, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}, {{34, 0}}},
        {16, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}}, {{35, 4}, {36, 0}, {37, 1}, {38, 2}}},
        {17, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {0, 4}}, {{39, 4}, {40, 2}, {41, 1}, {42, 0}}},
        {18, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}, {{43, 1}, {44, 0}}},
        {19, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}}, {{45, 4}, {46, 3}, {47, 2}, {48, 0}}},
        {20, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}, {{49, 2}, {50, 0}}},
        {21, {{0, 1}, {0, 4}, {1, 4}, {1, 2}, {2, 3}, {3, 4}}, {{51, 2}, {52, 0}, {53, 1}}},
        {22, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}, {{54, 2}, {55, 0}}},
        {23, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}}, {{56, 4}, {57, 1}, {58, 0}}},
        {24, {{1, 2}, {2, 3}, {3, 4}, {0, 1}, {0, 2}, {0, 3}, {0, 4}}, {{59, 1}, {60, 2}, {61, 0}}},
        {25, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {3, 4}, {1, 4}}, {{62, 4}, {63, 1}, {64, 0}}},
        {26, {{0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}, {{65, 0}, {66, 1}, {67, 3}}},
        {27, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}, {1, 4}}, {{68, 1}, {69, 0}}},
        {28,
         {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}},
         {{70, 0}, {71, 2}}},
        {29,
         {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}},
         {{72, 0}}},
    };

    std::vector<PrzuljEntry> table;
    for (auto& s : specs)
        for (auto& [orbit, root] : s.orbits) table.push_back({orbit, s.graph, s.edges, root});
    return table;
}

}  // namespace

const std::vector<PrzuljEntry>& przulj_orbit_table() {
    static const std::vector<PrzuljEntry> table = make_table();
    return table;
}

}  // namespace graphlets
