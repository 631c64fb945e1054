#include "graphlets/uniqueness.hpp"

#include <algorithm>
#include <map>

#include "graphlets/generate.hpp"
#include "graphlets/io.hpp"

namespace graphlets {

SameGdsPair same_gds_pair(int n) {
    if (n < 4) throw std::invalid_argument("same_gds_pair: n must be at least 4");
    int last = n - 3;  // end of the path on n-2 vertices
    SameGdsPair out;
    out.g1 = Graph(n);
    for (int i = 0; i < last; ++i) out.g1.add_edge(i, i + 1);
    out.g1.add_edge(last, n - 2);
    out.g1.add_edge(last, n - 1);
    out.g2 = out.g1;
    out.g1.add_edge(n - 2, n - 1);  // triangle ending; g2 keeps the fork
    out.v1 = out.v2 = 0;

    if (gds_signature(out.g1, out.v1, n - 1) != gds_signature(out.g2, out.v2, n - 1))
        throw std::logic_error("same_gds_pair: construction no longer verifies");
    return out;
}

std::vector<CollisionRecord> collision_search(int n, bool whole_gdd_mode, int k,
                                              bool include_disconnected) {
    if (n > 7)
        throw std::invalid_argument(
            "collision_search: exhaustive scan capped at n = 7 (853 connected classes); n = 8 "
            "would mean 11117");
    if (k < 2 || k > n - 1) throw std::invalid_argument("collision_search: need 2 <= k <= n-1");

    std::vector<Graph> classes =
        include_disconnected ? generate_all(n) : generate_connected(n);
    std::vector<CanonicalCode> codes;
    codes.reserve(classes.size());
    for (auto& g : classes) codes.push_back(canonical_code(g));

    std::vector<std::vector<GdsSignature>> sigs(classes.size());
    for (size_t i = 0; i < classes.size(); ++i) {
        sigs[i].resize(n);
        for (int v = 0; v < n; ++v) sigs[i][v] = gds_signature(classes[i], v, k);
    }

    CanonicalCode tmpl1, tmpl2;
    GdsSignature tmpl_row;
    bool have_template = n >= 4;
    if (have_template) {
        SameGdsPair t = same_gds_pair(n);
        tmpl1 = canonical_code(t.g1);
        tmpl2 = canonical_code(t.g2);
        tmpl_row = gds_signature(t.g1, t.v1, k);
    }

    std::vector<CollisionRecord> records;

    if (whole_gdd_mode) {
        std::map<std::vector<GdsSignature>, std::vector<int>> buckets;
        for (size_t i = 0; i < classes.size(); ++i) {
            std::vector<GdsSignature> rows = sigs[i];
            std::sort(rows.begin(), rows.end());
            buckets[rows].push_back(int(i));
        }
        for (auto& [rows, members] : buckets)
            for (size_t a = 0; a < members.size(); ++a)
                for (size_t b = a + 1; b < members.size(); ++b) {
                    CollisionRecord r;
                    r.whole_gdd = true;
                    int ia = members[a], ib = members[b];
                    if (codes[ib] < codes[ia]) std::swap(ia, ib);
                    r.code1 = codes[ia];
                    r.code2 = codes[ib];
                    r.graph6_1 = write_graph6(classes[ia]);
                    r.graph6_2 = write_graph6(classes[ib]);
                    r.is_triangle_fork_instance =
                        have_template && ((r.code1 == tmpl1 && r.code2 == tmpl2) ||
                                          (r.code1 == tmpl2 && r.code2 == tmpl1));
                    records.push_back(std::move(r));
                }
    } else {
        std::map<GdsSignature, std::map<int, std::vector<int>>> buckets;
        for (size_t i = 0; i < classes.size(); ++i)
            for (int v = 0; v < n; ++v) buckets[sigs[i][v]][int(i)].push_back(v);
        for (auto& [sig, by_class] : buckets) {
            if (by_class.size() < 2) continue;
            std::vector<int> members;
            for (auto& [ci, verts] : by_class) members.push_back(ci);
            for (size_t a = 0; a < members.size(); ++a)
                for (size_t b = a + 1; b < members.size(); ++b) {
                    CollisionRecord r;
                    int ia = members[a], ib = members[b];
                    if (codes[ib] < codes[ia]) std::swap(ia, ib);
                    r.code1 = codes[ia];
                    r.code2 = codes[ib];
                    r.graph6_1 = write_graph6(classes[ia]);
                    r.graph6_2 = write_graph6(classes[ib]);
                    r.vertices1 = by_class[ia];
                    r.vertices2 = by_class[ib];
                    r.shared_row = sig;
                    r.is_triangle_fork_instance =
                        have_template &&
                        ((r.code1 == tmpl1 && r.code2 == tmpl2) ||
                         (r.code1 == tmpl2 && r.code2 == tmpl1)) &&
                        sig == tmpl_row;
                    records.push_back(std::move(r));
                }
        }
    }

    std::sort(records.begin(), records.end(), [](const CollisionRecord& a, const CollisionRecord& b) {
        if (a.code1 != b.code1) return a.code1 < b.code1;
        if (a.code2 != b.code2) return a.code2 < b.code2;
        return a.shared_row < b.shared_row;
    });
    return records;
}

}  // namespace graphlets
