#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

#include "graphlets/connectivity_analysis.hpp"
#include "graphlets/feasibility.hpp"
#include "graphlets/gdd.hpp"
#include "graphlets/generate.hpp"
#include "graphlets/graph_alg.hpp"
#include "graphlets/io.hpp"
#include "graphlets/motifs.hpp"
#include "graphlets/reconstruction.hpp"
#include "graphlets/uniqueness.hpp"

using nlohmann::json;
using namespace graphlets;

namespace {

constexpr const char* kVersion = "0.1.0";

struct RunContext {
    std::string command;
    std::map<std::string, std::string> inputs;  // path -> digest
    std::map<std::string, std::string> flags;
    int catalog_max_size = 0;
};

std::string fnv1a_hex(const std::string& data) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return buf;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json manifest_json(const RunContext& ctx) {
    json m;
    m["command"] = ctx.command;
    m["version"] = kVersion;
    m["inputs"] = ctx.inputs;
    m["flags"] = ctx.flags;
    if (ctx.catalog_max_size) m["catalog_max_size"] = ctx.catalog_max_size;
    return m;
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot write " + out_path);
        out << text;
    }
}

Graph load_one_graph(RunContext& ctx, const std::string& path) {
    std::string data = slurp(path);
    ctx.inputs[path] = fnv1a_hex(data);
    std::vector<Graph> graphs;
    std::istringstream in(data);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        graphs.push_back(parse_graph6(line));
    }
    if (graphs.size() != 1)
        throw std::invalid_argument(path + ": expected exactly one graph6 line, found " +
                                    std::to_string(graphs.size()));
    return graphs[0];
}

Catalog load_catalog(RunContext& ctx, int max_size) {
    ctx.catalog_max_size = max_size;
    const char* dir = std::getenv("GRAPHLETS_CATALOG_CACHE");
    std::string path;
    if (dir && *dir) {
        path = std::string(dir) + "/catalog-" + std::to_string(max_size) + ".json";
        std::ifstream in(path, std::ios::binary);
        if (in) {
            std::ostringstream ss;
            ss << in.rdbuf();
            try {
                return Catalog::import_json(ss.str());
            } catch (const std::exception& e) {
                std::cerr << "note: rebuilding stale catalog cache " << path << ": " << e.what()
                          << "\n";
            }
        }
    }
    Catalog c = Catalog::build(max_size);
    if (!path.empty()) {
        std::ofstream out(path, std::ios::binary);
        if (out) out << c.export_json();
    }
    return c;
}

json signature_json(const GdsSignature& sig) {
    json arr = json::array();
    for (auto& [code, count] : sig) {
        CanonicalCode cc{code.size, code.bits};
        arr.push_back({{"rooted_class", cc.hex()}, {"count", count}});
    }
    return arr;
}

int cmd_gdd(RunContext& ctx, const std::string& in, const std::string& out, int max_size,
            const std::string& format, bool przulj, int jobs) {
    Graph g = load_one_graph(ctx, in);
    if (przulj && max_size > 5) throw std::invalid_argument("--przulj requires --max-size <= 5");
    Catalog c = load_catalog(ctx, std::max(2, max_size));
    GddMatrix d = compute_gdd(g, max_size, c, jobs);
    if (format == "csv") {
        write_output(out, "# manifest " + manifest_json(ctx).dump() + "\n" +
                              gdd_to_csv(d, c, przulj));
    } else {
        json j = json::parse(gdd_to_json_text(d, c));
        j["graph_canonical_code"] = canonical_code(g).hex();
        j["manifest"] = manifest_json(ctx);
        write_output(out, j.dump(2));
    }
    return 0;
}

int cmd_motifs(RunContext& ctx, const std::string& in, const std::string& out, int max_size,
               const std::string& format) {
    Graph g = load_one_graph(ctx, in);
    Catalog c = load_catalog(ctx, std::max(2, max_size));
    MotifVector m = motifs_from_gdd(compute_gdd(g, max_size, c), c);
    if (format == "csv") {
        std::ostringstream text;
        text << "# manifest " << manifest_json(ctx).dump() << "\n";
        for (int gi = m.gamma_lo; gi < m.gamma_hi; ++gi) text << (gi > m.gamma_lo ? "," : "") << 'g' << gi;
        text << '\n';
        for (int gi = m.gamma_lo; gi < m.gamma_hi; ++gi)
            text << (gi > m.gamma_lo ? "," : "") << m.at(gi);
        text << '\n';
        write_output(out, text.str());
    } else {
        json j;
        j["max_size"] = m.max_size;
        j["counts"] = m.counts;
        json cols = json::array();
        for (int gi = m.gamma_lo; gi < m.gamma_hi; ++gi) {
            json col;
            col["gamma"] = gi;
            col["graph6"] = write_graph6(c.classes()[gi].rep);
            if (c.classes()[gi].przulj >= 0) col["przulj_graph"] = c.classes()[gi].przulj;
            cols.push_back(std::move(col));
        }
        j["columns"] = std::move(cols);
        j["manifest"] = manifest_json(ctx);
        write_output(out, j.dump(2));
    }
    return 0;
}

int cmd_connectivity(RunContext& ctx, const std::string& in, const std::string& out, int k) {
    Graph g = load_one_graph(ctx, in);
    int n = g.n();
    if (k < 2 || n - k + 1 < 2) throw std::invalid_argument("connectivity: need 2 <= k <= n-1");
    Catalog c = load_catalog(ctx, std::max(2, n - k + 1));
    GddMatrix d = compute_gdd(g, n - k + 1, c);
    GddMatrix block = d.block(n - k + 1, c);

    json j;
    j["n"] = n;
    j["k"] = k;
    if (k == 2) {
        ConnectivityReport rep = articulation_analysis(block, n);
        j["per_vertex_sums"] = rep.per_vertex_sums;
        switch (rep.verdict) {
            case ConnVerdict::KConnected: j["verdict"] = "2-connected"; break;
            case ConnVerdict::UniqueArticulation:
                j["verdict"] = "unique articulation: vertex " + std::to_string(rep.articulation);
                j["articulation"] = rep.articulation;
                break;
            default: j["verdict"] = "multiple articulations"; break;
        }
    } else {
        bool conn = k_connectivity_from_gdd(block, n, k);
        j["verdict"] = conn ? (std::to_string(k) + "-connected")
                            : ("not " + std::to_string(k) + "-connected");
        std::vector<int64_t> sums(n, 0);
        for (int v = 0; v < n; ++v) sums[v] = block.size_sum(v, n - k + 1, c);
        j["per_vertex_sums"] = sums;
        j["cut_core"] = cut_core_vertices(block, n, k);
    }
    j["manifest"] = manifest_json(ctx);
    write_output(out, j.dump(2));
    return 0;
}

int cmd_deck(RunContext& ctx, const std::string& in, const std::string& out) {
    Graph g = load_one_graph(ctx, in);
    int n = g.n();
    Catalog c = load_catalog(ctx, n - 1);
    GddMatrix d = compute_gdd(g, n - 1, c);
    Deck deck = deck_from_gdd(d.block(n - 1, c), n, c);
    json j;
    j["n"] = n;
    json cards = json::array();
    for (auto& [gamma, mult] : deck.classes)
        cards.push_back({{"graph6", write_graph6(c.classes()[gamma].rep)},
                         {"code", c.classes()[gamma].code.hex()},
                         {"multiplicity", mult}});
    j["cards"] = std::move(cards);
    j["manifest"] = manifest_json(ctx);
    write_output(out, j.dump(2));
    return 0;
}

int cmd_project(RunContext& ctx, const std::string& gdd_path, const std::string& out, int k,
                const std::string& format) {
    std::string data = slurp(gdd_path);
    ctx.inputs[gdd_path] = fnv1a_hex(data);
    json meta = json::parse(data);
    Catalog c = load_catalog(ctx, meta.at("catalog_max_size").get<int>());
    GddMatrix d = gdd_from_json_text(data, c);
    GddMatrix proj = project_gdd(d.block(d.n - k + 1, c), d.n, k, c);
    if (format == "csv")
        write_output(out,
                     "# manifest " + manifest_json(ctx).dump() + "\n" + gdd_to_csv(proj, c, false));
    else {
        json j = json::parse(gdd_to_json_text(proj, c));
        j["manifest"] = manifest_json(ctx);
        write_output(out, j.dump(2));
    }
    return 0;
}

GddMatrix load_gdd(RunContext& ctx, const std::string& path, std::unique_ptr<Catalog>& cat) {
    std::string data = slurp(path);
    ctx.inputs[path] = fnv1a_hex(data);
    if (!data.empty() && data[0] == '{') {
        json meta = json::parse(data);
        cat = std::make_unique<Catalog>(load_catalog(ctx, meta.at("catalog_max_size").get<int>()));
        return gdd_from_json_text(data, *cat);
    }
    std::istringstream in(data);
    std::string line;
    int cmax = 0;
    while (std::getline(in, line))
        if (line.rfind("#", 0) == 0 && line.find("catalog_max_size=") != std::string::npos)
            cmax = std::stoi(line.substr(line.find("catalog_max_size=") + 17));
    if (!cmax) throw std::invalid_argument("gdd csv: missing catalog_max_size metadata");
    cat = std::make_unique<Catalog>(load_catalog(ctx, cmax));
    return gdd_from_csv_text(data, *cat);
}

int cmd_reconstruct_tree(RunContext& ctx, const std::string& gdd_path, const std::string& out,
                         const std::string& cert_path) {
    std::unique_ptr<Catalog> cat;
    GddMatrix d = load_gdd(ctx, gdd_path, cat);
    Graph t = reconstruct_tree(d, d.n, *cat);
    json cert;
    cert["graph6"] = write_graph6(t);
    cert["n"] = d.n;
    cert["manifest"] = manifest_json(ctx);
    write_output(out, write_graph6(t));
    if (!cert_path.empty()) write_output(cert_path, cert.dump(2));
    return 0;
}

json asym_cert_json(const ReconstructionReport& rep, const Catalog& c) {
    json j;
    const AsymCertificate& cert = rep.certificate;
    j["two_connected"] = cert.two_connected;
    j["rigid"] = cert.rigid;
    j["condition_star"] = cert.cond_star;
    j["k"] = cert.k;
    if (cert.chosen_gamma >= 0) {
        j["chosen_theta"] = cert.chosen_theta;
        j["chosen_class_graph6"] = write_graph6(c.classes()[cert.chosen_gamma].rep);
        j["chosen_class_code"] = c.classes()[cert.chosen_gamma].code.hex();
    }
    j["deleted_row"] = cert.deleted_row;
    j["deleted_candidates"] = cert.deleted_candidates;
    j["row_orbit_vertex"] = cert.orbit_vertex;
    j["degrees"] = cert.degree_h;
    if (!rep.failure_stage.empty()) j["failure_stage"] = rep.failure_stage;
    return j;
}

int cmd_reconstruct_asym(RunContext& ctx, const std::string& gdd_path, const std::string& out,
                         const std::string& cert_path) {
    std::unique_ptr<Catalog> cat;
    GddMatrix d = load_gdd(ctx, gdd_path, cat);
    ReconstructionReport rep = reconstruct_asymmetric(d, d.n, *cat);
    json cert = asym_cert_json(rep, *cat);
    cert["manifest"] = manifest_json(ctx);
    if (rep.result) {
        cert["graph6"] = write_graph6(*rep.result);
        write_output(out, write_graph6(*rep.result));
        if (!cert_path.empty()) write_output(cert_path, cert.dump(2));
        return 0;
    }
    write_output(cert_path.empty() ? out : cert_path, cert.dump(2));
    std::cerr << "error: reconstruction failed: " << rep.failure_stage << "\n";
    return 1;
}

int cmd_check_gds3(RunContext& ctx, const std::string& in, const std::string& out) {
    std::string data = slurp(in);
    ctx.inputs[in] = fnv1a_hex(data);
    FilterResult f = filter_candidate(gds3_from_csv(data));
    json j;
    j["pass"] = f.pass;
    if (!f.pass) j["reason"] = f.reason;
    j["manifest"] = manifest_json(ctx);
    write_output(out, j.dump(2));
    return f.pass ? 0 : 1;
}

int cmd_decide_gds3(RunContext& ctx, const std::string& in, const std::string& out) {
    std::string data = slurp(in);
    ctx.inputs[in] = fnv1a_hex(data);
    Realizability r = decide_realizability(gds3_from_csv(data));
    json j;
    j["manifest"] = manifest_json(ctx);
    switch (r.kind) {
        case Realizability::Witness:
            j["verdict"] = "realizable";
            j["witness_graph6"] = write_graph6(*r.witness);
            write_output(out, j.dump(2));
            return 0;
        case Realizability::No:
            j["verdict"] = "no";
            j["reason"] = r.reason;
            write_output(out, j.dump(2));
            return 0;
        default:
            j["verdict"] = "undecided";
            j["reason"] = r.reason;
            write_output(out, j.dump(2));
            return 1;
    }
}

int cmd_same_gds_pair(RunContext& ctx, int n, const std::string& out) {
    SameGdsPair p = same_gds_pair(n);
    json j;
    j["graph6_1"] = write_graph6(p.g1);
    j["graph6_2"] = write_graph6(p.g2);
    j["v1"] = p.v1;
    j["v2"] = p.v2;
    j["shared_gds"] = signature_json(gds_signature(p.g1, p.v1, n - 1));
    j["manifest"] = manifest_json(ctx);
    write_output(out, j.dump(2));
    return 0;
}

int cmd_collision_search(RunContext& ctx, int n, const std::string& mode, int k,
                         bool include_disconnected, const std::string& out) {
    if (k <= 0) k = n - 1;
    std::vector<CollisionRecord> records =
        collision_search(n, mode == "whole_gdd", k, include_disconnected);
    std::ostringstream lines;
    lines << json{{"manifest", manifest_json(ctx)},
                  {"connected_only", !include_disconnected},
                  {"n", n},
                  {"k", k}}
                 .dump()
          << "\n";
    int templates = 0;
    for (auto& r : records) {
        json j;
        j["graph6_1"] = r.graph6_1;
        j["graph6_2"] = r.graph6_2;
        j["mode"] = r.whole_gdd ? "whole_gdd" : "vertex_gds";
        if (!r.whole_gdd) {
            j["vertices1"] = r.vertices1;
            j["vertices2"] = r.vertices2;
            j["shared_row"] = signature_json(r.shared_row);
        }
        j["triangle_fork_instance"] = r.is_triangle_fork_instance;
        templates += r.is_triangle_fork_instance;
        lines << j.dump() << "\n";
    }
    write_output(out, lines.str());
    std::ostream& summary = (out.empty() || out == "-") ? std::cerr : std::cout;
    summary << "collisions: " << records.size() << " (" << templates
            << " triangle/fork instances) at n=" << n << " k=" << k << "\n";
    return 0;
}

int cmd_scan_asym(RunContext& ctx, int n, const std::string& out) {
    Catalog c = load_catalog(ctx, n - 1);
    std::ostringstream lines;
    lines << json{{"manifest", manifest_json(ctx)}, {"n", n}}.dump() << "\n";
    int qualifying = 0, ok = 0;
    for (const Graph& g : generate_connected(n)) {
        if (n < 3 || vertex_connectivity(g) < 2) continue;
        AsymHypotheses hyp = asym_hypotheses(g);
        if (hyp.qualifying.empty()) continue;
        ++qualifying;
        GddMatrix d = compute_gdd(g, n - 1, c);
        ReconstructionReport rep = reconstruct_asymmetric(d, n, c);
        bool round = rep.result && isomorphic(*rep.result, g);
        ok += round;
        json j;
        j["graph6"] = write_graph6(g);
        j["classes"] = hyp.qualifying.size();
        j["k"] = hyp.qualifying.front().deleted_vertices.size();
        j["roundtrip_ok"] = round;
        if (!rep.failure_stage.empty()) j["failure"] = rep.failure_stage;
        lines << j.dump() << "\n";
    }
    write_output(out, lines.str());
    std::ostream& summary = (out.empty() || out == "-") ? std::cerr : std::cout;
    summary << "qualifying: " << qualifying << ", round-trips: " << ok << "\n";
    return qualifying == ok ? 0 : 1;
}

int cmd_distinguishing_pair(RunContext& ctx, int n, int max_size, const std::string& out) {
    Catalog c = load_catalog(ctx, std::max(2, max_size));
    auto pair = find_distinguishing_pair(n, max_size, c);
    json j;
    j["manifest"] = manifest_json(ctx);
    if (!pair) {
        j["found"] = false;
        write_output(out, j.dump(2));
        return 1;
    }
    j["found"] = true;
    j["graph6_1"] = write_graph6(pair->g1);
    j["graph6_2"] = write_graph6(pair->g2);
    j["motif_vector"] = pair->motifs.counts;
    auto rows_of = [&](const Graph& g) {
        GddMatrix d = compute_gdd(g, max_size, c);
        std::sort(d.rows.begin(), d.rows.end());
        return d.rows;
    };
    j["gdd_rows_1"] = rows_of(pair->g1);
    j["gdd_rows_2"] = rows_of(pair->g2);
    write_output(out, j.dump(2));
    return 0;
}

int cmd_catalog_export(RunContext& ctx, int max_size, const std::string& out) {
    Catalog c = load_catalog(ctx, max_size);
    json j = json::parse(c.export_json());
    j["manifest"] = manifest_json(ctx);
    write_output(out, j.dump(2));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graphlet degree distribution toolkit"};
    app.require_subcommand(1);

    RunContext ctx;
    std::string in, out, gdd_path, cert_path, format = "csv", mode = "vertex_gds";
    int max_size = 4, k = 2, n = 6, jobs = 1;
    bool przulj = false, include_disconnected = false;
    std::function<int()> action;

    auto* gdd = app.add_subcommand("gdd", "per-vertex graphlet counts of a graph6 input");
    gdd->add_option("--in", in, "graph6 file")->required();
    gdd->add_option("--out", out, "output path (default stdout)");
    gdd->add_option("--max-size", max_size, "largest graphlet size")->required();
    gdd->add_option("--format", format, "csv or json");
    gdd->add_flag("--przulj", przulj, "published orbit ids as column headers (max-size <= 5)");
    gdd->add_option("--jobs", jobs, "worker threads");
    gdd->callback([&] { action = [&] { return cmd_gdd(ctx, in, out, max_size, format, przulj, jobs); }; });

    auto* mot = app.add_subcommand("motifs", "whole-graph induced subgraph counts");
    mot->add_option("--in", in)->required();
    mot->add_option("--out", out);
    mot->add_option("--max-size", max_size)->required();
    mot->add_option("--format", format, "csv or json");
    mot->callback([&] { action = [&] { return cmd_motifs(ctx, in, out, max_size, format); }; });

    auto* conn = app.add_subcommand("connectivity", "connectivity verdicts from the gdd alone");
    conn->add_option("--in", in)->required();
    conn->add_option("--out", out);
    conn->add_option("--k", k, "connectivity level to test (default 2)");
    conn->callback([&] { action = [&] { return cmd_connectivity(ctx, in, out, k); }; });

    auto* deck = app.add_subcommand("deck", "vertex-deleted subgraph multiset from the gdd");
    deck->add_option("--in", in)->required();
    deck->add_option("--out", out);
    deck->callback([&] { action = [&] { return cmd_deck(ctx, in, out); }; });

    auto* proj = app.add_subcommand("project", "project an exact-size block down to smaller sizes");
    proj->add_option("--gdd", gdd_path, "gdd JSON file")->required();
    proj->add_option("--out", out);
    proj->add_option("--k", k, "connectivity assumption")->required();
    proj->add_option("--format", format, "csv or json");
    proj->callback([&] { action = [&] { return cmd_project(ctx, gdd_path, out, k, format); }; });

    auto* rtree = app.add_subcommand("reconstruct-tree", "rebuild a tree from its gdd");
    rtree->add_option("--gdd", gdd_path, "gdd JSON or CSV file")->required();
    rtree->add_option("--out", out);
    rtree->add_option("--cert", cert_path, "certificate JSON path");
    rtree->callback([&] { action = [&] { return cmd_reconstruct_tree(ctx, gdd_path, out, cert_path); }; });

    auto* rasym = app.add_subcommand("reconstruct-asym",
                                     "rebuild a 2-connected graph with a rigid card from its gdd");
    rasym->add_option("--gdd", gdd_path, "gdd JSON or CSV file")->required();
    rasym->add_option("--out", out);
    rasym->add_option("--cert", cert_path, "certificate JSON path");
    rasym->callback([&] { action = [&] { return cmd_reconstruct_asym(ctx, gdd_path, out, cert_path); }; });

    auto* chk = app.add_subcommand("check-gds3", "necessary-condition filters on an n x 3 matrix");
    chk->add_option("--in", in, "CSV matrix")->required();
    chk->add_option("--out", out);
    chk->callback([&] { action = [&] { return cmd_check_gds3(ctx, in, out); }; });

    auto* dec = app.add_subcommand("decide-gds3", "exhaustive realizability decision (n <= 8)");
    dec->add_option("--in", in, "CSV matrix")->required();
    dec->add_option("--out", out);
    dec->callback([&] { action = [&] { return cmd_decide_gds3(ctx, in, out); }; });

    auto* pair = app.add_subcommand("same-gds-pair", "path+triangle vs path+fork construction");
    pair->add_option("--n", n, "graph size (>= 4)")->required();
    pair->add_option("--out", out);
    pair->callback([&] { action = [&] { return cmd_same_gds_pair(ctx, n, out); }; });

    auto* coll = app.add_subcommand("collision-search", "exhaustive cross-graph gds collisions");
    coll->add_option("--n", n)->required();
    coll->add_option("--mode", mode, "vertex_gds or whole_gdd");
    int coll_k = 0;
    coll->add_option("--k", coll_k, "size bound (default n-1)");
    coll->add_flag("--include-disconnected", include_disconnected);
    coll->add_option("--out", out);
    coll->callback([&] {
        action = [&] { return cmd_collision_search(ctx, n, mode, coll_k, include_disconnected, out); };
    });

    auto* scan = app.add_subcommand("scan-asym-hypotheses",
                                    "scan n-vertex graphs for reconstructible instances");
    scan->add_option("--n", n)->required();
    scan->add_option("--out", out);
    scan->callback([&] { action = [&] { return cmd_scan_asym(ctx, n, out); }; });

    auto* dpair = app.add_subcommand("distinguishing-pair",
                                     "motif-equal, gdd-distinguished pair of graphs");
    dpair->add_option("--n", n)->required();
    dpair->add_option("--max-size", max_size)->required();
    dpair->add_option("--out", out);
    dpair->callback([&] { action = [&] { return cmd_distinguishing_pair(ctx, n, max_size, out); }; });

    auto* cata = app.add_subcommand("catalog", "catalog operations");
    cata->require_subcommand(1);
    auto* expo = cata->add_subcommand("export", "full catalog as JSON");
    expo->add_option("--max-size", max_size)->required();
    expo->add_option("--out", out);
    expo->callback([&] { action = [&] { return cmd_catalog_export(ctx, max_size, out); }; });

    auto started = std::chrono::steady_clock::now();
    int rc = 0;
    try {
        app.parse(argc, argv);
        for (CLI::App* sub : app.get_subcommands()) {
            ctx.command = sub->get_name();
            for (CLI::App* nested : sub->get_subcommands())
                ctx.command += " " + nested->get_name();
            for (const CLI::Option* opt : sub->get_options())
                if (opt->count() && opt->get_name() != "--out" && !opt->get_name().empty())
                    ctx.flags[opt->get_name()] =
                        opt->results().empty() ? "true" : opt->results()[0];
        }
        rc = action ? action() : 2;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: usage: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: parse: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - started);
    std::cerr << "# wall time: " << elapsed.count() << "s\n";
    return rc;
}
