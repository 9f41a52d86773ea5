#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <future>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "confspace/gauge.hpp"
#include "confspace/io.hpp"
#include "confspace/spanning.hpp"
#include "confspace/star.hpp"
#include "json.hpp"

namespace confspace::cli {

using Json = nlohmann::ordered_json;

std::string digest(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream s;
    s << std::hex << std::setw(16) << std::setfill('0') << h;
    return s.str();
}

namespace {

struct Input {
    Graph graph;
    std::string digest;
};

Input load_graph(const std::string& path) {
    const std::string text = read_text_file(path);
    return {parse_graph(text), digest(text)};
}

Json integer_json(const Integer& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return static_cast<long long>(v);
    return to_string(v);
}

Json graph_json(const Graph& g) { return Json::parse(write_graph(g)); }
Json potential_json(const GaugePotential& p) { return Json::parse(write_potential(p)); }

Json prediction_json(const Prediction& p) {
    return Json{{"beta1", p.beta1},
                {"N1", integer_json(p.n1)},
                {"N2", integer_json(p.n2)},
                {"N3", p.n3},
                {"N3_prime", p.n3_prime},
                {"N3_doubleprime", p.n3_doubleprime},
                {"n", p.n_particles},
                {"group", p.group.to_string()}};
}

std::string config_string(const Config& c) {
    std::string s = "{";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    return s + "}";
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// The graph the oracle runs on: subdivided for n >= 3 unless suppressed.
Graph oracle_graph(const Graph& g, int n, bool no_subdivide, std::ostream& err, bool* subdivided) {
    *subdivided = false;
    if (no_subdivide || n < 3 || is_sufficiently_subdivided(g, n)) return g;
    Graph s = sufficiently_subdivide(g, n).graph;
    *subdivided = true;
    err << "notice: subdivided to " << s.vertex_count() << " vertices for n=" << n << "\n";
    return s;
}

struct Common {
    std::string graph;
    int n = 2;
    bool json = false;
};

void add_graph(CLI::App* cmd, Common& c, bool with_n = true) {
    cmd->add_option("-g,--graph", c.graph, "graph JSON file")->required()->check(CLI::ExistingFile);
    if (with_n) cmd->add_option("-n,--particles", c.n, "number of particles")->check(CLI::PositiveNumber);
    cmd->add_flag("--json", c.json, "emit JSON");
}

int cmd_homology(const Common& c, bool no_subdivide, std::ostream& out, std::ostream& err) {
    const auto t0 = std::chrono::steady_clock::now();
    const Input in = load_graph(c.graph);
    bool subdivided = false;
    const Graph g = oracle_graph(in.graph, c.n, no_subdivide, err, &subdivided);
    const CellComplex complex(g, c.n);
    const HomologyPresentation h(complex, false);
    const CellCounts counts = cell_counts(complex);
    if (c.json) {
        out << Json{{"command", "homology"},
                    {"input_digest", in.digest},
                    {"n", c.n},
                    {"subdivided", subdivided},
                    {"vertices", g.vertex_count()},
                    {"cells", {counts.c0, counts.c1, counts.c2}},
                    {"H0", AbelianGroup{h.components(), {}}.to_string()},
                    {"H1", h.group().to_string()}}
                   .dump(2)
            << "\n";
    } else {
        out << "cells: " << counts.c0 << " " << counts.c1 << " " << counts.c2 << "\n";
        out << "H0: " << AbelianGroup{h.components(), {}}.to_string() << "\n";
        out << "H1: " << h.group().to_string() << "\n";
        out << "time: " << std::fixed << std::setprecision(3) << seconds_since(t0) << " s\n";
    }
    return ok;
}

int cmd_predict(const Common& c, std::ostream& out, const Hooks& hooks) {
    const Input in = load_graph(c.graph);
    Prediction p = predict_h1(in.graph, c.n);
    if (hooks.adjust_prediction) hooks.adjust_prediction(p);
    if (c.json) {
        Json j{{"command", "predict"}, {"input_digest", in.digest}};
        j.update(prediction_json(p));
        out << j.dump(2) << "\n";
    } else {
        out << "beta1: " << p.beta1 << "\nN1: " << p.n1 << "\nN2: " << p.n2 << "\nN3: " << p.n3
            << "\nN3': " << p.n3_prime << "\nN3'': " << p.n3_doubleprime << "\nH1: " << p.group.to_string() << "\n";
    }
    return ok;
}

struct Comparison {
    std::string file, digest, predicted, computed;
    bool match = false;
    std::string error;
};

Comparison compare_one(const std::string& path, int n, bool no_subdivide, const Hooks& hooks) {
    Comparison r;
    r.file = path;
    std::ostringstream quiet;
    try {
        const Input in = load_graph(path);
        r.digest = in.digest;
        Prediction p = predict_h1(in.graph, n);
        if (hooks.adjust_prediction) hooks.adjust_prediction(p);
        bool subdivided = false;
        const Graph g = oracle_graph(in.graph, n, no_subdivide, quiet, &subdivided);
        const AbelianGroup computed = h1(CellComplex(g, n));
        r.predicted = p.group.to_string();
        r.computed = computed.to_string();
        r.match = p.group == computed;
    } catch (const std::exception& e) {
        r.error = e.what();
    }
    return r;
}

int cmd_compare(const Common& c, const std::string& corpus, bool no_subdivide, std::ostream& out, std::ostream& err,
                const Hooks& hooks) {
    std::vector<std::string> files;
    if (!corpus.empty()) {
        for (const auto& entry : std::filesystem::directory_iterator(corpus))
            if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path().string());
        std::sort(files.begin(), files.end());
        if (files.empty()) throw InputError("no .json graphs in " + corpus);
    } else if (!c.graph.empty()) {
        files.push_back(c.graph);
    } else {
        throw InputError("compare needs --graph or --corpus");
    }
    if (c.n >= 3 && !no_subdivide) err << "notice: graphs not sufficiently subdivided for n=" << c.n << " are subdivided\n";

    std::vector<Comparison> results(files.size());
    const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
    for (std::size_t start = 0; start < files.size(); start += workers) {
        std::vector<std::future<Comparison>> batch;
        for (std::size_t i = start; i < std::min(files.size(), start + workers); ++i)
            batch.push_back(std::async(std::launch::async, compare_one, files[i], c.n, no_subdivide, std::cref(hooks)));
        for (std::size_t i = 0; i < batch.size(); ++i) results[start + i] = batch[i].get();
    }

    bool any_error = false, all_match = true;
    for (const auto& r : results) {
        any_error |= !r.error.empty();
        all_match &= r.match;
    }
    if (c.json) {
        Json list = Json::array();
        for (const auto& r : results) {
            Json j{{"file", std::filesystem::path(r.file).filename().string()}, {"input_digest", r.digest}};
            if (r.error.empty()) {
                j["predicted"] = r.predicted;
                j["computed"] = r.computed;
                j["verdict"] = r.match ? "MATCH" : "MISMATCH";
            } else {
                j["error"] = r.error;
            }
            list.push_back(j);
        }
        out << Json{{"command", "compare"}, {"n", c.n}, {"results", list},
                    {"verdict", any_error ? "ERROR" : all_match ? "MATCH" : "MISMATCH"}}
                   .dump(2)
            << "\n";
    } else {
        for (const auto& r : results) {
            out << std::filesystem::path(r.file).filename().string() << ": ";
            if (!r.error.empty())
                out << "error: " << r.error << "\n";
            else
                out << (r.match ? "MATCH" : "MISMATCH") << " predicted " << r.predicted << " computed " << r.computed << "\n";
        }
    }
    if (any_error) {
        for (const auto& r : results)
            if (!r.error.empty()) err << "error: " << r.file << ": " << r.error << "\n";
        return input_error;
    }
    return all_match ? ok : mismatch;
}

int cmd_decompose(const Common& c, std::ostream& out) {
    const Input in = load_graph(c.graph);
    const Decomposition d = decompose(in.graph);
    const Prediction p = predict_h1(d, in.graph, c.n);
    Json comps = Json::array();
    for (const auto& m : d.components) {
        Json ve = Json::array();
        for (const Edge& e : m.virtual_edges) ve.push_back({e.u, e.v});
        comps.push_back({{"kind", to_string(m.kind)}, {"vertices", m.vertices}, {"edges", m.graph.edge_count()},
                         {"virtual_edges", ve}});
    }
    Json cuts = Json::array();
    for (const auto& cut : d.cuts) {
        Json j{{"vertices", cut.vertices}, {"mu", cut.mu}};
        if (cut.is_vertex()) j["nu"] = cut.nu;
        cuts.push_back(j);
    }
    if (c.json) {
        out << Json{{"command", "decompose"}, {"input_digest", in.digest}, {"components", comps}, {"cuts", cuts},
                    {"discarded_bridges", d.discarded_bridges}, {"prediction", prediction_json(p)}}
                   .dump(2)
            << "\n";
    } else {
        for (const auto& m : d.components) {
            out << to_string(m.kind) << " on";
            for (Vertex v : m.vertices) out << " " << v;
            out << " (" << m.graph.edge_count() << " edges, " << m.virtual_edges.size() << " virtual)\n";
        }
        for (const auto& cut : d.cuts) {
            out << (cut.is_vertex() ? "cut vertex" : "cut pair");
            for (Vertex v : cut.vertices) out << " " << v;
            out << " mu=" << cut.mu;
            if (cut.is_vertex()) out << " nu=" << cut.nu;
            out << "\n";
        }
        out << "H1: " << p.group.to_string() << "\n";
    }
    return ok;
}

int cmd_star(int E, int n, bool verify, bool json, std::ostream& out) {
    if (E < 3 || n < 2) throw InputError("star needs E >= 3 and n >= 2");
    const Integer closed = beta_star(n, E), incl = beta_star_inclusion_exclusion(n, E), alpha = beta_star_alpha_sum(n, E);
    bool agree = closed == incl && closed == alpha;
    Json j{{"command", "star"}, {"E", E}, {"n", n}};
    if (n <= E) j["gamma"] = integer_json(gamma_star(n, E));
    j["beta"] = integer_json(closed);
    j["beta_inclusion_exclusion"] = integer_json(incl);
    j["beta_alpha_sum"] = integer_json(alpha);
    if (verify) {
        const AbelianGroup h = h1(CellComplex(graphs::star(E, std::max(1, n - 1)), n));
        j["H1"] = h.to_string();
        agree &= h.torsion.empty() && Integer(h.rank) == closed;
    }
    j["verdict"] = agree ? "MATCH" : "MISMATCH";
    if (json) {
        out << j.dump(2) << "\n";
    } else {
        for (const auto& [k, v] : j.items())
            if (k != "command") out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
    return agree ? ok : mismatch;
}

// --- gauge ---

struct GaugeArgs {
    Common common;
    std::string potential, omega, targets;
    std::vector<int> edge;
};

Json generator_fluxes(const GaugePotential& p) {
    Json list = Json::array();
    if (!is_sufficiently_subdivided(p.graph(), p.particles())) return list;
    for (const auto& z : spanning_set(p.graph(), p.particles()))
        list.push_back({{"generator", z.provenance}, {"flux", to_string(frac(flux(p, z.chain)))}});
    return list;
}

int cmd_gauge_check(const GaugeArgs& a, std::ostream& out, std::ostream& err) {
    const Input in = load_graph(a.common.graph);
    const GaugePotential p = read_potential_file(a.potential, in.graph, a.common.n);
    const CellComplex c(in.graph, a.common.n);
    int failing = 0;
    for (const Cell2& cell : c.cells2())
        if (!is_integer(flux(p, c.boundary(cell)))) ++failing;
    if (!is_sufficiently_subdivided(in.graph, a.common.n))
        err << "notice: graph not sufficiently subdivided for n=" << a.common.n << ", generator fluxes omitted\n";
    const Json fluxes = generator_fluxes(p);
    if (a.common.json) {
        out << Json{{"command", "gauge check"}, {"input_digest", in.digest}, {"topological", failing == 0},
                    {"failing_2cells", failing}, {"fluxes", fluxes}}
                   .dump(2)
            << "\n";
    } else {
        out << "topological: " << (failing == 0 ? "yes" : "no") << " (" << failing << " failing 2-cells)\n";
        for (const auto& f : fluxes)
            out << f["generator"].get<std::string>() << ": " << f["flux"].get<std::string>() << "\n";
    }
    return failing == 0 ? ok : mismatch;
}

int cmd_gauge_split(const GaugeArgs& a, std::ostream& out) {
    const Input in = load_graph(a.common.graph);
    const GaugePotential p = read_potential_file(a.potential, in.graph, 2);
    const AbStatisticsSplit s = ab_statistics_split(p);
    out << Json{{"ab", potential_json(s.ab)}, {"statistics", potential_json(s.stat)}}.dump(2) << "\n";
    return ok;
}

int cmd_gauge_lift(const GaugeArgs& a, std::ostream& out) {
    const Input in = load_graph(a.common.graph);
    if (a.edge.size() != 2) throw InputError("--edge takes two vertices");
    const GaugePotential p = read_potential_file(a.potential, in.graph, 2);
    if (!in.graph.has_edge(a.edge[0], a.edge[1])) throw InputError("--edge is not an edge of the graph");
    LiftReport report;
    const GaugePotential q = lift_subdivision(p, Edge(a.edge[0], a.edge[1]), in.graph.vertex_count(), &report);
    out << Json{{"graph", graph_json(q.graph())},
                {"new_vertex", in.graph.vertex_count()},
                {"formulas_consistent", report.formulas_consistent},
                {"solved_cells", report.solved_cells},
                {"potential", potential_json(q)}}
               .dump(2)
        << "\n";
    return ok;
}

EdgePhases read_edge_phases(const std::string& path, const Graph& g) {
    EdgePhases omega;
    if (path.empty()) return omega;
    const Json j = Json::parse(read_text_file(path), nullptr, false);
    if (j.is_discarded() || !j.is_array()) throw InputError("edge phases must be a JSON array");
    for (const auto& item : j) {
        if (!item.is_object() || !item.contains("from") || !item.contains("to") || !item.contains("value") ||
            !item["from"].is_number_integer() || !item["to"].is_number_integer() || !item["value"].is_string())
            throw InputError("edge phase entry needs from, to, value");
        const Vertex u = item["from"].get<int>(), v = item["to"].get<int>();
        if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count() || !g.has_edge(u, v))
            throw InputError("edge phase on a non-edge");
        try {
            omega[{u, v}] = parse_rational(item["value"].get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
    }
    return omega;
}

int cmd_gauge_embed(const GaugeArgs& a, std::ostream& out) {
    const Input in = load_graph(a.common.graph);
    const GaugePotential stat = read_potential_file(a.potential, in.graph, 2);
    const GaugePotential p = build_n_particle(stat, read_edge_phases(a.omega, in.graph), a.common.n);
    out << potential_json(p).dump(2) << "\n";
    return ok;
}

int cmd_gauge_solve(const GaugeArgs& a, std::ostream& out) {
    const Input in = load_graph(a.common.graph);
    const CellComplex c(in.graph, a.common.n);
    const Json j = Json::parse(read_text_file(a.targets), nullptr, false);
    if (j.is_discarded() || !j.is_array()) throw InputError("targets must be a JSON array");
    std::vector<GeneratorCycle> generators;
    std::vector<std::pair<CellChain, Rational>> targets;
    for (const auto& item : j) {
        if (!item.is_object() || !item.contains("value") || !item["value"].is_string())
            throw InputError("target needs a string value");
        Rational value;
        try {
            value = parse_rational(item["value"].get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
        if (item.contains("generator")) {
            if (generators.empty()) generators = spanning_set(in.graph, a.common.n);
            if (!item["generator"].is_number_integer()) throw InputError("generator must be an index");
            const int k = item["generator"].get<int>();
            if (k < 0 || k >= static_cast<int>(generators.size())) throw InputError("generator index out of range");
            targets.push_back({generators[k].chain, value});
        } else if (item.contains("path") && item["path"].is_array()) {
            std::vector<Config> path;
            for (const auto& cfg : item["path"]) {
                if (!cfg.is_array()) throw InputError("path entries must be vertex lists");
                Config v;
                for (const auto& x : cfg) {
                    if (!x.is_number_integer()) throw InputError("path entries must be vertex lists");
                    v.push_back(x.get<int>());
                }
                std::sort(v.begin(), v.end());
                path.push_back(v);
            }
            if (path.size() < 2 || path.front() != path.back()) throw InputError("path must be closed");
            CellChain z;
            try {
                z = chain_of_path(path);
                c.to_vector(z);
            } catch (const std::exception& e) {
                throw InputError(std::string("path is not in the complex: ") + e.what());
            }
            targets.push_back({z, value});
        } else {
            throw InputError("target needs a generator index or a path");
        }
    }
    out << potential_json(solve_from_fluxes(c, targets)).dump(2) << "\n";
    return ok;
}

// --- spanning ---

int cmd_spanning(const Common& c, int root, const std::string& embedding_file, std::ostream& out, std::ostream& err) {
    const Input in = load_graph(c.graph);
    Embedding embedding;
    if (!embedding_file.empty()) {
        const Json j = Json::parse(read_text_file(embedding_file), nullptr, false);
        if (j.is_discarded() || !j.is_array()) throw InputError("embedding must be a JSON array of neighbor lists");
        try {
            embedding = j.get<Embedding>();
        } catch (const Json::exception& e) {
            throw InputError(e.what());
        }
    }
    bool subdivided = false;
    const Graph g = oracle_graph(in.graph, c.n, false, err, &subdivided);
    if (subdivided && !embedding.empty()) throw InputError("an embedding needs a sufficiently subdivided graph");
    const RootedOrderedTree t = rooted_ordered_tree(g, root >= 0 ? root : default_root(g, embedding), embedding);
    const auto cycles = spanning_set(t, c.n);
    const SpanReport r = verify_spanning(cycles, CellComplex(g, c.n));
    int ab = 0;
    for (const auto& z : cycles) ab += z.kind == CycleKind::ab;
    if (c.json) {
        Json list = Json::array();
        for (const auto& z : cycles) {
            Json path = Json::array();
            for (const Config& cfg : z.path) path.push_back(cfg);
            list.push_back({{"kind", z.kind == CycleKind::ab ? "AB" : "Y"}, {"provenance", z.provenance}, {"path", path}});
        }
        Json labels = Json::array();
        for (int l = 1; l <= g.vertex_count(); ++l) labels.push_back(t.vertex_of_label[l]);
        out << Json{{"command", "spanning"},
                    {"input_digest", in.digest},
                    {"n", c.n},
                    {"subdivided", subdivided},
                    {"root", t.root},
                    {"vertex_by_label", labels},
                    {"generators", list},
                    {"report",
                     {{"spans", r.spans},
                      {"rank", r.rank_achieved},
                      {"expected_rank", r.rank_total},
                      {"torsion", r.torsion_total},
                      {"redundancy", r.redundancy},
                      {"H1", r.group.to_string()}}}}
                   .dump(2)
            << "\n";
    } else {
        out << "root: " << t.root << "\n";
        for (const auto& z : cycles) out << z.provenance << "\n";
        out << "AB cycles: " << ab << "\nY cycles: " << cycles.size() - ab << "\n";
        out << "rank: " << r.rank_achieved << "/" << r.rank_total << "\nH1: " << r.group.to_string()
            << "\nspans: " << (r.spans ? "yes" : "no") << "\nredundancy: " << r.redundancy << "\n";
    }
    return r.spans ? ok : mismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Hooks& hooks) {
    CLI::App app{"Homology and gauge potentials of discrete graph configuration spaces", "confspace"};
    app.require_subcommand(1);

    Common homology_args, predict_args, compare_args, decompose_args, spanning_args;
    bool no_subdivide = false, compare_no_subdivide = false, star_verify = false, star_json = false;
    std::string corpus;
    int star_e = 0, star_n = 2, spanning_root = -1;
    std::string spanning_embedding;

    auto* homology = app.add_subcommand("homology", "cell counts and H1 by Smith normal form");
    add_graph(homology, homology_args);
    homology->add_flag("--no-subdivide", no_subdivide, "use the graph as given");

    auto* predict = app.add_subcommand("predict", "closed-form H1 from the connectivity decomposition");
    add_graph(predict, predict_args);

    auto* compare = app.add_subcommand("compare", "closed form against Smith normal form");
    compare->add_option("-g,--graph", compare_args.graph, "graph JSON file")->check(CLI::ExistingFile);
    compare->add_option("--corpus", corpus, "directory of graph JSON files")->check(CLI::ExistingDirectory);
    compare->add_option("-n,--particles", compare_args.n, "number of particles")->check(CLI::PositiveNumber);
    compare->add_flag("--json", compare_args.json, "emit JSON");
    compare->add_flag("--no-subdivide", compare_no_subdivide, "use the graphs as given");

    auto* decomp = app.add_subcommand("decompose", "marked components and cuts");
    add_graph(decomp, decompose_args);

    auto* star = app.add_subcommand("star", "star graph formulas");
    star->add_option("-E,--edges", star_e, "number of arms")->required();
    star->add_option("-n,--particles", star_n, "number of particles");
    star->add_flag("--verify", star_verify, "also compute H1 of the subdivided star");
    star->add_flag("--json", star_json, "emit JSON");

    GaugeArgs check_args, split_args, lift_args, embed_args, solve_args;
    auto* gauge = app.add_subcommand("gauge", "gauge potentials");
    gauge->require_subcommand(1);
    auto* check = gauge->add_subcommand("check", "topologicality and generator fluxes");
    add_graph(check, check_args.common);
    check->add_option("-p,--potential", check_args.potential, "potential JSON file")->required()->check(CLI::ExistingFile);
    auto* split = gauge->add_subcommand("split", "AB and statistics parts of a two-particle potential");
    add_graph(split, split_args.common, false);
    split->add_option("-p,--potential", split_args.potential, "potential JSON file")->required()->check(CLI::ExistingFile);
    auto* lift = gauge->add_subcommand("lift", "carry a two-particle potential to a subdivided edge");
    add_graph(lift, lift_args.common, false);
    lift->add_option("-p,--potential", lift_args.potential, "potential JSON file")->required()->check(CLI::ExistingFile);
    lift->add_option("--edge", lift_args.edge, "edge to subdivide")->required()->expected(2)->delimiter(',');
    auto* embed = gauge->add_subcommand("embed", "n-particle potential from a two-particle statistics potential");
    add_graph(embed, embed_args.common);
    embed->add_option("-p,--potential", embed_args.potential, "pure statistics potential")->required()->check(CLI::ExistingFile);
    embed->add_option("--omega", embed_args.omega, "single-particle edge phases")->check(CLI::ExistingFile);
    auto* solve = gauge->add_subcommand("solve", "potential with prescribed fluxes");
    add_graph(solve, solve_args.common);
    solve->add_option("-t,--targets", solve_args.targets, "targets JSON file")->required()->check(CLI::ExistingFile);

    auto* spanning = app.add_subcommand("spanning", "AB and Y generators and their span");
    add_graph(spanning, spanning_args);
    spanning->add_option("--root", spanning_root, "tree root");
    spanning->add_option("--embedding", spanning_embedding, "cyclic neighbor orders")->check(CLI::ExistingFile);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    }

    try {
        if (homology->parsed()) return cmd_homology(homology_args, no_subdivide, out, err);
        if (predict->parsed()) return cmd_predict(predict_args, out, hooks);
        if (compare->parsed()) return cmd_compare(compare_args, corpus, compare_no_subdivide, out, err, hooks);
        if (decomp->parsed()) return cmd_decompose(decompose_args, out);
        if (star->parsed()) return cmd_star(star_e, star_n, star_verify, star_json, out);
        if (check->parsed()) return cmd_gauge_check(check_args, out, err);
        if (split->parsed()) return cmd_gauge_split(split_args, out);
        if (lift->parsed()) return cmd_gauge_lift(lift_args, out);
        if (embed->parsed()) return cmd_gauge_embed(embed_args, out);
        if (solve->parsed()) return cmd_gauge_solve(solve_args, out);
        if (spanning->parsed()) return cmd_spanning(spanning_args, spanning_root, spanning_embedding, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    }
    return input_error;
}

}  // namespace confspace::cli
