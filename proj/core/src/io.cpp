#include "confspace/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace confspace {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
}

int as_int(const json& j, const char* what) {
    if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
    return j.get<int>();
}

}  // namespace

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Graph parse_graph(const std::string& text, bool internal) {
    const json j = parse_json(text);
    if (!j.is_object()) throw InputError("graph must be a JSON object");
    if (!j.contains("vertices")) throw InputError("missing \"vertices\"");
    if (!j.contains("edges") || !j["edges"].is_array()) throw InputError("missing \"edges\" array");
    const int v = as_int(j["vertices"], "vertices");
    if (v < 0) throw InputError("vertices must be nonnegative");
    std::vector<Edge> edges;
    for (const json& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2) throw InputError("edge must be a pair");
        const int a = as_int(e[0], "edge endpoint"), b = as_int(e[1], "edge endpoint");
        if (a < 0 || b < 0 || a >= v || b >= v) throw InputError("edge endpoint out of range");
        if (a == b) throw InputError("self-loop");
        edges.emplace_back(a, b);
    }
    std::string name;
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw InputError("name must be a string");
        name = j["name"].get<std::string>();
    }
    Graph g(v, std::move(edges), std::move(name));
    if (!internal) {
        if (!g.is_simple()) throw InputError("graph is not simple");
        if (v == 0 || !g.is_connected()) throw InputError("graph not connected");
    }
    return g;
}

Graph read_graph_file(const std::string& path, bool internal) { return parse_graph(read_text_file(path), internal); }

std::string write_graph(const Graph& g) {
    json j;
    j["vertices"] = g.vertex_count();
    j["edges"] = json::array();
    for (const Edge& e : g.edges()) j["edges"].push_back({e.u, e.v});
    if (!g.name().empty()) j["name"] = g.name();
    return j.dump();
}

GaugePotential parse_potential(const std::string& text, const Graph& g, int n) {
    const json j = parse_json(text);
    if (!j.is_array()) throw InputError("potential must be a JSON array");
    GaugePotential p(g, n);
    for (const json& item : j) {
        if (!item.is_object() || !item.contains("spectators") || !item.contains("from") || !item.contains("to") ||
            !item.contains("value"))
            throw InputError("potential entry needs spectators, from, to, value");
        Config s;
        if (!item["spectators"].is_array()) throw InputError("spectators must be an array");
        for (const json& v : item["spectators"]) s.push_back(as_int(v, "spectator"));
        std::sort(s.begin(), s.end());
        const Move m{s, as_int(item["from"], "from"), as_int(item["to"], "to")};
        if (m.from == m.to || m.from < 0 || m.to < 0 || m.from >= g.vertex_count() || m.to >= g.vertex_count() ||
            !p.is_cell(m.cell()))
            throw InputError("potential entry is not a 1-cell");
        Rational value;
        try {
            value = item["value"].is_string() ? parse_rational(item["value"].get<std::string>())
                                              : Rational(as_int(item["value"], "value"));
        } catch (const std::invalid_argument& e) {
            throw InputError(std::string("bad value: ") + e.what());
        }
        p.set(m, p.value(m) + value);
    }
    return p;
}

GaugePotential read_potential_file(const std::string& path, const Graph& g, int n) {
    return parse_potential(read_text_file(path), g, n);
}

std::string write_potential(const GaugePotential& p) {
    json j = json::array();
    for (const auto& [cell, value] : p.values())
        j.push_back({{"spectators", cell.spectators}, {"from", cell.edge.u}, {"to", cell.edge.v}, {"value", to_string(value)}});
    return j.dump();
}

}  // namespace confspace
