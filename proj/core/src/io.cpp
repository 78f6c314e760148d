#include "reconf/io.hpp"

#include <fstream>
#include <sstream>

namespace reconf {

namespace {
std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}
}  // namespace

std::string to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph g {\n";
    for (int v = 0; v < g.vertex_count(); ++v) out << "  " << quoted(g.name(v)) << ";\n";
    for (auto [u, v] : g.edges())
        out << "  " << quoted(g.name(u)) << " -- " << quoted(g.name(v)) << ";\n";
    out << "}\n";
    return out.str();
}

nlohmann::ordered_json reconf_to_json(const LabeledReconfGraph& r) {
    nlohmann::ordered_json j;
    j["rule"] = rule_name(r.rule.tag);
    j["k"] = r.rule.k;
    auto nodes = nlohmann::ordered_json::array();
    for (const auto& c : r.labels) {
        auto names = nlohmann::ordered_json::array();
        for (int v : c.members()) names.push_back(r.base.name(v));
        nodes.push_back(std::move(names));
    }
    j["nodes"] = std::move(nodes);
    auto edges = nlohmann::ordered_json::array();
    for (auto [u, v] : r.graph.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    return j;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write file: " + path);
    out << content;
}

}  // namespace reconf
