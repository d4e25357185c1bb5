#include "lmss/graph_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace lmss {

namespace {

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + '"';
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    std::vector<std::string> labels;
    std::unordered_map<std::string, Vertex> ids;
    std::vector<Edge> edges;
    std::set<Edge> seen;
    auto id = [&](const std::string& s) {
        auto [it, fresh] = ids.emplace(s, labels.size());
        if (fresh) labels.push_back(s);
        return it->second;
    };

    std::istringstream in{std::string(text)};
    std::string line;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream tokens(line);
        std::vector<std::string> tok;
        for (std::string t; tokens >> t;) tok.push_back(std::move(t));
        if (tok.empty()) continue;
        if (tok.size() > 2)
            throw ParseError(lineno, "expected one or two tokens, found " + std::to_string(tok.size()));
        if (tok.size() == 1) {
            id(tok[0]);
            continue;
        }
        if (tok[0] == tok[1]) throw ParseError(lineno, "self-loop at '" + tok[0] + "'");
        Vertex u = id(tok[0]), v = id(tok[1]);
        if (!seen.insert(std::minmax(u, v)).second)
            throw ParseError(lineno, "duplicate edge " + tok[0] + "-" + tok[1]);
        if (labels.size() > kMaxVertices)
            throw ParseError(lineno, "more than " + std::to_string(kMaxVertices) + " vertices");
        edges.emplace_back(u, v);
    }
    if (labels.size() > kMaxVertices)
        throw ParseError(0, "more than " + std::to_string(kMaxVertices) + " vertices");
    return Graph(std::move(labels), edges);
}

std::string to_edge_list(const Graph& g) {
    std::string out;
    for (const auto& l : g.labels()) out += l + '\n';
    for (auto [u, v] : g.edges()) out += g.label(u) + ' ' + g.label(v) + '\n';
    return out;
}

Graph parse_graph_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(0, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array())
        throw ParseError(0, "expected an object with a \"vertices\" array");
    std::vector<std::string> labels;
    std::unordered_map<std::string, Vertex> ids;
    for (const auto& v : doc["vertices"]) {
        if (!v.is_string()) throw ParseError(0, "vertex labels must be strings");
        ids.emplace(v.get<std::string>(), labels.size());
        labels.push_back(v.get<std::string>());
    }
    std::vector<Edge> edges;
    if (doc.contains("edges")) {
        if (!doc["edges"].is_array()) throw ParseError(0, "\"edges\" must be an array");
        for (const auto& e : doc["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
                throw ParseError(0, "each edge must be a 2-array of labels");
            auto a = ids.find(e[0].get<std::string>());
            auto b = ids.find(e[1].get<std::string>());
            if (a == ids.end() || b == ids.end())
                throw ParseError(0, "edge " + e.dump() + " names an undeclared vertex");
            edges.emplace_back(a->second, b->second);
        }
    }
    try {
        return Graph(std::move(labels), edges);
    } catch (const DomainError& e) {
        throw ParseError(0, e.what());
    }
}

std::string to_graph_json(const Graph& g) {
    nlohmann::json doc;
    doc["vertices"] = g.labels();
    doc["edges"] = nlohmann::json::array();
    for (auto [u, v] : g.edges()) doc["edges"].push_back({g.label(u), g.label(v)});
    return doc.dump();
}

std::string to_dot(const Graph& g) {
    std::string out = "graph G {\n";
    for (Vertex v : g.canonical_order())
        if (g.degree(v) == 0) out += "  " + dot_quote(g.label(v)) + ";\n";
    for (auto [u, v] : g.edges())
        out += "  " + dot_quote(g.label(u)) + " -- " + dot_quote(g.label(v)) + ";\n";
    return out + "}\n";
}

Graph load_graph(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(0, "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (path.extension() == ".json") return parse_graph_json(buf.str());
    return parse_edge_list(buf.str());
}

}  // namespace lmss
