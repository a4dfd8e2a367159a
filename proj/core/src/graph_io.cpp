#include "spectralwl/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <string>

#include <json.hpp>

#include "spectralwl/errors.hpp"

namespace spectralwl {

namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

long parse_index(const std::string& tok, int line_no) {
    std::size_t pos = 0;
    long value = 0;
    try {
        value = std::stol(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError("expected an integer node index, got '" + tok + "'", line_no);
    }
    if (pos != tok.size())
        throw ParseError("expected an integer node index, got '" + tok + "'", line_no);
    return value;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    bool declared_n = false;
    long n_declared = 0;
    long max_index = -1;
    std::vector<std::pair<int, int>> edges;
    bool seen_content = false;

    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        if (!seen_content && line.rfind("n=", 0) == 0) {
            n_declared = parse_index(trim(line.substr(2)), line_no);
            if (n_declared < 0) throw DomainError("declared node count is negative");
            declared_n = true;
            seen_content = true;
            continue;
        }
        seen_content = true;
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a >> b)) throw ParseError("expected '<u> <v>'", line_no);
        if (ls >> extra)
            throw ParseError("expected exactly two node indices (weighted edges are not supported)",
                             line_no);
        long u = parse_index(a, line_no);
        long v = parse_index(b, line_no);
        if (u < 0 || v < 0) throw DomainError("negative node index on line " + std::to_string(line_no));
        if (u == v) throw DomainError("self-loop at node " + std::to_string(u) + " on line " +
                                      std::to_string(line_no));
        max_index = std::max({max_index, u, v});
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    long n = declared_n ? n_declared : max_index + 1;
    if (declared_n && max_index >= n_declared)
        throw DomainError("edge endpoint " + std::to_string(max_index) +
                          " exceeds declared node count " + std::to_string(n_declared));
    return Graph::create(static_cast<int>(n), std::move(edges));
}

Graph parse_json_graph(const json& j) {
    if (!j.is_object()) throw ParseError("JSON graph must be an object");
    if (!j.contains("edges")) throw ParseError("JSON graph is missing the \"edges\" field");
    if (!j["edges"].is_array()) throw ParseError("\"edges\" must be an array");
    std::vector<std::pair<int, int>> edges;
    long max_index = -1;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw ParseError("each edge must be a 2-element integer array");
        long u = e[0].get<long>();
        long v = e[1].get<long>();
        if (u < 0 || v < 0) throw DomainError("negative node index in edge list");
        if (u == v) throw DomainError("self-loop at node " + std::to_string(u));
        max_index = std::max({max_index, u, v});
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    long n = max_index + 1;
    if (j.contains("n")) {
        if (!j["n"].is_number_integer()) throw ParseError("\"n\" must be an integer");
        n = j["n"].get<long>();
        if (max_index >= n)
            throw DomainError("edge endpoint exceeds declared node count " + std::to_string(n));
    }
    return Graph::create(static_cast<int>(n), std::move(edges));
}

SymmetricMatrix parse_json_matrix(const json& j) {
    const auto& rows = j["matrix"];
    if (!rows.is_array() || rows.empty()) throw ParseError("\"matrix\" must be a non-empty array");
    std::size_t n = rows.size();
    if (j.contains("n") && j["n"].get<std::size_t>() != n)
        throw DomainError("\"n\" does not match the matrix dimension");
    std::vector<double> a;
    a.reserve(n * n);
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != n)
            throw ParseError("matrix rows must all have length n");
        for (const auto& x : row) {
            if (!x.is_number()) throw ParseError("matrix entries must be numbers");
            a.push_back(x.get<double>());
        }
    }
    return SymmetricMatrix(static_cast<int>(n), std::move(a));
}

}  // namespace

Graph parse_graph(const std::string& text, GraphFormat format) {
    if (format == GraphFormat::edge_list) return parse_edge_list(text);
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return parse_json_graph(j);
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
    if (format == GraphFormat::edge_list) {
        std::ostringstream out;
        out << "n=" << g.n << "\n";
        for (auto [u, v] : g.edges) out << u << " " << v << "\n";
        return out.str();
    }
    json j;
    j["n"] = g.n;
    j["edges"] = json::array();
    for (auto [u, v] : g.edges) j["edges"].push_back({u, v});
    return j.dump();
}

GraphOrMatrix parse_input_text(const std::string& text) {
    std::string t = trim(text);
    if (!t.empty() && t[0] == '{') {
        json j;
        try {
            j = json::parse(t);
        } catch (const json::parse_error& e) {
            throw ParseError(std::string("invalid JSON: ") + e.what());
        }
        if (j.contains("matrix")) return parse_json_matrix(j);
        return parse_json_graph(j);
    }
    return parse_edge_list(text);
}

std::vector<Graph> parse_graph_array(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_array()) throw ParseError("expected a JSON array of graphs");
    std::vector<Graph> graphs;
    graphs.reserve(j.size());
    for (const auto& g : j) graphs.push_back(parse_json_graph(g));
    return graphs;
}

}  // namespace spectralwl
