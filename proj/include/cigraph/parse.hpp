#pragma once

#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cigraph/graph.hpp"

namespace cigraph {

enum class GraphFormat { EdgeList, Json, DotSubset };

namespace detail {

struct LabelTable {
    std::map<std::string, VertexId> index;
    std::vector<std::string> order;

    VertexId intern(const std::string& s) {
        auto it = index.find(s);
        if (it != index.end()) return it->second;
        VertexId id = static_cast<VertexId>(order.size());
        index.emplace(s, id);
        order.push_back(s);
        return id;
    }
};

inline Graph build(LabelTable& tab, const std::vector<std::pair<VertexId, VertexId>>& edges,
                   const char* what) {
    try {
        return Graph::from_edges(static_cast<int>(tab.order.size()), edges, tab.order);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

} // namespace detail

/// edge_list: one edge per line ("u v"); '#' starts a comment; an optional
/// header line "vertices: a b c" declares vertices up front (isolated ones
/// survive). Vertex ids are assigned in order of first appearance.
inline Graph parse_edge_list(const std::string& text) {
    detail::LabelTable tab;
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a)) continue;
        if (a == "vertices:" || a == "vertices") {
            std::string v;
            while (ls >> v) {
                if (v == ":") continue;
                tab.intern(v);
            }
            continue;
        }
        if (!(ls >> b) || (ls >> extra))
            throw ParseError("edge_list line " + std::to_string(lineno) +
                             ": expected exactly two tokens");
        VertexId u = tab.intern(a), w = tab.intern(b);
        if (u == w)
            throw ParseError("edge_list line " + std::to_string(lineno) + ": loop at " + a);
        for (const auto& [x, y] : edges)
            if ((x == u && y == w) || (x == w && y == u))
                throw ParseError("edge_list line " + std::to_string(lineno) +
                                 ": duplicate edge " + a + " " + b);
        edges.emplace_back(u, w);
    }
    return detail::build(tab, edges, "edge_list");
}

/// json: { "vertices": [labels], "edges": [[u,v], ...] }. Edge order defines
/// the variable order x_1..x_n. Labels may be strings or integers.
/// (Implemented in json_io.hpp to keep the JSON dependency in one place.)
Graph parse_json_graph(const std::string& text);

/// dot_subset: undirected `graph { a -- b; c; }`, identifiers only, no
/// attributes. A bare identifier statement declares an isolated vertex.
inline Graph parse_dot_subset(const std::string& text) {
    // Tokenize: identifiers, '--', '{', '}', ';'. Comments are not supported.
    std::vector<std::string> toks;
    size_t i = 0;
    auto is_ident = [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
    };
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (c == '{' || c == '}' || c == ';') {
            toks.push_back(std::string(1, c));
            ++i;
        } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '-') {
            toks.push_back("--");
            i += 2;
        } else if (is_ident(c)) {
            size_t j = i;
            while (j < text.size() && is_ident(text[j])) ++j;
            toks.push_back(text.substr(i, j - i));
            i = j;
        } else {
            throw ParseError("dot: unexpected character '" + std::string(1, c) + "'");
        }
    }
    size_t t = 0;
    auto expect = [&](const std::string& s) {
        if (t >= toks.size() || toks[t] != s)
            throw ParseError("dot: expected '" + s + "'");
        ++t;
    };
    if (t < toks.size() && toks[t] == "strict") ++t;
    expect("graph");
    if (t < toks.size() && toks[t] != "{") ++t; // optional graph name
    expect("{");
    detail::LabelTable tab;
    std::vector<std::pair<VertexId, VertexId>> edges;
    while (t < toks.size() && toks[t] != "}") {
        std::string a = toks[t++];
        if (a == ";" ) continue;
        if (a == "--" || a == "{")
            throw ParseError("dot: unexpected token '" + a + "'");
        VertexId u = tab.intern(a);
        while (t < toks.size() && toks[t] == "--") {
            ++t;
            if (t >= toks.size()) throw ParseError("dot: dangling '--'");
            std::string b = toks[t++];
            VertexId w = tab.intern(b);
            if (u == w) throw ParseError("dot: loop at " + b);
            edges.emplace_back(u, w);
            u = w;
        }
        if (t < toks.size() && toks[t] == ";") ++t;
    }
    expect("}");
    return detail::build(tab, edges, "dot");
}

inline Graph parse_graph(const std::string& text, GraphFormat format) {
    switch (format) {
        case GraphFormat::EdgeList: return parse_edge_list(text);
        case GraphFormat::Json: return parse_json_graph(text);
        case GraphFormat::DotSubset: return parse_dot_subset(text);
    }
    throw ParseError("unknown format");
}

inline std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "vertices:";
    for (VertexId v = 0; v < g.num_vertices(); ++v) out << ' ' << g.label(v);
    out << '\n';
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        auto ep = g.edge(e);
        out << g.label(ep.u) << ' ' << g.label(ep.v) << '\n';
    }
    return out.str();
}

} // namespace cigraph
