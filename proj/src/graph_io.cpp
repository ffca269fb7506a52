#include "subsum/graph_io.hpp"

#include <sstream>

#include "json.hpp"
#include "subsum/errors.hpp"

namespace subsum {

std::string graph_to_json(const Graph& gr) {
    nlohmann::ordered_json j;
    j["n"] = gr.n;
    auto edges = nlohmann::ordered_json::array();
    for (const auto& [u, v] : gr.edge_list()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    if (!gr.labels.empty()) {
        auto labels = nlohmann::ordered_json::array();
        for (const auto& e : gr.labels) labels.push_back(e);
        j["labels"] = std::move(labels);
    }
    return j.dump();
}

Graph graph_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& ex) {
        throw ParseError(std::string("invalid JSON: ") + ex.what(), ex.byte);
    }
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw InvalidParameterError("graph JSON needs an integer field \"n\"");
    long long n = j["n"].get<long long>();
    if (n < 1) throw InvalidParameterError("graph must have at least one vertex");
    if (n > max_vertices())
        throw ResourceLimitError("graph exceeds the vertex cap of " +
                                 std::to_string(max_vertices()) +
                                 " (set SUBSUM_MAX_N to raise it)");

    Graph gr(static_cast<int>(n));
    if (!j.contains("edges") || !j["edges"].is_array())
        throw InvalidParameterError("graph JSON needs an array field \"edges\"");
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw InvalidParameterError("each edge must be a pair of vertex indices");
        long long u = e[0].get<long long>(), v = e[1].get<long long>();
        if (u < 0 || u >= n || v < 0 || v >= n || u == v)
            throw InvalidParameterError("edge endpoints must be distinct vertices in [0, n)");
        gr.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    if (j.contains("labels")) {
        if (!j["labels"].is_array() || j["labels"].size() != static_cast<std::size_t>(n))
            throw InvalidParameterError("labels must list one tuple per vertex");
        for (const auto& lab : j["labels"]) {
            if (!lab.is_array())
                throw InvalidParameterError("each label must be an integer tuple");
            Element e;
            for (const auto& coord : lab) {
                if (!coord.is_number_integer())
                    throw InvalidParameterError("each label must be an integer tuple");
                e.push_back(coord.get<int>());
            }
            gr.labels.push_back(std::move(e));
        }
    }
    return gr;
}

std::string graph_to_dot(const Graph& gr, const std::string& name) {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    out << "  node [shape=circle];\n";
    auto comps = components_with_profiles(gr);
    for (std::size_t c = 0; c < comps.size(); ++c) {
        out << "  subgraph cluster_" << c << " {\n";
        out << "    label=\"" << profile_to_string(comps[c].profile) << "\";\n";
        for (int v : comps[c].vertices) {
            out << "    v" << v << " [label=\"";
            if (v < static_cast<int>(gr.labels.size()))
                out << format_element(gr.labels[v]);
            else
                out << v;
            out << "\"];\n";
        }
        out << "  }\n";
    }
    for (const auto& [u, v] : gr.edge_list()) out << "  v" << u << " -- v" << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace subsum
