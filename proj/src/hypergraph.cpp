#include "mostset/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "mostset/errors.hpp"

namespace mostset {

Hypergraph make_hypergraph(std::vector<std::string> vertices,
                           std::vector<std::set<std::string>> edges) {
    if (edges.empty())
        throw InvalidHypergraph("hypergraph: the edge list must be non-empty");
    for (const auto& edge : edges)
        if (edge.empty())
            throw InvalidHypergraph("hypergraph: empty hyperedges are rejected");
    if (vertices.empty()) {
        std::set<std::string> mentioned;
        for (const auto& edge : edges) mentioned.insert(edge.begin(), edge.end());
        vertices.assign(mentioned.begin(), mentioned.end());
    } else {
        std::set<std::string> known(vertices.begin(), vertices.end());
        if (known.size() != vertices.size())
            throw InvalidHypergraph("hypergraph: duplicate vertex in the vertex list");
        for (const auto& edge : edges)
            for (const auto& v : edge)
                if (!known.contains(v))
                    throw InvalidHypergraph("hypergraph: edge vertex '" + v +
                                            "' not in the vertex list");
    }
    return Hypergraph{std::move(vertices), std::move(edges)};
}

std::set<std::string> average_state(const Hypergraph& h) {
    if (h.edges.empty())
        throw InvalidHypergraph("hypergraph: the edge list must be non-empty");
    std::map<std::string, std::size_t> counts;
    for (const auto& edge : h.edges)
        for (const auto& v : edge) ++counts[v];
    std::set<std::string> state;
    for (const auto& [v, count] : counts)
        if (2 * count > h.edges.size()) state.insert(v);
    return state;
}

bool is_balanced(const Hypergraph& h) { return average_state(h).empty(); }

Hypergraph parse_hypergraph_text(std::string_view text) {
    std::vector<std::string> vertices;
    std::set<std::string> seen;
    auto declare = [&](const std::string& v) {
        if (seen.insert(v).second) vertices.push_back(v);
    };
    std::vector<std::set<std::string>> edges;

    std::istringstream lines{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream tokens(line);
        std::string head;
        if (!(tokens >> head)) continue;
        if (head == "vertex") {
            std::string v;
            if (!(tokens >> v))
                throw InputError("hypergraph text: missing vertex name on line " +
                                 std::to_string(lineno));
            declare(v);
            std::string extra;
            while (tokens >> extra) declare(extra);
        } else if (head == "edge") {
            std::string brace;
            if (!(tokens >> brace) || brace != "{")
                throw InputError("hypergraph text: expected '{' on line " +
                                 std::to_string(lineno));
            std::set<std::string> edge;
            std::string token;
            bool closed = false;
            while (tokens >> token) {
                if (token == "}") {
                    closed = true;
                    break;
                }
                declare(token);
                edge.insert(token);
            }
            if (!closed)
                throw InputError("hypergraph text: missing '}' on line " +
                                 std::to_string(lineno));
            edges.push_back(std::move(edge));
        } else {
            throw InputError("hypergraph text: unknown directive '" + head +
                             "' on line " + std::to_string(lineno));
        }
    }
    return make_hypergraph(std::move(vertices), std::move(edges));
}

std::vector<VertexDensity> average_state_infinite(
    const InfiniteHypergraph& h, const std::vector<std::string>& candidates) {
    const EventuallyPeriodicSet nat = EventuallyPeriodicSet::naturals();
    std::vector<VertexDensity> state;
    for (const std::string& v : candidates) {
        auto cert = h.edge_family.certificate(Element{v});
        if (!cert)
            throw CertificateRequired("no density certificate for vertex '" + v + "'");
        if (cert->is_infinite() && most(nat, *cert))
            state.push_back({v, cert->density()});
    }
    return state;
}

}  // namespace mostset
