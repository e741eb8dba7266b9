#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mostset/indexed_family.hpp"
#include "mostset/rational.hpp"

namespace mostset {

/// Finite hypergraph: an ordered vertex list and an ordered list of
/// hyperedges (non-empty vertex sets). The edge list is a multiset; a
/// vertex appears at most once within one edge.
struct Hypergraph {
    std::vector<std::string> vertices;
    std::vector<std::set<std::string>> edges;
};

/// Validates and builds a hypergraph. Throws InvalidHypergraph when the
/// edge list is empty, an edge is empty, or an edge mentions an unknown
/// vertex. An empty vertex list is filled in from the edges.
Hypergraph make_hypergraph(std::vector<std::string> vertices,
                           std::vector<std::set<std::string>> edges);

inline std::size_t order(const Hypergraph& h) { return h.vertices.size(); }
inline std::size_t size(const Hypergraph& h) { return h.edges.size(); }

/// The average state: vertices lying in strictly more than half of the
/// hyperedges. Viewing the edges as the stages of a discrete evolution,
/// this is the majority state of the system; it need not be one of the
/// edges.
std::set<std::string> average_state(const Hypergraph& h);

/// Balanced iff the average state is empty.
bool is_balanced(const Hypergraph& h);

/// Hand-authoring format: one item per line,
///   edge { v1 v4 }
///   vertex v5
/// with '#' comments. Vertices are the declared ones plus every vertex
/// mentioned by an edge, in first-mention order.
Hypergraph parse_hypergraph_text(std::string_view text);

/// Countably infinite hypergraph: hyperedges indexed by the naturals,
/// presented as an indexed family over the vertex domain
/// (v in e_j iff membership(v, j)).
struct InfiniteHypergraph {
    IndexedFamily edge_family;
};

struct VertexDensity {
    std::string vertex;
    Density density;  // density of the vertex's edge-index set
};

/// Average state of an infinite hypergraph over the candidate vertices:
/// those whose edge-index set holds Most over the naturals, annotated
/// with the exact density. Throws CertificateRequired when a candidate
/// has no certificate.
std::vector<VertexDensity> average_state_infinite(const InfiniteHypergraph& h,
                                                  const std::vector<std::string>& candidates);

}  // namespace mostset
