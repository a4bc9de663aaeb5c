#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gspmixdom/model.hpp"

namespace gspmixdom {

struct Edge {
    VertexIndex u;
    VertexIndex v;

    VertexIndex other(VertexIndex x) const noexcept { return x == u ? v : u; }
};

/// Undirected multigraph with named vertices and indexed edges. Parallel
/// edges are distinct; loops are rejected.
class Multigraph {
public:
    Multigraph() = default;

    /// Vertices are numbered in order of first appearance.
    static Multigraph from_edges(const std::vector<std::pair<std::string, std::string>>& edges);

    VertexIndex add_vertex(std::string_view name);
    EdgeIndex add_edge(VertexIndex u, VertexIndex v);

    std::size_t vertex_count() const noexcept { return names_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::size_t element_count() const noexcept { return names_.size() + edges_.size(); }

    const std::string& name(VertexIndex v) const { return names_.at(v); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const Edge& edge(EdgeIndex e) const { return edges_.at(e); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<EdgeIndex>& incident(VertexIndex v) const { return incidence_.at(v); }

    std::optional<VertexIndex> find(std::string_view name) const;
    bool contains(const Element& el) const noexcept;

    /// Number of incident edges, parallel edges counted separately.
    std::size_t degree(VertexIndex v) const { return incidence_.at(v).size(); }
    /// Throws std::out_of_range for an unknown name.
    std::size_t degree(std::string_view name) const;

    bool is_connected() const;

    /// Human-readable element label: the vertex name, or "e<k>(u,v)".
    std::string describe(const Element& el) const;

private:
    std::vector<std::string> names_;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeIndex>> incidence_;
    std::unordered_map<std::string, VertexIndex> lookup_;
};

struct RealizedGraph {
    Multigraph graph;
    VertexIndex source;
    VertexIndex sink;
};

/// The graph a parse tree denotes. Vertex indices coincide with the tree's
/// vertex indices and edge k is leaf k.
RealizedGraph realize(const ParseTree& tree);

/// "u v" per line, preceded by a comment naming the terminals when given.
void write_edge_list(std::ostream& out, const Multigraph& graph,
                     std::optional<std::pair<VertexIndex, VertexIndex>> terminals = std::nullopt);

/// Graphviz text; terminals are drawn as double circles.
void write_dot(std::ostream& out, const Multigraph& graph,
               std::optional<std::pair<VertexIndex, VertexIndex>> terminals = std::nullopt);

/// Reads "u v" lines; blank lines and '#' comments are skipped. Throws
/// std::runtime_error naming the line on malformed input or loops.
Multigraph read_edge_list(std::istream& in);
Multigraph read_edge_list(std::string_view text);

}  // namespace gspmixdom
