#include "gspmixdom/realizer.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace gspmixdom {

Multigraph Multigraph::from_edges(const std::vector<std::pair<std::string, std::string>>& edges) {
    Multigraph g;
    for (const auto& [u, v] : edges) {
        const VertexIndex a = g.add_vertex(u);
        const VertexIndex b = g.add_vertex(v);
        g.add_edge(a, b);
    }
    return g;
}

VertexIndex Multigraph::add_vertex(std::string_view name) {
    auto [it, inserted] = lookup_.try_emplace(std::string(name), static_cast<VertexIndex>(names_.size()));
    if (inserted) {
        names_.emplace_back(name);
        incidence_.emplace_back();
    }
    return it->second;
}

EdgeIndex Multigraph::add_edge(VertexIndex u, VertexIndex v) {
    if (u >= names_.size() || v >= names_.size()) throw std::out_of_range("add_edge: unknown vertex");
    if (u == v) throw std::invalid_argument("add_edge: loop at '" + names_[u] + "'");
    const auto e = static_cast<EdgeIndex>(edges_.size());
    edges_.push_back({u, v});
    incidence_[u].push_back(e);
    incidence_[v].push_back(e);
    return e;
}

std::optional<VertexIndex> Multigraph::find(std::string_view name) const {
    auto it = lookup_.find(std::string(name));
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
}

bool Multigraph::contains(const Element& el) const noexcept {
    return el.is_vertex() ? el.index < names_.size() : el.index < edges_.size();
}

std::size_t Multigraph::degree(std::string_view name) const {
    auto v = find(name);
    if (!v) throw std::out_of_range("unknown vertex '" + std::string(name) + "'");
    return degree(*v);
}

bool Multigraph::is_connected() const {
    if (names_.empty()) return true;
    std::vector<char> seen(names_.size(), 0);
    std::vector<VertexIndex> todo{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!todo.empty()) {
        const VertexIndex v = todo.back();
        todo.pop_back();
        for (EdgeIndex e : incidence_[v]) {
            const VertexIndex w = edges_[e].other(v);
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                todo.push_back(w);
            }
        }
    }
    return reached == names_.size();
}

std::string Multigraph::describe(const Element& el) const {
    if (el.is_vertex()) return names_.at(el.index);
    const Edge& e = edges_.at(el.index);
    return "e" + std::to_string(el.index) + "(" + names_[e.u] + "," + names_[e.v] + ")";
}

RealizedGraph realize(const ParseTree& tree) {
    Multigraph g;
    for (const std::string& n : tree.names()) g.add_vertex(n);
    for (const LeafEdge& leaf : leaf_order(tree)) g.add_edge(leaf.u, leaf.v);
    return {std::move(g), tree.source(), tree.sink()};
}

void write_edge_list(std::ostream& out, const Multigraph& graph,
                     std::optional<std::pair<VertexIndex, VertexIndex>> terminals) {
    if (terminals) out << "# terminals " << graph.name(terminals->first) << ' ' << graph.name(terminals->second) << '\n';
    for (const Edge& e : graph.edges()) out << graph.name(e.u) << ' ' << graph.name(e.v) << '\n';
}

void write_dot(std::ostream& out, const Multigraph& graph,
               std::optional<std::pair<VertexIndex, VertexIndex>> terminals) {
    out << "graph G {\n";
    for (VertexIndex v = 0; v < graph.vertex_count(); ++v) {
        out << "  \"" << graph.name(v) << '"';
        if (terminals && (v == terminals->first || v == terminals->second)) out << " [shape=doublecircle]";
        out << ";\n";
    }
    for (EdgeIndex e = 0; e < graph.edge_count(); ++e) {
        const Edge& edge = graph.edge(e);
        out << "  \"" << graph.name(edge.u) << "\" -- \"" << graph.name(edge.v) << "\" [label=\"e" << e << "\"];\n";
    }
    out << "}\n";
}

Multigraph read_edge_list(std::istream& in) {
    Multigraph g;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string u, v, extra;
        if (!(fields >> u)) continue;
        auto bad = [&](const std::string& why) {
            return std::runtime_error("edge list line " + std::to_string(lineno) + ": " + why);
        };
        if (!(fields >> v)) throw bad("expected two vertex names");
        if (fields >> extra) throw bad("unexpected '" + extra + "'");
        if (!is_valid_name(u) || !is_valid_name(v)) throw bad("invalid vertex name");
        if (u == v) throw bad("loop at '" + u + "'");
        const VertexIndex a = g.add_vertex(u);
        const VertexIndex b = g.add_vertex(v);
        g.add_edge(a, b);
    }
    return g;
}

Multigraph read_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return read_edge_list(in);
}

}  // namespace gspmixdom
