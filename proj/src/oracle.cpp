#include "gspmixdom/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace gspmixdom {

namespace {

void require(const Multigraph& graph, const Element& el) {
    if (!graph.contains(el))
        throw std::out_of_range(std::string(el.is_vertex() ? "vertex " : "edge ") + std::to_string(el.index) +
                                " is not in the graph");
}

// Calls mark on each element of N^md[r]; an element may be reported twice.
template <class Mark>
void for_each_neighbor(const Multigraph& graph, const Element& r, Mark mark) {
    if (r.is_vertex()) {
        mark(r);
        for (EdgeIndex e : graph.incident(r.index)) {
            mark(Element::edge(e));
            mark(Element::vertex(graph.edge(e).other(r.index)));
        }
        return;
    }
    const Edge& edge = graph.edge(r.index);
    mark(Element::vertex(edge.u));
    mark(Element::vertex(edge.v));
    for (VertexIndex end : {edge.u, edge.v})
        for (EdgeIndex e : graph.incident(end)) mark(Element::edge(e));
}

}  // namespace

std::vector<Element> closed_mixed_neighborhood(const Multigraph& graph, const Element& r) {
    require(graph, r);
    std::vector<Element> out;
    for_each_neighbor(graph, r, [&](const Element& el) { out.push_back(el); });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<Element> first_undominated(const Multigraph& graph, std::span<const Element> set) {
    const std::size_t nv = graph.vertex_count();
    std::vector<char> in(graph.element_count(), 0);
    for (const Element& el : set) {
        require(graph, el);
        in[el.is_vertex() ? el.index : nv + el.index] = 1;
    }
    auto dominated = [&](const Element& r) {
        bool hit = false;
        for_each_neighbor(graph, r, [&](const Element& el) { hit = hit || in[el.is_vertex() ? el.index : nv + el.index]; });
        return hit;
    };
    for (VertexIndex v = 0; v < nv; ++v)
        if (!dominated(Element::vertex(v))) return Element::vertex(v);
    for (EdgeIndex e = 0; e < graph.edge_count(); ++e)
        if (!dominated(Element::edge(e))) return Element::edge(e);
    return std::nullopt;
}

bool is_mixed_dominating(const Multigraph& graph, std::span<const Element> set) {
    return !first_undominated(graph, set).has_value();
}

OracleResult brute_force(const Multigraph& graph, bool force) {
    const std::size_t n = graph.element_count();
    if (n > kOracleElementCeiling || (n > kOracleElementLimit && !force))
        throw SizeLimitExceeded("brute force refuses " + std::to_string(n) + " elements (limit " +
                                std::to_string(force ? kOracleElementCeiling : kOracleElementLimit) + ")");

    // Bit positions: vertices by name, then edges by index. Lower bit = earlier.
    std::vector<Element> order;
    order.reserve(n);
    std::vector<VertexIndex> vs(graph.vertex_count());
    std::iota(vs.begin(), vs.end(), VertexIndex{0});
    std::sort(vs.begin(), vs.end(), [&](VertexIndex a, VertexIndex b) { return graph.name(a) < graph.name(b); });
    std::vector<std::size_t> vertex_bit(graph.vertex_count());
    for (std::size_t k = 0; k < vs.size(); ++k) {
        vertex_bit[vs[k]] = k;
        order.push_back(Element::vertex(vs[k]));
    }
    for (EdgeIndex e = 0; e < graph.edge_count(); ++e) order.push_back(Element::edge(e));
    auto bit = [&](const Element& el) -> std::uint64_t {
        return std::uint64_t{1} << (el.is_vertex() ? vertex_bit[el.index] : graph.vertex_count() + el.index);
    };

    std::vector<std::uint64_t> neighborhood(n, 0);
    for (std::size_t k = 0; k < n; ++k)
        for_each_neighbor(graph, order[k], [&](const Element& el) { neighborhood[k] |= bit(el); });

    auto dominates = [&](std::uint64_t s) {
        return std::all_of(neighborhood.begin(), neighborhood.end(), [s](std::uint64_t m) { return (m & s) != 0; });
    };

    OracleResult result;
    for (std::size_t k = 0; k <= n; ++k) {
        std::uint64_t found = 0;
        std::uint64_t best = 0;
        if (k == 0) {
            if (dominates(0)) found = 1;
        } else {
            const std::uint64_t limit = std::uint64_t{1} << n;
            // Gosper's hack: all k-bit masks below 2^n in increasing order.
            for (std::uint64_t s = (std::uint64_t{1} << k) - 1; s < limit;) {
                if (dominates(s)) {
                    // Lexicographic on sorted positions: the lowest differing bit decides.
                    if (found == 0 || ((s ^ best) & -(s ^ best) & s)) best = s;
                    ++found;
                }
                const std::uint64_t c = s & -s;
                const std::uint64_t r = s + c;
                s = (((r ^ s) >> 2) / c) | r;
            }
        }
        if (found == 0) continue;
        result.gamma_m = k;
        result.count = found;
        for (std::size_t b = 0; b < n; ++b)
            if (best >> b & 1) result.witness.push_back(order[b]);
        return result;
    }
    throw std::logic_error("brute_force: V and E together always dominate");
}

}  // namespace gspmixdom
