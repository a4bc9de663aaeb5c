#pragma once

// Test-only helpers that deliberately avoid the library's own generator and
// DP so they can serve as independent references.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "gspmixdom/model.hpp"
#include "gspmixdom/states.hpp"

namespace testsupport {

/// Every expression with exactly `leaves` leaves over all binary shapes and
/// all three composition kinds, with fresh vertex names drawn as needed.
inline std::vector<std::string> all_expressions(int leaves) {
    struct Shape {
        std::vector<Shape> kids;  // empty = leaf, else exactly two
    };
    std::function<std::vector<Shape>(int)> shapes = [&](int n) {
        std::vector<Shape> out;
        if (n == 1) {
            out.push_back({});
            return out;
        }
        for (int k = 1; k < n; ++k)
            for (const Shape& l : shapes(k))
                for (const Shape& r : shapes(n - k)) out.push_back(Shape{{l, r}});
        return out;
    };

    std::vector<std::string> out;
    for (const Shape& shape : shapes(leaves)) {
        const int internal = leaves - 1;
        int combos = 1;
        for (int i = 0; i < internal; ++i) combos *= 3;
        for (int code = 0; code < combos; ++code) {
            int cursor = code;
            int fresh = 2;
            std::function<std::string(const Shape&, const std::string&, const std::string&)> emit =
                [&](const Shape& n, const std::string& s, const std::string& t) -> std::string {
                if (n.kids.empty()) return "e(" + s + "," + t + ")";
                const int kind = cursor % 3;
                cursor /= 3;
                if (kind == 0) {
                    const std::string z = "n" + std::to_string(fresh++);
                    const std::string l = emit(n.kids[0], s, z);
                    return "s(" + l + "," + emit(n.kids[1], z, t) + ")";
                }
                if (kind == 1) {
                    const std::string l = emit(n.kids[0], s, t);
                    return "p(" + l + "," + emit(n.kids[1], s, t) + ")";
                }
                const std::string z = "n" + std::to_string(fresh++);
                const std::string l = emit(n.kids[0], s, t);
                return "g(" + l + "," + emit(n.kids[1], t, z) + ")";
            };
            out.push_back(emit(shape, "n0", "n1"));
        }
    }
    return out;
}

struct CellRef {
    std::uint32_t size = UINT32_MAX;
    std::uint64_t count = 0;
};

/// Reference table for the p-graph below `node`, by enumerating all subsets
/// of its vertices and edges.
///
/// Terminal x's flags: x in S; some edge at x in S; x dominated (in S, or an
/// incident edge or neighbour in S); every edge at x except those joining the
/// two terminals dominated. Non-terminal vertices and edges without a
/// terminal endpoint must be dominated.
inline std::array<CellRef, 49> restricted_cells(const gspmixdom::ParseTree& tree, gspmixdom::NodeIndex node) {
    using namespace gspmixdom;
    std::vector<std::pair<VertexIndex, VertexIndex>> edges;
    std::function<void(NodeIndex)> collect = [&](NodeIndex n) {
        const TreeNode& tn = tree.node(n);
        if (tn.is_leaf()) {
            edges.emplace_back(tn.s, tn.t);
            return;
        }
        collect(tn.left);
        collect(tn.right);
    };
    collect(node);
    const VertexIndex x = tree.node(node).s;
    const VertexIndex y = tree.node(node).t;

    std::map<VertexIndex, int> vid;
    for (auto [u, v] : edges) {
        vid.emplace(u, 0);
        vid.emplace(v, 0);
    }
    int next = 0;
    for (auto& [v, id] : vid) id = next++;
    const int nv = next;
    const int ne = static_cast<int>(edges.size());
    const int total = nv + ne;

    std::array<CellRef, 49> cells{};
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << total); ++mask) {
        auto vin = [&](VertexIndex v) { return (mask >> vid[v] & 1) != 0; };
        auto ein = [&](int e) { return (mask >> (nv + e) & 1) != 0; };

        auto edge_dominated = [&](int e) {
            const auto [a, b] = edges[e];
            if (ein(e) || vin(a) || vin(b)) return true;
            for (int f = 0; f < ne; ++f) {
                if (f == e || !ein(f)) continue;
                const auto [c, d] = edges[f];
                if (c == a || c == b || d == a || d == b) return true;
            }
            return false;
        };
        auto vertex_dominated = [&](VertexIndex v) {
            if (vin(v)) return true;
            for (int e = 0; e < ne; ++e) {
                const auto [a, b] = edges[e];
                if (a != v && b != v) continue;
                if (ein(e) || vin(a == v ? b : a)) return true;
            }
            return false;
        };

        bool ok = true;
        for (auto [v, id] : vid)
            if (v != x && v != y && !vertex_dominated(v)) ok = false;
        for (int e = 0; e < ne && ok; ++e) {
            const auto [a, b] = edges[e];
            if (a != x && a != y && b != x && b != y && !edge_dominated(e)) ok = false;
        }
        if (!ok) continue;

        auto state = [&](VertexIndex t, VertexIndex other) {
            StateFlags f;
            f.in_set = vin(t);
            f.dominated = vertex_dominated(t);
            f.all_edges_dominated = true;
            for (int e = 0; e < ne; ++e) {
                const auto [a, b] = edges[e];
                if (a != t && b != t) continue;
                if (ein(e)) f.edge_in_set = true;
                const bool joins_terminals = (a == other || b == other);
                if (!joins_terminals && !edge_dominated(e)) f.all_edges_dominated = false;
            }
            return index_of(classify(f));
        };
        const std::size_t cell = state(x, y) * 7 + state(y, x);
        const auto size = static_cast<std::uint32_t>(std::popcount(mask));
        CellRef& c = cells[cell];
        if (size < c.size) c = {size, 1};
        else if (size == c.size) ++c.count;
    }
    return cells;
}

inline std::uint64_t ceil_half(std::size_t n) { return (n + 1) / 2; }

}  // namespace testsupport
