#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gspmixdom/instances.hpp"
#include "gspmixdom/oracle.hpp"
#include "gspmixdom/parser.hpp"
#include "gspmixdom/realizer.hpp"
#include "gspmixdom/solver.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace gspmixdom;

namespace {

py::object to_pyint(const Count& c) {
    const std::string digits = c.str();
    return py::reinterpret_steal<py::object>(PyLong_FromString(digits.c_str(), nullptr, 10));
}

py::dict result_dict(const Multigraph& g, std::uint64_t gamma_m, const Count& count,
                     const std::vector<Element>& witness) {
    py::list vertices, edges;
    for (const Element& el : witness) {
        if (el.is_vertex()) {
            vertices.append(g.name(el.index));
        } else {
            const Edge& e = g.edge(el.index);
            edges.append(py::make_tuple(el.index, g.name(e.u), g.name(e.v)));
        }
    }
    vertices.attr("sort")();
    py::dict d;
    d["gamma_m"] = gamma_m;
    d["count"] = to_pyint(count);
    d["vertices"] = vertices;
    d["edges"] = edges;
    return d;
}

Multigraph graph_from_pairs(const std::vector<std::pair<std::string, std::string>>& edges) {
    std::ostringstream text;
    for (const auto& [u, v] : edges) text << u << ' ' << v << '\n';
    return read_edge_list(text.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Minimum mixed dominating sets of generalized series-parallel graphs";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<DecomposeError>(m, "DecomposeError", PyExc_ValueError);
    py::register_exception<SizeLimitExceeded>(m, "SizeLimitExceeded", PyExc_ValueError);

    py::class_<ParseTree>(m, "ParseTree")
        .def_property_readonly("leaf_count", &ParseTree::leaf_count)
        .def_property_readonly("vertex_count", &ParseTree::vertex_count)
        .def_property_readonly("terminals",
                               [](const ParseTree& t) { return py::make_tuple(t.name(t.source()), t.name(t.sink())); })
        .def("edges",
             [](const ParseTree& t) {
                 py::list out;
                 for (const LeafEdge& l : leaf_order(t)) out.append(py::make_tuple(t.name(l.u), t.name(l.v)));
                 return out;
             })
        .def("__eq__", [](const ParseTree& a, const ParseTree& b) { return a == b; })
        .def("__str__", &format_expr)
        .def("__repr__", [](const ParseTree& t) { return "ParseTree('" + format_expr(t) + "')"; });

    m.def("parse", &parse_expr, py::arg("text"), "Parse a construction expression such as 'p(e(a,b),e(a,b))'.");
    m.def("format", &format_expr, py::arg("tree"), "Canonical expression text.");

    m.def(
        "solve",
        [](const ParseTree& tree) {
            const Solution s = solve(tree);
            return result_dict(realize(tree).graph, s.gamma_m, s.count, s.witness);
        },
        py::arg("tree"), "gamma_m, number of minimum sets, and one minimum set (vertices, edges).");

    m.def(
        "brute_force",
        [](const ParseTree& tree, bool force) {
            const Multigraph g = realize(tree).graph;
            const OracleResult r = brute_force(g, force);
            return result_dict(g, r.gamma_m, r.count, r.witness);
        },
        py::arg("tree"), py::arg("force") = false, "Exhaustive reference answer for small graphs.");

    m.def(
        "is_mixed_dominating",
        [](const ParseTree& tree, const std::vector<std::string>& vertices, const std::vector<EdgeIndex>& edges) {
            const Multigraph g = realize(tree).graph;
            std::vector<Element> set;
            for (const std::string& name : vertices) {
                auto v = g.find(name);
                if (!v) throw py::key_error("unknown vertex '" + name + "'");
                set.push_back(Element::vertex(*v));
            }
            for (EdgeIndex e : edges) {
                if (e >= g.edge_count()) throw py::index_error("unknown edge " + std::to_string(e));
                set.push_back(Element::edge(e));
            }
            return is_mixed_dominating(g, set);
        },
        py::arg("tree"), py::arg("vertices") = std::vector<std::string>{},
        py::arg("edges") = std::vector<EdgeIndex>{});

    m.def(
        "generate",
        [](std::uint64_t seed, std::size_t leaves, std::tuple<double, double, double> w) {
            return generate(seed, leaves, {std::get<0>(w), std::get<1>(w), std::get<2>(w)});
        },
        py::arg("seed"), py::arg("leaves"), py::arg("weights") = std::make_tuple(1.0, 1.0, 1.0));

    m.def(
        "decompose",
        [](const std::vector<std::pair<std::string, std::string>>& edges, const std::string& source,
           const std::string& sink) {
            const Multigraph g = graph_from_pairs(edges);
            const auto s = g.find(source);
            const auto t = g.find(sink);
            if (!s || !t) throw py::key_error("terminal is not a vertex of the graph");
            return decompose(g, *s, *t);
        },
        py::arg("edges"), py::arg("source"), py::arg("sink"));

#ifdef VERSION_INFO
    m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
