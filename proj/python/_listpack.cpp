#include "listpack/bounds.hpp"
#include "listpack/chromatic.hpp"
#include "listpack/counting.hpp"
#include "listpack/errors.hpp"
#include "listpack/extremal.hpp"
#include "listpack/graph.hpp"
#include "listpack/graph_io.hpp"
#include "listpack/version.hpp"

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace listpack;

// Python int <-> BigInt through decimal text.
namespace pybind11::detail {

template <>
struct type_caster<BigInt> {
    PYBIND11_TYPE_CASTER(BigInt, const_name("int"));

    bool load(handle src, bool)
    {
        if (!src || !PyLong_Check(src.ptr())) {
            return false;
        }
        value = BigInt(py::str(src).cast<std::string>());
        return true;
    }

    static handle cast(const BigInt& v, return_value_policy, handle)
    {
        const std::string text = v.str();
        return PyLong_FromString(text.c_str(), nullptr, 10);
    }
};

}  // namespace pybind11::detail

namespace {

using Lists = std::vector<std::vector<Color>>;

std::vector<Vertex> members(VertexMask m, int n)
{
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n; ++v) {
        if ((m >> v) & 1U) {
            out.push_back(v);
        }
    }
    return out;
}

py::dict pattern_dict(const PatternAssignment& p)
{
    py::list entries;
    for (const auto& e : p.entries()) {
        py::dict d;
        d["subset"] = members(e.subset, p.vertex_count());
        d["m"] = e.multiplicity;
        entries.append(d);
    }
    py::dict out;
    out["n"] = p.vertex_count();
    out["q"] = p.list_size();
    out["multiplicities"] = entries;
    return out;
}

py::dict minimization_dict(const MinimizationResult& r, const Graph& g)
{
    py::dict out;
    out["value"] = r.value;
    out["witness"] = pattern_dict(r.witness);
    out["witness_lists"] = realize_pattern(r.witness, g).lists();
    out["exhaustive"] = r.exhaustive;
    out["patterns_evaluated"] = r.patterns_evaluated;
    return out;
}

SweepOptions sweep(std::uint64_t budget, int workers)
{
    SweepOptions opts;
    opts.pattern_budget = budget;
    opts.workers = workers;
    return opts;
}

}  // namespace

PYBIND11_MODULE(_listpack, m)
{
    m.doc() = "Packing counts of list colorings";
    m.attr("__version__") = version;

    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
    py::register_exception<InvariantFailure>(m, "InvariantFailure", PyExc_AssertionError);

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<Graph::Edge>& edges) { return Graph::from_edges(n, edges); }),
             py::arg("n"), py::arg("edges") = std::vector<Graph::Edge>{})
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("size", &Graph::size)
        .def_property_readonly("edges", [](const Graph& g) { return g.edges(); })
        .def("neighbors", [](const Graph& g, Vertex v) { auto s = g.neighbors(v); return std::vector<Vertex>(s.begin(), s.end()); })
        .def("degree", &Graph::degree)
        .def("adjacent", &Graph::adjacent)
        .def("is_connected", &Graph::is_connected)
        .def("is_tree", &Graph::is_tree)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "<Graph n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size()) + ">";
        });

    m.def("path", &families::path, py::arg("n"));
    m.def("cycle", &families::cycle, py::arg("n"));
    m.def("complete", &families::complete, py::arg("n"));
    m.def("complete_bipartite", &families::complete_bipartite, py::arg("a"), py::arg("b"));
    m.def("star", &families::star, py::arg("n"));
    m.def("random_tree", &families::random_tree, py::arg("n"), py::arg("seed"));
    m.def("random_graph", &families::random_graph, py::arg("n"), py::arg("p"), py::arg("seed"));
    m.def("cartesian_with_complete", &cartesian_with_complete, py::arg("g"), py::arg("k"));
    m.def("girth", &girth, py::arg("g"));
    m.def("parse_graph6", &io::parse_graph6, py::arg("text"));
    m.def("to_graph6", &io::to_graph6, py::arg("g"));

    m.def("chromatic_polynomial", [](const Graph& g) { return chromatic_polynomial(g).coefficients(); }, py::arg("g"),
          "Coefficients of P(G, q), constant term first.");

    m.def("count_list_colorings", [](const Graph& g, const Lists& lists) {
        ListAssignment l(lists);
        require_covers(g, l);
        return count_list_colorings(g, l);
    }, py::arg("g"), py::arg("lists"));
    m.def("count_packings_direct", [](const Graph& g, const Lists& lists, int k) {
        return count_packings_direct(g, ListAssignment(lists), k);
    }, py::arg("g"), py::arg("lists"), py::arg("k"));
    m.def("count_packings_via_product", [](const Graph& g, const Lists& lists, int k) {
        return count_packings_via_product(g, ListAssignment(lists), k);
    }, py::arg("g"), py::arg("lists"), py::arg("k"));
    m.def("classical_packing_count", &classical_packing_count, py::arg("g"), py::arg("q"), py::arg("k"),
          py::call_guard<py::gil_scoped_release>());
    m.def("derangements", &derangements, py::arg("q"));
    m.def("count_fpf_bijections", [](const std::vector<Color>& a, const std::vector<Color>& b) {
        return count_fpf_bijections(a, b);
    }, py::arg("a"), py::arg("b"));
    m.def("latin_array_count", &latin_array_count, py::arg("n"), py::arg("k"), py::arg("q"));

    m.def("canonical_pattern", [](const Lists& lists) { return pattern_dict(canonical_pattern(ListAssignment(lists))); },
          py::arg("lists"));
    m.def("enumerate_patterns", [](const Graph& g, int q, std::uint64_t budget) {
        py::list out;
        auto status = enumerate_patterns(g, q, budget, [&](const PatternAssignment& p) { out.append(pattern_dict(p)); });
        if (status.truncated) {
            throw BudgetExceeded("more than " + std::to_string(budget) + " patterns", status.yielded);
        }
        return out;
    }, py::arg("g"), py::arg("q"), py::arg("budget") = default_pattern_budget);

    m.def("list_packing_function_exact", [](const Graph& g, int q, int k, std::uint64_t budget, int workers) {
        MinimizationResult r = [&] {
            py::gil_scoped_release release;
            return list_packing_function_exact(g, q, k, sweep(budget, workers));
        }();
        return minimization_dict(r, g);
    }, py::arg("g"), py::arg("q"), py::arg("k"), py::arg("budget") = default_pattern_budget, py::arg("workers") = 1);
    m.def("list_packing_function_sampled", [](const Graph& g, int q, int k, std::uint64_t samples, std::uint64_t seed, int workers) {
        MinimizationResult r = [&] {
            py::gil_scoped_release release;
            return list_packing_function_sampled(g, q, k, samples, seed, workers);
        }();
        return minimization_dict(r, g);
    }, py::arg("g"), py::arg("q"), py::arg("k"), py::arg("samples"), py::arg("seed"), py::arg("workers") = 1);
    m.def("list_packing_number", [](const Graph& g, int q_max, std::uint64_t budget) {
        PackingNumberResult r = [&] {
            py::gil_scoped_release release;
            return list_packing_number(g, q_max, sweep(budget, 1));
        }();
        py::dict out;
        out["value"] = r.value;
        out["minima"] = r.minima;
        return out;
    }, py::arg("g"), py::arg("q_max"), py::arg("budget") = default_pattern_budget);
    m.def("equality_probe", [](const Graph& g, int k, int q_max, std::uint64_t budget) {
        EqualityProbeResult r = [&] {
            py::gil_scoped_release release;
            return equality_probe(g, k, q_max, sweep(budget, 1));
        }();
        py::list rows;
        for (const auto& row : r.rows) {
            py::dict d;
            d["q"] = row.q;
            d["classical_count"] = row.classical;
            d["min_count"] = row.minimum;
            d["gap"] = row.gap();
            d["exhaustive"] = row.exhaustive;
            rows.append(d);
        }
        py::dict out;
        out["k"] = r.k;
        out["q_max"] = r.q_max;
        out["least_equal_q"] = r.least_equal_q;
        out["truncated"] = r.truncated;
        out["threshold"] = r.threshold;
        out["threshold_consistent"] = r.threshold_consistent;
        out["rows"] = rows;
        out["csv"] = gap_table_csv(r);
        return out;
    }, py::arg("g"), py::arg("k"), py::arg("q_max"), py::arg("budget") = default_pattern_budget);

    py::class_<BoundReport>(m, "BoundReport")
        .def_readonly("applicable", &BoundReport::applicable)
        .def_readonly("base", &BoundReport::base)
        .def_readonly("exponent_num", &BoundReport::exponent_num)
        .def_readonly("exponent_den", &BoundReport::exponent_den)
        .def_readonly("divisor", &BoundReport::divisor)
        .def_readonly("ceiling", &BoundReport::ceiling)
        .def_readonly("passed", &BoundReport::passed)
        .def("__repr__", [](const BoundReport& r) {
            return "<BoundReport " + r.base.str() + "^(" + r.exponent_num.str() + "/" + r.exponent_den.str() + ") / " +
                   r.divisor.str() + ", ceiling " + r.ceiling.str() + (r.applicable ? "" : ", not applicable") + ">";
        });
    m.def("dz_threshold", &dz_threshold, py::arg("n"), py::arg("m"), py::arg("k"));
    m.def("alon_furedi_nonzero_bound", &alon_furedi_nonzero_bound, py::arg("S"), py::arg("n_vars"), py::arg("d"), py::arg("t"));
    m.def("packing_lower_bound", &packing_lower_bound, py::arg("n"), py::arg("m"), py::arg("q"), py::arg("k"));
    m.def("check_bound_against_count", &check_bound_against_count, py::arg("report"), py::arg("measured"));
    m.def("tree_packing_value", &tree_packing_value, py::arg("n"), py::arg("q"));
    m.def("girth8_bound", &girth8_bound, py::arg("n"));
}
