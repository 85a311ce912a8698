#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tchrom/chromatic.hpp"
#include "tchrom/configmodel.hpp"
#include "tchrom/error.hpp"
#include "tchrom/limits.hpp"
#include "tchrom/verify.hpp"

namespace py = pybind11;
using namespace tchrom;

namespace {

// Expansions cross into Python as {index tuple: ascending coefficient list}.
template <class Key>
py::dict expansion_to_dict(const Expansion<Key>& f) {
    py::dict out;
    for (const auto& [key, c] : f.terms()) out[py::tuple(py::cast(key.parts()))] = c.coeffs();
    return out;
}

py::dict report_to_dict(const VerificationReport& r) {
    py::list failures;
    for (const auto& f : r.failures) {
        py::dict params;
        for (const auto& [k, v] : f.params) std::visit([&](const auto& x) { params[py::str(k)] = x; }, v);
        py::dict item;
        item["params"] = params;
        item["expected"] = f.expected;
        item["actual"] = f.actual;
        failures.append(item);
    }
    py::dict out;
    out["family"] = r.family;
    out["instances"] = r.instances;
    out["failures"] = failures;
    return out;
}

std::vector<VerificationReport> run_sweep(const std::string& family, int max_n) {
    if (family == "binomial-identity") return sweep_binomial_identity(max_n);
    if (family == "config-model") return sweep_config_model(max_n);
    if (family == "tree-formula") return sweep_tree_formula(max_n);
    if (family == "near-contraction") return sweep_near_contraction(max_n);
    if (family == "disjoint-union") return sweep_disjoint_union(max_n);
    if (family == "star-closed-forms") return sweep_star_closed_forms(max_n);
    throw std::invalid_argument("unknown family " + family);
}

}  // namespace

PYBIND11_MODULE(_tchrom, m) {
    m.doc() = "Chromatic (quasi)symmetric functions of small graphs";

    py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);
    py::register_exception<PreconditionViolation>(m, "PreconditionViolation", PyExc_ValueError);
    py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
    py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_AssertionError);

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) { return Graph::from_edge_list(n, edges); }),
             py::arg("n"), py::arg("edges"))
        .def_static("star", &Graph::star)
        .def_static("path", &Graph::path)
        .def_static("cycle", &Graph::cycle)
        .def_property_readonly("n", &Graph::vertex_count)
        .def_property_readonly("edges",
                               [](const Graph& g) {
                                   std::vector<std::pair<int, int>> out;
                                   for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
                                   return out;
                               })
        .def("is_tree", &Graph::is_tree)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.vertex_count()) + ", edges=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("csf", [](const Graph& g) { return expansion_to_dict(csf(g)); }, py::arg("graph"),
          "m-basis expansion of the chromatic symmetric function.");
    m.def(
        "cqsf_labeled",
        [](const Graph& g, std::vector<int> labels) { return expansion_to_dict(cqsf_labeled(g, Labeling(std::move(labels)))); },
        py::arg("graph"), py::arg("labels"), "M-basis expansion for a labeling; labels[v] is the label of vertex v.");
    m.def(
        "cqsf_oriented",
        [](const Graph& g, const std::string& spec) { return expansion_to_dict(cqsf_oriented(g, Orientation::parse(g, spec))); },
        py::arg("graph"), py::arg("orientation"), "M-basis expansion for an orientation written \"u>v,...\".");
    m.def("total_labeling", [](const Graph& g) { return expansion_to_dict(total_labeling_cqsf(g)); }, py::arg("graph"));
    m.def("total_orientation", [](const Graph& g) { return expansion_to_dict(total_orientation_cqsf(g)); },
          py::arg("graph"));
    m.def("is_orientation_total_symmetric", &check_symmetry_conjecture, py::arg("graph"));

    m.def("normalized_total_star", [](int n) { return expansion_to_dict(normalized_total_star(n)); }, py::arg("n"));
    m.def(
        "tst_coeff_closed",
        [](const std::vector<int>& alpha, int n) { return tst_coeff_closed(Composition(alpha), n).coeffs(); },
        py::arg("alpha"), py::arg("n"));
    m.def(
        "tst_coeff_first_step",
        [](const std::vector<int>& alpha, int n, int k) { return tst_coeff_first_step(Composition(alpha), n, k); },
        py::arg("alpha"), py::arg("n"), py::arg("k"));
    m.def(
        "star_cqsf_coeff_closed",
        [](const std::vector<int>& alpha, int r, int n) { return star_cqsf_coeff_closed(Composition(alpha), r, n).coeffs(); },
        py::arg("alpha"), py::arg("root_label"), py::arg("n"));
    m.def(
        "star_csf_coeff_closed", [](const std::vector<int>& lambda) { return star_csf_coeff_closed(Partition(lambda)); },
        py::arg("partition"));

    m.def(
        "verify_csf_near_contraction", [](const Graph& g, int u, int v) { return verify_csf_near_contraction(g, Edge(u, v)); },
        py::arg("graph"), py::arg("u"), py::arg("v"));
    m.def(
        "verify_orientation_near_contraction",
        [](const Graph& g, int u, int v) { return verify_tcqsf_o_near_contraction(g, Edge(u, v)); }, py::arg("graph"),
        py::arg("u"), py::arg("v"));
    m.def("verify_tree_formula", &verify_tree_formula, py::arg("graph"));

    m.def("count_T", &count_T, py::arg("n"), py::arg("s"), py::arg("i"), py::arg("b0"));
    m.def("closed_T", &closed_T, py::arg("n"), py::arg("i"));
    m.def("verify_binomial_identity", &verify_binomial_identity, py::arg("n"), py::arg("s"), py::arg("k"));

    m.def(
        "verify",
        [](const std::string& family, int max_n) {
            py::list out;
            for (const auto& r : run_sweep(family, max_n)) out.append(report_to_dict(r));
            return out;
        },
        py::arg("family"), py::arg("max_n"), "Runs an exhaustive sweep; one report dict per checked family.");

    m.def(
        "set_vertex_cap",
        [](int n) {
            Limits l = limits();
            l.max_labeling_vertices = l.max_total_label_vertices = l.max_coloring_vertices = l.max_tree_vertices = n;
            set_limits(l);
        },
        py::arg("n"), "Raises or lowers every vertex cap at once.");
}
