// Python surface: thin wrappers over the C++ core. Subsets cross the
// boundary as sorted lists of element indices; suite reports as JSON text.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "torsorlab/io.hpp"
#include "torsorlab/structure_maps.hpp"
#include "torsorlab/subset.hpp"
#include "torsorlab/suites.hpp"
#include "torsorlab/symmetry.hpp"
#include "torsorlab/torsor.hpp"

namespace py = pybind11;
using namespace torsorlab;

namespace {

struct PyGroup {
    GroupRef ref;
};

Subset to_subset(const PyGroup& g, const std::vector<int>& elems) {
    return Subset::from_elements(g.ref, elems);
}

std::vector<int> to_list(const Subset& s) { return s.elements(); }

std::vector<std::vector<int>> to_lists(const std::vector<Subset>& subs) {
    std::vector<std::vector<int>> out;
    out.reserve(subs.size());
    for (const auto& s : subs) out.push_back(s.elements());
    return out;
}

}  // namespace

PYBIND11_MODULE(_torsorlab, m) {
    m.doc() = "projective calculus over the power set of a finite group";

    py::class_<PyGroup>(m, "Group")
        .def_property_readonly("name", [](const PyGroup& g) { return g.ref->name(); })
        .def_property_readonly("order", [](const PyGroup& g) { return g.ref->order(); })
        .def("add", [](const PyGroup& g, int i, int j) { return g.ref->add(i, j); })
        .def("neg", [](const PyGroup& g, int i) { return g.ref->neg(i); })
        .def_property_readonly("identity", [](const PyGroup& g) { return g.ref->identity(); })
        .def("__repr__", [](const PyGroup& g) {
            return "<Group " + g.ref->name() + " of order " + std::to_string(g.ref->order()) + ">";
        });

    m.def(
        "group",
        [](const std::string& spec) {
            return PyGroup{group_from_spec(spec)};
        },
        py::arg("spec"),
        "Builds a group from a builtin name (z<n>, s<n>, d<n>, q8, k4, products like z2xz4) "
        "or a JSON file path.");

    m.def(
        "gamma",
        [](const PyGroup& g, const std::vector<int>& x, const std::vector<int>& a,
           const std::vector<int>& y, const std::vector<int>& b, const std::vector<int>& z,
           bool opposite) {
            Subset sx = to_subset(g, x), sa = to_subset(g, a), sy = to_subset(g, y);
            Subset sb = to_subset(g, b), sz = to_subset(g, z);
            return to_list(opposite ? gamma_check(sx, sa, sy, sb, sz)
                                    : gamma(sx, sa, sy, sb, sz));
        },
        py::arg("g"), py::arg("x"), py::arg("a"), py::arg("y"), py::arg("b"), py::arg("z"),
        py::arg("opposite") = false, "Balanced structure map on five subsets.");

    m.def(
        "sigma",
        [](const PyGroup& g, const std::vector<int>& b, const std::vector<int>& x,
           const std::vector<int>& y, const std::vector<int>& z, bool opposite) {
            Subset sb = to_subset(g, b), sx = to_subset(g, x);
            Subset sy = to_subset(g, y), sz = to_subset(g, z);
            return to_list(opposite ? sigma_check(sb, sx, sy, sz) : sigma(sb, sx, sy, sz));
        },
        py::arg("g"), py::arg("b"), py::arg("x"), py::arg("y"), py::arg("z"),
        py::arg("opposite") = false, "One-sided structure map on four subsets.");

    m.def(
        "grassmannian",
        [](const PyGroup& g) { return to_lists(grassmannian(g.ref)); }, py::arg("g"),
        "All subgroups, sorted by (size, elements).");

    m.def(
        "left_transversals",
        [](const PyGroup& g, const std::vector<int>& b) {
            return to_lists(left_transversal_set(g.ref, to_subset(g, b)));
        },
        py::arg("g"), py::arg("b"), "All x with x transversal to b.");

    m.def(
        "is_transversal",
        [](const PyGroup& g, const std::vector<int>& x, const std::vector<int>& y) {
            return is_left_transversal(to_subset(g, x), to_subset(g, y));
        },
        py::arg("g"), py::arg("x"), py::arg("y"),
        "Unique decomposition of every element as xi + eta.");

    m.def(
        "carrier_uab",
        [](const PyGroup& g, const std::vector<int>& a, const std::vector<int>& b) {
            return to_lists(carrier_U_ab(to_subset(g, a), to_subset(g, b)).elements);
        },
        py::arg("g"), py::arg("a"), py::arg("b"),
        "Elements of the two-sided section carrier for (a, b).");

    m.def(
        "carrier_ub",
        [](const PyGroup& g, const std::vector<int>& b) {
            return to_lists(carrier_U_b(to_subset(g, b)).elements);
        },
        py::arg("g"), py::arg("b"), "Elements of the one-sided section carrier for b.");

    m.def(
        "sign_table",
        [](const PyGroup& g) {
            SignTableReport rep = verify_sign_table(g.ref);
            py::list rows;
            for (const auto& row : rep.rows) {
                py::dict d;
                d["label"] = row.label;
                d["signs"] = row.expected.str();
                d["matches"] = row.expected_matches;
                d["unique"] = row.unique;
                rows.append(d);
            }
            py::dict out;
            out["rows"] = rows;
            out["all_match"] = rep.all_match;
            out["all_unique"] = rep.all_unique;
            return out;
        },
        py::arg("g"), "The 24-row permutation sign table with per-row verdicts.");

    m.def(
        "run_suite_json",
        [](const PyGroup& g, uint64_t seed) {
            SuiteConfig cfg;
            cfg.seed = seed;
            return render_report_json(run_all(g.ref, cfg));
        },
        py::arg("g"), py::arg("seed") = 0,
        "Runs the full check catalog; returns the JSON report text.");
}
