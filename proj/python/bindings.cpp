#include <map>
#include <mutex>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hlc/census.hpp"
#include "hlc/invariants.hpp"
#include "hlc/presentation.hpp"
#include "hlc/sums.hpp"

namespace py = pybind11;
using namespace hlc;

namespace {

const GroupTable& group(const std::string& spec) {
    static std::mutex mu;
    static std::map<std::string, GroupTable> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(spec);
    if (it == cache.end()) it = cache.emplace(spec, group_from_spec(spec)).first;
    return it->second;
}

}  // namespace

PYBIND11_MODULE(_hlc, m) {
    m.doc() = "handcuff graph and theta curve census";

    py::class_<Diagram>(m, "Diagram")
        .def(py::init([](const std::string& code) { return diagram_from_code(code); }), py::arg("code"))
        .def_property_readonly("code", [](const Diagram& d) { return to_code(d); })
        .def_property_readonly("crossings", &Diagram::crossing_count)
        .def_property_readonly("components", [](const Diagram& d) { return component_count(d); })
        .def("mirror", [](const Diagram& d) { return mirror(d); })
        .def("ks", [](const Diagram& d, const std::string& g) { return ks(d, group(g)).count; }, py::arg("group") = "a4")
        .def("generators", [](const Diagram& d) { return tietze_simplify(presentation_from_diagram(d)).gens; })
        .def("circles",
             [](const Diagram& d) {
                 auto c = trace_components(d);
                 std::vector<int> out;
                 for (int k = 0; k < c.count; ++k)
                     if (!c.trivalent[k] && !c.free_loop[k]) out.push_back(k);
                 return out;
             })
        .def(
            "peripheral",
            [](const Diagram& d, int comp, const std::string& g) {
                auto r = chirality_test(d, comp, group(g));
                return py::make_tuple(r.n, r.rn);
            },
            py::arg("component"), py::arg("group") = "a4")
        .def("nonsplit_certificate", [](const Diagram& d) { return nonsplit_certificate(d, group("a4")); })
        .def("__eq__", [](const Diagram& a, const Diagram& b) { return diagram_code(a, false) == diagram_code(b, false); })
        .def("__repr__", [](const Diagram& d) { return "Diagram('" + to_code(d) + "')"; });

    m.def("plane_graph_counts", [](int q) {
        std::map<int, int> by_n;
        for (auto& g : enumerate_plane_graphs(q)) by_n[component_count(Diagram{g, 0})]++;
        return by_n;
    });
    m.def("free_hom_classes", [](const std::string& g, int rank) { return burnside_free_hom_classes(group(g), rank); });
    m.def(
        "irreducibility",
        [](uint64_t a4, std::optional<uint64_t> a5, int n, int rank) {
            auto v = irreducibility_test(a4, a5, n, rank);
            py::dict conds;
            for (auto& c : v.conditions)
                if (c.tested) conds[py::str(c.name)] = c.divisible;
            return py::make_tuple(v.conclusion == Conclusion::Irreducible, v.reason, conds);
        },
        py::arg("a4"), py::arg("a5"), py::arg("n"), py::arg("rank"));
    m.def("read_diagrams", [](const std::string& path) {
        std::vector<std::pair<std::string, Diagram>> out;
        for (auto& nd : read_diagram_file(path)) out.emplace_back(nd.name, nd.d);
        return out;
    });
    m.def("braid_closure", &braid_closure, py::arg("strands"), py::arg("word"));
    m.def("order1_sum", &order1_sum, py::arg("left"), py::arg("left_component"), py::arg("right"),
          py::arg("right_component"));
    m.def("verify_report", [](const std::string& path) {
        auto v = verify(read_report_file(path));
        return py::make_tuple(v.pass, v.diffs, v.notes);
    });
}
