#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "balanced/diophantine.hpp"
#include "balanced/graph.hpp"
#include "balanced/instances.hpp"
#include "balanced/io.hpp"
#include "balanced/oracle.hpp"
#include "balanced/solver.hpp"
#include "balanced/witness.hpp"

namespace py = pybind11;

using namespace balanced;

namespace {

std::optional<std::string> reason_string(const Verdict& verdict) {
    if (!verdict.reason) return std::nullopt;
    return std::string(to_string(*verdict.reason));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Balanced st-connectivity: decision, witness construction and checking.";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<WalkError>(m, "WalkError", PyExc_ValueError);
    py::register_exception<ResourceLimitError>(m, "ResourceLimitError", PyExc_RuntimeError);

    py::class_<DirectedGraph>(m, "DirectedGraph")
        .def(py::init<int, std::vector<std::pair<Vertex, Vertex>>>(), py::arg("n"),
             py::arg("edges"))
        .def_property_readonly("n", &DirectedGraph::vertex_count)
        .def_property_readonly("edges",
                               [](const DirectedGraph& g) { return g.edges(); })
        .def("has_edge", &DirectedGraph::has_edge)
        .def("__eq__", [](const DirectedGraph& a, const DirectedGraph& b) { return a == b; });

    py::class_<Instance>(m, "Instance")
        .def(py::init<DirectedGraph, Vertex, Vertex>(), py::arg("graph"), py::arg("s"),
             py::arg("t"))
        .def(py::init([](int n, std::vector<std::pair<Vertex, Vertex>> edges, Vertex s,
                         Vertex t) {
                 return Instance(DirectedGraph(n, std::move(edges)), s, t);
             }),
             py::arg("n"), py::arg("edges"), py::arg("s"), py::arg("t"))
        .def_readonly("graph", &Instance::graph)
        .def_readonly("s", &Instance::s)
        .def_readonly("t", &Instance::t)
        .def("__eq__", [](const Instance& a, const Instance& b) { return a == b; });

    py::class_<Verdict>(m, "Verdict")
        .def_readonly("yes", &Verdict::yes)
        .def_readonly("k0", &Verdict::k0)
        .def_readonly("g", &Verdict::g)
        .def_property_readonly("reason", &reason_string)
        .def("__repr__", [](const Verdict& v) {
            std::string out = v.yes ? "Verdict(YES" : "Verdict(NO";
            if (auto reason = reason_string(v)) out += ", reason=" + *reason;
            return out + ")";
        });

    py::class_<WalkReport>(m, "WalkReport")
        .def_readonly("valid", &WalkReport::valid)
        .def_readonly("length", &WalkReport::length)
        .def_readonly("imbalance", &WalkReport::imbalance)
        .def_readonly("balanced", &WalkReport::balanced)
        .def_readonly("endpoints_ok", &WalkReport::endpoints_ok);

    py::class_<ExcisedCycle>(m, "ExcisedCycle")
        .def_readonly("cycle", &ExcisedCycle::cycle)
        .def_readonly("excised_at", &ExcisedCycle::excised_at);

    py::class_<Decomposition>(m, "Decomposition")
        .def_readonly("simple_path", &Decomposition::simple_path)
        .def_readonly("cycles", &Decomposition::cycles);

    py::class_<ReducedSolution>(m, "ReducedSolution")
        .def_readonly("m_prime", &ReducedSolution::m_prime)
        .def_readonly("quotients", &ReducedSolution::quotients)
        .def_readonly("remainders", &ReducedSolution::remainders);

    m.def("parse_instance", [](const std::string& text) { return parse_instance(text); },
          py::arg("text"));
    m.def("serialize_instance",
          [](const Instance& instance) { return serialize_instance(instance); },
          py::arg("instance"));
    m.def("parse_walk", [](const std::string& text) { return parse_walk(text); },
          py::arg("text"));
    m.def("serialize_walk", &serialize_walk, py::arg("walk"));

    m.def("classify",
          [](const Instance& instance, Vertex u, Vertex v) {
              return std::string(to_string(ClassifiedView(instance.graph).classify(u, v)));
          },
          py::arg("instance"), py::arg("u"), py::arg("v"),
          "Classification of traversing u -> v: 'neutral', 'forward' or 'backward'.");
    m.def("walk_imbalance",
          [](const Instance& instance, const Walk& walk) {
              return walk_imbalance(ClassifiedView(instance.graph), walk);
          },
          py::arg("instance"), py::arg("walk"));

    m.def("decide", [](const Instance& i) { return decide_balanced(i); }, py::arg("instance"));
    m.def("build_witness", &build_witness, py::arg("instance"));
    m.def("rebalance", &rebalance_existing, py::arg("instance"), py::arg("walk"));
    m.def("verify_walk", &verify_walk, py::arg("instance"), py::arg("walk"));
    m.def("decompose",
          [](const Instance& instance, const Walk& walk) {
              return decompose_walk(ClassifiedView(instance.graph), walk);
          },
          py::arg("instance"), py::arg("walk"));

    m.def("oracle_shortest",
          [](const Instance& instance, std::optional<long long> bound) {
              long long b =
                  bound.value_or(oracle::default_bound(instance.graph.vertex_count()));
              return oracle::shortest_balanced(instance, b);
          },
          py::arg("instance"), py::arg("bound") = std::nullopt);
    m.def("oracle_walk",
          [](const Instance& instance, std::optional<long long> bound) {
              long long b =
                  bound.value_or(oracle::default_bound(instance.graph.vertex_count()));
              return oracle::shortest_balanced_walk(instance, b);
          },
          py::arg("instance"), py::arg("bound") = std::nullopt);

    m.def("gen_figure1", &instances::gen_figure1, py::arg("n"));
    m.def("figure1_canonical_walk", &instances::figure1_canonical_walk, py::arg("n"));
    m.def("gen_random", &instances::gen_random, py::arg("n"), py::arg("p_directed"),
          py::arg("p_neutral"), py::arg("seed"));
    m.def("gen_degenerate",
          [](const std::string& kind, int n) {
              return instances::gen_degenerate(instances::degenerate_kind_from_string(kind), n);
          },
          py::arg("kind"), py::arg("n"));

    m.def("reduce_coefficients",
          [](std::vector<long long> c, long long k, std::vector<long long> mult) {
              return reduce_coefficients(ReductionProblem(std::move(c), k, std::move(mult)));
          },
          py::arg("c"), py::arg("k"), py::arg("m"));
    m.def("solve_bounded",
          [](const std::vector<long long>& c, long long k) { return solve_bounded(c, k); },
          py::arg("c"), py::arg("k"));

#ifdef BALANCED_VERSION
    m.attr("__version__") = BALANCED_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
