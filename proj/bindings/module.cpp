#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ricci/curvature.hpp"
#include "ricci/io.hpp"
#include "ricci/matching.hpp"
#include "ricci/spectral.hpp"

namespace py = pybind11;
using namespace ricci;

namespace {

py::object big_to_py(const BigInt& b) {
    return py::reinterpret_steal<py::object>(PyLong_FromString(b.str().c_str(), nullptr, 10));
}

std::string rational_repr(const Rational& r) {
    return "Rational(" + r.str() + ")";
}

} // namespace

PYBIND11_MODULE(riccigraph, m) {
    m.doc() = "Exact condensed Ricci curvature of graph edges: optimal transport with "
              "primal/dual certificates, matching formulas, and spectral checks";

    auto base = py::register_exception<Error>(m, "RicciError");
    py::register_exception<MathInconsistency>(m, "MathInconsistencyError", base.ptr());

    py::class_<Rational>(m, "Rational")
        .def(py::init([](long long num, long long den) { return Rational(BigInt(num), BigInt(den)); }),
             py::arg("num"), py::arg("den") = 1)
        .def_static("parse", &Rational::parse, py::arg("text"))
        .def_property_readonly("num", [](const Rational& r) { return big_to_py(r.num()); })
        .def_property_readonly("den", [](const Rational& r) { return big_to_py(r.den()); })
        .def("decimal", &Rational::decimal, py::arg("digits") = 12)
        .def("as_fraction",
             [](const Rational& r) {
                 py::object fraction = py::module_::import("fractions").attr("Fraction");
                 return fraction(big_to_py(r.num()), big_to_py(r.den()));
             })
        .def("__str__", &Rational::str)
        .def("__repr__", &rational_repr)
        .def("__float__", &Rational::to_double)
        .def("__eq__", [](const Rational& a, const Rational& b) { return a == b; },
             py::is_operator())
        .def("__ne__", [](const Rational& a, const Rational& b) { return a != b; },
             py::is_operator())
        .def("__lt__", [](const Rational& a, const Rational& b) { return a < b; },
             py::is_operator())
        .def("__le__", [](const Rational& a, const Rational& b) { return a <= b; },
             py::is_operator())
        .def("__gt__", [](const Rational& a, const Rational& b) { return a > b; },
             py::is_operator())
        .def("__ge__", [](const Rational& a, const Rational& b) { return a >= b; },
             py::is_operator())
        .def("__add__", [](const Rational& a, const Rational& b) { return a + b; })
        .def("__sub__", [](const Rational& a, const Rational& b) { return a - b; })
        .def("__mul__", [](const Rational& a, const Rational& b) { return a * b; })
        .def("__truediv__", [](const Rational& a, const Rational& b) { return a / b; })
        .def("__neg__", [](const Rational& a) { return -a; });

    py::class_<Graph>(m, "Graph")
        .def(py::init<int, const std::vector<std::pair<int, int>>&>(), py::arg("n"),
             py::arg("edges"))
        .def_property_readonly("n", &Graph::vertex_count)
        .def_property_readonly("m", &Graph::edge_count)
        .def("neighbors", [](const Graph& g, int v) { return g.neighbors(v); }, py::arg("v"))
        .def("degree", &Graph::degree, py::arg("v"))
        .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
        .def("edges", &Graph::edges)
        .def("distance", &Graph::distance, py::arg("u"), py::arg("v"))
        .def("distance_matrix", [](const Graph& g) { return g.distance_matrix(); })
        .def("is_connected", &Graph::is_connected)
        .def("regular_degree", &Graph::regular_degree)
        .def("diameter", &Graph::diameter)
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.vertex_count()) +
                   ", m=" + std::to_string(g.edge_count()) + ")";
        });

    py::class_<SrgParams>(m, "SrgParams")
        .def_readonly("n", &SrgParams::n)
        .def_readonly("d", &SrgParams::d)
        .def_readonly("alpha", &SrgParams::alpha)
        .def_readonly("beta", &SrgParams::beta)
        .def("feasible", &SrgParams::feasible)
        .def("__eq__", [](const SrgParams& a, const SrgParams& b) { return a == b; },
             py::is_operator())
        .def("__repr__", [](const SrgParams& p) {
            return "SrgParams(" + std::to_string(p.n) + ", " + std::to_string(p.d) + ", " +
                   std::to_string(p.alpha) + ", " + std::to_string(p.beta) + ")";
        });

    py::class_<CoreNeighborhood>(m, "CoreNeighborhood")
        .def_readonly("x", &CoreNeighborhood::x)
        .def_readonly("y", &CoreNeighborhood::y)
        .def_readonly("triangle", &CoreNeighborhood::triangle)
        .def_readonly("exclusive_x", &CoreNeighborhood::exclusive_x)
        .def_readonly("exclusive_y", &CoreNeighborhood::exclusive_y)
        .def_readonly("pentagon", &CoreNeighborhood::pentagon);

    py::class_<BipartiteGraph>(m, "BipartiteGraph")
        .def_readonly("left_ids", &BipartiteGraph::left_ids)
        .def_readonly("right_ids", &BipartiteGraph::right_ids)
        .def_readonly("adj", &BipartiteGraph::adj)
        .def_readonly("edge_count", &BipartiteGraph::edge_count)
        .def("left_size", &BipartiteGraph::left_size)
        .def("right_size", &BipartiteGraph::right_size)
        .def("edges", &BipartiteGraph::edges);

    py::class_<Matching>(m, "Matching")
        .def_readonly("left_to_right", &Matching::left_to_right)
        .def_readonly("right_to_left", &Matching::right_to_left)
        .def("size", &Matching::size)
        .def("pairs", &Matching::pairs);

    py::enum_<Side>(m, "Side").value("LEFT", Side::Left).value("RIGHT", Side::Right);

    py::class_<AlternatingReach>(m, "AlternatingReach")
        .def_readonly("from_side", &AlternatingReach::from_side)
        .def_readonly("reach_s", &AlternatingReach::reach_s)
        .def_readonly("reach_t", &AlternatingReach::reach_t);

    py::class_<CountingIdentity>(m, "CountingIdentity")
        .def_readonly("reach_s", &CountingIdentity::reach_s)
        .def_readonly("reach_t", &CountingIdentity::reach_t)
        .def_readonly("side_size", &CountingIdentity::side_size)
        .def_readonly("matching_size", &CountingIdentity::matching_size)
        .def_readonly("holds", &CountingIdentity::holds);

    py::class_<HallResult>(m, "HallResult")
        .def_readonly("satisfied", &HallResult::satisfied)
        .def_readonly("witness", &HallResult::witness);

    py::class_<Measure>(m, "Measure")
        .def(py::init([](const std::map<int, Rational>& mass) {
                 Measure out;
                 out.mass = mass;
                 return out;
             }),
             py::arg("mass"))
        .def_readonly("mass", &Measure::mass)
        .def("at", &Measure::at, py::arg("v"))
        .def("total", &Measure::total)
        .def("is_probability", &Measure::is_probability);

    py::class_<TransportPlan>(m, "TransportPlan")
        .def_readonly("entries", &TransportPlan::entries)
        .def_readonly("source", &TransportPlan::source)
        .def_readonly("target", &TransportPlan::target)
        .def("cost", &TransportPlan::cost, py::arg("g"));

    py::class_<PlanCheck>(m, "PlanCheck")
        .def_readonly("ok", &PlanCheck::ok)
        .def_readonly("detail", &PlanCheck::detail);

    py::class_<Potential>(m, "Potential")
        .def(py::init([](const std::map<int, long long>& values) {
                 Potential out;
                 out.values = values;
                 return out;
             }),
             py::arg("values"))
        .def_readonly("values", &Potential::values)
        .def("at", &Potential::at, py::arg("v"));

    py::class_<LipschitzReport>(m, "LipschitzReport")
        .def_readonly("ok", &LipschitzReport::ok)
        .def_readonly("u", &LipschitzReport::u)
        .def_readonly("v", &LipschitzReport::v);

    py::class_<WassersteinResult>(m, "WassersteinResult")
        .def_readonly("value", &WassersteinResult::value)
        .def_readonly("plan", &WassersteinResult::plan)
        .def_readonly("potential", &WassersteinResult::potential);

    py::enum_<Method>(m, "Method")
        .value("FLOW", Method::Flow)
        .value("FORMULA", Method::SrgFormula)
        .value("BOTH", Method::Both);

    py::class_<Certificate>(m, "Certificate")
        .def_readonly("plan_cost", &Certificate::plan_cost)
        .def_readonly("dual_value", &Certificate::dual_value)
        .def_readonly("gap_zero", &Certificate::gap_zero);

    py::class_<CurvatureReport>(m, "CurvatureReport")
        .def_readonly("u", &CurvatureReport::u)
        .def_readonly("v", &CurvatureReport::v)
        .def_readonly("eps", &CurvatureReport::eps)
        .def_readonly("w1", &CurvatureReport::w1)
        .def_readonly("kappa_eps", &CurvatureReport::kappa_eps)
        .def_readonly("condensed", &CurvatureReport::condensed)
        .def_readonly("method", &CurvatureReport::method)
        .def_readonly("certificate", &CurvatureReport::certificate)
        .def_readonly("matching_size", &CurvatureReport::matching_size);

    py::class_<ProfileSummary>(m, "ProfileSummary")
        .def_readonly("min_value", &ProfileSummary::min_value)
        .def_readonly("max_value", &ProfileSummary::max_value)
        .def_readonly("mean_value", &ProfileSummary::mean_value)
        .def_readonly("uniform", &ProfileSummary::uniform);

    py::class_<CurvatureProfile>(m, "CurvatureProfile")
        .def_readonly("reports", &CurvatureProfile::reports)
        .def_readonly("summary", &CurvatureProfile::summary);

    py::class_<RigidityResult>(m, "RigidityResult")
        .def_readonly("is_complete", &RigidityResult::is_complete)
        .def_readonly("min_edge_curvature", &RigidityResult::min_edge_curvature)
        .def_readonly("consistent", &RigidityResult::consistent);

    py::class_<ConjectureRow>(m, "ConjectureRow")
        .def_readonly("q", &ConjectureRow::q)
        .def_readonly("params", &ConjectureRow::params)
        .def_readonly("perfect_matching_everywhere", &ConjectureRow::perfect_matching_everywhere)
        .def_readonly("uniform", &ConjectureRow::uniform)
        .def_readonly("curvature", &ConjectureRow::curvature)
        .def_readonly("conjectured", &ConjectureRow::conjectured)
        .def_readonly("agrees", &ConjectureRow::agrees);

    py::class_<Lambda1Report>(m, "Lambda1Report")
        .def_readonly("lambda1", &Lambda1Report::lambda1)
        .def_readonly("leq_bound_ok", &Lambda1Report::leq_bound_ok)
        .def_readonly("lichnerowicz_ok", &Lambda1Report::lichnerowicz_ok)
        .def_readonly("connected", &Lambda1Report::connected);

    m.def("build_graph", &build_graph, py::arg("n"), py::arg("edges"));
    m.def("generate", &generate_named, py::arg("spec"),
          "Named generators: complete:n, cycle:n, bipartite:s,t, rooks:r, paley:q, petersen, "
          "shrikhande, hoffman-singleton");
    m.def("detect_srg", &detect_srg, py::arg("g"));
    m.def("girth", &girth, py::arg("g"));
    m.def("parse_graph", &parse_graph_text, py::arg("text"),
          "Parse the edge-list or JSON text format");

    m.def("decompose", &decompose, py::arg("g"), py::arg("x"), py::arg("y"));
    m.def("induced_bipartite", &induced_bipartite, py::arg("g"), py::arg("cn"));
    m.def("maximum_matching", &maximum_matching, py::arg("h"));
    m.def("has_augmenting_path", &has_augmenting_path, py::arg("h"), py::arg("m"));
    m.def("alternating_reach", &alternating_reach, py::arg("h"), py::arg("m"), py::arg("side"));
    m.def("counting_identity_check", &counting_identity_check, py::arg("h"), py::arg("m"),
          py::arg("side"));
    m.def("hall_check", &hall_check, py::arg("h"), py::arg("side"));

    m.def("lazy_measure", &lazy_measure, py::arg("g"), py::arg("x"), py::arg("eps"));
    m.def("wasserstein", &wasserstein, py::arg("g"), py::arg("mu"), py::arg("nu"));
    m.def("verify_plan", &verify_plan, py::arg("plan"));
    m.def("check_lipschitz", &check_lipschitz, py::arg("g"), py::arg("f"));
    m.def("dual_bound", &dual_bound, py::arg("g"), py::arg("f"), py::arg("mu"), py::arg("nu"));
    m.def("two_step_pairing", &two_step_pairing, py::arg("g"), py::arg("h"), py::arg("m"));
    m.def("srg_plan", &srg_plan, py::arg("g"), py::arg("cn"), py::arg("h"), py::arg("m"),
          py::arg("pairing"));
    m.def("srg_potential", &srg_potential, py::arg("cn"), py::arg("h"), py::arg("m"));

    m.def("kappa_eps", &kappa_eps, py::arg("g"), py::arg("x"), py::arg("y"), py::arg("eps"));
    m.def("condensed", &condensed, py::arg("g"), py::arg("x"), py::arg("y"),
          py::arg("verify_linearity") = false);
    m.def("condensed_limit", &condensed_limit, py::arg("g"), py::arg("x"), py::arg("y"));
    m.def("srg_formula", &srg_formula, py::arg("params"), py::arg("matching_size"));
    m.def("srg_curvature_certified", &srg_curvature_certified, py::arg("g"), py::arg("x"),
          py::arg("y"));
    m.def("edge_report", &edge_report, py::arg("g"), py::arg("x"), py::arg("y"));
    m.def("curvature_profile", &curvature_profile, py::arg("g"));
    m.def("rigidity_check", &rigidity_check, py::arg("g"));
    m.def("girth_special_cases", &girth_special_cases, py::arg("g"));
    m.def("conjecture_scan", &conjecture_scan, py::arg("qs"));

    m.def("laplacian_spectrum",
          [](const Graph& g) { return eigenvalues(normalized_laplacian(g)); }, py::arg("g"),
          "Eigenvalues of the normalized Laplacian, ascending");
    m.def("lambda1_checks", &lambda1_checks, py::arg("g"), py::arg("min_curvature"));
}
