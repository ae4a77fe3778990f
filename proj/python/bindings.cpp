#include <tclique/constructions.hpp>
#include <tclique/gadgets.hpp>
#include <tclique/io.hpp>
#include <tclique/reduction.hpp>
#include <tclique/rulecheck.hpp>
#include <tclique/solvers.hpp>
#include <tclique/subword.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace tclique;

namespace {

SearchOptions options_of(std::optional<long long> time_limit_ms, unsigned threads)
{
    SearchOptions o;
    if (time_limit_ms)
        o.time_limit = std::chrono::milliseconds(*time_limit_ms);
    o.threads = threads;
    return o;
}

std::vector<Vertex> seq(const Ordering & o) { return {o.sequence().begin(), o.sequence().end()}; }

std::optional<std::vector<Vertex>> seq(const std::optional<Ordering> & o)
{
    if (! o)
        return std::nullopt;
    return seq(*o);
}

py::object to_python(const Json & j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::dict construction_dict(const Construction & c)
{
    py::dict d;
    d["tournament"] = c.tournament;
    d["ordering"] = seq(c.ordering);
    d["layout"] = to_python(layout_json(c.layout));
    return d;
}

py::dict report_dict(const GadgetReport & r)
{
    py::dict d;
    d["omega"] = r.omega;
    d["minimum_orderings"] = r.minimum_orderings;
    d["property_holds"] = r.property_holds;
    d["pattern_counts"] = r.pattern_counts;
    py::dict witnesses;
    for (auto & [name, o] : r.witnesses)
        witnesses[py::str(name)] = seq(o);
    d["witnesses"] = witnesses;
    return d;
}

} // namespace

PYBIND11_MODULE(_tclique, m)
{
    m.doc() = "Backedge clique numbers of tournaments";
    m.attr("__version__") = version_string;

    py::register_exception<BudgetExhausted>(m, "BudgetExhausted", PyExc_TimeoutError);
    py::register_exception<MaterializationRefused>(m, "MaterializationRefused", PyExc_MemoryError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<Tournament>(m, "Tournament")
        .def(py::init(&Tournament::from_rows), py::arg("rows"))
        .def_static("parse", [](const std::string & text) { return parse_tournament(text); }, py::arg("text"))
        .def("__len__", &Tournament::size)
        .def("has_arc", &Tournament::has_arc, py::arg("u"), py::arg("v"))
        .def("score", &Tournament::score)
        .def("flip", &Tournament::flip)
        .def("rows", &Tournament::rows)
        .def("to_trn", &format_trn)
        .def("__eq__", [](const Tournament & a, const Tournament & b) { return a == b; })
        .def("__repr__", [](const Tournament & t) { return "<Tournament n=" + std::to_string(t.size()) + ">"; });

    m.def("tt", &tt, py::arg("n"));
    m.def("c3", &c3);
    m.def("r5", &r5);
    m.def("tournament_from_code", &tournament_from_code, py::arg("n"), py::arg("code"));
    m.def("canonical_code", &canonical_code);
    m.def("is_transitive", &is_transitive);
    m.def("is_strong", &is_strong);
    m.def("contains", [](const Tournament & host, const Tournament & pattern) { return contains_subtournament(host, pattern); });

    m.def(
        "ordering_clique_number",
        [](const Tournament & t, std::vector<Vertex> ordering) { return ordering_clique_number(t, Ordering(std::move(ordering))); },
        py::arg("t"), py::arg("ordering"));

    m.def(
        "omega",
        [](const Tournament & t, std::optional<long long> time_limit_ms, unsigned threads) {
            py::gil_scoped_release release;
            auto r = omega(t, options_of(time_limit_ms, threads));
            return std::make_pair(r.value, seq(r.witness));
        },
        py::arg("t"), py::arg("time_limit_ms") = py::none(), py::arg("threads") = 1,
        "Returns (value, lexicographically least witness ordering).");

    m.def(
        "omega_decide",
        [](const Tournament & t, std::size_t k, std::optional<long long> time_limit_ms, unsigned threads) {
            py::gil_scoped_release release;
            auto r = omega_decide(t, k, options_of(time_limit_ms, threads));
            return std::make_pair(r.holds, seq(r.witness));
        },
        py::arg("t"), py::arg("k"), py::arg("time_limit_ms") = py::none(), py::arg("threads") = 1);

    m.def(
        "omega_orderings",
        [](const Tournament & t, std::optional<Vertex> first) {
            std::vector<std::vector<Vertex>> out;
            for (auto & o : enumerate_omega_orderings(t, first))
                out.push_back(seq(o));
            return out;
        },
        py::arg("t"), py::arg("first_vertex") = py::none());

    m.def(
        "chi_decide",
        [](const Tournament & t, std::size_t k, std::optional<long long> time_limit_ms) {
            py::gil_scoped_release release;
            auto r = chi_decide(t, k, options_of(time_limit_ms, 1));
            return std::make_pair(r.holds, r.colouring);
        },
        py::arg("t"), py::arg("k"), py::arg("time_limit_ms") = py::none());

    m.def(
        "forcing_holds",
        [](const Tournament & t, Vertex u, Vertex v, std::size_t k) {
            auto r = forcing_holds(t, u, v, k);
            py::dict d;
            d["holds"] = r.holds;
            d["vacuous"] = r.vacuous;
            d["counterexample"] = seq(r.counterexample);
            return d;
        },
        py::arg("t"), py::arg("u"), py::arg("v"), py::arg("k"));

    m.def(
        "min_order_with_omega",
        [](std::size_t k, std::size_t n_max, std::optional<long long> time_limit_ms) -> std::optional<std::pair<std::size_t, Tournament>> {
            std::optional<MinOrderResult> r;
            {
                py::gil_scoped_release release;
                r = min_order_with_omega(k, n_max, OmegaMethod::branch_and_bound, options_of(time_limit_ms, 1));
            }
            if (! r)
                return std::nullopt;
            return std::make_pair(r->order, r->witness);
        },
        py::arg("k"), py::arg("n_max"), py::arg("time_limit_ms") = py::none());

    m.def(
        "amplifier", [](const Tournament & t, std::vector<Vertex> ordering) { return construction_dict(amplifier(t, Ordering(std::move(ordering)))); },
        py::arg("base"), py::arg("ordering"));
    m.def(
        "pi", [](const Tournament & t, std::vector<Vertex> ordering) { return construction_dict(pi(t, Ordering(std::move(ordering)))); },
        py::arg("base"), py::arg("ordering"));
    m.def("d_family", [](std::size_t k) { return construction_dict(d_family(k)); }, py::arg("k"));
    m.def("d_family_sizing", [](std::size_t k) { return to_python(sizing_json(d_family_sizing(k))); }, py::arg("k"));

    m.def("verify_var_base", [] { return report_dict(verify_var_base()); });
    m.def("verify_clause_base", [] { return report_dict(verify_clause_base()); });

    m.def(
        "check_rules",
        [](const Tournament & t, std::optional<Vertex> first) {
            RuleCheckOptions o;
            o.first_vertex = first;
            auto r = check_rules(t, o);
            py::dict d;
            d["omega"] = r.omega;
            d["orderings"] = r.ordering_count;
            d["cells"] = r.cells.size();
            d["excluded"] = r.excluded;
            d["table"] = render_paper(r);
            return d;
        },
        py::arg("t"), py::arg("first_vertex") = py::none());

    m.def(
        "to_pass",
        [](const Tournament & t) {
            auto p = to_pass(t);
            return std::make_pair(p.alphabet, p.forbidden);
        },
        py::arg("t"), "Returns (alphabet size, forbidden words).");
    m.def(
        "solve_pass", [](std::size_t alphabet, std::vector<Word> forbidden) { return solve_pass({alphabet, std::move(forbidden)}); },
        py::arg("alphabet"), py::arg("forbidden"));

    py::class_<ReductionInstance>(m, "Reduction")
        .def_property_readonly("tournament", [](const ReductionInstance & r) { return r.tournament; })
        .def_property_readonly("reversed_arcs", [](const ReductionInstance & r) { return r.reversed_arcs; })
        .def("ordering", [](const ReductionInstance & r, const std::vector<bool> & nu) { return seq(ordering_from_assignment(r, nu)); })
        .def("assignment", [](const ReductionInstance & r, std::vector<Vertex> o) { return assignment_from_ordering(r, Ordering(std::move(o))); })
        .def("k4_free", [](const ReductionInstance & r, std::vector<Vertex> o) { return verify_ordering(r, Ordering(std::move(o))).k4_free; })
        .def("audit_ok", [](const ReductionInstance & r) { return audit_reduction(r).ok; });

    m.def(
        "reduce",
        [](const std::string & dimacs, const Tournament & w, std::vector<Vertex> w_ordering) {
            return build(parse_dimacs(dimacs), w, Ordering(std::move(w_ordering)));
        },
        py::arg("dimacs"), py::arg("w"), py::arg("w_ordering"));
}
