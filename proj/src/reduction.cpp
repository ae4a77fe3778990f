#include <tclique/reduction.hpp>
#include <tclique/solvers.hpp>

#include <charconv>
#include <set>
#include <sstream>

namespace tclique {

namespace {

    Vertex at(const Span & span, Vertex local)
    {
        return static_cast<Vertex>(span.first + local);
    }

    VertexPair arc_in(const Span & span, const MarkedArc & arc)
    {
        return {at(span, arc.tail), at(span, arc.head)};
    }

    void append_shifted(std::vector<Vertex> & seq, const Span & span, const Ordering & local)
    {
        for (auto v : local.sequence())
            seq.push_back(at(span, v));
    }

    const char * clause_ordering_for(std::size_t anchored)
    {
        // The anchored literal's arc may go backward; the other two stay forward.
        static constexpr const char * names[] = {"wx+yz", "uv+yz", "uv+wx"};
        return names[anchored];
    }

    std::size_t vertex_total(const CnfFormula & f, std::size_t w)
    {
        return f.variable_count * (10 + w) + w + f.clauses.size() * (9 + w);
    }
} // namespace

bool CnfFormula::satisfied_by(const std::vector<bool> & assignment) const
{
    if (assignment.size() != variable_count)
        throw std::invalid_argument("assignment has " + std::to_string(assignment.size()) + " values for " +
            std::to_string(variable_count) + " variables");
    for (auto & c : clauses)
        if (! least_satisfied(c, assignment))
            return false;
    return true;
}

void validate(const CnfFormula & formula)
{
    for (std::size_t j = 0; j < formula.clauses.size(); ++j) {
        auto & c = formula.clauses[j];
        for (std::size_t k = 0; k < 3; ++k) {
            if (c[k].variable >= formula.variable_count)
                throw CnfError(CnfError::Kind::variable_out_of_range,
                    "clause " + std::to_string(j + 1) + ": variable " + std::to_string(c[k].variable + 1) + " out of range");
            for (std::size_t l = 0; l < k; ++l)
                if (c[l].variable == c[k].variable)
                    throw CnfError(CnfError::Kind::duplicate_variable,
                        "clause " + std::to_string(j + 1) + ": duplicate variable " + std::to_string(c[k].variable + 1) + " in clause");
        }
    }
}

CnfFormula parse_dimacs(std::string_view text)
{
    CnfFormula f;
    bool header = false;
    std::size_t declared_clauses = 0;
    std::vector<long> pending;
    std::size_t line_no = 0;

    auto finish_clause = [&] {
        if (pending.size() != 3)
            throw CnfError(CnfError::Kind::wrong_width, "clause " + std::to_string(f.clauses.size() + 1) + " has " +
                    std::to_string(pending.size()) + " literals, expected 3");
        Clause c;
        for (std::size_t k = 0; k < 3; ++k) {
            auto lit = pending[k];
            auto var = static_cast<std::size_t>(lit < 0 ? -lit : lit);
            if (var > f.variable_count)
                throw CnfError(CnfError::Kind::variable_out_of_range, "line " + std::to_string(line_no) + ": variable " +
                        std::to_string(var) + " exceeds declared count " + std::to_string(f.variable_count));
            c[k] = Literal{var - 1, lit > 0};
        }
        f.clauses.push_back(c);
        pending.clear();
    };

    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == 'c')
            continue;
        if (line[first] == '%')
            break;
        std::istringstream tokens(line);
        if (line[first] == 'p') {
            std::string p, cnf;
            long vars = -1, clauses = -1;
            if (header || ! (tokens >> p >> cnf >> vars >> clauses) || cnf != "cnf" || vars < 0 || clauses < 0)
                throw CnfError(CnfError::Kind::malformed_header, "line " + std::to_string(line_no) + ": malformed header");
            std::string extra;
            if (tokens >> extra)
                throw CnfError(CnfError::Kind::malformed_header, "line " + std::to_string(line_no) + ": trailing data in header");
            header = true;
            f.variable_count = static_cast<std::size_t>(vars);
            declared_clauses = static_cast<std::size_t>(clauses);
            continue;
        }
        if (! header)
            throw CnfError(CnfError::Kind::malformed_header, "line " + std::to_string(line_no) + ": clause before 'p cnf' header");
        std::string tok;
        while (tokens >> tok) {
            long lit = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), lit);
            if (ec != std::errc{} || ptr != tok.data() + tok.size())
                throw CnfError(CnfError::Kind::bad_literal, "line " + std::to_string(line_no) + ": bad literal '" + tok + "'");
            if (lit == 0)
                finish_clause();
            else
                pending.push_back(lit);
        }
    }
    if (! header)
        throw CnfError(CnfError::Kind::malformed_header, "missing 'p cnf' header");
    if (! pending.empty())
        finish_clause();
    if (f.clauses.size() != declared_clauses)
        throw CnfError(CnfError::Kind::malformed_header, "header declares " + std::to_string(declared_clauses) + " clauses, found " +
                std::to_string(f.clauses.size()));
    validate(f);
    return f;
}

std::string to_dimacs(const CnfFormula & formula)
{
    std::ostringstream out;
    out << "p cnf " << formula.variable_count << ' ' << formula.clauses.size() << '\n';
    for (auto & c : formula.clauses) {
        for (auto & l : c)
            out << (l.positive ? "" : "-") << l.variable + 1 << ' ';
        out << "0\n";
    }
    return out.str();
}

std::optional<std::size_t> least_satisfied(const Clause & clause, const std::vector<bool> & assignment)
{
    for (std::size_t k = 0; k < 3; ++k)
        if (assignment.at(clause[k].variable) == clause[k].positive)
            return k;
    return std::nullopt;
}

ReductionInstance build(const CnfFormula & formula, const Tournament & w, const Ordering & w_ordering, const BuildOptions & options)
{
    validate(formula);
    auto total = vertex_total(formula, w.size());
    if (total > options.vertex_budget)
        throw MaterializationRefused(reduction_sizing(formula, w.size(), options.vertex_budget));

    ReductionInstance inst;
    inst.formula = formula;
    inst.var_gadget = assemble_var_gadget(w, w_ordering, options.check_up_to);
    inst.clause_gadget = assemble_clause_gadget(w, w_ordering, options.check_up_to);
    inst.w_ordering = w_ordering;
    inst.gadget = GadgetDescriptor{"surrogate", w.size(), false, inst.var_gadget.omega_verified};

    // Blocks in chain order, each with its own tournament.
    std::vector<std::pair<Span, const Tournament *>> blocks;
    Vertex next = 0;
    auto place = [&](const Tournament & t) {
        Span s{next, t.size()};
        next = s.end();
        blocks.emplace_back(s, &t);
        return s;
    };
    for (std::size_t i = 0; i < formula.variable_count; ++i) {
        auto s = place(inst.var_gadget.tournament);
        inst.var_blocks.push_back(VarBlock{s, arc_in(s, inst.var_gadget.arc("uv")), arc_in(s, inst.var_gadget.arc("wx"))});
    }
    inst.separator = place(w);
    for (std::size_t j = 0; j < formula.clauses.size(); ++j) {
        auto s = place(inst.clause_gadget.tournament);
        auto & g = inst.clause_gadget;
        inst.clause_blocks.push_back(ClauseBlock{s, {arc_in(s, g.arc("uv")), arc_in(s, g.arc("wx")), arc_in(s, g.arc("yz"))}});
    }

    Digraph d(total);
    for (std::size_t p = 0; p < blocks.size(); ++p) {
        auto [span, t] = blocks[p];
        for (Vertex u = 0; u < span.count; ++u)
            t->out(u).for_each([&](std::size_t v) { d.add_arc(at(span, u), at(span, static_cast<Vertex>(v))); });
        for (Vertex u = span.first; u < span.end(); ++u)
            for (Vertex v = span.end(); v < total; ++v)
                d.add_arc(u, v);
    }
    inst.tournament = Tournament(std::move(d));

    for (std::size_t j = 0; j < formula.clauses.size(); ++j)
        for (std::size_t k = 0; k < 3; ++k) {
            auto & lit = formula.clauses[j][k];
            auto & vb = inst.var_blocks[lit.variable];
            auto [a, b] = lit.positive ? vb.f_plus : vb.f_minus;
            auto [c, dd] = inst.clause_blocks[j].e[k];
            for (auto [tail, head] : {VertexPair{a, c}, VertexPair{a, dd}, VertexPair{b, c}, VertexPair{b, dd}}) {
                inst.tournament.flip(tail, head);
                inst.reversed_arcs.emplace_back(head, tail);
            }
        }
    return inst;
}

Ordering ordering_from_assignment(const ReductionInstance & inst, const std::vector<bool> & assignment)
{
    if (! inst.formula.satisfied_by(assignment))
        throw std::invalid_argument("assignment does not satisfy the formula");
    std::vector<Vertex> seq;
    seq.reserve(inst.tournament.size());
    for (std::size_t i = 0; i < inst.var_blocks.size(); ++i) {
        auto & cert = inst.var_gadget.ordering(assignment[i] ? "uv-forward" : "wx-forward");
        append_shifted(seq, inst.var_blocks[i].span, cert.ordering);
    }
    append_shifted(seq, inst.separator, inst.w_ordering);
    for (std::size_t j = 0; j < inst.clause_blocks.size(); ++j) {
        auto anchored = *least_satisfied(inst.formula.clauses[j], assignment);
        auto & cert = inst.clause_gadget.ordering(clause_ordering_for(anchored));
        append_shifted(seq, inst.clause_blocks[j].span, cert.ordering);
    }
    return Ordering(std::move(seq));
}

std::vector<bool> assignment_from_ordering(const ReductionInstance & inst, const Ordering & ordering)
{
    if (ordering.size() != inst.tournament.size())
        throw std::invalid_argument("ordering size does not match the instance");
    std::vector<bool> nu;
    for (auto & vb : inst.var_blocks)
        nu.push_back(ordering.before(vb.f_plus.first, vb.f_plus.second));
    return nu;
}

OrderingCheck verify_ordering(const ReductionInstance & inst, const Ordering & ordering)
{
    if (ordering.size() != inst.tournament.size())
        throw std::invalid_argument("ordering size does not match the instance");
    auto g = backedge_graph(inst.tournament, ordering);
    OrderingCheck check;
    check.k4_witness = has_clique(g, 4);
    check.k4_free = ! check.k4_witness;
    check.has_triangle = has_clique(g, 3).has_value();
    check.max_clique_found = g.size() ? clique_number(g) : 0;
    return check;
}

AuditReport audit_reduction(const ReductionInstance & inst)
{
    AuditReport report;
    auto problem = [&](std::string msg) {
        report.ok = false;
        if (report.problems.size() < 20)
            report.problems.push_back(std::move(msg));
    };

    std::vector<Span> spans;
    for (auto & vb : inst.var_blocks)
        spans.push_back(vb.span);
    spans.push_back(inst.separator);
    for (auto & cb : inst.clause_blocks)
        spans.push_back(cb.span);

    Vertex expected_first = 0;
    for (auto & s : spans) {
        if (s.first != expected_first)
            problem("block starting at " + std::to_string(s.first) + " is not contiguous with its predecessor");
        expected_first = s.end();
    }
    auto n = inst.tournament.size();
    if (expected_first != n)
        problem("blocks cover " + std::to_string(expected_first) + " of " + std::to_string(n) + " vertices");
    if (spans.size() != inst.formula.variable_count + 1 + inst.formula.clauses.size())
        problem("block count does not match the formula");

    std::vector<std::size_t> block_of(n, spans.size());
    for (std::size_t p = 0; p < spans.size(); ++p)
        for (auto v = spans[p].first; v < spans[p].end() && v < n; ++v)
            block_of[v] = p;

    // Bundles recomputed from the formula and the stored landmarks.
    std::set<VertexPair> expected;
    for (std::size_t j = 0; j < inst.formula.clauses.size() && j < inst.clause_blocks.size(); ++j)
        for (std::size_t k = 0; k < 3; ++k) {
            auto & lit = inst.formula.clauses[j][k];
            auto & vb = inst.var_blocks.at(lit.variable);
            auto [a, b] = lit.positive ? vb.f_plus : vb.f_minus;
            auto [c, d] = inst.clause_blocks[j].e[k];
            for (auto x : {a, b}) {
                if (! expected.insert({c, x}).second)
                    problem("bundle arc reused");
                if (! expected.insert({d, x}).second)
                    problem("bundle arc reused");
            }
        }
    if (expected.size() != 12 * inst.formula.clauses.size())
        problem("expected " + std::to_string(12 * inst.formula.clauses.size()) + " bundle arcs, derived " + std::to_string(expected.size()));

    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            if (block_of[u] == block_of[v])
                continue;
            // u sits in the earlier block.
            bool bundle = expected.count({v, u}) > 0;
            bool backward = inst.tournament.has_arc(v, u);
            if (backward)
                ++report.reversed_found;
            if (bundle && ! backward)
                problem("bundle arc " + std::to_string(v) + "->" + std::to_string(u) + " not reversed");
            if (! bundle && backward)
                problem("cross-block arc " + std::to_string(v) + "->" + std::to_string(u) + " points backward");
        }

    std::set<VertexPair> recorded(inst.reversed_arcs.begin(), inst.reversed_arcs.end());
    if (recorded != expected)
        problem("recorded reversed arcs differ from the bundles implied by the formula");
    return report;
}

SizingReport reduction_sizing(const CnfFormula & formula, const BigInt & w_order, std::size_t vertex_budget)
{
    SizingReport s;
    s.construction = "reduction";
    s.base_order = w_order;
    s.copies = formula.variable_count + 1 + formula.clauses.size();
    s.total_vertices = BigInt(formula.variable_count) * (10 + w_order) + w_order + BigInt(formula.clauses.size()) * (9 + w_order);
    s.materializable = s.total_vertices <= vertex_budget;
    return s;
}

SizingReport reduction_sizing_genuine(const CnfFormula & formula, std::size_t t, std::size_t vertex_budget)
{
    auto w = amplifier_sizing(t, vertex_budget).total_vertices;
    auto s = reduction_sizing(formula, w, vertex_budget);
    s.construction = "reduction-genuine";
    return s;
}

} // namespace tclique
