#include <tclique/gadgets.hpp>
#include <tclique/solvers.hpp>

#include <algorithm>
#include <functional>

namespace tclique {

namespace {

    CertifiedOrdering certify(const MarkedGadget & g, std::string name, std::vector<Vertex> seq)
    {
        Ordering ord(std::move(seq));
        auto forward = marked_pattern(g, ord);
        return CertifiedOrdering{std::move(name), std::move(ord), std::move(forward)};
    }

    struct Requirement
    {
        std::string name;
        std::function<bool(const std::vector<bool> &)> matches;
    };

    GadgetReport verify(const MarkedGadget & g, const std::function<bool(const std::vector<bool> &)> & property,
        const std::vector<Requirement> & required, const SearchOptions & options)
    {
        GadgetReport report;
        auto om = omega(g.tournament, options);
        report.omega = om.value;
        auto orderings = enumerate_orderings_within(g.tournament, om.value, std::nullopt, options);
        report.minimum_orderings = orderings.size();
        report.stats.nodes = om.stats.nodes;
        report.property_holds = true;

        std::vector<std::optional<Ordering>> found(required.size());
        for (auto & ord : orderings) {
            auto pattern = marked_pattern(g, ord);
            ++report.pattern_counts[pattern_key(g, pattern)];
            if (! property(pattern) && ! report.violation) {
                report.property_holds = false;
                report.violation = ord;
            }
            for (std::size_t r = 0; r < required.size(); ++r)
                if (! found[r] && required[r].matches(pattern))
                    found[r] = ord;
        }
        for (std::size_t r = 0; r < required.size(); ++r) {
            if (found[r])
                report.witnesses.emplace_back(required[r].name, *found[r]);
            else
                report.property_holds = false;
        }
        return report;
    }
} // namespace

const MarkedArc & MarkedGadget::arc(const std::string & name) const
{
    for (auto & a : marked_arcs)
        if (a.name == name)
            return a;
    throw std::out_of_range("no marked arc named " + name);
}

const CertifiedOrdering & MarkedGadget::ordering(const std::string & name) const
{
    for (auto & c : certified)
        if (c.name == name)
            return c;
    throw std::out_of_range("no certified ordering named " + name);
}

std::vector<bool> marked_pattern(const MarkedGadget & gadget, const Ordering & ordering)
{
    std::vector<bool> forward;
    for (auto & a : gadget.marked_arcs)
        forward.push_back(ordering.before(a.tail, a.head));
    return forward;
}

std::string pattern_key(const MarkedGadget & gadget, const std::vector<bool> & forward)
{
    std::string key;
    for (std::size_t i = 0; i < gadget.marked_arcs.size(); ++i) {
        if (i)
            key += ',';
        key += gadget.marked_arcs[i].name + (forward[i] ? ":fwd" : ":back");
    }
    return key;
}

void validate_gadget(const MarkedGadget & gadget)
{
    for (auto & a : gadget.marked_arcs)
        if (a.tail >= gadget.tournament.size() || a.head >= gadget.tournament.size() || ! gadget.tournament.has_arc(a.tail, a.head))
            throw std::logic_error("marked arc " + a.name + " is not an arc of the gadget");
    for (auto & c : gadget.certified) {
        if (c.ordering.size() != gadget.tournament.size())
            throw std::logic_error("certified ordering " + c.name + " has the wrong size");
        if (ordering_clique_number(gadget.tournament, c.ordering) != gadget.omega)
            throw std::logic_error("certified ordering " + c.name + " does not achieve the gadget's omega");
        if (marked_pattern(gadget, c.ordering) != c.forward)
            throw std::logic_error("certified ordering " + c.name + " does not realize its recorded pattern");
    }
}

MarkedGadget var_base()
{
    MarkedGadget g;
    g.tournament = Tournament::from_rows({
        {0, 1, 1, 1, 1, 1, 0, 0, 0},
        {0, 0, 1, 1, 0, 0, 1, 0, 1},
        {0, 0, 0, 1, 1, 1, 1, 0, 0},
        {0, 0, 0, 0, 1, 0, 1, 1, 1},
        {0, 1, 0, 0, 0, 1, 1, 1, 0},
        {0, 1, 0, 1, 0, 0, 1, 1, 0},
        {1, 0, 0, 0, 0, 0, 0, 1, 1},
        {1, 1, 1, 0, 0, 0, 0, 0, 1},
        {1, 0, 1, 0, 1, 1, 0, 0, 0},
    });
    g.marked_arcs = {{"uv", 6, 8}, {"wx", 7, 2}};
    g.omega = 2;
    g.certified.push_back(certify(g, "uv-forward", {0, 1, 2, 3, 4, 5, 6, 7, 8}));
    g.certified.push_back(certify(g, "wx-forward", {5, 7, 1, 8, 0, 2, 3, 4, 6}));
    return g;
}

MarkedGadget clause_base()
{
    MarkedGadget g;
    g.tournament = Tournament::from_rows({
        {0, 1, 1, 1, 1, 0, 0, 0},
        {0, 0, 1, 1, 0, 1, 1, 0},
        {0, 0, 0, 1, 1, 0, 1, 0},
        {0, 0, 0, 0, 1, 1, 1, 0},
        {0, 1, 0, 0, 0, 1, 0, 1},
        {1, 0, 1, 0, 0, 0, 1, 1},
        {1, 0, 0, 0, 1, 0, 0, 1},
        {1, 1, 1, 1, 0, 0, 0, 0},
    });
    g.marked_arcs = {{"uv", 4, 5}, {"wx", 1, 3}, {"yz", 7, 2}};
    g.omega = 2;
    g.certified.push_back(certify(g, "uv+wx", {0, 1, 2, 3, 4, 5, 6, 7}));
    g.certified.push_back(certify(g, "uv+yz", {3, 6, 4, 7, 0, 1, 5, 2}));
    g.certified.push_back(certify(g, "wx+yz", {0, 1, 3, 5, 6, 4, 7, 2}));
    return g;
}

Tournament r5()
{
    Digraph d(5);
    for (Vertex i = 0; i < 5; ++i) {
        d.add_arc(i, (i + 1) % 5);
        d.add_arc(i, (i + 2) % 5);
    }
    return Tournament(std::move(d));
}

GadgetReport verify_var_base(const SearchOptions & options)
{
    auto g = var_base();
    return verify(
        g, [](const std::vector<bool> & f) { return f[0] != f[1]; },
        {{"uv-forward", [](const std::vector<bool> & f) { return f[0] && ! f[1]; }},
            {"wx-forward", [](const std::vector<bool> & f) { return ! f[0] && f[1]; }}},
        options);
}

GadgetReport verify_clause_base(const SearchOptions & options)
{
    auto g = clause_base();
    return verify(
        g, [](const std::vector<bool> & f) { return ! (f[0] && f[1] && f[2]); },
        {{"uv+wx", [](const std::vector<bool> & f) { return f[0] && f[1]; }},
            {"uv+yz", [](const std::vector<bool> & f) { return f[0] && f[2]; }},
            {"wx+yz", [](const std::vector<bool> & f) { return f[1] && f[2]; }}},
        options);
}

MarkedGadget assemble_gadget(const MarkedGadget & base, const Tournament & w, const Ordering & w_ordering, std::size_t check_up_to)
{
    if (w_ordering.size() != w.size())
        throw std::invalid_argument("W ordering size does not match W");
    auto target = base.omega + 1;
    if (ordering_clique_number(w, w_ordering) != target)
        throw std::invalid_argument("W ordering does not have backedge clique number " + std::to_string(target));

    MarkedGadget out;
    out.omega_verified = base.omega_verified;
    if (w.size() <= check_up_to) {
        if (omega(w).value != target)
            throw std::invalid_argument("W does not have omega " + std::to_string(target));
    }
    else {
        out.omega_verified = false;
    }

    auto lifted = lift(base.tournament.digraph(), w.digraph());
    out.tournament = Tournament(std::move(lifted.graph));
    out.marked_arcs = base.marked_arcs;
    out.omega = target;
    for (auto & c : base.certified) {
        auto ord = lift_ordering(lifted.landmarks, c.ordering, w_ordering);
        out.certified.push_back(CertifiedOrdering{c.name, std::move(ord), c.forward});
    }
    return out;
}

MarkedGadget assemble_var_gadget(const Tournament & w, const Ordering & w_ordering, std::size_t check_up_to)
{
    return assemble_gadget(var_base(), w, w_ordering, check_up_to);
}

MarkedGadget assemble_clause_gadget(const Tournament & w, const Ordering & w_ordering, std::size_t check_up_to)
{
    return assemble_gadget(clause_base(), w, w_ordering, check_up_to);
}

} // namespace tclique
