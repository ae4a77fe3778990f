#include <tclique/rulecheck.hpp>
#include <tclique/solvers.hpp>

#include "ordering_search.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace tclique {

namespace {

    // Component id of each position in the backedge graph restricted to
    // positions [lo, hi); positions outside get npos.
    std::vector<std::size_t> components(const Tournament & t, const Ordering & ord, std::size_t lo, std::size_t hi)
    {
        constexpr auto none = static_cast<std::size_t>(-1);
        std::vector<std::size_t> comp(ord.size(), none);
        std::vector<std::size_t> stack;
        for (std::size_t s = lo; s < hi; ++s) {
            if (comp[s] != none)
                continue;
            comp[s] = s;
            stack.push_back(s);
            while (! stack.empty()) {
                auto p = stack.back();
                stack.pop_back();
                for (auto q = lo; q < hi; ++q) {
                    if (comp[q] != none)
                        continue;
                    auto lo_pos = std::min(p, q), hi_pos = std::max(p, q);
                    // Backward arc between the two positions.
                    if (t.has_arc(ord[hi_pos], ord[lo_pos])) {
                        comp[q] = s;
                        stack.push_back(q);
                    }
                }
            }
        }
        return comp;
    }

    RuleWitness make(int rule, const Ordering & ord, Vertex x, std::vector<std::pair<char, std::size_t>> positions)
    {
        RuleWitness w{rule, ord, x, {}};
        for (auto [name, p] : positions)
            w.roles.emplace_back(name, ord[p]);
        return w;
    }

    std::optional<RuleWitness> rule1(const Ordering & ord, Vertex x)
    {
        if (ord.position(x) == 0)
            return RuleWitness{1, ord, x, {}};
        return std::nullopt;
    }

    std::optional<RuleWitness> rule2(const Tournament & t, const Ordering & ord, Vertex x)
    {
        auto n = ord.size(), px = ord.position(x);
        for (std::size_t a = 0; a < px; ++a)
            for (std::size_t b = 0; b < px; ++b)
                for (std::size_t c = px; c < n; ++c) {
                    if (! t.has_arc(ord[c], ord[a]) || ! t.has_arc(ord[c], ord[b]))
                        continue;
                    for (std::size_t d = px; d < n; ++d)
                        if (t.has_arc(ord[d], ord[a]) && ! t.has_arc(ord[d], ord[b]))
                            return make(2, ord, x, {{'a', a}, {'b', b}, {'c', c}, {'d', d}});
                }
        return std::nullopt;
    }

    std::optional<RuleWitness> rule3(const Tournament & t, const Ordering & ord, Vertex x)
    {
        auto n = ord.size(), px = ord.position(x);
        auto comp = components(t, ord, 0, px);
        for (std::size_t a = 0; a < px; ++a)
            for (std::size_t b = a + 1; b < px; ++b) {
                if (comp[a] != comp[b])
                    continue;
                for (std::size_t u = a; u <= b; ++u)
                    for (std::size_t w = u + 1; w <= b; ++w)
                        for (std::size_t v = px; v < n; ++v)
                            if (t.has_arc(ord[v], ord[u]) && t.has_arc(ord[v], ord[w]))
                                return make(3, ord, x, {{'a', a}, {'b', b}, {'u', u}, {'v', v}, {'w', w}});
            }
        return std::nullopt;
    }

    std::optional<RuleWitness> rule4(const Tournament & t, const Ordering & ord, Vertex x)
    {
        auto n = ord.size(), px = ord.position(x);
        auto comp = components(t, ord, px, n);
        for (std::size_t a = px; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b) {
                if (comp[a] != comp[b])
                    continue;
                for (std::size_t u = a; u <= b; ++u)
                    for (std::size_t w = u + 1; w <= b; ++w)
                        for (std::size_t v = 0; v < px; ++v)
                            if (t.has_arc(ord[u], ord[v]) && t.has_arc(ord[w], ord[v]))
                                return make(4, ord, x, {{'a', a}, {'b', b}, {'u', u}, {'v', v}, {'w', w}});
            }
        return std::nullopt;
    }

    // Union-find over the vertices y with keep(y), joined by backward arcs.
    template <typename Keep>
    bool joined(const Tournament & t, const Ordering & ord, Vertex a, Vertex b, Keep keep)
    {
        std::vector<Vertex> parent(t.size());
        std::iota(parent.begin(), parent.end(), Vertex{0});
        auto find = [&](Vertex v) {
            while (parent[v] != v)
                v = parent[v] = parent[parent[v]];
            return v;
        };
        for (Vertex p = 0; p < t.size(); ++p)
            for (Vertex q = 0; q < t.size(); ++q)
                if (keep(p) && keep(q) && ord.before(p, q) && t.has_arc(q, p))
                    parent[find(p)] = find(q);
        return keep(a) && keep(b) && find(a) == find(b);
    }

    std::vector<Ordering> quotient(const Tournament & t, std::vector<Ordering> orderings, std::optional<Vertex> first_vertex)
    {
        auto autos = automorphisms(t);
        if (first_vertex)
            std::erase_if(autos, [&](const std::vector<Vertex> & m) { return m[*first_vertex] != *first_vertex; });
        std::set<Ordering> kept;
        for (auto & ord : orderings) {
            auto best = ord;
            for (auto & m : autos) {
                std::vector<Vertex> image;
                for (auto v : ord.sequence())
                    image.push_back(m[v]);
                best = std::min(best, Ordering(std::move(image)));
            }
            kept.insert(best);
        }
        return {kept.begin(), kept.end()};
    }
} // namespace

Vertex RuleWitness::role(char name) const
{
    for (auto [r, v] : roles)
        if (r == name)
            return v;
    throw std::out_of_range(std::string("witness has no role ") + name);
}

CellResult check_cell(const Tournament & t, const Ordering & ordering, Vertex x)
{
    if (ordering.size() != t.size())
        throw std::invalid_argument("ordering size does not match the tournament");
    if (x >= t.size())
        throw std::out_of_range("pivot out of range");
    CellResult cell{ordering, x, {}};
    for (auto found : {rule1(ordering, x), rule2(t, ordering, x), rule3(t, ordering, x), rule4(t, ordering, x)})
        if (found)
            cell.violations.push_back(std::move(*found));
    return cell;
}

bool witness_violates(const Tournament & t, const RuleWitness & w)
{
    const auto & ord = w.ordering;
    if (ord.size() != t.size() || w.x >= t.size())
        return false;
    auto pos = [&](char r) { return ord.position(w.role(r)); };
    auto px = ord.position(w.x);
    try {
        switch (w.rule) {
        case 1:
            return px == 0;
        case 2: {
            auto a = w.role('a'), b = w.role('b'), c = w.role('c'), d = w.role('d');
            return pos('a') < px && pos('b') < px && pos('c') >= px && pos('d') >= px && t.has_arc(c, a) && t.has_arc(d, a) &&
                t.has_arc(c, b) && ! t.has_arc(d, b);
        }
        case 3: {
            bool chain = pos('a') <= pos('u') && pos('u') < pos('w') && pos('w') <= pos('b') && pos('b') < px && px <= pos('v');
            auto v = w.role('v');
            return chain && t.has_arc(v, w.role('u')) && t.has_arc(v, w.role('w')) &&
                joined(t, ord, w.role('a'), w.role('b'), [&](Vertex y) { return ord.position(y) < px; });
        }
        case 4: {
            bool chain = pos('v') < px && px <= pos('a') && pos('a') <= pos('u') && pos('u') < pos('w') && pos('w') <= pos('b');
            auto v = w.role('v');
            return chain && t.has_arc(w.role('u'), v) && t.has_arc(w.role('w'), v) &&
                joined(t, ord, w.role('a'), w.role('b'), [&](Vertex y) { return ord.position(y) >= px; });
        }
        default:
            return false;
        }
    }
    catch (const std::out_of_range &) {
        return false;
    }
}

RuleReport check_rules(const Tournament & t, const RuleCheckOptions & options)
{
    if (t.size() == 0 || ! is_strong(t))
        throw std::invalid_argument("check_rules: tournament is not strong");
    if (options.first_vertex && *options.first_vertex >= t.size())
        throw std::out_of_range("check_rules: first vertex out of range");

    RuleReport report;
    report.omega = omega(t, options.search).value;
    auto orderings = enumerate_orderings_within(t, report.omega, options.first_vertex, options.search);
    if (options.quotient_automorphisms)
        orderings = quotient(t, std::move(orderings), options.first_vertex);
    report.ordering_count = orderings.size();

    auto n = t.size();
    std::vector<std::optional<CellResult>> cells(orderings.size() * n);
    detail::parallel_for(cells.size(), options.search.threads,
        [&](std::size_t i) { cells[i] = check_cell(t, orderings[i / n], static_cast<Vertex>(i % n)); });
    report.excluded = true;
    for (auto & c : cells) {
        report.excluded = report.excluded && ! c->all_rules_hold();
        report.cells.push_back(std::move(*c));
    }
    return report;
}

bool excluded_from_family(const Tournament & t, const RuleCheckOptions & options)
{
    return check_rules(t, options).excluded;
}

std::vector<std::vector<Vertex>> automorphisms(const Tournament & t)
{
    auto n = t.size();
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> image(n);
    std::vector<bool> used(n, false);
    auto extend = [&](auto & self, Vertex v) -> void {
        if (v == n) {
            out.push_back(image);
            return;
        }
        for (Vertex c = 0; c < n; ++c) {
            if (used[c] || t.score(c) != t.score(v))
                continue;
            bool ok = true;
            for (Vertex u = 0; u < v && ok; ++u)
                ok = t.has_arc(u, v) == t.has_arc(image[u], c);
            if (! ok)
                continue;
            used[c] = true;
            image[v] = c;
            self(self, v + 1);
            used[c] = false;
        }
    };
    extend(extend, 0);
    return out;
}

std::string render_paper(const RuleReport & report)
{
    std::ostringstream out;
    out << "ordering\tx\tbroken rule\n";
    const Ordering * last = nullptr;
    for (auto & cell : report.cells) {
        if (! last || ! (*last == cell.ordering)) {
            for (std::size_t i = 0; i < cell.ordering.size(); ++i)
                out << (i ? " < " : "") << cell.ordering[i] + 1;
            last = &cell.ordering;
        }
        out << '\t' << cell.x + 1 << '\t';
        if (cell.all_rules_hold()) {
            out << "none\n";
            continue;
        }
        auto & w = cell.first();
        out << "rule " << w.rule;
        if (! w.roles.empty()) {
            out << " with";
            for (std::size_t i = 0; i < w.roles.size(); ++i)
                out << (i ? ", " : " ") << w.roles[i].first << " = " << w.roles[i].second + 1;
        }
        out << '\n';
    }
    return out.str();
}

} // namespace tclique
