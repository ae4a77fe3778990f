#include <tclique/constructions.hpp>
#include <tclique/solvers.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace tclique {

namespace {

    std::string sizing_message(const SizingReport & s)
    {
        return s.construction + " would have " + s.total_vertices.str() + " vertices, beyond the materialization budget";
    }

    void require_omega_ordering(const Tournament & base, const Ordering & ordering, const ConstructionOptions & options)
    {
        if (ordering.size() != base.size())
            throw std::invalid_argument("ordering size does not match the base tournament");
        if (base.size() > options.verify_up_to)
            return;
        if (ordering_clique_number(base, ordering) != omega(base).value)
            throw std::invalid_argument("ordering does not achieve the clique number of the base tournament");
    }

    // Labelled copy of `base` occupying [copy * n, copy * n + n).
    CopyInfo labelled_copy(std::string name, std::size_t block, std::size_t index, std::size_t copy, std::size_t n,
        const std::vector<std::size_t> & label_set, const Ordering & ordering)
    {
        CopyInfo info;
        info.block_name = std::move(name);
        info.block = block;
        info.index_in_block = index;
        info.vertices = Span{static_cast<Vertex>(copy * n), n};
        info.label_set = label_set;
        if (! label_set.empty()) {
            info.labels.resize(n);
            for (Vertex t = 0; t < n; ++t)
                info.labels[t] = label_set[ordering.position(t)];
        }
        return info;
    }

    Ordering concatenated(std::size_t copies, const Ordering & ordering)
    {
        auto n = ordering.size();
        std::vector<Vertex> seq;
        seq.reserve(copies * n);
        for (std::size_t q = 0; q < copies; ++q)
            for (auto v : ordering.sequence())
                seq.push_back(static_cast<Vertex>(q * n + v));
        return Ordering(std::move(seq));
    }

    std::size_t to_size(const BigInt & value)
    {
        return value.convert_to<std::size_t>();
    }
} // namespace

BigInt binomial(const BigInt & n, std::size_t k)
{
    if (n < k)
        return 0;
    BigInt result = 1;
    for (std::size_t i = 1; i <= k; ++i)
        result = result * (n - k + i) / i;
    return result;
}

MaterializationRefused::MaterializationRefused(SizingReport sizing) :
    std::runtime_error(sizing_message(sizing)), sizing_(std::move(sizing))
{
}

void validate_layout(const CopyLayout & layout)
{
    std::map<std::size_t, std::set<std::vector<std::size_t>>> sets_per_block;
    std::map<std::size_t, std::size_t> copies_per_block;
    for (auto & copy : layout.copies) {
        if (copy.label_set.empty())
            continue;
        if (copy.label_set.size() != layout.base_order)
            throw std::logic_error("copy label set has the wrong size");
        if (! std::is_sorted(copy.label_set.begin(), copy.label_set.end()) ||
            std::adjacent_find(copy.label_set.begin(), copy.label_set.end()) != copy.label_set.end())
            throw std::logic_error("copy label set is not a strictly increasing set");
        if (copy.label_set.back() >= layout.label_universe)
            throw std::logic_error("label outside the universe");
        std::vector<std::size_t> image = copy.labels;
        std::sort(image.begin(), image.end());
        if (image != copy.label_set)
            throw std::logic_error("psi is not a bijection onto the copy's label set");
        sets_per_block[copy.block].insert(copy.label_set);
        ++copies_per_block[copy.block];
    }
    auto expected = colex_subsets(layout.label_universe, layout.base_order).size();
    for (auto & [block, sets] : sets_per_block) {
        if (sets.size() != copies_per_block[block])
            throw std::logic_error("phi repeats a label set within block " + std::to_string(block));
        if (sets.size() != expected)
            throw std::logic_error("phi misses some n-subsets in block " + std::to_string(block));
    }
}

std::vector<std::vector<std::size_t>> colex_subsets(std::size_t universe, std::size_t n)
{
    std::vector<std::vector<std::size_t>> out;
    if (n > universe)
        return out;
    std::vector<std::size_t> current(n);
    std::iota(current.begin(), current.end(), std::size_t{0});
    while (true) {
        out.push_back(current);
        // Colex successor: bump the lowest element that can move up.
        std::size_t i = 0;
        while (i < n && current[i] + 1 == (i + 1 < n ? current[i + 1] : universe))
            ++i;
        if (i == n)
            break;
        ++current[i];
        for (std::size_t j = 0; j < i; ++j)
            current[j] = j;
    }
    return out;
}

Tournament tt(std::size_t n)
{
    Digraph d(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            d.add_arc(u, v);
    return Tournament(std::move(d));
}

Tournament c3()
{
    return Tournament::from_rows({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
}

Digraph arrow(const Digraph & first, const Digraph & second)
{
    auto a = first.size(), b = second.size();
    Digraph d(a + b);
    for (Vertex u = 0; u < a; ++u)
        first.out(u).for_each([&](std::size_t v) { d.add_arc(u, static_cast<Vertex>(v)); });
    for (Vertex u = 0; u < b; ++u)
        second.out(u).for_each([&](std::size_t v) { d.add_arc(static_cast<Vertex>(a + u), static_cast<Vertex>(a + v)); });
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = 0; v < b; ++v)
            d.add_arc(u, static_cast<Vertex>(a + v));
    return d;
}

Tournament arrow(const Tournament & first, const Tournament & second)
{
    return Tournament(arrow(first.digraph(), second.digraph()));
}

Tournament delta(const Tournament & first, const Tournament & second, const Tournament & third)
{
    auto a = first.size(), b = second.size();
    Digraph d = arrow(arrow(first.digraph(), second.digraph()), third.digraph());
    // arrow() made first => third; turn those arcs around.
    for (Vertex u = 0; u < a; ++u)
        for (Vertex w = 0; w < third.size(); ++w) {
            auto x = static_cast<Vertex>(a + b + w);
            d.remove_arc(u, x);
            d.add_arc(x, u);
        }
    return Tournament(std::move(d));
}

Lifted lift(const Digraph & inner, const Digraph & gadget)
{
    auto a = inner.size(), b = gadget.size();
    Lifted out{arrow(inner, gadget), {}};
    Digraph d(a + b + 1);
    for (Vertex u = 0; u < a + b; ++u)
        out.graph.out(u).for_each([&](std::size_t v) { d.add_arc(u, static_cast<Vertex>(v)); });
    auto apex = static_cast<Vertex>(a + b);
    for (Vertex u = 0; u < a; ++u)
        d.add_arc(apex, u);
    for (Vertex w = 0; w < b; ++w)
        d.add_arc(static_cast<Vertex>(a + w), apex);
    out.graph = std::move(d);
    out.landmarks = LiftLandmarks{Span{0, a}, Span{static_cast<Vertex>(a), b}, apex};
    return out;
}

Tournament lift(const Tournament & inner, const Tournament & gadget)
{
    return Tournament(lift(inner.digraph(), gadget.digraph()).graph);
}

Ordering lift_ordering(const LiftLandmarks & landmarks, const Ordering & inner, const Ordering & gadget)
{
    if (inner.size() != landmarks.inner.count || gadget.size() != landmarks.gadget.count)
        throw std::invalid_argument("lift_ordering: part sizes do not match the landmarks");
    std::vector<Vertex> seq;
    for (auto v : inner.sequence())
        seq.push_back(landmarks.inner.first + v);
    for (auto v : gadget.sequence())
        seq.push_back(landmarks.gadget.first + v);
    seq.push_back(landmarks.apex);
    return Ordering(std::move(seq));
}

SizingReport amplifier_sizing(std::size_t n, std::size_t vertex_budget)
{
    SizingReport s;
    s.construction = "amplifier";
    s.base_order = n;
    s.label_universe = BigInt(n) * (n == 0 ? 0 : n - 1) + 1;
    s.copies_per_block = binomial(s.label_universe, n);
    s.copies = s.copies_per_block * n;
    s.total_vertices = s.copies * n;
    s.materializable = s.total_vertices <= vertex_budget;
    return s;
}

SizingReport pi_sizing(const BigInt & n, std::size_t vertex_budget)
{
    if (n < 1)
        throw std::invalid_argument("pi_sizing: n must be positive");
    if (n > 100'000)
        throw std::domain_error("pi_sizing: binomial (2n-1 choose n) is too large to evaluate");
    auto k = n.convert_to<std::size_t>();
    SizingReport s;
    s.construction = "pi";
    s.base_order = n;
    s.label_universe = 2 * n - 1;
    s.copies_per_block = binomial(s.label_universe, k);
    s.copies = 2 * s.copies_per_block + 1;
    s.total_vertices = s.copies * n;
    s.materializable = s.total_vertices <= vertex_budget;
    return s;
}

Construction amplifier(const Tournament & base, const Ordering & omega_ordering, const ConstructionOptions & options)
{
    require_omega_ordering(base, omega_ordering, options);
    auto n = base.size();

    if (is_transitive(base)) {
        // T => T already forces a copy of T on one side.
        if (2 * n > options.vertex_budget) {
            SizingReport s{"amplifier", n, 0, 2, 2, BigInt(2 * n), false};
            throw MaterializationRefused(s);
        }
        Construction c{arrow(base, base), concatenated(2, omega_ordering), {}};
        c.layout.base_order = n;
        c.layout.block_count = 2;
        for (std::size_t q = 0; q < 2; ++q)
            c.layout.copies.push_back(labelled_copy("copy", q, 0, q, n, {}, omega_ordering));
        return c;
    }

    auto sizing = amplifier_sizing(n, options.vertex_budget);
    if (! sizing.materializable)
        throw MaterializationRefused(sizing);

    auto universe = to_size(sizing.label_universe);
    auto subsets = colex_subsets(universe, n);
    auto m = subsets.size();
    auto copies = m * n;
    auto total = copies * n;

    CopyLayout layout;
    layout.base_order = n;
    layout.block_count = n;
    layout.label_universe = universe;
    for (std::size_t block = 0; block < n; ++block)
        for (std::size_t j = 0; j < m; ++j)
            layout.copies.push_back(labelled_copy("block-" + std::to_string(block), block, j, block * m + j, n, subsets[j], omega_ordering));

    std::vector<std::size_t> label(total), block_of(total), copy_of(total);
    for (std::size_t q = 0; q < copies; ++q)
        for (Vertex t = 0; t < n; ++t) {
            auto x = q * n + t;
            label[x] = layout.copies[q].labels[t];
            block_of[x] = layout.copies[q].block;
            copy_of[x] = q;
        }

    Digraph d(total);
    for (std::size_t x = 0; x < total; ++x) {
        auto tx = static_cast<Vertex>(x % n);
        for (std::size_t y = x + 1; y < total; ++y) {
            auto vx = static_cast<Vertex>(x), vy = static_cast<Vertex>(y);
            if (copy_of[x] == copy_of[y]) {
                auto ty = static_cast<Vertex>(y % n);
                base.has_arc(tx, ty) ? d.add_arc(vx, vy) : d.add_arc(vy, vx);
                continue;
            }
            // Copies are chained left to right; an arc is turned back when the
            // labels agree and the blocks' representatives point backwards.
            bool reversed = label[x] == label[y] &&
                base.has_arc(omega_ordering[block_of[y]], omega_ordering[block_of[x]]);
            reversed ? d.add_arc(vy, vx) : d.add_arc(vx, vy);
        }
    }
    return Construction{Tournament(std::move(d)), concatenated(copies, omega_ordering), std::move(layout)};
}

Construction pi(const Tournament & base, const Ordering & omega_ordering, const ConstructionOptions & options)
{
    auto n = base.size();
    if (n == 0)
        throw std::invalid_argument("pi: empty base tournament");
    require_omega_ordering(base, omega_ordering, options);

    auto sizing = pi_sizing(n, options.vertex_budget);
    if (! sizing.materializable)
        throw MaterializationRefused(sizing);

    auto universe = 2 * n - 1;
    auto subsets = colex_subsets(universe, n);
    auto m = subsets.size();
    auto copies = 2 * m + 1;
    auto total = copies * n;

    CopyLayout layout;
    layout.base_order = n;
    layout.block_count = 3;
    layout.label_universe = universe;
    for (std::size_t j = 0; j < m; ++j)
        layout.copies.push_back(labelled_copy("A", 0, j, j, n, subsets[j], omega_ordering));
    layout.copies.push_back(labelled_copy("B", 1, 0, m, n, {}, omega_ordering));
    for (std::size_t j = 0; j < m; ++j)
        layout.copies.push_back(labelled_copy("C", 2, j, m + 1 + j, n, subsets[j], omega_ordering));

    Digraph d(total);
    for (std::size_t x = 0; x < total; ++x) {
        auto qx = x / n;
        auto tx = static_cast<Vertex>(x % n);
        for (std::size_t y = x + 1; y < total; ++y) {
            auto qy = y / n;
            auto ty = static_cast<Vertex>(y % n);
            auto vx = static_cast<Vertex>(x), vy = static_cast<Vertex>(y);
            if (qx == qy) {
                base.has_arc(tx, ty) ? d.add_arc(vx, vy) : d.add_arc(vy, vx);
                continue;
            }
            bool reversed = qx < m && qy > m && layout.copies[qx].labels[tx] == layout.copies[qy].labels[ty];
            reversed ? d.add_arc(vy, vx) : d.add_arc(vx, vy);
        }
    }
    return Construction{Tournament(std::move(d)), concatenated(copies, omega_ordering), std::move(layout)};
}

SizingReport d_family_sizing(std::size_t k, std::size_t vertex_budget)
{
    if (k == 0)
        throw std::invalid_argument("d_family: k must be positive");
    if (k == 1)
        return SizingReport{"d-family", 3, 0, 1, 1, 3, 3 <= vertex_budget};
    BigInt order = 3;
    SizingReport s;
    for (std::size_t level = 2; level <= k; ++level) {
        s = pi_sizing(order, vertex_budget);
        order = s.total_vertices;
    }
    s.construction = "d-family";
    return s;
}

Construction d_family(std::size_t k, const ConstructionOptions & options)
{
    if (k == 0)
        throw std::invalid_argument("d_family: k must be positive");
    if (k >= 3)
        throw MaterializationRefused(d_family_sizing(k, options.vertex_budget));
    Construction c{c3(), Ordering::identity(3), {}};
    c.layout.base_order = 3;
    c.layout.block_count = 1;
    c.layout.copies.push_back(labelled_copy("D1", 0, 0, 0, 3, {}, c.ordering));
    if (k == 1)
        return c;
    return pi(c.tournament, c.ordering, options);
}

} // namespace tclique
