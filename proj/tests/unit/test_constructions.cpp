#include <tclique/constructions.hpp>
#include <tclique/gadgets.hpp>
#include <tclique/solvers.hpp>

#include "../oracles.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace tclique;

namespace {

// C(n, k) by Pascal's triangle, independent of binomial().
BigInt pascal(std::size_t n, std::size_t k)
{
    std::vector<BigInt> row{1};
    for (std::size_t i = 1; i <= n; ++i) {
        std::vector<BigInt> next(i + 1, 1);
        for (std::size_t j = 1; j < i; ++j)
            next[j] = row[j - 1] + row[j];
        row = std::move(next);
    }
    return k <= n ? row[k] : BigInt(0);
}

std::size_t backward_arcs(const Digraph & d, const Ordering & o)
{
    std::size_t count = 0;
    for (Vertex u = 0; u < d.size(); ++u)
        for (Vertex v = 0; v < d.size(); ++v)
            if (d.has_arc(u, v) && o.before(v, u))
                ++count;
    return count;
}

// Number of arcs from a later copy back to an earlier one.
std::size_t reversed_between_copies(const Construction & c)
{
    auto n = c.layout.base_order;
    std::size_t count = 0;
    for (Vertex x = 0; x < c.tournament.size(); ++x)
        for (Vertex y = x + 1; y < c.tournament.size(); ++y)
            if (x / n != y / n && c.tournament.has_arc(y, x))
                ++count;
    return count;
}

bool triangle_free(const Digraph & d, const Ordering & o)
{
    return ! has_clique(backedge_graph(d, o), 3).has_value();
}

} // namespace

TEST(Basic, TransitiveAndTriangle)
{
    auto t = tt(4);
    for (Vertex u = 0; u < 4; ++u)
        for (Vertex v = u + 1; v < 4; ++v)
            EXPECT_TRUE(t.has_arc(u, v));
    EXPECT_TRUE(c3().has_arc(0, 1) && c3().has_arc(1, 2) && c3().has_arc(2, 0));
}

TEST(Arrow, Examples)
{
    EXPECT_EQ(arrow(tt(1), tt(1)), tt(2));
    EXPECT_EQ(omega(arrow(c3(), c3())).value, 2u);
    auto a = arrow(c3(), tt(2));
    EXPECT_EQ(a.size(), 5u);
    for (Vertex u = 0; u < 3; ++u)
        for (Vertex v = 3; v < 5; ++v)
            EXPECT_TRUE(a.has_arc(u, v));
}

TEST(Delta, OfSinglesIsTriangle)
{
    auto d = delta(tt(1), tt(1), tt(1));
    EXPECT_TRUE(contains_subtournament(d, c3()));
    EXPECT_EQ(d.size(), 3u);
    auto big = delta(tt(2), c3(), tt(1));
    EXPECT_TRUE(big.has_arc(0, 2) && big.has_arc(2, 5) && big.has_arc(5, 0));
}

TEST(Lift, SizesAndConcatOrdering)
{
    auto l = lift(tt(2).digraph(), c3().digraph());
    EXPECT_EQ(l.graph.size(), 6u);
    EXPECT_EQ(l.landmarks.inner, (Span{0, 2}));
    EXPECT_EQ(l.landmarks.gadget, (Span{2, 3}));
    EXPECT_EQ(l.landmarks.apex, 5u);
    auto o = lift_ordering(l.landmarks, Ordering::identity(2), Ordering::identity(3));
    EXPECT_EQ(ordering_clique_number(l.graph, o), 2u);
}

TEST(Lift, ConcatOrderingAchievesMaxOfParts)
{
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        auto inner = oracle::random_tournament(1 + rng() % 5, rng);
        auto gadget = oracle::random_tournament(1 + rng() % 5, rng);
        auto oi = omega(inner), og = omega(gadget);
        auto l = lift(inner.digraph(), gadget.digraph());
        EXPECT_EQ(l.graph.size(), 1 + inner.size() + gadget.size());
        auto o = lift_ordering(l.landmarks, oi.witness, og.witness);
        EXPECT_EQ(ordering_clique_number(l.graph, o), std::max(oi.value + 1, og.value));
        // The lifted tournament itself can do no better than that.
        EXPECT_LE(omega(lift(inner, gadget)).value, std::max(oi.value + 1, og.value));
    }
}

TEST(Colex, SubsetsAreAllDistinctAndOrdered)
{
    auto s = colex_subsets(7, 3);
    ASSERT_EQ(s.size(), 35u);
    EXPECT_EQ(s.front(), (std::vector<std::size_t>{0, 1, 2}));
    EXPECT_EQ(s[1], (std::vector<std::size_t>{0, 1, 3}));
    EXPECT_EQ(s.back(), (std::vector<std::size_t>{4, 5, 6}));
    std::set<std::vector<std::size_t>> seen(s.begin(), s.end());
    EXPECT_EQ(seen.size(), 35u);
    for (std::size_t i = 1; i < s.size(); ++i) {
        auto a = s[i - 1], b = s[i];
        std::reverse(a.begin(), a.end());
        std::reverse(b.begin(), b.end());
        EXPECT_LT(a, b);
    }
}

TEST(Sizing, Examples)
{
    EXPECT_EQ(amplifier_sizing(3).total_vertices, 315);
    EXPECT_EQ(amplifier_sizing(3).copies_per_block, 35);
    EXPECT_EQ(pi_sizing(3).total_vertices, 63);
    EXPECT_EQ(pi_sizing(3).copies_per_block, 10);
    EXPECT_EQ(pi_sizing(3).label_universe, 5);
    EXPECT_EQ(amplifier_sizing(7).total_vertices, 49 * pascal(43, 7));
    EXPECT_FALSE(amplifier_sizing(7).materializable);
    for (std::size_t n = 1; n <= 12; ++n) {
        EXPECT_EQ(amplifier_sizing(n).total_vertices, n * n * pascal(n * (n - 1) + 1, n)) << n;
        EXPECT_EQ(pi_sizing(n).total_vertices, n * (2 * pascal(2 * n - 1, n) + 1)) << n;
    }
}

TEST(Sizing, DFamily)
{
    EXPECT_EQ(d_family_sizing(1).total_vertices, 3);
    EXPECT_EQ(d_family_sizing(2).total_vertices, 63);
    auto s = d_family_sizing(3);
    EXPECT_EQ(s.base_order, 63);
    EXPECT_EQ(s.copies_per_block, pascal(125, 63));
    EXPECT_EQ(s.total_vertices, 63 * (2 * pascal(125, 63) + 1));
    EXPECT_FALSE(s.materializable);
    EXPECT_THROW(d_family_sizing(4), std::domain_error);
    EXPECT_THROW(d_family(3), MaterializationRefused);
    try {
        d_family(3);
    } catch (const MaterializationRefused & e) {
        EXPECT_EQ(e.sizing().total_vertices, s.total_vertices);
    }
}

TEST(Amplifier, TransitiveBaseDoublesItself)
{
    auto c = amplifier(tt(2), Ordering::identity(2));
    EXPECT_EQ(c.tournament, tt(4));
    EXPECT_EQ(c.ordering, Ordering::identity(4));
}

TEST(Amplifier, C3SizesAndLayout)
{
    auto c = amplifier(c3(), Ordering::identity(3));
    EXPECT_EQ(c.tournament.size(), 315u);
    EXPECT_EQ(c.layout.copies.size(), 105u);
    EXPECT_EQ(c.layout.label_universe, 7u);
    EXPECT_NO_THROW(validate_layout(c.layout));
    EXPECT_TRUE(triangle_free(c.tournament, c.ordering));
}

TEST(Amplifier, WiringMatchesLabelRule)
{
    auto base = c3();
    auto ord = Ordering::identity(3);
    auto c = amplifier(base, ord);
    auto n = c.layout.base_order;
    for (Vertex x = 0; x < c.tournament.size(); ++x)
        for (Vertex y = x + 1; y < c.tournament.size(); ++y) {
            auto & cx = c.layout.copies[x / n];
            auto & cy = c.layout.copies[y / n];
            Vertex tx = x % n, ty = y % n;
            bool expected_forward;
            if (x / n == y / n)
                expected_forward = base.has_arc(tx, ty);
            else
                expected_forward = ! (cx.labels[tx] == cy.labels[ty] && base.has_arc(ord[cy.block], ord[cx.block]));
            ASSERT_EQ(c.tournament.has_arc(x, y), expected_forward) << x << " " << y;
            if (x / n != y / n && cx.block == cy.block)
                ASSERT_TRUE(c.tournament.has_arc(x, y));
        }
    // Each backward arc of the base ordering contributes, for every label,
    // one reversal per pair of copies carrying it: L * C(L-1, n-1)^2.
    auto per_label = pascal(6, 2);
    EXPECT_EQ(BigInt(reversed_between_copies(c)), backward_arcs(base, ord) * 7 * per_label * per_label);
}

TEST(Amplifier, RandomSubsetsHitTriangle)
{
    auto c = amplifier(c3(), Ordering::identity(3));
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Vertex> in, out;
        for (Vertex v = 0; v < c.tournament.size(); ++v)
            ((rng() & 1) ? in : out).push_back(v);
        bool hit = (! in.empty() && contains_subtournament(induced(c.tournament, in), c3())) ||
            (! out.empty() && contains_subtournament(induced(c.tournament, out), c3()));
        EXPECT_TRUE(hit);
    }
}

TEST(Amplifier, RejectsNonOptimalOrdering)
{
    // Ordering 0,2,1 of TT_3 has a backward arc, so clique number 2 > 1.
    EXPECT_THROW(amplifier(tt(3), Ordering({0, 2, 1})), std::invalid_argument);
}

TEST(Amplifier, RefusesPastBudget)
{
    ConstructionOptions o;
    o.vertex_budget = 100;
    EXPECT_THROW(amplifier(c3(), Ordering::identity(3), o), MaterializationRefused);
}

TEST(Pi, C3SizesAndAudit)
{
    auto c = pi(c3(), Ordering::identity(3));
    EXPECT_EQ(c.tournament.size(), 63u);
    EXPECT_EQ(c.layout.copies.size(), 21u);
    EXPECT_EQ(c.layout.label_universe, 5u);
    EXPECT_NO_THROW(validate_layout(c.layout));
    // Sum over the 5 labels of (3-subsets containing it)^2 = 5 * C(4,2)^2.
    EXPECT_EQ(BigInt(reversed_between_copies(c)), 5 * pascal(4, 2) * pascal(4, 2));
    EXPECT_EQ(reversed_between_copies(c), 180u);
    EXPECT_TRUE(triangle_free(c.tournament, c.ordering));
    EXPECT_TRUE(contains_subtournament(c.tournament, c3()));
}

TEST(Pi, WiringSymmetry)
{
    auto c = pi(c3(), Ordering::identity(3));
    auto n = c.layout.base_order;
    for (Vertex x = 0; x < c.tournament.size(); ++x)
        for (Vertex y = x + 1; y < c.tournament.size(); ++y) {
            auto & cx = c.layout.copies[x / n];
            auto & cy = c.layout.copies[y / n];
            if (x / n == y / n)
                continue;
            if (cx.block_name == "A" && cy.block_name == "C")
                ASSERT_EQ(c.tournament.has_arc(y, x), cx.labels[x % n] == cy.labels[y % n]);
            else
                ASSERT_TRUE(c.tournament.has_arc(x, y));
        }
    // A_j and C_j share labels.
    for (std::size_t j = 0; j < 10; ++j)
        EXPECT_EQ(c.layout.copies[j].labels, c.layout.copies[11 + j].labels);
    EXPECT_EQ(c.layout.copies[10].block_name, "B");
}

TEST(Pi, TriangleFreeOrderingOnRandomBases)
{
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 6; ++trial) {
        auto base = oracle::random_tournament(3 + rng() % 2, rng);
        auto r = omega(base);
        if (r.value != 2)
            continue;
        auto c = pi(base, r.witness);
        EXPECT_NO_THROW(validate_layout(c.layout));
        EXPECT_TRUE(triangle_free(c.tournament, c.ordering));
    }
}

TEST(DFamily, Levels)
{
    EXPECT_EQ(d_family(1).tournament, c3());
    auto d2 = d_family(2);
    EXPECT_EQ(d2.tournament.size(), 63u);
    EXPECT_EQ(d2.tournament, pi(c3(), Ordering::identity(3)).tournament);
    EXPECT_THROW(d_family(0), std::invalid_argument);
}

TEST(Layout, ValidationCatchesBrokenLabels)
{
    auto c = pi(c3(), Ordering::identity(3));
    auto broken = c.layout;
    broken.copies[0].label_set = broken.copies[1].label_set;
    EXPECT_THROW(validate_layout(broken), std::logic_error);
    broken = c.layout;
    std::swap(broken.copies[2].labels[0], broken.copies[3].labels[0]);
    EXPECT_THROW(validate_layout(broken), std::logic_error);
}
