#include <tclique/constructions.hpp>
#include <tclique/gadgets.hpp>
#include <tclique/solvers.hpp>
#include <tclique/subword.hpp>

#include "../oracles.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace tclique;

namespace {

using Perm = std::vector<std::size_t>;

// Subsequence test by exhaustive index choice.
bool embeds(const Word & word, const Perm & p)
{
    std::function<bool(std::size_t, std::size_t)> go = [&](std::size_t wi, std::size_t from) {
        if (wi == word.size())
            return true;
        for (std::size_t i = from; i < p.size(); ++i)
            if (p[i] == word[wi] && go(wi + 1, i + 1))
                return true;
        return false;
    };
    return go(0, 0);
}

std::optional<Perm> smallest_avoiding(const PassInstance & inst)
{
    Perm p(inst.alphabet);
    std::iota(p.begin(), p.end(), std::size_t{0});
    do {
        bool ok = true;
        for (auto & w : inst.forbidden)
            ok = ok && ! embeds(w, p);
        if (ok)
            return p;
    } while (std::next_permutation(p.begin(), p.end()));
    return std::nullopt;
}

PassInstance random_instance(std::mt19937_64 & rng)
{
    PassInstance inst;
    inst.alphabet = 1 + rng() % 6;
    auto count = rng() % 8;
    for (std::size_t i = 0; i < count; ++i) {
        Word w(1 + rng() % 3);
        for (auto & s : w)
            s = rng() % inst.alphabet;
        inst.forbidden.push_back(w);
    }
    return inst;
}

} // namespace

TEST(ToPass, Examples)
{
    EXPECT_TRUE(to_pass(c3()).forbidden.empty());
    auto t = to_pass(tt(3));
    EXPECT_EQ(t.alphabet, 3u);
    EXPECT_EQ(t.forbidden, (std::vector<Word>{{2, 1, 0}}));

    auto r = to_pass(r5());
    std::set<Word> got(r.forbidden.begin(), r.forbidden.end());
    std::set<Word> expected;
    for (std::size_t i = 0; i < 5; ++i)
        expected.insert({(i + 2) % 5, (i + 1) % 5, i});
    EXPECT_EQ(got, expected);
}

TEST(ToPass, OneWordPerTransitiveTriple)
{
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 50; ++trial) {
        auto t = oracle::random_tournament(3 + rng() % 6, rng);
        auto inst = to_pass(t);
        std::set<Word> expected;
        for (Vertex u = 0; u < t.size(); ++u)
            for (Vertex v = 0; v < t.size(); ++v)
                for (Vertex w = 0; w < t.size(); ++w)
                    if (u != v && v != w && u != w && t.has_arc(u, v) && t.has_arc(v, w) && t.has_arc(u, w))
                        expected.insert({w, v, u});
        EXPECT_EQ(std::set<Word>(inst.forbidden.begin(), inst.forbidden.end()), expected);
        EXPECT_EQ(inst.forbidden.size(), expected.size());
        for (auto & w : inst.forbidden)
            EXPECT_EQ(w.size(), 3u);
    }
}

TEST(Subsequence, Examples)
{
    EXPECT_FALSE(is_subsequence({2, 1, 0}, {0, 1, 2}));
    EXPECT_TRUE(is_subsequence({2, 1, 0}, {2, 1, 0}));
    EXPECT_TRUE(is_subsequence({2, 0}, {2, 1, 0}));
    EXPECT_TRUE(is_subsequence({}, {0}));
}

TEST(Subsequence, MatchesExhaustiveEmbedding)
{
    std::mt19937_64 rng(72);
    for (int trial = 0; trial < 500; ++trial) {
        Perm p(1 + rng() % 7);
        std::iota(p.begin(), p.end(), std::size_t{0});
        std::shuffle(p.begin(), p.end(), rng);
        Word w(1 + rng() % 3);
        for (auto & s : w)
            s = rng() % p.size();
        EXPECT_EQ(is_subsequence(w, p), embeds(w, p));
    }
}

TEST(Solve, Examples)
{
    EXPECT_EQ(solve_pass({3, {{2, 1, 0}}}), (Perm{0, 1, 2}));
    EXPECT_FALSE(solve_pass({1, {{0}}}));
    EXPECT_EQ(solve_pass({3, {{0, 1}, {0, 2}}}), (Perm{1, 2, 0}));
    EXPECT_THROW(validate({2, {{0, 5}}}), std::invalid_argument);
    EXPECT_THROW(validate({2, {{}}}), std::invalid_argument);
    EXPECT_THROW(validate({4, {{0, 1, 2, 3}}}), std::invalid_argument);
}

TEST(Solve, MatchesBruteForceOnRandomInstances)
{
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 400; ++trial) {
        auto inst = random_instance(rng);
        auto got = solve_pass(inst);
        EXPECT_EQ(got, smallest_avoiding(inst));
        if (got)
            EXPECT_TRUE(avoids_all(inst, *got));
    }
}

TEST(Bridge, AvoidingIffBackedgeTriangleFree)
{
    std::mt19937_64 rng(74);
    for (int trial = 0; trial < 300; ++trial) {
        auto n = 3 + rng() % 7;
        auto t = oracle::random_tournament(n, rng);
        std::vector<Vertex> p(n);
        std::iota(p.begin(), p.end(), Vertex{0});
        std::shuffle(p.begin(), p.end(), rng);
        Perm perm(p.begin(), p.end());
        EXPECT_EQ(avoids_all(to_pass(t), perm), ! oracle::has_backward_triangle(oracle::matrix_of(t), p));
        EXPECT_EQ(avoids_all(to_pass(t), perm), ordering_clique_number(t, Ordering(p)) <= 2);
    }
}

TEST(Bridge, SolvableIffOmegaAtMostTwoOnSmallTournaments)
{
    for (std::size_t n = 1; n <= 5; ++n)
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * (n - 1) / 2)); ++code) {
            auto t = oracle::labelled(n, code);
            auto solved = solve_pass(to_pass(t));
            auto decided = omega_decide(t, 2);
            ASSERT_EQ(solved.has_value(), decided.holds) << n << " " << code;
            if (solved) {
                std::vector<Vertex> seq(solved->begin(), solved->end());
                EXPECT_EQ(Ordering(seq), *decided.witness);
            }
        }
}

TEST(Closure, Predicate)
{
    EXPECT_TRUE(is_tournament_closed({3, {{2, 1, 0}}}));
    // abc = 012 and dbe = 314 need 014 and 312 as well.
    PassInstance open{5, {{0, 1, 2}, {3, 1, 4}}};
    EXPECT_FALSE(is_tournament_closed(open));
    open.forbidden.push_back({0, 1, 4});
    open.forbidden.push_back({3, 1, 2});
    EXPECT_TRUE(is_tournament_closed(open));
}
