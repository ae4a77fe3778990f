#include <tclique/solvers.hpp>

#include "ordering_search.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

namespace tclique {

using detail::OrderingSearch;
using detail::parallel_for;

namespace {

    // Lexicographically smallest admissible ordering, searching the subtrees
    // of each first vertex in parallel. The smallest successful first vertex
    // wins, which keeps the answer independent of the worker count.
    std::optional<Ordering> first_admissible(const Digraph & graph, std::size_t k, Budget & budget, unsigned threads,
        const std::vector<std::pair<Vertex, Vertex>> & precedence = {})
    {
        auto n = graph.size();
        if (n == 0)
            return Ordering{};

        auto search_from = [&](std::optional<Vertex> first, std::function<bool()> cancel) -> std::optional<Ordering> {
            OrderingSearch search(graph, k, budget);
            for (auto & [a, b] : precedence)
                search.require_before(a, b);
            if (cancel)
                search.set_cancel(std::move(cancel));
            std::optional<Ordering> found;
            search.run(first, [&](const std::vector<Vertex> & seq) {
                found = Ordering(seq);
                return false;
            });
            return found;
        };

        if (threads <= 1)
            return search_from(std::nullopt, nullptr);

        std::atomic<std::size_t> best{n};
        std::vector<std::optional<Ordering>> per_first(n);
        parallel_for(n, threads, [&](std::size_t f) {
            if (best.load() < f)
                return;
            per_first[f] = search_from(static_cast<Vertex>(f), [&best, f] { return best.load(std::memory_order_relaxed) < f; });
            if (per_first[f]) {
                auto current = best.load();
                while (f < current && ! best.compare_exchange_weak(current, f)) {
                }
            }
        });
        if (best.load() == n)
            return std::nullopt;
        return per_first[best.load()];
    }
} // namespace

OmegaDecision omega_decide(const Digraph & graph, std::size_t k, const SearchOptions & options)
{
    if (k == 0)
        throw std::invalid_argument("omega_decide: k must be positive");
    Budget budget(options);
    OmegaDecision result;
    result.witness = first_admissible(graph, k, budget, options.threads);
    result.holds = result.witness.has_value();
    result.stats = budget.stats();
    return result;
}

OmegaResult omega(const Digraph & graph, const SearchOptions & options)
{
    if (graph.size() == 0)
        throw std::invalid_argument("omega: empty graph");
    Budget budget(options);
    for (std::size_t k = 1; k <= graph.size(); ++k) {
        if (auto w = first_admissible(graph, k, budget, options.threads))
            return OmegaResult{k, std::move(*w), budget.stats()};
    }
    throw std::logic_error("omega: no ordering reached clique number n");
}

OmegaResult omega_by_enumeration(const Digraph & graph)
{
    auto n = graph.size();
    if (n == 0)
        throw std::invalid_argument("omega: empty graph");
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    OmegaResult best;
    best.value = n + 1;
    do {
        ++best.stats.nodes;
        Ordering ord(perm);
        auto w = ordering_clique_number(graph, ord);
        if (w < best.value) {
            best.value = w;
            best.witness = std::move(ord);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::vector<Ordering> enumerate_orderings_within(const Digraph & graph, std::size_t k, std::optional<Vertex> first_vertex,
    const SearchOptions & options)
{
    auto n = graph.size();
    if (first_vertex && *first_vertex >= n)
        throw std::out_of_range("first vertex out of range");
    Budget budget(options);
    std::vector<std::vector<Ordering>> per_first(n);
    std::vector<Vertex> firsts;
    if (first_vertex)
        firsts.push_back(*first_vertex);
    else
        for (Vertex v = 0; v < n; ++v)
            firsts.push_back(v);

    parallel_for(firsts.size(), options.threads, [&](std::size_t i) {
        OrderingSearch search(graph, k, budget);
        auto & out = per_first[firsts[i]];
        search.run(firsts[i], [&](const std::vector<Vertex> & seq) {
            out.emplace_back(seq);
            return true;
        });
    });

    std::vector<Ordering> all;
    for (auto & group : per_first)
        for (auto & o : group)
            all.push_back(std::move(o));
    return all;
}

std::vector<Ordering> enumerate_omega_orderings(const Digraph & graph, std::optional<Vertex> first_vertex, const SearchOptions & options)
{
    auto value = omega(graph, options).value;
    return enumerate_orderings_within(graph, value, first_vertex, options);
}

ForcingResult forcing_holds(const Digraph & graph, Vertex u, Vertex v, std::size_t k, const SearchOptions & options)
{
    if (u == v)
        throw std::invalid_argument("forcing_holds: u and v must differ");
    if (u >= graph.size() || v >= graph.size())
        throw std::out_of_range("forcing_holds: vertex out of range");
    if (k == 0)
        throw std::invalid_argument("forcing_holds: k must be positive");

    Budget budget(options);
    ForcingResult result;
    // A counterexample places v before u.
    result.counterexample = first_admissible(graph, k, budget, options.threads, {{v, u}});
    if (result.counterexample) {
        result.holds = false;
    }
    else {
        result.holds = true;
        result.vacuous = ! first_admissible(graph, k, budget, options.threads).has_value();
    }
    result.stats = budget.stats();
    return result;
}

} // namespace tclique
