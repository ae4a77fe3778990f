#pragma once

#include <tclique/core.hpp>
#include <tclique/search.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace tclique {

struct OmegaDecision
{
    bool holds = false;
    /// Lexicographically smallest ordering with backedge clique number <= k.
    std::optional<Ordering> witness;
    SearchStats stats;
};

struct OmegaResult
{
    std::size_t value = 0;
    /// Lexicographically smallest omega-ordering.
    Ordering witness;
    SearchStats stats;
};

struct ChiDecision
{
    bool holds = false;
    /// class_of[v] in 0..k-1; every class induces an acyclic subdigraph.
    std::optional<std::vector<std::size_t>> colouring;
    SearchStats stats;
    /// Directed cycles learnt as constraints during the search.
    std::size_t cuts = 0;
};

struct ChiResult
{
    std::size_t value = 0;
    std::vector<std::size_t> colouring;
    SearchStats stats;
};

struct ForcingResult
{
    /// True when every ordering with backedge clique number <= k puts u before v.
    bool holds = false;
    /// Set when holds only because no ordering reaches clique number <= k.
    bool vacuous = false;
    std::optional<Ordering> counterexample;
    SearchStats stats;
};

enum class OmegaMethod
{
    branch_and_bound,
    enumeration,
};

/// Is there an ordering whose backedge graph has clique number at most k?
OmegaDecision omega_decide(const Digraph & graph, std::size_t k, const SearchOptions & options = {});

/// Exact tournament clique number, with the lexicographically smallest witness.
OmegaResult omega(const Digraph & graph, const SearchOptions & options = {});

/// Plain n!-permutation scan; same contract as omega(). Only sensible for
/// small n and kept as an independent cross-check of the pruned search.
OmegaResult omega_by_enumeration(const Digraph & graph);

/// Every omega-ordering in lexicographic order, optionally only those
/// starting with `first_vertex`.
std::vector<Ordering> enumerate_omega_orderings(const Digraph & graph, std::optional<Vertex> first_vertex = std::nullopt,
    const SearchOptions & options = {});

/// Every ordering with backedge clique number <= k, lexicographic.
std::vector<Ordering> enumerate_orderings_within(const Digraph & graph, std::size_t k,
    std::optional<Vertex> first_vertex = std::nullopt, const SearchOptions & options = {});

ChiDecision chi_decide(const Digraph & graph, std::size_t k, const SearchOptions & options = {});
ChiResult chi(const Digraph & graph, const SearchOptions & options = {});

/// True iff `colouring` splits the graph into acyclic classes.
bool is_acyclic_colouring(const Digraph & graph, const std::vector<std::size_t> & colouring);

ForcingResult forcing_holds(const Digraph & graph, Vertex u, Vertex v, std::size_t k, const SearchOptions & options = {});

/// Upper-triangle arc bits (i < j, bit set iff i->j) in row-major order.
/// Requires n <= 11.
std::uint64_t adjacency_code(const Tournament & t);
Tournament tournament_from_code(std::size_t n, std::uint64_t code);

/// Smallest adjacency code over all relabellings that sort vertices by score.
std::uint64_t canonical_code(const Tournament & t);

/// One representative per isomorphism class, in increasing canonical code,
/// built by orderly extension of the classes on n - 1 vertices.
std::vector<Tournament> nonisomorphic_tournaments(std::size_t n);

struct MinOrderResult
{
    std::size_t order = 0;
    Tournament witness;
};

/// Smallest n <= n_max with a tournament of clique number exactly k.
std::optional<MinOrderResult> min_order_with_omega(std::size_t k, std::size_t n_max,
    OmegaMethod method = OmegaMethod::branch_and_bound, const SearchOptions & options = {});

} // namespace tclique
