#pragma once

#include <tclique/bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tclique {

using Vertex = std::uint32_t;

/// Irreflexive directed graph over vertices 0..n-1, stored as in/out bit rows.
class Digraph
{
public:
    Digraph() = default;
    explicit Digraph(std::size_t n);

    std::size_t size() const noexcept { return out_.size(); }

    bool has_arc(Vertex u, Vertex v) const noexcept { return out_[u].test(v); }
    void add_arc(Vertex u, Vertex v);
    void remove_arc(Vertex u, Vertex v);

    const Bitset & out(Vertex v) const noexcept { return out_[v]; }
    const Bitset & in(Vertex v) const noexcept { return in_[v]; }

    std::size_t arc_count() const noexcept;

    friend bool operator==(const Digraph &, const Digraph &) = default;

private:
    std::vector<Bitset> out_, in_;
};

/// A digraph with exactly one arc between every pair of distinct vertices.
/// The only mutation offered is flipping an arc, which keeps that invariant.
class Tournament
{
public:
    Tournament() = default;

    /// Throws std::invalid_argument unless `graph` is a tournament.
    explicit Tournament(Digraph graph);

    /// Rows of '0'/'1' (or 0/1 ints); entry (i, j) set iff arc i->j.
    static Tournament from_rows(const std::vector<std::vector<int>> & rows);

    std::size_t size() const noexcept { return graph_.size(); }
    bool has_arc(Vertex u, Vertex v) const noexcept { return graph_.has_arc(u, v); }
    const Bitset & out(Vertex v) const noexcept { return graph_.out(v); }
    const Bitset & in(Vertex v) const noexcept { return graph_.in(v); }
    std::size_t score(Vertex v) const noexcept { return graph_.out(v).count(); }

    /// Reverses the arc between u and v, whichever way it currently points.
    void flip(Vertex u, Vertex v);

    const Digraph & digraph() const noexcept { return graph_; }
    operator const Digraph &() const noexcept { return graph_; }

    std::vector<std::vector<int>> rows() const;

    friend bool operator==(const Tournament &, const Tournament &) = default;

private:
    Digraph graph_;
};

/// A permutation of 0..n-1; position 0 is leftmost.
class Ordering
{
public:
    Ordering() = default;
    /// Throws std::invalid_argument unless `sequence` is a permutation.
    explicit Ordering(std::vector<Vertex> sequence);

    static Ordering identity(std::size_t n);

    std::size_t size() const noexcept { return sequence_.size(); }
    Vertex operator[](std::size_t i) const noexcept { return sequence_[i]; }
    std::size_t position(Vertex v) const noexcept { return position_[v]; }
    bool before(Vertex u, Vertex v) const noexcept { return position_[u] < position_[v]; }
    std::span<const Vertex> sequence() const noexcept { return sequence_; }

    Ordering reversed() const;

    friend bool operator==(const Ordering & a, const Ordering & b) { return a.sequence_ == b.sequence_; }
    friend auto operator<=>(const Ordering & a, const Ordering & b) { return a.sequence_ <=> b.sequence_; }

private:
    std::vector<Vertex> sequence_;
    std::vector<std::size_t> position_;
};

/// Simple undirected graph.
class UndirectedGraph
{
public:
    UndirectedGraph() = default;
    explicit UndirectedGraph(std::size_t n);

    std::size_t size() const noexcept { return adj_.size(); }
    bool has_edge(Vertex u, Vertex v) const noexcept { return adj_[u].test(v); }
    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);
    const Bitset & neighbours(Vertex v) const noexcept { return adj_[v]; }
    std::size_t edge_count() const noexcept;

    friend bool operator==(const UndirectedGraph &, const UndirectedGraph &) = default;

private:
    std::vector<Bitset> adj_;
};

/// Edge {u, v} iff u precedes v and v->u is an arc.
UndirectedGraph backedge_graph(const Digraph & graph, const Ordering & ordering);

/// Throws std::invalid_argument on an empty graph.
std::size_t clique_number(const UndirectedGraph & graph);

/// Largest clique inside `within`, as sorted vertices.
std::vector<Vertex> maximum_clique(const UndirectedGraph & graph, const Bitset & within);
std::vector<Vertex> maximum_clique(const UndirectedGraph & graph);

/// A clique of size k, if one exists (sorted vertices).
std::optional<std::vector<Vertex>> has_clique(const UndirectedGraph & graph, std::size_t k);
std::optional<std::vector<Vertex>> has_clique(const UndirectedGraph & graph, std::size_t k, const Bitset & within);

/// clique_number(backedge_graph(graph, ordering)); 0 for an empty graph.
std::size_t ordering_clique_number(const Digraph & graph, const Ordering & ordering);

bool is_transitive(const Tournament & t);
bool is_acyclic(const Digraph & graph);
bool is_acyclic(const Digraph & graph, const Bitset & within);
bool is_strong(const Tournament & t);

/// A directed cycle inside `within`, if any, as a vertex sequence.
std::optional<std::vector<Vertex>> find_cycle(const Digraph & graph, const Bitset & within);

/// Topological order of a transitive tournament (sources first).
Ordering topological_order(const Tournament & t);

Tournament reverse(const Tournament & t);
Digraph reverse(const Digraph & d);

/// Restriction to `vertices`, renumbered in increasing id order. Throws
/// std::out_of_range on an invalid id.
Tournament induced(const Tournament & t, std::span<const Vertex> vertices);
Digraph induced(const Digraph & d, std::span<const Vertex> vertices);

/// Relabel: vertex v of `t` becomes `mapping[v]`.
Tournament relabel(const Tournament & t, std::span<const Vertex> mapping);

/// An arc-preserving injection pattern -> host, with image[p] the host vertex
/// of pattern vertex p. Deterministic: smallest host ids are tried first.
std::optional<std::vector<Vertex>> contains_subtournament(const Tournament & host, const Tournament & pattern);

bool is_isomorphism(const Tournament & a, const Tournament & b, std::span<const Vertex> mapping);

} // namespace tclique
