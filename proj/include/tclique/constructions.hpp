#pragma once

#include <tclique/core.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace tclique {

using BigInt = boost::multiprecision::cpp_int;

/// Contiguous run of vertex ids.
struct Span
{
    Vertex first = 0;
    std::size_t count = 0;

    bool contains(Vertex v) const noexcept { return v >= first && v < first + count; }
    Vertex end() const noexcept { return static_cast<Vertex>(first + count); }
    friend bool operator==(const Span &, const Span &) = default;
};

BigInt binomial(const BigInt & n, std::size_t k);

/// Closed-form size of a copy/label construction.
struct SizingReport
{
    std::string construction;
    BigInt base_order;       // n
    BigInt label_universe;   // L
    BigInt copies_per_block; // m
    BigInt copies;
    BigInt total_vertices;
    bool materializable = false;
};

/// Thrown instead of building a construction larger than the vertex budget.
class MaterializationRefused : public std::runtime_error
{
public:
    explicit MaterializationRefused(SizingReport sizing);
    const SizingReport & sizing() const noexcept { return sizing_; }

private:
    SizingReport sizing_;
};

struct ConstructionOptions
{
    std::size_t vertex_budget = 100'000;
    /// Base orders up to this size have their omega-ordering re-verified.
    std::size_t verify_up_to = 9;
};

struct CopyInfo
{
    std::string block_name;
    std::size_t block = 0;
    std::size_t index_in_block = 0;
    Span vertices;
    /// phi(copy): sorted labels; empty for unlabelled copies.
    std::vector<std::size_t> label_set;
    /// psi: label of each base vertex, indexed by base vertex id.
    std::vector<std::size_t> labels;
};

/// Block/copy/label bookkeeping shared by the amplifier and Pi constructions.
struct CopyLayout
{
    std::size_t base_order = 0;
    std::size_t block_count = 0;
    std::size_t label_universe = 0;
    std::vector<CopyInfo> copies;

    /// Index into `copies` of the copy holding vertex v.
    std::size_t copy_of(Vertex v) const { return v / base_order; }
};

/// Throws std::logic_error naming the first broken layout invariant: every
/// labelled block's label sets are exactly the n-subsets of the universe, and
/// each psi is a bijection onto its label set.
void validate_layout(const CopyLayout & layout);

struct Construction
{
    Tournament tournament;
    Ordering ordering;
    CopyLayout layout;
};

/// n-subsets of {0..universe-1} in colexicographic order.
std::vector<std::vector<std::size_t>> colex_subsets(std::size_t universe, std::size_t n);

Tournament tt(std::size_t n);
Tournament c3();

Digraph arrow(const Digraph & first, const Digraph & second);
Tournament arrow(const Tournament & first, const Tournament & second);

/// Disjoint copies with first => second => third => first.
Tournament delta(const Tournament & first, const Tournament & second, const Tournament & third);

struct LiftLandmarks
{
    Span inner;
    Span gadget;
    Vertex apex = 0;
};

/// Delta(1, inner, gadget) laid out as [inner | gadget | apex], so that
/// concatenating an ordering of inner, one of gadget, then the apex keeps the
/// backedge clique number at max(omega(inner) + 1, omega(gadget)).
struct Lifted
{
    Digraph graph;
    LiftLandmarks landmarks;
};
Lifted lift(const Digraph & inner, const Digraph & gadget);
Tournament lift(const Tournament & inner, const Tournament & gadget);

/// Ordering of the lifted graph from orderings of its two parts.
Ordering lift_ordering(const LiftLandmarks & landmarks, const Ordering & inner, const Ordering & gadget);

/// Copy/label amplifier preserving the clique number while forcing a copy of
/// `base` into every set or its complement. `omega_ordering` must achieve
/// the clique number of `base`.
Construction amplifier(const Tournament & base, const Ordering & omega_ordering, const ConstructionOptions & options = {});

/// 2m+1 chained copies A_1..A_m, B, C_1..C_m with label-matched arcs from
/// C-copies back to A-copies; the ordering concatenates `omega_ordering`
/// copy by copy.
Construction pi(const Tournament & base, const Ordering & omega_ordering, const ConstructionOptions & options = {});

SizingReport amplifier_sizing(std::size_t n, std::size_t vertex_budget = ConstructionOptions{}.vertex_budget);
SizingReport pi_sizing(const BigInt & n, std::size_t vertex_budget = ConstructionOptions{}.vertex_budget);

/// D_1 = C3, D_k = pi(D_{k-1}). Only k <= 2 can be built; larger k throws
/// MaterializationRefused carrying the closed-form size.
Construction d_family(std::size_t k, const ConstructionOptions & options = {});

/// Closed-form size of D_k. For k >= 4 the binomials involved are far beyond
/// evaluation and std::domain_error is thrown.
SizingReport d_family_sizing(std::size_t k, std::size_t vertex_budget = ConstructionOptions{}.vertex_budget);

} // namespace tclique
