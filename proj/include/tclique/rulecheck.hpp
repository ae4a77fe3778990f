#pragma once

#include <tclique/core.hpp>
#include <tclique/search.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tclique {

/// A tuple breaking one of the four exclusion rules for a given ordering and
/// pivot x. Roles are the single-letter names a, b, c, d, u, v, w.
struct RuleWitness
{
    int rule = 0;
    Ordering ordering;
    Vertex x = 0;
    std::vector<std::pair<char, Vertex>> roles;

    Vertex role(char name) const;
};

struct CellResult
{
    Ordering ordering;
    Vertex x = 0;
    /// One witness per broken rule, by ascending rule id.
    std::vector<RuleWitness> violations;

    bool all_rules_hold() const noexcept { return violations.empty(); }
    const RuleWitness & first() const { return violations.front(); }
};

/// Evaluates the four rules for ordering `ordering` and pivot `x`:
///   1. some vertex precedes x;
///   2. for a, b < x <= c, d: ca, da, cb arcs imply db is an arc;
///   3. no a <= u < w <= b < x <= v with a, b joined in the backedge graph
///      restricted to the vertices before x, and vu, vw both arcs;
///   4. no v < x <= a <= u < w <= b with a, b joined in the backedge graph
///      restricted to x and the vertices after it, and uv, wv both arcs.
/// The smallest witness in position order is reported for each rule.
CellResult check_cell(const Tournament & t, const Ordering & ordering, Vertex x);

/// Re-checks a witness straight from the rule's definition.
bool witness_violates(const Tournament & t, const RuleWitness & witness);

struct RuleCheckOptions
{
    std::optional<Vertex> first_vertex;
    /// Keep one ordering per automorphism orbit.
    bool quotient_automorphisms = false;
    SearchOptions search;
};

struct RuleReport
{
    std::size_t omega = 0;
    std::size_t ordering_count = 0;
    /// Orderings in lexicographic order, pivots ascending within each.
    std::vector<CellResult> cells;
    bool excluded = false;
};

/// Throws std::invalid_argument unless `t` is strong.
RuleReport check_rules(const Tournament & t, const RuleCheckOptions & options = {});

/// True when every cell breaks a rule, which rules `t` out of every D_k.
bool excluded_from_family(const Tournament & t, const RuleCheckOptions & options = {});

/// All automorphisms of `t` as vertex maps, identity first.
std::vector<std::vector<Vertex>> automorphisms(const Tournament & t);

/// Text table with 1-based vertices, one row per cell.
std::string render_paper(const RuleReport & report);

} // namespace tclique
