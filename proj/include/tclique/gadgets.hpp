#pragma once

#include <tclique/constructions.hpp>
#include <tclique/search.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tclique {

struct MarkedArc
{
    std::string name;
    Vertex tail = 0;
    Vertex head = 0;
};

struct CertifiedOrdering
{
    std::string name;
    Ordering ordering;
    /// Direction of each marked arc under `ordering`, in marked_arcs order.
    std::vector<bool> forward;
};

struct MarkedGadget
{
    Tournament tournament;
    std::vector<MarkedArc> marked_arcs;
    std::vector<CertifiedOrdering> certified;
    std::size_t omega = 0;
    /// False when omega was trusted rather than recomputed.
    bool omega_verified = true;

    const MarkedArc & arc(const std::string & name) const;
    const CertifiedOrdering & ordering(const std::string & name) const;
};

/// Directions of the gadget's marked arcs under `ordering`.
std::vector<bool> marked_pattern(const MarkedGadget & gadget, const Ordering & ordering);

/// Throws std::logic_error if a marked arc is missing or a certified ordering
/// misses the gadget's omega or its recorded pattern.
void validate_gadget(const MarkedGadget & gadget);

/// 9-vertex base with uv = 6->8 and wx = 7->2; exactly one of them is forward
/// in every ordering of backedge clique number 2.
MarkedGadget var_base();

/// 8-vertex base with uv = 4->5, wx = 1->3, yz = 7->2; at least one is backward
/// in every ordering of backedge clique number 2.
MarkedGadget clause_base();

/// Circulant on 5 vertices with i -> i+1 and i -> i+2.
Tournament r5();

struct GadgetReport
{
    std::size_t omega = 0;
    std::size_t minimum_orderings = 0;
    bool property_holds = false;
    /// Pattern key such as "uv:fwd,wx:back" -> number of minimum orderings.
    std::map<std::string, std::size_t> pattern_counts;
    /// First minimum ordering found for each required pattern.
    std::vector<std::pair<std::string, Ordering>> witnesses;
    std::optional<Ordering> violation;
    SearchStats stats;
};

std::string pattern_key(const MarkedGadget & gadget, const std::vector<bool> & forward);

GadgetReport verify_var_base(const SearchOptions & options = {});
GadgetReport verify_clause_base(const SearchOptions & options = {});

/// Delta(1, base, W) with marked arcs kept at their base ids and certified
/// orderings extended by `w_ordering` and the apex. When |W| is at most
/// `check_up_to`, omega(W) = omega(base) + 1 is checked; otherwise it is
/// trusted and omega_verified is false.
MarkedGadget assemble_gadget(const MarkedGadget & base, const Tournament & w, const Ordering & w_ordering, std::size_t check_up_to = 10);
MarkedGadget assemble_var_gadget(const Tournament & w, const Ordering & w_ordering, std::size_t check_up_to = 10);
MarkedGadget assemble_clause_gadget(const Tournament & w, const Ordering & w_ordering, std::size_t check_up_to = 10);

} // namespace tclique
