#pragma once

#include <tclique/gadgets.hpp>

#include <array>
#include <stdexcept>
#include <string_view>

namespace tclique {

struct Literal
{
    std::size_t variable = 0; // 0-based
    bool positive = true;

    friend bool operator==(const Literal &, const Literal &) = default;
};

using Clause = std::array<Literal, 3>;

struct CnfFormula
{
    std::size_t variable_count = 0;
    std::vector<Clause> clauses;

    bool satisfied_by(const std::vector<bool> & assignment) const;
};

class CnfError : public std::invalid_argument
{
public:
    enum class Kind { malformed_header, bad_literal, wrong_width, duplicate_variable, variable_out_of_range };
    CnfError(Kind kind, const std::string & message) : std::invalid_argument(message), kind_(kind) {}
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

/// Throws CnfError if a clause repeats a variable or a variable is out of range.
void validate(const CnfFormula & formula);

/// DIMACS CNF restricted to clauses of exactly three literals.
CnfFormula parse_dimacs(std::string_view text);
std::string to_dimacs(const CnfFormula & formula);

using VertexPair = std::pair<Vertex, Vertex>;

struct VarBlock
{
    Span span;
    VertexPair f_plus;  // copy of uv
    VertexPair f_minus; // copy of wx
};

struct ClauseBlock
{
    Span span;
    std::array<VertexPair, 3> e; // copies of uv, wx, yz
};

struct GadgetDescriptor
{
    std::string mode = "surrogate";
    std::size_t w_order = 0;
    bool genuine = false;
    bool omega_verified = false;
};

struct ReductionInstance
{
    CnfFormula formula;
    Tournament tournament;
    std::vector<VarBlock> var_blocks;
    Span separator;
    std::vector<ClauseBlock> clause_blocks;
    GadgetDescriptor gadget;
    /// Arcs as they point after reversal: (c,a), (d,a), (c,b), (d,b) per literal.
    std::vector<VertexPair> reversed_arcs;

    MarkedGadget var_gadget;
    MarkedGadget clause_gadget;
    Ordering w_ordering;
};

struct BuildOptions
{
    std::size_t vertex_budget = 100'000;
    /// W is checked to have omega 3 when it has at most this many vertices.
    std::size_t check_up_to = 10;
};

ReductionInstance build(const CnfFormula & formula, const Tournament & w, const Ordering & w_ordering, const BuildOptions & options = {});

/// Index of the least satisfied literal of `clause`, if any.
std::optional<std::size_t> least_satisfied(const Clause & clause, const std::vector<bool> & assignment);

/// Throws std::invalid_argument if `assignment` does not satisfy the formula.
Ordering ordering_from_assignment(const ReductionInstance & inst, const std::vector<bool> & assignment);

/// nu(v_i) is true iff f_i^+ is forward; makes no validity judgment.
std::vector<bool> assignment_from_ordering(const ReductionInstance & inst, const Ordering & ordering);

struct OrderingCheck
{
    bool k4_free = false;
    bool has_triangle = false;
    std::size_t max_clique_found = 0;
    std::optional<std::vector<Vertex>> k4_witness;
};

OrderingCheck verify_ordering(const ReductionInstance & inst, const Ordering & ordering);

struct AuditReport
{
    bool ok = true;
    std::size_t reversed_found = 0;
    std::vector<std::string> problems;
};

/// Full scan of the built tournament against the block layout: blocks are
/// contiguous and in order, every cross-block arc points forward unless it is
/// one of the 12m bundle arcs, and each bundle arc is reversed.
AuditReport audit_reduction(const ReductionInstance & inst);

/// Vertex total for a surrogate W of the given order.
SizingReport reduction_sizing(const CnfFormula & formula, const BigInt & w_order, std::size_t vertex_budget = BuildOptions{}.vertex_budget);

/// Same with W an amplifier built from a base of order t.
SizingReport reduction_sizing_genuine(const CnfFormula & formula, std::size_t t, std::size_t vertex_budget = BuildOptions{}.vertex_budget);

} // namespace tclique
