#pragma once

#include <tclique/core.hpp>
#include <tclique/reduction.hpp>

namespace fixture {

/// 7-vertex tournament with clique number 3, standing in for T_3.
inline tclique::Tournament surrogate_w()
{
    return tclique::Tournament::from_rows({
        {0, 0, 1, 0, 0, 1, 1},
        {1, 0, 0, 0, 1, 0, 1},
        {0, 1, 0, 1, 0, 0, 1},
        {1, 1, 0, 0, 0, 1, 0},
        {1, 0, 1, 1, 0, 0, 0},
        {0, 1, 1, 0, 1, 0, 0},
        {0, 0, 0, 1, 1, 1, 0},
    });
}

inline tclique::Literal pos(std::size_t v) { return {v - 1, true}; }
inline tclique::Literal neg(std::size_t v) { return {v - 1, false}; }

/// (x1 v x2 v x3) ^ (~x1 v ~x2 v x3)
inline tclique::CnfFormula two_clauses()
{
    tclique::CnfFormula f;
    f.variable_count = 3;
    f.clauses = {{pos(1), pos(2), pos(3)}, {neg(1), neg(2), pos(3)}};
    return f;
}

} // namespace fixture
