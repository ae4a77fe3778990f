#pragma once

#include <tclique/core.hpp>
#include <tclique/search.hpp>

#include <optional>
#include <vector>

namespace tclique {

using Word = std::vector<std::size_t>;

/// Alphabet {0..alphabet-1} and forbidden subsequences of length 1 to 3.
struct PassInstance
{
    std::size_t alphabet = 0;
    std::vector<Word> forbidden;
};

/// Throws std::invalid_argument on empty or over-long words or foreign symbols.
void validate(const PassInstance & instance);

/// Forbids w v u for every transitive triangle u->v, v->w, u->w.
PassInstance to_pass(const Tournament & t);

bool is_subsequence(const Word & word, const std::vector<std::size_t> & permutation);

bool avoids_all(const PassInstance & instance, const std::vector<std::size_t> & permutation);

/// Lexicographically smallest permutation avoiding every forbidden word.
std::optional<std::vector<std::size_t>> solve_pass(const PassInstance & instance, const SearchOptions & options = {});

/// abc, dbe in S implies abe, dbc in S, over the length-3 words.
bool is_tournament_closed(const PassInstance & instance);

} // namespace tclique
