#include <tclique/subword.hpp>

#include <set>
#include <stdexcept>

namespace tclique {

void validate(const PassInstance & instance)
{
    for (auto & w : instance.forbidden) {
        if (w.empty() || w.size() > 3)
            throw std::invalid_argument("forbidden words must have length 1 to 3");
        for (auto s : w)
            if (s >= instance.alphabet)
                throw std::invalid_argument("forbidden word uses symbol " + std::to_string(s) + " outside the alphabet");
    }
}

PassInstance to_pass(const Tournament & t)
{
    PassInstance inst{t.size(), {}};
    for (Vertex u = 0; u < t.size(); ++u)
        for (Vertex v = 0; v < t.size(); ++v) {
            if (! t.has_arc(u, v))
                continue;
            (t.out(v) & t.out(u)).for_each([&](std::size_t w) { inst.forbidden.push_back({w, v, u}); });
        }
    return inst;
}

bool is_subsequence(const Word & word, const std::vector<std::size_t> & permutation)
{
    std::size_t i = 0;
    for (auto s : permutation)
        if (i < word.size() && word[i] == s)
            ++i;
    return i == word.size();
}

bool avoids_all(const PassInstance & instance, const std::vector<std::size_t> & permutation)
{
    for (auto & w : instance.forbidden)
        if (is_subsequence(w, permutation))
            return false;
    return true;
}

std::optional<std::vector<std::size_t>> solve_pass(const PassInstance & instance, const SearchOptions & options)
{
    validate(instance);
    auto n = instance.alphabet;
    constexpr auto unplaced = static_cast<std::size_t>(-1);

    // Words indexed by their final symbol; a word is completed exactly when
    // that symbol is appended after the rest of it.
    std::vector<std::vector<const Word *>> ending(n);
    for (auto & w : instance.forbidden)
        ending[w.back()].push_back(&w);

    Budget budget(options);
    std::vector<std::size_t> position(n, unplaced), prefix;
    prefix.reserve(n);

    auto completes = [&](std::size_t s) {
        for (auto * w : ending[s]) {
            bool matched = true;
            std::size_t last = 0;
            for (std::size_t i = 0; i + 1 < w->size() && matched; ++i) {
                auto p = position[(*w)[i]];
                matched = p != unplaced && (i == 0 || p > last);
                last = p;
            }
            if (matched)
                return true;
        }
        return false;
    };

    auto dfs = [&](auto & self) -> bool {
        budget.charge();
        if (prefix.size() == n)
            return true;
        for (std::size_t s = 0; s < n; ++s) {
            if (position[s] != unplaced || completes(s))
                continue;
            position[s] = prefix.size();
            prefix.push_back(s);
            if (self(self))
                return true;
            prefix.pop_back();
            position[s] = unplaced;
        }
        return false;
    };
    if (dfs(dfs))
        return prefix;
    return std::nullopt;
}

bool is_tournament_closed(const PassInstance & instance)
{
    std::set<Word> words;
    for (auto & w : instance.forbidden)
        if (w.size() == 3)
            words.insert(w);
    for (auto & x : words)
        for (auto & y : words)
            if (x[1] == y[1] && (! words.count({x[0], x[1], y[2]}) || ! words.count({y[0], x[1], x[2]})))
                return false;
    return true;
}

} // namespace tclique
