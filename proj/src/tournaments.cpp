#include <tclique/solvers.hpp>

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>

namespace tclique {

namespace {
    constexpr std::size_t max_coded_order = 11;

    void check_codable(std::size_t n)
    {
        if (n > max_coded_order)
            throw std::invalid_argument("adjacency codes support at most " + std::to_string(max_coded_order) + " vertices");
    }

    std::uint64_t code_under(const Tournament & t, const std::vector<Vertex> & order)
    {
        std::uint64_t code = 0;
        std::size_t bit = 0;
        auto n = order.size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j, ++bit)
                if (t.has_arc(order[i], order[j]))
                    code |= std::uint64_t{1} << bit;
        return code;
    }
} // namespace

std::uint64_t adjacency_code(const Tournament & t)
{
    check_codable(t.size());
    std::vector<Vertex> order(t.size());
    std::iota(order.begin(), order.end(), Vertex{0});
    return code_under(t, order);
}

Tournament tournament_from_code(std::size_t n, std::uint64_t code)
{
    check_codable(n);
    Digraph d(n);
    std::size_t bit = 0;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j, ++bit) {
            if ((code >> bit) & 1U)
                d.add_arc(i, j);
            else
                d.add_arc(j, i);
        }
    return Tournament(std::move(d));
}

std::uint64_t canonical_code(const Tournament & t)
{
    auto n = t.size();
    check_codable(n);
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return t.score(a) < t.score(b); });

    // Segments of equal score; relabellings permute within segments only.
    std::vector<std::pair<std::size_t, std::size_t>> segments;
    for (std::size_t i = 0; i < n;) {
        auto j = i;
        while (j < n && t.score(order[j]) == t.score(order[i]))
            ++j;
        segments.emplace_back(i, j);
        i = j;
    }

    auto best = code_under(t, order);
    while (true) {
        // Odometer over the per-segment permutations.
        std::size_t s = 0;
        for (; s < segments.size(); ++s) {
            auto [b, e] = segments[s];
            if (std::next_permutation(order.begin() + b, order.begin() + e))
                break;
        }
        if (s == segments.size())
            break;
        best = std::min(best, code_under(t, order));
    }
    return best;
}

std::vector<Tournament> nonisomorphic_tournaments(std::size_t n)
{
    check_codable(n);
    if (n == 0)
        return {Tournament{}};
    std::set<std::uint64_t> level{0};
    for (std::size_t m = 2; m <= n; ++m) {
        std::set<std::uint64_t> next;
        for (auto code : level) {
            auto base = tournament_from_code(m - 1, code);
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (m - 1)); ++mask) {
                Digraph d(m);
                for (Vertex u = 0; u + 1 < m; ++u)
                    for (Vertex v = 0; v + 1 < m; ++v)
                        if (base.has_arc(u, v))
                            d.add_arc(u, v);
                auto fresh = static_cast<Vertex>(m - 1);
                for (Vertex u = 0; u + 1 < m; ++u) {
                    if ((mask >> u) & 1U)
                        d.add_arc(u, fresh);
                    else
                        d.add_arc(fresh, u);
                }
                next.insert(canonical_code(Tournament(std::move(d))));
            }
        }
        level = std::move(next);
    }
    std::vector<Tournament> out;
    out.reserve(level.size());
    for (auto code : level)
        out.push_back(tournament_from_code(n, code));
    return out;
}

std::optional<MinOrderResult> min_order_with_omega(std::size_t k, std::size_t n_max, OmegaMethod method, const SearchOptions & options)
{
    if (k == 0)
        throw std::invalid_argument("min_order_with_omega: k must be positive");
    auto start = std::chrono::steady_clock::now();
    for (std::size_t n = 1; n <= n_max; ++n) {
        for (auto & t : nonisomorphic_tournaments(n)) {
            // One deadline for the whole sweep.
            SearchOptions sub = options;
            if (options.time_limit) {
                auto spent = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
                if (spent >= *options.time_limit)
                    throw BudgetExhausted(0);
                sub.time_limit = *options.time_limit - spent;
            }
            auto value = method == OmegaMethod::branch_and_bound ? omega(t, sub).value : omega_by_enumeration(t).value;
            if (value == k)
                return MinOrderResult{n, t};
        }
    }
    return std::nullopt;
}

} // namespace tclique
