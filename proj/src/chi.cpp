#include <tclique/solvers.hpp>

#include <bit>
#include <deque>
#include <limits>

namespace tclique {

namespace {

    // Colour-by-colour backtracking where the only constraints are directed
    // cycles that must not be monochromatic. Cycles are discovered when an
    // assignment closes one inside its class and are then kept as cuts for
    // propagation in every later branch.
    class AcyclicColouring
    {
    public:
        AcyclicColouring(const Digraph & g, std::size_t k, Budget & budget) :
            g_(g), k_(k), budget_(budget), colour_(g.size(), unassigned), domain_(g.size(), full_mask(k)),
            classes_(k, Bitset(g.size())), occurs_(g.size())
        {
        }

        std::optional<std::vector<std::size_t>> solve()
        {
            if (! search())
                return std::nullopt;
            return colour_;
        }

        std::size_t cuts() const noexcept { return cycles_.size(); }

    private:
        static constexpr std::size_t unassigned = std::numeric_limits<std::size_t>::max();

        static std::uint64_t full_mask(std::size_t k) { return k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1; }

        struct TrailEntry
        {
            Vertex v;
            std::uint64_t old_domain;
            bool assignment;
        };

        bool search()
        {
            budget_.charge();
            auto v = pick();
            if (v == g_.size())
                return true;
            auto allowed = domain_[v] & full_mask(std::min(k_, used_ + 1));
            for (auto bits = allowed; bits; bits &= bits - 1) {
                auto c = static_cast<std::size_t>(std::countr_zero(bits));
                auto mark = trail_.size();
                auto saved_used = used_;
                if (assign(static_cast<Vertex>(v), c) && propagate() && search())
                    return true;
                undo(mark);
                used_ = saved_used;
            }
            return false;
        }

        // Smallest domain first, then the vertex sitting in most cuts.
        std::size_t pick() const
        {
            std::size_t best = g_.size();
            int best_domain = 65;
            std::size_t best_occ = 0;
            for (std::size_t v = 0; v < g_.size(); ++v) {
                if (colour_[v] != unassigned)
                    continue;
                auto d = std::popcount(domain_[v] & full_mask(std::min(k_, used_ + 1)));
                if (d < best_domain || (d == best_domain && occurs_[v].size() > best_occ)) {
                    best = v;
                    best_domain = d;
                    best_occ = occurs_[v].size();
                }
            }
            return best;
        }

        bool remove_colour(Vertex w, std::size_t c)
        {
            auto bit = std::uint64_t{1} << c;
            if (! (domain_[w] & bit))
                return true;
            trail_.push_back({w, domain_[w], false});
            domain_[w] &= ~bit;
            if (domain_[w] == 0)
                return false;
            if (std::popcount(domain_[w]) == 1 && colour_[w] == unassigned)
                pending_.push_back(w);
            return true;
        }

        // Shortest directed cycle through v inside classes_[c] + v.
        std::optional<std::vector<Vertex>> cycle_through(Vertex v, std::size_t c) const
        {
            auto n = g_.size();
            const auto & cls = classes_[c];
            std::vector<Vertex> parent(n, static_cast<Vertex>(n));
            Bitset seen(n);
            std::deque<Vertex> queue;
            (g_.out(v) & cls).for_each([&](std::size_t w) {
                seen.set(w);
                parent[w] = v;
                queue.push_back(static_cast<Vertex>(w));
            });
            while (! queue.empty()) {
                auto u = queue.front();
                queue.pop_front();
                if (g_.has_arc(u, v)) {
                    std::vector<Vertex> cycle;
                    for (auto x = u; x != v; x = parent[x])
                        cycle.push_back(x);
                    cycle.push_back(v);
                    return cycle;
                }
                Bitset next = (g_.out(u) & cls) - seen;
                next.for_each([&](std::size_t w) {
                    seen.set(w);
                    parent[w] = u;
                    queue.push_back(static_cast<Vertex>(w));
                });
            }
            return std::nullopt;
        }

        bool assign(Vertex v, std::size_t c)
        {
            if (! (domain_[v] & (std::uint64_t{1} << c)))
                return false;
            if (auto cycle = cycle_through(v, c)) {
                auto idx = cycles_.size();
                for (auto x : *cycle)
                    occurs_[x].push_back(idx);
                cycles_.push_back(std::move(*cycle));
                remove_colour(v, c);
                return false;
            }
            trail_.push_back({v, domain_[v], true});
            colour_[v] = c;
            domain_[v] = std::uint64_t{1} << c;
            classes_[c].set(v);
            used_ = std::max(used_, c + 1);

            for (auto idx : occurs_[v]) {
                std::optional<Vertex> open;
                bool satisfied = false;
                std::size_t open_count = 0;
                for (auto x : cycles_[idx]) {
                    if (colour_[x] == unassigned) {
                        ++open_count;
                        open = x;
                    }
                    else if (colour_[x] != c) {
                        satisfied = true;
                        break;
                    }
                }
                if (satisfied)
                    continue;
                if (open_count == 0)
                    return false;
                if (open_count == 1 && ! remove_colour(*open, c))
                    return false;
            }
            return true;
        }

        bool propagate()
        {
            while (! pending_.empty()) {
                auto w = pending_.back();
                pending_.pop_back();
                if (colour_[w] != unassigned)
                    continue;
                auto c = static_cast<std::size_t>(std::countr_zero(domain_[w]));
                if (! assign(w, c)) {
                    pending_.clear();
                    return false;
                }
            }
            return true;
        }

        void undo(std::size_t mark)
        {
            pending_.clear();
            while (trail_.size() > mark) {
                auto e = trail_.back();
                trail_.pop_back();
                if (e.assignment) {
                    classes_[colour_[e.v]].reset(e.v);
                    colour_[e.v] = unassigned;
                }
                domain_[e.v] = e.old_domain;
            }
        }

        const Digraph & g_;
        std::size_t k_;
        Budget & budget_;
        std::vector<std::size_t> colour_;
        std::vector<std::uint64_t> domain_;
        std::vector<Bitset> classes_;
        std::vector<std::vector<Vertex>> cycles_;
        std::vector<std::vector<std::size_t>> occurs_;
        std::vector<TrailEntry> trail_;
        std::vector<Vertex> pending_;
        std::size_t used_ = 0;
    };
} // namespace

bool is_acyclic_colouring(const Digraph & graph, const std::vector<std::size_t> & colouring)
{
    if (colouring.size() != graph.size())
        return false;
    std::size_t classes = 0;
    for (auto c : colouring)
        classes = std::max(classes, c + 1);
    std::vector<Bitset> members(classes, Bitset(graph.size()));
    for (std::size_t v = 0; v < colouring.size(); ++v)
        members[colouring[v]].set(v);
    for (auto & m : members)
        if (! is_acyclic(graph, m))
            return false;
    return true;
}

ChiDecision chi_decide(const Digraph & graph, std::size_t k, const SearchOptions & options)
{
    if (k == 0)
        throw std::invalid_argument("chi_decide: k must be positive");
    if (k > 64)
        throw std::invalid_argument("chi_decide: at most 64 classes supported");
    Budget budget(options);
    AcyclicColouring search(graph, k, budget);
    ChiDecision result;
    result.colouring = search.solve();
    result.holds = result.colouring.has_value();
    result.stats = budget.stats();
    result.cuts = search.cuts();
    return result;
}

ChiResult chi(const Digraph & graph, const SearchOptions & options)
{
    if (graph.size() == 0)
        throw std::invalid_argument("chi: empty graph");
    SearchStats total;
    for (std::size_t k = 1; k <= graph.size(); ++k) {
        auto d = chi_decide(graph, k, options);
        total.nodes += d.stats.nodes;
        if (d.holds)
            return ChiResult{k, std::move(*d.colouring), total};
    }
    throw std::logic_error("chi: singleton classes always succeed");
}

} // namespace tclique
