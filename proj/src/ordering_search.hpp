#pragma once

#include <tclique/core.hpp>
#include <tclique/search.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace tclique::detail {

/// Does G[within] contain a clique of size s? Small sizes avoid the general
/// branch and bound.
inline bool clique_at_least(const UndirectedGraph & g, const Bitset & within, std::size_t s)
{
    if (s == 0)
        return true;
    if (s == 1)
        return within.any();
    if (s == 2) {
        for (auto x = within.find_first(); x != Bitset::npos; x = within.find_next(x))
            if (g.neighbours(static_cast<Vertex>(x)).intersects(within))
                return true;
        return false;
    }
    return has_clique(g, s, within).has_value();
}

/// Builds orderings left to right, keeping the backedge graph of the placed
/// prefix. A vertex is placed only if it closes no (k+1)-clique, and only if
/// no unplaced vertex pointing at it would be forced into one later: the
/// prefix's backedge graph only ever gains edges, so both tests are exact.
class OrderingSearch
{
public:
    OrderingSearch(const Digraph & graph, std::size_t k, Budget & budget) :
        graph_(graph), k_(k), budget_(budget), prefix_graph_(graph.size()), placed_(graph.size())
    {
        prefix_.reserve(graph.size());
    }

    /// `later` may not be placed while `earlier` is unplaced.
    void require_before(Vertex earlier, Vertex later) { precedence_.emplace_back(earlier, later); }

    /// Stop as soon as `cancel()` returns true.
    void set_cancel(std::function<bool()> cancel) { cancel_ = std::move(cancel); }

    /// Calls visit(const std::vector<Vertex>&) for every admissible ordering in
    /// lexicographic order until it returns false. Returns false if stopped.
    template <typename Visit>
    bool run(std::optional<Vertex> first, Visit && visit)
    {
        first_ = first;
        return dfs(visit);
    }

private:
    template <typename Visit>
    bool dfs(Visit & visit)
    {
        budget_.charge();
        if (cancel_ && cancel_())
            return false;
        auto n = graph_.size();
        if (prefix_.size() == n)
            return visit(prefix_);

        for (Vertex v = 0; v < n; ++v) {
            if (placed_.test(v))
                continue;
            if (prefix_.empty() && first_ && *first_ != v)
                continue;
            if (! precedence_ok(v))
                continue;
            Bitset back = graph_.out(v) & placed_;
            if (! can_place(v, back))
                continue;
            place(v, back);
            bool keep_going = dfs(visit);
            unplace(v, back);
            if (! keep_going)
                return false;
        }
        return true;
    }

    bool precedence_ok(Vertex v) const
    {
        for (auto & [earlier, later] : precedence_)
            if (later == v && ! placed_.test(earlier))
                return false;
        return true;
    }

    bool can_place(Vertex v, const Bitset & back) const
    {
        if (clique_at_least(prefix_graph_, back, k_))
            return false;
        Bitset threats = graph_.in(v) - placed_;
        for (auto r = threats.find_first(); r != Bitset::npos; r = threats.find_next(r)) {
            if (k_ < 2)
                return false;
            if (clique_at_least(prefix_graph_, graph_.out(static_cast<Vertex>(r)) & back, k_ - 1))
                return false;
        }
        return true;
    }

    void place(Vertex v, const Bitset & back)
    {
        back.for_each([&](std::size_t u) { prefix_graph_.add_edge(static_cast<Vertex>(u), v); });
        placed_.set(v);
        prefix_.push_back(v);
    }

    void unplace(Vertex v, const Bitset & back)
    {
        back.for_each([&](std::size_t u) { prefix_graph_.remove_edge(static_cast<Vertex>(u), v); });
        placed_.reset(v);
        prefix_.pop_back();
    }

    const Digraph & graph_;
    std::size_t k_;
    Budget & budget_;
    UndirectedGraph prefix_graph_;
    Bitset placed_;
    std::vector<Vertex> prefix_;
    std::optional<Vertex> first_;
    std::vector<std::pair<Vertex, Vertex>> precedence_;
    std::function<bool()> cancel_;
};

/// Runs f(i) for i in [0, count) on up to `threads` workers. The first
/// exception thrown by any task is rethrown after all workers finish.
template <typename F>
void parallel_for(std::size_t count, unsigned threads, F && f)
{
    threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(count)));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    {
        std::vector<std::jthread> workers;
        for (unsigned t = 0; t < threads; ++t)
            workers.emplace_back([&] {
                for (auto i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
                    try {
                        f(i);
                    }
                    catch (...) {
                        std::lock_guard lock(error_mutex);
                        if (! error)
                            error = std::current_exception();
                    }
                }
            });
    }
    if (error)
        std::rethrow_exception(error);
}

} // namespace tclique::detail
