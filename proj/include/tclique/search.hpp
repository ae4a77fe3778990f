#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace tclique {

/// Knobs shared by every exact search.
struct SearchOptions
{
    /// Wall-clock limit; unlimited when empty.
    std::optional<std::chrono::milliseconds> time_limit;
    /// Worker threads; results do not depend on this value.
    unsigned threads = 1;
};

struct SearchStats
{
    std::uint64_t nodes = 0;
};

/// Raised by any solver that runs out of its time limit. Solvers never
/// return a partial answer instead.
class BudgetExhausted : public std::runtime_error
{
public:
    explicit BudgetExhausted(std::uint64_t nodes) :
        std::runtime_error("search budget exhausted after " + std::to_string(nodes) + " nodes"), nodes_(nodes)
    {
    }
    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    std::uint64_t nodes_;
};

/// Node counter plus deadline, shared between workers of one search.
class Budget
{
public:
    explicit Budget(const SearchOptions & options) :
        start_(std::chrono::steady_clock::now())
    {
        if (options.time_limit)
            deadline_ = start_ + *options.time_limit;
    }

    Budget(const Budget &) = delete;
    Budget & operator=(const Budget &) = delete;

    /// Counts one node; throws BudgetExhausted past the deadline.
    void charge()
    {
        auto n = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
        if (deadline_ && (n & 1023) == 0 && std::chrono::steady_clock::now() > *deadline_) {
            expired_.store(true, std::memory_order_relaxed);
        }
        if (expired_.load(std::memory_order_relaxed))
            throw BudgetExhausted(n);
    }

    std::uint64_t nodes() const noexcept { return nodes_.load(std::memory_order_relaxed); }
    SearchStats stats() const noexcept { return {nodes()}; }

private:
    std::chrono::steady_clock::time_point start_;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
    std::atomic<std::uint64_t> nodes_{0};
    std::atomic<bool> expired_{false};
};

} // namespace tclique
