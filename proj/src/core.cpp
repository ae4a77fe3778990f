#include <tclique/core.hpp>

#include <algorithm>
#include <deque>
#include <numeric>

namespace tclique {

namespace {

    void check_vertex(std::size_t n, Vertex v)
    {
        if (v >= n)
            throw std::out_of_range("vertex " + std::to_string(v) + " out of range for " + std::to_string(n) + " vertices");
    }

    // Greedy-colouring branch and bound (Tomita style). Stops as soon as a
    // clique larger than `floor` is seen when `stop_early` is set.
    class CliqueSearch
    {
    public:
        CliqueSearch(const UndirectedGraph & g, std::size_t floor, bool stop_early) :
            g_(g), best_size_(floor), stop_early_(stop_early)
        {
        }

        void expand(Bitset candidates)
        {
            std::vector<Vertex> order;
            std::vector<std::size_t> colour;
            Bitset uncoloured = candidates;
            std::size_t c = 0;
            while (uncoloured.any()) {
                ++c;
                Bitset q = uncoloured;
                for (auto v = q.find_first(); v != Bitset::npos; v = q.find_first()) {
                    q.reset(v);
                    q -= g_.neighbours(static_cast<Vertex>(v));
                    uncoloured.reset(v);
                    order.push_back(static_cast<Vertex>(v));
                    colour.push_back(c);
                }
            }

            for (std::size_t i = order.size(); i-- > 0;) {
                if (current_.size() + colour[i] <= best_size_)
                    return;
                auto v = order[i];
                current_.push_back(v);
                Bitset next = candidates & g_.neighbours(v);
                if (next.none()) {
                    if (current_.size() > best_size_) {
                        best_size_ = current_.size();
                        best_ = current_;
                        if (stop_early_)
                            done_ = true;
                    }
                }
                else
                    expand(std::move(next));
                current_.pop_back();
                if (done_)
                    return;
                candidates.reset(v);
            }
        }

        std::vector<Vertex> take_best()
        {
            std::sort(best_.begin(), best_.end());
            return std::move(best_);
        }

    private:
        const UndirectedGraph & g_;
        std::size_t best_size_;
        bool stop_early_;
        bool done_ = false;
        std::vector<Vertex> current_, best_;
    };

    std::vector<Vertex> bfs(const Digraph & d, Vertex start, bool forward)
    {
        std::vector<Vertex> seen{start};
        Bitset visited(d.size());
        visited.set(start);
        std::deque<Vertex> queue{start};
        while (! queue.empty()) {
            auto u = queue.front();
            queue.pop_front();
            Bitset next = (forward ? d.out(u) : d.in(u)) - visited;
            next.for_each([&](std::size_t w) {
                visited.set(w);
                seen.push_back(static_cast<Vertex>(w));
                queue.push_back(static_cast<Vertex>(w));
            });
        }
        return seen;
    }
} // namespace

Digraph::Digraph(std::size_t n) : out_(n, Bitset(n)), in_(n, Bitset(n)) {}

void Digraph::add_arc(Vertex u, Vertex v)
{
    check_vertex(size(), u);
    check_vertex(size(), v);
    if (u == v)
        throw std::invalid_argument("self-arc on vertex " + std::to_string(u));
    out_[u].set(v);
    in_[v].set(u);
}

void Digraph::remove_arc(Vertex u, Vertex v)
{
    check_vertex(size(), u);
    check_vertex(size(), v);
    out_[u].reset(v);
    in_[v].reset(u);
}

std::size_t Digraph::arc_count() const noexcept
{
    std::size_t c = 0;
    for (auto & row : out_)
        c += row.count();
    return c;
}

Tournament::Tournament(Digraph graph) : graph_(std::move(graph))
{
    auto n = graph_.size();
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (graph_.has_arc(u, v) == graph_.has_arc(v, u))
                throw std::invalid_argument("not a tournament: pair (" + std::to_string(u) + ", " + std::to_string(v) + ") has " +
                    (graph_.has_arc(u, v) ? "both arcs" : "no arc"));
}

Tournament Tournament::from_rows(const std::vector<std::vector<int>> & rows)
{
    auto n = rows.size();
    Digraph d(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n)
            throw std::invalid_argument("row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) + " entries, expected " + std::to_string(n));
        for (std::size_t j = 0; j < n; ++j) {
            auto e = rows[i][j];
            if (e != 0 && e != 1)
                throw std::invalid_argument("entry (" + std::to_string(i) + ", " + std::to_string(j) + ") is not 0/1");
            if (i == j && e)
                throw std::invalid_argument("diagonal entry " + std::to_string(i) + " is set");
            if (e)
                d.add_arc(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
    }
    return Tournament(std::move(d));
}

void Tournament::flip(Vertex u, Vertex v)
{
    if (graph_.has_arc(u, v)) {
        graph_.remove_arc(u, v);
        graph_.add_arc(v, u);
    }
    else {
        graph_.remove_arc(v, u);
        graph_.add_arc(u, v);
    }
}

std::vector<std::vector<int>> Tournament::rows() const
{
    std::vector<std::vector<int>> r(size(), std::vector<int>(size(), 0));
    for (Vertex u = 0; u < size(); ++u)
        out(u).for_each([&](std::size_t v) { r[u][v] = 1; });
    return r;
}

Ordering::Ordering(std::vector<Vertex> sequence) : sequence_(std::move(sequence)), position_(sequence_.size(), sequence_.size())
{
    for (std::size_t i = 0; i < sequence_.size(); ++i) {
        auto v = sequence_[i];
        if (v >= sequence_.size())
            throw std::invalid_argument("ordering entry " + std::to_string(v) + " out of range");
        if (position_[v] != sequence_.size())
            throw std::invalid_argument("ordering repeats vertex " + std::to_string(v));
        position_[v] = i;
    }
}

Ordering Ordering::identity(std::size_t n)
{
    std::vector<Vertex> s(n);
    std::iota(s.begin(), s.end(), Vertex{0});
    return Ordering(std::move(s));
}

Ordering Ordering::reversed() const
{
    return Ordering(std::vector<Vertex>(sequence_.rbegin(), sequence_.rend()));
}

UndirectedGraph::UndirectedGraph(std::size_t n) : adj_(n, Bitset(n)) {}

void UndirectedGraph::add_edge(Vertex u, Vertex v)
{
    check_vertex(size(), u);
    check_vertex(size(), v);
    if (u == v)
        throw std::invalid_argument("loop on vertex " + std::to_string(u));
    adj_[u].set(v);
    adj_[v].set(u);
}

void UndirectedGraph::remove_edge(Vertex u, Vertex v)
{
    check_vertex(size(), u);
    check_vertex(size(), v);
    adj_[u].reset(v);
    adj_[v].reset(u);
}

std::size_t UndirectedGraph::edge_count() const noexcept
{
    std::size_t c = 0;
    for (auto & row : adj_)
        c += row.count();
    return c / 2;
}

UndirectedGraph backedge_graph(const Digraph & graph, const Ordering & ordering)
{
    if (ordering.size() != graph.size())
        throw std::invalid_argument("ordering has " + std::to_string(ordering.size()) + " vertices, graph has " + std::to_string(graph.size()));
    UndirectedGraph g(graph.size());
    for (Vertex v = 0; v < graph.size(); ++v)
        graph.out(v).for_each([&](std::size_t u) {
            if (ordering.before(static_cast<Vertex>(u), v))
                g.add_edge(static_cast<Vertex>(u), v);
        });
    return g;
}

std::vector<Vertex> maximum_clique(const UndirectedGraph & graph, const Bitset & within)
{
    CliqueSearch search(graph, 0, false);
    search.expand(within);
    return search.take_best();
}

std::vector<Vertex> maximum_clique(const UndirectedGraph & graph)
{
    Bitset all(graph.size());
    all.set_all();
    return maximum_clique(graph, all);
}

std::size_t clique_number(const UndirectedGraph & graph)
{
    if (graph.size() == 0)
        throw std::invalid_argument("clique number of an empty graph");
    return maximum_clique(graph).size();
}

std::optional<std::vector<Vertex>> has_clique(const UndirectedGraph & graph, std::size_t k, const Bitset & within)
{
    if (k == 0)
        return std::vector<Vertex>{};
    CliqueSearch search(graph, k - 1, true);
    search.expand(within);
    auto best = search.take_best();
    if (best.size() < k)
        return std::nullopt;
    best.resize(k);
    return best;
}

std::optional<std::vector<Vertex>> has_clique(const UndirectedGraph & graph, std::size_t k)
{
    Bitset all(graph.size());
    all.set_all();
    return has_clique(graph, k, all);
}

std::size_t ordering_clique_number(const Digraph & graph, const Ordering & ordering)
{
    if (graph.size() == 0)
        return 0;
    return clique_number(backedge_graph(graph, ordering));
}

bool is_transitive(const Tournament & t)
{
    // A tournament is acyclic iff its scores are pairwise distinct.
    std::vector<bool> seen(t.size(), false);
    for (Vertex v = 0; v < t.size(); ++v) {
        auto s = t.score(v);
        if (seen[s])
            return false;
        seen[s] = true;
    }
    return true;
}

bool is_acyclic(const Digraph & graph, const Bitset & within)
{
    std::vector<std::size_t> indegree(graph.size(), 0);
    std::vector<Vertex> ready;
    std::size_t remaining = 0;
    within.for_each([&](std::size_t v) {
        ++remaining;
        indegree[v] = (graph.in(static_cast<Vertex>(v)) & within).count();
        if (indegree[v] == 0)
            ready.push_back(static_cast<Vertex>(v));
    });
    while (! ready.empty()) {
        auto v = ready.back();
        ready.pop_back();
        --remaining;
        (graph.out(v) & within).for_each([&](std::size_t w) {
            if (--indegree[w] == 0)
                ready.push_back(static_cast<Vertex>(w));
        });
    }
    return remaining == 0;
}

bool is_acyclic(const Digraph & graph)
{
    Bitset all(graph.size());
    all.set_all();
    return is_acyclic(graph, all);
}

std::optional<std::vector<Vertex>> find_cycle(const Digraph & graph, const Bitset & within)
{
    enum : char { white, grey, black };
    std::vector<char> colour(graph.size(), white);
    std::vector<Vertex> parent(graph.size(), 0);

    for (auto root = within.find_first(); root != Bitset::npos; root = within.find_next(root)) {
        if (colour[root] != white)
            continue;
        // Iterative DFS; each frame holds the vertex and the remaining successors.
        std::vector<std::pair<Vertex, Bitset>> stack;
        colour[root] = grey;
        stack.emplace_back(static_cast<Vertex>(root), graph.out(static_cast<Vertex>(root)) & within);
        while (! stack.empty()) {
            auto & [u, succ] = stack.back();
            auto w = succ.find_first();
            if (w == Bitset::npos) {
                colour[u] = black;
                stack.pop_back();
                continue;
            }
            succ.reset(w);
            if (colour[w] == grey) {
                std::vector<Vertex> cycle;
                for (auto x = u; x != w; x = parent[x])
                    cycle.push_back(x);
                cycle.push_back(static_cast<Vertex>(w));
                std::reverse(cycle.begin(), cycle.end());
                return cycle;
            }
            if (colour[w] == white) {
                colour[w] = grey;
                parent[w] = u;
                auto wv = static_cast<Vertex>(w);
                stack.emplace_back(wv, graph.out(wv) & within);
            }
        }
    }
    return std::nullopt;
}

bool is_strong(const Tournament & t)
{
    if (t.size() <= 1)
        return true;
    return bfs(t, 0, true).size() == t.size() && bfs(t, 0, false).size() == t.size();
}

Ordering topological_order(const Tournament & t)
{
    if (! is_transitive(t))
        throw std::invalid_argument("tournament is not transitive");
    std::vector<Vertex> seq(t.size());
    for (Vertex v = 0; v < t.size(); ++v)
        seq[t.size() - 1 - t.score(v)] = v;
    return Ordering(std::move(seq));
}

Digraph reverse(const Digraph & d)
{
    Digraph r(d.size());
    for (Vertex u = 0; u < d.size(); ++u)
        d.out(u).for_each([&](std::size_t v) { r.add_arc(static_cast<Vertex>(v), u); });
    return r;
}

Tournament reverse(const Tournament & t)
{
    return Tournament(reverse(t.digraph()));
}

Digraph induced(const Digraph & d, std::span<const Vertex> vertices)
{
    std::vector<Vertex> sorted(vertices.begin(), vertices.end());
    for (auto v : sorted)
        check_vertex(d.size(), v);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("induced: repeated vertex");
    Digraph r(sorted.size());
    for (Vertex i = 0; i < sorted.size(); ++i)
        for (Vertex j = 0; j < sorted.size(); ++j)
            if (d.has_arc(sorted[i], sorted[j]))
                r.add_arc(i, j);
    return r;
}

Tournament induced(const Tournament & t, std::span<const Vertex> vertices)
{
    return Tournament(induced(t.digraph(), vertices));
}

Tournament relabel(const Tournament & t, std::span<const Vertex> mapping)
{
    if (mapping.size() != t.size())
        throw std::invalid_argument("relabel: mapping size mismatch");
    Ordering check(std::vector<Vertex>(mapping.begin(), mapping.end()));
    Digraph d(t.size());
    for (Vertex u = 0; u < t.size(); ++u)
        t.out(u).for_each([&](std::size_t v) { d.add_arc(mapping[u], mapping[v]); });
    return Tournament(std::move(d));
}

bool is_isomorphism(const Tournament & a, const Tournament & b, std::span<const Vertex> mapping)
{
    if (a.size() != b.size() || mapping.size() != a.size())
        return false;
    for (Vertex u = 0; u < a.size(); ++u)
        for (Vertex v = 0; v < a.size(); ++v)
            if (u != v && a.has_arc(u, v) != b.has_arc(mapping[u], mapping[v]))
                return false;
    return true;
}

std::optional<std::vector<Vertex>> contains_subtournament(const Tournament & host, const Tournament & pattern)
{
    auto k = pattern.size();
    auto n = host.size();
    if (k > n)
        return std::nullopt;

    // Degree pre-filter: a host vertex can only carry pattern vertex p if it
    // has at least as many out- and in-neighbours.
    std::vector<Bitset> allowed(k, Bitset(n));
    for (Vertex p = 0; p < k; ++p) {
        auto po = pattern.score(p), pi = k - 1 - po;
        for (Vertex h = 0; h < n; ++h)
            if (host.score(h) >= po && n - 1 - host.score(h) >= pi)
                allowed[p].set(h);
        if (allowed[p].none())
            return std::nullopt;
    }

    std::vector<Vertex> image(k);
    Bitset used(n);
    auto extend = [&](auto & self, std::size_t depth) -> bool {
        if (depth == k)
            return true;
        auto p = static_cast<Vertex>(depth);
        Bitset candidates = allowed[p] - used;
        for (Vertex q = 0; q < p; ++q)
            candidates &= pattern.has_arc(q, p) ? host.out(image[q]) : host.in(image[q]);
        for (auto h = candidates.find_first(); h != Bitset::npos; h = candidates.find_next(h)) {
            image[p] = static_cast<Vertex>(h);
            used.set(h);
            if (self(self, depth + 1))
                return true;
            used.reset(h);
        }
        return false;
    };
    if (! extend(extend, 0))
        return std::nullopt;
    return image;
}

} // namespace tclique
