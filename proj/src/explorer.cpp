#include "reconf/explorer.hpp"

#include <algorithm>
#include <atomic>
#include <cstring>
#include <limits>
#include <thread>

namespace reconf {

bool is_proper(const Graph& g, const Colouring& c)
{
    if (c.size() != g.size()) {
        return false;
    }
    for (Vertex v = 0; v < g.size(); ++v) {
        if (c[v] < 0 || c[v] >= c.palette) {
            return false;
        }
    }
    for (auto [u, v] : g.edges()) {
        if (c[u] == c[v]) {
            return false;
        }
    }
    return true;
}

namespace {

void check_palette(int k)
{
    if (k < 0) {
        throw PreconditionError("palette size must be non-negative");
    }
    if (k > 255) {
        throw PreconditionError("palette sizes above 255 are not supported");
    }
}

// Backtracking in vertex-id order with ascending colours yields lexicographic order.
template <class F>
bool enumerate_rec(const Graph& g, int k, std::vector<int>& assignment, Vertex v, F& f)
{
    if (v == g.size()) {
        return f(assignment);
    }
    for (int c = 0; c < k; ++c) {
        bool clash = false;
        const VertexSet& nb = g.neighbours(v);
        for (Vertex u = nb.first(); u != -1 && u < v; u = nb.next(u)) {
            if (assignment[u] == c) {
                clash = true;
                break;
            }
        }
        if (clash) {
            continue;
        }
        assignment[v] = c;
        if (!enumerate_rec(g, k, assignment, v + 1, f)) {
            return false;
        }
    }
    assignment[v] = -1;
    return true;
}

} // namespace

void for_each_colouring(const Graph& g, int k, const std::function<bool(const std::vector<int>&)>& f)
{
    check_palette(k);
    std::vector<int> assignment(g.size(), -1);
    enumerate_rec(g, k, assignment, 0, f);
}

std::size_t count_colourings(const Graph& g, int k, std::size_t cap)
{
    std::size_t count = 0;
    bool over = false;
    for_each_colouring(g, k, [&](const std::vector<int>&) {
        if (++count > cap) {
            over = true;
            return false;
        }
        return true;
    });
    if (over) {
        throw CapacityError("more than " + std::to_string(cap) + " proper " + std::to_string(k) + "-colourings");
    }
    return count;
}

std::vector<Colouring> enumerate_colourings(const Graph& g, int k, std::size_t cap)
{
    std::vector<Colouring> out;
    bool over = false;
    for_each_colouring(g, k, [&](const std::vector<int>& a) {
        if (out.size() >= cap) {
            over = true;
            return false;
        }
        out.push_back(Colouring{a, k});
        return true;
    });
    if (over) {
        throw CapacityError("more than " + std::to_string(cap) + " proper " + std::to_string(k) + "-colourings");
    }
    return out;
}

// ---------------------------------------------------------------------------

ReconfigGraph::ReconfigGraph(const Graph& g, int k, std::size_t cap) : n_(g.size()), k_(k)
{
    check_palette(k);
    if (cap > std::numeric_limits<std::uint32_t>::max()) {
        cap = std::numeric_limits<std::uint32_t>::max();
    }
    bool over = false;
    for_each_colouring(g, k, [&](const std::vector<int>& a) {
        if (++count_ > cap) {
            over = true;
            return false;
        }
        for (int c : a) {
            assignments_.push_back(static_cast<std::uint8_t>(c));
        }
        return true;
    });
    if (over) {
        throw CapacityError("R_" + std::to_string(k) + " has more than " + std::to_string(cap) + " nodes");
    }

    const std::size_t nodes = count_;
    offsets_.assign(nodes + 1, 0);
    std::vector<std::uint8_t> probe(n_);
    std::vector<std::uint32_t> row;
    for (std::size_t i = 0; i < nodes; ++i) {
        const auto base = assignment(i);
        std::copy(base.begin(), base.end(), probe.begin());
        row.clear();
        for (Vertex v = 0; v < n_; ++v) {
            std::uint64_t blocked = 0;
            g.neighbours(v).for_each([&](Vertex u) { blocked |= std::uint64_t{1} << (base[u] & 63); });
            for (int c = 0; c < k; ++c) {
                if (c == base[v]) {
                    continue;
                }
                bool clash = false;
                if (k <= 64) {
                    clash = (blocked >> c) & 1u;
                } else {
                    g.neighbours(v).for_each([&](Vertex u) { clash = clash || base[u] == c; });
                }
                if (clash) {
                    continue;
                }
                probe[v] = static_cast<std::uint8_t>(c);
                row.push_back(static_cast<std::uint32_t>(*find_raw(probe.data())));
            }
            probe[v] = base[v];
        }
        std::sort(row.begin(), row.end());
        targets_.insert(targets_.end(), row.begin(), row.end());
        offsets_[i + 1] = targets_.size();
    }

    component_.assign(nodes, std::numeric_limits<std::uint32_t>::max());
    std::vector<std::uint32_t> queue;
    for (std::size_t s = 0; s < nodes; ++s) {
        if (component_[s] != std::numeric_limits<std::uint32_t>::max()) {
            continue;
        }
        const auto id = static_cast<std::uint32_t>(component_sizes_.size());
        queue.assign(1, static_cast<std::uint32_t>(s));
        component_[s] = id;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for (std::uint32_t t : neighbours(queue[head])) {
                if (component_[t] == std::numeric_limits<std::uint32_t>::max()) {
                    component_[t] = id;
                    queue.push_back(t);
                }
            }
        }
        component_sizes_.push_back(queue.size());
    }
}

Colouring ReconfigGraph::colouring(std::size_t node) const
{
    const auto a = assignment(node);
    return Colouring{{a.begin(), a.end()}, k_};
}

std::optional<std::size_t> ReconfigGraph::index_of(const Colouring& c) const
{
    if (c.size() != n_) {
        return std::nullopt;
    }
    std::vector<std::uint8_t> key(n_);
    for (int i = 0; i < n_; ++i) {
        if (c[i] < 0 || c[i] >= k_) {
            return std::nullopt;
        }
        key[i] = static_cast<std::uint8_t>(c[i]);
    }
    return find_raw(key.data());
}

std::optional<std::size_t> ReconfigGraph::find_raw(const std::uint8_t* key) const
{
    std::size_t lo = 0;
    std::size_t hi = node_count();
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        const int cmp = n_ == 0 ? 0 : std::memcmp(assignments_.data() + mid * n_, key, n_);
        if (cmp == 0) {
            return mid;
        }
        if (cmp < 0) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    return std::nullopt;
}

std::vector<long> ReconfigGraph::bfs_from(std::size_t source) const
{
    std::vector<long> dist(node_count(), -1);
    std::vector<std::uint32_t> queue{static_cast<std::uint32_t>(source)};
    dist[source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::uint32_t u = queue[head];
        for (std::uint32_t t : neighbours(u)) {
            if (dist[t] == -1) {
                dist[t] = dist[u] + 1;
                queue.push_back(t);
            }
        }
    }
    return dist;
}

long ReconfigGraph::eccentricity(std::size_t source) const
{
    const auto dist = bfs_from(source);
    return *std::max_element(dist.begin(), dist.end());
}

ReconfigGraph build_reconfiguration_graph(const Graph& g, int k, std::size_t cap) { return ReconfigGraph(g, k, cap); }

ExplorationSummary summarize(const ReconfigGraph& r, std::size_t diameter_cap, int threads)
{
    ExplorationSummary s;
    s.colouring_count = r.node_count();
    s.component_count = r.component_count();
    s.component_sizes = r.component_sizes();
    for (std::size_t i = 0; i < r.node_count(); ++i) {
        if (r.degree(i) == 0) {
            s.frozen_indices.push_back(i);
        }
    }

    std::vector<std::vector<std::uint32_t>> members(r.component_count());
    for (std::size_t i = 0; i < r.node_count(); ++i) {
        members[r.component_id(i)].push_back(static_cast<std::uint32_t>(i));
    }
    s.component_diameters.resize(r.component_count());
    threads = std::max(1, threads);
    for (std::size_t c = 0; c < members.size(); ++c) {
        if (members[c].size() > diameter_cap) {
            continue;
        }
        // Sources are shared out dynamically; the maximum does not depend on the split.
        std::atomic<std::size_t> next{0};
        std::vector<long> best(threads, 0);
        auto work = [&](int worker) {
            for (std::size_t i = next++; i < members[c].size(); i = next++) {
                best[worker] = std::max(best[worker], r.eccentricity(members[c][i]));
            }
        };
        if (threads == 1) {
            work(0);
        } else {
            std::vector<std::jthread> pool;
            for (int t = 0; t < threads; ++t) {
                pool.emplace_back(work, t);
            }
        }
        s.component_diameters[c] = *std::max_element(best.begin(), best.end());
    }
    if (s.component_count == 1) {
        s.diameter = s.component_diameters[0];
    }
    return s;
}

// ---------------------------------------------------------------------------

bool is_frozen(const Graph& g, const Colouring& c)
{
    if (!is_proper(g, c)) {
        throw PreconditionError("is_frozen needs a proper colouring");
    }
    if (c.palette > 64) {
        return false;
    }
    const std::uint64_t full = c.palette == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << c.palette) - 1;
    for (Vertex v = 0; v < g.size(); ++v) {
        std::uint64_t seen = std::uint64_t{1} << c[v];
        g.neighbours(v).for_each([&](Vertex u) { seen |= std::uint64_t{1} << c[u]; });
        if (seen != full) {
            return false;
        }
    }
    return true;
}

namespace {

class FrozenSearch {
public:
    FrozenSearch(const Graph& g, int k, std::chrono::milliseconds budget, std::size_t max_results)
        : g_(g),
          k_(k),
          max_results_(max_results),
          deadline_(std::chrono::steady_clock::now() + budget),
          colour_(g.size(), -1),
          counts_(static_cast<std::size_t>(g.size()) * k, 0),
          distinct_(g.size(), 0),
          open_(g.size(), 0)
    {
        for (Vertex v = 0; v < g.size(); ++v) {
            open_[v] = g.degree(v) + 1;
        }
    }

    FrozenSearchResult run()
    {
        bool feasible = true;
        for (Vertex v = 0; v < g_.size(); ++v) {
            feasible = feasible && open_[v] >= k_;
        }
        if (feasible) {
            extend(0);
        }
        result_.complete = !stopped_;
        return std::move(result_);
    }

private:
    bool covers(Vertex u) const { return distinct_[u] + open_[u] >= k_; }

    void place(Vertex v, int c)
    {
        colour_[v] = c;
        touch(v, c, +1);
        g_.neighbours(v).for_each([&](Vertex u) { touch(u, c, +1); });
    }

    void unplace(Vertex v, int c)
    {
        touch(v, c, -1);
        g_.neighbours(v).for_each([&](Vertex u) { touch(u, c, -1); });
        colour_[v] = -1;
    }

    void touch(Vertex u, int c, int delta)
    {
        int& count = counts_[static_cast<std::size_t>(u) * k_ + c];
        if (delta > 0) {
            distinct_[u] += count == 0;
            ++count;
            --open_[u];
        } else {
            --count;
            distinct_[u] -= count == 0;
            ++open_[u];
        }
    }

    void extend(Vertex v)
    {
        if (stopped_) {
            return;
        }
        if ((++nodes_ & 0xfff) == 0 && std::chrono::steady_clock::now() > deadline_) {
            stopped_ = true;
            return;
        }
        if (v == g_.size()) {
            result_.colourings.push_back(Colouring{colour_, k_});
            if (max_results_ != 0 && result_.colourings.size() >= max_results_) {
                stopped_ = true;
            }
            return;
        }
        for (int c = 0; c < k_ && !stopped_; ++c) {
            bool clash = false;
            g_.neighbours(v).for_each([&](Vertex u) { clash = clash || colour_[u] == c; });
            if (clash) {
                continue;
            }
            place(v, c);
            bool ok = covers(v);
            g_.neighbours(v).for_each([&](Vertex u) { ok = ok && covers(u); });
            if (ok) {
                extend(v + 1);
            }
            unplace(v, c);
        }
    }

    const Graph& g_;
    int k_;
    std::size_t max_results_;
    std::chrono::steady_clock::time_point deadline_;
    std::vector<int> colour_;
    std::vector<int> counts_;
    std::vector<int> distinct_;
    std::vector<int> open_;
    std::size_t nodes_ = 0;
    bool stopped_ = false;
    FrozenSearchResult result_;
};

} // namespace

FrozenSearchResult find_frozen_colourings(const Graph& g, int k, std::chrono::milliseconds budget,
                                          std::size_t max_results)
{
    check_palette(k);
    if (g.size() == 0) {
        // The empty colouring is vacuously frozen.
        return FrozenSearchResult{{Colouring{{}, k}}, true};
    }
    return FrozenSearch(g, k, budget, max_results).run();
}

} // namespace reconf
