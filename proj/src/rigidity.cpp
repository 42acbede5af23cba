#include "specrig/rigidity.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <unordered_map>

#include "specrig/errors.hpp"

namespace specrig {

EdgeSubset EdgeSubset::all(const Graph& host) {
    EdgeSubset s(host);
    for (int i = 0; i < host.edge_count(); ++i) s.add(i);
    return s;
}

EdgeSubset EdgeSubset::of(const Graph& host, const std::vector<int>& ids) {
    EdgeSubset s(host);
    for (int id : ids) s.add(id);
    return s;
}

void EdgeSubset::add(int id) {
    if (id < 0 || id >= host_->edge_count()) throw parameter_error("edge index out of range");
    std::uint64_t& w = bits_[static_cast<size_t>(id) / 64];
    std::uint64_t m = std::uint64_t{1} << (id % 64);
    if (!(w & m)) {
        w |= m;
        ++count_;
    }
}

void EdgeSubset::remove(int id) {
    if (id < 0 || id >= host_->edge_count()) throw parameter_error("edge index out of range");
    std::uint64_t& w = bits_[static_cast<size_t>(id) / 64];
    std::uint64_t m = std::uint64_t{1} << (id % 64);
    if (w & m) {
        w &= ~m;
        --count_;
    }
}

std::vector<int> EdgeSubset::indices() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(count_));
    for (size_t w = 0; w < bits_.size(); ++w) {
        std::uint64_t x = bits_[w];
        while (x) {
            int b = std::countr_zero(x);
            out.push_back(static_cast<int>(w * 64) + b);
            x &= x - 1;
        }
    }
    return out;
}

PebbleGame::PebbleGame(int n) : n_(n), out_(static_cast<size_t>(n)), pebbles_(static_cast<size_t>(n), 2), accepted_(0) {
    if (n < 0) throw parameter_error("vertex count must be non-negative");
}

bool PebbleGame::pull_pebble(int to, int avoid) {
    // DFS along the orientation for a vertex with a spare pebble; reversing
    // the path carries one pebble back to `to`.
    std::vector<int> parent(static_cast<size_t>(n_), -2);
    std::vector<int> stack{to};
    parent[static_cast<size_t>(to)] = -1;
    int found = -1;
    while (!stack.empty() && found < 0) {
        int x = stack.back();
        stack.pop_back();
        for (int y : out_[static_cast<size_t>(x)]) {
            if (parent[static_cast<size_t>(y)] != -2) continue;
            parent[static_cast<size_t>(y)] = x;
            if (y != avoid && pebbles_[static_cast<size_t>(y)] > 0) {
                found = y;
                break;
            }
            stack.push_back(y);
        }
    }
    if (found < 0) return false;
    --pebbles_[static_cast<size_t>(found)];
    ++pebbles_[static_cast<size_t>(to)];
    for (int x = found; x != to;) {
        int p = parent[static_cast<size_t>(x)];
        auto& po = out_[static_cast<size_t>(p)];
        po.erase(std::find(po.begin(), po.end(), x));
        out_[static_cast<size_t>(x)].push_back(p);
        x = p;
    }
    return true;
}

int PebbleGame::gather(int u, int v) {
    if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_)
        throw parameter_error("pebble game needs two distinct vertices in range");
    for (;;) {
        int have = pebbles_[static_cast<size_t>(u)] + pebbles_[static_cast<size_t>(v)];
        if (have >= 4) return have;
        if (pebbles_[static_cast<size_t>(u)] < 2 && pull_pebble(u, v)) continue;
        if (pebbles_[static_cast<size_t>(v)] < 2 && pull_pebble(v, u)) continue;
        return have;
    }
}

bool PebbleGame::can_insert(int u, int v) { return gather(u, v) >= 4; }

bool PebbleGame::try_insert(int u, int v) {
    if (gather(u, v) < 4) return false;
    --pebbles_[static_cast<size_t>(u)];
    out_[static_cast<size_t>(u)].push_back(v);
    ++accepted_;
    return true;
}

std::vector<int> PebbleGame::reach_set(int u, int v) const {
    std::vector<char> seen(static_cast<size_t>(n_), 0);
    std::vector<int> stack{u, v};
    seen[static_cast<size_t>(u)] = seen[static_cast<size_t>(v)] = 1;
    std::vector<int> out{u, v};
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : out_[static_cast<size_t>(x)]) {
            if (!seen[static_cast<size_t>(y)]) {
                seen[static_cast<size_t>(y)] = 1;
                out.push_back(y);
                stack.push_back(y);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool PebbleGame::invariant_ok() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) {
        if (pebbles_[static_cast<size_t>(v)] < 0 || pebbles_[static_cast<size_t>(v)] > 2) return false;
        if (pebbles_[static_cast<size_t>(v)] + out_degree(v) != 2) return false;
        total += pebbles_[static_cast<size_t>(v)];
    }
    return n_ < 2 || total >= 3;
}

bool laman_independent(const EdgeSubset& f) {
    PebbleGame game(f.host().n());
    for (int id : f.indices()) {
        Edge e = f.host().edge(id);
        if (!game.try_insert(e.u, e.v)) return false;
    }
    return true;
}

int rigid_rank(const EdgeSubset& f) {
    PebbleGame game(f.host().n());
    for (int id : f.indices()) {
        Edge e = f.host().edge(id);
        game.try_insert(e.u, e.v);
    }
    return game.accepted_count();
}

namespace {

// Partition DP over edge subsets: min over partitions of F of
// sum(2*|support(class)|-3). Local vertex ids keep masks small.
int rank_by_partition_dp(const Graph& g, const std::vector<int>& ids) {
    const int m = static_cast<int>(ids.size());
    std::vector<int> local(static_cast<size_t>(g.n()), -1);
    int nlocal = 0;
    std::vector<std::uint64_t> endpoint_mask(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        Edge e = g.edge(ids[static_cast<size_t>(i)]);
        for (int x : {e.u, e.v})
            if (local[static_cast<size_t>(x)] < 0) local[static_cast<size_t>(x)] = nlocal++;
        endpoint_mask[static_cast<size_t>(i)] = (std::uint64_t{1} << local[static_cast<size_t>(e.u)]) |
                                                (std::uint64_t{1} << local[static_cast<size_t>(e.v)]);
    }
    const std::uint32_t full = m == 32 ? 0xffffffffu : ((std::uint32_t{1} << m) - 1);
    std::vector<std::uint64_t> support(static_cast<size_t>(full) + 1, 0);
    std::vector<int> cost(static_cast<size_t>(full) + 1, 0);
    for (std::uint32_t s = 1; s <= full; ++s) {
        int low = std::countr_zero(s);
        support[s] = support[s & (s - 1)] | endpoint_mask[static_cast<size_t>(low)];
        cost[s] = 2 * std::popcount(support[s]) - 3;
    }
    std::vector<int> dp(static_cast<size_t>(full) + 1, 0);
    for (std::uint32_t s = 1; s <= full; ++s) {
        std::uint32_t pivot = std::uint32_t{1} << std::countr_zero(s);
        int best = INT_MAX;
        // submasks of s containing the pivot edge
        for (std::uint32_t sub = s;; sub = (sub - 1) & s) {
            if (sub & pivot) best = std::min(best, cost[sub] + dp[s & ~sub]);
            if (sub == 0) break;
        }
        dp[s] = best;
    }
    return dp[full];
}

// Exact cover of F by classes that are induced F-edge sets of vertex
// subsets, memoized over the remaining edge mask. Used for hosts with
// n <= 7, where |F| can exceed the partition-DP budget.
struct InducedCoverSolver {
    std::vector<std::pair<std::uint32_t, int>> classes; // (edge mask, cost)
    std::vector<std::vector<int>> by_pivot;             // class ids containing edge i
    std::unordered_map<std::uint32_t, int> memo;

    int solve(std::uint32_t rem) {
        if (rem == 0) return 0;
        auto it = memo.find(rem);
        if (it != memo.end()) return it->second;
        int pivot = std::countr_zero(rem);
        int best = INT_MAX;
        for (int ci : by_pivot[static_cast<size_t>(pivot)]) {
            auto [mask, cost] = classes[static_cast<size_t>(ci)];
            if (mask & ~rem) continue;
            int sub = solve(rem & ~mask);
            if (sub != INT_MAX) best = std::min(best, cost + sub);
        }
        memo.emplace(rem, best);
        return best;
    }
};

int rank_by_induced_cover(const Graph& g, const std::vector<int>& ids) {
    const int n = g.n();
    const int m = static_cast<int>(ids.size());
    InducedCoverSolver solver;
    std::unordered_map<std::uint32_t, int> best_cost; // per edge mask
    for (std::uint32_t vs = 0; vs < (std::uint32_t{1} << n); ++vs) {
        if (std::popcount(vs) < 2) continue;
        std::uint32_t mask = 0;
        std::uint32_t supp = 0;
        for (int i = 0; i < m; ++i) {
            Edge e = g.edge(ids[static_cast<size_t>(i)]);
            if ((vs >> e.u & 1) && (vs >> e.v & 1)) {
                mask |= std::uint32_t{1} << i;
                supp |= (std::uint32_t{1} << e.u) | (std::uint32_t{1} << e.v);
            }
        }
        if (mask == 0) continue;
        int cost = 2 * std::popcount(supp) - 3;
        auto it = best_cost.find(mask);
        if (it == best_cost.end() || cost < it->second) best_cost[mask] = cost;
    }
    solver.by_pivot.resize(static_cast<size_t>(m));
    for (auto& [mask, cost] : best_cost) {
        int ci = static_cast<int>(solver.classes.size());
        solver.classes.emplace_back(mask, cost);
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1) solver.by_pivot[static_cast<size_t>(i)].push_back(ci);
    }
    return solver.solve(m == 32 ? 0xffffffffu : ((std::uint32_t{1} << m) - 1));
}

} // namespace

int rigid_rank_bruteforce(const EdgeSubset& f) {
    if (f.empty()) return 0;
    std::vector<int> ids = f.indices();
    if (f.host().n() <= 7 && ids.size() <= 32) return rank_by_induced_cover(f.host(), ids);
    if (ids.size() <= 12) return rank_by_partition_dp(f.host(), ids);
    throw budget_error("rigid_rank_bruteforce needs |F| <= 12 or host n <= 7");
}

bool is_rigid(const Graph& g) {
    if (g.n() < 2) throw parameter_error("is_rigid needs n >= 2");
    return rigid_rank(EdgeSubset::all(g)) == 2 * g.n() - 3;
}

} // namespace specrig
