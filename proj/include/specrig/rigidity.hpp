#ifndef SPECRIG_RIGIDITY_HPP
#define SPECRIG_RIGIDITY_HPP

#include <cstdint>
#include <vector>

#include "specrig/graph.hpp"

namespace specrig {

// Subset of a host graph's edge indices. The host must outlive the subset.
class EdgeSubset {
public:
    explicit EdgeSubset(const Graph& host)
        : host_(&host), bits_((static_cast<size_t>(host.edge_count()) + 63) / 64, 0), count_(0) {}

    static EdgeSubset all(const Graph& host);
    static EdgeSubset of(const Graph& host, const std::vector<int>& ids);

    const Graph& host() const { return *host_; }
    int size() const { return count_; }
    bool empty() const { return count_ == 0; }

    bool contains(int id) const {
        return (bits_[static_cast<size_t>(id) / 64] >> (id % 64)) & 1;
    }
    void add(int id);
    void remove(int id);

    std::vector<int> indices() const; // ascending

private:
    const Graph* host_;
    std::vector<std::uint64_t> bits_;
    int count_;
};

// State of the (2,3) pebble game: accepted edges are oriented, every vertex
// keeps pebbles(v) + out_degree(v) == 2, and an edge is accepted exactly
// when 4 pebbles can be gathered on its endpoints.
class PebbleGame {
public:
    explicit PebbleGame(int n);

    bool try_insert(int u, int v); // accept and orient, or reject
    bool can_insert(int u, int v); // query; moves pebbles but inserts nothing

    // Vertices reachable from {u,v} along the orientation. Together with a
    // failed can_insert this bounds the fundamental circuit of (u,v).
    std::vector<int> reach_set(int u, int v) const;

    int pebbles(int v) const { return pebbles_[static_cast<size_t>(v)]; }
    int out_degree(int v) const { return static_cast<int>(out_[static_cast<size_t>(v)].size()); }
    int accepted_count() const { return accepted_; }
    bool invariant_ok() const;

private:
    int gather(int u, int v);                 // pebble count on {u,v} after maximal gathering
    bool pull_pebble(int to, int avoid);      // move one pebble to `to`, not taking from avoid

    int n_;
    std::vector<std::vector<int>> out_;
    std::vector<int> pebbles_;
    int accepted_;
};

// F is independent in the rigid matroid: every vertex set spans at most
// 2|X|-3 edges of F. Decided by incremental pebble-game insertion.
bool laman_independent(const EdgeSubset& f);

// Rank of F in the rigid matroid (size of a maximum independent subset),
// by pebble-game insertion in ascending edge order.
int rigid_rank(const EdgeSubset& f);

// The partition-minimum rank formula evaluated literally:
// min over partitions of F into classes of sum(2|X_i| - 3) with X_i the
// vertex support of each class. Budget guard: |F| <= 12 or host n <= 7.
int rigid_rank_bruteforce(const EdgeSubset& f);

// r_R(E) == 2n-3. Requires n >= 2.
bool is_rigid(const Graph& g);

} // namespace specrig

#endif
