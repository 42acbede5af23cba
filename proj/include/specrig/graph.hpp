#ifndef SPECRIG_GRAPH_HPP
#define SPECRIG_GRAPH_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace specrig {

// Unordered vertex pair, stored with u < v.
struct Edge {
    int u;
    int v;
    bool operator==(const Edge& o) const { return u == o.u && v == o.v; }
};

// Immutable simple undirected graph on vertices 0..n-1 with an indexed edge
// list. Edge indices are stable for the lifetime of the value; all subset
// and rank machinery works on these indices. Values are safe to share
// across threads.
class Graph {
public:
    // Validates: endpoints in range, no self-loops, no duplicate edges.
    // Pairs are canonicalized to u < v; the sequence order is kept.
    Graph(int n, std::vector<Edge> edges);

    static Graph empty(int n) { return Graph(n, {}); }
    static Graph complete(int n);
    static Graph path(int n);
    static Graph cycle(int n);
    static Graph petersen();

    int n() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    Edge edge(int id) const { return edges_[static_cast<size_t>(id)]; }

    int degree(int u) const { return static_cast<int>(adj_[static_cast<size_t>(u)].size()); }
    int min_degree() const; // returns 0 for edgeless graphs; n must be >= 1
    std::vector<int> degree_sequence() const; // sorted ascending
    const std::vector<int>& neighbors(int u) const { return adj_[static_cast<size_t>(u)]; }

    bool has_edge(int u, int v) const { return edge_id(u, v) >= 0; }
    int edge_id(int u, int v) const; // -1 if absent

    bool is_connected() const;
    int component_count() const; // isolated vertices count as components
    std::vector<int> component_labels() const;

    std::vector<double> adjacency_matrix() const; // row-major n*n
    std::vector<double> laplacian_matrix() const; // D - A, row-major

    // Derived graphs. Each returns a fresh value; the receiver is unchanged.
    Graph with_edge_added(int u, int v) const;   // new edge gets index e(G)
    Graph with_edge_removed(int edge_id) const;  // later edge indices shift down by one
    Graph without_vertex(int v) const;           // remaining vertices renumbered, order kept
    Graph without_vertices(int v, int w) const;
    Graph relabeled(const std::vector<int>& new_index) const; // vertex u becomes new_index[u]

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_; // sorted neighbor lists
    std::unordered_map<std::int64_t, int> edge_ids_;

    std::int64_t pair_key(int u, int v) const {
        return static_cast<std::int64_t>(u) * n_ + v;
    }
};

Graph join(const Graph& a, const Graph& b);           // a's vertices keep indices 0..n_a-1
Graph disjoint_union(const Graph& a, const Graph& b); // same vertex layout as join
Graph complement(const Graph& g);

} // namespace specrig

#endif
