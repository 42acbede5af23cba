#include "specrig/graph.hpp"

#include <algorithm>
#include <numeric>

#include "specrig/errors.hpp"

namespace specrig {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw parameter_error("vertex count must be non-negative");
    adj_.resize(static_cast<size_t>(n));
    edge_ids_.reserve(edges_.size() * 2);
    for (size_t i = 0; i < edges_.size(); ++i) {
        Edge& e = edges_[i];
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= n) throw parameter_error("edge endpoint out of range");
        if (e.u == e.v) throw parameter_error("self-loops are not allowed");
        if (!edge_ids_.emplace(pair_key(e.u, e.v), static_cast<int>(i)).second)
            throw parameter_error("duplicate edge");
        adj_[static_cast<size_t>(e.u)].push_back(e.v);
        adj_[static_cast<size_t>(e.v)].push_back(e.u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

Graph Graph::complete(int n) {
    if (n < 1) throw parameter_error("complete graph needs n >= 1");
    std::vector<Edge> es;
    es.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.push_back({u, v});
    return Graph(n, std::move(es));
}

Graph Graph::path(int n) {
    std::vector<Edge> es;
    for (int u = 0; u + 1 < n; ++u) es.push_back({u, u + 1});
    return Graph(n, std::move(es));
}

Graph Graph::cycle(int n) {
    if (n < 3) throw parameter_error("cycle needs n >= 3");
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u) es.push_back({u, (u + 1) % n});
    return Graph(n, std::move(es));
}

Graph Graph::petersen() {
    std::vector<Edge> es;
    for (int u = 0; u < 5; ++u) es.push_back({u, (u + 1) % 5});     // outer cycle
    for (int u = 0; u < 5; ++u) es.push_back({u, u + 5});           // spokes
    for (int u = 0; u < 5; ++u) es.push_back({5 + u, 5 + (u + 2) % 5}); // inner pentagram
    return Graph(10, std::move(es));
}

int Graph::min_degree() const {
    if (n_ == 0) throw parameter_error("min_degree on empty graph");
    int d = n_;
    for (int u = 0; u < n_; ++u) d = std::min(d, degree(u));
    return d;
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> ds(static_cast<size_t>(n_));
    for (int u = 0; u < n_; ++u) ds[static_cast<size_t>(u)] = degree(u);
    std::sort(ds.begin(), ds.end());
    return ds;
}

int Graph::edge_id(int u, int v) const {
    if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) return -1;
    if (u > v) std::swap(u, v);
    auto it = edge_ids_.find(pair_key(u, v));
    return it == edge_ids_.end() ? -1 : it->second;
}

std::vector<int> Graph::component_labels() const {
    std::vector<int> label(static_cast<size_t>(n_), -1);
    std::vector<int> stack;
    int next = 0;
    for (int s = 0; s < n_; ++s) {
        if (label[static_cast<size_t>(s)] >= 0) continue;
        label[static_cast<size_t>(s)] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : neighbors(u)) {
                if (label[static_cast<size_t>(v)] < 0) {
                    label[static_cast<size_t>(v)] = next;
                    stack.push_back(v);
                }
            }
        }
        ++next;
    }
    return label;
}

int Graph::component_count() const {
    auto labels = component_labels();
    return labels.empty() ? 0 : 1 + *std::max_element(labels.begin(), labels.end());
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    return component_count() == 1;
}

std::vector<double> Graph::adjacency_matrix() const {
    std::vector<double> a(static_cast<size_t>(n_) * n_, 0.0);
    for (const Edge& e : edges_) {
        a[static_cast<size_t>(e.u) * n_ + e.v] = 1.0;
        a[static_cast<size_t>(e.v) * n_ + e.u] = 1.0;
    }
    return a;
}

std::vector<double> Graph::laplacian_matrix() const {
    std::vector<double> l(static_cast<size_t>(n_) * n_, 0.0);
    for (const Edge& e : edges_) {
        l[static_cast<size_t>(e.u) * n_ + e.v] = -1.0;
        l[static_cast<size_t>(e.v) * n_ + e.u] = -1.0;
        l[static_cast<size_t>(e.u) * n_ + e.u] += 1.0;
        l[static_cast<size_t>(e.v) * n_ + e.v] += 1.0;
    }
    return l;
}

Graph Graph::with_edge_added(int u, int v) const {
    if (has_edge(u, v)) throw parameter_error("edge already present");
    std::vector<Edge> es = edges_;
    es.push_back({u, v});
    return Graph(n_, std::move(es));
}

Graph Graph::with_edge_removed(int edge_id) const {
    if (edge_id < 0 || edge_id >= edge_count()) throw parameter_error("edge index out of range");
    std::vector<Edge> es = edges_;
    es.erase(es.begin() + edge_id);
    return Graph(n_, std::move(es));
}

Graph Graph::without_vertex(int v) const {
    if (v < 0 || v >= n_) throw parameter_error("vertex out of range");
    std::vector<int> new_index(static_cast<size_t>(n_), -1);
    int next = 0;
    for (int u = 0; u < n_; ++u)
        if (u != v) new_index[static_cast<size_t>(u)] = next++;
    std::vector<Edge> es;
    for (const Edge& e : edges_)
        if (e.u != v && e.v != v)
            es.push_back({new_index[static_cast<size_t>(e.u)], new_index[static_cast<size_t>(e.v)]});
    return Graph(n_ - 1, std::move(es));
}

Graph Graph::without_vertices(int v, int w) const {
    if (v == w) throw parameter_error("vertices must be distinct");
    if (v < 0 || v >= n_ || w < 0 || w >= n_) throw parameter_error("vertex out of range");
    std::vector<int> new_index(static_cast<size_t>(n_), -1);
    int next = 0;
    for (int u = 0; u < n_; ++u)
        if (u != v && u != w) new_index[static_cast<size_t>(u)] = next++;
    std::vector<Edge> es;
    for (const Edge& e : edges_)
        if (e.u != v && e.v != v && e.u != w && e.v != w)
            es.push_back({new_index[static_cast<size_t>(e.u)], new_index[static_cast<size_t>(e.v)]});
    return Graph(n_ - 2, std::move(es));
}

Graph Graph::relabeled(const std::vector<int>& new_index) const {
    if (static_cast<int>(new_index.size()) != n_) throw parameter_error("relabeling has wrong size");
    std::vector<char> seen(static_cast<size_t>(n_), 0);
    for (int x : new_index) {
        if (x < 0 || x >= n_ || seen[static_cast<size_t>(x)]) throw parameter_error("not a permutation");
        seen[static_cast<size_t>(x)] = 1;
    }
    std::vector<Edge> es;
    es.reserve(edges_.size());
    for (const Edge& e : edges_)
        es.push_back({new_index[static_cast<size_t>(e.u)], new_index[static_cast<size_t>(e.v)]});
    return Graph(n_, std::move(es));
}

Graph join(const Graph& a, const Graph& b) {
    if (a.n() < 1 || b.n() < 1) throw parameter_error("join needs two nonempty graphs");
    Graph g = disjoint_union(a, b);
    std::vector<Edge> es = g.edges();
    for (int u = 0; u < a.n(); ++u)
        for (int v = 0; v < b.n(); ++v) es.push_back({u, a.n() + v});
    return Graph(a.n() + b.n(), std::move(es));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> es = a.edges();
    es.reserve(a.edges().size() + b.edges().size());
    for (const Edge& e : b.edges()) es.push_back({a.n() + e.u, a.n() + e.v});
    return Graph(a.n() + b.n(), std::move(es));
}

Graph complement(const Graph& g) {
    std::vector<Edge> es;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.has_edge(u, v)) es.push_back({u, v});
    return Graph(g.n(), std::move(es));
}

} // namespace specrig
