#include "specrig/extremal.hpp"

#include <limits>
#include <set>

#include "specrig/errors.hpp"
#include "specrig/isomorphism.hpp"

namespace specrig {

ExtremalParams::ExtremalParams(int n_, int delta_, int k_)
    : n(n_), delta(delta_), k(k_), ell((delta_ - 4 * k_) / 2) {
    if (k < 1) throw parameter_error("k must be at least 1");
    if (delta < 4 * k) throw parameter_error("delta must be at least 4k");
    if (n < 3 * delta) throw parameter_error("n must be at least 3*delta");
}

std::vector<std::pair<int, int>> cross_pairs(const ExtremalParams& p) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<size_t>(p.delta) * (p.n - 1 - p.delta));
    for (int u = 1; u <= p.delta; ++u)
        for (int v = p.delta + 1; v < p.n; ++v) pairs.emplace_back(u, v);
    return pairs;
}

namespace {

Graph base_join(const ExtremalParams& p) {
    return join(Graph::complete(1),
                disjoint_union(Graph::complete(p.delta), Graph::complete(p.n - 1 - p.delta)));
}

long binomial(long m, int r, long cap) {
    if (r < 0 || r > m) return 0;
    long c = 1;
    for (int i = 1; i <= r; ++i) {
        c = c * (m - r + i) / i;
        if (c > cap) return cap + 1;
    }
    return c;
}

// index -> r-subset of {0..m-1} in lexicographic order
std::vector<int> unrank_combination(long m, int r, long index) {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(r));
    int x = 0;
    for (int i = 0; i < r; ++i) {
        for (;; ++x) {
            long block = binomial(m - x - 1, r - i - 1, std::numeric_limits<long>::max() / 2);
            if (index < block) break;
            index -= block;
        }
        out.push_back(x++);
    }
    return out;
}

} // namespace

Graph build_extremal(const ExtremalParams& p) {
    Graph g = base_join(p);
    std::vector<Edge> es = g.edges();
    for (int i = 0; i < p.k - 1; ++i) es.push_back({1, p.delta + 1 + i});
    return Graph(p.n, std::move(es));
}

long class_size(const ExtremalParams& p, long budget) {
    long m = static_cast<long>(p.delta) * (p.n - 1 - p.delta);
    if (p.k - 1 > m) throw parameter_error("k-1 exceeds available cross pairs");
    long c = binomial(m, p.k - 1, budget);
    if (c > budget) throw budget_error("labeled class size exceeds enumeration budget");
    return c;
}

Graph class_member(const ExtremalParams& p, long index) {
    auto pairs = cross_pairs(p);
    long total = class_size(p, std::numeric_limits<long>::max() / 4);
    if (index < 0 || index >= total) throw parameter_error("class index out of range");
    Graph g = base_join(p);
    std::vector<Edge> es = g.edges();
    for (int pos : unrank_combination(static_cast<long>(pairs.size()), p.k - 1, index))
        es.push_back({pairs[static_cast<size_t>(pos)].first, pairs[static_cast<size_t>(pos)].second});
    return Graph(p.n, std::move(es));
}

std::vector<Graph> enumerate_class(const ExtremalParams& p, bool dedup, long budget) {
    long total = class_size(p, budget);
    std::vector<Graph> out;
    out.reserve(static_cast<size_t>(total));
    std::set<CanonicalForm> seen;
    for (long i = 0; i < total; ++i) {
        Graph g = class_member(p, i);
        if (dedup && !seen.insert(canonical_form(g)).second) continue;
        out.push_back(std::move(g));
    }
    return out;
}

} // namespace specrig
