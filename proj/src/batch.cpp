#include "specrig/batch.hpp"

#include "specrig/parallel.hpp"
#include "specrig/spectral.hpp"

namespace specrig {

namespace {

template <class F>
std::vector<double> run_serial(long count, F&& fn) {
    std::vector<double> out(static_cast<size_t>(count), 0.0);
    for (long i = 0; i < count; ++i) out[static_cast<size_t>(i)] = fn(i);
    return out;
}

template <class F>
std::vector<double> run_parallel(long count, int threads, F&& fn) {
    std::vector<double> out(static_cast<size_t>(count), 0.0);
    parallel_for_indexed(count, threads, [&](long i) { out[static_cast<size_t>(i)] = fn(i); });
    return out;
}

} // namespace

std::vector<double> batch_lambda1_serial(const std::vector<Graph>& graphs, double tol) {
    return run_serial(static_cast<long>(graphs.size()),
                      [&](long i) { return spectral_radius(graphs[static_cast<size_t>(i)], tol).value; });
}

std::vector<double> batch_lambda1(const std::vector<Graph>& graphs, double tol, int threads) {
    return run_parallel(static_cast<long>(graphs.size()), threads,
                        [&](long i) { return spectral_radius(graphs[static_cast<size_t>(i)], tol).value; });
}

std::vector<double> batch_mu2_serial(const std::vector<Graph>& graphs, double tol) {
    return run_serial(static_cast<long>(graphs.size()), [&](long i) {
        return algebraic_connectivity(graphs[static_cast<size_t>(i)], tol).mu2;
    });
}

std::vector<double> batch_mu2(const std::vector<Graph>& graphs, double tol, int threads) {
    return run_parallel(static_cast<long>(graphs.size()), threads, [&](long i) {
        return algebraic_connectivity(graphs[static_cast<size_t>(i)], tol).mu2;
    });
}

std::vector<double> batch_mu2_vertex_deletions_serial(const Graph& g, double tol) {
    return run_serial(g.n(), [&](long v) {
        return algebraic_connectivity(g.without_vertex(static_cast<int>(v)), tol).mu2;
    });
}

std::vector<double> batch_mu2_vertex_deletions(const Graph& g, double tol, int threads) {
    return run_parallel(g.n(), threads, [&](long v) {
        return algebraic_connectivity(g.without_vertex(static_cast<int>(v)), tol).mu2;
    });
}

std::vector<std::pair<int, int>> vertex_pairs(int n) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int v = 0; v < n; ++v)
        for (int w = v + 1; w < n; ++w) pairs.emplace_back(v, w);
    return pairs;
}

std::vector<double> batch_mu2_pair_deletions_serial(const Graph& g, double tol) {
    auto pairs = vertex_pairs(g.n());
    return run_serial(static_cast<long>(pairs.size()), [&](long i) {
        auto [v, w] = pairs[static_cast<size_t>(i)];
        return algebraic_connectivity(g.without_vertices(v, w), tol).mu2;
    });
}

std::vector<double> batch_mu2_pair_deletions(const Graph& g, double tol, int threads) {
    auto pairs = vertex_pairs(g.n());
    return run_parallel(static_cast<long>(pairs.size()), threads, [&](long i) {
        auto [v, w] = pairs[static_cast<size_t>(i)];
        return algebraic_connectivity(g.without_vertices(v, w), tol).mu2;
    });
}

} // namespace specrig
