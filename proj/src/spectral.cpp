#include "specrig/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "specrig/eig.hpp"
#include "specrig/errors.hpp"

namespace specrig {

namespace {

std::vector<double> matvec(const std::vector<double>& a, const std::vector<double>& x, int n) {
    std::vector<double> y(static_cast<size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        const double* row = &a[static_cast<size_t>(i) * n];
        for (int j = 0; j < n; ++j) s += row[j] * x[static_cast<size_t>(j)];
        y[static_cast<size_t>(i)] = s;
    }
    return y;
}

double norm2(const std::vector<double>& x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return std::sqrt(s);
}

double residual_norm(const std::vector<double>& a, const std::vector<double>& x, double lambda,
                     int n) {
    std::vector<double> y = matvec(a, x, n);
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
        double r = y[static_cast<size_t>(i)] - lambda * x[static_cast<size_t>(i)];
        s += r * r;
    }
    return std::sqrt(s);
}

// Shifted power iteration for the top eigenvalue of a symmetric nonnegative
// matrix. The shift makes the top eigenvalue strictly dominant in modulus.
SpectralResult power_top(const std::vector<double>& a, int n, double shift, double tol,
                         int max_iter) {
    std::vector<double> b = a;
    for (int i = 0; i < n; ++i) b[static_cast<size_t>(i) * n + i] += shift;

    std::vector<double> x(static_cast<size_t>(n), 1.0 / std::sqrt(static_cast<double>(n)));
    double lambda = 0.0;
    double res = 0.0;
    double last_res = std::numeric_limits<double>::max();
    int iters = 0;
    while (iters < max_iter) {
        ++iters;
        std::vector<double> y = matvec(b, x, n);
        double ny = norm2(y);
        if (ny == 0.0) { // zero matrix with zero shift
            lambda = 0.0;
            res = 0.0;
            break;
        }
        for (double& v : y) v /= ny;
        double rho = 0.0;
        std::vector<double> by = matvec(b, y, n);
        for (int i = 0; i < n; ++i) rho += y[static_cast<size_t>(i)] * by[static_cast<size_t>(i)];
        x = std::move(y);
        lambda = rho - shift;
        res = residual_norm(a, x, lambda, n);
        if (res <= tol) break;
        if (iters % 5000 == 0) {
            if (res > 0.9 * last_res) { // stagnating: deterministic perturbation
                for (int i = 0; i < n; ++i)
                    x[static_cast<size_t>(i)] += 1e-8 * static_cast<double>((i % 7) + 1);
                double nx = norm2(x);
                for (double& v : x) v /= nx;
            }
            last_res = res;
        }
    }
    if (res > tol) throw convergence_error("power iteration did not reach tolerance");
    return {lambda, std::move(x), res, iters};
}

void fix_sign(std::vector<double>& x) {
    double best = 0.0;
    for (double v : x)
        if (std::fabs(v) > std::fabs(best)) best = v;
    if (best < 0.0)
        for (double& v : x) v = -v;
}

} // namespace

SpectralResult spectral_radius(const Graph& g, double tol) {
    const int n = g.n();
    if (n < 1) throw parameter_error("spectral_radius needs n >= 1");
    if (tol <= 0) throw parameter_error("tolerance must be positive");
    std::vector<double> a = g.adjacency_matrix();
    if (g.edge_count() == 0)
        return {0.0, std::vector<double>(static_cast<size_t>(n), 1.0 / std::sqrt(static_cast<double>(n))), 0.0, 0};

    const bool connected = g.is_connected();
    try {
        EigResult eig = sym_eig(a, n);
        double lambda = eig.values[static_cast<size_t>(n - 1)];
        std::vector<double> x(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i)
            x[static_cast<size_t>(i)] = eig.vectors[static_cast<size_t>(i) * n + (n - 1)];
        double nx = norm2(x);
        for (double& v : x) v /= nx;
        fix_sign(x);
        double res = residual_norm(a, x, lambda, n);
        bool positive_ok = true;
        if (connected) {
            for (double v : x)
                if (!(v > 0.0)) positive_ok = false;
        }
        if (res <= tol && positive_ok) return {lambda, std::move(x), res, 0};
    } catch (const convergence_error&) {
        // fall through to power iteration
    }
    return power_top(a, n, 1.0 + static_cast<double>(n), tol, 200000);
}

LaplacianResult algebraic_connectivity(const Graph& g, double tol) {
    const int n = g.n();
    if (n < 2) throw parameter_error("algebraic_connectivity needs n >= 2");
    if (tol <= 0) throw parameter_error("tolerance must be positive");
    std::vector<double> l = g.laplacian_matrix();
    EigResult eig = sym_eig(l, n);

    double mu2 = eig.values[1];
    if (mu2 < 0.0 && mu2 > -1e3 * tol) mu2 = 0.0;

    auto column = [&](int j) {
        std::vector<double> x(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i)
            x[static_cast<size_t>(i)] = eig.vectors[static_cast<size_t>(i) * n + j];
        return x;
    };
    std::vector<double> x = column(1);

    // project out the all-ones direction; for a doubly degenerate kernel take
    // the combination of the two bottom vectors orthogonal to it
    double mean = 0.0;
    for (double v : x) mean += v;
    mean /= n;
    for (double& v : x) v -= mean;
    if (norm2(x) < 0.5) {
        std::vector<double> x0 = column(0), x1 = column(1);
        double s0 = 0.0, s1 = 0.0;
        for (int i = 0; i < n; ++i) {
            s0 += x0[static_cast<size_t>(i)];
            s1 += x1[static_cast<size_t>(i)];
        }
        for (int i = 0; i < n; ++i)
            x[static_cast<size_t>(i)] = s1 * x0[static_cast<size_t>(i)] - s0 * x1[static_cast<size_t>(i)];
    }
    double nx = norm2(x);
    for (double& v : x) v /= nx;
    fix_sign(x);
    double res = residual_norm(l, x, mu2, n);
    if (res > tol) throw convergence_error("Laplacian eigensolve missed tolerance");
    return {mu2, std::move(x), res};
}

double hong_bound(const Graph& g) {
    const int n = g.n();
    if (n < 1) throw parameter_error("hong_bound needs n >= 1");
    const int delta = g.min_degree();
    if (delta < 1) throw parameter_error("hong_bound needs min degree >= 1");
    const double m = static_cast<double>(g.edge_count());
    const double d = static_cast<double>(delta);
    return (d - 1.0) / 2.0 +
           std::sqrt(2.0 * m - d * static_cast<double>(n) + (d + 1.0) * (d + 1.0) / 4.0);
}

std::pair<Graph, bool> rotate_edge_compare(const Graph& g, Edge remove, std::pair<int, int> add) {
    if (!g.is_connected()) throw parameter_error("rotate_edge_compare needs a connected graph");
    int rid = g.edge_id(remove.u, remove.v);
    if (rid < 0) throw parameter_error("edge to remove is not present");
    if (add.first == add.second || g.has_edge(add.first, add.second))
        throw parameter_error("pair to add is not a non-edge");

    SpectralResult perron = spectral_radius(g);
    double removed_product = perron.vector[static_cast<size_t>(remove.u)] *
                             perron.vector[static_cast<size_t>(remove.v)];
    double added_product = perron.vector[static_cast<size_t>(add.first)] *
                           perron.vector[static_cast<size_t>(add.second)];
    Graph rotated = g.with_edge_removed(rid).with_edge_added(add.first, add.second);
    return {std::move(rotated), removed_product <= added_product};
}

} // namespace specrig
