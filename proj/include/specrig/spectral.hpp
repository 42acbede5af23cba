#ifndef SPECRIG_SPECTRAL_HPP
#define SPECRIG_SPECTRAL_HPP

#include <utility>
#include <vector>

#include "specrig/graph.hpp"

namespace specrig {

struct SpectralResult {
    double value;               // largest adjacency eigenvalue
    std::vector<double> vector; // unit-norm eigenvector, indexed by vertex
    double residual;            // ||Ax - value*x||_2
    int iterations;             // power-iteration steps; 0 when QL sufficed
};

struct LaplacianResult {
    double mu2;                  // second-smallest Laplacian eigenvalue
    std::vector<double> fiedler; // unit norm, orthogonal to the all-ones vector
    double residual;             // ||Lx - mu2*x||_2
};

// Largest adjacency eigenvalue with eigenvector. On connected input the
// returned vector is the strictly positive Perron vector. Falls back to
// shifted power iteration (all-ones start, deterministic perturbation on
// stagnation) if the QL result misses the residual tolerance.
SpectralResult spectral_radius(const Graph& g, double tol = 1e-10);

// Second-smallest Laplacian eigenvalue; zero (within tolerance) exactly on
// disconnected input. Requires n >= 2.
LaplacianResult algebraic_connectivity(const Graph& g, double tol = 1e-10);

// (delta-1)/2 + sqrt(2m - delta*n + (delta+1)^2/4); upper bound on the
// spectral radius, tight on regular graphs. Requires min degree >= 1.
double hong_bound(const Graph& g);

// Delete `remove` (an edge of g) and add `add` (a non-edge). Returns the
// rotated graph and whether x_u*x_v <= x_u'*x_v' holds on g's Perron vector;
// when true and the result is not isomorphic to g, the spectral radius
// strictly increases. g must be connected.
std::pair<Graph, bool> rotate_edge_compare(const Graph& g, Edge remove, std::pair<int, int> add);

} // namespace specrig

#endif
