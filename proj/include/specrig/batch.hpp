#ifndef SPECRIG_BATCH_HPP
#define SPECRIG_BATCH_HPP

#include <utility>
#include <vector>

#include "specrig/graph.hpp"

namespace specrig {

// Batch kernels over independent per-graph solves. Each kernel has a plain
// serial loop kept as the reference implementation and an OpenMP variant;
// both run the identical per-item code, so results are bit-identical
// regardless of thread count. tools/specrig_bench compares their runtimes.

// threads <= 0 selects the OpenMP default.
std::vector<double> batch_lambda1_serial(const std::vector<Graph>& graphs, double tol = 1e-10);
std::vector<double> batch_lambda1(const std::vector<Graph>& graphs, double tol = 1e-10,
                                  int threads = 0);

std::vector<double> batch_mu2_serial(const std::vector<Graph>& graphs, double tol = 1e-10);
std::vector<double> batch_mu2(const std::vector<Graph>& graphs, double tol = 1e-10,
                              int threads = 0);

// mu2 of every single-vertex deletion, indexed by deleted vertex.
std::vector<double> batch_mu2_vertex_deletions_serial(const Graph& g, double tol = 1e-10);
std::vector<double> batch_mu2_vertex_deletions(const Graph& g, double tol = 1e-10,
                                               int threads = 0);

// mu2 of every unordered pair deletion, indexed like the pair list
// (0,1),(0,2),...,(n-2,n-1) in lexicographic order.
std::vector<std::pair<int, int>> vertex_pairs(int n);
std::vector<double> batch_mu2_pair_deletions_serial(const Graph& g, double tol = 1e-10);
std::vector<double> batch_mu2_pair_deletions(const Graph& g, double tol = 1e-10,
                                             int threads = 0);

} // namespace specrig

#endif
