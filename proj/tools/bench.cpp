// Compares the serial reference loops with the OpenMP kernels on the three
// sweep shapes the harness actually runs.
#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "specrig/batch.hpp"
#include "specrig/extremal.hpp"
#include "specrig/rng.hpp"

using namespace specrig;
using h_clock = std::chrono::high_resolution_clock;

namespace {

template <class F>
double time_s(F&& fn) {
    auto t0 = h_clock::now();
    fn();
    auto t1 = h_clock::now();
    return std::chrono::duration_cast<std::chrono::duration<double>>(t1 - t0).count();
}

Graph random_graph(int n, double density, Rng& rng) {
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_double() < density) es.push_back({u, v});
    return Graph(n, std::move(es));
}

void report(const char* name, double serial, double parallel) {
    std::printf("%-36s serial %8.3fs   openmp %8.3fs   speedup %.2fx\n", name, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0);
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without openmp; both columns run serially\n");
#endif

    {
        auto members = enumerate_class(ExtremalParams(18, 6, 3));
        std::vector<double> a, b;
        double ts = time_s([&] { a = batch_lambda1_serial(members); });
        double tp = time_s([&] { b = batch_lambda1(members); });
        report("lambda1 sweep, 2145 class members", ts, tp);
        if (a != b) std::printf("MISMATCH in lambda1 sweep\n");
    }

    {
        Graph g = Graph::complete(24);
        std::vector<double> a, b;
        double ts = time_s([&] { a = batch_mu2_pair_deletions_serial(g); });
        double tp = time_s([&] { b = batch_mu2_pair_deletions(g); });
        report("mu2 pair-deletion scan, K24", ts, tp);
        if (a != b) std::printf("MISMATCH in pair-deletion scan\n");
    }

    {
        Rng rng(1);
        std::vector<Graph> graphs;
        for (int t = 0; t < 128; ++t) graphs.push_back(random_graph(40, 0.4, rng));
        std::vector<double> a, b;
        double ts = time_s([&] { a = batch_lambda1_serial(graphs); });
        double tp = time_s([&] { b = batch_lambda1(graphs); });
        report("lambda1, 128 random graphs n=40", ts, tp);
        if (a != b) std::printf("MISMATCH in random batch\n");
    }

    return 0;
}
