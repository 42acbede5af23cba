// Acceptance suite: one pass/fail line per criterion, with the runtime
// budget enforced. Exits nonzero if any criterion fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "specrig/batch.hpp"
#include "specrig/extremal.hpp"
#include "specrig/graph6.hpp"
#include "specrig/harness.hpp"
#include "specrig/isomorphism.hpp"
#include "specrig/matroid_union.hpp"
#include "specrig/parallel.hpp"
#include "specrig/rigidity.hpp"
#include "specrig/rng.hpp"
#include "specrig/spectral.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace specrig;
using testutil::random_connected_graph;
using testutil::random_graph;
using testutil::random_graph_min_degree;

namespace {

struct Check {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& msg) {
        if (!cond && ok) {
            ok = false;
            detail = msg;
        }
    }
};

Graph circulant(int n, std::vector<int> offsets) {
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u) {
        for (int d : offsets) {
            int v = (u + d) % n;
            Edge e{std::min(u, v), std::max(u, v)};
            bool dup = false;
            for (const Edge& f : es) dup = dup || (f.u == e.u && f.v == e.v);
            if (!dup) es.push_back(e);
        }
    }
    return Graph(n, std::move(es));
}

Graph cube() {
    std::vector<Edge> es;
    for (int u = 0; u < 8; ++u)
        for (int b = 0; b < 3; ++b)
            if (u < (u ^ (1 << b))) es.push_back({u, u ^ (1 << b)});
    return Graph(8, std::move(es));
}

std::vector<std::pair<Graph, int>> regular_test_graphs() {
    std::vector<std::pair<Graph, int>> out;
    for (int n = 3; n <= 12; ++n) out.emplace_back(Graph::cycle(n), 2);
    out.emplace_back(Graph::petersen(), 3);
    out.emplace_back(cube(), 3);
    out.emplace_back(Graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}}),
                     3); // K_{3,3}
    out.emplace_back(circulant(10, {1, 2}), 4);
    out.emplace_back(circulant(12, {1, 2, 3}), 6);
    out.emplace_back(Graph::complete(5), 4);
    out.emplace_back(Graph::complete(8), 7);
    return out;
}

// criterion 1: lambda1(K_n) = n-1 and mu2(K_n) = n for n in 2..50; every
// connected regular test graph has lambda1 = d
void criterion_eigensolver(Check& c) {
    for (int n = 2; n <= 50; ++n) {
        Graph g = Graph::complete(n);
        double l = spectral_radius(g).value;
        double m = algebraic_connectivity(g).mu2;
        c.expect(std::fabs(l - (n - 1)) <= 1e-9, "lambda1(K_" + std::to_string(n) + ") off");
        c.expect(std::fabs(m - n) <= 1e-9, "mu2(K_" + std::to_string(n) + ") off");
    }
    for (const auto& [g, d] : regular_test_graphs()) {
        c.expect(g.is_connected(), "regular test graph disconnected");
        c.expect(std::fabs(spectral_radius(g).value - d) <= 1e-9, "regular graph lambda1 != d");
    }
}

// criterion 2: lambda1 <= hong_bound + 1e-8 on 1000 random graphs with
// delta >= 1, n <= 40; equality on every regular test graph
void criterion_hong(Check& c) {
    Rng rng(202601);
    std::vector<Graph> graphs;
    for (int t = 0; t < 1000; ++t) {
        int n = rng.next_int(2, 40);
        double density = 0.1 + 0.85 * rng.next_double();
        graphs.push_back(random_graph_min_degree(n, density, 1, rng));
    }
    std::vector<char> ok(graphs.size(), 0);
    parallel_for_indexed(static_cast<long>(graphs.size()), 0, [&](long i) {
        const Graph& g = graphs[static_cast<size_t>(i)];
        ok[static_cast<size_t>(i)] = spectral_radius(g).value <= hong_bound(g) + 1e-8;
    });
    for (size_t i = 0; i < graphs.size(); ++i) c.expect(ok[i] != 0, "bound violated on a random graph");
    for (const auto& [g, d] : regular_test_graphs()) {
        c.expect(std::fabs(spectral_radius(g).value - hong_bound(g)) <= 1e-8,
                 "bound not tight on a regular graph");
    }
}

// criterion 3: on 500 random connected graphs, every single-edge deletion
// that keeps the graph connected lowers lambda1 by more than 1e-10
void criterion_subgraph_strictness(Check& c) {
    Rng rng(202602);
    std::vector<Graph> graphs;
    for (int t = 0; t < 500; ++t) {
        int n = rng.next_int(3, 30);
        graphs.push_back(random_connected_graph(n, 0.15 + 0.35 * rng.next_double(), rng));
    }
    std::vector<char> ok(graphs.size(), 1);
    parallel_for_indexed(static_cast<long>(graphs.size()), 0, [&](long i) {
        const Graph& g = graphs[static_cast<size_t>(i)];
        double lambda = spectral_radius(g).value;
        for (int e = 0; e < g.edge_count(); ++e) {
            Graph h = g.with_edge_removed(e);
            if (!h.is_connected()) continue;
            if (!(spectral_radius(h).value < lambda - 1e-10)) {
                ok[static_cast<size_t>(i)] = 0;
                return;
            }
        }
    });
    for (size_t i = 0; i < graphs.size(); ++i)
        c.expect(ok[i] != 0, "an edge deletion failed to lower lambda1 strictly");
}

// criterion 4: 500 rotations with a true Perron-product hypothesis and a
// non-isomorphic result all raise lambda1
void criterion_rotation(Check& c) {
    Rng rng(202603);
    int qualifying = 0;
    long attempts = 0;
    while (qualifying < 500 && attempts < 100000) {
        ++attempts;
        int n = rng.next_int(4, 16);
        Graph g = random_connected_graph(n, 0.25 + 0.4 * rng.next_double(), rng);
        if (g.edge_count() == 0 || g.edge_count() == n * (n - 1) / 2) continue;
        Edge rm = g.edge(rng.next_int(0, g.edge_count() - 1));
        int a = rng.next_int(0, n - 1), b = rng.next_int(0, n - 1);
        if (a == b || g.has_edge(a, b)) continue;
        auto [rotated, hyp] = rotate_edge_compare(g, rm, {a, b});
        if (!hyp) continue;
        if (is_isomorphic(rotated, g)) continue;
        ++qualifying;
        c.expect(spectral_radius(rotated).value > spectral_radius(g).value + 1e-10,
                 "rotation with a true hypothesis failed to raise lambda1");
        if (!c.ok) return;
    }
    c.expect(qualifying == 500, "could not collect 500 qualifying rotations");
}

// criterion 5: pebble-game rank equals the partition-formula oracle on every
// connected graph with n <= 6 and on 200 random graphs with n = 7
void criterion_pebble_oracle(Check& c) {
    const size_t expected_counts[] = {0, 1, 1, 2, 6, 21, 112};
    for (int n = 1; n <= 6; ++n) {
        auto graphs = testutil::graphs_up_to_iso(n, /*connected_only=*/true);
        c.expect(graphs.size() == expected_counts[n],
                 "connected graph enumeration count off at n=" + std::to_string(n));
        for (const Graph& g : graphs) {
            EdgeSubset f = EdgeSubset::all(g);
            c.expect(rigid_rank(f) == rigid_rank_bruteforce(f),
                     "rank mismatch on a connected graph with n=" + std::to_string(n));
        }
    }
    Rng rng(202605);
    for (int t = 0; t < 200; ++t) {
        Graph g = random_graph(7, 0.2 + 0.75 * rng.next_double(), rng);
        EdgeSubset f = EdgeSubset::all(g);
        c.expect(rigid_rank(f) == rigid_rank_bruteforce(f), "rank mismatch on a random n=7 graph");
    }
}

// criterion 6: pack verdicts match exhaustive slot search on all graphs with
// n <= 6 for (k,ell) in {(1,0),(0,1),(0,2),(1,1)}; tau(K4)=2, tau(K6)=3
void criterion_union_small(Check& c) {
    const std::pair<int, int> combos[] = {{1, 0}, {0, 1}, {0, 2}, {1, 1}};
    for (int n = 2; n <= 6; ++n) {
        for (const Graph& g : testutil::graphs_up_to_iso(n, false)) {
            for (auto [k, ell] : combos) {
                bool packed =
                    pack_rigid_and_trees(g, k, ell).verdict == PackingCertificate::Verdict::packed;
                bool brute = testutil::exists_packing_brute(g, k, ell);
                c.expect(packed == brute, "verdict mismatch at n=" + std::to_string(n) + " k=" +
                                              std::to_string(k) + " ell=" + std::to_string(ell));
                if (!c.ok) return;
            }
        }
    }
    c.expect(tree_packing_number(Graph::complete(4)) == 2, "tau(K4) != 2");
    c.expect(tree_packing_number(Graph::complete(6)) == 3, "tau(K6) != 3");
}

// criterion 7: the extremal constructions refuse their packings with a
// witness whose deficiency re-verifies exactly
void criterion_extremal_failure(Check& c) {
    {
        ExtremalParams p(18, 6, 1);
        Graph g = build_extremal(p);
        PackingCertificate cert = pack_rigid_and_trees(g, 1, 1);
        c.expect(cert.verdict == PackingCertificate::Verdict::refuted, "(18,6,1) not refuted");
        c.expect(verify_certificate(cert), "(18,6,1) certificate failed re-verification");
        EdgeSubset f = EdgeSubset::of(g, cert.witness);
        long value = 1L * rigid_rank(f) + 1L * circuit_rank(f) + (g.edge_count() - f.size());
        c.expect(value < 1L * (2 * 18 - 3) + 1L * 17, "(18,6,1) witness deficiency not strict");
        c.expect(value == cert.union_rank, "(18,6,1) witness not tight");
    }
    {
        ExtremalParams p(24, 8, 2);
        c.expect(p.ell == 0, "(24,8,2) should derive ell = 0");
        Graph g = build_extremal(p);
        PackingCertificate cert = pack_rigid_and_trees(g, 2, 0);
        c.expect(cert.verdict == PackingCertificate::Verdict::refuted, "(24,8,2) not refuted");
        c.expect(verify_certificate(cert), "(24,8,2) certificate failed re-verification");
        EdgeSubset f = EdgeSubset::of(g, cert.witness);
        long value = 2L * rigid_rank(f) + (g.edge_count() - f.size());
        c.expect(value < 2L * (2 * 24 - 3), "(24,8,2) witness deficiency not strict");
        c.expect(value == cert.union_rank, "(24,8,2) witness not tight");
    }
}

// criterion 8: adding any of 50 random edges to the extremal graph forces
// the packing; 200 sampled graphs produce no counterexample verdict
void criterion_theorem_audit(Check& c) {
    ExtremalParams p(18, 6, 1);
    Graph g = build_extremal(p);
    Graph comp = complement(g);
    c.expect(comp.edge_count() == 66, "complement size of the extremal graph");
    Rng rng(202608);
    std::vector<int> picks;
    while (picks.size() < 50) {
        int e = rng.next_int(0, comp.edge_count() - 1);
        bool dup = false;
        for (int x : picks) dup = dup || x == e;
        if (!dup) picks.push_back(e);
    }
    std::vector<char> ok(picks.size(), 0);
    parallel_for_indexed(static_cast<long>(picks.size()), 0, [&](long i) {
        Edge ne = comp.edge(picks[static_cast<size_t>(i)]);
        Graph h = g.with_edge_added(ne.u, ne.v);
        VerificationRecord r = verify_threshold_packing(h, p);
        ok[static_cast<size_t>(i)] =
            r.packed && r.above_threshold == Trichotomy::above && r.verdict == Verdict::consistent;
    });
    for (size_t i = 0; i < picks.size(); ++i)
        c.expect(ok[i] != 0, "an added edge did not force the packing");

    auto records = sample_and_verify(p, 200, 2026);
    c.expect(records.size() == 200, "sampling failed");
    for (const auto& r : records)
        c.expect(r.verdict != Verdict::counterexample, "sampled counterexample verdict");
}

// criterion 9: over all 2145 labeled members for (18,6,3), the maximum
// lambda1 sits exactly on the extremal isomorphism class, separated by more
// than 1e-8
void criterion_class_sweep(Check& c) {
    ClassSweep s = sweep_extremal_class(ExtremalParams(18, 6, 3));
    c.expect(s.labeled_count == 2145, "labeled class size");
    c.expect(s.unique_maximizer, "maximum not unique to the extremal class");
    c.expect(s.separation > 1e-8, "separation below the margin");
    long extremal_members = 0;
    for (const auto& e : s.ranking)
        if (e.extremal_iso) ++extremal_members;
    c.expect(extremal_members == 6L * 55L, "unexpected extremal class size");
    c.expect(s.ranking.front().extremal_iso, "top of the ranking is not extremal");
}

// criterion 10: K13 with k=2 passes all three conditions and yields two
// verified edge-disjoint spanning rigid subgraphs; the extremal graph fails
// condition 2 at the join vertex
void criterion_mu2_conditions(Check& c) {
    Mu2Report r = check_mu2_conditions(Graph::complete(13), 2);
    c.expect(r.condition1 && r.condition2 && r.condition3, "K13 conditions");
    c.expect(r.corollary_holds, "K13 corollary");
    c.expect(r.packed_k_rigid, "K13 packing");
    PackingCertificate cert = pack_rigid_and_trees(Graph::complete(13), 2, 0);
    c.expect(cert.verdict == PackingCertificate::Verdict::packed, "K13 certificate verdict");
    c.expect(verify_certificate(cert), "K13 certificate verification");
    c.expect(static_cast<int>(cert.rigid_slots.size()) == 2, "K13 slot count");

    Mu2Report ext = check_mu2_conditions(build_extremal(ExtremalParams(18, 6, 1)), 1);
    c.expect(!ext.condition2, "extremal condition 2 should fail");
    c.expect(ext.failing_vertex == 0, "extremal condition 2 should fail at the join vertex");
}

// criterion 11: seeded commands are byte-identical across runs
void criterion_determinism(Check& c) {
    auto run = [&](const std::string& args, const std::string& path) {
        std::string cmd = std::string(SPECRIG_CLI_PATH) + " " + args + " > " + path + " 2>&1";
        int rc = std::system(cmd.c_str());
        return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    };
    auto slurp = [](const std::string& path) {
        std::ifstream in(path);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    const std::string commands[] = {
        "verify --n 18 --delta 6 --k 1 --trials 25 --seed 7",
        "verify --n 18 --delta 6 --k 1 --trials 25 --seed 7 --threads 1",
        "construct --n 18 --delta 6 --k 3 --class-index 17",
    };
    int i = 0;
    for (const std::string& cmd : commands) {
        std::string pa = "acc_det_a" + std::to_string(i) + ".txt";
        std::string pb = "acc_det_b" + std::to_string(i) + ".txt";
        int ra = run(cmd, pa);
        int rb = run(cmd, pb);
        c.expect(ra == 0 && rb == 0, "seeded command failed: " + cmd);
        c.expect(slurp(pa) == slurp(pb), "outputs differ for: " + cmd);
        std::remove(pa.c_str());
        std::remove(pb.c_str());
        ++i;
    }
}

struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<void(Check&)> fn;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "eigensolver exactness on cliques and regular graphs", 5.0, criterion_eigensolver},
        {2, "degree-based spectral bound dominates and is tight on regular graphs", 30.0,
         criterion_hong},
        {3, "single-edge deletions strictly lower lambda1", 60.0, criterion_subgraph_strictness},
        {4, "edge rotations with a true hypothesis raise lambda1", 120.0, criterion_rotation},
        {5, "pebble-game rank equals the partition formula", 120.0, criterion_pebble_oracle},
        {6, "union verdicts match exhaustive search on small graphs", 300.0, criterion_union_small},
        {7, "extremal constructions are refuted with tight witnesses", 60.0,
         criterion_extremal_failure},
        {8, "threshold audit: added edges force packing, sampling finds no counterexample", 600.0,
         criterion_theorem_audit},
        {9, "unique spectral maximizer over the labeled class", 900.0, criterion_class_sweep},
        {10, "algebraic connectivity conditions cross-check", 60.0, criterion_mu2_conditions},
        {11, "seeded commands are byte-identical", 120.0, criterion_determinism},
    };

    int failures = 0;
    for (const auto& cr : criteria) {
        Check check;
        auto t0 = std::chrono::steady_clock::now();
        cr.fn(check);
        auto t1 = std::chrono::steady_clock::now();
        double secs = std::chrono::duration_cast<std::chrono::duration<double>>(t1 - t0).count();
        bool in_budget = secs < cr.budget_s;
        bool pass = check.ok && in_budget;
        std::printf("[%s] criterion %2d: %s (%.2fs, budget %.0fs)\n", pass ? "PASS" : "FAIL", cr.id,
                    cr.name, secs, cr.budget_s);
        if (!check.ok) std::printf("       %s\n", check.detail.c_str());
        if (!in_budget) std::printf("       runtime budget exceeded\n");
        if (!pass) ++failures;
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
