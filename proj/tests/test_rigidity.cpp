#include <doctest.h>

#include "specrig/errors.hpp"
#include "specrig/rigidity.hpp"
#include "specrig/rng.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace specrig;

namespace {

Graph bowtie() { return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}); }

std::vector<int> all_ids(const Graph& g) {
    std::vector<int> ids(static_cast<size_t>(g.edge_count()));
    for (int i = 0; i < g.edge_count(); ++i) ids[static_cast<size_t>(i)] = i;
    return ids;
}

} // namespace

TEST_CASE("laman independence basics") {
    Graph k3 = Graph::complete(3);
    CHECK(laman_independent(EdgeSubset::all(k3)));
    Graph k4 = Graph::complete(4);
    CHECK(!laman_independent(EdgeSubset::all(k4)));
    Graph c4 = Graph::cycle(4);
    CHECK(laman_independent(EdgeSubset::all(c4)));
    CHECK(testutil::laman_brute(c4, all_ids(c4))); // brute-force count check agrees
}

TEST_CASE("rigid rank basics") {
    CHECK(rigid_rank(EdgeSubset::all(Graph::complete(4))) == 5);
    CHECK(rigid_rank(EdgeSubset::all(Graph::complete(3))) == 3);
    CHECK(rigid_rank(EdgeSubset::all(bowtie())) == 6);
    CHECK(rigid_rank(EdgeSubset(Graph::complete(3))) == 0); // empty subset
}

TEST_CASE("partition-formula oracle basics") {
    CHECK(rigid_rank_bruteforce(EdgeSubset::all(Graph::complete(3))) == 3);
    CHECK(rigid_rank_bruteforce(EdgeSubset::all(Graph::complete(4))) == 5);
    CHECK(rigid_rank_bruteforce(EdgeSubset::all(bowtie())) == 6);
}

TEST_CASE("is_rigid") {
    CHECK(is_rigid(Graph::complete(4)));
    CHECK(is_rigid(Graph::complete(2)));
    CHECK(!is_rigid(Graph::cycle(4)));
    CHECK(!is_rigid(bowtie())); // rank 6 < 2*5-3
    CHECK_THROWS_AS(is_rigid(Graph::empty(1)), parameter_error);
}

TEST_CASE("pebble game invariant holds after every insertion") {
    Rng rng(71);
    for (int t = 0; t < 20; ++t) {
        int n = rng.next_int(2, 12);
        Graph g = testutil::random_graph(n, 0.6, rng);
        PebbleGame game(n);
        for (const Edge& e : g.edges()) {
            game.try_insert(e.u, e.v);
            REQUIRE(game.invariant_ok());
        }
        CHECK(game.accepted_count() <= std::min(g.edge_count(), std::max(0, 2 * n - 3)));
    }
}

TEST_CASE("pebble game agrees with the partition formula on small graphs") {
    for (int n = 2; n <= 5; ++n) {
        testutil::for_each_labeled_graph(n, [&](Graph g) {
            EdgeSubset f = EdgeSubset::all(g);
            CHECK(rigid_rank(f) == rigid_rank_bruteforce(f));
        });
    }
    for (const Graph& g : testutil::graphs_up_to_iso(6, false)) {
        EdgeSubset f = EdgeSubset::all(g);
        CHECK(rigid_rank(f) == rigid_rank_bruteforce(f));
    }
}

TEST_CASE("both oracle code paths agree with the game") {
    Rng rng(73);
    // induced-cover path: hosts with n <= 7
    for (int t = 0; t < 40; ++t) {
        Graph g = testutil::random_graph(7, 0.5 + rng.next_double() * 0.5, rng);
        EdgeSubset f = EdgeSubset::all(g);
        CHECK(rigid_rank_bruteforce(f) == rigid_rank(f));
    }
    // partition-DP path: bigger hosts, |F| <= 12
    for (int t = 0; t < 40; ++t) {
        Graph g = testutil::random_graph(10, 0.5, rng);
        if (g.edge_count() == 0) continue;
        std::vector<int> ids;
        for (int i = 0; i < g.edge_count() && static_cast<int>(ids.size()) < 12; ++i)
            if (rng.next_double() < 0.5) ids.push_back(i);
        EdgeSubset f = EdgeSubset::of(g, ids);
        CHECK(rigid_rank_bruteforce(f) == rigid_rank(f));
    }
}

TEST_CASE("budget guard") {
    Graph g = Graph::complete(8); // n > 7 and 28 edges
    CHECK_THROWS_AS(rigid_rank_bruteforce(EdgeSubset::all(g)), budget_error);
}

TEST_CASE("independence predicate is a matroid on small graphs") {
    // hereditary: dropping any edge of an independent set stays independent
    for (const Graph& g : testutil::graphs_up_to_iso(5, false)) {
        const int m = g.edge_count();
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
            std::vector<int> ids;
            for (int i = 0; i < m; ++i)
                if (mask >> i & 1) ids.push_back(i);
            bool indep = laman_independent(EdgeSubset::of(g, ids));
            CHECK(indep == testutil::laman_brute(g, ids));
            if (indep && !ids.empty()) {
                for (size_t drop = 0; drop < ids.size(); ++drop) {
                    std::vector<int> sub = ids;
                    sub.erase(sub.begin() + static_cast<long>(drop));
                    CHECK(laman_independent(EdgeSubset::of(g, sub)));
                }
            }
        }
    }

    // exchange, exhaustively on 4 vertices
    testutil::for_each_labeled_graph(4, [&](Graph g) {
        const int m = g.edge_count();
        std::vector<std::vector<int>> indep_sets;
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
            std::vector<int> ids;
            for (int i = 0; i < m; ++i)
                if (mask >> i & 1) ids.push_back(i);
            if (laman_independent(EdgeSubset::of(g, ids))) indep_sets.push_back(ids);
        }
        for (const auto& a : indep_sets) {
            for (const auto& b : indep_sets) {
                if (a.size() >= b.size()) continue;
                bool extended = false;
                for (int e : b) {
                    if (std::find(a.begin(), a.end(), e) != a.end()) continue;
                    std::vector<int> ext = a;
                    ext.push_back(e);
                    if (laman_independent(EdgeSubset::of(g, ext))) {
                        extended = true;
                        break;
                    }
                }
                CHECK(extended);
            }
        }
    });
}

TEST_CASE("rank bounds and rigid implies 2-connected") {
    Rng rng(79);
    for (int t = 0; t < 30; ++t) {
        Graph g = testutil::random_graph(rng.next_int(2, 12), rng.next_double(), rng);
        int r = rigid_rank(EdgeSubset::all(g));
        CHECK(r <= std::min(g.edge_count(), std::max(0, 2 * g.n() - 3)));
    }
    for (const Graph& g : testutil::graphs_up_to_iso(6, true)) {
        if (g.n() >= 3 && is_rigid(g)) {
            for (int v = 0; v < g.n(); ++v) CHECK(g.without_vertex(v).is_connected());
        }
    }
}
