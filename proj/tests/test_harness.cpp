#include <doctest.h>

#include "specrig/errors.hpp"
#include "specrig/graph6.hpp"
#include "specrig/harness.hpp"
#include "test_util.hpp"

using namespace specrig;

namespace {

Graph circulant(int n, std::vector<int> offsets) {
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int d : offsets) es.push_back({std::min(u, (u + d) % n), std::max(u, (u + d) % n)});
    std::sort(es.begin(), es.end(), [](Edge a, Edge b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
    es.erase(std::unique(es.begin(), es.end()), es.end());
    return Graph(n, std::move(es));
}

} // namespace

TEST_CASE("threshold verification of the extremal graph itself") {
    ExtremalParams p(18, 6, 1);
    VerificationRecord r = verify_threshold_packing(build_extremal(p), p);
    CHECK(r.above_threshold == Trichotomy::indistinguishable); // equal by construction
    CHECK(!r.packed);
    CHECK(r.is_extremal_iso);
    CHECK(r.is_extremal_labeled);
    CHECK(r.verdict == Verdict::consistent);
    CHECK(r.lambda1 == doctest::Approx(r.threshold).epsilon(1e-12));
}

TEST_CASE("one added edge forces the packing") {
    ExtremalParams p(18, 6, 1);
    Graph g = build_extremal(p).with_edge_added(2, 8);
    VerificationRecord r = verify_threshold_packing(g, p);
    CHECK(r.above_threshold == Trichotomy::above);
    CHECK(r.packed);
    CHECK(!r.is_extremal_iso);
    CHECK(r.verdict == Verdict::consistent);
}

TEST_CASE("below the threshold the theorem is vacuous") {
    ExtremalParams p(18, 6, 1);
    Graph g = circulant(18, {1, 2, 3}); // 6-regular, lambda1 = 6
    REQUIRE(g.min_degree() == 6);
    VerificationRecord r = verify_threshold_packing(g, p);
    CHECK(r.above_threshold == Trichotomy::below);
    CHECK(r.verdict == Verdict::vacuous);
}

TEST_CASE("hypothesis violations are rejected") {
    ExtremalParams p(18, 6, 1);
    CHECK_THROWS_AS(verify_threshold_packing(Graph::complete(18), p), parameter_error);
    CHECK_THROWS_AS(verify_threshold_packing(Graph::complete(17), p), parameter_error);
    ExtremalParams low(12, 4, 1);
    CHECK_THROWS_AS(verify_threshold_packing(build_extremal(low), low), parameter_error);
}

TEST_CASE("record invariants over sampled graphs") {
    ExtremalParams p(18, 6, 1);
    auto records = sample_and_verify(p, 12, 42);
    REQUIRE(records.size() == 12);
    for (const auto& r : records) {
        bool ce = r.above_threshold == Trichotomy::above && !r.packed && !r.is_extremal_iso;
        CHECK((r.verdict == Verdict::counterexample) == ce);
        CHECK((r.verdict == Verdict::vacuous) == (r.above_threshold == Trichotomy::below));
        CHECK(r.verdict != Verdict::counterexample);
        Graph back = from_graph6(r.graph6);
        CHECK(back.n() == 18);
        CHECK(back.min_degree() == 6);
    }
}

TEST_CASE("seeded sampling is reproducible") {
    ExtremalParams p(18, 6, 1);
    auto a = sample_and_verify(p, 6, 7);
    auto b = sample_and_verify(p, 6, 7);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) CHECK(record_to_json(a[i]) == record_to_json(b[i]));
    auto c = sample_and_verify(p, 6, 8);
    bool all_same = true;
    for (size_t i = 0; i < a.size(); ++i)
        if (record_to_json(a[i]) != record_to_json(c[i])) all_same = false;
    CHECK(!all_same);

    CHECK(sample_and_verify(p, 0, 7).empty());
}

TEST_CASE("class sweep with one cross edge collapses") {
    ClassSweep s = sweep_extremal_class(ExtremalParams(18, 6, 2));
    CHECK(s.labeled_count == 66);
    CHECK(s.unique_maximizer);
    CHECK(std::isinf(s.separation));
    CHECK(s.ranking.size() == 66);
    for (const auto& e : s.ranking) CHECK(e.extremal_iso);
}

TEST_CASE("mu2 conditions on a complete graph") {
    Mu2Report r = check_mu2_conditions(Graph::complete(13), 2);
    CHECK(r.mu2 == doctest::Approx(13.0));
    CHECK(r.condition1);
    CHECK(r.condition2);
    CHECK(r.condition3);
    CHECK(r.corollary_holds);
    CHECK(r.packed_k_rigid);
    CHECK(r.implication_ok);
}

TEST_CASE("mu2 condition 2 fails at the join vertex of the extremal graph") {
    Graph g = build_extremal(ExtremalParams(18, 6, 1));
    Mu2Report r = check_mu2_conditions(g, 1);
    CHECK(!r.condition2);
    CHECK(r.failing_vertex == 0); // deleting the join vertex disconnects
    CHECK(r.implication_ok);
}

TEST_CASE("mu2 scan rejects bad hypotheses") {
    CHECK_THROWS_AS(check_mu2_conditions(Graph::complete(13), 3), parameter_error); // delta < 6k
    RunConfig tiny;
    tiny.pair_budget = 10;
    CHECK_THROWS_AS(check_mu2_conditions(Graph::complete(13), 2, tiny), budget_error);
}

TEST_CASE("config validation") {
    RunConfig bad;
    bad.margin = 1e-12; // below tolerance
    CHECK_THROWS_AS(bad.validate(), parameter_error);
}
