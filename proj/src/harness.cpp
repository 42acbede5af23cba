#include "specrig/harness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include <json.hpp>

#include "specrig/batch.hpp"
#include "specrig/errors.hpp"
#include "specrig/graph6.hpp"
#include "specrig/isomorphism.hpp"
#include "specrig/matroid_union.hpp"
#include "specrig/numfmt.hpp"
#include "specrig/parallel.hpp"
#include "specrig/rng.hpp"
#include "specrig/spectral.hpp"

namespace specrig {

void RunConfig::validate() const {
    if (!(tolerance > 0)) throw parameter_error("tolerance must be positive");
    if (margin < tolerance) throw parameter_error("margin must be at least the tolerance");
}

const char* to_string(Trichotomy t) {
    switch (t) {
        case Trichotomy::above: return "above";
        case Trichotomy::below: return "below";
        default: return "indistinguishable";
    }
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::consistent: return "consistent";
        case Verdict::counterexample: return "counterexample";
        case Verdict::vacuous: return "vacuous";
        default: return "indeterminate";
    }
}

namespace {

bool same_edge_set(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
    for (const Edge& e : a.edges())
        if (!b.has_edge(e.u, e.v)) return false;
    return true;
}

} // namespace

VerificationRecord verify_threshold_packing(const Graph& g, const ExtremalParams& p,
                                            const RunConfig& cfg) {
    cfg.validate();
    if (g.n() != p.n) throw parameter_error("graph order does not match parameters");
    if (g.min_degree() != p.delta) throw parameter_error("minimum degree does not match parameters");
    if (p.delta < 6) throw parameter_error("threshold verification requires delta >= 6");

    Graph extremal = build_extremal(p);
    const double lambda = spectral_radius(g, cfg.tolerance).value;
    const double threshold = spectral_radius(extremal, cfg.tolerance).value;
    PackingCertificate cert = pack_rigid_and_trees(g, p.k, p.ell);
    const bool packed = cert.verdict == PackingCertificate::Verdict::packed;
    const bool labeled = same_edge_set(g, extremal);
    const bool iso = labeled || is_isomorphic(g, extremal);

    const double diff = lambda - threshold;
    Trichotomy t = diff > cfg.margin    ? Trichotomy::above
                   : diff < -cfg.margin ? Trichotomy::below
                                        : Trichotomy::indistinguishable;
    Verdict v;
    switch (t) {
        case Trichotomy::above:
            v = (packed || iso) ? Verdict::consistent : Verdict::counterexample;
            break;
        case Trichotomy::below:
            v = Verdict::vacuous;
            break;
        default:
            v = (packed || iso) ? Verdict::consistent : Verdict::indeterminate;
            break;
    }
    return {to_graph6(g), p, lambda, threshold, t, packed, iso, labeled, v};
}

ClassSweep sweep_extremal_class(const ExtremalParams& p, bool dedup, const RunConfig& cfg) {
    cfg.validate();
    std::vector<Graph> members = enumerate_class(p, dedup, cfg.class_budget);
    const long count = static_cast<long>(members.size());
    std::vector<double> lambda = batch_lambda1(members, cfg.tolerance, cfg.threads);

    const CanonicalForm extremal = canonical_form(build_extremal(p));
    std::vector<char> iso(static_cast<size_t>(count), 0);
    parallel_for_indexed(count, cfg.threads, [&](long i) {
        iso[static_cast<size_t>(i)] = canonical_form(members[static_cast<size_t>(i)]) == extremal;
    });

    ClassSweep sweep{p,
                     count,
                     -std::numeric_limits<double>::infinity(),
                     -std::numeric_limits<double>::infinity(),
                     std::numeric_limits<double>::infinity(),
                     true,
                     false,
                     {}};
    sweep.ranking.reserve(static_cast<size_t>(count));
    for (long i = 0; i < count; ++i) {
        double l = lambda[static_cast<size_t>(i)];
        bool is_ext = iso[static_cast<size_t>(i)] != 0;
        sweep.ranking.push_back({i, l, is_ext});
        if (is_ext)
            sweep.extremal_lambda1 = std::max(sweep.extremal_lambda1, l);
        else
            sweep.best_other_lambda1 = std::max(sweep.best_other_lambda1, l);
    }
    std::sort(sweep.ranking.begin(), sweep.ranking.end(), [](const ClassEntry& a, const ClassEntry& b) {
        if (a.lambda1 != b.lambda1) return a.lambda1 > b.lambda1;
        return a.index < b.index;
    });
    if (std::isinf(sweep.best_other_lambda1)) { // class collapses onto the extremal graph
        sweep.separation = std::numeric_limits<double>::infinity();
        sweep.unique_maximizer = true;
        sweep.separation_indistinguishable = false;
    } else {
        sweep.separation = sweep.extremal_lambda1 - sweep.best_other_lambda1;
        sweep.unique_maximizer = sweep.separation > cfg.margin;
        sweep.separation_indistinguishable = std::fabs(sweep.separation) <= cfg.margin;
    }
    return sweep;
}

Mu2Report check_mu2_conditions(const Graph& g, int k, const RunConfig& cfg) {
    cfg.validate();
    if (k < 1) throw parameter_error("k must be at least 1");
    const int n = g.n();
    if (n < 4) throw parameter_error("condition scan needs n >= 4");
    const int delta = g.min_degree();
    if (delta < 6 * k) throw parameter_error("condition scan requires min degree >= 6k");
    const long pair_count = static_cast<long>(n) * (n - 1) / 2;
    if (pair_count > cfg.pair_budget)
        throw budget_error("pair-deletion scan exceeds the configured budget");

    Mu2Report rep{k, delta, 0.0, false, true, -1, true, {-1, -1}, false, false, true};
    rep.mu2 = algebraic_connectivity(g, cfg.tolerance).mu2;
    rep.condition1 = rep.mu2 > (6.0 * k - 1.0) / (delta + 1.0);

    // minimum degree of G-u without building the deleted graph
    auto deleted_min_degree = [&](int u) {
        int d = n;
        for (int v = 0; v < n; ++v) {
            if (v == u) continue;
            d = std::min(d, g.degree(v) - (g.has_edge(u, v) ? 1 : 0));
        }
        return d;
    };
    std::vector<double> del1 = batch_mu2_vertex_deletions(g, cfg.tolerance, cfg.threads);
    for (int u = 0; u < n; ++u) {
        double bound = (4.0 * k - 1.0) / (deleted_min_degree(u) + 1.0);
        if (!(del1[static_cast<size_t>(u)] > bound)) {
            rep.condition2 = false;
            rep.failing_vertex = u;
            break;
        }
    }

    auto pair_min_degree = [&](int v, int w) {
        int d = n;
        for (int x = 0; x < n; ++x) {
            if (x == v || x == w) continue;
            d = std::min(d, g.degree(x) - (g.has_edge(x, v) ? 1 : 0) - (g.has_edge(x, w) ? 1 : 0));
        }
        return d;
    };
    std::vector<double> del2 = batch_mu2_pair_deletions(g, cfg.tolerance, cfg.threads);
    auto pairs = vertex_pairs(n);
    for (size_t i = 0; i < pairs.size(); ++i) {
        auto [v, w] = pairs[i];
        double bound = (2.0 * k - 1.0) / (pair_min_degree(v, w) + 1.0);
        if (!(del2[i] > bound)) {
            rep.condition3 = false;
            rep.failing_pair = {v, w};
            break;
        }
    }

    rep.corollary_holds = rep.mu2 > 2.0 + (2.0 * k - 1.0) / (delta - 1.0);
    rep.packed_k_rigid =
        pack_rigid_and_trees(g, k, 0).verdict == PackingCertificate::Verdict::packed;
    rep.implication_ok =
        !(rep.condition1 && rep.condition2 && rep.condition3) || rep.packed_k_rigid;
    return rep;
}

namespace {

std::uint64_t trial_seed(std::uint64_t seed, long trial) {
    Rng r(seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(trial + 1));
    return r.next_u64();
}

Graph sample_exact_min_degree(int n, int delta, Rng& rng, long cap) {
    double density = std::min(0.99, static_cast<double>(delta + 1) / n);
    for (long attempt = 1; attempt <= cap; ++attempt) {
        std::vector<Edge> es;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.next_double() < density) es.push_back({u, v});
        Graph g(n, std::move(es));
        if (g.n() > 0 && g.min_degree() == delta) return g;
        if (attempt % 100 == 0) density = std::min(0.99, density + 0.01);
    }
    throw budget_error("sampling-budget-exceeded");
}

} // namespace

std::vector<VerificationRecord> sample_and_verify(const ExtremalParams& p, long trials,
                                                  std::uint64_t seed, const RunConfig& cfg) {
    cfg.validate();
    if (trials < 0) throw parameter_error("trials must be non-negative");
    std::vector<std::optional<VerificationRecord>> slots(static_cast<size_t>(trials));
    RunConfig per_trial = cfg;
    per_trial.threads = 1; // trials are the parallel axis
    parallel_for_indexed(trials, cfg.threads, [&](long i) {
        Rng rng(trial_seed(seed, i));
        Graph g = sample_exact_min_degree(p.n, p.delta, rng, cfg.rejection_cap);
        slots[static_cast<size_t>(i)] = verify_threshold_packing(g, p, per_trial);
    });
    std::vector<VerificationRecord> out;
    out.reserve(static_cast<size_t>(trials));
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

std::string record_to_json(const VerificationRecord& r) {
    nlohmann::json j;
    j["graph6"] = r.graph6;
    j["n"] = r.params.n;
    j["delta"] = r.params.delta;
    j["k"] = r.params.k;
    j["ell"] = r.params.ell;
    j["lambda1"] = round_sig(r.lambda1);
    j["threshold"] = round_sig(r.threshold);
    j["above_threshold"] = to_string(r.above_threshold);
    j["packed"] = r.packed;
    j["is_extremal_iso"] = r.is_extremal_iso;
    j["is_extremal_labeled"] = r.is_extremal_labeled;
    j["verdict"] = to_string(r.verdict);
    return j.dump();
}

std::string records_summary_json(const std::vector<VerificationRecord>& rs) {
    long consistent = 0, counterexample = 0, vacuous = 0, indeterminate = 0;
    for (const auto& r : rs) {
        switch (r.verdict) {
            case Verdict::consistent: ++consistent; break;
            case Verdict::counterexample: ++counterexample; break;
            case Verdict::vacuous: ++vacuous; break;
            case Verdict::indeterminate: ++indeterminate; break;
        }
    }
    nlohmann::json j;
    j["records"] = rs.size();
    j["consistent"] = consistent;
    j["counterexample"] = counterexample;
    j["vacuous"] = vacuous;
    j["indeterminate"] = indeterminate;
    return j.dump();
}

std::string sweep_to_json(const ClassSweep& s, bool include_ranking) {
    nlohmann::json j;
    j["n"] = s.params.n;
    j["delta"] = s.params.delta;
    j["k"] = s.params.k;
    j["labeled_count"] = s.labeled_count;
    j["extremal_lambda1"] = round_sig(s.extremal_lambda1);
    if (std::isinf(s.best_other_lambda1)) {
        j["best_other_lambda1"] = nullptr;
        j["separation"] = nullptr;
    } else {
        j["best_other_lambda1"] = round_sig(s.best_other_lambda1);
        j["separation"] = round_sig(s.separation);
    }
    j["unique_maximizer"] = s.unique_maximizer;
    j["separation_indistinguishable"] = s.separation_indistinguishable;
    if (include_ranking) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& e : s.ranking)
            arr.push_back({{"index", e.index},
                           {"lambda1", round_sig(e.lambda1)},
                           {"extremal_iso", e.extremal_iso}});
        j["ranking"] = std::move(arr);
    }
    return j.dump();
}

std::string mu2_report_to_json(const Mu2Report& r) {
    nlohmann::json j;
    j["k"] = r.k;
    j["delta"] = r.delta;
    j["mu2"] = round_sig(r.mu2);
    j["condition1"] = r.condition1;
    j["condition2"] = r.condition2;
    if (r.failing_vertex >= 0) j["failing_vertex"] = r.failing_vertex;
    j["condition3"] = r.condition3;
    if (r.failing_pair.first >= 0) j["failing_pair"] = {r.failing_pair.first, r.failing_pair.second};
    j["corollary_holds"] = r.corollary_holds;
    j["packed_k_rigid"] = r.packed_k_rigid;
    j["implication_ok"] = r.implication_ok;
    return j.dump();
}

} // namespace specrig
