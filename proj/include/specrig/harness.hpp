#ifndef SPECRIG_HARNESS_HPP
#define SPECRIG_HARNESS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "specrig/extremal.hpp"
#include "specrig/graph.hpp"

namespace specrig {

struct RunConfig {
    double tolerance = 1e-10; // eigensolver residual target
    double margin = 1e-8;     // decision margin between two spectral radii
    long rejection_cap = 10000;
    long class_budget = 100000;
    long pair_budget = 2000; // vertex-pair deletions per condition scan
    int threads = 0;         // 0 = OpenMP default

    void validate() const; // tolerance > 0, margin >= tolerance
};

enum class Trichotomy { above, below, indistinguishable };
enum class Verdict { consistent, counterexample, vacuous, indeterminate };

const char* to_string(Trichotomy t);
const char* to_string(Verdict v);

// Outcome of checking one graph against the spectral threshold: does
// lambda1 >= lambda1(extremal graph) force the packing, with the extremal
// graph itself as the only escape? Equality of graphs is decided up to
// isomorphism; the labeled comparison is reported alongside.
struct VerificationRecord {
    std::string graph6;
    ExtremalParams params;
    double lambda1;
    double threshold; // lambda1 of the extremal graph for params
    Trichotomy above_threshold;
    bool packed;
    bool is_extremal_iso;
    bool is_extremal_labeled;
    Verdict verdict;
};

// Requires n(g) = p.n, min degree exactly p.delta, and delta >= 6.
VerificationRecord verify_threshold_packing(const Graph& g, const ExtremalParams& p,
                                            const RunConfig& cfg = {});

struct ClassEntry {
    long index;
    double lambda1;
    bool extremal_iso;
};

struct ClassSweep {
    ExtremalParams params;
    long labeled_count;
    double extremal_lambda1;   // maximum over members isomorphic to the extremal graph
    double best_other_lambda1; // maximum over the rest; -inf when the class collapses
    double separation;         // extremal_lambda1 - best_other_lambda1
    bool unique_maximizer;     // maximum attained only on the extremal class, beyond margin
    bool separation_indistinguishable;
    std::vector<ClassEntry> ranking; // descending lambda1, ties by index
};

// Sweeps the whole labeled class: spectral radius of every member, the
// unique-maximizer verdict, and the full ranking.
ClassSweep sweep_extremal_class(const ExtremalParams& p, bool dedup = false,
                                const RunConfig& cfg = {});

// The three algebraic-connectivity conditions implying k edge-disjoint
// spanning rigid subgraphs, checked on the graph, all single-vertex
// deletions, and all pair deletions, plus the single-inequality corollary.
struct Mu2Report {
    int k;
    int delta;
    double mu2;
    bool condition1;
    bool condition2;
    int failing_vertex; // first vertex violating condition 2, else -1
    bool condition3;
    std::pair<int, int> failing_pair; // first pair violating condition 3, else (-1,-1)
    bool corollary_holds;             // mu2 > 2 + (2k-1)/(delta-1)
    bool packed_k_rigid;
    bool implication_ok; // conditions 1-3 all holding forces packed_k_rigid
};

// Requires min degree >= 6k and n >= 4.
Mu2Report check_mu2_conditions(const Graph& g, int k, const RunConfig& cfg = {});

// Random graphs with n = p.n and min degree exactly p.delta (binomial model,
// density swept upward under rejection), each run through
// verify_threshold_packing. Byte-identical output under a fixed seed.
std::vector<VerificationRecord> sample_and_verify(const ExtremalParams& p, long trials,
                                                  std::uint64_t seed, const RunConfig& cfg = {});

// JSON-lines serialization of the report stream plus the summary document.
std::string record_to_json(const VerificationRecord& r);
std::string records_summary_json(const std::vector<VerificationRecord>& rs);
std::string sweep_to_json(const ClassSweep& s, bool include_ranking = false);
std::string mu2_report_to_json(const Mu2Report& r);

} // namespace specrig

#endif
