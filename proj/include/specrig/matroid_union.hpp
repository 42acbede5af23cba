#ifndef SPECRIG_MATROID_UNION_HPP
#define SPECRIG_MATROID_UNION_HPP

#include <string>
#include <utility>
#include <vector>

#include "specrig/graph.hpp"
#include "specrig/rigidity.hpp"

namespace specrig {

// Rank of F in the circuit (graphic) matroid: n - c(F), where c counts
// components of the spanning subgraph G(F), isolated vertices included.
int circuit_rank(const EdgeSubset& f);

// Partial assignment of edges to slots. Slots 0..k-1 hold rigid-matroid
// independent sets, slots k..k+ell-1 hold forests; slots are pairwise
// disjoint and their total size equals the union rank achieved so far.
struct UnionLabeling {
    int k = 0;
    int ell = 0;
    std::vector<int> slot_of;            // edge id -> slot, -1 if unassigned
    std::vector<std::vector<int>> slots; // ascending edge ids per slot
};

// Rank of E in the union of k rigidity and ell circuit matroids, with a
// labeling achieving it. Augmenting paths in the exchange digraph over the
// two oracle families; BFS with lowest-index tie-breaking.
std::pair<int, UnionLabeling> union_rank(const Graph& g, int k, int ell);

struct PackingCertificate {
    enum class Verdict { packed, refuted };
    Verdict verdict;
    Graph host;
    int k;
    int ell;
    int union_rank;
    std::vector<std::vector<int>> rigid_slots; // ascending edge ids
    std::vector<std::vector<int>> tree_slots;
    std::vector<int> witness; // meaningful iff refuted; may be empty
};

// packed iff the union rank reaches k(2n-3) + ell(n-1); then the rigid
// slots are spanning minimally rigid subgraphs and the tree slots spanning
// trees, all edge-disjoint. Otherwise refuted, with a witness F minimizing
// k*r_R(F) + ell*r_M(F) + |E-F| (the edges from which no augmenting path
// reaches a free slot).
PackingCertificate pack_rigid_and_trees(const Graph& g, int k, int ell);

// Maximum number of edge-disjoint spanning trees; 0 for disconnected input
// and, by convention, for n <= 1.
int tree_packing_number(const Graph& g);

// Re-checks certificate invariants from scratch using only the rank
// primitives: slot disjointness, per-slot spanning rigidity / spanning tree
// properties when packed, the strict witness deficiency when refuted.
bool verify_certificate(const PackingCertificate& c);

// Single-line JSON document: verdict, rank, sorted slot and witness arrays.
std::string certificate_to_json(const PackingCertificate& c);

} // namespace specrig

#endif
