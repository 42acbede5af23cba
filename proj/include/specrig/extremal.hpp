#ifndef SPECRIG_EXTREMAL_HPP
#define SPECRIG_EXTREMAL_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "specrig/graph.hpp"

namespace specrig {

// Parameters of the extremal family: a dominating vertex joined to the
// disjoint union of a delta-clique and an (n-1-delta)-clique, plus k-1
// extra edges between the two cliques. ell is the derived tree count.
struct ExtremalParams {
    int n;
    int delta;
    int k;
    int ell; // floor((delta - 4k) / 2)

    ExtremalParams(int n, int delta, int k); // validates k>=1, delta>=4k, n>=3*delta
};

// Vertex layout of all family members: 0 = join vertex, 1..delta = small
// clique, delta+1..n-1 = large clique. Cross pairs are ordered (u asc, v asc).
std::vector<std::pair<int, int>> cross_pairs(const ExtremalParams& p);

// The distinguished member: vertex 1 carries all k-1 cross edges.
Graph build_extremal(const ExtremalParams& p);

// Number of labeled members, C(delta*(n-1-delta), k-1). Throws budget_error
// beyond `budget`.
long class_size(const ExtremalParams& p, long budget = 100000);

// The labeled member for one (k-1)-subset of cross pairs, subsets in
// lexicographic order. index in [0, class_size).
Graph class_member(const ExtremalParams& p, long index);

// All labeled members in index order; with dedup, one representative per
// isomorphism class (first index wins).
std::vector<Graph> enumerate_class(const ExtremalParams& p, bool dedup = false,
                                   long budget = 100000);

} // namespace specrig

#endif
