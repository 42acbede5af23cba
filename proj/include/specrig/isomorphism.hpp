#ifndef SPECRIG_ISOMORPHISM_HPP
#define SPECRIG_ISOMORPHISM_HPP

#include <cstdint>
#include <vector>

#include "specrig/graph.hpp"

namespace specrig {

// Order-prefixed packed upper triangle of the adjacency matrix under the
// canonical vertex order. Equal forms <=> isomorphic graphs.
using CanonicalForm = std::vector<std::uint64_t>;

// Canonical labeling by iterated neighborhood refinement with backtracking,
// minimizing the adjacency bit string. Branches are pruned to one
// representative per twin class (vertices with equal open or closed
// neighborhoods are interchangeable). Capped at n <= 32; throws budget_error.
CanonicalForm canonical_form(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

} // namespace specrig

#endif
