#pragma once

#include <optional>

#include "subsum/graph.hpp"

namespace subsum {

/**
 * Parameters of a pair (G, H) that are readable off the bare graph. The
 * graphs do not determine G and H up to isomorphism — only these numbers.
 */
struct RecoveredParams {
    long long order_G = 0;
    long long k = 0;    // |H|
    long long sGH = 0;  // number of cosets whose double lies in H (= m2+m3)
    // Recoverable from the plain sum graph only:
    std::optional<long long> m2, m3, sH, sG;
};

/**
 * Reads an extended sum graph: every component must be complete of a common
 * size k or complete bipartite K_{k,k}, with at least one complete component
 * (the coset H always contributes one). Throws ReconstructError when no k
 * fits and AmbiguityError when several k fit.
 */
RecoveredParams analyze_extended(const Graph& gr);

/**
 * Reads a plain sum graph with k >= 3: size-k components split into perfect
 * cocktail parties (matching k/2 deleted -> m2) and deficient ones (matching
 * (k-sH)/2 deleted -> m3, all sharing one sH); K_{k,k}-minus-perfect-matching
 * components count the paired cosets. Graphs whose components all have at
 * most two vertices are ambiguous (k could be 1 or 2) and raise
 * AmbiguityError.
 */
RecoveredParams analyze_subgroup_sum(const Graph& gr);

}  // namespace subsum
