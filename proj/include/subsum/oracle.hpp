#pragma once

#include <optional>
#include <vector>

#include "subsum/closed_form.hpp"
#include "subsum/graph.hpp"

namespace subsum {

/**
 * Brute-force graph invariants. Everything in this header works from the
 * adjacency structure alone — no coset counting, no shape formulas — so the
 * results can be compared against the closed-form predictions.
 */

/** Maximum clique via branch and bound with a greedy-coloring bound. */
long long oracle_clique(const Graph& gr);

/** Maximum independent set (per-component clique search on the complement). */
long long oracle_independence(const Graph& gr);

/** Exact chromatic number (DSATUR upper bound + backtracking k-coloring). */
long long oracle_chromatic(const Graph& gr);

/** Minimum clique cover (chromatic number of per-component complements). */
long long oracle_clique_cover(const Graph& gr);

/** All four of the above in one pass over the components. */
CliqueNumbers oracle_clique_numbers(const Graph& gr);

/** Length of the shortest cycle; nullopt when the graph is acyclic. */
std::optional<long long> oracle_girth(const Graph& gr);

struct Eccentricity {
    bool connected = false;
    std::optional<long long> diameter;  // nullopt = infinite (disconnected)
    std::optional<long long> radius;
};
Eccentricity oracle_eccentricity(const Graph& gr);

/** Minimum dominating set size via per-component iterative deepening. */
long long oracle_domination(const Graph& gr);

/**
 * Adjacency spectrum in ascending order, computed with the cyclic Jacobi
 * method (tolerance 1e-10 on the off-diagonal norm, at most 100 sweeps;
 * NumericError if it fails to converge).
 */
std::vector<double> oracle_spectrum(const Graph& gr);

/**
 * Searches for an induced odd cycle of length 5..max_hole in the graph and
 * in its complement. Finding none certifies perfection for these families,
 * whose components are too small to hide longer holes.
 */
struct PerfectnessResult {
    bool perfect = true;
    std::vector<int> hole;  // vertices of an induced odd cycle when found
    bool hole_in_complement = false;
};
PerfectnessResult check_perfectness(const Graph& gr, int max_hole = 7);

struct OracleGraphReport {
    long long component_count = 0;
    std::vector<std::optional<ComponentProfile>> profiles;  // sorted multiset
    CliqueNumbers numbers;
    std::optional<long long> girth;
    bool connected = false;
    long long domination = 0;
    std::vector<double> spectrum;  // ascending
};

struct OracleComplementReport {
    bool connected = false;
    std::optional<long long> diameter;
    std::optional<long long> radius;
    // nullopt when the extended graph is complete (H = G), where complement
    // domination is left undefined.
    std::optional<long long> domination;
};

struct OracleReport {
    OracleGraphReport extended, sum;
    OracleComplementReport extended_complement, sum_complement;
};

/** Full brute-force counterpart of closed_report. */
OracleReport oracle_report(const Graph& ext, const Graph& sum);

}  // namespace subsum
