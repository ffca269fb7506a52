#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "subsum/abelian.hpp"
#include "subsum/graph.hpp"

namespace subsum {

/**
 * Exact eigenvalue: either an integer or the signed root of x^2 - T x - C.
 * The quadratic form is kept symbolic so spectra stay exact; numeric
 * comparison happens only against the iterative eigensolver.
 */
struct Eigenvalue {
    bool quadratic = false;
    long long value = 0;     // integer case
    long long T = 0, C = 0;  // quadratic case: root of x^2 - T x - C
    int sign = +1;           // +1 / -1 branch of the quadratic

    static Eigenvalue integer(long long v) { return {false, v, 0, 0, +1}; }
    static Eigenvalue root(long long T, long long C, int sign) { return {true, 0, T, C, sign}; }
    double to_double() const;
    bool operator==(const Eigenvalue&) const = default;
};

/** Spectrum as (eigenvalue, multiplicity) pairs in ascending numeric order. */
struct SpectrumSpec {
    std::vector<std::pair<Eigenvalue, long long>> entries;

    long long total_multiplicity() const;
    std::vector<double> expand() const;  // ascending, one entry per multiplicity
};

struct CliqueNumbers {
    long long clique = 0;
    long long independence = 0;
    long long chromatic = 0;
    long long clique_cover = 0;
    bool operator==(const CliqueNumbers&) const = default;
};

struct GraphPrediction {
    long long component_count = 0;
    std::vector<ComponentProfile> profiles;  // sorted multiset
    CliqueNumbers numbers;
    std::optional<long long> girth;  // nullopt = infinite
    bool connected = false;
    long long domination = 0;
    SpectrumSpec spectrum;
};

struct ComplementPrediction {
    bool connected = false;
    std::optional<long long> diameter;    // nullopt = infinite
    std::optional<long long> radius;      // nullopt = infinite
    std::optional<long long> domination;  // nullopt = undefined for H = G
};

struct InvariantReport {
    GraphPrediction extended, sum;
    ComplementPrediction extended_complement, sum_complement;
};

/**
 * Component census of the extended and plain sum graphs from the coset
 * counts alone: per type-1 pair one K_{k,k} (minus a perfect matching in the
 * plain graph), per type-2/3 coset one K_k (minus a perfect matching for
 * type 2, minus (k - sH)/2 edges for type 3). Profiles are emitted in the
 * same degenerate forms the adjacency-based recognizer produces, so the two
 * multisets compare bit for bit even for k <= 2.
 */
std::pair<std::vector<ComponentProfile>, std::vector<ComponentProfile>>
predict_components(const CosetStats& st);

/** Component counts (extended, sum) implied by predict_components. */
std::pair<long long, long long> predict_component_counts(const CosetStats& st);

/** Clique/independence/chromatic/cover numbers for (extended, sum). */
std::pair<CliqueNumbers, CliqueNumbers> predict_clique_independence(const CosetStats& st);

/**
 * Shared evaluator behind predict_clique_independence and predict_prime_sum:
 * takes the coset counts and maximizes/sums over component shapes.
 */
std::pair<CliqueNumbers, CliqueNumbers> clique_numbers_from_counts(long long k, long long m1,
                                                                   long long m2, long long m3,
                                                                   long long sH);

/** Girths of (extended, sum); nullopt = acyclic. */
std::pair<std::optional<long long>, std::optional<long long>> predict_girth(const CosetStats& st);

struct ConnectivityPrediction {
    bool extended_connected = false;
    bool sum_connected = false;
    ComplementPrediction extended_complement, sum_complement;  // domination left unset
};
ConnectivityPrediction predict_connectivity_diameter(const CosetStats& st);

struct DominationPrediction {
    long long extended = 0;
    long long sum = 0;
    // Complement domination follows the isolated-vertex rule and is only
    // defined for H < G; requesting it for H = G yields nullopt.
    std::optional<long long> extended_complement, sum_complement;
};
DominationPrediction predict_domination(const CosetStats& st);

/** Exact spectra of (extended, sum), assembled per component shape. */
std::pair<SpectrumSpec, SpectrumSpec> predict_spectrum(const CosetStats& st);

/** Everything above in one report. */
InvariantReport closed_report(const CosetStats& st);

/**
 * Specialization to H = pG computed from the cyclic factor list alone,
 * without enumerating cosets:
 *   odd p: r = #factors with order divisible by p, q = #factors of even
 *          order; m1 = p^r - 1, m2 = 0, m3 = 1, sH = 2^q.
 *   p = 2: r = #factors of even order, q = #factors whose 2-part is exactly
 *          2; m1 = 0, m2 = 2^r - 2^q, m3 = 2^q, sH = 2^(r-q).
 * r = 0 degenerates to the H = G case.
 */
struct PrimeSumReport {
    long long p = 0;
    long long k = 0, r = 0, q = 0;
    long long m1 = 0, m2 = 0, m3 = 0;
    long long sH = 0;
    CliqueNumbers extended, sum;
    bool subgroup_is_whole_group = false;  // p does not divide |G|
};
PrimeSumReport predict_prime_sum(const Group& g, long long p);

}  // namespace subsum
