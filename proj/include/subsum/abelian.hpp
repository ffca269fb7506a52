#pragma once

#include <string>
#include <vector>

#include "subsum/bitset.hpp"
#include "subsum/errors.hpp"

namespace subsum {

/** Element of a direct product of cyclic groups, one residue per factor. */
using Element = std::vector<int>;

/**
 * Finite abelian group presented as Z_{n1} x ... x Z_{nd}.
 *
 * Factors of order 1 are dropped on construction; the trivial group keeps a
 * single factor of order 1 so that every group has at least one coordinate.
 * Elements are addressed both as coordinate vectors and as mixed-radix
 * indices in [0, |G|), with the first coordinate most significant.
 */
class Group {
public:
    explicit Group(std::vector<int> orders);

    const std::vector<int>& orders() const { return orders_; }
    long long order() const { return order_; }
    int rank() const { return static_cast<int>(orders_.size()); }
    long long exponent() const;

    Element zero() const { return Element(orders_.size(), 0); }
    Element element_at(long long index) const;
    long long index_of(const Element& e) const;

    Element add(const Element& x, const Element& y) const;
    Element neg(const Element& x) const;
    /** n*x computed coordinatewise with the scalar reduced mod each order. */
    Element scalar(long long n, const Element& x) const;

    bool operator==(const Group& o) const { return orders_ == o.orders_; }

private:
    void check(const Element& e) const;

    std::vector<int> orders_;
    std::vector<long long> weight_;  // mixed-radix place values
    long long order_ = 1;
};

/**
 * Subgroup given by its member set inside a parent group. `members` is the
 * ascending list of element indices and `membership` the same set as a bitset.
 */
struct Subgroup {
    Group group;
    std::vector<long long> members;
    Bitset membership;

    long long size() const { return static_cast<long long>(members.size()); }
    bool contains(long long index) const { return membership.test(static_cast<int>(index)); }
    bool operator==(const Subgroup& o) const { return group == o.group && members == o.members; }
};

/** Builds a subgroup from a membership bitset, verifying closure. */
Subgroup subgroup_from_members(const Group& g, const Bitset& membership);

/** nG = { n*t : t in G }. Requires n >= 1. */
Subgroup subgroup_nG(const Group& g, long long n);

/** Smallest subgroup containing all generators (breadth-first closure). */
Subgroup subgroup_generated(const Group& g, const std::vector<Element>& gens);

Subgroup subgroup_zero(const Group& g);
Subgroup subgroup_full(const Group& g);

/** Number of solutions of 2x = 0; checked against the 2^(#even factors) formula. */
long long involution_count(const Group& g);
/** Number of solutions of 2x = 0 lying in `within`. */
long long involution_count(const Group& g, const Subgroup& within);

/**
 * Census of the cosets of H in G, split by how a coset H+a meets the
 * equation 2x = 0:
 *   type 1:  2a not in H,
 *   type 2:  2a in H but no x in H+a has 2x = 0,
 *   type 3:  some x in H+a has 2x = 0 (H itself is always type 3).
 */
struct CosetRep {
    Element rep;  // least-index element of the coset
    int type;     // 1, 2 or 3
};

struct CosetStats {
    long long n = 0;  // |G|
    long long k = 0;  // |H|
    long long m = 0;  // index [G:H]
    long long m1 = 0, m2 = 0, m3 = 0;
    long long sG = 0;   // solutions of 2x = 0 in G
    long long sH = 0;   // solutions of 2x = 0 in H
    long long sGH = 0;  // solutions of 2x = 0 in G/H
    std::vector<CosetRep> coset_reps;
};

/**
 * Classifies every coset of h in g. Validates that h really is a subgroup of
 * g (closure under addition and negation), and cross-checks the counting
 * identities m1+m2+m3 = m, m2+m3 = sGH, m3*sH = sG before returning.
 */
CosetStats classify_cosets(const Group& g, const Subgroup& h);

// --- literals -------------------------------------------------------------

/** "4,2,9" -> Z4 x Z2 x Z9. */
Group parse_group_literal(const std::string& text);

/**
 * Subgroup literal: "n:<int>" for nG, "gens:(a,b);(c,d)" for a generated
 * subgroup, "full" for G, "zero" for {0}.
 */
Subgroup parse_subgroup_literal(const std::string& text, const Group& g);

std::string format_group(const Group& g);
std::string format_element(const Element& e);

}  // namespace subsum
