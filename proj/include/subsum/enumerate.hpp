#pragma once

#include <string>
#include <vector>

#include "subsum/abelian.hpp"

namespace subsum {

/** Integer partitions of n, parts descending, in reverse lexicographic order. */
std::vector<std::vector<int>> partitions_of(int n);

/**
 * All abelian groups of order n up to isomorphism, one per multiset of
 * prime-power cyclic factors, factors sorted ascending. Deterministic order.
 */
std::vector<Group> abelian_groups_of_order(long long n);

/** All abelian groups with 1 <= order <= max_order, by order then shape. */
std::vector<Group> abelian_groups_up_to(long long max_order);

/** A subgroup together with the literal that reproduces it on the CLI. */
struct NamedSubgroup {
    Subgroup subgroup;
    std::string literal;
};

/** The subgroups nG for n = 1..|G|, deduplicated by membership. */
std::vector<NamedSubgroup> subgroups_nG_family(const Group& g);

/** The cyclic subgroups <a> for every a in G, deduplicated by membership. */
std::vector<NamedSubgroup> subgroups_single_generator_family(const Group& g);

/** Union of both families, deduplicated (nG literals win on overlap). */
std::vector<NamedSubgroup> subgroup_corpus(const Group& g);

}  // namespace subsum
