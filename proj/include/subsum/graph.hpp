#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subsum/abelian.hpp"
#include "subsum/bitset.hpp"

namespace subsum {

/** Simple undirected graph on vertices 0..n-1 with bitset adjacency rows. */
struct Graph {
    int n = 0;
    std::vector<Bitset> adj;
    std::vector<Element> labels;  // group element per vertex; empty when unlabeled

    Graph() = default;
    explicit Graph(int n_) : n(n_), adj(n_, Bitset(n_)) {}

    void add_edge(int u, int v) {
        adj[u].set(v);
        adj[v].set(u);
    }
    bool has_edge(int u, int v) const { return adj[u].test(v); }
    int degree(int v) const { return adj[v].count(); }
    long long edge_count() const;
    /** Edges as (u, v) with u < v, lexicographically sorted. */
    std::vector<std::pair<int, int>> edge_list() const;
};

/** Extended subgroup sum graph: x ~ y iff x + y lies in H. */
Graph build_extended(const Group& g, const Subgroup& h);

/** Subgroup sum graph: x ~ y iff x + y lies in H \ {0}. */
Graph build_subgroup_sum(const Group& g, const Subgroup& h);

/**
 * Generalized sum graph: x ~ y iff x + y lies in H \ K. K is replaced by
 * H (intersect) K first, so only the part of K inside H matters.
 */
Graph build_generalized(const Group& g, const Subgroup& h, const Subgroup& k);

Graph complement(const Graph& gr);

/**
 * Shape of one connected component:
 *   CompleteMinusMatching          K_k minus a matching of matching_size edges
 *                                  (k = vertex count; matching_size = 0 means K_k),
 *   CompleteBipartiteMinusMatching K_{k,k} minus a perfect matching or nothing
 *                                  (k = part size; matching_size is 0 or k).
 * When both shapes fit (single edges, 4-cycles) the complete form is used.
 */
enum class ProfileKind { CompleteMinusMatching, CompleteBipartiteMinusMatching };

struct ComponentProfile {
    ProfileKind kind;
    int k;
    int matching_size;
    auto operator<=>(const ComponentProfile&) const = default;
};

struct Component {
    std::vector<int> vertices;                // ascending
    std::optional<ComponentProfile> profile;  // nullopt = unstructured
};

std::vector<std::vector<int>> connected_components(const Graph& gr);
std::vector<Component> components_with_profiles(const Graph& gr);

/** "K4-1" for K4 minus one matching edge, "K3,3-3" for K_{3,3} minus a perfect matching. */
std::string profile_to_string(const ComponentProfile& p);
std::string profile_to_string(const std::optional<ComponentProfile>& p);

/** Sorted multiset of the component profiles (unstructured entries last). */
std::vector<std::optional<ComponentProfile>> profile_multiset(const std::vector<Component>& comps);

}  // namespace subsum
