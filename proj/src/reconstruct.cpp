#include "subsum/reconstruct.hpp"

#include <algorithm>
#include <set>

#include "subsum/errors.hpp"

namespace subsum {

namespace {

bool is_complete(const Graph& gr, const std::vector<int>& comp) {
    for (std::size_t i = 0; i < comp.size(); ++i)
        for (std::size_t j = i + 1; j < comp.size(); ++j)
            if (!gr.has_edge(comp[i], comp[j])) return false;
    return true;
}

/** Complete bipartite with two parts of size comp.size()/2, nothing missing. */
bool is_balanced_complete_bipartite(const Graph& gr, const std::vector<int>& comp) {
    if (comp.size() % 2 != 0) return false;
    const int half = static_cast<int>(comp.size()) / 2;
    // Vertices sharing a side are exactly the non-neighbors of comp[0].
    std::vector<int> side0{comp[0]}, side1;
    for (std::size_t i = 1; i < comp.size(); ++i)
        (gr.has_edge(comp[0], comp[i]) ? side1 : side0).push_back(comp[i]);
    if (static_cast<int>(side0.size()) != half) return false;
    for (int u : side0)
        for (int v : side1)
            if (!gr.has_edge(u, v)) return false;
    for (std::size_t i = 0; i < side0.size(); ++i)
        for (std::size_t j = i + 1; j < side0.size(); ++j)
            if (gr.has_edge(side0[i], side0[j])) return false;
    for (std::size_t i = 0; i < side1.size(); ++i)
        for (std::size_t j = i + 1; j < side1.size(); ++j)
            if (gr.has_edge(side1[i], side1[j])) return false;
    return true;
}

}  // namespace

RecoveredParams analyze_extended(const Graph& gr) {
    auto comps = connected_components(gr);

    std::set<long long> sizes;
    for (const auto& c : comps) sizes.insert(static_cast<long long>(c.size()));
    std::set<long long> candidates;
    for (long long s : sizes) {
        candidates.insert(s);
        if (s % 2 == 0) candidates.insert(s / 2);
    }

    std::vector<long long> shape_valid, valid;
    long long valid_sGH = 0;
    for (long long k : candidates) {
        long long complete_count = 0;
        bool ok = true;
        for (const auto& c : comps) {
            long long sz = static_cast<long long>(c.size());
            if (sz == k && is_complete(gr, c)) {
                ++complete_count;
            } else if (sz == 2 * k && is_balanced_complete_bipartite(gr, c)) {
                // a paired coset
            } else {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        shape_valid.push_back(k);
        // The coset H itself always shows up as a complete component, so the
        // reading with one present wins.
        if (complete_count >= 1) {
            valid.push_back(k);
            valid_sGH = complete_count;
        }
    }

    if (shape_valid.empty())
        throw ReconstructError(
            "components are not complete/complete-bipartite of a common size: "
            "not an extended sum graph");
    if (valid.empty())
        throw AmbiguityError(
            "no reading leaves a complete component for the coset H itself", shape_valid);
    if (valid.size() > 1)
        throw AmbiguityError("several subgroup orders fit the component structure", valid);

    RecoveredParams rec;
    rec.order_G = gr.n;
    rec.k = valid[0];
    rec.sGH = valid_sGH;
    return rec;
}

RecoveredParams analyze_subgroup_sum(const Graph& gr) {
    auto comps = components_with_profiles(gr);

    long long max_size = 0;
    for (const auto& c : comps)
        max_size = std::max(max_size, static_cast<long long>(c.vertices.size()));
    if (max_size <= 2)
        throw AmbiguityError(
            "all components have at most two vertices; |H| could be 1 or 2", {1, 2});

    long long k = 0;
    for (const auto& c : comps) {
        if (!c.profile)
            throw ReconstructError("unstructured component: not a subgroup sum graph");
        long long comp_k = c.profile->k;  // vertex count or part size
        k = std::max(k, comp_k);
    }

    long long m2 = 0, m3 = 0;
    std::set<int> deficient_matchings;
    for (const auto& c : comps) {
        const ComponentProfile& p = *c.profile;
        if (p.kind == ProfileKind::CompleteBipartiteMinusMatching) {
            if (p.k != k || p.matching_size != p.k)
                throw ReconstructError(
                    "bipartite component does not match K_{k,k} minus a perfect matching");
        } else {
            if (p.k != k)
                throw ReconstructError("complete-minus-matching components differ in size");
            if (2 * p.matching_size == k) {
                ++m2;  // perfect matching deleted: a Type 2 coset
            } else {
                ++m3;  // deficient matching: a Type 3 coset
                deficient_matchings.insert(p.matching_size);
            }
        }
    }

    if (m3 == 0)
        throw ReconstructError("no deficient complete component: the coset H is missing");
    if (deficient_matchings.size() > 1)
        throw ReconstructError("type 3 components disagree on the deleted matching size");

    RecoveredParams rec;
    rec.order_G = gr.n;
    rec.k = k;
    rec.m2 = m2;
    rec.m3 = m3;
    rec.sH = k - 2 * *deficient_matchings.begin();
    rec.sG = m3 * *rec.sH;
    rec.sGH = m2 + m3;
    return rec;
}

}  // namespace subsum
