#include "subsum/graph.hpp"

#include <algorithm>
#include <queue>

namespace subsum {

long long Graph::edge_count() const {
    long long deg = 0;
    for (const auto& row : adj) deg += row.count();
    return deg / 2;
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = adj[u].find_next(u + 1); v >= 0; v = adj[u].find_next(v + 1))
            edges.emplace_back(u, v);
    return edges;  // outer loop ascending in u, inner in v
}

namespace {

std::vector<Element> all_elements(const Group& g) {
    std::vector<Element> coords;
    coords.reserve(g.order());
    for (long long i = 0; i < g.order(); ++i) coords.push_back(g.element_at(i));
    return coords;
}

void check_parent(const Group& g, const Subgroup& h) {
    if (!(h.group == g)) throw InvalidSubgroupError("subgroup belongs to a different group");
}

// x ~ y iff x+y is accepted; the predicate sees the index of x+y.
template <typename Accept>
Graph build_sum_graph(const Group& g, Accept accept) {
    Graph gr(static_cast<int>(g.order()));
    gr.labels = all_elements(g);
    for (int x = 0; x < gr.n; ++x)
        for (int y = x + 1; y < gr.n; ++y)
            if (accept(g.index_of(g.add(gr.labels[x], gr.labels[y])))) gr.add_edge(x, y);
    return gr;
}

}  // namespace

Graph build_extended(const Group& g, const Subgroup& h) {
    check_parent(g, h);
    return build_sum_graph(g, [&](long long s) { return h.contains(s); });
}

Graph build_subgroup_sum(const Group& g, const Subgroup& h) {
    check_parent(g, h);
    return build_sum_graph(g, [&](long long s) { return s != 0 && h.contains(s); });
}

Graph build_generalized(const Group& g, const Subgroup& h, const Subgroup& k) {
    check_parent(g, h);
    check_parent(g, k);
    Bitset excluded = h.membership;  // H intersect K
    excluded &= k.membership;
    return build_sum_graph(g, [&](long long s) {
        return h.contains(s) && !excluded.test(static_cast<int>(s));
    });
}

Graph complement(const Graph& gr) {
    Graph c(gr.n);
    c.labels = gr.labels;
    for (int u = 0; u < gr.n; ++u)
        for (int v = u + 1; v < gr.n; ++v)
            if (!gr.has_edge(u, v)) c.add_edge(u, v);
    return c;
}

std::vector<std::vector<int>> connected_components(const Graph& gr) {
    std::vector<std::vector<int>> comps;
    Bitset seen(gr.n);
    for (int s = 0; s < gr.n; ++s) {
        if (seen.test(s)) continue;
        std::vector<int> comp{s};
        seen.set(s);
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v = gr.adj[u].find_first(); v >= 0; v = gr.adj[u].find_next(v + 1))
                if (!seen.test(v)) {
                    seen.set(v);
                    comp.push_back(v);
                    q.push(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

namespace {

std::optional<ComponentProfile> recognize(const Graph& gr, const std::vector<int>& comp) {
    const int sz = static_cast<int>(comp.size());
    Bitset inside(gr.n);
    for (int v : comp) inside.set(v);

    // complete minus a matching: every vertex misses at most one other
    bool cmm = true;
    int missing = 0;
    for (int v : comp) {
        int miss = sz - 1 - (gr.adj[v] & inside).count();
        if (miss > 1) {
            cmm = false;
            break;
        }
        missing += miss;
    }
    if (cmm)
        return ComponentProfile{ProfileKind::CompleteMinusMatching, sz, missing / 2};

    // complete bipartite with equal parts, minus a perfect matching or nothing
    std::vector<int> side(gr.n, -1);
    std::vector<int> order{comp[0]};
    side[comp[0]] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        int u = order[i];
        for (int v = gr.adj[u].find_first(); v >= 0; v = gr.adj[u].find_next(v + 1)) {
            if (side[v] < 0) {
                side[v] = 1 - side[u];
                order.push_back(v);
            } else if (side[v] == side[u]) {
                return std::nullopt;  // odd cycle
            }
        }
    }
    int part0 = 0;
    for (int v : comp) part0 += side[v] == 0;
    if (2 * part0 != sz) return std::nullopt;

    int per_vertex_missing = -1;
    for (int v : comp) {
        int cross_missing = part0 - (gr.adj[v] & inside).count();
        if (per_vertex_missing < 0) per_vertex_missing = cross_missing;
        if (cross_missing != per_vertex_missing || cross_missing > 1) return std::nullopt;
    }
    return ComponentProfile{ProfileKind::CompleteBipartiteMinusMatching, part0,
                            per_vertex_missing == 1 ? part0 : 0};
}

}  // namespace

std::vector<Component> components_with_profiles(const Graph& gr) {
    std::vector<Component> out;
    for (auto& comp : connected_components(gr)) {
        Component c;
        c.profile = recognize(gr, comp);
        c.vertices = std::move(comp);
        out.push_back(std::move(c));
    }
    return out;
}

std::string profile_to_string(const ComponentProfile& p) {
    std::string s = "K" + std::to_string(p.k);
    if (p.kind == ProfileKind::CompleteBipartiteMinusMatching)
        s += "," + std::to_string(p.k);
    return s + "-" + std::to_string(p.matching_size);
}

std::string profile_to_string(const std::optional<ComponentProfile>& p) {
    return p ? profile_to_string(*p) : "unstructured";
}

std::vector<std::optional<ComponentProfile>> profile_multiset(const std::vector<Component>& comps) {
    std::vector<std::optional<ComponentProfile>> ms;
    ms.reserve(comps.size());
    for (const auto& c : comps) ms.push_back(c.profile);
    std::sort(ms.begin(), ms.end(), [](const auto& a, const auto& b) {
        if (a.has_value() != b.has_value()) return a.has_value();
        if (!a) return false;
        return *a < *b;
    });
    return ms;
}

}  // namespace subsum
