#include "subsum/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <queue>

namespace subsum {

namespace {

/** Induced subgraph on a vertex subset, relabeled to 0..n-1. */
struct LocalGraph {
    int n = 0;
    std::vector<Bitset> adj;
};

LocalGraph induce(const Graph& gr, const std::vector<int>& verts) {
    LocalGraph lg;
    lg.n = static_cast<int>(verts.size());
    lg.adj.assign(lg.n, Bitset(lg.n));
    for (int i = 0; i < lg.n; ++i)
        for (int j = i + 1; j < lg.n; ++j)
            if (gr.has_edge(verts[i], verts[j])) {
                lg.adj[i].set(j);
                lg.adj[j].set(i);
            }
    return lg;
}

LocalGraph local_complement(const LocalGraph& lg) {
    LocalGraph c;
    c.n = lg.n;
    c.adj.assign(c.n, Bitset(c.n));
    for (int i = 0; i < lg.n; ++i)
        for (int j = i + 1; j < lg.n; ++j)
            if (!lg.adj[i].test(j)) {
                c.adj[i].set(j);
                c.adj[j].set(i);
            }
    return c;
}

// --- maximum clique (Tomita-style branch and bound) ------------------------

struct CliqueSolver {
    const LocalGraph& g;
    int best = 0;

    explicit CliqueSolver(const LocalGraph& g_) : g(g_) {}

    void expand(int rsize, Bitset cand) {
        if (cand.none()) {
            best = std::max(best, rsize);
            return;
        }
        // Greedy coloring of the candidates; a vertex of color c extends the
        // current clique to at most rsize + c.
        std::vector<int> order, color;
        Bitset uncolored = cand;
        int c = 0;
        while (uncolored.any()) {
            ++c;
            Bitset avail = uncolored;
            while (avail.any()) {
                int v = avail.find_first();
                order.push_back(v);
                color.push_back(c);
                uncolored.reset(v);
                avail.reset(v);
                avail.andnot(g.adj[v]);
            }
        }
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (rsize + color[i] <= best) return;
            int v = order[i];
            expand(rsize + 1, cand & g.adj[v]);
            cand.reset(v);
        }
    }

    int solve() {
        Bitset all(g.n);
        for (int v = 0; v < g.n; ++v) all.set(v);
        expand(0, all);
        return best;
    }
};

int local_clique(const LocalGraph& g) { return CliqueSolver(g).solve(); }

// --- exact chromatic number -------------------------------------------------

int dsatur_bound(const LocalGraph& g) {
    std::vector<int> color(g.n, -1);
    std::vector<Bitset> neighbor_colors;  // bit c set = color c used next door
    neighbor_colors.assign(g.n, Bitset(g.n + 1));
    int used = 0;
    for (int step = 0; step < g.n; ++step) {
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < g.n; ++v) {
            if (color[v] >= 0) continue;
            int sat = neighbor_colors[v].count();
            int deg = g.adj[v].count();
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        int c = 0;
        while (neighbor_colors[pick].test(c)) ++c;
        color[pick] = c;
        used = std::max(used, c + 1);
        for (int u = g.adj[pick].find_first(); u >= 0; u = g.adj[pick].find_next(u + 1))
            neighbor_colors[u].set(c);
    }
    return used;
}

struct ColorSolver {
    const LocalGraph& g;
    int k;
    std::vector<int> color;
    std::vector<Bitset> neighbor_colors;

    ColorSolver(const LocalGraph& g_, int k_)
        : g(g_), k(k_), color(g_.n, -1), neighbor_colors(g_.n, Bitset(k_)) {}

    bool solve(int assigned, int max_used) {
        if (assigned == g.n) return true;
        // most saturated uncolored vertex first
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < g.n; ++v) {
            if (color[v] >= 0) continue;
            int sat = neighbor_colors[v].count();
            int deg = g.adj[v].count();
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        if (pick_sat >= k) return false;
        // allowing at most one brand-new color breaks color symmetry
        int limit = std::min(k, max_used + 1);
        for (int c = 0; c < limit; ++c) {
            if (neighbor_colors[pick].test(c)) continue;
            color[pick] = c;
            std::vector<int> touched;
            for (int u = g.adj[pick].find_first(); u >= 0;
                 u = g.adj[pick].find_next(u + 1))
                if (color[u] < 0 && !neighbor_colors[u].test(c)) {
                    neighbor_colors[u].set(c);
                    touched.push_back(u);
                }
            if (solve(assigned + 1, std::max(max_used, c + 1))) return true;
            for (int u : touched) neighbor_colors[u].reset(c);
            color[pick] = -1;
        }
        return false;
    }
};

bool k_colorable(const LocalGraph& g, int k) {
    if (k >= g.n) return true;
    return ColorSolver(g, k).solve(0, 0);
}

int local_chromatic(const LocalGraph& g, int clique_lb) {
    int ub = dsatur_bound(g);
    for (int k = clique_lb; k < ub; ++k)
        if (k_colorable(g, k)) return k;
    return ub;
}

// --- domination -------------------------------------------------------------

struct DominationSolver {
    const LocalGraph& g;
    std::vector<Bitset> closed;  // N[v]
    int max_closed = 0;

    explicit DominationSolver(const LocalGraph& g_) : g(g_) {
        closed.reserve(g.n);
        for (int v = 0; v < g.n; ++v) {
            Bitset b = g.adj[v];
            b.set(v);
            max_closed = std::max(max_closed, b.count());
            closed.push_back(std::move(b));
        }
    }

    bool search(const Bitset& dominated, int budget) {
        int remaining = g.n - dominated.count();
        if (remaining == 0) return true;
        if (static_cast<long long>(budget) * max_closed < remaining) return false;
        // branch on the hardest undominated vertex: one of N[v] must be chosen
        int pick = -1, pick_opts = g.n + 1;
        for (int v = 0; v < g.n; ++v) {
            if (dominated.test(v)) continue;
            int opts = closed[v].count();
            if (opts < pick_opts) {
                pick = v;
                pick_opts = opts;
            }
        }
        for (int u = closed[pick].find_first(); u >= 0; u = closed[pick].find_next(u + 1)) {
            if (search(dominated | closed[u], budget - 1)) return true;
        }
        return false;
    }

    int solve() {
        for (int d = 0; d <= g.n; ++d)
            if (search(Bitset(g.n), d)) return d;
        return g.n;
    }
};

// --- induced odd holes -------------------------------------------------------

bool extend_hole(const Graph& gr, int len, std::vector<int>& path, Bitset& used) {
    int i = static_cast<int>(path.size());
    if (i == len) return true;
    int s = path[0], prev = path[i - 1];
    bool last = i == len - 1;
    for (int v = s + 1; v < gr.n; ++v) {
        if (used.test(v) || !gr.has_edge(prev, v)) continue;
        if (last && (!gr.has_edge(v, s) || v < path[1])) continue;
        if (!last && i >= 2 && gr.has_edge(v, s)) continue;
        bool chord = false;
        for (int j = 1; j + 1 < i; ++j)
            if (gr.has_edge(path[j], v)) {
                chord = true;
                break;
            }
        if (chord) continue;
        path.push_back(v);
        used.set(v);
        if (extend_hole(gr, len, path, used)) return true;
        used.reset(v);
        path.pop_back();
    }
    return false;
}

std::optional<std::vector<int>> find_odd_hole(const Graph& gr, int len) {
    for (int s = 0; s < gr.n; ++s) {
        std::vector<int> path{s};
        Bitset used(gr.n);
        used.set(s);
        if (extend_hole(gr, len, path, used)) return path;
    }
    return std::nullopt;
}

}  // namespace

// --- public entry points -----------------------------------------------------

long long oracle_clique(const Graph& gr) {
    long long best = 0;
    for (const auto& comp : connected_components(gr))
        best = std::max<long long>(best, local_clique(induce(gr, comp)));
    return best;
}

long long oracle_independence(const Graph& gr) {
    long long total = 0;
    for (const auto& comp : connected_components(gr))
        total += local_clique(local_complement(induce(gr, comp)));
    return total;
}

long long oracle_chromatic(const Graph& gr) {
    long long best = 0;
    for (const auto& comp : connected_components(gr)) {
        LocalGraph lg = induce(gr, comp);
        best = std::max<long long>(best, local_chromatic(lg, local_clique(lg)));
    }
    return best;
}

long long oracle_clique_cover(const Graph& gr) {
    long long total = 0;
    for (const auto& comp : connected_components(gr)) {
        LocalGraph c = local_complement(induce(gr, comp));
        total += local_chromatic(c, local_clique(c));
    }
    return total;
}

CliqueNumbers oracle_clique_numbers(const Graph& gr) {
    CliqueNumbers out;
    out.chromatic = 0;
    for (const auto& comp : connected_components(gr)) {
        LocalGraph lg = induce(gr, comp);
        LocalGraph co = local_complement(lg);
        int w = local_clique(lg);
        int a = local_clique(co);
        out.clique = std::max<long long>(out.clique, w);
        out.independence += a;
        out.chromatic = std::max<long long>(out.chromatic, local_chromatic(lg, w));
        out.clique_cover += local_chromatic(co, a);
    }
    return out;
}

std::optional<long long> oracle_girth(const Graph& gr) {
    long long best = -1;
    std::vector<long long> dist(gr.n);
    std::vector<int> parent(gr.n);
    for (int s = 0; s < gr.n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        parent[s] = -1;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v = gr.adj[u].find_first(); v >= 0; v = gr.adj[u].find_next(v + 1)) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    q.push(v);
                } else if (v != parent[u]) {
                    long long cyc = dist[u] + dist[v] + 1;
                    if (best < 0 || cyc < best) best = cyc;
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

Eccentricity oracle_eccentricity(const Graph& gr) {
    Eccentricity out;
    long long diam = 0, rad = -1;
    std::vector<long long> dist(gr.n);
    for (int s = 0; s < gr.n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        std::queue<int> q;
        q.push(s);
        long long ecc = 0;
        int reached = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v = gr.adj[u].find_first(); v >= 0; v = gr.adj[u].find_next(v + 1))
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    ecc = std::max(ecc, dist[v]);
                    ++reached;
                    q.push(v);
                }
        }
        if (reached < gr.n) return out;  // disconnected: everything stays infinite
        diam = std::max(diam, ecc);
        rad = rad < 0 ? ecc : std::min(rad, ecc);
    }
    out.connected = true;
    out.diameter = diam;
    out.radius = rad < 0 ? 0 : rad;
    return out;
}

long long oracle_domination(const Graph& gr) {
    long long total = 0;
    for (const auto& comp : connected_components(gr)) {
        LocalGraph lg = induce(gr, comp);
        total += DominationSolver(lg).solve();
    }
    return total;
}

std::vector<double> oracle_spectrum(const Graph& gr) {
    const int n = gr.n;
    std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
    for (int u = 0; u < n; ++u)
        for (int v = gr.adj[u].find_first(); v >= 0; v = gr.adj[u].find_next(v + 1))
            a[u][v] = 1.0;

    const double tol = 1e-10;
    bool converged = false;
    for (int sweep = 0; sweep < 100 && !converged; ++sweep) {
        double off = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
        if (std::sqrt(off) < tol) {
            converged = true;
            break;
        }
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                double apq = a[p][q];
                if (std::abs(apq) < 1e-300) continue;
                double theta = (a[q][q] - a[p][p]) / (2 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1), s = t * c;
                for (int i = 0; i < n; ++i) {
                    double aip = a[i][p], aiq = a[i][q];
                    a[i][p] = c * aip - s * aiq;
                    a[i][q] = s * aip + c * aiq;
                }
                for (int i = 0; i < n; ++i) {
                    double api = a[p][i], aqi = a[q][i];
                    a[p][i] = c * api - s * aqi;
                    a[q][i] = s * api + c * aqi;
                }
                a[p][q] = a[q][p] = 0.0;
            }
    }
    if (!converged && n > 0) {
        double off = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
        if (std::sqrt(off) >= tol)
            throw NumericError("eigensolver did not converge in 100 sweeps");
    }
    std::vector<double> eig(n);
    for (int i = 0; i < n; ++i) eig[i] = a[i][i];
    std::sort(eig.begin(), eig.end());
    return eig;
}

PerfectnessResult check_perfectness(const Graph& gr, int max_hole) {
    for (int len = 5; len <= max_hole; len += 2)
        if (auto hole = find_odd_hole(gr, len)) return {false, *hole, false};
    Graph co = complement(gr);
    for (int len = 5; len <= max_hole; len += 2)
        if (auto hole = find_odd_hole(co, len)) return {false, *hole, true};
    return {};
}

namespace {

OracleGraphReport graph_report(const Graph& gr) {
    OracleGraphReport rep;
    auto comps = components_with_profiles(gr);
    rep.component_count = static_cast<long long>(comps.size());
    rep.profiles = profile_multiset(comps);
    rep.numbers = oracle_clique_numbers(gr);
    rep.girth = oracle_girth(gr);
    auto ecc = oracle_eccentricity(gr);
    rep.connected = ecc.connected;
    rep.domination = oracle_domination(gr);
    rep.spectrum = oracle_spectrum(gr);
    return rep;
}

OracleComplementReport complement_report(const Graph& base, bool domination_defined) {
    OracleComplementReport rep;
    Graph co = complement(base);
    auto ecc = oracle_eccentricity(co);
    rep.connected = ecc.connected;
    rep.diameter = ecc.diameter;
    rep.radius = ecc.radius;
    if (domination_defined) rep.domination = oracle_domination(co);
    return rep;
}

}  // namespace

OracleReport oracle_report(const Graph& ext, const Graph& sum) {
    OracleReport rep;
    rep.extended = graph_report(ext);
    rep.sum = graph_report(sum);
    // H = G is visible as a complete extended graph; complement domination is
    // undefined there.
    bool whole = ext.edge_count() == static_cast<long long>(ext.n) * (ext.n - 1) / 2;
    rep.extended_complement = complement_report(ext, !whole);
    rep.sum_complement = complement_report(sum, !whole);
    return rep;
}

}  // namespace subsum
