#include "subsum/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

namespace subsum {

double Eigenvalue::to_double() const {
    if (!quadratic) return static_cast<double>(value);
    double disc = static_cast<double>(T) * T + 4.0 * static_cast<double>(C);
    return (static_cast<double>(T) + sign * std::sqrt(disc)) / 2.0;
}

long long SpectrumSpec::total_multiplicity() const {
    long long t = 0;
    for (const auto& [ev, mult] : entries) t += mult;
    return t;
}

std::vector<double> SpectrumSpec::expand() const {
    std::vector<double> out;
    out.reserve(total_multiplicity());
    for (const auto& [ev, mult] : entries) {
        double v = ev.to_double();
        for (long long i = 0; i < mult; ++i) out.push_back(v);
    }
    return out;
}

namespace {

struct SpectrumBuilder {
    std::map<long long, long long> ints;
    std::vector<std::pair<Eigenvalue, long long>> quads;

    void add(long long value, long long mult) {
        if (mult > 0) ints[value] += mult;
    }
    void add_root(long long T, long long C, int sign, long long mult) {
        // x^2 - Tx - C has irrational roots for every shape emitted below
        // (the discriminant (k-1)^2 + 4 sH is a square only when sH = k,
        // which is handled as a plain complete graph), so quadratic entries
        // never collide with integer ones.
        if (mult <= 0) return;
        for (auto& [ev, m] : quads)
            if (ev.T == T && ev.C == C && ev.sign == sign) {
                m += mult;
                return;
            }
        quads.emplace_back(Eigenvalue::root(T, C, sign), mult);
    }

    SpectrumSpec finish() const {
        SpectrumSpec spec;
        for (const auto& [v, m] : ints) spec.entries.emplace_back(Eigenvalue::integer(v), m);
        spec.entries.insert(spec.entries.end(), quads.begin(), quads.end());
        std::sort(spec.entries.begin(), spec.entries.end(),
                  [](const auto& a, const auto& b) {
                      return a.first.to_double() < b.first.to_double();
                  });
        return spec;
    }
};

ComponentProfile cmm(long long k, long long matching) {
    return {ProfileKind::CompleteMinusMatching, static_cast<int>(k),
            static_cast<int>(matching)};
}

ComponentProfile cbmm(long long k, long long matching) {
    return {ProfileKind::CompleteBipartiteMinusMatching, static_cast<int>(k),
            static_cast<int>(matching)};
}

void emit(std::vector<ComponentProfile>& out, ComponentProfile p, long long copies) {
    for (long long i = 0; i < copies; ++i) out.push_back(p);
}

bool extended_has_edges(const CosetStats& st) { return st.k >= 2 || st.m1 > 0; }
bool sum_has_edges(const CosetStats& st) { return st.k >= 2; }

bool extended_has_isolated(const CosetStats& st) { return st.k == 1; }
bool sum_has_isolated(const CosetStats& st) {
    return st.k == 1 || (st.k == 2 && st.m2 > 0);
}

}  // namespace

std::pair<std::vector<ComponentProfile>, std::vector<ComponentProfile>>
predict_components(const CosetStats& st) {
    const long long k = st.k;
    std::vector<ComponentProfile> ext, sum;

    // Extended graph: K_{k,k} per type-1 coset pair, K_k per type-2/3 coset.
    if (st.m1 > 0) {
        if (k == 1) emit(ext, cmm(2, 0), st.m1 / 2);
        else if (k == 2) emit(ext, cmm(4, 2), st.m1 / 2);  // C_4 in canonical form
        else emit(ext, cbmm(k, 0), st.m1 / 2);
    }
    emit(ext, cmm(k, 0), st.m2 + st.m3);

    // Plain graph: the matched pairs x, -x lose their edges.
    if (st.m1 > 0) {
        if (k == 1) emit(sum, cmm(1, 0), st.m1);       // K_{1,1} minus its edge
        else if (k == 2) emit(sum, cmm(2, 0), st.m1);  // K_{2,2} minus a matching
        else emit(sum, cbmm(k, k), st.m1 / 2);
    }
    if (st.m2 > 0) {
        if (k == 2) emit(sum, cmm(1, 0), 2 * st.m2);  // K_2 minus its edge
        else emit(sum, cmm(k, k / 2), st.m2);
    }
    emit(sum, cmm(k, (k - st.sH) / 2), st.m3);

    std::sort(ext.begin(), ext.end());
    std::sort(sum.begin(), sum.end());
    return {std::move(ext), std::move(sum)};
}

std::pair<long long, long long> predict_component_counts(const CosetStats& st) {
    const long long k = st.k;
    long long ext = st.m1 / 2 + st.m2 + st.m3;
    long long sum = (st.m1 / 2) * (k <= 2 ? 2 : 1) + st.m2 * (k == 2 ? 2 : 1) + st.m3;
    return {ext, sum};
}

std::pair<CliqueNumbers, CliqueNumbers> clique_numbers_from_counts(long long k, long long m1,
                                                                   long long m2, long long m3,
                                                                   long long sH) {
    CliqueNumbers ext, sum;

    ext.clique = m1 > 0 ? std::max(k, 2LL) : k;
    ext.independence = k * (m1 / 2) + m2 + m3;

    sum.clique = (k + sH) / 2;
    sum.independence = (m1 / 2) * (k >= 2 ? k : 2) + 2 * m2 + m3 * (sH < k ? 2 : 1);

    // Both graphs are unions of complete, complete bipartite and
    // complete-minus-matching pieces, hence perfect.
    ext.chromatic = ext.clique;
    ext.clique_cover = ext.independence;
    sum.chromatic = sum.clique;
    sum.clique_cover = sum.independence;
    return {ext, sum};
}

std::pair<CliqueNumbers, CliqueNumbers> predict_clique_independence(const CosetStats& st) {
    return clique_numbers_from_counts(st.k, st.m1, st.m2, st.m3, st.sH);
}

std::pair<std::optional<long long>, std::optional<long long>> predict_girth(
    const CosetStats& st) {
    const long long k = st.k;

    std::optional<long long> ext;
    if (k >= 3) ext = 3;                     // triangle inside K_k
    else if (k == 2 && st.m1 > 0) ext = 4;   // 4-cycle K_{2,2}

    std::optional<long long> sum;
    if (k >= 4) sum = 3;                     // K_k keeps a triangle after the matching
    else if (k == 3 && st.m1 > 0) sum = 6;   // K_{3,3} minus a matching is C_6
    return {ext, sum};
}

ConnectivityPrediction predict_connectivity_diameter(const CosetStats& st) {
    ConnectivityPrediction out;
    out.extended_connected = st.m == 1;
    out.sum_connected = st.m == 1;

    auto complement_geometry = [&](bool base_has_edges, bool base_has_isolated) {
        ComplementPrediction c;
        if (st.m == 1) {
            // Base graph is connected; its complement splits apart except on
            // a single vertex.
            c.connected = st.n == 1;
            if (st.n == 1) {
                c.diameter = 0;
                c.radius = 0;
            }
            return c;
        }
        c.connected = true;
        c.diameter = base_has_edges ? 2 : 1;
        c.radius = base_has_isolated ? 1 : c.diameter;
        return c;
    };

    out.extended_complement =
        complement_geometry(extended_has_edges(st), extended_has_isolated(st));
    out.sum_complement = complement_geometry(sum_has_edges(st), sum_has_isolated(st));
    return out;
}

DominationPrediction predict_domination(const CosetStats& st) {
    DominationPrediction out;
    out.extended = st.k >= 2 ? st.m : st.m1 / 2 + st.m3;
    out.sum = st.m + st.m2;
    if (st.m > 1) {
        out.extended_complement = extended_has_isolated(st) ? 1 : 2;
        out.sum_complement = sum_has_isolated(st) ? 1 : 2;
    }
    return out;
}

std::pair<SpectrumSpec, SpectrumSpec> predict_spectrum(const CosetStats& st) {
    const long long k = st.k;

    SpectrumBuilder ext;
    if (st.m1 > 0) {
        long long pairs = st.m1 / 2;  // K_{k,k}: +-k once, 0 with multiplicity 2k-2
        ext.add(k, pairs);
        ext.add(-k, pairs);
        ext.add(0, (2 * k - 2) * pairs);
    }
    ext.add(k - 1, st.m2 + st.m3);  // K_k
    ext.add(-1, (k - 1) * (st.m2 + st.m3));

    SpectrumBuilder sum;
    if (st.m1 > 0) {
        long long pairs = st.m1 / 2;  // K_{k,k} minus a perfect matching
        sum.add(k - 1, pairs);
        sum.add(-(k - 1), pairs);
        sum.add(1, (k - 1) * pairs);
        sum.add(-1, (k - 1) * pairs);
    }
    if (st.m2 > 0) {  // K_k minus a perfect matching
        sum.add(k - 2, st.m2);
        sum.add(0, (k / 2) * st.m2);
        sum.add(-2, (k / 2 - 1) * st.m2);
    }
    {
        long long a = k - st.sH;  // matched vertices in a type-3 coset
        long long b = st.sH;      // full-degree vertices
        if (a == 0) {
            sum.add(k - 1, st.m3);
            sum.add(-1, (k - 1) * st.m3);
        } else {
            sum.add_root(k - 3, k + st.sH - 2, +1, st.m3);
            sum.add_root(k - 3, k + st.sH - 2, -1, st.m3);
            sum.add(0, (a / 2) * st.m3);
            sum.add(-2, (a / 2 - 1) * st.m3);
            sum.add(-1, (b - 1) * st.m3);
        }
    }
    return {ext.finish(), sum.finish()};
}

InvariantReport closed_report(const CosetStats& st) {
    InvariantReport rep;

    auto [ext_profiles, sum_profiles] = predict_components(st);
    auto [ext_count, sum_count] = predict_component_counts(st);
    auto [ext_numbers, sum_numbers] = predict_clique_independence(st);
    auto [ext_girth, sum_girth] = predict_girth(st);
    auto conn = predict_connectivity_diameter(st);
    auto dom = predict_domination(st);
    auto [ext_spec, sum_spec] = predict_spectrum(st);

    rep.extended.component_count = ext_count;
    rep.extended.profiles = std::move(ext_profiles);
    rep.extended.numbers = ext_numbers;
    rep.extended.girth = ext_girth;
    rep.extended.connected = conn.extended_connected;
    rep.extended.domination = dom.extended;
    rep.extended.spectrum = std::move(ext_spec);

    rep.sum.component_count = sum_count;
    rep.sum.profiles = std::move(sum_profiles);
    rep.sum.numbers = sum_numbers;
    rep.sum.girth = sum_girth;
    rep.sum.connected = conn.sum_connected;
    rep.sum.domination = dom.sum;
    rep.sum.spectrum = std::move(sum_spec);

    rep.extended_complement = conn.extended_complement;
    rep.extended_complement.domination = dom.extended_complement;
    rep.sum_complement = conn.sum_complement;
    rep.sum_complement.domination = dom.sum_complement;
    return rep;
}

PrimeSumReport predict_prime_sum(const Group& g, long long p) {
    if (p < 2) throw InvalidParameterError("p must be a prime");
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) throw InvalidParameterError("p must be a prime");

    PrimeSumReport rep;
    rep.p = p;
    if (p % 2 == 1) {
        for (int f : g.orders()) {
            if (f % p == 0) ++rep.r;
            if (f % 2 == 0) ++rep.q;
        }
        long long pr = 1;
        for (long long i = 0; i < rep.r; ++i) pr *= p;
        rep.k = g.order() / pr;
        rep.m1 = pr - 1;
        rep.m2 = 0;
        rep.m3 = 1;
        rep.sH = 1LL << rep.q;
    } else {
        for (int f : g.orders()) {
            if (f % 2 == 0) ++rep.r;
            if (f % 4 == 2) ++rep.q;
        }
        rep.k = g.order() >> rep.r;
        rep.m1 = 0;
        rep.m2 = (1LL << rep.r) - (1LL << rep.q);
        rep.m3 = 1LL << rep.q;
        rep.sH = 1LL << (rep.r - rep.q);
    }
    rep.subgroup_is_whole_group = rep.r == 0;
    std::tie(rep.extended, rep.sum) =
        clique_numbers_from_counts(rep.k, rep.m1, rep.m2, rep.m3, rep.sH);
    return rep;
}

}  // namespace subsum
