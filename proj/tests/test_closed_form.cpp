#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "subsum/closed_form.hpp"
#include "subsum/enumerate.hpp"

using namespace subsum;

namespace {

CosetStats stats_for(const Group& g, long long n) { return classify_cosets(g, subgroup_nG(g, n)); }

}  // namespace

TEST_CASE("component predictions for Z8 over 2Z8") {
    Group g({8});
    auto st = stats_for(g, 2);
    auto [ext, sum] = predict_components(st);
    REQUIRE(ext.size() == 2);
    CHECK(ext[0] == ComponentProfile{ProfileKind::CompleteMinusMatching, 4, 0});
    CHECK(ext[1] == ComponentProfile{ProfileKind::CompleteMinusMatching, 4, 0});
    REQUIRE(sum.size() == 2);
    CHECK(sum[0] == ComponentProfile{ProfileKind::CompleteMinusMatching, 4, 1});
    CHECK(sum[1] == ComponentProfile{ProfileKind::CompleteMinusMatching, 4, 2});

    auto [ce, cs] = predict_component_counts(st);
    CHECK(ce == 2);
    CHECK(cs == 2);
    CHECK(ce == (st.m + st.sGH) / 2);
}

TEST_CASE("component predictions for Z9 over 3Z9") {
    Group g({9});
    auto st = stats_for(g, 3);
    auto [ext, sum] = predict_components(st);
    REQUIRE(ext.size() == 2);
    CHECK(ext[0] == ComponentProfile{ProfileKind::CompleteMinusMatching, 3, 0});
    CHECK(ext[1] == ComponentProfile{ProfileKind::CompleteBipartiteMinusMatching, 3, 0});
    REQUIRE(sum.size() == 2);
    CHECK(sum[0] == ComponentProfile{ProfileKind::CompleteMinusMatching, 3, 1});
    CHECK(sum[1] == ComponentProfile{ProfileKind::CompleteBipartiteMinusMatching, 3, 3});
}

TEST_CASE("degenerate component shapes collapse to the recognizer's canon") {
    // k = 1 (H trivial in Z3): the type-1 pair joins into one K2, H gives K1
    Group z3({3});
    auto st = stats_for(z3, 3);
    CHECK(st.k == 1);
    auto [ext, sum] = predict_components(st);
    REQUIRE(ext.size() == 2);
    CHECK(ext[0] == ComponentProfile{ProfileKind::CompleteMinusMatching, 1, 0});
    CHECK(ext[1] == ComponentProfile{ProfileKind::CompleteMinusMatching, 2, 0});
    REQUIRE(sum.size() == 3);
    for (const auto& p : sum) CHECK(p == ComponentProfile{ProfileKind::CompleteMinusMatching, 1, 0});

    // k = 2 type-1 pair (Z8 over {0,4}): extended gives C4, plain two K2
    Group z8({8});
    auto st8 = stats_for(z8, 4);
    CHECK(st8.k == 2);
    CHECK(st8.m1 == 2);
    auto [e8, s8] = predict_components(st8);
    long long c4s = 0, k2s = 0;
    for (const auto& p : e8) {
        if (p == ComponentProfile{ProfileKind::CompleteMinusMatching, 4, 2}) ++c4s;
        if (p == ComponentProfile{ProfileKind::CompleteMinusMatching, 2, 0}) ++k2s;
    }
    CHECK(c4s == 1);  // the type-1 pair
    CHECK(k2s == 2);  // cosets {0,4} and {2,6}
    for (const auto& p : s8) CHECK(p.k <= 2);
}

TEST_CASE("clique numbers for the frozen examples") {
    Group a({2, 9});
    auto sta = stats_for(a, 3);
    auto [ea, sa] = predict_clique_independence(sta);
    CHECK(sa.clique == 4);
    CHECK(sa.independence == 8);
    CHECK(sa.chromatic == 4);
    CHECK(sa.clique_cover == 8);

    Group b({4, 2});
    auto stb = stats_for(b, 2);
    auto [eb, sb] = predict_clique_independence(stb);
    CHECK(sb.independence == 6);
    CHECK(sb.clique == 2);
    CHECK(eb.clique == 2);
    CHECK(eb.independence == 4);
}

TEST_CASE("girth rules") {
    Group z8({8});
    auto [ge, gs] = predict_girth(stats_for(z8, 2));  // k = 4
    CHECK(ge == 3);
    CHECK(gs == 3);

    Group z9({9});
    auto [ge9, gs9] = predict_girth(stats_for(z9, 3));  // k = 3, m1 > 0
    CHECK(ge9 == 3);
    CHECK(gs9 == 6);

    Group z6({6});
    auto [ge6, gs6] = predict_girth(stats_for(z6, 2));  // k = 3, m1 = 0
    CHECK(ge6 == 3);
    CHECK(!gs6.has_value());

    Group z8b({8});
    auto [ge4, gs4] = predict_girth(stats_for(z8b, 4));  // k = 2, m1 > 0
    CHECK(ge4 == 4);
    CHECK(!gs4.has_value());

    Group z4({4});
    auto [ge2, gs2] = predict_girth(stats_for(z4, 2));  // k = 2, m1 = 0
    CHECK(!ge2.has_value());
    CHECK(!gs2.has_value());
}

TEST_CASE("spectra of the frozen examples") {
    Group z8({8});
    auto [se, ss] = predict_spectrum(stats_for(z8, 2));
    CHECK(se.total_multiplicity() == 8);
    CHECK(ss.total_multiplicity() == 8);

    auto vals = ss.expand();
    REQUIRE(vals.size() == 8);
    const double lo = (1.0 - std::sqrt(17.0)) / 2.0;
    const double hi = (1.0 + std::sqrt(17.0)) / 2.0;
    CHECK(vals[0] == doctest::Approx(-2.0).epsilon(1e-12));
    CHECK(vals[1] == doctest::Approx(lo).epsilon(1e-12));
    CHECK(vals[7] == doctest::Approx(hi).epsilon(1e-12));

    Group z9({9});
    auto [se9, ss9] = predict_spectrum(stats_for(z9, 3));
    auto v9 = ss9.expand();
    REQUIRE(v9.size() == 9);
    CHECK(v9[0] == doctest::Approx(-2.0));
    CHECK(v9[1] == doctest::Approx(-std::sqrt(2.0)));
    CHECK(v9[8] == doctest::Approx(2.0));
}

TEST_CASE("spectrum moments match vertex and edge counts") {
    for (const auto& g : abelian_groups_up_to(20)) {
        for (const auto& named : subgroup_corpus(g)) {
            auto st = classify_cosets(g, named.subgroup);
            auto [se, ss] = predict_spectrum(st);
            auto ext = build_extended(g, named.subgroup);
            auto sum = build_subgroup_sum(g, named.subgroup);
            CAPTURE(format_group(g));
            CAPTURE(named.literal);
            auto check_moments = [&](const SpectrumSpec& spec, const Graph& gr) {
                CHECK(spec.total_multiplicity() == gr.n);
                double trace = 0, sq = 0;
                for (double v : spec.expand()) {
                    trace += v;
                    sq += v * v;
                }
                CHECK(trace == doctest::Approx(0.0).epsilon(1e-9));
                CHECK(sq == doctest::Approx(2.0 * gr.edge_count()).epsilon(1e-9));
            };
            check_moments(se, ext);
            check_moments(ss, sum);
        }
    }
}

TEST_CASE("domination counts") {
    Group z8({8});
    auto d = predict_domination(stats_for(z8, 2));
    CHECK(d.extended == 2);
    CHECK(d.sum == 3);
    REQUIRE(d.extended_complement.has_value());
    CHECK(*d.extended_complement == 2);
    CHECK(*d.sum_complement == 2);

    Group z4({4});
    auto d4 = predict_domination(stats_for(z4, 2));  // k = 2, m1 = 0, m2 = 1, m3 = 1
    CHECK(d4.extended == 2);
    CHECK(d4.sum == 3);

    // H = G: complement domination undefined
    auto dfull = predict_domination(stats_for(z8, 1));
    CHECK(!dfull.extended_complement.has_value());
    CHECK(!dfull.sum_complement.has_value());

    // complement domination 1 when the base graph has an isolated vertex
    Group z6({6});
    auto dtriv = predict_domination(stats_for(z6, 6));  // H = {0}, k = 1
    CHECK(*dtriv.sum_complement == 1);
}

TEST_CASE("connectivity and complement geometry") {
    Group z8({8});
    auto c = predict_connectivity_diameter(stats_for(z8, 2));
    CHECK(!c.extended_connected);
    CHECK(!c.sum_connected);
    CHECK(c.extended_complement.connected);
    CHECK(*c.extended_complement.diameter == 2);
    CHECK(*c.extended_complement.radius == 2);
    CHECK(c.sum_complement.connected);

    auto cf = predict_connectivity_diameter(stats_for(z8, 1));  // H = G
    CHECK(cf.extended_connected);
    CHECK(cf.sum_connected);
    CHECK(!cf.extended_complement.connected);
    CHECK(!cf.extended_complement.diameter.has_value());

    // k = 2 with a type-2 coset: the sum graph has isolated vertices, so a
    // universal vertex puts the complement's radius below its diameter
    auto c2 = predict_connectivity_diameter(stats_for(z8, 4));
    CHECK(*c2.sum_complement.radius == 1);
    CHECK(*c2.sum_complement.diameter == 2);
}

TEST_CASE("closed_report aggregates every prediction") {
    Group g({8});
    auto st = stats_for(g, 2);
    auto rep = closed_report(st);
    CHECK(rep.extended.component_count == 2);
    CHECK(rep.sum.component_count == 2);
    CHECK(rep.extended.numbers.clique == 4);
    CHECK(rep.sum.numbers.clique == 3);
    CHECK(rep.sum.numbers.independence == 4);
    CHECK(rep.sum.domination == 3);
    CHECK(rep.extended.girth == 3);
    CHECK(!rep.extended.connected);
    CHECK(rep.extended_complement.connected);
    CHECK(rep.sum.spectrum.total_multiplicity() == 8);
}

TEST_CASE("prime sum predictions match the general pipeline") {
    struct Case {
        std::vector<int> orders;
        long long p;
    };
    for (const auto& c : {Case{{2, 9}, 3}, Case{{4, 2}, 2}, Case{{12}, 2}, Case{{12}, 3},
                          Case{{5}, 5}, Case{{8, 4}, 2}, Case{{49}, 7}}) {
        Group g(c.orders);
        auto pr = predict_prime_sum(g, c.p);
        auto st = classify_cosets(g, subgroup_nG(g, c.p));
        CAPTURE(format_group(g));
        CAPTURE(c.p);
        CHECK(pr.k == st.k);
        CHECK(pr.m1 == st.m1);
        CHECK(pr.m2 == st.m2);
        CHECK(pr.m3 == st.m3);
        CHECK(pr.sH == st.sH);
        auto [ext, sum] = predict_clique_independence(st);
        CHECK(pr.extended == ext);
        CHECK(pr.sum == sum);
        CHECK(pr.subgroup_is_whole_group == (st.k == st.n));
    }
}

TEST_CASE("prime sum frozen values") {
    auto a = predict_prime_sum(Group({2, 9}), 3);
    CHECK(a.sum.clique == 4);
    CHECK(a.sum.independence == 8);

    auto b = predict_prime_sum(Group({4, 2}), 2);
    CHECK(b.sum.independence == 6);

    auto c = predict_prime_sum(Group({15}), 2);  // 2G = G
    CHECK(c.subgroup_is_whole_group);
    CHECK(c.k == 15);
}

TEST_CASE("prime sum validates p") {
    Group g({12});
    CHECK_THROWS_AS(predict_prime_sum(g, 4), InvalidParameterError);
    CHECK_THROWS_AS(predict_prime_sum(g, 1), InvalidParameterError);
    CHECK_THROWS_AS(predict_prime_sum(g, -3), InvalidParameterError);
}

TEST_CASE("predictions agree with recognizer output across a corpus") {
    for (const auto& g : abelian_groups_up_to(18)) {
        for (const auto& named : subgroup_corpus(g)) {
            auto st = classify_cosets(g, named.subgroup);
            auto [pe, ps] = predict_components(st);
            auto ce = components_with_profiles(build_extended(g, named.subgroup));
            auto cs = components_with_profiles(build_subgroup_sum(g, named.subgroup));
            CAPTURE(format_group(g));
            CAPTURE(named.literal);
            REQUIRE(pe.size() == ce.size());
            REQUIRE(ps.size() == cs.size());
            auto lift = [](const std::vector<ComponentProfile>& v) {
                std::vector<std::optional<ComponentProfile>> out(v.begin(), v.end());
                return out;
            };
            CHECK(lift(pe) == profile_multiset(ce));
            CHECK(lift(ps) == profile_multiset(cs));
        }
    }
}
