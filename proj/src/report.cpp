#include "subsum/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "json.hpp"

namespace subsum {

namespace {

constexpr double kSpectrumTolerance = 1e-6;

std::string fmt_double(double v) {
    if (std::abs(v) < 5e-13) v = 0;  // keep "-0.000000000000" out of the output
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", v);
    return buf;
}

std::string fmt_bool(bool b) { return b ? "true" : "false"; }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

template <typename Profile>
std::string format_profile_run(const std::vector<Profile>& profiles) {
    std::vector<std::string> runs;
    for (std::size_t i = 0; i < profiles.size();) {
        std::size_t j = i;
        while (j < profiles.size() && profiles[j] == profiles[i]) ++j;
        runs.push_back(std::to_string(j - i) + "x" + profile_to_string(profiles[i]));
        i = j;
    }
    return join(runs, "+");
}

nlohmann::ordered_json spectrum_entries_json(const SpectrumSpec& spec) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [ev, mult] : spec.entries) {
        nlohmann::ordered_json e;
        if (ev.quadratic) {
            e["T"] = ev.T;
            e["C"] = ev.C;
            e["sign"] = ev.sign > 0 ? "+" : "-";
        } else {
            e["value"] = ev.value;
        }
        e["mult"] = mult;
        arr.push_back(std::move(e));
    }
    return arr;
}

nlohmann::ordered_json opt_json(const std::optional<long long>& v) {
    if (!v) return "inf";
    return *v;
}

nlohmann::ordered_json numeric_spectrum_json(const std::vector<double>& eig) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& s : format_spectrum(eig)) arr.push_back(s);
    return arr;
}

nlohmann::ordered_json closed_graph_json(const GraphPrediction& g) {
    nlohmann::ordered_json j;
    j["component_count"] = g.component_count;
    auto profs = nlohmann::ordered_json::array();
    for (const auto& p : g.profiles) profs.push_back(profile_to_string(p));
    j["profiles"] = std::move(profs);
    j["clique"] = g.numbers.clique;
    j["independence"] = g.numbers.independence;
    j["chromatic"] = g.numbers.chromatic;
    j["clique_cover"] = g.numbers.clique_cover;
    j["girth"] = opt_json(g.girth);
    j["connected"] = g.connected;
    j["domination"] = g.domination;
    j["spectrum"] = spectrum_entries_json(g.spectrum);
    j["numeric_spectrum"] = numeric_spectrum_json(g.spectrum.expand());
    return j;
}

nlohmann::ordered_json oracle_graph_json(const OracleGraphReport& g) {
    nlohmann::ordered_json j;
    j["component_count"] = g.component_count;
    auto profs = nlohmann::ordered_json::array();
    for (const auto& p : g.profiles) profs.push_back(profile_to_string(p));
    j["profiles"] = std::move(profs);
    j["clique"] = g.numbers.clique;
    j["independence"] = g.numbers.independence;
    j["chromatic"] = g.numbers.chromatic;
    j["clique_cover"] = g.numbers.clique_cover;
    j["girth"] = opt_json(g.girth);
    j["connected"] = g.connected;
    j["domination"] = g.domination;
    j["numeric_spectrum"] = numeric_spectrum_json(g.spectrum);
    return j;
}

template <typename Complement>
nlohmann::ordered_json complement_json(const Complement& c) {
    nlohmann::ordered_json j;
    j["connected"] = c.connected;
    j["diameter"] = opt_json(c.diameter);
    j["radius"] = opt_json(c.radius);
    if (c.domination)
        j["domination"] = *c.domination;
    else
        j["domination"] = nullptr;
    return j;
}

struct DiffBuilder {
    std::vector<FieldDiff> rows;

    void exact(const std::string& field, const std::string& cv, const std::string& ov) {
        rows.push_back({field, cv, ov, true, cv == ov, ""});
    }
    void numbers(const std::string& field, long long cv, long long ov) {
        exact(field, std::to_string(cv), std::to_string(ov));
    }
};

}  // namespace

std::string format_optional(const std::optional<long long>& v) {
    return v ? std::to_string(*v) : "inf";
}

std::string format_profiles(const std::vector<ComponentProfile>& profiles) {
    return format_profile_run(profiles);
}

std::string format_profiles(const std::vector<std::optional<ComponentProfile>>& profiles) {
    return format_profile_run(profiles);
}

std::vector<std::string> format_spectrum(const std::vector<double>& eig) {
    std::vector<std::string> out;
    out.reserve(eig.size());
    for (double v : eig) out.push_back(fmt_double(v));
    return out;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::vector<FieldDiff> diff_reports(const InvariantReport& closed, const OracleReport& oracle,
                                    const CosetStats& stats) {
    DiffBuilder b;

    auto graph_side = [&](const std::string& prefix, const GraphPrediction& cl,
                          const OracleGraphReport& orc) {
        b.numbers(prefix + ".component_count", cl.component_count, orc.component_count);

        std::vector<std::optional<ComponentProfile>> lifted(cl.profiles.begin(),
                                                            cl.profiles.end());
        b.rows.push_back({prefix + ".profiles", format_profiles(cl.profiles),
                          format_profiles(orc.profiles), true, lifted == orc.profiles, ""});

        b.numbers(prefix + ".clique", cl.numbers.clique, orc.numbers.clique);
        b.numbers(prefix + ".independence", cl.numbers.independence, orc.numbers.independence);
        b.numbers(prefix + ".chromatic", cl.numbers.chromatic, orc.numbers.chromatic);
        b.numbers(prefix + ".clique_cover", cl.numbers.clique_cover, orc.numbers.clique_cover);
        b.exact(prefix + ".girth", format_optional(cl.girth), format_optional(orc.girth));
        b.exact(prefix + ".connected", fmt_bool(cl.connected), fmt_bool(orc.connected));
        b.numbers(prefix + ".domination", cl.domination, orc.domination);

        std::vector<double> expanded = cl.spectrum.expand();
        bool spec_match = expanded.size() == orc.spectrum.size();
        if (spec_match)
            for (std::size_t i = 0; i < expanded.size(); ++i)
                if (std::abs(expanded[i] - orc.spectrum[i]) > kSpectrumTolerance) {
                    spec_match = false;
                    break;
                }
        b.rows.push_back({prefix + ".spectrum", join(format_spectrum(expanded), " "),
                          join(format_spectrum(orc.spectrum), " "), true, spec_match, ""});
    };

    auto complement_side = [&](const std::string& prefix, const ComplementPrediction& cl,
                               const OracleComplementReport& orc) {
        b.exact(prefix + ".connected", fmt_bool(cl.connected), fmt_bool(orc.connected));
        b.exact(prefix + ".diameter", format_optional(cl.diameter),
                format_optional(orc.diameter));
        b.exact(prefix + ".radius", format_optional(cl.radius), format_optional(orc.radius));

        FieldDiff dom{prefix + ".domination",
                      cl.domination ? std::to_string(*cl.domination) : "n/a",
                      orc.domination ? std::to_string(*orc.domination) : "n/a",
                      cl.domination.has_value() || orc.domination.has_value(),
                      cl.domination == orc.domination,
                      ""};
        b.rows.push_back(std::move(dom));
    };

    graph_side("extended", closed.extended, oracle.extended);
    graph_side("sum", closed.sum, oracle.sum);
    complement_side("extended_complement", closed.extended_complement,
                    oracle.extended_complement);
    complement_side("sum_complement", closed.sum_complement, oracle.sum_complement);

    auto flag_row = [&](const std::string& field, const std::string& flag) {
        for (auto& row : b.rows)
            if (row.field == field) row.flag = flag;
    };
    if (stats.k == 3 && stats.m1 == 0) flag_row("sum.girth", "paper-says-6");
    auto radius_deviation = [&](const ComplementPrediction& c) {
        return stats.k <= 2 && c.radius && *c.radius == 1 && c.diameter && *c.diameter == 2;
    };
    if (radius_deviation(closed.extended_complement))
        flag_row("extended_complement.radius", "paper-radius-k-le-2");
    if (radius_deviation(closed.sum_complement))
        flag_row("sum_complement.radius", "paper-radius-k-le-2");

    return b.rows;
}

bool all_match(const std::vector<FieldDiff>& diffs) {
    return std::all_of(diffs.begin(), diffs.end(),
                       [](const FieldDiff& d) { return d.match; });
}

std::string report_to_json(const InvariantReport& rep) {
    nlohmann::ordered_json j;
    j["extended"] = closed_graph_json(rep.extended);
    j["sum"] = closed_graph_json(rep.sum);
    j["extended_complement"] = complement_json(rep.extended_complement);
    j["sum_complement"] = complement_json(rep.sum_complement);
    return j.dump(2);
}

std::string report_to_json(const OracleReport& rep) {
    nlohmann::ordered_json j;
    j["extended"] = oracle_graph_json(rep.extended);
    j["sum"] = oracle_graph_json(rep.sum);
    j["extended_complement"] = complement_json(rep.extended_complement);
    j["sum_complement"] = complement_json(rep.sum_complement);
    return j.dump(2);
}

std::string params_to_json(const RecoveredParams& rec) {
    nlohmann::ordered_json j;
    j["order_G"] = rec.order_G;
    j["k"] = rec.k;
    j["sGH"] = rec.sGH;
    if (rec.m2) j["m2"] = *rec.m2;
    if (rec.m3) j["m3"] = *rec.m3;
    if (rec.sH) j["sH"] = *rec.sH;
    if (rec.sG) j["sG"] = *rec.sG;
    return j.dump();
}

std::string diffs_to_json(const std::vector<FieldDiff>& diffs) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& d : diffs) {
        nlohmann::ordered_json j;
        j["field"] = d.field;
        j["closed"] = d.closed_value;
        j["oracle"] = d.oracle_value;
        j["applicable"] = d.applicable;
        j["match"] = d.match;
        j["flag"] = d.flag;
        arr.push_back(std::move(j));
    }
    return arr.dump(2);
}

}  // namespace subsum
