#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "subsum/closed_form.hpp"
#include "subsum/enumerate.hpp"
#include "subsum/graph_io.hpp"
#include "subsum/oracle.hpp"
#include "subsum/reconstruct.hpp"
#include "subsum/report.hpp"

namespace {

using namespace subsum;

void write_output(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        if (!content.empty() && content.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw Error("cannot open output file: " + out_path);
    f << content;
}

void print_census(const Graph& gr) {
    auto comps = components_with_profiles(gr);
    std::cerr << "graph: n=" << gr.n << " edges=" << gr.edge_count()
              << " components=" << comps.size() << "\n";
    auto ms = profile_multiset(comps);
    std::cerr << "  profiles: " << format_profiles(ms) << "\n";
}

struct BuildArgs {
    std::string group, subgroup, kgroup, variant = "sum", out;
    bool dot = false, json = false;
};

int cmd_build(const BuildArgs& a) {
    Group g = parse_group_literal(a.group);
    Subgroup h = parse_subgroup_literal(a.subgroup, g);
    Graph gr;
    if (a.variant == "generalized") {
        if (a.kgroup.empty())
            throw InvalidParameterError("--variant generalized needs -K");
        Subgroup k = parse_subgroup_literal(a.kgroup, g);
        gr = build_generalized(g, h, k);
    } else if (a.variant == "extended") {
        gr = build_extended(g, h);
    } else {
        gr = build_subgroup_sum(g, h);
    }
    print_census(gr);
    if (a.dot) write_output(graph_to_dot(gr), a.out);
    if (a.json) write_output(graph_to_json(gr), a.out);
    return 0;
}

struct InvariantsArgs {
    std::string group, subgroup, engine = "verify", out;
    bool json = false;
};

int cmd_invariants(const InvariantsArgs& a) {
    Group g = parse_group_literal(a.group);
    Subgroup h = parse_subgroup_literal(a.subgroup, g);
    CosetStats stats = classify_cosets(g, h);

    if (a.engine == "closed") {
        write_output(report_to_json(closed_report(stats)), a.out);
        return 0;
    }

    Graph ext = build_extended(g, h);
    Graph sum = build_subgroup_sum(g, h);
    if (a.engine == "oracle") {
        write_output(report_to_json(oracle_report(ext, sum)), a.out);
        return 0;
    }

    auto diffs = diff_reports(closed_report(stats), oracle_report(ext, sum), stats);
    if (a.json) {
        write_output(diffs_to_json(diffs), a.out);
    } else {
        std::ostringstream out;
        long long mismatches = 0, flagged = 0;
        for (const auto& d : diffs) {
            mismatches += !d.match;
            flagged += !d.flag.empty();
            out << (d.match ? "ok   " : "DIFF ") << d.field << ": closed=" << d.closed_value
                << " oracle=" << d.oracle_value;
            if (!d.applicable) out << " (not applicable)";
            if (!d.flag.empty()) out << "  [flag: " << d.flag << "]";
            out << "\n";
        }
        out << "verify: " << diffs.size() << " fields, " << mismatches << " mismatches, "
            << flagged << " flagged\n";
        write_output(out.str(), a.out);
    }
    return all_match(diffs) ? 0 : 1;
}

struct SweepArgs {
    long long max_order = 0;
    std::string family = "all-abelian";
    std::vector<std::string> groups;
    std::string subgroups = "all-nG";
    std::string engine = "both";
    std::string out;
    bool csv = false, json = false;
};

struct SweepRow {
    std::string group, subgroup, invariant, closed_value, oracle_value, match, flag;
};

void closed_rows_for(const std::string& prefix, const GraphPrediction& g,
                     std::vector<std::pair<std::string, std::string>>& out) {
    out.emplace_back(prefix + ".component_count", std::to_string(g.component_count));
    out.emplace_back(prefix + ".profiles", format_profiles(g.profiles));
    out.emplace_back(prefix + ".clique", std::to_string(g.numbers.clique));
    out.emplace_back(prefix + ".independence", std::to_string(g.numbers.independence));
    out.emplace_back(prefix + ".chromatic", std::to_string(g.numbers.chromatic));
    out.emplace_back(prefix + ".clique_cover", std::to_string(g.numbers.clique_cover));
    out.emplace_back(prefix + ".girth", format_optional(g.girth));
    out.emplace_back(prefix + ".connected", g.connected ? "true" : "false");
    out.emplace_back(prefix + ".domination", std::to_string(g.domination));
    std::ostringstream spec;
    auto strs = format_spectrum(g.spectrum.expand());
    for (std::size_t i = 0; i < strs.size(); ++i) spec << (i ? " " : "") << strs[i];
    out.emplace_back(prefix + ".spectrum", spec.str());
}

void oracle_rows_for(const std::string& prefix, const OracleGraphReport& g,
                     std::vector<std::pair<std::string, std::string>>& out) {
    out.emplace_back(prefix + ".component_count", std::to_string(g.component_count));
    out.emplace_back(prefix + ".profiles", format_profiles(g.profiles));
    out.emplace_back(prefix + ".clique", std::to_string(g.numbers.clique));
    out.emplace_back(prefix + ".independence", std::to_string(g.numbers.independence));
    out.emplace_back(prefix + ".chromatic", std::to_string(g.numbers.chromatic));
    out.emplace_back(prefix + ".clique_cover", std::to_string(g.numbers.clique_cover));
    out.emplace_back(prefix + ".girth", format_optional(g.girth));
    out.emplace_back(prefix + ".connected", g.connected ? "true" : "false");
    out.emplace_back(prefix + ".domination", std::to_string(g.domination));
    std::ostringstream spec;
    auto strs = format_spectrum(g.spectrum);
    for (std::size_t i = 0; i < strs.size(); ++i) spec << (i ? " " : "") << strs[i];
    out.emplace_back(prefix + ".spectrum", spec.str());
}

template <typename Complement>
void complement_rows_for(const std::string& prefix, const Complement& c,
                         std::vector<std::pair<std::string, std::string>>& out) {
    out.emplace_back(prefix + ".connected", c.connected ? "true" : "false");
    out.emplace_back(prefix + ".diameter", format_optional(c.diameter));
    out.emplace_back(prefix + ".radius", format_optional(c.radius));
    out.emplace_back(prefix + ".domination",
                     c.domination ? std::to_string(*c.domination) : "n/a");
}

// Flags for single-engine sweeps, matching the ones diff_reports assigns.
template <typename Report>
std::string flag_for(const std::string& field, const CosetStats& stats, const Report& rep) {
    if (field == "sum.girth" && stats.k == 3 && stats.m1 == 0) return "paper-says-6";
    auto radius_flag = [&](const auto& c) {
        return stats.k <= 2 && c.radius && *c.radius == 1 && c.diameter && *c.diameter == 2;
    };
    if (field == "extended_complement.radius" && radius_flag(rep.extended_complement))
        return "paper-radius-k-le-2";
    if (field == "sum_complement.radius" && radius_flag(rep.sum_complement))
        return "paper-radius-k-le-2";
    return "";
}

int cmd_sweep(const SweepArgs& a) {
    if (a.max_order < 2 || a.max_order > max_vertices())
        throw InvalidParameterError("--max-order must be between 2 and " +
                                    std::to_string(max_vertices()));

    std::vector<SweepRow> rows;
    long long pairs = 0, mismatches = 0, flagged = 0, errors = 0, group_count = 0;

    auto emit_error = [&](const std::string& gname, const std::string& hname,
                          const std::string& message) {
        rows.push_back({gname, hname, "error", "", "", "", message});
        ++errors;
    };

    auto run_pair = [&](const Group& g, const NamedSubgroup& named) {
        const std::string gname = format_group(g);
        try {
            CosetStats stats = classify_cosets(g, named.subgroup);
            ++pairs;
            if (a.engine == "closed") {
                InvariantReport rep = closed_report(stats);
                std::vector<std::pair<std::string, std::string>> fields;
                closed_rows_for("extended", rep.extended, fields);
                closed_rows_for("sum", rep.sum, fields);
                complement_rows_for("extended_complement", rep.extended_complement, fields);
                complement_rows_for("sum_complement", rep.sum_complement, fields);
                for (auto& [field, value] : fields) {
                    std::string flag = flag_for(field, stats, rep);
                    flagged += !flag.empty();
                    rows.push_back({gname, named.literal, field, value, "", "", flag});
                }
                return;
            }
            Graph ext = build_extended(g, named.subgroup);
            Graph sum = build_subgroup_sum(g, named.subgroup);
            if (a.engine == "oracle") {
                OracleReport rep = oracle_report(ext, sum);
                std::vector<std::pair<std::string, std::string>> fields;
                oracle_rows_for("extended", rep.extended, fields);
                oracle_rows_for("sum", rep.sum, fields);
                complement_rows_for("extended_complement", rep.extended_complement, fields);
                complement_rows_for("sum_complement", rep.sum_complement, fields);
                for (auto& [field, value] : fields) {
                    std::string flag = flag_for(field, stats, rep);
                    flagged += !flag.empty();
                    rows.push_back({gname, named.literal, field, "", value, "", flag});
                }
                return;
            }
            auto diffs = diff_reports(closed_report(stats), oracle_report(ext, sum), stats);
            for (const auto& d : diffs) {
                mismatches += !d.match;
                flagged += !d.flag.empty();
                rows.push_back({gname, named.literal, d.field, d.closed_value,
                                d.oracle_value, d.match ? "true" : "false", d.flag});
            }
        } catch (const Error& e) {
            emit_error(gname, named.literal, e.what());
        }
    };

    auto run_group = [&](const Group& g) {
        ++group_count;
        if (a.subgroups == "all-nG") {
            for (const auto& named : subgroups_nG_family(g)) run_pair(g, named);
        } else if (a.subgroups == "all-single-generator") {
            for (const auto& named : subgroups_single_generator_family(g)) run_pair(g, named);
        } else if (a.subgroups == "all") {
            for (const auto& named : subgroup_corpus(g)) run_pair(g, named);
        } else {
            try {
                NamedSubgroup named{parse_subgroup_literal(a.subgroups, g), a.subgroups};
                run_pair(g, named);
            } catch (const Error& e) {
                emit_error(format_group(g), a.subgroups, e.what());
            }
        }
    };

    if (!a.groups.empty()) {
        for (const auto& literal : a.groups) {
            try {
                Group g = parse_group_literal(literal);
                run_group(g);
            } catch (const Error& e) {
                emit_error(literal, "", e.what());
            }
        }
    } else if (a.family == "cyclic") {
        for (long long n = 2; n <= a.max_order; ++n) run_group(Group({static_cast<int>(n)}));
    } else {
        for (const auto& g : abelian_groups_up_to(a.max_order))
            if (g.order() >= 2) run_group(g);
    }

    std::string content;
    if (a.json) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& r : rows) {
            nlohmann::ordered_json j;
            j["group"] = r.group;
            j["subgroup"] = r.subgroup;
            j["invariant"] = r.invariant;
            j["closed_value"] = r.closed_value;
            j["oracle_value"] = r.oracle_value;
            j["match"] = r.match;
            j["flag"] = r.flag;
            arr.push_back(std::move(j));
        }
        content = arr.dump(2) + "\n";
    } else {
        std::ostringstream out;
        out << "group,subgroup,invariant,closed_value,oracle_value,match,flag\n";
        for (const auto& r : rows)
            out << csv_escape(r.group) << ',' << csv_escape(r.subgroup) << ','
                << csv_escape(r.invariant) << ',' << csv_escape(r.closed_value) << ','
                << csv_escape(r.oracle_value) << ',' << csv_escape(r.match) << ','
                << csv_escape(r.flag) << '\n';
        content = out.str();
    }
    write_output(content, a.out);

    std::cerr << "sweep: groups=" << group_count << " pairs=" << pairs
              << " rows=" << rows.size() << " mismatches=" << mismatches
              << " flagged=" << flagged << " errors=" << errors << "\n";
    return mismatches == 0 && errors == 0 ? 0 : 1;
}

struct ReconstructArgs {
    std::string input, mode = "extended", out;
};

int cmd_reconstruct(const ReconstructArgs& a) {
    std::ifstream f(a.input);
    if (!f) throw Error("cannot open input file: " + a.input);
    std::stringstream buf;
    buf << f.rdbuf();
    Graph gr = graph_from_json(buf.str());
    RecoveredParams rec =
        a.mode == "sum" ? analyze_subgroup_sum(gr) : analyze_extended(gr);
    write_output(params_to_json(rec) + "\n", a.out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"subgroup sum graphs: build, invariants, verification, reconstruction"};
    app.require_subcommand(1);

    BuildArgs build_args;
    auto* build = app.add_subcommand("build", "build a graph and export it");
    build->add_option("-g,--group", build_args.group, "group literal, e.g. 4,2")->required();
    build->add_option("-H,--subgroup", build_args.subgroup,
                      "subgroup literal: n:<int>, gens:(..);(..), zero, full")
        ->required();
    build->add_option("-K,--exclude", build_args.kgroup,
                      "second subgroup (generalized variant)");
    build->add_option("--variant", build_args.variant, "sum | extended | generalized")
        ->check(CLI::IsMember({"sum", "extended", "generalized"}));
    build->add_flag("--dot", build_args.dot, "export DOT");
    build->add_flag("--json", build_args.json, "export JSON");
    build->add_option("--out", build_args.out, "output file (default stdout)");

    InvariantsArgs inv_args;
    auto* inv = app.add_subcommand("invariants", "closed-form/oracle invariant reports");
    inv->add_option("-g,--group", inv_args.group, "group literal")->required();
    inv->add_option("-H,--subgroup", inv_args.subgroup, "subgroup literal")->required();
    inv->add_option("--engine", inv_args.engine, "closed | oracle | verify")
        ->check(CLI::IsMember({"closed", "oracle", "verify"}));
    inv->add_flag("--json", inv_args.json, "verify output as JSON diff");
    inv->add_option("--out", inv_args.out, "output file (default stdout)");

    SweepArgs sweep_args;
    auto* sweep = app.add_subcommand("sweep", "run engines over group/subgroup families");
    sweep->add_option("--max-order", sweep_args.max_order, "largest group order")->required();
    sweep->add_option("--family", sweep_args.family, "all-abelian | cyclic")
        ->check(CLI::IsMember({"all-abelian", "cyclic"}));
    sweep->add_option("--group", sweep_args.groups,
                      "explicit group literal (repeatable; overrides --family)");
    sweep->add_option("--subgroups", sweep_args.subgroups,
                      "all-nG | all-single-generator | all | a subgroup literal");
    sweep->add_option("--engine", sweep_args.engine, "both | closed | oracle")
        ->check(CLI::IsMember({"both", "closed", "oracle"}));
    sweep->add_flag("--csv", sweep_args.csv, "CSV output (default)");
    sweep->add_flag("--json", sweep_args.json, "JSON output");
    sweep->add_option("--out", sweep_args.out, "output file (default stdout)");

    ReconstructArgs rec_args;
    auto* rec = app.add_subcommand("reconstruct", "recover parameters from a graph");
    rec->add_option("--input", rec_args.input, "graph JSON file")->required();
    rec->add_option("--mode", rec_args.mode, "extended | sum")
        ->check(CLI::IsMember({"extended", "sum"}));
    rec->add_option("--out", rec_args.out, "write to a file instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed()) return cmd_build(build_args);
        if (inv->parsed()) return cmd_invariants(inv_args);
        if (sweep->parsed()) return cmd_sweep(sweep_args);
        if (rec->parsed()) return cmd_reconstruct(rec_args);
    } catch (const subsum::AmbiguityError& e) {
        std::cerr << "error: " << e.what() << " (candidates:";
        for (long long k : e.candidates) std::cerr << " " << k;
        std::cerr << ")\n";
        return 2;
    } catch (const subsum::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
