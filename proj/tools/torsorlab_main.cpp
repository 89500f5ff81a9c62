// Command-line front end. Subcommands compute single structure maps, run the
// theorem suite, enumerate lattices and carriers, and print the sign table.
// Exit codes: 0 ok, 1 a check failed, 2 usage or validation error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "torsorlab/io.hpp"
#include "torsorlab/structure_maps.hpp"
#include "torsorlab/subset.hpp"
#include "torsorlab/suites.hpp"
#include "torsorlab/symmetry.hpp"
#include "torsorlab/torsor.hpp"

namespace {

using namespace torsorlab;

struct SubsetArgs {
    std::string x, a, y, b, z;
};

/// Applies --mode to the thresholds. "auto" keeps the defaults, "exhaustive"
/// lifts them so every scan that can enumerate does, "seeded" or "seeded:<k>"
/// forces sampling (with optional sample count k).
void apply_mode(const std::string& mode, SuiteConfig& cfg) {
    if (mode == "auto") return;
    if (mode == "exhaustive") {
        cfg.subset_threshold = 1 << 30;
        cfg.subgroup_threshold = 1 << 30;
        return;
    }
    if (mode.rfind("seeded", 0) == 0) {
        cfg.subset_threshold = 0;
        cfg.subgroup_threshold = 0;
        if (mode.size() > 6 && mode[6] == ':') {
            long long k = std::stoll(mode.substr(7));
            if (k < 1) throw CLI::ValidationError("--mode", "sample count must be positive");
            cfg.samples = k;
        } else if (mode.size() != 6) {
            throw CLI::ValidationError("--mode", "expected auto, exhaustive, or seeded[:k]");
        }
        return;
    }
    throw CLI::ValidationError("--mode", "expected auto, exhaustive, or seeded[:k]");
}

void write_output(const std::string& out_path, const std::string& body) {
    if (out_path.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << body;
}

int cmd_map(const std::string& group_spec, const SubsetArgs& args, bool opposite, bool is_gamma) {
    GroupRef g = group_from_spec(group_spec);
    Subset result = [&] {
        if (is_gamma) {
            Subset x = parse_subset(g, args.x), a = parse_subset(g, args.a);
            Subset y = parse_subset(g, args.y), b = parse_subset(g, args.b);
            Subset z = parse_subset(g, args.z);
            return opposite ? gamma_check(x, a, y, b, z) : gamma(x, a, y, b, z);
        }
        Subset b = parse_subset(g, args.b), x = parse_subset(g, args.x);
        Subset y = parse_subset(g, args.y), z = parse_subset(g, args.z);
        return opposite ? sigma_check(b, x, y, z) : sigma(b, x, y, z);
    }();
    std::cout << format_subset(result) << "\n";
    return 0;
}

int cmd_suite(const std::string& group_spec, const SuiteConfig& cfg, const std::string& out_path,
              const std::string& format) {
    GroupRef g = group_from_spec(group_spec);
    SuiteReport report = run_all(g, cfg);
    std::string body;
    if (format == "json")
        body = render_report_json(report);
    else if (format == "csv")
        body = render_report_csv(report);
    else
        body = render_report_text(report);
    write_output(out_path, body);
    return report.all_passed() ? 0 : 1;
}

int cmd_enumerate_grassmannian(const std::string& group_spec) {
    GroupRef g = group_from_spec(group_spec);
    auto subs = grassmannian(g);
    for (const auto& s : subs) std::cout << format_subset(s) << "\n";
    std::cout << subs.size() << " subgroups\n";
    return 0;
}

int cmd_enumerate_transversals(const std::string& group_spec, const std::string& b_lit) {
    GroupRef g = group_from_spec(group_spec);
    Subset b = parse_subset(g, b_lit);
    auto sections = left_transversal_set(g, b);
    for (const auto& s : sections) std::cout << format_subset(s) << "\n";
    std::cout << sections.size() << " sections\n";
    return 0;
}

int cmd_enumerate_carrier(const std::string& group_spec, const std::string& a_lit,
                          const std::string& b_lit, const std::string& kind) {
    GroupRef g = group_from_spec(group_spec);
    Subset b = parse_subset(g, b_lit);
    TorsorCarrier carrier = [&] {
        if (kind == "uab") {
            if (a_lit.empty()) throw CLI::ValidationError("--a", "required for --kind uab");
            return carrier_U_ab(parse_subset(g, a_lit), b);
        }
        return carrier_U_b(b);
    }();
    for (const auto& s : carrier.elements) std::cout << format_subset(s) << "\n";
    std::cout << carrier.elements.size() << " elements\n";
    return 0;
}

int cmd_signtable(const std::string& group_spec) {
    GroupRef g = group_from_spec(group_spec);
    SignTableReport report = verify_sign_table(g);
    std::cout << "sign table for " << g->name() << " (" << report.rows.size() << " rows)\n";
    for (size_t i = 0; i < report.rows.size(); ++i) {
        const auto& row = report.rows[i];
        std::ostringstream line;
        line << "(" << (i + 1) << ")";
        std::cout << line.str() << "\t" << row.label << "\t" << row.expected.str() << "\t"
                  << (row.expected_matches ? "ok" : "MISMATCH")
                  << (row.unique ? "" : " (not unique)") << "\n";
    }
    std::cout << "all rows match: " << (report.all_match ? "yes" : "no")
              << "; all rows unique: " << (report.all_unique ? "yes" : "no") << "\n";
    return report.all_match ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"torsorlab: projective calculus over the power set of a finite group"};
    app.require_subcommand(1);

    std::string group_spec;
    SubsetArgs subs;
    bool opposite = false;

    auto add_group = [&](CLI::App* cmd) {
        cmd->add_option("--group", group_spec, "builtin name (z<n>, s<n>, d<n>, q8, k4, products like z2xz4) or group file path")
            ->required();
    };

    CLI::App* gamma_cmd = app.add_subcommand("gamma", "evaluate the balanced map on five subsets");
    add_group(gamma_cmd);
    gamma_cmd->add_option("--x", subs.x, "subset literal, e.g. 0,3")->required();
    gamma_cmd->add_option("--a", subs.a, "subset literal")->required();
    gamma_cmd->add_option("--y", subs.y, "subset literal")->required();
    gamma_cmd->add_option("--b", subs.b, "subset literal")->required();
    gamma_cmd->add_option("--z", subs.z, "subset literal")->required();
    gamma_cmd->add_flag("--opposite", opposite, "evaluate the mirror-order map instead");

    CLI::App* sigma_cmd = app.add_subcommand("sigma", "evaluate the one-sided map on four subsets");
    add_group(sigma_cmd);
    sigma_cmd->add_option("--b", subs.b, "subset literal")->required();
    sigma_cmd->add_option("--x", subs.x, "subset literal")->required();
    sigma_cmd->add_option("--y", subs.y, "subset literal")->required();
    sigma_cmd->add_option("--z", subs.z, "subset literal")->required();
    sigma_cmd->add_flag("--opposite", opposite, "evaluate the mirror-order map instead");

    SuiteConfig cfg;
    std::string out_path, format = "json", mode = "auto";
    CLI::App* suite_cmd = app.add_subcommand("suite", "run the full check catalog and write a report");
    add_group(suite_cmd);
    suite_cmd->add_option("--seed", cfg.seed, "seed for sampled scans")->envname("TORSORLAB_SEED");
    suite_cmd->add_option("--out", out_path, "report file (default: stdout)");
    suite_cmd->add_option("--format", format, "report format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    suite_cmd->add_option("--mode", mode, "auto | exhaustive | seeded[:k]");
    suite_cmd->add_option("--threshold-subsets", cfg.subset_threshold,
                          "exhaustive subset scans iff 2^|G| <= this");
    suite_cmd->add_option("--threshold-subgroups", cfg.subgroup_threshold,
                          "exhaustive subgroup-tuple scans iff the subgroup count <= this");

    CLI::App* enum_cmd = app.add_subcommand("enumerate", "list subgroups, transversals, or carrier elements");
    enum_cmd->require_subcommand(1);
    std::string kind = "uab";
    CLI::App* gr_cmd = enum_cmd->add_subcommand("grassmannian", "all subgroups");
    add_group(gr_cmd);
    CLI::App* tr_cmd = enum_cmd->add_subcommand("transversals", "all left transversals of --b");
    add_group(tr_cmd);
    tr_cmd->add_option("--b", subs.b, "subset literal")->required();
    CLI::App* ca_cmd = enum_cmd->add_subcommand("carrier", "elements of a torsor carrier");
    add_group(ca_cmd);
    ca_cmd->add_option("--a", subs.a, "subset literal (uab only)");
    ca_cmd->add_option("--b", subs.b, "subset literal")->required();
    ca_cmd->add_option("--kind", kind, "uab | ub")->check(CLI::IsMember({"uab", "ub"}));

    CLI::App* sign_cmd = app.add_subcommand("signtable", "verify the 24-row permutation sign table");
    add_group(sign_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        apply_mode(mode, cfg);
        if (gamma_cmd->parsed()) return cmd_map(group_spec, subs, opposite, true);
        if (sigma_cmd->parsed()) return cmd_map(group_spec, subs, opposite, false);
        if (suite_cmd->parsed()) return cmd_suite(group_spec, cfg, out_path, format);
        if (gr_cmd->parsed()) return cmd_enumerate_grassmannian(group_spec);
        if (tr_cmd->parsed()) return cmd_enumerate_transversals(group_spec, subs.b);
        if (ca_cmd->parsed()) return cmd_enumerate_carrier(group_spec, subs.a, subs.b, kind);
        if (sign_cmd->parsed()) return cmd_signtable(group_spec);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
