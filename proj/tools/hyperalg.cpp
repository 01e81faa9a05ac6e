#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>

#include "hyperalg/enumerate.hpp"
#include "hyperalg/format.hpp"
#include "hyperalg/harness.hpp"
#include "hyperalg/jobs.hpp"
#include "hyperalg/report.hpp"

using namespace hyperalg;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss{text};
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

ElementSet parse_kernel(const std::string& text, std::size_t order) {
    ElementSet s;
    for (const auto& item : split_list(text)) {
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size() || used == 0) throw UsageError("--kernel: '" + item + "' is not an index");
        if (v >= order) throw UsageError("--kernel: index " + item + " outside order " + std::to_string(order));
        s.insert(static_cast<Element>(v));
    }
    if (s.empty()) throw UsageError("--kernel: empty list");
    return s;
}

int cmd_check(const std::string& path) {
    const auto parsed = parse_hypergroup(read_file(path));
    const auto& h = parsed.hypergroup;
    std::cout << "axioms = ok\nname = " << parsed.name << "\norder = " << h.order() << "\nthin = "
              << (is_thin(h) ? "yes" : "no") << "\n";
    return exit_ok;
}

int cmd_analyze(const std::string& path, const std::string& mode) {
    const auto parsed = parse_hypergroup(read_file(path));
    const Analysis analysis{parsed.hypergroup};
    const auto report = make_report(analysis, parsed.name);
    std::cout << (mode == "machine" ? render_machine(report) : render_text(report));
    return report.violated ? exit_failure : exit_ok;
}

int cmd_quotient(const std::string& path, const std::string& kernel_text) {
    const auto parsed = parse_hypergroup(read_file(path));
    const auto& h = parsed.hypergroup;
    const auto kernel = parse_kernel(kernel_text, h.order());
    if (!is_closed(h, kernel)) throw NotClosed(kernel);
    const auto q = build_quotient(h, kernel);
    auto name = parsed.name + "-mod-" + kernel.to_string(".");
    std::cout << serialize_hypergroup(q.induced, name);
    for (std::size_t b = 0; b < q.blocks.size(); ++b)
        std::cout << "# block " << b << " = " << q.blocks[b].to_string() << "\n";
    return exit_ok;
}

int cmd_enumerate(std::size_t order, bool canonical, const std::string& out_dir, const std::string& strategy_name) {
    const auto strategy = strategy_name == "naive"    ? Strategy::naive
                          : strategy_name == "serial" ? Strategy::pruned_serial
                                                      : Strategy::pruned;
    if (strategy == Strategy::naive && order > 3) throw UsageError("--strategy naive supports orders 2 and 3 only");
    const auto result = enumerate_hypergroups(order, canonical, strategy);
    if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        for (std::size_t k = 0; k < result.hypergroups.size(); ++k) {
            const auto name = "order" + std::to_string(order) + "-" + std::to_string(k);
            const auto file = (std::filesystem::path(out_dir) / (name + ".hg")).string();
            write_file(file, serialize_hypergroup(result.hypergroups[k], name));
            std::cout << "wrote " << file << "\n";
        }
    }
    const auto& c = result.counters;
    std::cout << "candidates=" << c.candidates << " survivors=" << c.survivors << " rejects=" << c.rejects;
    if (canonical) std::cout << " classes=" << result.hypergroups.size();
    std::cout << "\n";
    return exit_ok;
}

int cmd_from_group(const std::string& path, const std::string& builtin) {
    const auto g = builtin.empty() ? parse_group(read_file(path)) : builtin_group(builtin);
    std::cout << serialize_hypergroup(from_group(g), g.name);
    return exit_ok;
}

int cmd_verify(std::size_t order, std::size_t groups_up_to, const std::string& statements_text) {
    auto ids = statements_text.empty() ? all_statement_ids() : split_list(statements_text);
    for (const auto& id : ids) {
        bool known = false;
        for (const auto& s : statement_catalog()) known = known || s.id == id;
        if (!known) throw UsageError("unknown statement: " + id);
    }
    const auto corpus = build_corpus(order, groups_up_to);
    const auto report = run_harness(corpus, ids);
    std::cout << "entries = " << report.entries << "\n";
    for (const auto& t : report.tallies)
        std::cout << t.id << ": holds=" << t.holds << " hypothesis-not-met=" << t.hypothesis_not_met
                  << " violated=" << t.violated << "\n";
    for (const auto& v : report.violations)
        std::cout << "VIOLATED " << v.statement << " on " << v.entry << ": " << v.witness << "\n" << v.serialized;
    std::cout << "violated = " << report.violated_count() << "\n";
    return report.ok() ? exit_ok : exit_failure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hyperalg: finite hypergroups - axioms, closed subsets, quotients, series"};
    app.require_subcommand(1);

    std::string file;
    auto* check = app.add_subcommand("check", "validate a hypergroup file");
    check->add_option("FILE", file, "hypergroup file")->required();

    std::string report_mode = "text";
    auto* analyze = app.add_subcommand("analyze", "print the full analysis report");
    analyze->add_option("FILE", file, "hypergroup file")->required();
    analyze->add_option("--report", report_mode, "text or machine")->check(CLI::IsMember({"text", "machine"}));

    std::string kernel;
    auto* quotient = app.add_subcommand("quotient", "print H//F for a closed kernel F");
    quotient->add_option("FILE", file, "hypergroup file")->required();
    quotient->add_option("--kernel", kernel, "comma-separated element indices")->required();

    std::size_t order = 0;
    bool canonical = false;
    std::string out_dir;
    std::string strategy = "pruned";
    auto* enumerate = app.add_subcommand("enumerate", "enumerate every hypergroup of one order");
    enumerate->add_option("--order", order, "order, 2..4")->required()->check(CLI::Range(2, 4));
    enumerate->add_flag("--canonical", canonical, "one representative per relabeling class");
    enumerate->add_option("--out", out_dir, "directory for one file per hypergroup");
    enumerate->add_option("--strategy", strategy, "pruned, serial or naive")
        ->check(CLI::IsMember({"pruned", "serial", "naive"}));

    std::string builtin;
    auto* from_group_cmd = app.add_subcommand("from-group", "convert a group table to a thin hypergroup file");
    auto* group_file = from_group_cmd->add_option("FILE", file, "group file");
    auto* builtin_opt = from_group_cmd->add_option("--builtin", builtin, "name of a builtin group, e.g. S3, A5");
    group_file->excludes(builtin_opt);
    from_group_cmd->require_option(1);

    std::size_t verify_order = 3;
    std::size_t groups_up_to = 8;
    std::string statements;
    auto* verify = app.add_subcommand("verify", "check every statement over the enumerated and group corpus");
    verify->add_option("--order", verify_order, "largest enumerated order, 0..4")->check(CLI::Range(0, 4));
    verify->add_option("--groups-up-to", groups_up_to, "largest builtin group order");
    verify->add_option("--statements", statements, "comma-separated statement ids (default: all)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const auto code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (const auto jobs = jobs_from_env()) set_jobs(*jobs);
    } catch (const std::invalid_argument& e) {
        std::cerr << "HYPERALG_JOBS: " << e.what() << "\n";
        return exit_usage;
    }

    try {
        if (*check) return cmd_check(file);
        if (*analyze) return cmd_analyze(file, report_mode);
        if (*quotient) return cmd_quotient(file, kernel);
        if (*enumerate) return cmd_enumerate(order, canonical, out_dir, strategy);
        if (*from_group_cmd) return cmd_from_group(file, builtin);
        if (*verify) return cmd_verify(verify_order, groups_up_to, statements);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_failure;
    } catch (const NotClosed& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_failure;
    } catch (const InternalMismatch& e) {
        std::cerr << "internal mismatch: " << e.what() << "\n";
        return exit_failure;
    } catch (const std::invalid_argument& e) {
        // unknown builtin group and similar argument problems
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_failure;
    }
    return exit_usage;
}
