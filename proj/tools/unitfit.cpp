// Command-line front end: dataset description, maximum-likelihood fits,
// family comparisons and plot emission for distributions on (0, 1).
//
// Exit codes: 0 success, 2 usage or unknown reference, 3 data error,
// 4 non-convergence (results still printed), 5 I/O error.

#include "unitfit/dataset.hpp"
#include "unitfit/render.hpp"
#include "unitfit/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

namespace {

using namespace unitfit;

constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitNoConverge = 4;
constexpr int kExitIo = 5;

class CliError : public std::runtime_error {
public:
    CliError(int code, const std::string& msg) : std::runtime_error(msg), code(code) {}
    int code;
};

Dataset resolve_dataset(const std::string& ref) {
    // integer id, embedded name, or file path
    try {
        size_t used = 0;
        const int id = std::stoi(ref, &used);
        if (used == ref.size()) {
            try {
                return load_embedded(id);
            } catch (const std::out_of_range& e) {
                throw CliError(kExitUsage, e.what());
            }
        }
    } catch (const CliError&) {
        throw;
    } catch (const std::exception&) {
        // not an integer; fall through
    }
    if (const Dataset* d = find_embedded(ref)) return *d;
    if (!std::filesystem::exists(ref)) {
        throw CliError(kExitUsage, "unknown dataset reference '" + ref +
                                       "' (not an embedded id/name or readable file)");
    }
    try {
        return load_file(ref);
    } catch (const std::ios_base::failure& e) {
        throw CliError(kExitIo, e.what());
    } catch (const std::exception& e) {
        throw CliError(kExitData, e.what());
    }
}

Family resolve_family(const std::string& token) {
    if (auto f = family_from_name(token)) return *f;
    throw CliError(kExitUsage, "unknown family '" + token +
                                   "' (expected beta, kumaraswamy, topp_leone, unit_lindley, "
                                   "mbur, gombur1 or gombur2)");
}

std::vector<Family> resolve_families(const std::vector<std::string>& tokens) {
    if (tokens.empty()) return {kAllFamilies.begin(), kAllFamilies.end()};
    std::vector<Family> out;
    for (const auto& t : tokens) out.push_back(resolve_family(t));
    return out;
}

SimplexConfig config_from_env() {
    SimplexConfig cfg;
    if (const char* env = std::getenv("UNITFIT_MAX_ITERS")) {
        try {
            size_t used = 0;
            const int v = std::stoi(env, &used);
            if (used != std::string(env).size() || v < 1) throw std::invalid_argument(env);
            cfg.max_iterations = v;
        } catch (const std::exception&) {
            throw CliError(kExitUsage,
                           std::string("UNITFIT_MAX_ITERS must be a positive integer, got '") +
                               env + "'");
        }
    }
    return cfg;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out || !(out << text) || !out.flush()) {
        throw CliError(kExitIo, "cannot write '" + out_path + "'");
    }
}

std::string render_comparison(const Json& doc, const std::string& format) {
    if (format == "json") return doc.dump(2) + "\n";
    if (format == "csv") return comparison_csv(doc);
    return comparison_markdown(doc);
}

int cmd_list_datasets() {
    for (const auto& d : embedded_datasets()) {
        std::printf("%-3d %-22s %d\n", d.id, d.name.c_str(), d.n());
    }
    return 0;
}

int cmd_describe(const std::string& ref, const std::string& format, const std::string& out_path) {
    const Dataset data = resolve_dataset(ref);
    DescriptiveStats stats{};
    try {
        stats = describe(data.values);
    } catch (const std::exception& e) {
        throw CliError(kExitData, e.what());
    }
    const Json doc = describe_to_json(data, stats);
    std::string text;
    if (format == "json") {
        text = doc.dump(2) + "\n";
    } else if (format == "csv") {
        text = describe_csv(doc);
    } else {
        text = describe_markdown(doc);
    }
    emit(text, out_path);
    return 0;
}

int cmd_fit_or_compare(const std::string& ref, const std::vector<std::string>& family_tokens,
                       const std::string& format, const std::string& out_path) {
    const Dataset data = resolve_dataset(ref);
    const std::vector<Family> families = resolve_families(family_tokens);
    ComparisonTable table;
    try {
        table = build_comparison(data, families, config_from_env());
    } catch (const std::domain_error& e) {
        throw CliError(kExitData, e.what());
    }
    emit(render_comparison(comparison_to_json(table), format), out_path);
    for (const auto& b : table.blocks) {
        if (b.failed() || !b.fit.converged) return kExitNoConverge;
    }
    return 0;
}

int cmd_plot(const std::string& ref, const std::string& kind,
             const std::vector<std::string>& family_tokens, const std::string& out_path) {
    const Dataset data = resolve_dataset(ref);
    const std::vector<Family> families = resolve_families(family_tokens);
    const SimplexConfig cfg = config_from_env();

    std::vector<FamilySpec> specs;
    bool all_converged = true;
    for (Family f : families) {
        FitResult fit = fit_mle(f, data, cfg);
        all_converged = all_converged && fit.converged;
        specs.push_back(fit.spec);
    }

    PlotSeries plot;
    if (kind == "ecdf") {
        plot = ecdf_overlay(data, specs);
    } else if (kind == "pdf") {
        plot = pdf_overlay(data, specs);
    } else if (kind == "pp" || kind == "qq") {
        plot.kind = kind == "pp" ? PlotKind::pp : PlotKind::qq;
        for (const auto& spec : specs) {
            PlotSeries one = kind == "pp" ? pp_points(data, spec) : qq_points(data, spec);
            plot.series.push_back(std::move(one.series.front()));
        }
    } else {
        throw CliError(kExitUsage, "unknown plot kind '" + kind + "'");
    }

    std::string base = out_path;
    for (const char* ext : {".csv", ".svg"}) {
        if (base.size() > 4 && base.ends_with(ext)) base.resize(base.size() - 4);
    }
    const std::string title = data.name + " " + kind;
    struct { std::string path, text; } outputs[2] = {
        {base + ".csv", plot_csv(plot)},
        {base + ".svg", plot_svg(plot, title)},
    };
    for (const auto& o : outputs) {
        std::ofstream out(o.path, std::ios::binary);
        if (!out || !(out << o.text) || !out.flush()) {
            throw CliError(kExitIo, "cannot write '" + o.path + "'");
        }
    }
    std::cout << outputs[0].path << "\n" << outputs[1].path << "\n";
    return all_converged ? 0 : kExitNoConverge;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"maximum-likelihood fitting and comparison of unit-interval distributions"};
    app.require_subcommand(1);

    std::string ref, format = "markdown", out_path, family, kind;
    std::vector<std::string> families;
    bool seedless = false;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"markdown", "csv", "json"}));
        cmd->add_option("--out", out_path, "write output to this path instead of stdout");
        cmd->add_flag("--seedless", seedless, "deterministic mode (the only mode)");
    };

    app.add_subcommand("list-datasets", "list the embedded datasets");

    auto* cmd_desc = app.add_subcommand("describe", "descriptive statistics of a dataset");
    cmd_desc->add_option("dataset", ref, "dataset id, name or file path")->required();
    add_format(cmd_desc);

    auto* cmd_fit = app.add_subcommand("fit", "fit one family by maximum likelihood");
    cmd_fit->add_option("dataset", ref, "dataset id, name or file path")->required();
    cmd_fit->add_option("--family", family, "family to fit")->required();
    add_format(cmd_fit);

    auto* cmd_cmp = app.add_subcommand("compare", "fit and compare several families");
    cmd_cmp->add_option("dataset", ref, "dataset id, name or file path")->required();
    cmd_cmp->add_option("--families", families, "comma-separated family list (default: all)")
        ->delimiter(',');
    add_format(cmd_cmp);

    auto* cmd_pl = app.add_subcommand("plot", "emit plot data (CSV + SVG)");
    cmd_pl->add_option("dataset", ref, "dataset id, name or file path")->required();
    cmd_pl->add_option("--kind", kind, "plot kind")
        ->required()
        ->check(CLI::IsMember({"ecdf", "pdf", "pp", "qq"}));
    cmd_pl->add_option("--families", families, "comma-separated family list (default: all)")
        ->delimiter(',');
    cmd_pl->add_option("--out", out_path, "output base path (writes <out>.csv and <out>.svg)")
        ->required();
    cmd_pl->add_flag("--seedless", seedless, "deterministic mode (the only mode)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand("list-datasets")) return cmd_list_datasets();
        if (app.got_subcommand("describe")) return cmd_describe(ref, format, out_path);
        if (app.got_subcommand("fit")) return cmd_fit_or_compare(ref, {family}, format, out_path);
        if (app.got_subcommand("compare")) return cmd_fit_or_compare(ref, families, format, out_path);
        if (app.got_subcommand("plot")) return cmd_plot(ref, kind, families, out_path);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code;
    } catch (const unitfit::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}
