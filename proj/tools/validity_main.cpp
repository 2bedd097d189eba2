// validity: sweep the FCM cluster count and report every validity index.
//
//   validity sweep --data <builtin|csv:PATH> [options]
//   validity suite [--seed N] [--format tsv|markdown] [--out PATH]
//
// Exit codes: 0 success, 2 configuration error, 3 solver failure at every c,
// 1 anything else.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "validity/bench.hpp"
#include "validity/data.hpp"

namespace {

using namespace validity;

constexpr int kExitConfig = 2;
constexpr int kExitSolver = 3;

struct SweepOptions {
    std::string data;
    std::optional<std::size_t> c_min;
    std::optional<std::size_t> c_max;
    double m = 2.0;
    double epsilon = 0.001;
    std::size_t max_iter = 300;
    std::size_t restarts = 10;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> data_seed;
    double mu_step = 0.01;
    std::string omega = "ratio";
    std::string indexes = "all";
    std::string format = "tsv";
    std::optional<double> log_base;
    std::optional<double> cwb_alpha;
    double bcrit_alpha = 1.0;
    std::string plot;
    std::optional<std::size_t> plot_c;
    std::string out;
};

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
    if (flag) {
        return *flag;
    }
    if (const char* env = std::getenv("VALIDITY_SEED"); env && *env) {
        try {
            std::size_t used = 0;
            const auto value = std::stoull(env, &used);
            if (used == std::string(env).size()) {
                return value;
            }
        } catch (const std::exception&) {
        }
        throw Error(ErrorKind::invalid_request, std::string("VALIDITY_SEED is not an unsigned integer: ") + env);
    }
    return 0;
}

bench::SweepConfig make_config(const SweepOptions& o, std::uint64_t seed) {
    bench::SweepConfig cfg;
    if (o.c_min) {
        cfg.c_min = *o.c_min;
    }
    cfg.c_max = o.c_max;
    cfg.fcm.m = o.m;
    cfg.fcm.epsilon = o.epsilon;
    cfg.fcm.max_iter = o.max_iter;
    cfg.fcm.restarts = o.restarts;
    cfg.fcm.seed = seed;
    cfg.grid.step = o.mu_step;
    cfg.weight.mode = proximity::parse_weight_mode(o.omega);
    cfg.indexes = bench::parse_index_list(o.indexes);
    if (o.log_base) {
        cfg.pe.log_base = *o.log_base;
    }
    if (o.cwb_alpha) {
        cfg.cwb = indexes::CwbParams{*o.cwb_alpha};
    }
    cfg.bcrit.alpha = o.bcrit_alpha;
    return cfg;
}

std::pair<DataSet, data::DatasetSpec> load_data(const std::string& source, std::uint64_t seed) {
    constexpr std::string_view csv_prefix = "csv:";
    if (source.rfind(csv_prefix, 0) == 0) {
        std::filesystem::path path = source.substr(csv_prefix.size());
        DataSet ds = data::load_csv(path);
        return {std::move(ds), data::DatasetSpec{path, {}, {}, {}, {}}};
    }
    return data::builtin(source, seed);
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out) {
        throw Error(ErrorKind::io, "cannot write " + path);
    }
}

int run_sweep(const SweepOptions& o) {
    const std::uint64_t seed = resolve_seed(o.seed);
    const auto format = bench::parse_table_format(o.format);
    auto [ds, spec] = load_data(o.data, o.data_seed.value_or(seed));
    const auto cfg = make_config(o, seed);

    auto report = bench::sweep(ds, cfg);
    if (!spec.note.empty()) {
        report.notes.push_back(spec.note);
    }
    if (spec.c_optimal) {
        report.notes.push_back("reference c=" + std::to_string(*spec.c_optimal));
    }
    write_output(bench::emit_table(report, format), o.out);

    if (report.all_failed()) {
        std::cerr << "validity: FCM failed at every c\n";
        return kExitSolver;
    }

    if (!o.plot.empty()) {
        std::size_t c = o.plot_c.value_or(report.selected_for(bench::IndexId::proposed).value_or(cfg.c_min));
        const bench::SweepRow* row = report.row_for(c);
        if (!row || row->failed) {
            throw Error(ErrorKind::invalid_request, "no FCM partition available at c=" + std::to_string(c));
        }
        for (const auto& w : bench::emit_plot(ds, *row->result, o.plot).warnings) {
            std::cerr << "validity: warning: " << w << "\n";
        }
    }
    return 0;
}

int run_suite(std::optional<std::uint64_t> seed_flag, const std::string& format_name, const std::string& out) {
    const std::uint64_t seed = resolve_seed(seed_flag);
    const auto format = bench::parse_table_format(format_name);
    write_output(bench::run_suite(seed, format), out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fuzzy c-means cluster validity benchmark"};
    app.require_subcommand(1);

    SweepOptions o;
    auto* sweep = app.add_subcommand("sweep", "Sweep c over one data set and score every index");
    sweep->add_option("--data", o.data, "Builtin name (bensaid|starfield|iris|x30|butterfly) or csv:PATH")->required();
    sweep->add_option("--c-min", o.c_min, "Smallest cluster count (default 2)");
    sweep->add_option("--c-max", o.c_max, "Largest cluster count (default floor(sqrt(n)))");
    sweep->add_option("--m", o.m, "Fuzzifier")->capture_default_str();
    sweep->add_option("--epsilon", o.epsilon, "Membership-change convergence threshold")->capture_default_str();
    sweep->add_option("--max-iter", o.max_iter, "Iteration cap per restart")->capture_default_str();
    sweep->add_option("--restarts", o.restarts, "Seeded FCM restarts per c")->capture_default_str();
    sweep->add_option("--seed", o.seed, "Base seed (fallback: VALIDITY_SEED, then 0)");
    sweep->add_option("--data-seed", o.data_seed, "Generator seed for synthetic builtins (default: --seed)");
    sweep->add_option("--mu-step", o.mu_step, "Membership grid step h")->capture_default_str();
    sweep->add_option("--omega", o.omega, "Vagueness weight: ratio|one")->capture_default_str();
    sweep->add_option("--indexes", o.indexes, "Comma list of pc,pe,xb,fs,k,cwb,bcrit,proposed or 'all'")
        ->capture_default_str();
    sweep->add_option("--format", o.format, "tsv|markdown")->capture_default_str();
    sweep->add_option("--pe-log-base", o.log_base, "Log base of the partition entropy (default e)");
    sweep->add_option("--cwb-alpha", o.cwb_alpha, "CWB alpha (default: self-scaled from c=2)");
    sweep->add_option("--bcrit-alpha", o.bcrit_alpha, "Bcrit alpha")->capture_default_str();
    sweep->add_option("--plot", o.plot, "Write an SVG scatter plot to PATH");
    sweep->add_option("--plot-c", o.plot_c, "Cluster count to plot (default: V_proposed selection)");
    sweep->add_option("--out", o.out, "Write the table to PATH instead of standard output");

    std::optional<std::uint64_t> suite_seed;
    std::string suite_format = "tsv";
    std::string suite_out;
    auto* suite = app.add_subcommand("suite", "Sweep every builtin data set and print a summary of selected c");
    suite->add_option("--seed", suite_seed, "Base seed (fallback: VALIDITY_SEED, then 0)");
    suite->add_option("--format", suite_format, "tsv|markdown")->capture_default_str();
    suite->add_option("--out", suite_out, "Write to PATH instead of standard output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        if (sweep->parsed()) {
            return run_sweep(o);
        }
        return run_suite(suite_seed, suite_format, suite_out);
    } catch (const Error& e) {
        std::cerr << "validity: " << to_string(e.kind()) << " error: " << e.what() << "\n";
        switch (e.kind()) {
        case ErrorKind::solver_failure: return kExitSolver;
        case ErrorKind::io: return 1;
        default: return kExitConfig;
        }
    } catch (const std::exception& e) {
        std::cerr << "validity: " << e.what() << "\n";
        return 1;
    }
}
