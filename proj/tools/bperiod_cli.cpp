// bperiod: periodicity test for binary time series.
//
//   bperiod test series.txt --d 60 [--alpha 0.05] [--csv | --json]
//   bperiod critval 29 0.05
//   bperiod pvalue 29 0.1356
//   bperiod theory profile.txt --d 60
//   bperiod simulate scenario.txt [--reps N] [--seed S]
//   bperiod generate scenario.txt --out series.txt [--index k]
//   bperiod table T3 [--reps 20000] [--seed 42]
//
// Exit status 0 means the command ran; the test decision is part of the output.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "bperiod/fisher_dist.hpp"
#include "bperiod/io.hpp"
#include "bperiod/report.hpp"
#include "bperiod/simulate.hpp"
#include "bperiod/theory.hpp"

namespace {

using namespace bperiod;

struct Common {
    bool csv = false;
    bool full_precision = false;
    std::size_t threads = 0;

    [[nodiscard]] NumberFormat format() const { return {full_precision}; }
};

std::string num(double v, NumberFormat f) {
    return f.full_precision ? fmt::format("{:.17g}", v) : fmt::format("{:.4f}", v);
}

void add_output_flags(CLI::App* cmd, Common& common) {
    cmd->add_flag("--csv", common.csv, "Emit CSV instead of text");
    cmd->add_flag("--full-precision", common.full_precision, "Print 17 significant digits instead of 4 decimals");
}

void warn_if_capped(std::size_t q) {
    if (!tail_is_exact(q)) {
        std::cerr << fmt::format("warning: q = {} exceeds {}, exact tail replaced by the leading-term approximation\n",
                                 q, kMaxExactQ);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Test binary time series for unspecified periodicities with Fisher's g on folded block means"};
    app.require_subcommand(1);
    Common common;

    // test
    std::string series_path;
    std::size_t d = 0;
    double alpha = 0.05;
    bool json = false;
    auto* test = app.add_subcommand("test", "Run the periodicity test on a series file");
    test->add_option("file", series_path, "Series file (0/1 tokens)")->required()->check(CLI::ExistingFile);
    test->add_option("--d", d, "Fold length d (>= 3); highly composite values such as 60 are recommended")
        ->required();
    test->add_option("--alpha", alpha, "Significance level")->check(CLI::Range(0.0, 1.0));
    test->add_flag("--json", json, "Emit a JSON record");
    add_output_flags(test, common);

    // critval
    std::size_t q = 0;
    auto* critval = app.add_subcommand("critval", "Critical values k_alpha for q frequencies");
    critval->add_option("q", q, "Number of Fourier frequencies")->required();
    critval->add_option("alpha", alpha, "Significance level")->required();
    add_output_flags(critval, common);

    // pvalue
    double x = 0.0;
    auto* pvalue = app.add_subcommand("pvalue", "Tail probability P(g >= x) for q frequencies");
    pvalue->add_option("q", q, "Number of Fourier frequencies")->required();
    pvalue->add_option("x", x, "Statistic value")->required();
    add_output_flags(pvalue, common);

    // theory
    std::string profile_path;
    auto* theory = app.add_subcommand("theory", "Asymptotic limits and detectability for a periodic profile");
    theory->add_option("file", profile_path, "Profile file (p_1..p_r)")->required()->check(CLI::ExistingFile);
    theory->add_option("--d", d, "Fold length d (>= 3)")->required();
    add_output_flags(theory, common);

    // simulate
    std::string scenario_path;
    std::optional<std::size_t> reps;
    std::optional<std::uint64_t> seed;
    auto* simulate = app.add_subcommand("simulate", "Estimate the rejection rate for a scenario file");
    simulate->add_option("file", scenario_path, "Scenario file")->required()->check(CLI::ExistingFile);
    simulate->add_option("--reps", reps, "Override the number of replications");
    simulate->add_option("--seed", seed, "Override the seed");
    simulate->add_option("--threads", common.threads, "Worker threads (0 = all cores)");
    add_output_flags(simulate, common);

    // generate
    std::string out_path;
    std::uint64_t index = 0;
    auto* generate = app.add_subcommand("generate", "Write one simulated series for a scenario file");
    generate->add_option("file", scenario_path, "Scenario file")->required()->check(CLI::ExistingFile);
    generate->add_option("--out", out_path, "Output series file (default: stdout)");
    generate->add_option("--seed", seed, "Override the seed");
    generate->add_option("--index", index, "Replication index of the random stream");

    // table
    std::string table_name;
    std::size_t table_reps = 20000;
    std::uint64_t table_seed = 42;
    auto* table = app.add_subcommand("table", "Reproduce a simulation table (T1..T5, PI)");
    table->add_option("id", table_name, "Table id: T1, T2, T3, T4, T5 or PI")->required();
    table->add_option("--reps", table_reps, "Replications per cell");
    table->add_option("--seed", table_seed, "Seed shared by all cells");
    table->add_option("--threads", common.threads, "Worker threads (0 = all cores)");
    add_output_flags(table, common);

    CLI11_PARSE(app, argc, argv);
    const auto nf = common.format();

    try {
        if (*test) {
            const auto series = read_series_file(series_path);
            const auto report = run_test(series, d, alpha);
            if (json) {
                std::cout << format_json(report) << '\n';
            } else if (common.csv) {
                std::cout << csv_header_test() << '\n' << format_csv(report, nf) << '\n';
            } else {
                std::cout << format_text(report, nf);
            }
        } else if (*critval) {
            const auto cv = critical_value(q, alpha);
            warn_if_capped(q);
            if (common.csv) {
                std::cout << "q,alpha,exact,approx\n"
                          << fmt::format("{},{},{},{}\n", q, num(alpha, nf), num(cv.exact, nf), num(cv.approx, nf));
            } else {
                std::cout << fmt::format("q       {}\nalpha   {}\napprox  {}\nexact   {}\n", q, num(alpha, nf),
                                         num(cv.approx, nf), num(cv.exact, nf));
            }
        } else if (*pvalue) {
            const double exact = tail(q, x);
            const double approx = tail_approx(q, x);
            warn_if_capped(q);
            if (common.csv) {
                std::cout << "q,x,exact,approx\n"
                          << fmt::format("{},{},{},{}\n", q, num(x, nf), num(exact, nf), num(approx, nf));
            } else {
                std::cout << fmt::format("q       {}\nx       {}\nexact   {}\napprox  {}\n", q, num(x, nf),
                                         num(exact, nf), num(approx, nf));
            }
        } else if (*theory) {
            const auto profile = read_profile_file(profile_path);
            const auto summary = detectability(profile, d);
            if (common.csv) {
                std::cout << format_csv(summary, nf);
                for (const auto& w : summary.warnings) std::cerr << "warning: " << w << '\n';
            } else {
                std::cout << format_text(summary, nf);
            }
        } else if (*simulate) {
            auto spec = read_scenario_file(scenario_path);
            if (reps) spec.replications = *reps;
            if (seed) spec.seed = *seed;
            const auto est = estimate_power(spec, common.threads);
            if (common.csv) {
                std::cout << kPowerCsvHeader << '\n' << to_csv_row(est, nf.full_precision ? 17 : 4) << '\n';
            } else {
                std::cout << fmt::format(
                    "scenario     {}\nr            {}\nn            {}\nd            {}\nalpha        {}\n"
                    "replications {}\nrejections   {}\nrate         {}\nstd_error    {}\n"
                    "k_alpha      {} (approx, used)  {} (exact)\nseconds      {:.2f}\n",
                    to_string(spec.kind), spec.reported_period(), spec.n, spec.d, num(spec.alpha, nf),
                    spec.replications, est.rejections, num(est.rate, nf), num(est.std_error, nf),
                    num(est.k_alpha_approx, nf), num(est.k_alpha_exact, nf), est.elapsed.count());
            }
        } else if (*generate) {
            auto spec = read_scenario_file(scenario_path);
            if (seed) spec.seed = *seed;
            spec.validate();
            StreamRng rng(spec.seed, index);
            const auto series = spec.kind == ScenarioKind::RandomIid
                                    ? simulate_series(draw_random_profile(spec.n, rng), spec.n, rng)
                                    : simulate_series(build_profile(spec), spec.n, rng);
            if (out_path.empty()) {
                write_series(std::cout, series);
            } else {
                std::ofstream out(out_path);
                if (!out) throw std::runtime_error("cannot write " + out_path);
                write_series(out, series);
            }
        } else if (*table) {
            const auto id = parse_table_id(table_name);
            if (!id) throw std::invalid_argument("unknown table id '" + table_name + "'");
            const auto result = run_table(*id, table_reps, table_seed, common.threads);
            std::cout << (common.csv ? format_csv(result, nf) : format_text(result, nf));
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
