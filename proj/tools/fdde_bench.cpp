#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <system_error>
#include <vector>

#include <CLI11.hpp>

#include "fdde/runner.hpp"

namespace {

std::vector<std::string> split_csv(const std::string& s)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(item);
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Benchmark runner for fractional delay differential equations"};
    app.set_help_flag("--help", "Print this help message and exit"); // frees -h for --h

    std::optional<std::string> config_path, preset, b_coeffs, schemes, out_dir;
    std::optional<double> alpha, a, delay, y0, h, tmax;
    std::optional<std::size_t> K;
    bool plot_data = false;

    auto* opt_config = app.add_option("--config", config_path, "JSON experiment description");
    app.add_option("--preset", preset, "Named benchmark preset (ex1..ex5, caputo-bench)")
        ->excludes(opt_config);
    app.add_option("--alpha", alpha, "Fractional order in (0,1]");
    app.add_option("--a", a, "Delay coefficient");
    app.add_option("--delay", delay, "Delay T > 0");
    app.add_option("--y0", y0, "Initial value");
    app.add_option("--h", h, "Mesh step (T/h must be an integer)");
    app.add_option("--tmax", tmax, "Simulation horizon");
    app.add_option("--b-coeffs", b_coeffs, "Forcing coefficients b_0,b_1,... (comma separated)");
    app.add_option("--K", K, "Forcing truncation order (drops or zero-pads b-coeffs)");
    app.add_option("--schemes", schemes, "Schemes to run (comma separated labels)");
    app.add_option("--out", out_dir, "Output directory");
    app.add_flag("--plot-data", plot_data, "Also emit combined plotdata.csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2; // command-line problems are config errors
    }

    try {
        fdde::RunConfig config;
        if (config_path) {
            std::ifstream in(*config_path);
            if (!in) {
                std::fprintf(stderr, "error: cannot read config file %s\n",
                             config_path->c_str());
                return 4;
            }
            std::stringstream buf;
            buf << in.rdbuf();
            config = fdde::parse_config(buf.str());
        } else if (preset) {
            config = fdde::preset_config(*preset);
        }

        if (alpha)
            config.problem.alpha = *alpha;
        if (a)
            config.problem.a = *a;
        if (delay)
            config.problem.T = *delay;
        if (y0)
            config.problem.y0 = *y0;
        if (h)
            config.problem.h = *h;
        if (tmax)
            config.problem.t_max = *tmax;
        if (b_coeffs) {
            std::vector<double> coeffs;
            for (const auto& tok : split_csv(*b_coeffs)) {
                try {
                    std::size_t pos = 0;
                    coeffs.push_back(std::stod(tok, &pos));
                    if (pos != tok.size())
                        throw std::invalid_argument(tok);
                } catch (const std::exception&) {
                    std::fprintf(stderr, "error: bad --b-coeffs entry '%s'\n", tok.c_str());
                    return 2;
                }
            }
            config.problem.forcing.coeffs = coeffs;
        }
        if (K)
            config.problem.forcing.coeffs.resize(*K + 1, 0.0);
        if (schemes)
            config.schemes = split_csv(*schemes);
        if (out_dir)
            config.output_dir = *out_dir;
        if (plot_data)
            config.emit_plot_data = true;

        const fdde::RunSummary summary = fdde::run_experiment(config);
        for (const auto& [label, report] : summary.errors) {
            std::printf("%-16s max_rel=%.6e rms_rel=%.6e max_abs=%.6e n=%zu%s\n",
                        label.c_str(), report.max_rel, report.rms_rel, report.max_abs,
                        report.n_points, report.diverged_at ? "  [diverged]" : "");
        }
        std::printf("wrote %zu files to %s\n", summary.files.size(),
                    config.output_dir.c_str());
        return summary.any_diverged ? 3 : 0;
    } catch (const std::system_error& e) {
        std::fprintf(stderr, "I/O error: %s\n", e.what());
        return 4;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "runtime error: %s\n", e.what());
        return 3;
    }
}
