#include "fdde/runner.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include <json.hpp>

#include "fdde/caputo.hpp"
#include "fdde/conformable.hpp"
#include "fdde/series.hpp"

namespace fdde {

namespace {

using nlohmann::json;

const char* family_name(Family f)
{
    return f == Family::conformable ? "conformable" : "caputo";
}

void validate(const RunConfig& c, std::vector<std::string>& issues)
{
    const ProblemConfig& p = c.problem;
    if (!(p.alpha > 0.0 && p.alpha <= 1.0))
        issues.push_back("alpha: must lie in (0,1]");
    if (!(p.T > 0.0))
        issues.push_back("delay: must be positive");
    if (!(p.h > 0.0))
        issues.push_back("h: must be positive");
    if (!(p.t_max >= 0.0))
        issues.push_back("tmax: must be non-negative");
    if (p.forcing.coeffs.empty())
        issues.push_back("b_coeffs: need at least one coefficient");
    if (p.T > 0.0 && p.h > 0.0) {
        const double ratio = p.T / p.h;
        if (!(std::round(ratio) >= 1.0) ||
            std::abs(ratio - std::round(ratio)) > 1e-12 * ratio)
            issues.push_back("h: delay/h must be an integer (delay-aligned mesh)");
    }
    if (c.schemes.empty())
        issues.push_back("schemes: need at least one scheme");
    for (const auto& s : c.schemes) {
        bool known = false;
        for (const auto& k : known_schemes())
            known = known || k == s;
        if (!known)
            issues.push_back("schemes: unknown label '" + s + "'");
        else if (!scheme_matches_family(s, p.family))
            issues.push_back("schemes: '" + s + "' is incompatible with family=" +
                             family_name(p.family));
    }
}

void throw_if_invalid(const RunConfig& c)
{
    std::vector<std::string> issues;
    validate(c, issues);
    if (issues.empty())
        return;
    std::string msg = "invalid run config:";
    for (const auto& i : issues)
        msg += "\n  - " + i;
    throw std::invalid_argument(msg);
}

class CsvFile {
public:
    explicit CsvFile(const std::string& path) : path_(path), f_(std::fopen(path.c_str(), "w"))
    {
        if (!f_)
            throw std::system_error(errno, std::generic_category(),
                                    "cannot open " + path + " for writing");
    }
    ~CsvFile()
    {
        if (f_)
            std::fclose(f_);
    }
    CsvFile(const CsvFile&) = delete;
    CsvFile& operator=(const CsvFile&) = delete;

    void puts(const std::string& s) { std::fputs(s.c_str(), f_); }
    void number(double v) { std::fprintf(f_, "%.17g", v); }
    template <typename... Args>
    void printf(const char* fmt, Args... args) { std::fprintf(f_, fmt, args...); }

    void close()
    {
        if (f_ && std::fclose(f_) != 0) {
            f_ = nullptr;
            throw std::system_error(errno, std::generic_category(), "error closing " + path_);
        }
        f_ = nullptr;
    }

private:
    std::string path_;
    std::FILE* f_;
};

} // namespace

const std::vector<std::string>& known_schemes()
{
    static const std::vector<std::string> labels = {
        "series",        "euler",     "rk4",             "rk4-interp",
        "caputo-series", "caputo-l1", "caputo-l21sigma", "caputo-pc"};
    return labels;
}

bool scheme_matches_family(const std::string& label, Family family)
{
    const bool caputo_label = label.rfind("caputo", 0) == 0;
    return caputo_label == (family == Family::caputo);
}

Trajectory run_scheme(const ProblemConfig& cfg, const std::string& label)
{
    if (!scheme_matches_family(label, cfg.family))
        throw std::invalid_argument("run_scheme: scheme '" + label +
                                    "' is incompatible with family=" +
                                    family_name(cfg.family));
    if (label == "series" || label == "caputo-series")
        return SeriesEvaluator(cfg).trajectory(label);
    if (label == "euler")
        return solve_euler_conformable(cfg);
    if (label == "rk4")
        return solve_rk4_conformable(cfg, false);
    if (label == "rk4-interp")
        return solve_rk4_conformable(cfg, true);
    if (label == "caputo-l1")
        return solve_l1_euler_caputo(cfg);
    if (label == "caputo-l21sigma")
        return solve_l2_1sigma_caputo(cfg);
    if (label == "caputo-pc")
        return solve_predictor_corrector_caputo(cfg);
    throw std::invalid_argument("run_scheme: unknown scheme '" + label + "'");
}

RunConfig preset_config(const std::string& name)
{
    RunConfig c;
    ProblemConfig& p = c.problem;
    p.alpha = 0.7;
    p.y0 = 1.0;
    p.h = 0.001;
    p.forcing = ForcingSeries{{1.0, 0.2, -0.05}};
    p.t_max = 120.0;
    c.preset = name;

    if (name == "ex1") {
        p.a = 0.5;
        p.T = 0.7;
    } else if (name == "ex2") {
        p.a = 0.5;
        p.T = 2.0;
    } else if (name == "ex3") {
        p.a = 0.5;
        p.T = 3.0;
    } else if (name == "ex4") {
        p.a = 0.5;
        p.T = 5.0;
    } else if (name == "ex5") {
        p.a = 1.1;
        p.T = 3.0;
    } else if (name == "caputo-bench") {
        p.a = 0.5;
        p.T = 1.0;
        p.t_max = 10.0;
        p.family = Family::caputo;
        c.schemes = {"caputo-series", "caputo-l1", "caputo-l21sigma", "caputo-pc"};
        return c;
    } else {
        throw std::invalid_argument("unknown preset '" + name + "'");
    }
    p.family = Family::conformable;
    c.schemes = {"series", "euler", "rk4", "rk4-interp"};
    return c;
}

RunConfig parse_config(const std::string& source)
{
    json doc;
    try {
        doc = json::parse(source);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("config parse error: ") + e.what());
    }
    if (!doc.is_object())
        throw std::invalid_argument("config parse error: top level must be an object");

    static const std::vector<std::string> allowed = {
        "preset", "alpha",  "a",       "delay",      "y0",        "h",     "tmax",
        "b_coeffs", "K",    "family",  "schemes",    "output_dir", "plot_data"};
    std::vector<std::string> issues;
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        bool ok = false;
        for (const auto& k : allowed)
            ok = ok || k == it.key();
        if (!ok)
            issues.push_back("unknown key '" + it.key() + "'");
    }

    RunConfig c;
    try {
        if (doc.contains("preset"))
            c = preset_config(doc["preset"].get<std::string>());
    } catch (const std::exception& e) {
        issues.push_back(std::string("preset: ") + e.what());
    }

    auto num = [&](const char* key, double& target) {
        if (!doc.contains(key))
            return;
        if (!doc[key].is_number())
            issues.push_back(std::string(key) + ": expected a number");
        else
            target = doc[key].get<double>();
    };
    num("alpha", c.problem.alpha);
    num("a", c.problem.a);
    num("delay", c.problem.T);
    num("y0", c.problem.y0);
    num("h", c.problem.h);
    num("tmax", c.problem.t_max);

    if (doc.contains("b_coeffs")) {
        if (!doc["b_coeffs"].is_array() || doc["b_coeffs"].empty())
            issues.push_back("b_coeffs: expected a non-empty array of numbers");
        else {
            std::vector<double> coeffs;
            for (const auto& v : doc["b_coeffs"]) {
                if (!v.is_number()) {
                    issues.push_back("b_coeffs: expected a non-empty array of numbers");
                    coeffs.clear();
                    break;
                }
                coeffs.push_back(v.get<double>());
            }
            if (!coeffs.empty())
                c.problem.forcing.coeffs = std::move(coeffs);
        }
    }
    if (doc.contains("K")) {
        if (!doc["K"].is_number_unsigned())
            issues.push_back("K: expected a non-negative integer");
        else {
            // explicit truncation override: drop or zero-pad coefficients
            const auto K = doc["K"].get<std::size_t>();
            c.problem.forcing.coeffs.resize(K + 1, 0.0);
        }
    }
    if (doc.contains("family")) {
        const std::string f = doc["family"].is_string() ? doc["family"].get<std::string>() : "";
        if (f == "conformable")
            c.problem.family = Family::conformable;
        else if (f == "caputo")
            c.problem.family = Family::caputo;
        else
            issues.push_back("family: expected \"conformable\" or \"caputo\"");
    }
    if (doc.contains("schemes")) {
        if (!doc["schemes"].is_array())
            issues.push_back("schemes: expected an array of labels");
        else {
            c.schemes.clear();
            for (const auto& v : doc["schemes"])
                c.schemes.push_back(v.is_string() ? v.get<std::string>() : "<non-string>");
        }
    }
    if (doc.contains("output_dir")) {
        if (!doc["output_dir"].is_string())
            issues.push_back("output_dir: expected a string");
        else
            c.output_dir = doc["output_dir"].get<std::string>();
    }
    if (doc.contains("plot_data")) {
        if (!doc["plot_data"].is_boolean())
            issues.push_back("plot_data: expected a boolean");
        else
            c.emit_plot_data = doc["plot_data"].get<bool>();
    }

    validate(c, issues);
    if (!issues.empty()) {
        std::string msg = "invalid run config:";
        for (const auto& i : issues)
            msg += "\n  - " + i;
        throw std::invalid_argument(msg);
    }
    return c;
}

std::string serialize_config(const RunConfig& config)
{
    json doc;
    if (config.preset)
        doc["preset"] = *config.preset;
    doc["alpha"] = config.problem.alpha;
    doc["a"] = config.problem.a;
    doc["delay"] = config.problem.T;
    doc["y0"] = config.problem.y0;
    doc["h"] = config.problem.h;
    doc["tmax"] = config.problem.t_max;
    doc["b_coeffs"] = config.problem.forcing.coeffs;
    doc["K"] = config.problem.truncation();
    doc["family"] = family_name(config.problem.family);
    doc["schemes"] = config.schemes;
    doc["output_dir"] = config.output_dir;
    doc["plot_data"] = config.emit_plot_data;
    return doc.dump(2);
}

RunSummary run_experiment(const RunConfig& config)
{
    throw_if_invalid(config);

    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(config.output_dir, ec);
    if (ec)
        throw std::system_error(ec, "cannot create output directory " + config.output_dir);

    const bool caputo = config.problem.family == Family::caputo;
    const Trajectory reference =
        SeriesEvaluator(config.problem).trajectory(caputo ? "caputo-series" : "series");

    RunSummary summary;
    std::vector<Trajectory> runs;
    runs.reserve(config.schemes.size());
    for (const auto& label : config.schemes) {
        Trajectory traj = run_scheme(config.problem, label);
        const std::string path = (fs::path(config.output_dir) / (label + ".csv")).string();
        write_trajectory_csv(traj, path);
        summary.files.push_back(path);
        summary.errors[label] = compare(traj, reference);
        summary.any_diverged = summary.any_diverged || traj.diverged_at.has_value();
        runs.push_back(std::move(traj));
    }

    {
        const std::string path = (fs::path(config.output_dir) / "errors.csv").string();
        CsvFile f(path);
        f.puts("scheme,max_rel,rms_rel,max_abs,n_points,diverged_at\n");
        for (const auto& label : config.schemes) {
            const ErrorReport& r = summary.errors.at(label);
            f.printf("%s,%.17g,%.17g,%.17g,%zu,", label.c_str(), r.max_rel, r.rms_rel,
                     r.max_abs, r.n_points);
            if (r.diverged_at)
                f.printf("%zu", *r.diverged_at);
            f.puts("\n");
        }
        f.close();
        summary.files.push_back(path);
    }

    if (config.emit_plot_data) {
        const std::string path = (fs::path(config.output_dir) / "plotdata.csv").string();
        CsvFile f(path);
        std::vector<const Trajectory*> cols;
        f.puts("t,series");
        for (std::size_t i = 0; i < runs.size(); ++i) {
            if (config.schemes[i] == reference.scheme_tag)
                continue;
            cols.push_back(&runs[i]);
            f.puts("," + config.schemes[i]);
        }
        for (const Trajectory* traj : cols)
            f.puts(",rel_" + traj->scheme_tag);
        f.puts("\n");
        for (std::size_t n = 0; n < reference.values.size(); ++n) {
            f.number(reference.mesh.node(n));
            f.puts(",");
            f.number(reference.values[n]);
            for (const Trajectory* traj : cols) {
                f.puts(",");
                f.number(traj->values[n]);
            }
            for (const Trajectory* traj : cols) {
                const double rel = std::abs(traj->values[n] - reference.values[n]) /
                                   (std::abs(reference.values[n]) + 1e-14);
                f.puts(",");
                f.number(rel);
            }
            f.puts("\n");
        }
        f.close();
        summary.files.push_back(path);
    }
    return summary;
}

} // namespace fdde
