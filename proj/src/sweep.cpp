#include "spinboost/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iostream>
#include <numbers>
#include <set>
#include <utility>

#include <CLI11.hpp>
#include <json.hpp>

#include "spinboost/discrete.hpp"
#include "spinboost/engine.hpp"
#include "spinboost/version.hpp"

namespace spinboost {

namespace {

constexpr double kPi = std::numbers::pi;

double deg2rad(double deg) { return deg * kPi / 180.0; }
double rad2deg(double rad) { return rad * 180.0 / kPi; }

// shortest round-trip decimal form
std::string format_double(double v) {
    std::array<char, 32> buf;
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

std::string utc_now() {
    const std::time_t t =
        std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string mode_name(SweepMode mode) {
    switch (mode) {
        case SweepMode::WignerAngle: return "wigner-angle";
        case SweepMode::EntropyCurve: return "entropy-curve";
        case SweepMode::TwoPoint: return "two-point";
        case SweepMode::Figure: return "figure";
    }
    return "?";
}

struct Job {
    std::string path;
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

std::string tagged_path(const std::string& base, const std::string& tag) {
    const auto slash = base.find_last_of('/');
    const auto dot = base.find_last_of('.');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return base + "_" + tag;
    return base.substr(0, dot) + "_" + tag + base.substr(dot);
}

void append_xi_meta(Job& job, const SweepConfig& cfg) {
    job.meta.emplace_back("xi_min", format_double(cfg.xi_min));
    job.meta.emplace_back("xi_max", format_double(cfg.xi_max));
    job.meta.emplace_back("xi_steps", std::to_string(cfg.xi_steps));
}

Job wigner_angle_job(double v1, const SweepConfig& cfg) {
    Job job;
    job.path = cfg.output;
    job.meta.emplace_back("v1", format_double(v1));
    job.meta.emplace_back("v2", format_double(v1));
    job.meta.emplace_back("theta_grid_deg", "0..180 step 0.25");
    job.columns = {"theta_deg", "v1", "v2", "omega_deg"};
    for (int i = 0; i <= 720; ++i) {
        const double theta_deg = 0.25 * i;
        const double omega = wigner_angle({v1, v1, deg2rad(theta_deg)});
        job.rows.push_back({theta_deg, v1, v1, rad2deg(omega)});
    }
    return job;
}

Job entropy_curve_job(double v1, double theta_deg, double sigma, const SweepConfig& cfg) {
    Job job;
    job.path = cfg.output;
    job.meta.emplace_back("v1", format_double(v1));
    job.meta.emplace_back("theta_deg", format_double(theta_deg));
    job.meta.emplace_back("sigma", format_double(sigma));
    job.meta.emplace_back("nodes", std::to_string(cfg.nodes));
    append_xi_meta(job, cfg);
    job.columns = {"xi", "v2", "entropy"};
    const BoostScenario scenario{v1, deg2rad(theta_deg), sigma,
                                 uniform_xi_grid(cfg.xi_min, cfg.xi_max, cfg.xi_steps),
                                 cfg.nodes};
    const EntropyCurve curve = entropy_curve(scenario);
    for (const auto& p : curve.points) job.rows.push_back({p.xi, p.v2, p.entropy});
    return job;
}

Job two_point_job(double v1, double theta_deg, const SweepConfig& cfg) {
    Job job;
    job.path = cfg.output;
    job.meta.emplace_back("v1", format_double(v1));
    job.meta.emplace_back("theta_deg", format_double(theta_deg));
    append_xi_meta(job, cfg);
    job.columns = {"xi", "v2", "omega_deg", "entropy_closed_form", "entropy_matrix"};
    const double theta = deg2rad(theta_deg);
    for (const double xi : uniform_xi_grid(cfg.xi_min, cfg.xi_max, cfg.xi_steps)) {
        const double omega = wigner_angle_rapidity(v1, theta, xi);
        job.rows.push_back({xi, std::tanh(xi), rad2deg(omega),
                            two_point_entropy_closed_form(v1, theta, xi),
                            two_point_entropy(v1, theta, xi)});
    }
    return job;
}

struct FigurePreset {
    const char* tag;
    SweepMode mode;
    double v1;
    double theta_deg;  // entropy presets only
    const char* note;  // nullptr when the parameters need no qualification
};

std::vector<FigurePreset> figure_presets(const std::string& figure) {
    if (figure == "fig1")
        return {{"v0.5", SweepMode::WignerAngle, 0.5, 0.0, nullptr},
                {"v0.9", SweepMode::WignerAngle, 0.9, 0.0, nullptr},
                {"v0.985", SweepMode::WignerAngle, 0.985, 0.0, nullptr}};
    if (figure == "fig2a")
        return {{"theta45", SweepMode::EntropyCurve, 0.985, 45.0,
                 "theta values are representative defaults"},
                {"theta90", SweepMode::EntropyCurve, 0.985, 90.0,
                 "theta values are representative defaults"},
                {"theta135", SweepMode::EntropyCurve, 0.985, 135.0,
                 "theta values are representative defaults"}};
    if (figure == "fig2b")
        return {{"theta161", SweepMode::EntropyCurve, 0.999, 161.0, nullptr},
                {"theta170", SweepMode::EntropyCurve, 0.99995, 170.0,
                 "theta_f is a representative default"}};
    throw UsageError("figure: unknown preset '" + figure + "'");
}

std::vector<Job> build_jobs(const SweepConfig& cfg) {
    std::vector<Job> jobs;
    switch (cfg.mode) {
        case SweepMode::WignerAngle:
            jobs.push_back(wigner_angle_job(cfg.v1, cfg));
            break;
        case SweepMode::EntropyCurve:
            jobs.push_back(entropy_curve_job(cfg.v1, cfg.theta_deg, cfg.sigma, cfg));
            break;
        case SweepMode::TwoPoint:
            jobs.push_back(two_point_job(cfg.v1, cfg.theta_deg, cfg));
            break;
        case SweepMode::Figure:
            for (const auto& preset : figure_presets(cfg.figure)) {
                Job job = preset.mode == SweepMode::WignerAngle
                              ? wigner_angle_job(preset.v1, cfg)
                              : entropy_curve_job(preset.v1, preset.theta_deg, 1.0, cfg);
                job.path = tagged_path(cfg.output, preset.tag);
                job.meta.emplace(job.meta.begin(), "scenario", preset.tag);
                job.meta.emplace(job.meta.begin(), "figure", cfg.figure);
                if (preset.note) job.meta.emplace_back("note", preset.note);
                jobs.push_back(std::move(job));
            }
            break;
    }
    return jobs;
}

void write_csv(const Job& job, const SweepConfig& cfg) {
    std::ofstream out(job.path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + job.path);
    out << "# tool: spinboost " << kVersion << "\n";
    out << "# mode: " << mode_name(cfg.mode) << "\n";
    for (const auto& [key, value] : job.meta) out << "# " << key << ": " << value << "\n";
    if (!cfg.no_timestamp) out << "# generated: " << utc_now() << "\n";
    for (std::size_t c = 0; c < job.columns.size(); ++c)
        out << (c ? "," : "") << job.columns[c];
    out << "\n";
    for (const auto& row : job.rows) {
        for (std::size_t c = 0; c < row.size(); ++c)
            out << (c ? "," : "") << format_double(row[c]);
        out << "\n";
    }
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + job.path);
}

void write_json(const Job& job, const SweepConfig& cfg) {
    nlohmann::ordered_json j;
    auto& meta = j["meta"];
    meta["tool"] = std::string("spinboost ") + kVersion;
    meta["mode"] = mode_name(cfg.mode);
    for (const auto& [key, value] : job.meta) meta[key] = value;
    if (!cfg.no_timestamp) meta["generated"] = utc_now();
    auto& rows = j["rows"];
    rows = nlohmann::ordered_json::array();
    for (const auto& row : job.rows) {
        nlohmann::ordered_json obj;
        for (std::size_t c = 0; c < row.size(); ++c) obj[job.columns[c]] = row[c];
        rows.push_back(std::move(obj));
    }
    std::ofstream out(job.path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + job.path);
    out << j.dump(2) << "\n";
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + job.path);
}

}  // namespace

SweepConfig parse_config(const std::vector<std::string>& args) {
    SweepConfig cfg;
    std::string mode_str, format_str, config_path;

    CLI::App app{"spin-momentum entanglement sweeps for boosted spin-1/2 wavepackets"};
    app.set_help_flag("-h,--help", "print usage and exit");
    auto* o_mode = app.add_option("--mode", mode_str,
                                  "wigner-angle | entropy-curve | two-point | figure");
    auto* o_figure = app.add_option("--figure", cfg.figure, "fig1 | fig2a | fig2b");
    auto* o_v1 = app.add_option("--v1", cfg.v1, "packet-center speed, (0, 1)");
    auto* o_theta = app.add_option("--theta-deg", cfg.theta_deg,
                                   "boost angle in degrees, (0, 180)");
    auto* o_sigma = app.add_option("--sigma", cfg.sigma, "packet width in mass units");
    auto* o_xi_min = app.add_option("--xi-min", cfg.xi_min, "first rapidity");
    auto* o_xi_max = app.add_option("--xi-max", cfg.xi_max, "last rapidity");
    auto* o_xi_steps = app.add_option("--xi-steps", cfg.xi_steps, "rapidity samples");
    auto* o_nodes = app.add_option("--nodes", cfg.nodes, "grid nodes per axis");
    auto* o_output = app.add_option("--output", cfg.output, "output file path");
    auto* o_format = app.add_option("--format", format_str, "csv | json");
    app.add_option("--config", config_path, "JSON config file (flags take precedence)");
    auto* o_no_ts = app.add_flag("--no-timestamp", cfg.no_timestamp,
                                 "omit the generated-at header line");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested(app.help());
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    bool v1_given = o_v1->count() > 0;
    bool theta_given = o_theta->count() > 0;
    bool sigma_given = o_sigma->count() > 0;
    bool output_given = o_output->count() > 0;

    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw UsageError("config: cannot open file '" + config_path + "'");
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception&) {
            throw UsageError("config: file '" + config_path + "' is not valid JSON");
        }
        if (!j.is_object()) throw UsageError("config: expected a flat JSON object");

        static const std::set<std::string> known = {
            "mode",    "figure",   "v1",    "theta-deg", "sigma",       "xi-min",
            "xi-max",  "xi-steps", "nodes", "output",    "format",      "no-timestamp"};
        for (const auto& [key, value] : j.items())
            if (!known.count(key)) throw UsageError("config: unknown key '" + key + "'");

        const auto merge = [&j](const char* key, const CLI::Option* opt, auto& target) {
            using T = std::decay_t<decltype(target)>;
            if (!j.contains(key) || opt->count() > 0) return false;
            try {
                target = j.at(key).get<T>();
            } catch (const nlohmann::json::exception&) {
                throw UsageError(std::string("config: key '") + key + "' has the wrong type");
            }
            return true;
        };
        merge("mode", o_mode, mode_str);
        merge("figure", o_figure, cfg.figure);
        v1_given |= merge("v1", o_v1, cfg.v1);
        theta_given |= merge("theta-deg", o_theta, cfg.theta_deg);
        sigma_given |= merge("sigma", o_sigma, cfg.sigma);
        merge("xi-min", o_xi_min, cfg.xi_min);
        merge("xi-max", o_xi_max, cfg.xi_max);
        merge("xi-steps", o_xi_steps, cfg.xi_steps);
        merge("nodes", o_nodes, cfg.nodes);
        output_given |= merge("output", o_output, cfg.output);
        merge("format", o_format, format_str);
        merge("no-timestamp", o_no_ts, cfg.no_timestamp);
    }

    if (mode_str.empty())
        throw UsageError("mode: required (wigner-angle | entropy-curve | two-point | figure)");
    if (mode_str == "wigner-angle")
        cfg.mode = SweepMode::WignerAngle;
    else if (mode_str == "entropy-curve")
        cfg.mode = SweepMode::EntropyCurve;
    else if (mode_str == "two-point")
        cfg.mode = SweepMode::TwoPoint;
    else if (mode_str == "figure")
        cfg.mode = SweepMode::Figure;
    else
        throw UsageError("mode: unknown value '" + mode_str + "'");

    if (!format_str.empty()) {
        if (format_str == "csv")
            cfg.format = OutputFormat::Csv;
        else if (format_str == "json")
            cfg.format = OutputFormat::Json;
        else
            throw UsageError("format: unknown value '" + format_str + "'");
    }

    if (cfg.mode == SweepMode::Figure) {
        if (cfg.figure.empty()) throw UsageError("figure: required when mode is figure");
        if (cfg.figure != "fig1" && cfg.figure != "fig2a" && cfg.figure != "fig2b")
            throw UsageError("figure: unknown preset '" + cfg.figure + "'");
        if (v1_given || theta_given || sigma_given)
            throw UsageError("v1/theta-deg/sigma: fixed by the figure preset");
    } else if (!cfg.figure.empty()) {
        throw UsageError("figure: only valid with --mode figure");
    }

    if (cfg.v1 <= 0.0 || cfg.v1 >= 1.0) throw UsageError("v1: must lie in (0, 1)");
    if (cfg.theta_deg <= 0.0 || cfg.theta_deg >= 180.0)
        throw UsageError("theta-deg: must lie in (0, 180)");
    if (cfg.sigma <= 0.0) throw UsageError("sigma: must be positive");
    if (cfg.xi_min < 0.0) throw UsageError("xi-min: must be >= 0");
    if (cfg.xi_min >= cfg.xi_max) throw UsageError("xi-min/xi-max: need xi-min < xi-max");
    if (cfg.xi_steps < 2) throw UsageError("xi-steps: must be >= 2");
    if (cfg.nodes < 8) throw UsageError("nodes: must be >= 8");

    if (!output_given) {
        const char* ext = cfg.format == OutputFormat::Json ? ".json" : ".csv";
        cfg.output = (cfg.mode == SweepMode::Figure ? cfg.figure : "sweep") + std::string(ext);
    }
    return cfg;
}

std::vector<std::string> run(const SweepConfig& config) {
    std::vector<std::string> written;
    for (const Job& job : build_jobs(config)) {
        if (config.format == OutputFormat::Csv)
            write_csv(job, config);
        else
            write_json(job, config);
        written.push_back(job.path);
    }
    return written;
}

int sweep_main(int argc, const char* const* argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    try {
        const SweepConfig cfg = parse_config(args);
        for (const auto& path : run(cfg)) std::cout << "wrote " << path << "\n";
        return 0;
    } catch (const HelpRequested& help) {
        std::cout << help.what();
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace spinboost
