#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "toro/checks.hpp"
#include "toro/export.hpp"
#include "toro/expression.hpp"
#include "toro/families.hpp"
#include "toro/pipeline.hpp"

namespace {

using namespace toro;

struct RunConfig {
    std::string preset;
    std::string family;  // epicycloid | hypocycloid for custom curves
    std::string expr_x;
    std::string expr_y;
    std::string expr_f;  // user-supplied height f(t); overrides the torus height
    double R = 0.0;
    double r = 0.0;
    double a = 0.0;
    double b = 0.0;
    int n = 0;
    std::string branch = "upper";
    int samples = 512;
    double t0 = 0.0;
    double t1 = 0.0;
    std::vector<std::string> tol;
    std::vector<std::string> out;
    std::string out_dir = "out";
    std::string config_path;

    bool has_torus() const { return a > 0.0 && b > 0.0; }
};

/// key=value configuration file: one pair per line, '#' comments.
/// Keys match the long flag names without the dashes.  Values set on
/// the command line win over the file, the file over defaults.
void apply_config_file(const CLI::App* cmd, RunConfig& config) {
    std::ifstream in(config.config_path);
    if (!in) throw InvalidArgument("cannot read config file '" + config.config_path + "'");

    auto given = [cmd](const std::string& flag) { return cmd->count(flag) > 0; };

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw InvalidArgument("config line " + std::to_string(line_no) +
                                  ": expected key=value");
        auto trim = [](std::string s) {
            size_t b = s.find_first_not_of(" \t");
            size_t e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));

        bool known = true;
        if (key == "preset") { if (!given("--preset")) config.preset = value; }
        else if (key == "family") { if (!given("--family")) config.family = value; }
        else if (key == "expr-x") { if (!given("--expr-x")) config.expr_x = value; }
        else if (key == "expr-y") { if (!given("--expr-y")) config.expr_y = value; }
        else if (key == "expr-f") { if (!given("--expr-f")) config.expr_f = value; }
        else if (key == "R") { if (!given("--R")) config.R = std::stod(value); }
        else if (key == "r") { if (!given("--r")) config.r = std::stod(value); }
        else if (key == "a") { if (!given("--a")) config.a = std::stod(value); }
        else if (key == "b") { if (!given("--b")) config.b = std::stod(value); }
        else if (key == "n") { if (!given("--n")) config.n = std::stoi(value); }
        else if (key == "branch") { if (!given("--branch")) config.branch = value; }
        else if (key == "t0") { if (!given("--t0")) config.t0 = std::stod(value); }
        else if (key == "t1") { if (!given("--t1")) config.t1 = std::stod(value); }
        else if (key == "samples") { if (!given("--samples")) config.samples = std::stoi(value); }
        else if (key == "out-dir") { if (!given("--out-dir")) config.out_dir = value; }
        else if (key == "out") {
            if (!given("--out")) {
                config.out.clear();
                std::istringstream list(value);
                std::string item;
                while (std::getline(list, item, ',')) config.out.push_back(item);
            }
        } else if (key == "tol") {
            if (!given("--tol")) config.tol.push_back(value);
        } else {
            known = false;
        }
        if (!known)
            throw InvalidArgument("config line " + std::to_string(line_no) + ": unknown key '" +
                                  key + "'");
    }
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '\n') {
            out += "\\n";
            continue;
        }
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

void emit_error(const std::string& message) {
    std::cerr << "{\"error\": {\"message\": \"" << json_escape(message) << "\"}}\n";
}

/// Split --tol entries into guard settings and per-check tolerance
/// overrides; unknown keys are assumed to name checks.
void apply_tolerances(const std::vector<std::string>& entries, Guards& guards,
                      std::map<std::string, double>& check_overrides) {
    for (const std::string& entry : entries) {
        auto eq = entry.find('=');
        if (eq == std::string::npos)
            throw InvalidArgument("--tol expects KEY=VALUE, got '" + entry + "'");
        std::string key = entry.substr(0, eq);
        double value = std::stod(entry.substr(eq + 1));
        if (key == "eps_reg")
            guards.eps_reg = value;
        else if (key == "eps_flat")
            guards.eps_flat = value;
        else if (key == "eps_tau")
            guards.eps_tau = value;
        else if (key == "eps_dom")
            guards.eps_dom = value;
        else if (key == "fd_step_low")
            guards.fd_step_low = value;
        else if (key == "fd_step_high")
            guards.fd_step_high = value;
        else
            check_overrides[key] = value;
    }
}

struct BuiltCurve {
    CylindricalLift lift;
    std::vector<double> cusp_params;
    std::string label;
};

BuiltCurve build_curve(const RunConfig& config, const Guards& guards) {
    HeightBranch branch;
    if (config.branch == "upper")
        branch = HeightBranch::Upper;
    else if (config.branch == "lower")
        branch = HeightBranch::Lower;
    else
        throw InvalidArgument("--branch must be 'upper' or 'lower'");

    auto opt = [](double v) { return v > 0.0 ? std::optional<double>(v) : std::nullopt; };

    // a user-supplied height turns any base curve into a lift
    auto with_height = [&](PlaneCurve base, const std::string& label) -> BuiltCurve {
        Expression f = Expression::parse(config.expr_f);
        auto height = [f](double t, int order) { return f.eval(t, order); };
        return {CylindricalLift(std::move(base), std::move(height), label), {}, label};
    };

    if (!config.preset.empty()) {
        if (!config.expr_f.empty())
            throw InvalidArgument("--expr-f does not combine with --preset; presets are complete "
                                  "configurations");
        const Preset* preset = find_preset(config.preset);
        if (!preset) throw InvalidArgument("unknown preset '" + config.preset + "'");
        std::optional<int> n_override =
            config.n > 0 ? std::optional<int>(config.n) : std::nullopt;
        CylindricalLift lift = preset_lift(*preset, branch, guards, opt(config.r), opt(config.a),
                                           opt(config.b), n_override);
        TorusCompatibility compat =
            torus_compat(preset_family(*preset, opt(config.r), n_override),
                         preset_torus(*preset, opt(config.r), opt(config.a), opt(config.b)));
        return {std::move(lift), compat.cusp_params, preset->name};
    }

    if (!config.expr_x.empty() || !config.expr_y.empty()) {
        if (config.expr_x.empty() || config.expr_y.empty())
            throw InvalidArgument("expression curves need both --expr-x and --expr-y");
        double t0 = config.t0, t1 = config.t1;
        if (t1 <= t0) {
            t0 = 0.0;
            t1 = 2.0 * 3.14159265358979323846;
        }
        PlaneCurve base = expression_curve(config.expr_x, config.expr_y, t0, t1);
        if (!config.expr_f.empty()) return with_height(std::move(base), "expr");
        if (config.has_torus()) {
            TorusSpec torus(config.a, config.b);
            return {CylindricalLift::over_torus(std::move(base), torus, branch, guards), {}, "expr"};
        }
        return {CylindricalLift::constant_height(std::move(base), 0.0), {}, "expr"};
    }

    if (!config.family.empty()) {
        FamilySpec spec;
        if (config.family == "epicycloid")
            spec.kind = FamilyKind::Epicycloid;
        else if (config.family == "hypocycloid")
            spec.kind = FamilyKind::Hypocycloid;
        else
            throw InvalidArgument("--family must be 'epicycloid' or 'hypocycloid'");
        spec.R = config.R;
        spec.r = config.r;
        PlaneCurve base = family_curve(spec);
        if (!config.expr_f.empty()) return with_height(std::move(base), config.family);
        if (!config.has_torus())
            throw InvalidArgument("custom families need the torus (--a and --b) or a height "
                                  "expression (--expr-f)");
        TorusSpec torus(config.a, config.b);
        TorusCompatibility compat = torus_compat(spec, torus);
        return {CylindricalLift::over_torus(std::move(base), torus, branch, guards),
                compat.cusp_params, config.family};
    }

    throw InvalidArgument("nothing to run: give --preset, --expr-x/--expr-y, or --family");
}

int run_sample(const RunConfig& config, const std::vector<std::string>& default_out) {
    Guards guards;
    std::map<std::string, double> check_overrides;
    apply_tolerances(config.tol, guards, check_overrides);

    BuiltCurve curve = build_curve(config, guards);
    SampleSeries series = sample_lift(curve.lift, curve.cusp_params, config.samples, guards);

    std::vector<std::string> formats = config.out.empty() ? default_out : config.out;
    std::filesystem::create_directories(config.out_dir);

    std::vector<std::string> written;
    for (const std::string& format : formats) {
        std::string path = config.out_dir + "/" + curve.label + "." + format;
        if (format == "csv")
            atomic_write(path, to_csv(series));
        else if (format == "json")
            atomic_write(path, to_json(series, curve.label));
        else if (format == "svg")
            atomic_write(path, to_svg(series));
        else if (format == "obj")
            atomic_write(path, to_obj(series));
        else
            throw InvalidArgument("unknown output format '" + format + "'");
        written.push_back(path);
    }

    int counts[5] = {};
    for (const SampleRecord& rec : series.records) counts[static_cast<int>(rec.status)]++;

    std::ostringstream out;
    out << "{\"curve\": \"" << curve.label << "\", \"records\": " << series.records.size()
        << ", \"arcs\": " << series.arcs.size() << ", \"status_counts\": {\"ok\": " << counts[0]
        << ", \"near_cusp\": " << counts[1] << ", \"flat\": " << counts[2]
        << ", \"torsion_zero\": " << counts[3] << ", \"domain\": " << counts[4]
        << "}, \"written\": [";
    for (size_t i = 0; i < written.size(); ++i)
        out << (i ? ", " : "") << "\"" << json_escape(written[i]) << "\"";
    out << "]}\n";
    std::cout << out.str();
    return 0;
}

int run_verify(const RunConfig& config) {
    if (config.preset.empty())
        throw InvalidArgument("verify needs --preset (checks are defined per preset)");
    const Preset* found = find_preset(config.preset);
    if (!found) throw InvalidArgument("unknown preset '" + config.preset + "'");

    // fold size overrides into a preset copy so the checks see them
    Preset preset = *found;
    if (preset.kind == FamilyKind::HelixProjection) {
        if (config.a > 0.0) preset.a = config.a;
        if (config.b > 0.0) preset.b = config.b;
        if (config.n > 0) preset.n = config.n;
    } else if (config.r > 0.0) {
        preset.r = config.r;
    }

    CheckOptions options;
    apply_tolerances(config.tol, options.guards, options.tolerance_overrides);

    std::vector<CheckResult> results = run_preset_checks(preset, options);
    bool pass = all_passed(results);

    // a tolerance override that matched no check is a typo, not a no-op
    for (const auto& [key, value] : options.tolerance_overrides) {
        (void)value;
        bool matched = false;
        for (const CheckResult& r : results) matched = matched || r.name == key;
        if (!matched) throw InvalidArgument("--tol names no guard or check: '" + key + "'");
    }

    std::ostringstream out;
    out << "{\n  \"format\": \"toro-verify v1\",\n  \"preset\": \"" << preset.name
        << "\",\n  \"checks\": [\n";
    for (size_t i = 0; i < results.size(); ++i) {
        const CheckResult& r = results[i];
        out << "    {\"name\": \"" << r.name << "\", \"max_deviation\": "
            << format_double(r.max_deviation) << ", \"tolerance\": " << format_double(r.tolerance)
            << ", \"pass\": " << (r.pass ? "true" : "false")
            << ", \"worst_t\": " << format_double(r.worst_t);
        if (r.elapsed_seconds > 0.0)
            out << ", \"elapsed_seconds\": " << format_double(r.elapsed_seconds);
        if (!r.note.empty()) out << ", \"note\": \"" << json_escape(r.note) << "\"";
        out << "}" << (i + 1 < results.size() ? "," : "") << "\n";
    }
    out << "  ],\n  \"pass\": " << (pass ? "true" : "false") << "\n}\n";
    std::cout << out.str();
    return pass ? 0 : 1;
}

int run_presets() {
    std::ostringstream out;
    out << "name             kind            R        r        torus_a  torus_b  n   period   cusps\n";
    for (const Preset& p : all_presets()) {
        FamilySpec family = preset_family(p);
        TorusSpec torus = preset_torus(p);
        TorusCompatibility compat = torus_compat(family, torus);
        char line[256];
        const char* kind = p.kind == FamilyKind::Epicycloid
                               ? "epicycloid"
                               : (p.kind == FamilyKind::Hypocycloid ? "hypocycloid" : "helix-proj");
        std::snprintf(line, sizeof(line), "%-16s %-15s %-8.4g %-8.4g %-8.4g %-8.4g %-3d %-8.5g %zu\n",
                      p.name.c_str(), kind, family.R, family.r, torus.a, torus.b, family.n,
                      compat.period, compat.cusp_params.size());
        out << line;
    }
    std::cout << out.str();
    return 0;
}

void add_curve_flags(CLI::App* cmd, RunConfig& config) {
    cmd->add_option("--preset", config.preset, "named curve+torus configuration");
    cmd->add_option("--family", config.family, "custom family: epicycloid|hypocycloid");
    cmd->add_option("--expr-x", config.expr_x, "x(t) expression");
    cmd->add_option("--expr-y", config.expr_y, "y(t) expression");
    cmd->add_option("--expr-f", config.expr_f, "height f(t) expression (instead of a torus)");
    cmd->add_option("--R", config.R, "fixed circle radius");
    cmd->add_option("--r", config.r, "rolling circle radius (scales presets)");
    cmd->add_option("--a", config.a, "torus: axis-to-tube-center distance");
    cmd->add_option("--b", config.b, "torus: tube radius");
    cmd->add_option("--n", config.n, "helix winding count");
    cmd->add_option("--branch", config.branch, "height branch: upper|lower")
        ->default_str("upper");
    cmd->add_option("--t0", config.t0, "domain start (expression curves)");
    cmd->add_option("--t1", config.t1, "domain end (expression curves)");
    cmd->add_option("--tol", config.tol, "KEY=VALUE guard or check-tolerance override")
        ->take_all();
    cmd->add_option("--config", config.config_path, "key=value configuration file");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"closed toroidal curves: lifts, frames, focal curves"};
    app.require_subcommand(1);

    RunConfig config;

    CLI::App* sample = app.add_subcommand("sample", "sample a curve and write data files");
    add_curve_flags(sample, config);
    sample->add_option("--samples", config.samples, "grid size (>= 2)")->default_val(512);
    sample->add_option("--out", config.out, "formats: csv,json,svg,obj")
        ->delimiter(',')
        ->take_all();
    sample->add_option("--out-dir", config.out_dir, "output directory")->default_str("out");

    CLI::App* exportc = app.add_subcommand("export", "sample a curve and write plot files");
    add_curve_flags(exportc, config);
    exportc->add_option("--samples", config.samples, "grid size (>= 2)")->default_val(512);
    exportc->add_option("--out", config.out, "formats: csv,json,svg,obj")
        ->delimiter(',')
        ->take_all();
    exportc->add_option("--out-dir", config.out_dir, "output directory")->default_str("out");

    CLI::App* verify = app.add_subcommand("verify", "run the verification checks for a preset");
    add_curve_flags(verify, config);

    CLI::App* presets = app.add_subcommand("presets", "list the built-in configurations");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        emit_error(e.what());
        return 2;
    }

    try {
        const CLI::App* active = sample->parsed() ? sample
                                 : exportc->parsed() ? exportc
                                 : verify->parsed() ? verify
                                                    : nullptr;
        if (active && !config.config_path.empty()) apply_config_file(active, config);

        if (sample->parsed()) return run_sample(config, {"csv", "json"});
        if (exportc->parsed()) return run_sample(config, {"svg", "obj"});
        if (verify->parsed()) return run_verify(config);
        if (presets->parsed()) return run_presets();
    } catch (const Error& e) {
        emit_error(e.what());
        return 2;
    } catch (const std::exception& e) {
        emit_error(e.what());
        return 2;
    }
    return 0;
}
