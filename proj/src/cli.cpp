#include "flexcool/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "flexcool/config.hpp"
#include "flexcool/dynamics.hpp"
#include "flexcool/errors.hpp"
#include "flexcool/output.hpp"
#include "flexcool/presets.hpp"
#include "flexcool/stability.hpp"
#include "flexcool/steadystate.hpp"
#include "flexcool/sweep.hpp"

namespace flexcool {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string config;
    std::string scenario;
    std::string series;
    std::vector<std::string> overrides;
    std::string format;
    std::string output;
    unsigned threads = 0;
};

// A finished artifact: where it goes and what it holds.
struct Artifact {
    std::string path;  // empty means stdout
    std::string text;
};

std::vector<const Series*> selected_series(const Preset& preset, const std::string& label) {
    if (label == "all") {
        std::vector<const Series*> all;
        for (const auto& s : preset.series) all.push_back(&s);
        return all;
    }
    if (label.empty()) return {&preset.series.at(preset.default_series)};
    return {&preset.find_series(label)};
}

struct Resolved {
    std::string label;  // series label, empty for --config documents
    json tree;
    Document doc;
};

std::vector<Resolved> resolve(const Options& opt) {
    if (opt.config.empty() == opt.scenario.empty()) throw ConfigError("give exactly one of --config, --scenario");
    std::vector<Resolved> out;
    if (!opt.config.empty()) {
        if (!opt.series.empty()) throw ConfigError("--series only applies to --scenario");
        out.push_back({"", read_document_file(opt.config), {}});
    } else {
        const Preset& preset = find_preset(opt.scenario);
        for (const Series* s : selected_series(preset, opt.series))
            out.push_back({s->label, preset_document(preset, *s), {}});
    }
    for (auto& r : out) {
        for (const auto& assignment : opt.overrides) apply_override(r.tree, assignment);
        r.doc = document_from_json(r.tree);
        r.tree = to_json(r.doc);
    }
    return out;
}

Resolved resolve_single(const Options& opt, const char* verb) {
    auto all = resolve(opt);
    if (all.size() != 1) throw ConfigError(std::string(verb) + " takes a single series, not --series all");
    return std::move(all.front());
}

std::string pick_format(const std::string& requested, const std::string& fallback) {
    const std::string f = requested.empty() ? fallback : requested;
    if (f != "csv" && f != "json") throw ConfigError("--format must be csv or json, got '" + f + "'");
    return f;
}

// Every mechanical-phonon pair followed by every mechanical pair.
std::vector<Bipartition> all_bipartitions(int n) {
    std::vector<Bipartition> out;
    for (int i = 0; i < n; ++i) out.push_back(Bipartition::mech_phonon(i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) out.push_back(Bipartition::mech_mech(i, j));
    return out;
}

json meta_of(const Resolved& r) {
    json meta = {{"config", r.tree}};
    if (!r.doc.preset.empty()) {
        meta["preset"] = r.doc.preset;
        meta["series"] = r.doc.series;
        meta["provenance"] = r.doc.provenance;
    }
    return meta;
}

// Output path for one series of a multi-series run: <stem>_<label><ext>.
std::string series_path(const std::string& output, const std::string& label) {
    const fs::path p(output);
    fs::path name = p.stem();
    name += "_" + label;
    name += p.extension();
    return (p.parent_path() / name).string();
}

void write_artifacts(const std::vector<Artifact>& artifacts, std::ostream& out) {
    for (const auto& a : artifacts) {
        if (a.path.empty()) {
            out << a.text;
            continue;
        }
        const std::string tmp = a.path + ".tmp";
        {
            std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
            if (!f) throw IoError(a.path + ": cannot open for writing");
            f << a.text;
            f.flush();
            if (!f) throw IoError(a.path + ": write failed");
        }
        std::error_code ec;
        fs::rename(tmp, a.path, ec);
        if (ec) {
            fs::remove(tmp, ec);
            throw IoError(a.path + ": cannot move output into place");
        }
    }
    out.flush();
}

int cmd_simulate(const Options& opt, std::ostream& out, std::ostream& err) {
    const Resolved r = resolve_single(opt, "simulate");
    const std::string format = pick_format(opt.format, "json");
    const auto& c = r.doc.system;
    std::vector<Bipartition> bips;
    if (r.doc.sweep) bips = r.doc.sweep->observables.bipartitions;
    if (bips.empty()) bips = all_bipartitions(c.n_modes());

    const PointReport report = evaluate_point(c, bips);
    std::string text;
    if (format == "json") {
        json j = point_to_json(c, report, bips);
        j["meta"] = meta_of(r);
        text = j.dump(2) + "\n";
    } else {
        text = point_to_csv(c, report, bips);
    }
    write_artifacts({{opt.output, text}}, out);
    for (const auto& w : report.warnings) err << "warning: " << w << "\n";
    if (!report.stability.stable) {
        err << "error: system is unstable (max Re lambda = " << format_double(report.stability.max_real_part)
            << " Hz)\n";
        return kExitUnstable;
    }
    if (!report.error.empty()) {
        err << "error: " << report.error << "\n";
        return kExitInternal;
    }
    return kExitOk;
}

int cmd_sweep(const Options& opt, std::ostream& out, std::ostream& err) {
    const auto resolved = resolve(opt);
    const std::string format = pick_format(opt.format, "csv");
    if (resolved.size() > 1 && opt.output.empty()) throw ConfigError("--series all needs --output");

    std::vector<Artifact> artifacts;
    for (const auto& r : resolved) {
        if (!r.doc.sweep) throw ConfigError("document has no sweep section");
        const SweepResult result = run_sweep(*r.doc.sweep, opt.threads);
        std::string text = format == "csv" ? sweep_to_csv(result) : sweep_to_json(result, meta_of(r)).dump(2) + "\n";
        const std::string path = resolved.size() > 1 ? series_path(opt.output, r.label) : opt.output;
        artifacts.push_back({path, std::move(text)});

        std::size_t failed = 0;
        for (const auto& row : result.rows) failed += row.error.empty() ? 0 : 1;
        if (failed) err << "warning: " << failed << " grid point(s) failed to evaluate\n";
    }
    write_artifacts(artifacts, out);
    return kExitOk;
}

int cmd_scenario(const Options& opt, std::ostream& out) {
    if (opt.scenario.empty()) {
        std::string text;
        for (const auto& p : list_presets()) {
            text += p.name + "\t" + p.description + "\n";
            for (std::size_t k = 0; k < p.series.size(); ++k)
                text += "    " + p.series[k].label + (k == p.default_series ? " (default)" : "") + "\n";
        }
        write_artifacts({{opt.output, text}}, out);
        return kExitOk;
    }
    const auto resolved = resolve(opt);
    std::string text;
    if (resolved.size() == 1) {
        text = resolved.front().tree.dump(2) + "\n";
    } else {
        json all = json::object();
        for (const auto& r : resolved) all[r.label] = r.tree;
        text = all.dump(2) + "\n";
    }
    write_artifacts({{opt.output, text}}, out);
    return kExitOk;
}

int cmd_check_stability(const Options& opt, std::ostream& out, std::ostream& err) {
    const Resolved r = resolve_single(opt, "check-stability");
    const auto& c = r.doc.system;
    const EffectiveParams eff = derive_effective(c);
    const StabilityReport spectral = spectral_stability(build_system(c, eff));

    std::optional<RouthHurwitzTerms> rh;
    std::string rh_error;
    try {
        rh = routh_hurwitz_terms(c, eff);
    } catch (const ConfigError& e) {
        rh_error = e.what();
    }

    double nu_max = 0.0;
    for (const auto& m : c.modes) nu_max = std::max(nu_max, m.nu);

    std::string text;
    if (opt.format == "json") {
        json j = {{"spectral", {{"stable", spectral.stable},
                                {"max_real_part_hz", spectral.max_real_part},
                                {"margin_over_nu", -spectral.max_real_part / nu_max}}}};
        if (rh) {
            j["routh_hurwitz"] = {{"stable", rh->holds()}, {"first", rh->first}, {"second", rh->second}};
            j["agree"] = rh->holds() == spectral.stable;
        } else {
            j["routh_hurwitz"] = {{"error", rh_error}};
        }
        text = j.dump(2) + "\n";
    } else if (opt.format.empty() || opt.format == "text") {
        text += std::string("spectral: ") + (spectral.stable ? "stable" : "unstable") +
                " max_real_part_hz=" + format_double(spectral.max_real_part) +
                " margin_over_nu=" + format_double(-spectral.max_real_part / nu_max) + "\n";
        if (rh) {
            text += std::string("routh_hurwitz: ") + (rh->holds() ? "stable" : "unstable") +
                    " first=" + format_double(rh->first) + " second=" + format_double(rh->second) + "\n";
            text += std::string("agree: ") + (rh->holds() == spectral.stable ? "yes" : "no") + "\n";
        } else {
            text += "routh_hurwitz: error: " + rh_error + "\n";
        }
    } else {
        throw ConfigError("--format for check-stability must be text or json");
    }
    write_artifacts({{opt.output, text}}, out);
    if (!rh) {
        err << "error: " << rh_error << "\n";
        return kExitConfig;
    }
    return kExitOk;
}

int cmd_dump_matrices(const Options& opt, std::ostream& out, std::ostream& err) {
    const Resolved r = resolve_single(opt, "dump-matrices");
    const std::string format = pick_format(opt.format, "json");
    const LinearSystem sys = build_system(r.doc.system);
    std::optional<Eigen::MatrixXd> v;
    std::string why;
    try {
        v = solve_lyapunov(sys).matrix();
    } catch (const std::exception& e) {
        why = e.what();
    }

    std::string text;
    if (format == "json") {
        json j = {{"drift", matrix_to_json(sys.drift)}, {"diffusion", matrix_to_json(sys.diffusion)}};
        j["covariance"] = v ? matrix_to_json(*v) : json(nullptr);
        text = j.dump(2) + "\n";
    } else {
        text = "# drift\n" + matrix_to_csv(sys.drift) + "# diffusion\n" + matrix_to_csv(sys.diffusion);
        if (v) text += "# covariance\n" + matrix_to_csv(*v);
    }
    write_artifacts({{opt.output, text}}, out);
    if (!v) err << "note: no covariance: " << why << "\n";
    return kExitOk;
}

void add_input_options(CLI::App* cmd, Options& opt) {
    cmd->add_option("-c,--config", opt.config, "config document (JSON)");
    cmd->add_option("-s,--scenario", opt.scenario, "named preset");
    cmd->add_option("--series", opt.series, "preset series label, or 'all'");
    cmd->add_option("--set", opt.overrides, "key=value override (repeatable)");
    cmd->add_option("-o,--output", opt.output, "output file (default stdout)");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Laser-cooled atomic phonon coupled to graphene flexural modes"};
    app.require_subcommand(1);
    Options opt;

    auto* simulate = app.add_subcommand("simulate", "single-point report");
    add_input_options(simulate, opt);
    simulate->add_option("-f,--format", opt.format, "csv | json (default json)");

    auto* sweep = app.add_subcommand("sweep", "grid sweep as a data table");
    add_input_options(sweep, opt);
    sweep->add_option("-f,--format", opt.format, "csv | json (default csv)");
    sweep->add_option("-j,--threads", opt.threads, "worker threads (0 = all cores)");

    auto* scenario = app.add_subcommand("scenario", "list presets, or print one as a config document");
    scenario->add_option("name", opt.scenario, "preset name");
    scenario->add_option("--series", opt.series, "series label, or 'all'");
    scenario->add_option("--set", opt.overrides, "key=value override (repeatable)");
    scenario->add_option("-o,--output", opt.output, "output file (default stdout)");

    auto* check = app.add_subcommand("check-stability", "Routh-Hurwitz and spectral verdicts");
    add_input_options(check, opt);
    check->add_option("-f,--format", opt.format, "text | json (default text)");

    auto* dump = app.add_subcommand("dump-matrices", "drift, diffusion and covariance matrices");
    add_input_options(dump, opt);
    dump->add_option("-f,--format", opt.format, "csv | json (default json)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (simulate->parsed()) return cmd_simulate(opt, out, err);
        if (sweep->parsed()) return cmd_sweep(opt, out, err);
        if (scenario->parsed()) return cmd_scenario(opt, out);
        if (check->parsed()) return cmd_check_stability(opt, out, err);
        if (dump->parsed()) return cmd_dump_matrices(opt, out, err);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInternal;
}

}  // namespace flexcool
