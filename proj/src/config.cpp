#include "flexcool/config.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "flexcool/errors.hpp"

namespace flexcool {

using nlohmann::json;

namespace {

// ---------------------------------------------------------------------------
// reading

void check_keys(const json& obj, const std::string& path, const std::set<std::string>& allowed) {
    if (!obj.is_object()) throw ConfigError(path + ": expected an object");
    for (const auto& [key, value] : obj.items()) {
        if (!allowed.count(key)) throw ConfigError(path + "." + key + ": unknown key");
    }
}

const json& member(const json& obj, const std::string& path, const std::string& key) {
    if (!obj.contains(key)) throw ConfigError(path + "." + key + ": missing required key");
    return obj.at(key);
}

double number(const json& obj, const std::string& path, const std::string& key) {
    const json& v = member(obj, path, key);
    if (!v.is_number()) throw ConfigError(path + "." + key + ": expected a number");
    return v.get<double>();
}

int integer(const json& obj, const std::string& path, const std::string& key) {
    const json& v = member(obj, path, key);
    if (!v.is_number_integer()) throw ConfigError(path + "." + key + ": expected an integer");
    return v.get<int>();
}

bool boolean(const json& obj, const std::string& path, const std::string& key) {
    const json& v = member(obj, path, key);
    if (!v.is_boolean()) throw ConfigError(path + "." + key + ": expected true or false");
    return v.get<bool>();
}

std::string string(const json& obj, const std::string& path, const std::string& key) {
    const json& v = member(obj, path, key);
    if (!v.is_string()) throw ConfigError(path + "." + key + ": expected a string");
    return v.get<std::string>();
}

std::vector<double> number_array(const json& v, const std::string& path) {
    if (!v.is_array()) throw ConfigError(path + ": expected an array of numbers");
    std::vector<double> out;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (!v[k].is_number()) throw ConfigError(path + "[" + std::to_string(k) + "]: expected a number");
        out.push_back(v[k].get<double>());
    }
    return out;
}

// "grid": [...] or "start"/"stop"/"points".
std::vector<double> read_grid(const json& obj, const std::string& path) {
    if (obj.contains("grid")) {
        if (obj.contains("start") || obj.contains("stop") || obj.contains("points"))
            throw ConfigError(path + ": give either grid or start/stop/points, not both");
        return number_array(obj.at("grid"), path + ".grid");
    }
    const int points = integer(obj, path, "points");
    if (points < 1) throw ConfigError(path + ".points: must be >= 1");
    return linspace(number(obj, path, "start"), number(obj, path, "stop"), points);
}

void write_grid(json& obj, const std::vector<double>& grid) {
    const bool uniform = !grid.empty() && linspace(grid.front(), grid.back(), static_cast<int>(grid.size())) == grid;
    if (uniform) {
        obj["start"] = grid.front();
        obj["stop"] = grid.back();
        obj["points"] = grid.size();
    } else {
        obj["grid"] = grid;
    }
}

AtomicParams read_atoms(const json& obj) {
    const std::string p = "atoms";
    check_keys(obj, p, {"gamma_sp", "rabi", "detuning", "lamb_dicke", "omega_ph"});
    AtomicParams a;
    a.gamma_sp = number(obj, p, "gamma_sp");
    a.rabi = number(obj, p, "rabi");
    a.detuning = number(obj, p, "detuning");
    a.lamb_dicke = number(obj, p, "lamb_dicke");
    a.omega_ph = number(obj, p, "omega_ph");
    return a;
}

std::vector<MechanicalMode> read_modes(const json& arr) {
    if (!arr.is_array() || arr.empty()) throw ConfigError("modes: expected a non-empty array");
    std::vector<MechanicalMode> modes;
    for (std::size_t j = 0; j < arr.size(); ++j) {
        const std::string p = "modes[" + std::to_string(j) + "]";
        check_keys(arr[j], p, {"nu", "kappa", "g"});
        modes.push_back({number(arr[j], p, "nu"), number(arr[j], p, "kappa"), number(arr[j], p, "g")});
    }
    return modes;
}

SweepSpec read_sweep(const json& obj, const SystemConfig& base, int reference_mode) {
    const std::string p = "sweep";
    check_keys(obj, p, {"axis", "grid", "start", "stop", "points", "bipartitions", "observables", "outer"});
    SweepSpec s;
    s.axis = parse_axis(string(obj, p, "axis"));
    s.grid = read_grid(obj, p);
    s.base = base;
    s.reference_mode = reference_mode;
    if (obj.contains("bipartitions")) {
        const json& b = obj.at("bipartitions");
        if (!b.is_array()) throw ConfigError("sweep.bipartitions: expected an array of labels");
        for (const auto& label : b) {
            if (!label.is_string()) throw ConfigError("sweep.bipartitions: expected string labels");
            s.observables.bipartitions.push_back(Bipartition::parse(label.get<std::string>()));
        }
    }
    if (obj.contains("observables")) {
        const json& o = obj.at("observables");
        check_keys(o, "sweep.observables", {"occupations", "decay_rate"});
        if (o.contains("occupations")) s.observables.occupations = boolean(o, "sweep.observables", "occupations");
        if (o.contains("decay_rate")) s.observables.decay_rate = boolean(o, "sweep.observables", "decay_rate");
    }
    if (obj.contains("outer")) {
        const json& o = obj.at("outer");
        check_keys(o, "sweep.outer", {"axis", "grid", "start", "stop", "points"});
        s.outer = OuterAxis{parse_axis(string(o, "sweep.outer", "axis")), read_grid(o, "sweep.outer")};
    }
    validate(s);
    return s;
}

// ---------------------------------------------------------------------------
// overrides

double parse_number(std::string_view key, std::string_view text) {
    double value = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || text.empty())
        throw ConfigError("--set " + std::string(key) + ": '" + std::string(text) + "' is not a number");
    return value;
}

int parse_int(std::string_view key, std::string_view text) {
    int value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || text.empty())
        throw ConfigError("--set " + std::string(key) + ": '" + std::string(text) + "' is not an integer");
    return value;
}

bool parse_bool(std::string_view key, std::string_view text) {
    if (text == "true" || text == "1") return true;
    if (text == "false" || text == "0") return false;
    throw ConfigError("--set " + std::string(key) + ": '" + std::string(text) + "' is not a boolean");
}

json& section(json& tree, const std::string& name, std::string_view key) {
    if (!tree.contains(name) || !tree.at(name).is_object())
        throw ConfigError("--set " + std::string(key) + ": document has no '" + name + "' section");
    return tree.at(name);
}

json& modes_array(json& tree, std::string_view key) {
    if (!tree.contains("modes") || !tree.at("modes").is_array())
        throw ConfigError("--set " + std::string(key) + ": document has no 'modes' array");
    return tree.at("modes");
}

// Converts an explicit grid to start/stop/points so one endpoint can change.
void ensure_range_form(json& obj, std::string_view key) {
    if (!obj.contains("grid")) return;
    const auto grid = number_array(obj.at("grid"), std::string(key));
    if (grid.empty()) throw ConfigError("--set " + std::string(key) + ": grid is empty");
    obj.erase("grid");
    obj["start"] = grid.front();
    obj["stop"] = grid.back();
    obj["points"] = grid.size();
}

void set_range_field(json& obj, std::string_view key, const std::string& field, std::string_view value) {
    ensure_range_form(obj, key);
    if (field == "points") {
        const int points = parse_int(key, value);
        if (points < 1) throw ConfigError("--set " + std::string(key) + ": points must be >= 1");
        obj["points"] = points;
    } else {
        obj[field] = parse_number(key, value);
    }
}

bool split_indexed(std::string_view key, std::string& base, int& index) {
    const auto pos = key.find_first_of("0123456789");
    if (pos == std::string_view::npos || pos == 0) return false;
    base = std::string(key.substr(0, pos));
    const auto digits = key.substr(pos);
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
    return ec == std::errc{} && ptr == digits.data() + digits.size();
}

std::string strip_prefix(std::string_view key, std::string_view prefix) {
    if (key.substr(0, prefix.size()) == prefix) return std::string(key.substr(prefix.size()));
    return std::string(key);
}

}  // namespace

json to_json(const Document& doc) {
    const auto& c = doc.system;
    json tree;
    tree["atoms"] = {{"gamma_sp", c.atoms.gamma_sp},
                     {"rabi", c.atoms.rabi},
                     {"detuning", c.atoms.detuning},
                     {"lamb_dicke", c.atoms.lamb_dicke},
                     {"omega_ph", c.atoms.omega_ph}};
    tree["modes"] = json::array();
    for (const auto& m : c.modes) tree["modes"].push_back({{"nu", m.nu}, {"kappa", m.kappa}, {"g", m.g}});
    tree["bath"] = {{"temperature", c.temperature}, {"phonon_vacuum_noise", c.phonon_vacuum_noise}};
    if (doc.theta_over_nu) {
        tree["control"] = {{"theta_over_nu", *doc.theta_over_nu}, {"reference_mode", doc.reference_mode}};
    } else {
        tree["control"] = {{"theta", c.theta}, {"reference_mode", doc.reference_mode}};
    }
    if (!c.cp_shifts.empty()) tree["cp_shifts"] = c.cp_shifts;

    if (doc.sweep) {
        const auto& s = *doc.sweep;
        json sw;
        sw["axis"] = std::string(to_string(s.axis));
        write_grid(sw, s.grid);
        sw["bipartitions"] = json::array();
        for (const auto& b : s.observables.bipartitions) sw["bipartitions"].push_back(b.label());
        sw["observables"] = {{"occupations", s.observables.occupations}, {"decay_rate", s.observables.decay_rate}};
        if (s.outer) {
            json outer;
            outer["axis"] = std::string(to_string(s.outer->axis));
            write_grid(outer, s.outer->grid);
            sw["outer"] = outer;
        }
        tree["sweep"] = sw;
    }
    if (!doc.preset.empty() || !doc.provenance.empty()) {
        tree["meta"] = {{"preset", doc.preset}, {"series", doc.series}, {"provenance", doc.provenance}};
    }
    return tree;
}

Document document_from_json(const json& tree) {
    check_keys(tree, "document", {"atoms", "modes", "bath", "control", "cp_shifts", "sweep", "meta"});
    Document doc;
    auto& c = doc.system;
    c.atoms = read_atoms(member(tree, "document", "atoms"));
    c.modes = read_modes(member(tree, "document", "modes"));

    const json& bath = member(tree, "document", "bath");
    check_keys(bath, "bath", {"temperature", "phonon_vacuum_noise"});
    c.temperature = number(bath, "bath", "temperature");
    if (bath.contains("phonon_vacuum_noise")) c.phonon_vacuum_noise = boolean(bath, "bath", "phonon_vacuum_noise");

    const json& control = member(tree, "document", "control");
    check_keys(control, "control", {"theta", "theta_over_nu", "reference_mode"});
    if (control.contains("reference_mode")) doc.reference_mode = integer(control, "control", "reference_mode");
    if (doc.reference_mode < 0 || doc.reference_mode >= static_cast<int>(c.modes.size()))
        throw ConfigError("control.reference_mode: " + std::to_string(doc.reference_mode) + " out of range");
    const bool has_theta = control.contains("theta");
    const bool has_ratio = control.contains("theta_over_nu");
    if (has_theta == has_ratio) throw ConfigError("control: give exactly one of theta, theta_over_nu");
    if (has_theta) {
        c.theta = number(control, "control", "theta");
    } else {
        doc.theta_over_nu = number(control, "control", "theta_over_nu");
        c.theta = *doc.theta_over_nu * c.modes[doc.reference_mode].nu;
    }

    if (tree.contains("cp_shifts")) c.cp_shifts = number_array(tree.at("cp_shifts"), "cp_shifts");

    if (tree.contains("meta")) {
        const json& meta = tree.at("meta");
        check_keys(meta, "meta", {"preset", "series", "provenance"});
        if (meta.contains("preset")) doc.preset = string(meta, "meta", "preset");
        if (meta.contains("series")) doc.series = string(meta, "meta", "series");
        if (meta.contains("provenance")) doc.provenance = string(meta, "meta", "provenance");
    }

    validate(c);
    if (tree.contains("sweep")) doc.sweep = read_sweep(tree.at("sweep"), c, doc.reference_mode);
    return doc;
}

json parse_document_text(std::string_view text, const std::string& origin) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        std::size_t line = 1;
        std::size_t column = 1;
        const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t k = 0; k < upto; ++k) {
            if (text[k] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        std::string what = e.what();
        const auto pos = what.find("; ");
        if (pos != std::string::npos) what = what.substr(pos + 2);
        throw ConfigError(origin + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what);
    }
}

json read_document_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError(path.string() + ": cannot open config file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document_text(buf.str(), path.string());
}

json preset_document(const Preset& preset, const Series& series) {
    Document doc;
    doc.system = series.spec.base;
    doc.reference_mode = series.spec.reference_mode;
    doc.theta_over_nu = series.spec.base.theta / series.spec.base.modes.at(series.spec.reference_mode).nu;
    doc.sweep = series.spec;
    doc.preset = preset.name;
    doc.series = series.label;
    doc.provenance = preset.provenance;
    return to_json(doc);
}

void apply_override(json& tree, std::string_view assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string_view::npos || eq == 0)
        throw ConfigError("--set expects key=value, got '" + std::string(assignment) + "'");
    const std::string_view key = assignment.substr(0, eq);
    const std::string_view value = assignment.substr(eq + 1);

    static const std::set<std::string> atom_keys = {"gamma_sp", "rabi", "detuning", "lamb_dicke", "omega_ph"};
    static const std::set<std::string> mode_keys = {"g", "nu", "kappa"};

    const std::string atom_key = strip_prefix(key, "atoms.");
    if (atom_keys.count(atom_key)) {
        section(tree, "atoms", key)[atom_key] = parse_number(key, value);
        return;
    }

    const std::string bath_key = strip_prefix(key, "bath.");
    if (bath_key == "temperature" || key == "T") {
        section(tree, "bath", key)["temperature"] = parse_number(key, value);
        return;
    }
    if (bath_key == "phonon_vacuum_noise") {
        section(tree, "bath", key)["phonon_vacuum_noise"] = parse_bool(key, value);
        return;
    }

    const std::string control_key = strip_prefix(key, "control.");
    if (control_key == "theta" || control_key == "theta_over_nu") {
        json& control = section(tree, "control", key);
        control.erase(control_key == "theta" ? "theta_over_nu" : "theta");
        control[control_key] = parse_number(key, value);
        return;
    }
    if (control_key == "reference_mode") {
        section(tree, "control", key)["reference_mode"] = parse_int(key, value);
        return;
    }

    if (mode_keys.count(std::string(key))) {
        const double v = parse_number(key, value);
        for (auto& m : modes_array(tree, key)) m[std::string(key)] = v;
        return;
    }
    std::string base;
    int index = 0;
    if (split_indexed(key, base, index) && mode_keys.count(base)) {
        json& modes = modes_array(tree, key);
        if (index < 1 || index > static_cast<int>(modes.size()))
            throw ConfigError("--set " + std::string(key) + ": mode index out of range (1.." +
                              std::to_string(modes.size()) + ")");
        modes[index - 1][base] = parse_number(key, value);
        return;
    }

    if (key.substr(0, 6) == "sweep.") {
        json& sweep = section(tree, "sweep", key);
        const std::string field(key.substr(6));
        if (field == "axis") {
            sweep["axis"] = std::string(to_string(parse_axis(value)));
            return;
        }
        if (field == "start" || field == "stop" || field == "points") {
            set_range_field(sweep, key, field, value);
            return;
        }
        if (field == "bipartitions") {
            json labels = json::array();
            std::string_view rest = value;
            while (!rest.empty()) {
                const auto comma = rest.find(',');
                const auto token = rest.substr(0, comma);
                labels.push_back(Bipartition::parse(token).label());
                if (comma == std::string_view::npos) break;
                rest = rest.substr(comma + 1);
            }
            sweep["bipartitions"] = labels;
            return;
        }
        if (field.substr(0, 6) == "outer.") {
            if (!sweep.contains("outer")) throw ConfigError("--set " + std::string(key) + ": sweep has no outer axis");
            json& outer = sweep.at("outer");
            const std::string sub = field.substr(6);
            if (sub == "axis") {
                outer["axis"] = std::string(to_string(parse_axis(value)));
                return;
            }
            if (sub == "start" || sub == "stop" || sub == "points") {
                set_range_field(outer, key, sub, value);
                return;
            }
        }
    }
    throw ConfigError("--set: unknown key '" + std::string(key) + "'");
}

}  // namespace flexcool
