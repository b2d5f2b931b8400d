#include "flexcool/output.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace flexcool {

using nlohmann::json;

std::string format_double(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

namespace {

std::string cell(const std::optional<double>& v) { return v ? format_double(*v) : std::string(); }

// Numbers where JSON allows them; non-finite values become strings.
json json_number(double v) {
    if (std::isfinite(v)) return v;
    return format_double(v);
}

json json_optional(const std::optional<double>& v) { return v ? json_number(*v) : json(nullptr); }

std::string join(const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t k = 0; k < cells.size(); ++k) {
        if (k) line += ',';
        line += cells[k];
    }
    line += '\n';
    return line;
}

// Values of one row in sweep_columns order; nullopt for empty cells.
std::vector<std::optional<double>> row_values(const SweepResult& result, const SweepRow& row) {
    std::vector<std::optional<double>> v;
    if (result.outer_axis) v.push_back(row.outer_value);
    v.push_back(row.axis_value);
    v.push_back(row.stable ? 1.0 : 0.0);
    v.push_back(row.decay_rate);
    for (int j = 0; j < result.n_modes; ++j)
        v.push_back(j < static_cast<int>(row.m_eff.size()) ? std::optional<double>(row.m_eff[j]) : std::nullopt);
    const auto& bips = result.observables.bipartitions;
    for (std::size_t b = 0; b < bips.size(); ++b) {
        const bool have = b < row.entanglement.size();
        v.push_back(have ? std::optional<double>(row.entanglement[b].eta_minus) : std::nullopt);
        v.push_back(have ? std::optional<double>(row.entanglement[b].log_negativity) : std::nullopt);
    }
    return v;
}

}  // namespace

std::vector<std::string> sweep_columns(const SweepResult& result) {
    std::vector<std::string> cols;
    if (result.outer_axis) cols.push_back("outer_value");
    cols.insert(cols.end(), {"axis_value", "stable", "decay_rate_hz"});
    for (int j = 1; j <= result.n_modes; ++j) cols.push_back("m_eff_" + std::to_string(j));
    for (const auto& b : result.observables.bipartitions) {
        cols.push_back("eta_minus_" + b.label());
        cols.push_back("logneg_" + b.label());
    }
    return cols;
}

std::string sweep_to_csv(const SweepResult& result) {
    std::string out = join(sweep_columns(result));
    const int stable_col = result.outer_axis ? 2 : 1;
    for (const auto& row : result.rows) {
        const auto values = row_values(result, row);
        std::vector<std::string> cells;
        cells.reserve(values.size());
        for (std::size_t k = 0; k < values.size(); ++k) {
            if (static_cast<int>(k) == stable_col) {
                cells.emplace_back(row.stable ? "true" : "false");
            } else {
                cells.push_back(cell(values[k]));
            }
        }
        out += join(cells);
    }
    return out;
}

json sweep_to_json(const SweepResult& result, const json& meta) {
    const auto cols = sweep_columns(result);
    json rows = json::array();
    for (const auto& row : result.rows) {
        const auto values = row_values(result, row);
        json obj = json::object();
        for (std::size_t k = 0; k < cols.size(); ++k) {
            if (cols[k] == "stable") {
                obj[cols[k]] = row.stable;
            } else {
                obj[cols[k]] = json_optional(values[k]);
            }
        }
        if (!row.error.empty()) obj["error"] = row.error;
        rows.push_back(std::move(obj));
    }
    json meta_out = meta;
    meta_out["axis"] = std::string(to_string(result.axis));
    if (result.outer_axis) meta_out["outer_axis"] = std::string(to_string(*result.outer_axis));
    return {{"meta", meta_out}, {"rows", rows}};
}

namespace {

std::vector<std::pair<std::string, std::optional<double>>> point_fields(const SystemConfig& config,
                                                                        const PointReport& r,
                                                                        const std::vector<Bipartition>& bips) {
    std::vector<std::pair<std::string, std::optional<double>>> f = {
        {"theta_hz", config.theta},
        {"xi_hz", r.effective.xi},
        {"gamma_eff_hz", r.effective.gamma_eff},
        {"omega_eff_hz", r.effective.omega_eff},
        {"alpha_abs", r.effective.alpha_abs},
        {"max_real_part_hz", r.stability.max_real_part},
        {"decay_rate_hz", r.stability.decay_rate},
        {"relaxation_time_s", r.stability.relaxation_time},
    };
    for (std::size_t j = 0; j < config.modes.size(); ++j) {
        const bool have = j < r.m_eff.size();
        f.emplace_back("m_eff_" + std::to_string(j + 1), have ? std::optional<double>(r.m_eff[j]) : std::nullopt);
    }
    f.emplace_back("var_x", r.phonon_variances ? std::optional<double>(r.phonon_variances->first) : std::nullopt);
    f.emplace_back("var_y", r.phonon_variances ? std::optional<double>(r.phonon_variances->second) : std::nullopt);
    f.emplace_back("min_symplectic_eigenvalue", r.min_symplectic_eigenvalue);
    f.emplace_back("relative_residual", r.relative_residual);
    for (std::size_t b = 0; b < bips.size(); ++b) {
        const bool have = b < r.entanglement.size();
        f.emplace_back("eta_minus_" + bips[b].label(),
                       have ? std::optional<double>(r.entanglement[b].eta_minus) : std::nullopt);
        f.emplace_back("logneg_" + bips[b].label(),
                       have ? std::optional<double>(r.entanglement[b].log_negativity) : std::nullopt);
    }
    return f;
}

}  // namespace

json point_to_json(const SystemConfig& config, const PointReport& r, const std::vector<Bipartition>& bips) {
    json out = json::object();
    out["stable"] = r.stability.stable;
    for (const auto& [name, value] : point_fields(config, r, bips)) out[name] = json_optional(value);
    if (!r.warnings.empty()) out["warnings"] = r.warnings;
    if (!r.error.empty()) out["error"] = r.error;
    return out;
}

std::string point_to_csv(const SystemConfig& config, const PointReport& r, const std::vector<Bipartition>& bips) {
    std::vector<std::string> header = {"stable"};
    std::vector<std::string> values = {r.stability.stable ? "true" : "false"};
    for (const auto& [name, value] : point_fields(config, r, bips)) {
        header.push_back(name);
        values.push_back(cell(value));
    }
    return join(header) + join(values);
}

std::string matrix_to_csv(const Eigen::MatrixXd& m) {
    std::string out;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        std::vector<std::string> cells;
        for (Eigen::Index c = 0; c < m.cols(); ++c) cells.push_back(format_double(m(r, c)));
        out += join(cells);
    }
    return out;
}

json matrix_to_json(const Eigen::MatrixXd& m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(json_number(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace flexcool
