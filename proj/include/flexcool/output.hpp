#pragma once

#include <Eigen/Dense>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "flexcool/sweep.hpp"

namespace flexcool {

// Shortest representation that round-trips, '.' decimal separator
// regardless of locale. Non-finite values print as inf / -inf / nan.
std::string format_double(double value);

// Column names, in order: [outer_value,] axis_value, stable, decay_rate_hz,
// m_eff_1..m_eff_N, then eta_minus_<label>, logneg_<label> per bipartition.
// outer_value only appears for nested sweeps.
std::vector<std::string> sweep_columns(const SweepResult& result);

// Header row plus one line per grid point; unstable rows leave observable cells empty.
std::string sweep_to_csv(const SweepResult& result);

// {"meta": meta, "rows": [{column: value|null, ...}, ...]}
nlohmann::json sweep_to_json(const SweepResult& result, const nlohmann::json& meta);

nlohmann::json point_to_json(const SystemConfig& config, const PointReport& report,
                             const std::vector<Bipartition>& bipartitions);
std::string point_to_csv(const SystemConfig& config, const PointReport& report,
                         const std::vector<Bipartition>& bipartitions);

// Row-major, one matrix row per line, comma separated.
std::string matrix_to_csv(const Eigen::MatrixXd& m);
nlohmann::json matrix_to_json(const Eigen::MatrixXd& m);

}  // namespace flexcool
