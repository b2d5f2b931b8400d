#include "flexcool/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <thread>

#include "flexcool/dynamics.hpp"
#include "flexcool/errors.hpp"
#include "flexcool/steadystate.hpp"

namespace flexcool {

std::string_view to_string(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::ThetaOverNu: return "theta_over_nu";
        case SweepAxis::Coupling: return "coupling";
        case SweepAxis::Temperature: return "temperature";
    }
    return "?";
}

SweepAxis parse_axis(std::string_view name) {
    if (name == "theta_over_nu") return SweepAxis::ThetaOverNu;
    if (name == "coupling") return SweepAxis::Coupling;
    if (name == "temperature") return SweepAxis::Temperature;
    throw ConfigError("unknown sweep axis '" + std::string(name) +
                      "' (expected theta_over_nu | coupling | temperature)");
}

std::string Bipartition::label() const {
    if (kind == Kind::MechPhonon) return "m" + std::to_string(first + 1) + "_ph";
    return "m" + std::to_string(first + 1) + "_m" + std::to_string(second + 1);
}

namespace {

int parse_mode_token(std::string_view token, std::string_view label) {
    int index = 0;
    if (token.size() < 2 || token[0] != 'm')
        throw ConfigError("bad bipartition label '" + std::string(label) + "'");
    const auto* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data() + 1, end, index);
    if (ec != std::errc{} || ptr != end || index < 1)
        throw ConfigError("bad bipartition label '" + std::string(label) + "'");
    return index - 1;
}

}  // namespace

Bipartition Bipartition::parse(std::string_view label) {
    const auto sep = label.find('_');
    if (sep == std::string_view::npos)
        throw ConfigError("bad bipartition label '" + std::string(label) + "' (expected mI_mJ or mI_ph)");
    const int first = parse_mode_token(label.substr(0, sep), label);
    const auto rest = label.substr(sep + 1);
    if (rest == "ph") return mech_phonon(first);
    const int second = parse_mode_token(rest, label);
    if (second == first) throw ConfigError("bipartition '" + std::string(label) + "' pairs a mode with itself");
    return mech_mech(first, second);
}

std::vector<double> linspace(double start, double stop, int points) {
    if (points < 1) throw ConfigError("linspace: points must be >= 1");
    if (points == 1) return {start};
    std::vector<double> out(points);
    const double step = (stop - start) / (points - 1);
    for (int k = 0; k < points; ++k) out[k] = start + step * k;
    out.back() = stop;
    return out;
}

namespace {

void validate_grid(const std::vector<double>& grid, const char* what) {
    if (grid.empty()) throw ConfigError(std::string(what) + ": grid is empty");
    if (grid.size() < 2) return;
    const bool up = grid[1] > grid[0];
    for (std::size_t k = 1; k < grid.size(); ++k) {
        if (!std::isfinite(grid[k])) throw ConfigError(std::string(what) + ": non-finite grid value");
        if (up ? !(grid[k] > grid[k - 1]) : !(grid[k] < grid[k - 1]))
            throw ConfigError(std::string(what) + ": grid must be strictly monotone");
    }
}

}  // namespace

void validate(const SweepSpec& spec) {
    validate_grid(spec.grid, "sweep");
    if (spec.outer) {
        validate_grid(spec.outer->grid, "sweep.outer");
        if (spec.outer->axis == spec.axis) throw ConfigError("sweep.outer must use a different axis");
    }
    const int n = static_cast<int>(spec.base.modes.size());
    if (spec.reference_mode < 0 || spec.reference_mode >= n)
        throw ConfigError("sweep.reference_mode " + std::to_string(spec.reference_mode) + " out of range");
    for (const auto& b : spec.observables.bipartitions) {
        const bool bad = b.first >= n || (b.kind == Bipartition::Kind::MechMech && b.second >= n);
        if (bad) throw ConfigError("bipartition " + b.label() + " refers to a missing mode");
    }
}

SystemConfig apply_axis(const SystemConfig& base, SweepAxis axis, double value, int reference_mode) {
    SystemConfig c = base;
    switch (axis) {
        case SweepAxis::ThetaOverNu:
            c.theta = value * c.modes.at(reference_mode).nu;
            break;
        case SweepAxis::Coupling:
            for (auto& m : c.modes) m.g = value;
            break;
        case SweepAxis::Temperature:
            c.temperature = value;
            break;
    }
    return c;
}

PointReport evaluate_point(const SystemConfig& config, const std::vector<Bipartition>& bipartitions) {
    PointReport r;
    r.warnings = validate(config);
    r.effective = derive_effective(config);
    const LinearSystem sys = build_system(config, r.effective);
    r.stability = spectral_stability(sys);
    if (!r.stability.stable) return r;

    try {
        const CovarianceMatrix cov = solve_lyapunov(sys);
        r.relative_residual = cov.relative_residual(sys);
        r.m_eff = occupations(cov);
        r.phonon_variances = phonon_variances(cov);
        const auto symp = symplectic_eigenvalues(cov);
        r.min_symplectic_eigenvalue = symp.front();
        for (const auto& b : bipartitions) {
            const auto bip = b.kind == Bipartition::Kind::MechPhonon ? reduce_mech_phonon(cov, b.first)
                                                                     : reduce_mech_mech(cov, b.first, b.second);
            r.entanglement.push_back(entanglement(bip));
        }
    } catch (const std::exception& e) {
        r.error = e.what();
        r.m_eff.clear();
        r.entanglement.clear();
    }
    return r;
}

namespace {

SweepRow evaluate_row(const SweepSpec& spec, std::optional<double> outer_value, double value) {
    SweepRow row;
    row.outer_value = outer_value;
    row.axis_value = value;
    try {
        SystemConfig c = spec.base;
        if (outer_value) c = apply_axis(c, spec.outer->axis, *outer_value, spec.reference_mode);
        c = apply_axis(c, spec.axis, value, spec.reference_mode);
        const PointReport r = evaluate_point(c, spec.observables.bipartitions);
        row.stable = r.stability.stable;
        row.error = r.error;
        if (row.stable && r.error.empty()) {
            if (spec.observables.decay_rate) row.decay_rate = r.stability.decay_rate;
            if (spec.observables.occupations) row.m_eff = r.m_eff;
            row.entanglement = r.entanglement;
        }
    } catch (const std::exception& e) {
        row.stable = false;
        row.error = e.what();
    }
    return row;
}

}  // namespace

SweepResult run_sweep(const SweepSpec& spec, unsigned threads) {
    validate(spec);

    SweepResult result;
    result.axis = spec.axis;
    result.n_modes = static_cast<int>(spec.base.modes.size());
    result.observables = spec.observables;
    if (spec.outer) result.outer_axis = spec.outer->axis;

    const std::size_t inner = spec.grid.size();
    const std::size_t outer = spec.outer ? spec.outer->grid.size() : 1;
    const std::size_t total = inner * outer;
    result.rows.resize(total);

    auto work = [&](std::size_t idx) {
        const std::size_t o = idx / inner;
        const std::size_t i = idx % inner;
        const std::optional<double> ov = spec.outer ? std::optional<double>(spec.outer->grid[o]) : std::nullopt;
        result.rows[idx] = evaluate_row(spec, ov, spec.grid[i]);
    };

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, total));
    if (threads <= 1) {
        for (std::size_t idx = 0; idx < total; ++idx) work(idx);
        return result;
    }

    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (std::size_t idx = next.fetch_add(1); idx < total; idx = next.fetch_add(1)) work(idx);
        });
    }
    pool.clear();  // joins
    return result;
}

}  // namespace flexcool
