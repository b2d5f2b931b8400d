#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "flexcool/sweep.hpp"

namespace flexcool {

// One curve (or one density panel) of a figure.
struct Series {
    std::string label;
    SweepSpec spec;
};

// Named scenario reproducing one figure. `provenance` lists the figure's
// stated parameter values; `series[default_series]` is the headline curve.
struct Preset {
    std::string name;
    std::string description;
    std::string provenance;
    std::vector<Series> series;
    std::size_t default_series = 0;

    const Series& find_series(std::string_view label) const;
};

// Default sampling density when a figure gives only the plotted range.
inline constexpr int kDefaultGridPoints = 401;

const std::vector<Preset>& list_presets();

// Throws ConfigError for an unknown name.
const Preset& find_preset(std::string_view name);

}  // namespace flexcool
