#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "loplab/montecarlo.hpp"

namespace loplab {

// Parameterization of one of the paper's simulation figures. A figure may
// consist of several sweeps (one per curve family), run in order.
struct FigurePreset {
  std::string id;
  std::vector<SweepSpec> sweeps;
};

[[nodiscard]] const std::vector<std::string>& figure_preset_ids();

// Caption parameters with n and S multiplied by `scale` (rounded to the
// nearest integer, n at least 1). Throws std::invalid_argument for an
// unknown id, scale outside (0, 1], or a scaled S below 30.
[[nodiscard]] FigurePreset figure_preset(std::string_view id, double scale, std::uint64_t seed);

// Runs every sweep of the preset; grid points are numbered consecutively
// across sweeps so no two points share trial indices.
[[nodiscard]] std::vector<EstimateRow> run_preset(const FigurePreset& preset, std::size_t workers = 1);

[[nodiscard]] std::vector<double> linear_grid(double start, double stop, double step);

}  // namespace loplab
