#include "loplab/presets.hpp"

#include <cmath>
#include <stdexcept>

namespace loplab {

namespace {

constexpr std::size_t kMinScaledSamples = 30;

const std::vector<double> kSizeGrid{100, 200, 500, 1000, 2000, 5000, 10000};

std::size_t scaled(double value, double scale) {
  return static_cast<std::size_t>(std::max(1.0, std::round(value * scale)));
}

ExperimentConfig base_config(Model model, double alpha, double n, double samples,
                             std::uint64_t iterations, std::vector<Property> props, double scale,
                             std::uint64_t seed) {
  ExperimentConfig cfg;
  cfg.regime = {model, PowerLaw{1.0, alpha}};
  cfg.n = scaled(n, scale);
  cfg.samples = scaled(samples, scale);
  cfg.iterations = iterations;
  cfg.beta = {1, 4};
  cfg.seed = seed;
  cfg.properties = std::move(props);
  if (cfg.samples < kMinScaledSamples) {
    throw std::invalid_argument("scaled sample count " + std::to_string(cfg.samples) +
                                " is below " + std::to_string(kMinScaledSamples));
  }
  return cfg;
}

std::vector<double> scaled_sizes(double scale) {
  std::vector<double> out;
  for (double n : kSizeGrid) {
    const double v = static_cast<double>(scaled(n, scale));
    if (out.empty() || out.back() != v) out.push_back(v);
  }
  return out;
}

}  // namespace

std::vector<double> linear_grid(double start, double stop, double step) {
  if (!(step > 0.0) || stop < start) throw std::invalid_argument("invalid grid");
  std::vector<double> out;
  const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9));
  for (std::size_t i = 0; i <= count; ++i) {
    // Round to 12 significant digits so 0.1 steps print as 0.3, not 0.30000000000000004.
    const double v = start + static_cast<double>(i) * step;
    out.push_back(std::round(v * 1e12) / 1e12);
  }
  return out;
}

const std::vector<std::string>& figure_preset_ids() {
  static const std::vector<std::string> ids{"er-prop-vs-c", "er-prop-vs-n", "rg-prop-vs-c-65",
                                            "rg-prop-vs-c-1", "rg-prop-vs-n"};
  return ids;
}

FigurePreset figure_preset(std::string_view id, double scale, std::uint64_t seed) {
  if (!(scale > 0.0 && scale <= 1.0)) throw std::invalid_argument("scale must lie in (0, 1]");
  FigurePreset p{std::string(id), {}};
  const std::vector<Property> c_props{Property::Plopl, Property::Plopu, Property::Giant,
                                      Property::PlopuGiant};
  const std::vector<Property> joint{Property::PlopuGiant};

  if (id == "er-prop-vs-c") {
    p.sweeps.push_back({base_config(Model::ER, 1.0, 1e4, 1e3, 10000, c_props, scale, seed), SweepAxis::C,
                        linear_grid(0.0, 2.0, 0.1)});
  } else if (id == "er-prop-vs-n") {
    for (double c : {1.0, 1.05, 1.1, 1.15}) {
      auto cfg = base_config(Model::ER, 1.0, 1e4, 1e4, 1000, joint, scale, seed);
      cfg.regime = cfg.regime.with_parameter(c);
      p.sweeps.push_back({cfg, SweepAxis::N, scaled_sizes(scale)});
    }
  } else if (id == "rg-prop-vs-c-65" || id == "rg-prop-vs-c-1") {
    const bool steep = id == "rg-prop-vs-c-65";
    const auto grid = steep ? linear_grid(0.0, 4.0, 0.2) : linear_grid(0.0, 3.0, 0.1);
    for (double n : {1e2, 1e3, 1e4}) {
      p.sweeps.push_back({base_config(Model::RG, steep ? 1.2 : 1.0, n, 1e3, 1000, c_props, scale, seed),
                          SweepAxis::C, grid});
    }
  } else if (id == "rg-prop-vs-n") {
    for (auto [alpha, c] : {std::pair{1.2, 2.0}, std::pair{1.0, 1.5}}) {
      auto cfg = base_config(Model::RG, alpha, 1e4, 1e5, 1000, joint, scale, seed);
      cfg.regime = cfg.regime.with_parameter(c);
      p.sweeps.push_back({cfg, SweepAxis::N, scaled_sizes(scale)});
    }
  } else {
    throw std::invalid_argument("unknown figure preset '" + std::string(id) + "'");
  }
  return p;
}

std::vector<EstimateRow> run_preset(const FigurePreset& preset, std::size_t workers) {
  std::vector<EstimateRow> rows;
  std::uint64_t point = 0;
  for (const auto& s : preset.sweeps) {
    auto part = sweep(s, workers, point);
    point += s.values.size();
    rows.insert(rows.end(), part.begin(), part.end());
  }
  return rows;
}

}  // namespace loplab
