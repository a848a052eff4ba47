#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "loplab/analytics.hpp"
#include "loplab/cycle_detect.hpp"
#include "loplab/graph_props.hpp"

namespace loplab {

struct ExperimentConfig {
  EdgeRegime regime;  // carries the model
  std::size_t n = 0;
  std::uint64_t samples = 1;     // S
  std::uint64_t iterations = 1;  // I, detector cap
  Fraction beta{1, 4};
  std::uint64_t seed = 0;
  std::vector<Property> properties;
  bool oracle_enabled = false;
  DetectorOptions detector{};
  // Trial t draws from RngStream(seed, trial_offset + t).
  std::uint64_t trial_offset = 0;

  // Throws std::invalid_argument on S < 1, I < 1, beta outside (0, 1),
  // n == 0, or a lop request without the oracle (or with n > 14).
  void validate() const;
};

// Evaluates the requested properties on the graph of trial `trial`. The
// graph comes from RngStream(seed, trial_offset + trial); detector
// randomness comes from a fork of that stream. Throws if trial >= samples.
[[nodiscard]] PropertyVector run_trial(const ExperimentConfig& cfg, std::uint64_t trial);

// Whether trial outcome v has property p. Joint tags combine fields of the
// same trial.
[[nodiscard]] bool property_success(const PropertyVector& v, Property p, Fraction beta);

struct Interval {
  double low = 0.0;
  double high = 1.0;
};

inline constexpr double kWilsonZ95 = 1.96;

// Wilson score interval. Throws if trials == 0 or successes > trials.
[[nodiscard]] Interval wilson_interval(std::uint64_t successes, std::uint64_t trials,
                                       double z = kWilsonZ95);

struct EstimateRow {
  Model model = Model::ER;
  std::string regime;  // EdgeRegime::describe(), plus ":clamped" when evaluation clamped
  std::string axis;    // "c", "x", "n" or "none"
  double axis_value = 0.0;
  std::size_t n = 0;
  Property property = Property::Plopl;
  std::uint64_t samples = 0;
  std::uint64_t successes = 0;
  double p_hat = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  std::uint64_t seed = 0;
  std::uint64_t iterations = 0;
};

// Number of workers when none is given: LOPLAB_WORKERS if set and positive,
// else the hardware concurrency (at least 1).
[[nodiscard]] std::size_t default_worker_count();

// Runs all S trials on `workers` threads and returns one row per distinct
// property, ordered by property name. Rows do not depend on worker count.
[[nodiscard]] std::vector<EstimateRow> estimate(const ExperimentConfig& cfg, std::size_t workers = 1);

enum class SweepAxis { C, X, N };

[[nodiscard]] const char* to_string(SweepAxis a) noexcept;
[[nodiscard]] SweepAxis parse_axis(std::string_view s);

struct SweepSpec {
  ExperimentConfig base;
  SweepAxis axis = SweepAxis::C;
  std::vector<double> values;
};

// One estimate per grid value. Grid point j (counted from first_point)
// uses trial indices j*S .. j*S + S - 1. Rows are sorted by
// (axis value, property name). Throws on an empty grid, a C axis over a
// non power-law regime, an X axis over a power-law or fixed regime, or a
// non-integral n value.
[[nodiscard]] std::vector<EstimateRow> sweep(const SweepSpec& spec, std::size_t workers = 1,
                                             std::uint64_t first_point = 0);

inline constexpr const char* kCsvHeader =
    "model,regime,axis,axis_value,n,property,samples,successes,p_hat,ci_low,ci_high,seed,iters";

// Header line followed by one line per row, LF endings, %.9g floats.
void write_csv(std::ostream& out, const std::vector<EstimateRow>& rows);
[[nodiscard]] std::string format_csv_row(const EstimateRow& row);

}  // namespace loplab
