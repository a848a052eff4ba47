#include "loplab/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>

#include "loplab/lop.hpp"
#include "loplab/randgen.hpp"

namespace loplab {

namespace {

constexpr std::uint64_t kDetectorStreamTag = 0x6465746563746f72ULL;

bool needs_plopu(const std::vector<Property>& props) {
  return std::any_of(props.begin(), props.end(), [](Property p) {
    return p == Property::Plopu || p == Property::PlopuGiant || p == Property::PlopuConn;
  });
}

std::vector<Property> distinct_sorted(std::vector<Property> props) {
  std::sort(props.begin(), props.end(), [](Property a, Property b) {
    return std::string_view(to_string(a)) < std::string_view(to_string(b));
  });
  props.erase(std::unique(props.begin(), props.end()), props.end());
  return props;
}

std::string fmt9(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

}  // namespace

void ExperimentConfig::validate() const {
  if (n == 0) throw std::invalid_argument("experiment needs n >= 1");
  if (samples < 1) throw std::invalid_argument("experiment needs S >= 1");
  if (iterations < 1) throw std::invalid_argument("experiment needs I >= 1");
  if (!(beta.num > 0 && beta.num < beta.den)) {
    throw std::invalid_argument("giant fraction beta must lie strictly between 0 and 1");
  }
  if (oracle_enabled && n > kDefaultOracleMaxN) {
    throw std::invalid_argument("exact oracle only available for n <= " +
                                std::to_string(kDefaultOracleMaxN));
  }
  if (!oracle_enabled && std::find(properties.begin(), properties.end(), Property::Lop) != properties.end()) {
    throw std::invalid_argument("property lop needs the exact oracle (n <= 14)");
  }
}

PropertyVector run_trial(const ExperimentConfig& cfg, std::uint64_t trial) {
  if (trial >= cfg.samples) throw std::invalid_argument("trial index out of range");
  RngStream gen_rng(cfg.seed, cfg.trial_offset + trial);
  RngStream det_rng = gen_rng.fork(kDetectorStreamTag);

  const double value = cfg.regime.evaluate(cfg.n).value;
  const Graph g = cfg.regime.model == Model::ER ? gen_er(cfg.n, value, gen_rng)
                                                : gen_rg(cfg.n, std::sqrt(value), gen_rng).graph;

  PropertyVector out;
  out.n = g.vertex_count();
  out.plopl = is_forest(g);
  const auto comps = components(g);
  out.conn = comps.size() == 1;
  out.largest_component = comps.empty() ? 0 : comps.front().size();
  out.pedge = pedge(g);
  if (needs_plopu(cfg.properties)) {
    out.plopu_violation_found = plopu_violation(g, cfg.iterations, det_rng, cfg.detector).found;
  }
  if (cfg.oracle_enabled) out.lop_exact = lop_oracle(g).satisfies;
  return out;
}

bool property_success(const PropertyVector& v, Property p, Fraction beta) {
  auto clean = [&] {
    if (!v.plopu_violation_found) throw std::logic_error("plopu was not evaluated for this trial");
    return !*v.plopu_violation_found;
  };
  auto giant = [&] { return giant_holds(v.largest_component, v.n, beta); };
  switch (p) {
    case Property::Plopl: return v.plopl;
    case Property::Plopu: return clean();
    case Property::Lop:
      if (!v.lop_exact) throw std::logic_error("exact oracle was not run for this trial");
      return *v.lop_exact;
    case Property::Conn: return v.conn;
    case Property::Giant: return giant();
    case Property::Edge: return v.pedge;
    case Property::PlopuGiant: return clean() && giant();
    case Property::PlopuConn: return clean() && v.conn;
  }
  throw std::logic_error("unhandled property");
}

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
  if (trials == 0) throw std::invalid_argument("wilson_interval: no trials");
  if (successes > trials) throw std::invalid_argument("wilson_interval: successes exceed trials");
  const double nt = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / nt;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nt;
  const double center = (p + z2 / (2.0 * nt)) / denom;
  const double half = z / denom * std::sqrt(p * (1.0 - p) / nt + z2 / (4.0 * nt * nt));
  Interval out{center - half, center + half};
  out.low = std::clamp(out.low, 0.0, p);
  out.high = std::clamp(out.high, p, 1.0);
  if (successes == 0) out.low = 0.0;
  if (successes == trials) out.high = 1.0;
  return out;
}

std::size_t default_worker_count() {
  if (const char* env = std::getenv("LOPLAB_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<EstimateRow> estimate(const ExperimentConfig& cfg, std::size_t workers) {
  cfg.validate();
  const auto props = distinct_sorted(cfg.properties);
  if (props.empty()) return {};
  if (props.size() > 8) throw std::logic_error("too many properties");

  // One success bit per property per trial; summed afterwards in trial order.
  std::vector<std::uint8_t> bits(cfg.samples, 0);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&] {
    try {
      for (std::uint64_t t = next++; t < cfg.samples; t = next++) {
        const PropertyVector v = run_trial(cfg, t);
        std::uint8_t b = 0;
        for (std::size_t i = 0; i < props.size(); ++i) {
          if (property_success(v, props[i], cfg.beta)) b |= static_cast<std::uint8_t>(1u << i);
        }
        bits[t] = b;
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = cfg.samples;
    }
  };

  workers = std::clamp<std::size_t>(workers, 1, static_cast<std::size_t>(cfg.samples));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  const auto evaluated = cfg.regime.evaluate(cfg.n);
  std::string regime = cfg.regime.describe();
  if (evaluated.clamped) regime += ":clamped";

  std::vector<EstimateRow> rows;
  for (std::size_t i = 0; i < props.size(); ++i) {
    std::uint64_t successes = 0;
    for (std::uint8_t b : bits) successes += (b >> i) & 1u;
    const Interval ci = wilson_interval(successes, cfg.samples);
    EstimateRow row;
    row.model = cfg.regime.model;
    row.regime = regime;
    row.axis = "none";
    row.n = cfg.n;
    row.property = props[i];
    row.samples = cfg.samples;
    row.successes = successes;
    row.p_hat = static_cast<double>(successes) / static_cast<double>(cfg.samples);
    row.ci_low = ci.low;
    row.ci_high = ci.high;
    row.seed = cfg.seed;
    row.iterations = cfg.iterations;
    rows.push_back(std::move(row));
  }
  return rows;
}

const char* to_string(SweepAxis a) noexcept {
  switch (a) {
    case SweepAxis::C: return "c";
    case SweepAxis::X: return "x";
    case SweepAxis::N: return "n";
  }
  return "?";
}

SweepAxis parse_axis(std::string_view s) {
  if (s == "c") return SweepAxis::C;
  if (s == "x") return SweepAxis::X;
  if (s == "n") return SweepAxis::N;
  throw std::invalid_argument("unknown sweep axis '" + std::string(s) + "' (expected c, x or n)");
}

std::vector<EstimateRow> sweep(const SweepSpec& spec, std::size_t workers, std::uint64_t first_point) {
  if (spec.values.empty()) throw std::invalid_argument("sweep grid is empty");
  const auto& form = spec.base.regime.form;
  if (spec.axis == SweepAxis::C && !std::holds_alternative<PowerLaw>(form)) {
    throw std::invalid_argument("a c axis needs a power-law regime");
  }
  if (spec.axis == SweepAxis::X &&
      !(std::holds_alternative<LogShift>(form) || std::holds_alternative<PedgeSharp>(form))) {
    throw std::invalid_argument("an x axis needs a logshift or pedgesharp regime");
  }
  for (double v : spec.values) {
    if (!std::isfinite(v)) throw std::invalid_argument("sweep grid value is not finite");
    if (spec.axis == SweepAxis::N && (v < 1.0 || v != std::floor(v))) {
      throw std::invalid_argument("n grid values must be positive integers");
    }
  }

  std::vector<EstimateRow> rows;
  for (std::size_t j = 0; j < spec.values.size(); ++j) {
    ExperimentConfig cfg = spec.base;
    const double v = spec.values[j];
    if (spec.axis == SweepAxis::N) cfg.n = static_cast<std::size_t>(v);
    else cfg.regime = cfg.regime.with_parameter(v);
    cfg.trial_offset = (first_point + j) * cfg.samples;
    for (auto& row : estimate(cfg, workers)) {
      row.axis = to_string(spec.axis);
      row.axis_value = v;
      rows.push_back(std::move(row));
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const EstimateRow& a, const EstimateRow& b) {
    if (a.axis_value != b.axis_value) return a.axis_value < b.axis_value;
    return std::string_view(to_string(a.property)) < std::string_view(to_string(b.property));
  });
  return rows;
}

std::string format_csv_row(const EstimateRow& r) {
  std::string s;
  s += to_string(r.model);
  s += ',' + r.regime;
  s += ',' + r.axis;
  s += ',' + fmt9(r.axis_value);
  s += ',' + std::to_string(r.n);
  s += ',';
  s += to_string(r.property);
  s += ',' + std::to_string(r.samples);
  s += ',' + std::to_string(r.successes);
  s += ',' + fmt9(r.p_hat);
  s += ',' + fmt9(r.ci_low);
  s += ',' + fmt9(r.ci_high);
  s += ',' + std::to_string(r.seed);
  s += ',' + std::to_string(r.iterations);
  return s;
}

void write_csv(std::ostream& out, const std::vector<EstimateRow>& rows) {
  out << kCsvHeader << '\n';
  for (const auto& r : rows) out << format_csv_row(r) << '\n';
}

}  // namespace loplab
