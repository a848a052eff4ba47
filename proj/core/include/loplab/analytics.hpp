#pragma once

// Closed-form limit curves and expected subgraph counts for the
// Erdos-Renyi and random geometric models.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/rational.hpp>

#include "loplab/graph_props.hpp"

namespace loplab {

enum class Model { ER, RG };

[[nodiscard]] const char* to_string(Model m) noexcept;
[[nodiscard]] Model parse_model(std::string_view s);

// Property tags shared by the analytic dispatch and the Monte Carlo engine.
// Joint tags are evaluated on one graph, never from marginals.
enum class Property { Plopl, Plopu, Lop, Conn, Giant, Edge, PlopuGiant, PlopuConn };

[[nodiscard]] const char* to_string(Property p) noexcept;
[[nodiscard]] Property parse_property(std::string_view s);
[[nodiscard]] std::vector<Property> parse_property_list(std::string_view csv);

// e(n) = c * n^(-alpha)
struct PowerLaw {
  double c = 1.0;
  double alpha = 1.0;
};
// ER: p = (ln n + x)/n; RG: r^2 = (ln n + x)/(pi n)
struct LogShift {
  double x = 0.0;
};
// ER: p = 4/n + x*2*sqrt(2n)/n^2; RG: r^2 = 4/(pi n) + x*2*sqrt(2n)/(pi n^2)
struct PedgeSharp {
  double x = 0.0;
};
struct FixedValue {
  double value = 0.0;
};
using RegimeForm = std::variant<PowerLaw, LogShift, PedgeSharp, FixedValue>;

// Edge-density function: p(n) for ER, r(n)^2 for RG.
struct EdgeRegime {
  Model model = Model::ER;
  RegimeForm form = PowerLaw{};

  struct Value {
    double value = 0.0;   // p or r^2
    bool clamped = false;  // ER only: raw value fell outside [0, 1]
  };
  // Throws std::invalid_argument for n == 0, NaN parameters, or a negative
  // RG value.
  [[nodiscard]] Value evaluate(std::size_t n) const;

  // The swept parameter: c for PowerLaw, x for LogShift/PedgeSharp, the
  // value itself for FixedValue.
  [[nodiscard]] double parameter() const;
  [[nodiscard]] EdgeRegime with_parameter(double v) const;

  // Compact, comma-free description used in CSV output.
  [[nodiscard]] std::string describe() const;
};

struct AnalyticsConfig {
  // Critical intensity for the unit-disk model (literature value, not
  // derived here). Only RG giant-component limits depend on it.
  double lambda_c = 1.436;
  std::optional<std::size_t> series_truncation;
};

struct Bounds {
  double lower = 0.0;
  double upper = 0.0;
};

// (1/beta) ln(1/(1-beta)). Throws unless 0 < beta < 1.
[[nodiscard]] double c_beta(double beta);

// Limit of P(LoP) for p = x/n: sqrt(1-x) exp(sum_{k in {1,2,3,4,5,7}} x^k/2k)
// for x < 1, else 0.
[[nodiscard]] double f_plop_er(double x);

// Limit of P(no cycles) for p = x/n: sqrt(1-x) exp(x/2 + x^2/4), x < 1.
[[nodiscard]] double f_forest_er(double x);

// exp(-sum_{k in {6} U {8..kmax}} x^k/2k). Requires kmax >= 6.
[[nodiscard]] double f_plop_er_truncated(double x, std::size_t kmax);

[[nodiscard]] double f_sigma_upper_er(double x);  // (1 - x^6)^(1/12), x < 1

[[nodiscard]] Bounds e_sigma_bounds_er(double c);
[[nodiscard]] double rg_plop_upper(double c);
[[nodiscard]] Bounds e_sigma_bounds_rg(double c);

[[nodiscard]] double normal_cdf(double x);
[[nodiscard]] double gumbel_cdf(double x);

using Rational = boost::rational<std::int64_t>;

// n^(k falling)/(2k) p^k. Throws unless 3 <= k <= n.
[[nodiscard]] double expected_cycles_er(std::size_t n, double p, std::size_t k);
[[nodiscard]] Rational expected_cycles_er(std::size_t n, Rational p, std::size_t k);

// Expected number of dumbbells D_k^{s,t} (k = k_path), halved when s == t.
// Throws unless s, t in {5, 7} and enough vertices exist.
[[nodiscard]] double expected_dumbbells_er(std::size_t n, double p, std::size_t s, std::size_t t,
                                           std::size_t k_path);
[[nodiscard]] Rational expected_dumbbells_er(std::size_t n, Rational p, std::size_t s,
                                             std::size_t t, std::size_t k_path);

// ER: C(n,2) p exactly. RG: the leading-order value (pi/2) r^2 n^2.
[[nodiscard]] double expected_edges(const EdgeRegime& regime, std::size_t n);

// Exact mean edge count for n uniform points on the unit square and radius
// r <= 1: C(n,2) (pi r^2 - 8 r^3/3 + r^4/2). Includes the boundary deficit
// the leading-order value ignores.
[[nodiscard]] double expected_edges_rg_square(std::size_t n, double r);

enum class StatementKind { Regular, Sharp, ZeroStatementOnly };

struct ThresholdSpec {
  Property property;
  Model model;
  std::string e_star;        // threshold function
  std::string a_n;           // sharpness term, empty when not sharp
  std::string distribution;  // name of F
  StatementKind kind;
  std::function<double(double)> evaluate;  // F(x); empty when unknown
};

[[nodiscard]] std::vector<ThresholdSpec> threshold_specs(const AnalyticsConfig& config = {},
                                                         Fraction beta = {1, 4});

struct LimitValue {
  std::optional<double> value;        // nullopt means Unknown
  std::optional<double> upper_bound;  // attached bound when the value is unknown

  [[nodiscard]] bool known() const noexcept { return value.has_value(); }
};

// Limiting probability of a property under an edge regime, or Unknown when
// no result covers the combination (including discontinuity points of
// indicator limits). Never extrapolates.
[[nodiscard]] LimitValue limit_probability(Property property, const EdgeRegime& regime,
                                           const AnalyticsConfig& config = {},
                                           Fraction beta = {1, 4});

}  // namespace loplab
