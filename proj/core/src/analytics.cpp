#include "loplab/analytics.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>

namespace loplab {

const char* to_string(Model m) noexcept { return m == Model::ER ? "er" : "rg"; }

Model parse_model(std::string_view s) {
  if (s == "er" || s == "ER") return Model::ER;
  if (s == "rg" || s == "RG") return Model::RG;
  throw std::invalid_argument("unknown model '" + std::string(s) + "' (expected er or rg)");
}

namespace {

constexpr std::array<std::pair<Property, const char*>, 8> kPropertyNames{{
    {Property::Plopl, "plopl"},
    {Property::Plopu, "plopu"},
    {Property::Lop, "lop"},
    {Property::Conn, "conn"},
    {Property::Giant, "giant"},
    {Property::Edge, "edge"},
    {Property::PlopuGiant, "plopu_giant"},
    {Property::PlopuConn, "plopu_conn"},
}};

std::string fmt9(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

bool same(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b)); }

}  // namespace

const char* to_string(Property p) noexcept {
  for (const auto& [prop, name] : kPropertyNames)
    if (prop == p) return name;
  return "?";
}

Property parse_property(std::string_view s) {
  for (const auto& [prop, name] : kPropertyNames)
    if (s == name) return prop;
  throw std::invalid_argument("unknown property '" + std::string(s) + "'");
}

std::vector<Property> parse_property_list(std::string_view csv) {
  std::vector<Property> out;
  while (!csv.empty()) {
    const auto comma = csv.find(',');
    const auto item = csv.substr(0, comma);
    if (!item.empty()) out.push_back(parse_property(item));
    if (comma == std::string_view::npos) break;
    csv.remove_prefix(comma + 1);
  }
  return out;
}

// ---------------------------------------------------------------------------
// EdgeRegime

EdgeRegime::Value EdgeRegime::evaluate(std::size_t n) const {
  if (n == 0) throw std::invalid_argument("edge regime evaluated at n = 0");
  const double nd = static_cast<double>(n);
  const double scale = model == Model::RG ? std::numbers::pi : 1.0;
  const double raw = std::visit(
      [&](const auto& f) -> double {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, PowerLaw>) {
          return f.c * std::pow(nd, -f.alpha);
        } else if constexpr (std::is_same_v<T, LogShift>) {
          return (std::log(nd) + f.x) / (scale * nd);
        } else if constexpr (std::is_same_v<T, PedgeSharp>) {
          return 4.0 / (scale * nd) + f.x * 2.0 * std::sqrt(2.0 * nd) / (scale * nd * nd);
        } else {
          return f.value;
        }
      },
      form);
  if (std::isnan(raw)) throw std::invalid_argument("edge regime evaluates to NaN");
  Value v{raw, false};
  if (raw < 0.0) v = {0.0, true};
  if (model == Model::ER && raw > 1.0) v = {1.0, true};
  return v;
}

double EdgeRegime::parameter() const {
  return std::visit(
      [](const auto& f) -> double {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, PowerLaw>) return f.c;
        else if constexpr (std::is_same_v<T, FixedValue>) return f.value;
        else return f.x;
      },
      form);
}

EdgeRegime EdgeRegime::with_parameter(double v) const {
  EdgeRegime out = *this;
  std::visit(
      [v](auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, PowerLaw>) f.c = v;
        else if constexpr (std::is_same_v<T, FixedValue>) f.value = v;
        else f.x = v;
      },
      out.form);
  return out;
}

std::string EdgeRegime::describe() const {
  return std::visit(
      [](const auto& f) -> std::string {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, PowerLaw>) return "powerlaw:c=" + fmt9(f.c) + ":alpha=" + fmt9(f.alpha);
        else if constexpr (std::is_same_v<T, LogShift>) return "logshift:x=" + fmt9(f.x);
        else if constexpr (std::is_same_v<T, PedgeSharp>) return "pedgesharp:x=" + fmt9(f.x);
        else return "fixed:value=" + fmt9(f.value);
      },
      form);
}

// ---------------------------------------------------------------------------
// Limit curves

double c_beta(double beta) {
  if (!(beta > 0.0 && beta < 1.0)) throw std::invalid_argument("c_beta: beta must lie in (0, 1)");
  return -std::log1p(-beta) / beta;
}

namespace {

// sum_{k in ks} x^k / (2k), accumulated from the largest k down.
template <typename Range>
double half_power_series(double x, const Range& ks) {
  double sum = 0.0;
  for (auto it = std::rbegin(ks); it != std::rend(ks); ++it) {
    const auto k = static_cast<double>(*it);
    sum += std::pow(x, k) / (2.0 * k);
  }
  return sum;
}

constexpr std::array<int, 6> kAllowedLengths{1, 2, 3, 4, 5, 7};

void require_nonnegative(double x, const char* what) {
  if (!(x >= 0.0)) throw std::invalid_argument(std::string(what) + ": argument must be >= 0");
}

}  // namespace

double f_plop_er(double x) {
  require_nonnegative(x, "f_plop_er");
  if (x >= 1.0) return 0.0;
  return std::sqrt(1.0 - x) * std::exp(half_power_series(x, kAllowedLengths));
}

double f_forest_er(double x) {
  require_nonnegative(x, "f_forest_er");
  if (x >= 1.0) return 0.0;
  return std::sqrt(1.0 - x) * std::exp(x / 2.0 + x * x / 4.0);
}

double f_plop_er_truncated(double x, std::size_t kmax) {
  require_nonnegative(x, "f_plop_er_truncated");
  if (kmax < 6) throw std::invalid_argument("f_plop_er_truncated: kmax must be >= 6");
  std::vector<std::size_t> ks{6};
  for (std::size_t k = 8; k <= kmax; ++k) ks.push_back(k);
  return std::exp(-half_power_series(x, ks));
}

double f_sigma_upper_er(double x) {
  require_nonnegative(x, "f_sigma_upper_er");
  if (x >= 1.0) return 0.0;
  return std::pow(1.0 - std::pow(x, 6), 1.0 / 12.0);
}

Bounds e_sigma_bounds_er(double c) {
  return {0.5 * (1.0 + f_plop_er(c)), (2.0 + f_sigma_upper_er(c)) / 3.0};
}

double rg_plop_upper(double c) {
  require_nonnegative(c, "rg_plop_upper");
  // 6! = 720
  return std::exp(-std::pow(std::numbers::pi * c / 4.0, 5) / 720.0);
}

Bounds e_sigma_bounds_rg(double c) { return {0.5, (2.0 + rg_plop_upper(c)) / 3.0}; }

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double gumbel_cdf(double x) { return std::exp(-std::exp(-x)); }

// ---------------------------------------------------------------------------
// Expected counts

namespace {

template <typename T>
T falling(std::size_t n, std::size_t k) {
  T out(1);
  for (std::size_t i = 0; i < k; ++i) out *= T(static_cast<std::int64_t>(n - i));
  return out;
}

template <typename T>
T power(T base, std::size_t e) {
  T out(1);
  for (std::size_t i = 0; i < e; ++i) out *= base;
  return out;
}

template <typename T>
T cycles_impl(std::size_t n, T p, std::size_t k) {
  if (k < 3 || k > n) throw std::invalid_argument("expected_cycles_er: need 3 <= k <= n");
  return falling<T>(n, k) / T(static_cast<std::int64_t>(2 * k)) * power(p, k);
}

template <typename T>
T dumbbells_impl(std::size_t n, T p, std::size_t s, std::size_t t, std::size_t k) {
  auto ok = [](std::size_t len) { return len == 5 || len == 7; };
  if (!ok(s) || !ok(t)) throw std::invalid_argument("expected_dumbbells_er: s, t must be 5 or 7");
  const std::size_t needed = k == 0 ? s + t - 1 : s + t + k - 1;
  if (n < needed) throw std::invalid_argument("expected_dumbbells_er: not enough vertices");
  const auto si = static_cast<std::int64_t>(s);
  const auto ti = static_cast<std::int64_t>(t);
  const T first = falling<T>(n, s) / T(2 * si);
  T out;
  if (k == 0) {
    out = first * (falling<T>(n - s, t - 1) / T(2)) * T(si) * power(p, s + t);
  } else {
    out = first * (falling<T>(n - s, t) / T(2 * ti)) * T(si) * falling<T>(n - s - t, k - 1) * T(ti) *
          power(p, s + t + k);
  }
  if (s == t) out /= T(2);
  return out;
}

void require_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
}

}  // namespace

double expected_cycles_er(std::size_t n, double p, std::size_t k) {
  require_probability(p);
  return cycles_impl<double>(n, p, k);
}

Rational expected_cycles_er(std::size_t n, Rational p, std::size_t k) {
  if (p < 0 || p > 1) throw std::invalid_argument("p must lie in [0, 1]");
  return cycles_impl<Rational>(n, p, k);
}

double expected_dumbbells_er(std::size_t n, double p, std::size_t s, std::size_t t, std::size_t k_path) {
  require_probability(p);
  return dumbbells_impl<double>(n, p, s, t, k_path);
}

Rational expected_dumbbells_er(std::size_t n, Rational p, std::size_t s, std::size_t t,
                               std::size_t k_path) {
  if (p < 0 || p > 1) throw std::invalid_argument("p must lie in [0, 1]");
  return dumbbells_impl<Rational>(n, p, s, t, k_path);
}

double expected_edges(const EdgeRegime& regime, std::size_t n) {
  const double value = regime.evaluate(n).value;
  const double nd = static_cast<double>(n);
  if (regime.model == Model::ER) return nd * (nd - 1.0) / 2.0 * value;
  // mu_{K2} r^2 n^2 with mu_{K2} = pi/2
  return std::numbers::pi / 2.0 * value * nd * nd;
}

double expected_edges_rg_square(std::size_t n, double r) {
  if (!(r >= 0.0 && r <= 1.0)) throw std::invalid_argument("expected_edges_rg_square: need 0 <= r <= 1");
  const double nd = static_cast<double>(n);
  const double r2 = r * r;
  const double prob = std::numbers::pi * r2 - 8.0 / 3.0 * r2 * r + r2 * r2 / 2.0;
  return nd * (nd - 1.0) / 2.0 * prob;
}

// ---------------------------------------------------------------------------
// Threshold table and limit dispatch

std::vector<ThresholdSpec> threshold_specs(const AnalyticsConfig& config, Fraction beta) {
  const double cb = c_beta(beta.value());
  const double lc = config.lambda_c;
  auto step = [](double x) { return x > 1.0 ? 1.0 : 0.0; };
  return {
      {Property::Lop, Model::ER, "1/n", "", "sqrt(1-x) exp(sum_{k in {1,2,3,4,5,7}} x^k/2k)",
       StatementKind::Regular, f_plop_er},
      {Property::Plopl, Model::ER, "1/n", "", "sqrt(1-x) exp(x/2 + x^2/4)", StatementKind::Regular,
       f_forest_er},
      {Property::Edge, Model::ER, "4/n", "2 sqrt(2n)/n^2", "Phi(-x)", StatementKind::Sharp,
       [](double x) { return normal_cdf(-x); }},
      {Property::Conn, Model::ER, "ln(n)/n", "1/n", "exp(-exp(-x))", StatementKind::Sharp, gumbel_cdf},
      {Property::Giant, Model::ER, fmt9(cb) + "/n", "", "1{x > 1}", StatementKind::Regular, step},
      {Property::Edge, Model::RG, "4/(pi n)", "2 sqrt(2n)/(pi n^2)", "Phi(-x)", StatementKind::Sharp,
       [](double x) { return normal_cdf(-x); }},
      {Property::Conn, Model::RG, "ln(n)/(pi n)", "1/(pi n)", "exp(-exp(-x))", StatementKind::Sharp,
       gumbel_cdf},
      {Property::Giant, Model::RG, fmt9(lc) + "/n", "", "1{x > 1}", StatementKind::Regular, step},
      {Property::Lop, Model::RG, "n^(-6/5)", "", "unknown (0-statement above; upper bound at c/n^(6/5))",
       StatementKind::ZeroStatementOnly, {}},
  };
}

LimitValue limit_probability(Property property, const EdgeRegime& regime, const AnalyticsConfig& config,
                             Fraction beta) {
  if (!(config.lambda_c > 0.0)) throw std::invalid_argument("lambda_c must be positive");
  const LimitValue unknown{};
  auto known = [](double v) { return LimitValue{v, std::nullopt}; };

  // Regular threshold with indicator limit at `threshold`/n.
  auto indicator = [&](const PowerLaw& f, double threshold) -> LimitValue {
    if (same(f.alpha, 1.0)) {
      if (same(f.c, threshold)) return unknown;
      return known(f.c > threshold ? 1.0 : 0.0);
    }
    if (f.c == 0.0) return known(0.0);
    return known(f.alpha < 1.0 ? 1.0 : 0.0);
  };
  // Monotone decreasing property with threshold 1/n and limit F(c).
  auto below_one_over_n = [&](const PowerLaw& f, double (*F)(double)) -> LimitValue {
    if (f.c < 0.0) return unknown;
    if (same(f.alpha, 1.0)) return known(F(f.c));
    if (f.c == 0.0 || f.alpha > 1.0) return known(1.0);
    return known(0.0);
  };

  const auto* pl = std::get_if<PowerLaw>(&regime.form);
  const auto* ls = std::get_if<LogShift>(&regime.form);
  const auto* ps = std::get_if<PedgeSharp>(&regime.form);

  if (regime.model == Model::ER) {
    switch (property) {
      case Property::Lop:
        if (pl) return below_one_over_n(*pl, f_plop_er);
        break;
      case Property::Plopl:
        if (pl) return below_one_over_n(*pl, f_forest_er);
        break;
      case Property::Giant:
        if (pl) return indicator(*pl, c_beta(beta.value()));
        break;
      case Property::Conn:
        if (ls) return known(gumbel_cdf(ls->x));
        break;
      case Property::Edge:
        if (ps) return known(normal_cdf(-ps->x));
        break;
      default:
        break;
    }
    return unknown;
  }

  switch (property) {
    case Property::Conn:
      if (ls) return known(gumbel_cdf(ls->x));
      break;
    case Property::Edge:
      if (ps) return known(normal_cdf(-ps->x));
      break;
    case Property::Giant:
      if (pl) return indicator(*pl, config.lambda_c);
      break;
    case Property::Lop:
      if (pl && pl->c > 0.0) {
        if (same(pl->alpha, 1.2)) return {std::nullopt, rg_plop_upper(pl->c)};
        if (pl->alpha < 1.2) return known(0.0);
      }
      break;
    default:
      break;
  }
  return unknown;
}

}  // namespace loplab
