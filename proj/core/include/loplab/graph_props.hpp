#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "loplab/graph.hpp"

namespace loplab {

// Exact nonnegative fraction num/den, used for giant-component thresholds so
// that boundary comparisons never depend on floating-point rounding.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  // Exact value of a plain decimal literal such as "0.25" or "1e-3".
  static Fraction parse(std::string_view decimal);
  // Exact value of the shortest decimal that round-trips to x.
  static Fraction from_double(double x);

  [[nodiscard]] double value() const noexcept {
    return static_cast<double>(num) / static_cast<double>(den);
  }
  [[nodiscard]] std::string to_string() const;
};

// Table I properties on a single graph.

// Throws std::invalid_argument for the empty graph.
[[nodiscard]] bool pconn(const Graph& g);

// Largest component size >= beta * n, compared exactly.
// Throws std::invalid_argument unless 0 < beta < 1.
[[nodiscard]] bool pgiant(const Graph& g, Fraction beta);
[[nodiscard]] bool pgiant(const Graph& g, double beta);

// At most 2n edges.
[[nodiscard]] bool pedge(const Graph& g);

[[nodiscard]] bool giant_holds(std::size_t largest, std::size_t n, Fraction beta);

struct PropertyVector {
  bool plopl = false;
  // Only evaluated when a requested property needs the randomized search.
  std::optional<bool> plopu_violation_found;
  bool conn = false;
  std::size_t largest_component = 0;
  std::size_t n = 0;
  bool pedge = false;
  std::optional<bool> lop_exact;  // exact oracle, n <= 14 only

  [[nodiscard]] Fraction giant_fraction() const noexcept {
    return {static_cast<std::int64_t>(largest_component), static_cast<std::int64_t>(n == 0 ? 1 : n)};
  }
  friend bool operator==(const PropertyVector&, const PropertyVector&) = default;
};

}  // namespace loplab
