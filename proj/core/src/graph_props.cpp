#include "loplab/graph_props.hpp"

#include <array>
#include <charconv>
#include <cctype>
#include <numeric>
#include <stdexcept>
#include <string>

namespace loplab {

namespace {
__extension__ using Wide = __int128;
}

Fraction Fraction::parse(std::string_view text) {
  auto fail = [&] { throw std::invalid_argument("not a decimal number: '" + std::string(text) + "'"); };
  std::string_view s = text;
  if (s.empty()) fail();
  if (s.front() == '+') s.remove_prefix(1);
  if (!s.empty() && s.front() == '-') fail();

  std::int64_t num = 0, den = 1;
  int exponent = 0;
  bool digits = false, point = false;
  std::size_t i = 0;
  for (; i < s.size(); ++i) {
    const char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      if (num > (INT64_MAX - 9) / 10) fail();
      num = num * 10 + (c - '0');
      if (point) {
        if (den > INT64_MAX / 10) fail();
        den *= 10;
      }
      digits = true;
    } else if (c == '.' && !point) {
      point = true;
    } else {
      break;
    }
  }
  if (!digits) fail();
  if (i < s.size()) {
    if (s[i] != 'e' && s[i] != 'E') fail();
    auto rest = s.substr(i + 1);
    if (!rest.empty() && rest.front() == '+') rest.remove_prefix(1);
    auto [p, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), exponent);
    if (ec != std::errc{} || p != rest.data() + rest.size()) fail();
  }
  for (; exponent > 0; --exponent) {
    if (num > INT64_MAX / 10) fail();
    num *= 10;
  }
  for (; exponent < 0; ++exponent) {
    if (den > INT64_MAX / 10) fail();
    den *= 10;
  }
  const std::int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

Fraction Fraction::from_double(double x) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  if (ec != std::errc{}) throw std::invalid_argument("cannot format value as decimal");
  return parse(std::string_view(buf.data(), static_cast<std::size_t>(end - buf.data())));
}

std::string Fraction::to_string() const { return std::to_string(num) + "/" + std::to_string(den); }

bool pconn(const Graph& g) {
  if (g.vertex_count() == 0) throw std::invalid_argument("pconn: graph has no vertices");
  return component_count(g) == 1;
}

bool giant_holds(std::size_t largest, std::size_t n, Fraction beta) {
  if (!(beta.num > 0 && beta.num < beta.den)) {
    throw std::invalid_argument("giant fraction beta must lie strictly between 0 and 1");
  }
  // largest / n >= num / den  <=>  largest * den >= num * n
  const auto lhs = static_cast<Wide>(largest) * beta.den;
  const auto rhs = static_cast<Wide>(beta.num) * static_cast<Wide>(n);
  return lhs >= rhs;
}

bool pgiant(const Graph& g, Fraction beta) {
  return giant_holds(largest_component_size(g), g.vertex_count(), beta);
}

bool pgiant(const Graph& g, double beta) {
  if (!(beta > 0.0 && beta < 1.0)) {
    throw std::invalid_argument("giant fraction beta must lie strictly between 0 and 1");
  }
  return pgiant(g, Fraction::from_double(beta));
}

bool pedge(const Graph& g) { return g.edge_count() <= 2 * g.vertex_count(); }

}  // namespace loplab
