#pragma once

#include <string>

#include "mtzeta/literal.hpp"
#include "mtzeta/rational.hpp"
#include "mtzeta/term_map.hpp"

namespace mtzeta {

// Human-readable one-liner: "2 * Z(2,1) + 1 * Z(3,2)"; the empty combination
// renders as "0".  Coefficients always appear, even when 1, so the text
// round-trips mentally to the term map.
inline std::string render_plain(const mzv_combination& c) {
  if (c.empty()) return "0";
  std::string out;
  for (const auto& [key, coeff] : c) {
    if (!out.empty()) out += " + ";
    out += to_string(coeff) + " * " + render(key);
  }
  return out;
}

// LaTeX: "2\zeta(2,1) + \zeta(3,2)".  Unit coefficients are dropped,
// non-integer ones render as \tfrac{p}{q}.
inline std::string render_latex(const mzv_combination& c) {
  if (c.empty()) return "0";
  std::string out;
  for (const auto& [key, coeff] : c) {
    if (!out.empty()) out += " + ";
    if (coeff != 1) {
      if (is_integer(coeff)) {
        out += numerator(coeff).str();
      } else {
        out += "\\tfrac{" + numerator(coeff).str() + "}{" + denominator(coeff).str() + "}";
      }
    }
    out += "\\zeta(" + detail::join_args(key.args()) + ")";
  }
  return out;
}

}  // namespace mtzeta
