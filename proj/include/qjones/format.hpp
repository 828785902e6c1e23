#pragma once

#include <string>
#include <string_view>

#include "qjones/exactpoly.hpp"

namespace qjones {

enum class TermOrder {
  /// Lexicographically ascending (q-exponent, then z-exponent).
  ascending,
  /// Increasing |exponent|, positive before negative: "3 - z - z^-1".
  center_out,
};

/// Renders terms as "c*q^e*z^f" joined by " + " / " - ". Unit coefficients and
/// zero/one exponents are elided ("q + q^3 - q^4"); fractional q-powers print as
/// "q^(1/2)".
std::string to_string(const LaurentPoly& p, TermOrder order = TermOrder::ascending);

/// Residue rendered as a polynomial in q of degree < phi(N), ascending.
std::string to_string(const CyclotomicInt& c);

/// Inverse of to_string for either term order. Throws ParseError.
LaurentPoly parse_laurent(std::string_view text);

}  // namespace qjones
