#pragma once

#include <random>

#include "qjones/exactpoly.hpp"

namespace qjones::testing {

/// Random polynomial with `terms` terms, q-exponents in [-span, span], z-exponents in [-zspan, zspan].
inline LaurentPoly random_poly(std::mt19937& rng, int terms, int span, int zspan = 0, int coef = 5) {
  std::uniform_int_distribution<int> e(-span, span), z(-zspan, zspan), c(-coef, coef);
  LaurentPoly p;
  for (int i = 0; i < terms; ++i) p += LaurentPoly::monomial(c(rng), QExponent::q(e(rng)), z(rng));
  return p;
}

}  // namespace qjones::testing
