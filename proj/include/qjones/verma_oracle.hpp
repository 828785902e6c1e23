#pragma once

// Colored Jones polynomials from the twisted R-matrix acting on tensor powers
// of the modified Verma module V_N (basis e_0, e_1, ...), traced over
// e_0 (x) W_N^{(x)(m-1)}. Independent of the deformed-Burau pipeline.

#include <complex>
#include <vector>

#include "qjones/braid.hpp"
#include "qjones/exactpoly.hpp"

namespace qjones {

/// Coefficient of e_{n2+l} (x) e_{n1-l} (sign +) or e_{n2-l} (x) e_{n1+l} (sign -)
/// in the twisted braiding applied to e_{n1} (x) e_{n2}, with z = q^{N-1}.
LaurentPoly braiding_coeff(int sign, int n1, int n2, int l, int n);

/// Action of K, E, F on V_N.
class VermaAction {
 public:
  explicit VermaAction(int n) : n_(n) {}
  int order() const noexcept { return n_; }

  /// K e_i = v^{N-1-2i} e_i.
  LaurentPoly k_weight(int i) const;
  /// E e_i = (i)_{q^{-1}} e_{i-1}.
  LaurentPoly e_coeff(int i) const;
  /// F e_i = v^i [N-1-i] e_{i+1}.
  LaurentPoly f_coeff(int i) const;

  /// KE = qEK, KF = q^{-1}FK and EF - FE = (K - K^{-1})/(v - v^{-1}) on e_0..e_{max_index}.
  bool check_relations(int max_index) const;

 private:
  int n_;
};

/// Balanced quantum integer [n] = (v^n - v^{-n}) / (v - v^{-1}).
LaurentPoly quantum_integer(int n);

/// Sparse vector on the basis e_{n_1} (x) ... (x) e_{n_m}.
using TensorState = std::vector<std::pair<std::vector<int>, LaurentPoly>>;

/// Applies the twisted braiding of the given sign at positions (pos, pos+1),
/// 1-based, with no truncation of the output.
TensorState apply_braiding(const TensorState& x, int sign, int pos, int n);

/// b12 b23 b12 = b23 b12 b23 (sign +) on every basis vector of W_cap^{(x)3}.
bool check_braid_relation(int n, int cap);
/// b_- b_+ = b_+ b_- = id on every basis vector of W_cap^{(x)2}.
bool check_braiding_inverse(int n, int cap);

/// Exact J'_K(N) by the partial-trace state sum.
LaurentPoly state_sum_jones(const BraidWord& b, int n);

struct NumericStateSum {
  std::complex<double> value;
  /// Sum of |path contributions|; value / bound measures the cancellation.
  double magnitude_bound;
  /// Mantissa bits of the arithmetic that met the tolerance.
  int precision_bits;
};

/// J'_K(N) at q = exp(2 pi i / N) by a meet-in-the-middle trace. Runs in
/// double, then binary128, then MPFR until the rounding bound drops below
/// tolerance * |value|.
NumericStateSum numeric_state_sum_detailed(const BraidWord& b, int n, double tolerance = 1e-12);

std::complex<double> numeric_state_sum(const BraidWord& b, int n);

}  // namespace qjones
