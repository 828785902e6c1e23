#pragma once

// Quantum determinants of right-quantum matrices, the inverse series
// 1 / det~_q(I - M) = sum_n C^n and its evaluation, and the colored Jones and
// Alexander polynomials assembled from them.

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "qjones/braid.hpp"
#include "qjones/deformed_burau.hpp"
#include "qjones/exactpoly.hpp"
#include "qjones/qweyl.hpp"

namespace qjones {

/// sum_pi (-q)^{inv pi} M_{pi1,1} M_{pi2,2} ... M_{pin,n}, factors in column order.
AlgebraElement qdet(const QuantumMatrix& m);

/// Graded pieces C_g = (-1)^{g-1} sum_{|J| = g} qdet(M_J), g = 1..dim (entry g-1).
std::vector<AlgebraElement> c_sum_graded(const QuantumMatrix& m);
/// C = sum_g C_g, so that det~_q(I - M) = 1 - C.
AlgebraElement c_sum(const QuantumMatrix& m);

enum class SeriesMode { fermionic, bosonic };

/// Sum C^n for n <= length * order (exact only after reduction at exp(2 pi i / order)).
struct RootOfUnityBound {
  int order;
};
/// Keep exactly the parts of total degree <= (dim)(N-1) in the entries of M;
/// higher-degree traces vanish under E_N for knot closures. Needs N > 0.
struct GradedCutoff {};
/// Stop after `window` consecutive zero terms E_N(C^n).
struct Adaptive {
  int window;
};
using Termination = std::variant<GradedCutoff, Adaptive, RootOfUnityBound>;

struct InverseSeriesConfig {
  SeriesMode mode = SeriesMode::fermionic;
  Termination termination = GradedCutoff{};
  /// Hard cap on n (fermionic); exceeding it throws UnterminatedError.
  int max_terms = 4096;
};

/// E_N(1 / det~_q(I - M)) over the signs carried by M.
LaurentPoly inverse_series_EN(const QuantumMatrix& m, int n, const InverseSeriesConfig& cfg = {});

/// Individual fermionic terms E_N(C^n), n = 0..count-1 (no termination logic).
std::vector<LaurentPoly> series_terms_EN(const QuantumMatrix& m, int n, int count);

/// q-exponent of the writhe prefactor q^{(N-1)(w-m+1)/2}.
std::int64_t jones_prefactor_exponent(const BraidWord& b, int n);

/// Normalized colored Jones polynomial J'_K(N) (J' = 1 for the unknot).
LaurentPoly colored_jones(const BraidWord& b, int n, const InverseSeriesConfig& cfg = {});

/// Normalizes a Laurent polynomial in z by a unit +-z^j so that it is
/// symmetric and takes the value 1 at z = 1.
LaurentPoly normalize_alexander(const LaurentPoly& delta);

/// Alexander polynomial from det E(I - rho'), normalized.
LaurentPoly alexander(const BraidWord& b);

}  // namespace qjones
