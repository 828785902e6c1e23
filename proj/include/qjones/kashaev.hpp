#pragma once

// Kashaev invariants <K>_N as values of E_0 at q = exp(2 pi i / N), the
// truncated Habiro-ring series behind them, and growth-rate diagnostics.

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "qjones/braid.hpp"
#include "qjones/exactpoly.hpp"

namespace qjones {

/// Terms t_n = E_0(C^n), n = 0..depth, of q^{(m-w-1)/2} E_0(1 / det~_q(I - q rho')).
struct HabiroTruncation {
  std::vector<LaurentPoly> terms;
  std::int64_t prefactor_exponent = 0;

  /// q^prefactor * sum_n t_n as a Laurent polynomial (the partial sum).
  LaurentPoly partial_sum() const;
};

HabiroTruncation kashaev_series(const BraidWord& b, int depth);

/// (1 - q)(1 - q^2)...(1 - q^j).
LaurentPoly q_factorial_product(int j);
/// Whether t_n is divisible by (1 - q)...(1 - q^{floor(n / k)}) in Z[q^{+-1}].
bool habiro_divisible(const HabiroTruncation& s, int k);
/// Same check for n = 0..max_n with k the crossing count, carried out in
/// Z[q^{+-1}] modulo (1 - q)...(1 - q^{floor(max_n / k)}), which keeps the
/// coefficients bounded; the remainders are exact.
bool habiro_divisible(const BraidWord& b, int max_n);

enum class KashaevMode { exact, floating };

struct KashaevValue {
  int order = 1;
  /// Present in exact mode.
  std::optional<CyclotomicInt> exact;
  std::complex<double> approx;
};

/// <K>_N. Exact mode sums E_0(C^n), n <= k N, in Z[q]/(q^N - 1) and reduces
/// mod Phi_N; float mode uses the complex state sum.
KashaevValue kashaev_value(const BraidWord& b, int n, KashaevMode mode = KashaevMode::exact);

/// q sum_{n < N} (1 - q)(1 - q^2)...(1 - q^n) at q = exp(2 pi i / N).
KashaevValue kz_series(int n);

struct RatePoint {
  int order;
  double abs_value;
  /// 2 pi ln|<K>_N| / N; empty when <K>_N = 0.
  std::optional<double> rate;
};

/// Float-mode rates for each N (all N >= 2), in input order. Evaluations run on
/// `threads` workers; 0 means QJONES_THREADS or the hardware concurrency.
std::vector<RatePoint> volume_rate(const BraidWord& b, const std::vector<int>& orders, unsigned threads = 0);

/// |a_top| prod max(1, |root|) for the polynomial in z (no q allowed).
double mahler_measure(const LaurentPoly& delta);

}  // namespace qjones
