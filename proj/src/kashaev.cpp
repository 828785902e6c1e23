#include "qjones/kashaev.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <numbers>
#include <thread>

#include "qjones/deformed_burau.hpp"
#include "qjones/error.hpp"
#include "qjones/mcmahon.hpp"
#include "qjones/verma_oracle.hpp"
#include "series_engine.hpp"

namespace qjones {

namespace {

std::int64_t kashaev_prefactor(const BraidWord& b) {
  const std::int64_t twice = b.strands() - b.writhe() - 1;
  if (twice % 2 != 0) throw NotAKnotError("m - w - 1 is odd; the closure is not a knot");
  return twice / 2;
}

std::vector<detail::FactorTerm> series_factor(const BraidWord& b) {
  const QuantumMatrix m = rho_prime(rho(b)).scaled(LaurentPoly::q_power(1));
  std::vector<detail::FactorTerm> out;
  detail::append_terms(out, c_sum(m), 0);
  return out;
}

}  // namespace

LaurentPoly HabiroTruncation::partial_sum() const {
  LaurentPoly out;
  for (const auto& t : terms) out += t;
  return out.times_monomial(QExponent::q(prefactor_exponent));
}

HabiroTruncation kashaev_series(const BraidWord& b, int depth) {
  require_knot(b);
  if (depth < 0) throw DomainError("depth must be nonnegative");
  HabiroTruncation out;
  out.prefactor_exponent = kashaev_prefactor(b);
  out.terms.reserve(static_cast<std::size_t>(depth) + 1);
  out.terms.emplace_back(1);
  if (b.strands() == 1) {
    out.terms.resize(static_cast<std::size_t>(depth) + 1);
    return out;
  }
  const detail::GenericRing ring(0);
  detail::PowerSeries<detail::GenericRing> series(ring, StrandSigns::of(b).values(), series_factor(b), std::nullopt);
  for (int n = 1; n <= depth; ++n) {
    series.step();
    out.terms.push_back(series.evaluate());
  }
  return out;
}

LaurentPoly q_factorial_product(int j) {
  LaurentPoly out = 1;
  for (int i = 1; i <= j; ++i) out *= LaurentPoly(1) - LaurentPoly::q_power(i);
  return out;
}

bool habiro_divisible(const HabiroTruncation& s, int k) {
  if (k <= 0) throw DomainError("crossing count must be positive");
  for (std::size_t n = 0; n < s.terms.size(); ++n) {
    if (s.terms[n].is_zero()) continue;
    if (!divides(q_factorial_product(static_cast<int>(n) / k), s.terms[n])) return false;
  }
  return true;
}

bool habiro_divisible(const BraidWord& b, int max_n) {
  require_knot(b);
  const int k = static_cast<int>(b.length());
  if (k == 0 || max_n < k) return true;
  const int top = max_n / k;
  LaurentPoly modulus = q_factorial_product(top);
  std::vector<mpz_class> coeffs(static_cast<std::size_t>(modulus.max_exponent().q4 / 4) + 1);
  for (const auto& t : modulus.terms()) coeffs[static_cast<std::size_t>(t.exp.q4 / 4)] = t.coef;
  const detail::ModularRing ring(std::move(coeffs));
  detail::PowerSeries<detail::ModularRing> series(ring, StrandSigns::of(b).values(), series_factor(b), std::nullopt);
  for (int n = 1; n <= max_n; ++n) {
    series.step();
    const int j = n / k;
    if (j == 0) continue;
    const LaurentPoly rem = ring.finish(series.evaluate());
    if (!rem.is_zero() && !divides(q_factorial_product(j), rem)) return false;
  }
  return true;
}

KashaevValue kashaev_value(const BraidWord& b, int n, KashaevMode mode) {
  require_knot(b);
  if (n < 1) throw DomainError("Kashaev invariant needs N >= 1");
  KashaevValue out;
  out.order = n;
  if (mode == KashaevMode::floating) {
    out.approx = numeric_state_sum(b, n);
    return out;
  }
  const std::int64_t pre = kashaev_prefactor(b);
  if (b.strands() == 1) {
    out.exact = CyclotomicInt::q_power(n, pre);
  } else {
    const detail::CyclicRing ring(n);
    detail::PowerSeries<detail::CyclicRing> series(ring, StrandSigns::of(b).values(), series_factor(b), std::nullopt);
    auto total = ring.one();
    // E_0(C^j) vanishes at zeta_N for j > k N.
    const std::size_t bound = b.length() * static_cast<std::size_t>(n);
    for (std::size_t j = 1; j <= bound && !series.exhausted(); ++j) {
      series.step();
      detail::CyclicRing::add(total, series.evaluate());
    }
    out.exact = ring.finish(total) * CyclotomicInt::q_power(n, pre);
  }
  out.approx = embed_complex(*out.exact);
  return out;
}

KashaevValue kz_series(int n) {
  if (n < 1) throw DomainError("N must be positive");
  CyclotomicInt sum(n, 1);
  CyclotomicInt prod(n, 1);
  for (int j = 1; j < n; ++j) {
    prod *= CyclotomicInt(n, 1) - CyclotomicInt::q_power(n, j);
    sum += prod;
  }
  KashaevValue out;
  out.order = n;
  out.exact = sum * CyclotomicInt::q_power(n, 1);
  out.approx = embed_complex(*out.exact);
  return out;
}

std::vector<RatePoint> volume_rate(const BraidWord& b, const std::vector<int>& orders, unsigned threads) {
  require_knot(b);
  for (int n : orders)
    if (n < 2) throw DomainError("volume rate needs N >= 2");
  if (threads == 0) {
    if (const char* env = std::getenv("QJONES_THREADS")) threads = static_cast<unsigned>(std::max(1, std::atoi(env)));
  }
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, orders.size())));

  std::vector<RatePoint> out(orders.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < orders.size();) {
      try {
        const int n = orders[i];
        const double a = std::abs(numeric_state_sum(b, n));
        out[i] = {n, a, a > 0 ? std::optional<double>(2 * std::numbers::pi * std::log(a) / n) : std::nullopt};
      } catch (...) {
        const std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

double mahler_measure(const LaurentPoly& delta) {
  if (delta.is_zero()) throw DomainError("Mahler measure of zero");
  std::int64_t lo = delta.terms().front().exp.z;
  std::int64_t hi = lo;
  for (const auto& t : delta.terms()) {
    if (t.exp.q4 != 0) throw DomainError("Mahler measure needs a polynomial in z alone");
    lo = std::min(lo, t.exp.z);
    hi = std::max(hi, t.exp.z);
  }
  const auto deg = static_cast<Eigen::Index>(hi - lo);
  std::vector<double> a(static_cast<std::size_t>(deg) + 1, 0.0);  // a[i] multiplies z^i
  for (const auto& t : delta.terms()) a[static_cast<std::size_t>(t.exp.z - lo)] = t.coef.get_d();
  const double lead = a.back();
  if (deg == 0) return std::abs(lead);

  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
  for (Eigen::Index i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < deg; ++i) companion(i, deg - 1) = -a[static_cast<std::size_t>(i)] / lead;
  const Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  if (solver.info() != Eigen::Success) throw Error("Mahler measure: eigenvalue solver did not converge");

  using cl = std::complex<long double>;
  auto eval = [&](cl z, cl& dp, long double& scale) {
    cl p = 0;
    dp = 0;
    scale = 0;
    for (std::size_t i = a.size(); i-- > 0;) {
      dp = dp * z + p;
      p = p * z + static_cast<long double>(a[i]);
      scale = scale * std::abs(z) + std::abs(static_cast<long double>(a[i]));
    }
    return p;
  };
  double measure = std::abs(lead);
  for (Eigen::Index i = 0; i < deg; ++i) {
    cl z(solver.eigenvalues()[i].real(), solver.eigenvalues()[i].imag());
    cl dp;
    long double scale = 0;
    for (int it = 0; it < 8; ++it) {
      const cl p = eval(z, dp, scale);
      if (std::abs(dp) == 0) break;
      const cl nz = z - p / dp;
      if (!std::isfinite(std::abs(nz))) break;
      z = nz;
    }
    const cl p = eval(z, dp, scale);
    if (std::abs(p) > 1e-9L * scale) throw Error("Mahler measure: root residual above 1e-9");
    measure *= std::max(1.0, static_cast<double>(std::abs(z)));
  }
  return measure;
}

}  // namespace qjones
