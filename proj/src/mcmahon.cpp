#include "qjones/mcmahon.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "qjones/error.hpp"
#include "series_engine.hpp"

namespace qjones {

AlgebraElement qdet(const QuantumMatrix& m) {
  const int n = m.dim();
  if (n == 0) return AlgebraElement(1);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  AlgebraElement out;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    AlgebraElement term(1);
    for (int col = 1; col <= n && !term.is_zero(); ++col) {
      const auto& entry = m.at(perm[col - 1], col);
      term = entry.is_zero() ? AlgebraElement{} : normal_order_product(term, entry, m.signs());
    }
    if (term.is_zero()) continue;
    const LaurentPoly weight = LaurentPoly::q_power(inversions) * LaurentPoly(inversions % 2 ? -1 : 1);
    out += term.scaled(weight);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<AlgebraElement> c_sum_graded(const QuantumMatrix& m) {
  const int n = m.dim();
  if (n > 20) throw DomainError("c_sum: dimension too large");
  std::vector<AlgebraElement> graded(static_cast<std::size_t>(n));
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (mask & (1U << i)) idx.push_back(i + 1);
    const int g = std::popcount(mask);
    AlgebraElement d = qdet(m.principal(idx));
    if (g % 2 == 0) d = -d;
    graded[static_cast<std::size_t>(g - 1)] += d;
  }
  return graded;
}

AlgebraElement c_sum(const QuantumMatrix& m) {
  AlgebraElement out;
  for (const auto& g : c_sum_graded(m)) out += g;
  return out;
}

namespace {

std::vector<detail::FactorTerm> graded_factor(const std::vector<AlgebraElement>& graded) {
  std::vector<detail::FactorTerm> out;
  for (std::size_t g = 0; g < graded.size(); ++g) detail::append_terms(out, graded[g], static_cast<int>(g) + 1);
  return out;
}

void require_in_ideal(const std::vector<AlgebraElement>& graded) {
  for (const auto& g : graded) {
    const auto deg = g.ideal_degree();
    if (deg && *deg < 1) throw DomainError("C is not in the ideal generated by the a_j; the series need not terminate");
  }
}

LaurentPoly fermionic(const QuantumMatrix& m, int n, const InverseSeriesConfig& cfg) {
  const auto graded = c_sum_graded(m);
  require_in_ideal(graded);
  const detail::GenericRing ring(n);
  const auto& signs = m.signs().values();
  const int k = static_cast<int>(signs.size());

  return std::visit(
      [&](const auto& t) -> LaurentPoly {
        using T = std::decay_t<decltype(t)>;
        std::optional<int> cap;
        int max_steps = cfg.max_terms;
        if constexpr (std::is_same_v<T, GradedCutoff>) {
          if (n <= 0) throw DomainError("graded cutoff needs N > 0");
          cap = m.dim() * (n - 1);
        } else if constexpr (std::is_same_v<T, Adaptive>) {
          if (t.window < std::max(k, m.dim() + 1)) throw DomainError("adaptive window must be at least max(k, m)");
        } else {
          if (t.order < 1) throw DomainError("root-of-unity order must be positive");
          max_steps = k * t.order;
        }
        detail::PowerSeries<detail::GenericRing> series(ring, signs, graded_factor(graded), cap);
        LaurentPoly total = 1;
        int zeros = 0;
        for (int step = 1;; ++step) {
          if (step > max_steps) {
            if constexpr (std::is_same_v<T, RootOfUnityBound>) break;
            throw UnterminatedError("inverse series did not terminate within " + std::to_string(max_steps) + " terms");
          }
          series.step();
          if (series.exhausted()) break;
          const LaurentPoly term = series.evaluate();
          if (term.is_zero()) {
            ++zeros;
          } else {
            zeros = 0;
            total += term;
          }
          if constexpr (std::is_same_v<T, Adaptive>) {
            if (zeros >= t.window) break;
          }
        }
        return total;
      },
      cfg.termination);
}

// Coefficient of z^n in Z_1^{n_1} ... Z_d^{n_d}, Z_i = sum_j M_ij z_j, with
// z_i z_j = q z_j z_i for i < j, summed over n in [0, N-1]^d.
LaurentPoly bosonic(const QuantumMatrix& m, int n) {
  if (n <= 0) throw DomainError("bosonic mode needs N > 0");
  const int dim = m.dim();
  if (dim == 0) return 1;
  const detail::GenericRing ring(n);
  std::vector<std::vector<std::vector<detail::FactorTerm>>> entry(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) {
    entry[i].resize(static_cast<std::size_t>(dim));
    for (int j = 0; j < dim; ++j) detail::append_terms(entry[i][j], m.at(i + 1, j + 1), 0);
  }
  detail::MonomialState<detail::GenericRing> state(ring, m.signs().values(), dim);
  const std::size_t off = state.extra_offset();

  std::vector<int> tuple(static_cast<std::size_t>(dim), 0);
  LaurentPoly total;
  for (;;) {
    state.set_unit();
    for (int i = 0; i < dim && !state.empty(); ++i) {
      for (int rep = 0; rep < tuple[i]; ++rep) {
        detail::MonomialState<detail::GenericRing>::Map next;
        for (const auto& [key, coef] : state.terms()) {
          std::int64_t later = 0;
          for (int j = dim - 1; j >= 0; --j) {
            if (key[off + j] < tuple[j]) {
              for (const auto& f : entry[i][j]) {
                detail::Key k = key;
                std::int64_t e = 0;
                if (!state.multiply_key(k, f, e)) continue;
                ++k[off + j];
                state.accumulate(next, std::move(k), (coef * f.coef).times_monomial(QExponent::q(e - later)));
              }
            }
            later += key[off + j];
          }
        }
        state.terms() = std::move(next);
      }
    }
    total += state.evaluate();

    int pos = 0;
    while (pos < dim && ++tuple[pos] == n) tuple[pos++] = 0;
    if (pos == dim) break;
  }
  return total;
}

}  // namespace

LaurentPoly inverse_series_EN(const QuantumMatrix& m, int n, const InverseSeriesConfig& cfg) {
  if (cfg.mode == SeriesMode::bosonic) return bosonic(m, n);
  return fermionic(m, n, cfg);
}

std::vector<LaurentPoly> series_terms_EN(const QuantumMatrix& m, int n, int count) {
  const detail::GenericRing ring(n);
  std::vector<detail::FactorTerm> factor;
  detail::append_terms(factor, c_sum(m), 0);
  detail::PowerSeries<detail::GenericRing> series(ring, m.signs().values(), std::move(factor), std::nullopt);
  std::vector<LaurentPoly> out;
  for (int i = 0; i < count; ++i) {
    if (i > 0) series.step();
    out.push_back(series.evaluate());
  }
  return out;
}

std::int64_t jones_prefactor_exponent(const BraidWord& b, int n) {
  const std::int64_t twice = std::int64_t{n - 1} * (b.writhe() - b.strands() + 1);
  if (twice % 2 != 0) throw DomainError("w - m + 1 is odd; the closure is not a knot");
  return twice / 2;
}

LaurentPoly colored_jones(const BraidWord& b, int n, const InverseSeriesConfig& cfg) {
  require_knot(b);
  if (n < 1) throw DomainError("colored Jones needs N >= 1");
  if (b.strands() == 1) return 1;
  const QuantumMatrix m = rho_prime(rho(b)).scaled(LaurentPoly::q_power(1));
  LaurentPoly j = inverse_series_EN(m, n, cfg).times_monomial(QExponent::q(jones_prefactor_exponent(b, n)));
  if (!j.is_q_integral() || j.has_z()) throw Error("colored Jones landed off the integer q-lattice");
  return j;
}

LaurentPoly normalize_alexander(const LaurentPoly& delta) {
  if (delta.is_zero()) throw DomainError("zero Alexander polynomial");
  if (!delta.is_constant() && delta.min_exponent().q4 != delta.max_exponent().q4) {
    throw DomainError("Alexander polynomial must not depend on q");
  }
  std::int64_t lo = delta.terms().front().exp.z;
  std::int64_t hi = lo;
  for (const auto& t : delta.terms()) {
    lo = std::min(lo, t.exp.z);
    hi = std::max(hi, t.exp.z);
  }
  if ((hi + lo) % 2 != 0) throw DomainError("Alexander polynomial has odd span");
  const std::int64_t q4 = delta.terms().front().exp.q4;
  LaurentPoly out = delta.times_monomial(QExponent{-q4}, -(hi + lo) / 2);
  mpz_class at_one = 0;
  for (const auto& t : out.terms()) at_one += t.coef;
  if (at_one == -1) {
    out = -out;
  } else if (at_one != 1) {
    throw DomainError("Alexander polynomial does not evaluate to +-1 at z = 1");
  }
  if (!(out == out.invert_z())) throw DomainError("Alexander polynomial is not symmetric");
  return out;
}

LaurentPoly alexander(const BraidWord& b) {
  require_knot(b);
  if (b.strands() == 1) return 1;
  const LaurentMatrix e = classical_specialization(rho_prime(rho(b)));
  return normalize_alexander((LaurentMatrix::identity(e.rows()) - e).determinant());
}

}  // namespace qjones
