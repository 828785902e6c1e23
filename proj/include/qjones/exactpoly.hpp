#pragma once

// Exact Laurent polynomials in q (on a quarter-integer exponent lattice) and
// an auxiliary variable z, plus arithmetic in Z[q]/Phi_N.

#include <gmpxx.h>

#include <compare>
#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

namespace qjones {

/// Power of q measured in quarters: q <-> 4, v = q^{1/2} <-> 2, v^{1/2} <-> 1.
struct QExponent {
  std::int64_t quarters = 0;

  static constexpr QExponent q(std::int64_t k) { return {4 * k}; }
  static constexpr QExponent v(std::int64_t k) { return {2 * k}; }

  constexpr bool is_integral() const { return quarters % 4 == 0; }
  /// Integer power of q; throws DomainError if this is a fractional power.
  std::int64_t q_power() const;

  constexpr QExponent operator-() const { return {-quarters}; }
  constexpr QExponent& operator+=(QExponent o) {
    quarters += o.quarters;
    return *this;
  }
  friend constexpr QExponent operator+(QExponent a, QExponent b) { return {a.quarters + b.quarters}; }
  friend constexpr QExponent operator-(QExponent a, QExponent b) { return {a.quarters - b.quarters}; }
  friend constexpr auto operator<=>(QExponent, QExponent) = default;
};

/// Exponent of a monomial q^{q4/4} z^{z}.
struct Exponent {
  std::int64_t q4 = 0;
  std::int64_t z = 0;

  friend constexpr Exponent operator+(Exponent a, Exponent b) { return {a.q4 + b.q4, a.z + b.z}; }
  friend constexpr Exponent operator-(Exponent a, Exponent b) { return {a.q4 - b.q4, a.z - b.z}; }
  friend constexpr auto operator<=>(const Exponent&, const Exponent&) = default;
};

/// Sparse Laurent polynomial with arbitrary-precision integer coefficients in
/// q^{1/4} and z. Terms are kept sorted by exponent with no zero coefficients,
/// so structural equality is ring equality.
class LaurentPoly {
 public:
  struct Term {
    Exponent exp;
    mpz_class coef;

    friend bool operator==(const Term&, const Term&) = default;
  };

  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT(google-explicit-constructor): integers embed.
  explicit LaurentPoly(const mpz_class& constant);

  static LaurentPoly monomial(const mpz_class& coef, QExponent q, std::int64_t z = 0);
  static LaurentPoly q_power(std::int64_t k) { return monomial(1, QExponent::q(k)); }
  static LaurentPoly z_power(std::int64_t k) { return monomial(1, QExponent{}, k); }
  /// Builds a polynomial from unsorted terms; duplicates are combined.
  static LaurentPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  bool has_z() const;
  /// True when every q-exponent is an integer power of q.
  bool is_q_integral() const;

  mpz_class coefficient(QExponent q, std::int64_t z = 0) const;
  /// Lexicographically smallest / largest exponent; requires a nonzero polynomial.
  Exponent min_exponent() const;
  Exponent max_exponent() const;

  LaurentPoly times_monomial(QExponent q, std::int64_t z = 0) const;
  /// z -> q^{value}.
  LaurentPoly substitute_z(QExponent value) const;
  /// q -> q^{-1}.
  LaurentPoly invert_q() const;
  /// z -> z^{-1}.
  LaurentPoly invert_z() const;

  /// Numeric value for integral q-exponents.
  std::complex<double> evaluate(std::complex<double> q, std::complex<double> z = 1.0) const;
  /// Value at q = exp(i theta), resolving fractional powers on the principal branch.
  std::complex<double> evaluate_on_circle(double theta, std::complex<double> z = 1.0) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void add_scaled(const LaurentPoly& o, int sign);

  std::vector<Term> terms_;
};

/// Exact quotient num/den in the Laurent ring, or nullopt if den does not divide num.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& num, const LaurentPoly& den);
bool divides(const LaurentPoly& den, const LaurentPoly& num);

/// prod_{i=0}^{d-1} (1 - z^{z_degree} q^{base + step*i}), step in {+1,-1} (whole powers of q).
LaurentPoly q_pochhammer(QExponent base, int step, int d, std::int64_t z_degree);

/// (n)_{q^sign} = (1 - q^{-sign n}) / (1 - q^{-sign}).
LaurentPoly q_integer(int n, int sign);

/// prod_{i=1}^{l} (n-i+1)_{q^sign} / (l-i+1)_{q^sign}; zero when l > n.
LaurentPoly q_int_binom(int n, int l, int sign);

/// Integer coefficients of the N-th cyclotomic polynomial, constant term first.
const std::vector<mpz_class>& cyclotomic_polynomial(int n);
int euler_phi(int n);

/// Element of Z[q]/(Phi_N), stored as the residue of degree < phi(N).
class CyclotomicInt {
 public:
  explicit CyclotomicInt(int order);
  CyclotomicInt(int order, const mpz_class& constant);
  /// Reduces an arbitrary coefficient vector (constant term first).
  static CyclotomicInt from_coefficients(int order, const std::vector<mpz_class>& coeffs);
  /// q^e reduced mod Phi_N, any integer e.
  static CyclotomicInt q_power(int order, std::int64_t e);

  int order() const noexcept { return order_; }
  const std::vector<mpz_class>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const;

  CyclotomicInt operator-() const;
  CyclotomicInt& operator+=(const CyclotomicInt& o);
  CyclotomicInt& operator-=(const CyclotomicInt& o);
  CyclotomicInt& operator*=(const CyclotomicInt& o);
  friend CyclotomicInt operator+(CyclotomicInt a, const CyclotomicInt& b) { return a += b; }
  friend CyclotomicInt operator-(CyclotomicInt a, const CyclotomicInt& b) { return a -= b; }
  friend CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b);
  friend bool operator==(const CyclotomicInt&, const CyclotomicInt&) = default;

  /// The residue as a polynomial in q.
  LaurentPoly to_poly() const;

 private:
  void reduce(std::vector<mpz_class> raw);

  int order_;
  std::vector<mpz_class> coeffs_;
};

/// Exact image of p under q -> exp(2 pi i / N). p must have no z and integral q-powers.
CyclotomicInt cyclotomic_reduce(const LaurentPoly& p, int n);

/// Value at q = exp(2 pi i / N).
std::complex<double> embed_complex(const CyclotomicInt& c);

}  // namespace qjones
