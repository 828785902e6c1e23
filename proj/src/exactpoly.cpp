#include "qjones/exactpoly.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <utility>

#include "qjones/error.hpp"

namespace qjones {

std::int64_t QExponent::q_power() const {
  if (!is_integral()) {
    throw DomainError("fractional power of q where an integer power was required");
  }
  return quarters / 4;
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) terms_.push_back({{}, mpz_class(constant)});
}

LaurentPoly::LaurentPoly(const mpz_class& constant) {
  if (constant != 0) terms_.push_back({{}, constant});
}

LaurentPoly LaurentPoly::monomial(const mpz_class& coef, QExponent q, std::int64_t z) {
  LaurentPoly p;
  if (coef != 0) p.terms_.push_back({{q.quarters, z}, coef});
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
  LaurentPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exp == t.exp) {
      p.terms_.back().coef += t.coef;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coef == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coef == 0) p.terms_.pop_back();
  return p;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == Exponent{});
}

bool LaurentPoly::has_z() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.exp.z != 0; });
}

bool LaurentPoly::is_q_integral() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.exp.q4 % 4 == 0; });
}

mpz_class LaurentPoly::coefficient(QExponent q, std::int64_t z) const {
  const Exponent key{q.quarters, z};
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const Term& t, const Exponent& e) { return t.exp < e; });
  if (it != terms_.end() && it->exp == key) return it->coef;
  return 0;
}

Exponent LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw DomainError("min_exponent of the zero polynomial");
  return terms_.front().exp;
}

Exponent LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw DomainError("max_exponent of the zero polynomial");
  return terms_.back().exp;
}

LaurentPoly LaurentPoly::times_monomial(QExponent q, std::int64_t z) const {
  LaurentPoly out = *this;
  for (auto& t : out.terms_) {
    t.exp.q4 += q.quarters;
    t.exp.z += z;
  }
  return out;
}

LaurentPoly LaurentPoly::substitute_z(QExponent value) const {
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) terms.push_back({{t.exp.q4 + t.exp.z * value.quarters, 0}, t.coef});
  return from_terms(std::move(terms));
}

LaurentPoly LaurentPoly::invert_q() const {
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) terms.push_back({{-t.exp.q4, t.exp.z}, t.coef});
  return from_terms(std::move(terms));
}

LaurentPoly LaurentPoly::invert_z() const {
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) terms.push_back({{t.exp.q4, -t.exp.z}, t.coef});
  return from_terms(std::move(terms));
}

std::complex<double> LaurentPoly::evaluate(std::complex<double> q, std::complex<double> z) const {
  std::complex<double> sum = 0.0;
  for (const auto& t : terms_) {
    if (t.exp.q4 % 4 != 0) throw DomainError("evaluate() needs integral q-powers; use evaluate_on_circle");
    const auto qe = static_cast<int>(t.exp.q4 / 4);
    const auto ze = static_cast<int>(t.exp.z);
    sum += t.coef.get_d() * std::pow(q, qe) * std::pow(z, ze);
  }
  return sum;
}

std::complex<double> LaurentPoly::evaluate_on_circle(double theta, std::complex<double> z) const {
  std::complex<double> sum = 0.0;
  for (const auto& t : terms_) {
    const double angle = theta * static_cast<double>(t.exp.q4) / 4.0;
    sum += t.coef.get_d() * std::polar(1.0, angle) * std::pow(z, static_cast<int>(t.exp.z));
  }
  return sum;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& t : out.terms_) t.coef = -t.coef;
  return out;
}

void LaurentPoly::add_scaled(const LaurentPoly& o, int sign) {
  if (o.terms_.empty()) return;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->exp < b->exp)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->exp < a->exp) {
      merged.push_back({b->exp, sign > 0 ? b->coef : mpz_class(-b->coef)});
      ++b;
    } else {
      mpz_class c = sign > 0 ? mpz_class(a->coef + b->coef) : mpz_class(a->coef - b->coef);
      if (c != 0) merged.push_back({a->exp, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  add_scaled(o, +1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  add_scaled(o, -1);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return {};
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    const auto& mono = a.terms_.size() == 1 ? a.terms_[0] : b.terms_[0];
    const auto& other = a.terms_.size() == 1 ? b : a;
    LaurentPoly out;
    out.terms_.reserve(other.terms_.size());
    for (const auto& t : other.terms_) out.terms_.push_back({t.exp + mono.exp, t.coef * mono.coef});
    return out;
  }
  std::vector<LaurentPoly::Term> prods;
  prods.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) prods.push_back({s.exp + t.exp, s.coef * t.coef});
  }
  return LaurentPoly::from_terms(std::move(prods));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

// ---------------------------------------------------------------------------
// Division

std::optional<LaurentPoly> divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw DomainError("division by the zero polynomial");
  if (num.is_zero()) return LaurentPoly{};

  // Per-variable degree windows the quotient must live in (Z[q^{1/4}, z] is a domain).
  auto range = [](const LaurentPoly& p) {
    Exponent lo = p.terms().front().exp, hi = lo;
    for (const auto& t : p.terms()) {
      lo.q4 = std::min(lo.q4, t.exp.q4);
      hi.q4 = std::max(hi.q4, t.exp.q4);
      lo.z = std::min(lo.z, t.exp.z);
      hi.z = std::max(hi.z, t.exp.z);
    }
    return std::pair{lo, hi};
  };
  const auto [num_lo, num_hi] = range(num);
  const auto [den_lo, den_hi] = range(den);
  const Exponent q_lo = num_lo - den_lo;
  const Exponent q_hi = num_hi - den_hi;
  if (q_lo.q4 > q_hi.q4 || q_lo.z > q_hi.z) return std::nullopt;

  const auto& lead = den.terms().back();
  LaurentPoly rem = num;
  std::vector<LaurentPoly::Term> quotient;
  while (!rem.is_zero()) {
    const auto& top = rem.terms().back();
    const Exponent e = top.exp - lead.exp;
    if (e.q4 < q_lo.q4 || e.q4 > q_hi.q4 || e.z < q_lo.z || e.z > q_hi.z) return std::nullopt;
    if (!mpz_divisible_p(top.coef.get_mpz_t(), lead.coef.get_mpz_t())) return std::nullopt;
    mpz_class c = top.coef / lead.coef;
    const auto step = LaurentPoly::monomial(c, QExponent{e.q4}, e.z);
    rem -= den * step;
    quotient.push_back({e, std::move(c)});
  }
  return LaurentPoly::from_terms(std::move(quotient));
}

bool divides(const LaurentPoly& den, const LaurentPoly& num) { return divide_exact(num, den).has_value(); }

// ---------------------------------------------------------------------------
// q-analogues

LaurentPoly q_pochhammer(QExponent base, int step, int d, std::int64_t z_degree) {
  if (step != 1 && step != -1) throw DomainError("q_pochhammer step must be +1 or -1");
  if (d < 0) throw DomainError("q_pochhammer length must be nonnegative");
  LaurentPoly result = 1;
  for (int i = 0; i < d; ++i) {
    const QExponent e = base + QExponent::q(static_cast<std::int64_t>(step) * i);
    result *= LaurentPoly(1) - LaurentPoly::monomial(1, e, z_degree);
  }
  return result;
}

LaurentPoly q_integer(int n, int sign) {
  if (n < 0) throw DomainError("q_integer expects n >= 0");
  LaurentPoly result;
  for (int i = 0; i < n; ++i) result += LaurentPoly::q_power(-static_cast<std::int64_t>(sign) * i);
  return result;
}

LaurentPoly q_int_binom(int n, int l, int sign) {
  if (n < 0 || l < 0 || l > n) return {};
  // Gaussian binomial in x = q^{-sign}: G(n,l) = G(n-1,l-1) + x^l G(n-1,l).
  std::vector<LaurentPoly> row(static_cast<std::size_t>(l) + 1);
  row[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, l); j >= 1; --j) {
      row[j] = row[j - 1] + row[j].times_monomial(QExponent::q(-static_cast<std::int64_t>(sign) * j));
    }
  }
  return row[l];
}

// ---------------------------------------------------------------------------
// Cyclotomic arithmetic

namespace {

std::vector<mpz_class> poly_divide_exact_int(std::vector<mpz_class> num, const std::vector<mpz_class>& den) {
  // den monic; returns quotient.
  const std::size_t dd = den.size() - 1;
  std::vector<mpz_class> quot(num.size() - dd);
  for (std::size_t i = num.size(); i-- > dd;) {
    const mpz_class c = num[i];
    quot[i - dd] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  return quot;
}

}  // namespace

int euler_phi(int n) {
  if (n < 1) throw DomainError("euler_phi expects n >= 1");
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

const std::vector<mpz_class>& cyclotomic_polynomial(int n) {
  if (n < 1) throw DomainError("cyclotomic polynomial order must be positive");
  static std::mutex mutex;
  static std::map<int, std::vector<mpz_class>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  std::vector<mpz_class> poly(static_cast<std::size_t>(n) + 1);
  poly[0] = -1;
  poly[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) poly = poly_divide_exact_int(std::move(poly), cyclotomic_polynomial(d));
  }
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(poly)).first->second;
}

CyclotomicInt::CyclotomicInt(int order) : order_(order) {
  if (order < 1) throw DomainError("root-of-unity order must be positive");
  coeffs_.assign(static_cast<std::size_t>(euler_phi(order)), 0);
}

CyclotomicInt::CyclotomicInt(int order, const mpz_class& constant) : CyclotomicInt(order) {
  coeffs_[0] = constant;
}

CyclotomicInt CyclotomicInt::from_coefficients(int order, const std::vector<mpz_class>& coeffs) {
  CyclotomicInt c(order);
  c.reduce(coeffs);
  return c;
}

CyclotomicInt CyclotomicInt::q_power(int order, std::int64_t e) {
  const std::int64_t r = ((e % order) + order) % order;
  std::vector<mpz_class> raw(static_cast<std::size_t>(r) + 1);
  raw[r] = 1;
  return from_coefficients(order, raw);
}

void CyclotomicInt::reduce(std::vector<mpz_class> raw) {
  const auto& phi = cyclotomic_polynomial(order_);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = raw.size(); i-- > deg;) {
    if (raw[i] == 0) continue;
    const mpz_class c = raw[i];
    for (std::size_t j = 0; j <= deg; ++j) raw[i - deg + j] -= c * phi[j];
  }
  raw.resize(deg);
  coeffs_ = std::move(raw);
}

bool CyclotomicInt::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const mpz_class& c) { return c == 0; });
}

CyclotomicInt CyclotomicInt::operator-() const {
  CyclotomicInt out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& o) {
  if (o.order_ != order_) throw DomainError("mixing cyclotomic rings of different order");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CyclotomicInt& CyclotomicInt::operator-=(const CyclotomicInt& o) {
  if (o.order_ != order_) throw DomainError("mixing cyclotomic rings of different order");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b) {
  if (a.order_ != b.order_) throw DomainError("mixing cyclotomic rings of different order");
  std::vector<mpz_class> raw(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) raw[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  CyclotomicInt out(a.order_);
  out.reduce(std::move(raw));
  return out;
}

CyclotomicInt& CyclotomicInt::operator*=(const CyclotomicInt& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly CyclotomicInt::to_poly() const {
  std::vector<LaurentPoly::Term> terms;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) terms.push_back({{4 * static_cast<std::int64_t>(i), 0}, coeffs_[i]});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

CyclotomicInt cyclotomic_reduce(const LaurentPoly& p, int n) {
  if (n < 1) throw DomainError("root-of-unity order must be positive");
  std::vector<mpz_class> raw(static_cast<std::size_t>(n));
  for (const auto& t : p.terms()) {
    if (t.exp.z != 0) throw DomainError("cyclotomic_reduce: polynomial still depends on z");
    if (t.exp.q4 % 4 != 0) throw DomainError("cyclotomic_reduce: fractional power of q");
    const std::int64_t e = t.exp.q4 / 4;
    raw[static_cast<std::size_t>(((e % n) + n) % n)] += t.coef;
  }
  return CyclotomicInt::from_coefficients(n, raw);
}

std::complex<double> embed_complex(const CyclotomicInt& c) {
  const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  long double re = 0, im = 0;
  const auto& coeffs = c.coefficients();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    const long double angle = two_pi * static_cast<long double>(i) / c.order();
    const long double v = coeffs[i].get_d();
    re += v * std::cos(angle);
    im += v * std::sin(angle);
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

}  // namespace qjones
