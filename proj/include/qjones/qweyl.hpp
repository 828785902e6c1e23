#pragma once

// The algebra A_eps = A_{eps_1} (x) ... (x) A_{eps_k}: one copy of the
// deformed-Burau generators a_j, b_j, c_j per crossing j, with
//   A_+ :  a b = b a,      a c = q c a,   b c = q^2 c b
//   A_- :  a b = q^2 b a,  c a = q a c,   c b = q^2 b c
// and generators of different crossings commuting. Elements are stored in the
// normal order b_j^s c_j^r a_j^d (indices ascending).

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qjones/braid.hpp"
#include "qjones/exactpoly.hpp"

namespace qjones {

/// One sign eps_j = +-1 per crossing index j (1-based).
class StrandSigns {
 public:
  StrandSigns() = default;
  explicit StrandSigns(std::vector<int> signs);
  static StrandSigns of(const BraidWord& b);

  std::size_t size() const noexcept { return signs_.size(); }
  int sign(int index) const;
  const std::vector<int>& values() const noexcept { return signs_; }

  friend bool operator==(const StrandSigns&, const StrandSigns&) = default;

 private:
  std::vector<int> signs_;
};

/// Exponents of b^s c^r a^d at one crossing index.
struct GeneratorPowers {
  int s = 0;
  int r = 0;
  int d = 0;

  bool is_identity() const { return s == 0 && r == 0 && d == 0; }
  friend auto operator<=>(const GeneratorPowers&, const GeneratorPowers&) = default;
};

/// q-exponent picked up when (b^s c^r a^d)(b^s' c^r' a^d') is brought to normal
/// order at one index of the given sign. Depends on left.r, left.d, right.s, right.r only.
std::int64_t reorder_q_exponent(int sign, const GeneratorPowers& left, const GeneratorPowers& right);

class NormalMonomial {
 public:
  struct Entry {
    int index;
    GeneratorPowers powers;
    friend auto operator<=>(const Entry&, const Entry&) = default;
  };

  NormalMonomial() = default;
  /// Entries may be unsorted; identity entries are dropped, repeated indices rejected.
  explicit NormalMonomial(std::vector<Entry> entries);
  static NormalMonomial generator(char name, int index);

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  GeneratorPowers powers(int index) const;
  bool is_identity() const noexcept { return entries_.empty(); }
  /// Total a-degree sum_j d_j.
  int ideal_degree() const;
  std::string to_string() const;

  friend auto operator<=>(const NormalMonomial&, const NormalMonomial&) = default;

 private:
  std::vector<Entry> entries_;
};

/// Normal-ordered product of two monomials: the monomial and the q-exponent.
std::pair<NormalMonomial, std::int64_t> multiply_monomials(const NormalMonomial& x, const NormalMonomial& y,
                                                           const StrandSigns& signs);

/// Finite R-linear combination of normal monomials, R = Z[q^{+-1}].
class AlgebraElement {
 public:
  using TermMap = std::map<NormalMonomial, LaurentPoly>;

  AlgebraElement() = default;
  AlgebraElement(const LaurentPoly& scalar);  // NOLINT(google-explicit-constructor): central scalars.
  AlgebraElement(long scalar) : AlgebraElement(LaurentPoly(scalar)) {}  // NOLINT
  static AlgebraElement monomial(const NormalMonomial& m, const LaurentPoly& coef = 1);
  static AlgebraElement a(int index) { return monomial(NormalMonomial::generator('a', index)); }
  static AlgebraElement b(int index) { return monomial(NormalMonomial::generator('b', index)); }
  static AlgebraElement c(int index) { return monomial(NormalMonomial::generator('c', index)); }

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  LaurentPoly coefficient(const NormalMonomial& m) const;
  /// min over monomials of the a-degree; nullopt for zero.
  std::optional<int> ideal_degree() const;
  std::string to_string() const;

  void add_term(const NormalMonomial& m, const LaurentPoly& coef);
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement operator-() const;
  /// Multiplication by a central scalar.
  AlgebraElement scaled(const LaurentPoly& c) const;
  friend AlgebraElement operator+(AlgebraElement x, const AlgebraElement& y) { return x += y; }
  friend AlgebraElement operator-(AlgebraElement x, const AlgebraElement& y) { return x -= y; }
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  TermMap terms_;
};

AlgebraElement normal_order_product(const AlgebraElement& x, const AlgebraElement& y, const StrandSigns& signs);

/// Closed form of E(b^s c^r a^d) at one index (independent of s):
///   eps=+ : q^{-rd} z^r (1 - z q^{-r})^d_{q^{-1}}
///   eps=- : z^{-r} (1 - z^{-1} q^r)^d_q
LaurentPoly evaluation_factor(int sign, int r, int d);

/// E: apply to 1, set u_j = 1 and x_j = y_j = z. Result in Z[q^{+-1}, z^{+-1}].
LaurentPoly eval_E(const NormalMonomial& m, const StrandSigns& signs);
LaurentPoly eval_E(const AlgebraElement& x, const StrandSigns& signs);
/// E followed by z -> q^{N-1}; N may be any integer.
LaurentPoly eval_EN(const AlgebraElement& x, const StrandSigns& signs, int n);

/// Independent route to E(m): realise every generator as the explicit
/// q-difference operator on Z[q^{+-1}][x_j^{+-1}, y_j^{+-1}, u_j^{+-1}], apply the
/// monomial to the constant function 1, then substitute.
LaurentPoly operator_action_oracle(const NormalMonomial& m, const StrandSigns& signs);

}  // namespace qjones
