#pragma once

// Artin action of braids on the free group F_m, Fox derivatives in Z[F_m],
// the Jacobian psi(beta) and its abelianization.

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qjones/braid.hpp"
#include "qjones/exactpoly.hpp"
#include "qjones/laurent_matrix.hpp"

namespace qjones {

/// z_index^exp, index 1-based, exp = +-1.
struct FreeLetter {
  int index = 1;
  int exp = 1;

  friend auto operator<=>(const FreeLetter&, const FreeLetter&) = default;
};

/// Freely reduced word in z_1, ..., z_m.
class FreeWord {
 public:
  FreeWord() = default;
  /// Reduces the given letters.
  explicit FreeWord(const std::vector<FreeLetter>& letters);
  static FreeWord generator(int index, int exp = 1);

  const std::vector<FreeLetter>& letters() const noexcept { return letters_; }
  bool is_identity() const noexcept { return letters_.empty(); }
  std::size_t length() const noexcept { return letters_.size(); }

  FreeWord inverse() const;
  /// Sum of exponents, the image under z_i -> t.
  int exponent_sum() const;

  FreeWord& operator*=(const FreeWord& o);
  friend FreeWord operator*(FreeWord a, const FreeWord& b) { return a *= b; }
  friend auto operator<=>(const FreeWord&, const FreeWord&) = default;

  /// "z1 z2 z1^-1"; "1" for the identity.
  std::string to_string() const;

 private:
  std::vector<FreeLetter> letters_;
};

/// Finite sums of free-group elements with integer coefficients.
class GroupRingElement {
 public:
  GroupRingElement() = default;
  GroupRingElement(long constant);  // NOLINT(google-explicit-constructor): integers embed.
  static GroupRingElement of(const FreeWord& w, const mpz_class& coef = 1);

  const std::map<FreeWord, mpz_class>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Sum of coefficients.
  mpz_class augmentation() const;
  /// Image in Z[t^{+-1}] under every z_i -> t, with t written as z.
  LaurentPoly abelianize() const;

  GroupRingElement operator-() const;
  GroupRingElement& operator+=(const GroupRingElement& o);
  GroupRingElement& operator-=(const GroupRingElement& o);
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

  std::string to_string() const;

 private:
  void add(const FreeWord& w, const mpz_class& c);

  std::map<FreeWord, mpz_class> terms_;
};

/// Image of z_i under beta. sigma_j: z_j -> z_j z_{j+1} z_j^{-1}, z_{j+1} -> z_j;
/// beta = s_1 s_2 ... s_k acts as the composite s_1 o s_2 o ... o s_k.
FreeWord artin_action(const BraidWord& b, int i);
std::vector<FreeWord> artin_images(const BraidWord& b);

/// Relators r_i = beta(z_i) z_i^{-1} of the closure group.
std::vector<FreeWord> closure_relators(const BraidWord& b);

/// d w / d z_i.
GroupRingElement fox_derivative(const FreeWord& w, int i);

/// m x m, 0-based.
using GroupRingMatrix = std::vector<std::vector<GroupRingElement>>;

/// psi(beta)_{ij} = d beta(z_i) / d z_j.
GroupRingMatrix psi_matrix(const BraidWord& b);

/// Entrywise abelianization.
LaurentMatrix abelianize(const GroupRingMatrix& m);

struct AbelianizedCheck {
  /// ab psi(beta), the unreduced Burau matrix in t (written as z).
  LaurentMatrix burau;
  /// Normalized det(I - ab psi'(beta)), psi' dropping the first row and column.
  LaurentPoly alexander;
};

AbelianizedCheck abelianize_check(const BraidWord& b);

}  // namespace qjones
