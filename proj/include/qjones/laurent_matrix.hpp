#pragma once

#include <string>
#include <vector>

#include "qjones/exactpoly.hpp"

namespace qjones {

/// Dense matrix over the commutative ring Z[q^{+-1/4}, z^{+-1}], 1-based access.
class LaurentMatrix {
 public:
  LaurentMatrix() = default;
  LaurentMatrix(int rows, int cols);
  static LaurentMatrix identity(int n);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  const LaurentPoly& at(int i, int j) const;
  LaurentPoly& at(int i, int j);

  LaurentMatrix transposed() const;
  /// Rows and columns 2..n.
  LaurentMatrix drop_first() const;
  /// Fraction-free (Bareiss) determinant; exact over the integral domain.
  LaurentPoly determinant() const;

  LaurentMatrix& operator-=(const LaurentMatrix& o);
  friend LaurentMatrix operator-(LaurentMatrix a, const LaurentMatrix& b) { return a -= b; }
  friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
  friend bool operator==(const LaurentMatrix&, const LaurentMatrix&) = default;

  std::string to_string() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<LaurentPoly> data_;
};

}  // namespace qjones
