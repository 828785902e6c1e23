#pragma once

#include <string>
#include <vector>

#include "qjones/braid.hpp"
#include "qjones/laurent_matrix.hpp"
#include "qjones/qweyl.hpp"

namespace qjones {

/// Square matrix with entries in A_eps; products normal-order every entry.
/// Indices are 1-based.
class QuantumMatrix {
 public:
  QuantumMatrix(StrandSigns signs, int dim);
  static QuantumMatrix identity(StrandSigns signs, int dim);

  int dim() const noexcept { return dim_; }
  const StrandSigns& signs() const noexcept { return signs_; }
  const AlgebraElement& at(int i, int j) const;
  AlgebraElement& at(int i, int j);

  /// Principal submatrix on the given 1-based indices (kept in the given order).
  QuantumMatrix principal(const std::vector<int>& indices) const;
  /// Every entry times a central scalar.
  QuantumMatrix scaled(const LaurentPoly& c) const;

  friend QuantumMatrix operator*(const QuantumMatrix& a, const QuantumMatrix& b);
  friend bool operator==(const QuantumMatrix&, const QuantumMatrix&) = default;

  std::string to_string() const;

 private:
  StrandSigns signs_;
  int dim_;
  std::vector<AlgebraElement> data_;
};

/// S_+ = [[a_j, b_j], [c_j, 0]] and S_- = [[0, c_j], [b_j, a_j]] over `signs`
/// (whose j-th sign must equal `sign`).
QuantumMatrix s_matrix(int sign, int j, const StrandSigns& signs);
/// Same with signs (sign, ..., sign) of length j.
QuantumMatrix s_matrix(int sign, int j);

/// rho(beta) = A_1 A_2 ... A_k with A_j = I (+) S_{eps_j} (+) I placed at rows i_j, i_j + 1.
QuantumMatrix rho(const BraidWord& b);
/// rho with the first row and column removed.
QuantumMatrix rho_prime(const QuantumMatrix& m);

struct RightQuantumViolation {
  int row1, row2, col1, col2;
  /// "ac=qca", "bd=qdb" or "ad=da+qcb-q^-1bc".
  std::string relation;
};

/// Checks every 2x2 submatrix [[a, b], [c, d]] (rows i < i', columns j < j').
std::vector<RightQuantumViolation> check_right_quantum(const QuantumMatrix& m);

/// Entrywise E: a matrix over Z[q^{+-1}, z^{+-1}].
LaurentMatrix classical_specialization(const QuantumMatrix& m);

}  // namespace qjones
