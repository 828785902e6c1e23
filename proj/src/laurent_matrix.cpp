#include "qjones/laurent_matrix.hpp"

#include <utility>

#include "qjones/error.hpp"
#include "qjones/format.hpp"

namespace qjones {

LaurentMatrix::LaurentMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
  if (rows < 0 || cols < 0) throw DomainError("negative matrix dimension");
}

LaurentMatrix LaurentMatrix::identity(int n) {
  LaurentMatrix m(n, n);
  for (int i = 1; i <= n; ++i) m.at(i, i) = 1;
  return m;
}

const LaurentPoly& LaurentMatrix::at(int i, int j) const {
  if (i < 1 || i > rows_ || j < 1 || j > cols_) throw DomainError("matrix index out of range");
  return data_[static_cast<std::size_t>((i - 1) * cols_ + (j - 1))];
}

LaurentPoly& LaurentMatrix::at(int i, int j) {
  return const_cast<LaurentPoly&>(std::as_const(*this).at(i, j));
}

LaurentMatrix LaurentMatrix::transposed() const {
  LaurentMatrix t(cols_, rows_);
  for (int i = 1; i <= rows_; ++i)
    for (int j = 1; j <= cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

LaurentMatrix LaurentMatrix::drop_first() const {
  if (rows_ < 1 || cols_ < 1) throw DomainError("cannot drop the first row of an empty matrix");
  LaurentMatrix out(rows_ - 1, cols_ - 1);
  for (int i = 2; i <= rows_; ++i)
    for (int j = 2; j <= cols_; ++j) out.at(i - 1, j - 1) = at(i, j);
  return out;
}

LaurentPoly LaurentMatrix::determinant() const {
  if (rows_ != cols_) throw DomainError("determinant of a non-square matrix");
  const int n = rows_;
  if (n == 0) return 1;
  std::vector<std::vector<LaurentPoly>> a(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i].push_back(at(i + 1, j + 1));
  int sign = 1;
  LaurentPoly previous = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      int p = k + 1;
      while (p < n && a[p][k].is_zero()) ++p;
      if (p == n) return {};
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        const LaurentPoly num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        auto q = divide_exact(num, previous);
        if (!q) throw Error("Bareiss step is not exact");
        a[i][j] = std::move(*q);
      }
      a[i][k] = LaurentPoly{};
    }
    previous = a[k][k];
  }
  LaurentPoly d = a[n - 1][n - 1];
  return sign > 0 ? d : -d;
}

LaurentMatrix& LaurentMatrix::operator-=(const LaurentMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix shape mismatch");
  LaurentMatrix out(a.rows_, b.cols_);
  for (int i = 1; i <= a.rows_; ++i)
    for (int j = 1; j <= b.cols_; ++j) {
      LaurentPoly s;
      for (int l = 1; l <= a.cols_; ++l) s += a.at(i, l) * b.at(l, j);
      out.at(i, j) = std::move(s);
    }
  return out;
}

std::string LaurentMatrix::to_string() const {
  std::string out = "[";
  for (int i = 1; i <= rows_; ++i) {
    out += i > 1 ? ", [" : "[";
    for (int j = 1; j <= cols_; ++j) {
      if (j > 1) out += ", ";
      out += qjones::to_string(at(i, j));
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace qjones
