#include "qjones/deformed_burau.hpp"

#include <utility>

#include "qjones/error.hpp"

namespace qjones {

QuantumMatrix::QuantumMatrix(StrandSigns signs, int dim)
    : signs_(std::move(signs)), dim_(dim), data_(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim)) {
  if (dim < 0) throw DomainError("negative matrix dimension");
}

QuantumMatrix QuantumMatrix::identity(StrandSigns signs, int dim) {
  QuantumMatrix m(std::move(signs), dim);
  for (int i = 1; i <= dim; ++i) m.at(i, i) = AlgebraElement(1);
  return m;
}

const AlgebraElement& QuantumMatrix::at(int i, int j) const {
  if (i < 1 || i > dim_ || j < 1 || j > dim_) throw DomainError("matrix index out of range");
  return data_[static_cast<std::size_t>((i - 1) * dim_ + (j - 1))];
}

AlgebraElement& QuantumMatrix::at(int i, int j) { return const_cast<AlgebraElement&>(std::as_const(*this).at(i, j)); }

QuantumMatrix QuantumMatrix::principal(const std::vector<int>& indices) const {
  QuantumMatrix out(signs_, static_cast<int>(indices.size()));
  for (std::size_t a = 0; a < indices.size(); ++a)
    for (std::size_t b = 0; b < indices.size(); ++b)
      out.at(static_cast<int>(a) + 1, static_cast<int>(b) + 1) = at(indices[a], indices[b]);
  return out;
}

QuantumMatrix QuantumMatrix::scaled(const LaurentPoly& c) const {
  QuantumMatrix out = *this;
  for (auto& e : out.data_) e = e.scaled(c);
  return out;
}

QuantumMatrix operator*(const QuantumMatrix& a, const QuantumMatrix& b) {
  if (a.dim_ != b.dim_) throw DomainError("matrix shape mismatch");
  if (!(a.signs_ == b.signs_)) throw DomainError("matrices over different algebras");
  QuantumMatrix out(a.signs_, a.dim_);
  for (int i = 1; i <= a.dim_; ++i)
    for (int j = 1; j <= a.dim_; ++j) {
      AlgebraElement s;
      for (int l = 1; l <= a.dim_; ++l) {
        const auto& x = a.at(i, l);
        const auto& y = b.at(l, j);
        if (!x.is_zero() && !y.is_zero()) s += normal_order_product(x, y, a.signs_);
      }
      out.at(i, j) = std::move(s);
    }
  return out;
}

std::string QuantumMatrix::to_string() const {
  std::string out = "[";
  for (int i = 1; i <= dim_; ++i) {
    out += i > 1 ? ", [" : "[";
    for (int j = 1; j <= dim_; ++j) {
      if (j > 1) out += ", ";
      out += at(i, j).to_string();
    }
    out += "]";
  }
  return out + "]";
}

QuantumMatrix s_matrix(int sign, int j, const StrandSigns& signs) {
  if (signs.sign(j) != sign) throw DomainError("sign of crossing " + std::to_string(j) + " disagrees with S matrix");
  QuantumMatrix s(signs, 2);
  if (sign > 0) {
    s.at(1, 1) = AlgebraElement::a(j);
    s.at(1, 2) = AlgebraElement::b(j);
    s.at(2, 1) = AlgebraElement::c(j);
  } else {
    s.at(1, 2) = AlgebraElement::c(j);
    s.at(2, 1) = AlgebraElement::b(j);
    s.at(2, 2) = AlgebraElement::a(j);
  }
  return s;
}

QuantumMatrix s_matrix(int sign, int j) {
  if (j < 1) throw DomainError("crossing indices are 1-based");
  return s_matrix(sign, j, StrandSigns(std::vector<int>(static_cast<std::size_t>(j), sign)));
}

QuantumMatrix rho(const BraidWord& b) {
  const StrandSigns signs = StrandSigns::of(b);
  const int m = b.strands();
  QuantumMatrix out = QuantumMatrix::identity(signs, m);
  int j = 0;
  for (const auto& c : b.word()) {
    ++j;
    // Right-multiplying by A_j only mixes columns i, i+1.
    const QuantumMatrix s = s_matrix(c.sign, j, signs);
    const int i = c.generator;
    QuantumMatrix next = out;
    for (int row = 1; row <= m; ++row) {
      for (int col = 0; col < 2; ++col) {
        AlgebraElement acc;
        for (int l = 0; l < 2; ++l) {
          const auto& x = out.at(row, i + l);
          const auto& y = s.at(l + 1, col + 1);
          if (!x.is_zero() && !y.is_zero()) acc += normal_order_product(x, y, signs);
        }
        next.at(row, i + col) = std::move(acc);
      }
    }
    out = std::move(next);
  }
  return out;
}

QuantumMatrix rho_prime(const QuantumMatrix& m) {
  if (m.dim() < 2) throw DomainError("rho_prime needs dimension at least 2");
  std::vector<int> idx;
  for (int i = 2; i <= m.dim(); ++i) idx.push_back(i);
  return m.principal(idx);
}

std::vector<RightQuantumViolation> check_right_quantum(const QuantumMatrix& m) {
  std::vector<RightQuantumViolation> out;
  const auto& signs = m.signs();
  const LaurentPoly q = LaurentPoly::q_power(1);
  const LaurentPoly qinv = LaurentPoly::q_power(-1);
  auto mul = [&](const AlgebraElement& x, const AlgebraElement& y) { return normal_order_product(x, y, signs); };
  for (int i = 1; i <= m.dim(); ++i)
    for (int i2 = i + 1; i2 <= m.dim(); ++i2)
      for (int j = 1; j <= m.dim(); ++j)
        for (int j2 = j + 1; j2 <= m.dim(); ++j2) {
          const auto& a = m.at(i, j);
          const auto& b = m.at(i, j2);
          const auto& c = m.at(i2, j);
          const auto& d = m.at(i2, j2);
          if (!(mul(a, c) == mul(c, a).scaled(q))) out.push_back({i, i2, j, j2, "ac=qca"});
          if (!(mul(b, d) == mul(d, b).scaled(q))) out.push_back({i, i2, j, j2, "bd=qdb"});
          if (!(mul(a, d) == mul(d, a) + mul(c, b).scaled(q) - mul(b, c).scaled(qinv))) {
            out.push_back({i, i2, j, j2, "ad=da+qcb-q^-1bc"});
          }
        }
  return out;
}

LaurentMatrix classical_specialization(const QuantumMatrix& m) {
  LaurentMatrix out(m.dim(), m.dim());
  for (int i = 1; i <= m.dim(); ++i)
    for (int j = 1; j <= m.dim(); ++j) out.at(i, j) = eval_E(m.at(i, j), m.signs());
  return out;
}

}  // namespace qjones
