#include "qjones/foxburau.hpp"

#include "qjones/error.hpp"
#include "qjones/mcmahon.hpp"

namespace qjones {

FreeWord::FreeWord(const std::vector<FreeLetter>& letters) {
  for (const auto& l : letters) {
    if (l.index < 1 || (l.exp != 1 && l.exp != -1)) throw DomainError("free letters are z_i^{+-1}, i >= 1");
    if (!letters_.empty() && letters_.back().index == l.index && letters_.back().exp == -l.exp) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
}

FreeWord FreeWord::generator(int index, int exp) { return FreeWord({{index, exp}}); }

FreeWord FreeWord::inverse() const {
  FreeWord out;
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.letters_.push_back({it->index, -it->exp});
  return out;
}

int FreeWord::exponent_sum() const {
  int s = 0;
  for (const auto& l : letters_) s += l.exp;
  return s;
}

FreeWord& FreeWord::operator*=(const FreeWord& o) {
  for (const auto& l : o.letters_) {
    if (!letters_.empty() && letters_.back().index == l.index && letters_.back().exp == -l.exp) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
  return *this;
}

std::string FreeWord::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (const auto& l : letters_) {
    if (!out.empty()) out += ' ';
    out += 'z' + std::to_string(l.index);
    if (l.exp < 0) out += "^-1";
  }
  return out;
}

// ---------------------------------------------------------------------------

GroupRingElement::GroupRingElement(long constant) { add(FreeWord{}, constant); }

GroupRingElement GroupRingElement::of(const FreeWord& w, const mpz_class& coef) {
  GroupRingElement out;
  out.add(w, coef);
  return out;
}

void GroupRingElement::add(const FreeWord& w, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

mpz_class GroupRingElement::augmentation() const {
  mpz_class s = 0;
  for (const auto& [w, c] : terms_) s += c;
  return s;
}

LaurentPoly GroupRingElement::abelianize() const {
  LaurentPoly out;
  for (const auto& [w, c] : terms_) out += LaurentPoly::monomial(c, QExponent{}, w.exponent_sum());
  return out;
}

GroupRingElement GroupRingElement::operator-() const {
  GroupRingElement out = *this;
  for (auto& [w, c] : out.terms_) c = -c;
  return out;
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  GroupRingElement out;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) out.add(wa * wb, ca * cb);
  return out;
}

std::string GroupRingElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    const bool neg = c < 0;
    const mpz_class mag = neg ? mpz_class(-c) : c;
    if (out.empty()) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    if (w.is_identity()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + '*';
      out += w.to_string();
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

void check_index(const BraidWord& b, int i) {
  if (i < 1 || i > b.strands()) throw DomainError("generator index out of range");
}

// Images of z_1..z_m under one Artin generator.
std::vector<FreeWord> letter_images(const Crossing& c, int m) {
  std::vector<FreeWord> img;
  for (int i = 1; i <= m; ++i) img.push_back(FreeWord::generator(i));
  const int j = c.generator;
  const FreeWord a = FreeWord::generator(j);
  const FreeWord b = FreeWord::generator(j + 1);
  if (c.sign > 0) {
    img[j - 1] = a * b * a.inverse();
    img[j] = a;
  } else {
    img[j - 1] = b;
    img[j] = b.inverse() * a * b;
  }
  return img;
}

FreeWord substitute(const FreeWord& w, const std::vector<FreeWord>& img) {
  FreeWord out;
  for (const auto& l : w.letters()) out *= l.exp > 0 ? img[l.index - 1] : img[l.index - 1].inverse();
  return out;
}

}  // namespace

std::vector<FreeWord> artin_images(const BraidWord& b) {
  const int m = b.strands();
  std::vector<FreeWord> img;
  for (int i = 1; i <= m; ++i) img.push_back(FreeWord::generator(i));
  // (s_1 o ... o s_k)(z) = s_1(...): substitute the current images into each new letter,
  // processing the word from the right.
  const auto& w = b.word();
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const auto next = letter_images(*it, m);
    for (auto& x : img) x = substitute(x, next);
  }
  return img;
}

FreeWord artin_action(const BraidWord& b, int i) {
  check_index(b, i);
  return artin_images(b)[static_cast<std::size_t>(i - 1)];
}

std::vector<FreeWord> closure_relators(const BraidWord& b) {
  auto img = artin_images(b);
  for (std::size_t i = 0; i < img.size(); ++i) img[i] *= FreeWord::generator(static_cast<int>(i) + 1, -1);
  return img;
}

GroupRingElement fox_derivative(const FreeWord& w, int i) {
  GroupRingElement out;
  FreeWord prefix;
  for (const auto& l : w.letters()) {
    if (l.index == i) {
      if (l.exp > 0) {
        out += GroupRingElement::of(prefix);
      } else {
        out -= GroupRingElement::of(prefix * FreeWord::generator(i, -1));
      }
    }
    prefix *= FreeWord::generator(l.index, l.exp);
  }
  return out;
}

GroupRingMatrix psi_matrix(const BraidWord& b) {
  const auto img = artin_images(b);
  const int m = b.strands();
  GroupRingMatrix out(static_cast<std::size_t>(m), std::vector<GroupRingElement>(static_cast<std::size_t>(m)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) out[i][j] = fox_derivative(img[i], j + 1);
  return out;
}

LaurentMatrix abelianize(const GroupRingMatrix& m) {
  const int n = static_cast<int>(m.size());
  LaurentMatrix out(n, n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(m[i].size()) != n) throw DomainError("group ring matrix must be square");
    for (int j = 0; j < n; ++j) out.at(i + 1, j + 1) = m[i][j].abelianize();
  }
  return out;
}

AbelianizedCheck abelianize_check(const BraidWord& b) {
  require_knot(b);
  AbelianizedCheck out;
  out.burau = abelianize(psi_matrix(b));
  if (b.strands() == 1) {
    out.alexander = 1;
    return out;
  }
  const LaurentMatrix reduced = out.burau.drop_first();
  out.alexander = normalize_alexander((LaurentMatrix::identity(reduced.rows()) - reduced).determinant());
  return out;
}

}  // namespace qjones
