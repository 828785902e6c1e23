#include "qjones/qweyl.hpp"

#include <algorithm>
#include <array>

#include "qjones/error.hpp"
#include "qjones/format.hpp"

namespace qjones {

StrandSigns::StrandSigns(std::vector<int> signs) : signs_(std::move(signs)) {
  for (int s : signs_) {
    if (s != 1 && s != -1) throw DomainError("strand sign must be +1 or -1");
  }
}

StrandSigns StrandSigns::of(const BraidWord& b) {
  std::vector<int> s;
  s.reserve(b.length());
  for (const auto& c : b.word()) s.push_back(c.sign);
  return StrandSigns(std::move(s));
}

int StrandSigns::sign(int index) const {
  if (index < 1 || static_cast<std::size_t>(index) > signs_.size()) {
    throw DomainError("crossing index " + std::to_string(index) + " outside 1.." + std::to_string(signs_.size()));
  }
  return signs_[static_cast<std::size_t>(index - 1)];
}

std::int64_t reorder_q_exponent(int sign, const GeneratorPowers& left, const GeneratorPowers& right) {
  const std::int64_t r = left.r;
  const std::int64_t d = left.d;
  const std::int64_t s2 = right.s;
  const std::int64_t r2 = right.r;
  // Moving a^d past b^s' c^r' and c^r past b^s'.
  if (sign > 0) return -2 * r * s2 + d * r2;
  return 2 * d * s2 + 2 * r * s2 - d * r2;
}

// ---------------------------------------------------------------------------
// NormalMonomial

NormalMonomial::NormalMonomial(std::vector<Entry> entries) {
  std::erase_if(entries, [](const Entry& e) { return e.powers.is_identity(); });
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.index < b.index; });
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& p = entries[i].powers;
    if (entries[i].index < 1) throw DomainError("crossing indices are 1-based");
    if (p.s < 0 || p.r < 0 || p.d < 0) throw DomainError("monomial exponents must be nonnegative");
    if (i > 0 && entries[i - 1].index == entries[i].index) throw DomainError("repeated index in monomial");
  }
  entries_ = std::move(entries);
}

NormalMonomial NormalMonomial::generator(char name, int index) {
  GeneratorPowers p;
  switch (name) {
    case 'a': p.d = 1; break;
    case 'b': p.s = 1; break;
    case 'c': p.r = 1; break;
    default: throw DomainError(std::string("unknown generator '") + name + "'");
  }
  return NormalMonomial({{index, p}});
}

GeneratorPowers NormalMonomial::powers(int index) const {
  for (const auto& e : entries_) {
    if (e.index == index) return e.powers;
  }
  return {};
}

int NormalMonomial::ideal_degree() const {
  int total = 0;
  for (const auto& e : entries_) total += e.powers.d;
  return total;
}

std::string NormalMonomial::to_string() const {
  if (entries_.empty()) return "1";
  std::string out;
  auto put = [&](char g, int index, int power) {
    if (power == 0) return;
    if (!out.empty()) out += "*";
    out += g + std::to_string(index);
    if (power != 1) out += "^" + std::to_string(power);
  };
  for (const auto& e : entries_) {
    put('b', e.index, e.powers.s);
    put('c', e.index, e.powers.r);
    put('a', e.index, e.powers.d);
  }
  return out;
}

std::pair<NormalMonomial, std::int64_t> multiply_monomials(const NormalMonomial& x, const NormalMonomial& y,
                                                           const StrandSigns& signs) {
  std::vector<NormalMonomial::Entry> out;
  std::int64_t e = 0;
  const auto& xs = x.entries();
  const auto& ys = y.entries();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < xs.size() || j < ys.size()) {
    if (j == ys.size() || (i < xs.size() && xs[i].index < ys[j].index)) {
      signs.sign(xs[i].index);
      out.push_back(xs[i++]);
    } else if (i == xs.size() || ys[j].index < xs[i].index) {
      signs.sign(ys[j].index);
      out.push_back(ys[j++]);
    } else {
      const auto& l = xs[i].powers;
      const auto& r = ys[j].powers;
      e += reorder_q_exponent(signs.sign(xs[i].index), l, r);
      out.push_back({xs[i].index, {l.s + r.s, l.r + r.r, l.d + r.d}});
      ++i;
      ++j;
    }
  }
  return {NormalMonomial(std::move(out)), e};
}

// ---------------------------------------------------------------------------
// AlgebraElement

AlgebraElement::AlgebraElement(const LaurentPoly& scalar) {
  if (!scalar.is_zero()) terms_.emplace(NormalMonomial{}, scalar);
}

AlgebraElement AlgebraElement::monomial(const NormalMonomial& m, const LaurentPoly& coef) {
  AlgebraElement x;
  x.add_term(m, coef);
  return x;
}

LaurentPoly AlgebraElement::coefficient(const NormalMonomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? LaurentPoly{} : it->second;
}

std::optional<int> AlgebraElement::ideal_degree() const {
  std::optional<int> best;
  for (const auto& [m, c] : terms_) {
    const int d = m.ideal_degree();
    if (!best || d < *best) best = d;
  }
  return best;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + qjones::to_string(c) + ")";
    if (!m.is_identity()) out += "*" + m.to_string();
  }
  return out;
}

void AlgebraElement::add_term(const NormalMonomial& m, const LaurentPoly& coef) {
  if (coef.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement x = *this;
  for (auto& [m, c] : x.terms_) c = -c;
  return x;
}

AlgebraElement AlgebraElement::scaled(const LaurentPoly& c) const {
  AlgebraElement x;
  if (c.is_zero()) return x;
  for (const auto& [m, coef] : terms_) x.add_term(m, coef * c);
  return x;
}

AlgebraElement normal_order_product(const AlgebraElement& x, const AlgebraElement& y, const StrandSigns& signs) {
  AlgebraElement out;
  for (const auto& [mx, cx] : x.terms()) {
    for (const auto& [my, cy] : y.terms()) {
      auto [m, e] = multiply_monomials(mx, my, signs);
      out.add_term(m, (cx * cy).times_monomial(QExponent::q(e)));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation

LaurentPoly evaluation_factor(int sign, int r, int d) {
  if (sign > 0) {
    return q_pochhammer(QExponent::q(-r), -1, d, 1).times_monomial(QExponent::q(-std::int64_t{r} * d), r);
  }
  return q_pochhammer(QExponent::q(r), 1, d, -1).times_monomial(QExponent{}, -r);
}

LaurentPoly eval_E(const NormalMonomial& m, const StrandSigns& signs) {
  LaurentPoly out = 1;
  for (const auto& e : m.entries()) out *= evaluation_factor(signs.sign(e.index), e.powers.r, e.powers.d);
  return out;
}

LaurentPoly eval_E(const AlgebraElement& x, const StrandSigns& signs) {
  LaurentPoly out;
  for (const auto& [m, c] : x.terms()) out += c * eval_E(m, signs);
  return out;
}

LaurentPoly eval_EN(const AlgebraElement& x, const StrandSigns& signs, int n) {
  return eval_E(x, signs).substitute_z(QExponent::q(n - 1));
}

// ---------------------------------------------------------------------------
// Operator oracle

namespace {

// Function on the (x, y, u) variables of a single index: x^alpha y^beta u^gamma -> coefficient in Z[q^{+-1}].
using Exps = std::array<std::int64_t, 3>;
using Function = std::map<Exps, LaurentPoly>;

void accumulate(Function& f, const Exps& e, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = f.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) f.erase(it);
  }
}

LaurentPoly qp(std::int64_t k) { return LaurentPoly::q_power(k); }

// a_+ = (u - y tau_x^{-1}) tau_y^{-1},  b_+ = u^2,  c_+ = x tau_y^{-2} tau_u^{-1}
// a_- = (tau_y - x^{-1}) tau_x^{-1} tau_u,  b_- = u^2,  c_- = y^{-1} tau_x^{-1} tau_u
Function apply(char g, int sign, const Function& f) {
  Function out;
  for (const auto& [e, c] : f) {
    const auto [al, be, ga] = e;
    if (g == 'b') {
      accumulate(out, {al, be, ga + 2}, c);
    } else if (sign > 0 && g == 'a') {
      accumulate(out, {al, be, ga + 1}, c * qp(-be));
      accumulate(out, {al, be + 1, ga}, -(c * qp(-be - al)));
    } else if (sign > 0 && g == 'c') {
      accumulate(out, {al + 1, be, ga}, c * qp(-2 * be - ga));
    } else if (g == 'a') {
      accumulate(out, {al, be, ga}, c * qp(ga - al + be));
      accumulate(out, {al - 1, be, ga}, -(c * qp(ga - al)));
    } else {
      accumulate(out, {al, be - 1, ga}, c * qp(ga - al));
    }
  }
  return out;
}

}  // namespace

LaurentPoly operator_action_oracle(const NormalMonomial& m, const StrandSigns& signs) {
  // Variables of distinct indices are independent, so the action factors; each
  // index applies a^d first, then c^r, then b^s (rightmost factor first).
  LaurentPoly out = 1;
  for (const auto& entry : m.entries()) {
    const int sign = signs.sign(entry.index);
    Function f{{Exps{0, 0, 0}, LaurentPoly(1)}};
    for (int i = 0; i < entry.powers.d; ++i) f = apply('a', sign, f);
    for (int i = 0; i < entry.powers.r; ++i) f = apply('c', sign, f);
    for (int i = 0; i < entry.powers.s; ++i) f = apply('b', sign, f);
    LaurentPoly value;
    for (const auto& [e, c] : f) value += c.times_monomial(QExponent{}, e[0] + e[1]);
    out *= value;
  }
  return out;
}

}  // namespace qjones
