#include "qjones/format.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <vector>

#include "qjones/error.hpp"

namespace qjones {

namespace {

std::string exponent_suffix(char var, std::int64_t numerator, std::int64_t denominator) {
  const std::int64_t g = std::gcd(numerator, denominator);
  numerator /= g;
  denominator /= g;
  std::string out(1, var);
  if (denominator == 1) {
    if (numerator != 1) out += "^" + std::to_string(numerator);
  } else {
    out += "^(" + std::to_string(numerator) + "/" + std::to_string(denominator) + ")";
  }
  return out;
}

std::string monomial_string(const Exponent& e) {
  std::string out;
  if (e.q4 != 0) out += exponent_suffix('q', e.q4, 4);
  if (e.z != 0) {
    if (!out.empty()) out += "*";
    out += exponent_suffix('z', e.z, 1);
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  LaurentPoly parse() {
    std::vector<LaurentPoly::Term> terms;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      auto term = parse_term();
      if (sign < 0) term.coef = -term.coef;
      terms.push_back(std::move(term));
      first = false;
      skip_ws();
    }
    return LaurentPoly::from_terms(std::move(terms));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError("polynomial: " + what, pos_); }

  std::int64_t parse_int() {
    skip_ws();
    const std::size_t start = pos_;
    if (!at_end() && (peek() == '-' || peek() == '+')) ++pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start || (pos_ == start + 1 && !std::isdigit(static_cast<unsigned char>(text_[start])))) {
      fail("expected integer");
    }
    return std::stoll(std::string(text_.substr(start, pos_ - start)));
  }

  mpz_class parse_natural() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  // Returns exponent in quarters (q) or whole units (z).
  std::int64_t parse_exponent(std::int64_t scale) {
    skip_ws();
    if (at_end() || peek() != '^') return scale;
    ++pos_;
    skip_ws();
    if (!at_end() && peek() == '(') {
      ++pos_;
      const std::int64_t num = parse_int();
      skip_ws();
      std::int64_t den = 1;
      if (!at_end() && peek() == '/') {
        ++pos_;
        den = parse_int();
      }
      skip_ws();
      if (at_end() || peek() != ')') fail("expected ')'");
      ++pos_;
      if (den <= 0 || (num * scale) % den != 0) fail("exponent not on the quarter lattice");
      return num * scale / den;
    }
    return parse_int() * scale;
  }

  LaurentPoly::Term parse_term() {
    LaurentPoly::Term term{{}, 1};
    bool have_factor = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      term.coef = parse_natural();
      have_factor = true;
      skip_ws();
      if (at_end() || peek() != '*') return term;
      ++pos_;
      skip_ws();
    }
    for (;;) {
      skip_ws();
      if (at_end()) fail("expected variable");
      const char var = peek();
      if (var == 'q') {
        ++pos_;
        term.exp.q4 += parse_exponent(4);
      } else if (var == 'z') {
        ++pos_;
        term.exp.z += parse_exponent(1);
      } else {
        fail(std::string("unexpected character '") + var + "'");
      }
      have_factor = true;
      skip_ws();
      if (at_end() || peek() != '*') break;
      ++pos_;
    }
    if (!have_factor) fail("empty term");
    return term;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const LaurentPoly& p, TermOrder order) {
  if (p.is_zero()) return "0";
  std::vector<const LaurentPoly::Term*> terms;
  for (const auto& t : p.terms()) terms.push_back(&t);
  if (order == TermOrder::center_out) {
    std::stable_sort(terms.begin(), terms.end(), [](const auto* a, const auto* b) {
      const auto ka = std::abs(a->exp.q4) + 4 * std::abs(a->exp.z);
      const auto kb = std::abs(b->exp.q4) + 4 * std::abs(b->exp.z);
      if (ka != kb) return ka < kb;
      return b->exp < a->exp;
    });
  }
  std::string out;
  bool first = true;
  for (const auto* t : terms) {
    const bool negative = t->coef < 0;
    const mpz_class magnitude = abs(t->coef);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const std::string mono = monomial_string(t->exp);
    if (mono.empty()) {
      out += magnitude.get_str();
    } else if (magnitude == 1) {
      out += mono;
    } else {
      out += magnitude.get_str() + "*" + mono;
    }
  }
  return out;
}

std::string to_string(const CyclotomicInt& c) { return to_string(c.to_poly()); }

LaurentPoly parse_laurent(std::string_view text) { return Parser(text).parse(); }

}  // namespace qjones
