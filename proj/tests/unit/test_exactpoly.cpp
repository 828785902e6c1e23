#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qjones/error.hpp"
#include "qjones/exactpoly.hpp"
#include "qjones/format.hpp"
#include "random_poly.hpp"

using namespace qjones;

namespace {

LaurentPoly q(std::int64_t k) { return LaurentPoly::q_power(k); }
LaurentPoly z(std::int64_t k) { return LaurentPoly::z_power(k); }

}  // namespace

TEST_CASE("arithmetic examples") {
  CHECK((q(1) + 1) * (q(1) - 1) == q(2) - 1);
  CHECK((q(3) - z(2)) * LaurentPoly{} == LaurentPoly{});
  const LaurentPoly lhs = (LaurentPoly(1) - z(1) * q(-1)) * (LaurentPoly(1) - z(1) * q(-2));
  CHECK(lhs == LaurentPoly(1) - z(1) * q(-1) - z(1) * q(-2) + z(2) * q(-3));
}

TEST_CASE("quarter exponents") {
  const LaurentPoly v = LaurentPoly::monomial(1, QExponent::v(1));
  CHECK(v * v == q(1));
  CHECK_FALSE(v.is_q_integral());
  CHECK(LaurentPoly::monomial(1, QExponent{1}) * LaurentPoly::monomial(1, QExponent{3}) == q(1));
  CHECK(to_string(v) == "q^(1/2)");
}

TEST_CASE("q_pochhammer") {
  CHECK(q_pochhammer(QExponent{}, 1, 2, 1) == (LaurentPoly(1) - z(1)) * (LaurentPoly(1) - z(1) * q(1)));
  CHECK(q_pochhammer(QExponent::q(7), -1, 0, 3) == LaurentPoly(1));
  CHECK(q_pochhammer(QExponent{}, -1, 2, 1) == LaurentPoly(1) - z(1) - z(1) * q(-1) + z(2) * q(-1));
}

TEST_CASE("q_pochhammer under q -> 1/q") {
  for (int a = -3; a <= 3; ++a)
    for (int s : {1, -1})
      for (int d = 0; d <= 4; ++d)
        for (int zd : {-1, 0, 1, 2})
          CHECK(q_pochhammer(QExponent::q(a), s, d, zd).invert_q() == q_pochhammer(QExponent::q(-a), -s, d, zd));
}

TEST_CASE("q_int_binom") {
  CHECK(q_int_binom(2, 1, 1) == 1 + q(-1));
  CHECK(q_int_binom(5, 0, 1) == LaurentPoly(1));
  CHECK(q_int_binom(5, 0, -1) == LaurentPoly(1));
  CHECK(q_int_binom(2, 1, -1) == 1 + q(1));
  CHECK(q_int_binom(2, 3, 1).is_zero());
  // Pascal rule for the Gaussian in q: [n, l] = [n-1, l-1] + q^l [n-1, l].
  for (int n = 1; n <= 8; ++n)
    for (int l = 1; l < n; ++l)
      CHECK(q_int_binom(n, l, -1) == q_int_binom(n - 1, l - 1, -1) + q(l) * q_int_binom(n - 1, l, -1));
}

TEST_CASE("exact division") {
  const LaurentPoly f = (1 - q(1)) * (1 - q(2)) * (q(-3) + 2 * q(5));
  const auto quot = divide_exact(f, (1 - q(1)) * (1 - q(2)));
  REQUIRE(quot);
  CHECK(*quot == q(-3) + 2 * q(5));
  CHECK_FALSE(divide_exact(q(2) + 1, 1 - q(1)));
  CHECK(divides(1 - q(1), q(5) - q(-2)));
}

TEST_CASE("cyclotomic_reduce examples") {
  CHECK(cyclotomic_reduce(q(1) + q(3) - q(4), 2) == CyclotomicInt(2, -3));
  CHECK(cyclotomic_reduce(1 + q(1) + q(2), 3).is_zero());
  CHECK(cyclotomic_reduce(3 * q(-7) - q(2) + 5, 1) == CyclotomicInt(1, 7));
  CHECK_THROWS_AS(cyclotomic_reduce(LaurentPoly::monomial(1, QExponent::v(1)), 3), Error);
}

TEST_CASE("embed_complex examples") {
  CHECK(std::abs(embed_complex(CyclotomicInt(2, -3)) - std::complex<double>(-3, 0)) < 1e-12);
  CHECK(std::abs(embed_complex(CyclotomicInt::q_power(4, 1)) - std::complex<double>(0, 1)) < 1e-12);
  const auto golden = embed_complex(cyclotomic_reduce(1 + q(1), 5));
  CHECK(std::abs(golden - (1.0 + std::polar(1.0, 2 * std::numbers::pi / 5))) < 1e-12);
  CHECK(std::abs(golden) == doctest::Approx(1.618034).epsilon(1e-6));
}

TEST_CASE("cyclotomic residues have phi(N) coefficients") {
  for (int n : {1, 2, 3, 4, 6, 7, 12, 15, 24}) {
    CHECK(static_cast<int>(cyclotomic_polynomial(n).size()) == euler_phi(n) + 1);
    CHECK(cyclotomic_reduce(q(n) - 1, n).is_zero());
  }
}

TEST_CASE("property: canonical form and ring axioms") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = testing::random_poly(rng, 6, 8, 2);
    const auto b = testing::random_poly(rng, 6, 8, 2);
    const auto c = testing::random_poly(rng, 6, 8, 2);
    CHECK((a - a).is_zero());
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(parse_laurent(to_string(a)) == a);
    CHECK(parse_laurent(to_string(a, TermOrder::center_out)) == a);
  }
}

TEST_CASE("property: cyclotomic reduction commutes with the complex embedding") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 24;
    const auto p = testing::random_poly(rng, 12, 50, 0, 20);
    const auto exact = embed_complex(cyclotomic_reduce(p, n));
    const auto direct = p.evaluate(std::polar(1.0, 2 * std::numbers::pi / n));
    CHECK(std::abs(exact - direct) <= 1e-9 * std::max(1.0, std::abs(direct)));
  }
}

TEST_CASE("property: cyclotomic ring homomorphism") {
  std::mt19937 rng(5);
  for (int n : {3, 5, 8, 9}) {
    const auto a = testing::random_poly(rng, 5, 10);
    const auto b = testing::random_poly(rng, 5, 10);
    CHECK(cyclotomic_reduce(a * b, n) == cyclotomic_reduce(a, n) * cyclotomic_reduce(b, n));
    CHECK(cyclotomic_reduce(a - b, n) == cyclotomic_reduce(a, n) - cyclotomic_reduce(b, n));
  }
}

TEST_CASE("formatting") {
  CHECK(to_string(q(1) + q(3) - q(4)) == "q + q^3 - q^4");
  CHECK(to_string(3 - z(1) - z(-1), TermOrder::center_out) == "3 - z - z^-1");
  CHECK(to_string(LaurentPoly{}) == "0");
  CHECK_THROWS_AS(parse_laurent("q^^2"), ParseError);
}
