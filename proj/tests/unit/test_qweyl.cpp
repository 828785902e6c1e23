#include <doctest.h>

#include <random>

#include "qjones/exactpoly.hpp"
#include "qjones/qweyl.hpp"

using namespace qjones;

namespace {

LaurentPoly q(std::int64_t k) { return LaurentPoly::q_power(k); }
LaurentPoly z(std::int64_t k) { return LaurentPoly::z_power(k); }

NormalMonomial mono(std::vector<NormalMonomial::Entry> e) { return NormalMonomial(std::move(e)); }

AlgebraElement random_element(std::mt19937& rng, int k) {
  std::uniform_int_distribution<int> idx(1, k), pw(0, 2), c(-2, 2), e(-2, 2);
  AlgebraElement x;
  for (int t = 0; t < 3; ++t) {
    std::vector<NormalMonomial::Entry> entries;
    for (int j = 1; j <= k; ++j)
      if (idx(rng) <= 2) entries.push_back({j, {pw(rng), pw(rng), pw(rng)}});
    x.add_term(NormalMonomial(entries), c(rng) * q(e(rng)));
  }
  return x;
}

}  // namespace

TEST_CASE("normal_order_product examples") {
  const StrandSigns plus({1, 1});
  const StrandSigns minus({-1, 1});
  const auto ac = normal_order_product(AlgebraElement::a(1), AlgebraElement::c(1), plus);
  CHECK(ac == AlgebraElement::monomial(mono({{1, {0, 1, 1}}}), q(1)));
  const auto ab2 = normal_order_product(AlgebraElement::a(1), AlgebraElement::b(2), minus);
  CHECK(ab2 == AlgebraElement::monomial(mono({{1, {0, 0, 1}}, {2, {1, 0, 0}}})));
  const auto ab = normal_order_product(AlgebraElement::a(1), AlgebraElement::b(1), minus);
  CHECK(ab == AlgebraElement::monomial(mono({{1, {1, 0, 1}}}), q(2)));
}

TEST_CASE("defining relations hold in normal form") {
  const auto a = AlgebraElement::a(1), b = AlgebraElement::b(1), c = AlgebraElement::c(1);
  const StrandSigns p({1}), m({-1});
  auto mul = [](const AlgebraElement& x, const AlgebraElement& y, const StrandSigns& s) {
    return normal_order_product(x, y, s);
  };
  CHECK(mul(a, b, p) == mul(b, a, p));
  CHECK(mul(a, c, p) == mul(c, a, p).scaled(q(1)));
  CHECK(mul(b, c, p) == mul(c, b, p).scaled(q(2)));
  CHECK(mul(a, b, m) == mul(b, a, m).scaled(q(2)));
  CHECK(mul(c, a, m) == mul(a, c, m).scaled(q(1)));
  CHECK(mul(c, b, m) == mul(b, c, m).scaled(q(2)));
}

TEST_CASE("eval_E examples") {
  const StrandSigns p({1}), m({-1});
  CHECK(eval_E(AlgebraElement::a(1), p) == 1 - z(1));
  CHECK(eval_E(AlgebraElement::c(1), p) == z(1));
  CHECK(eval_E(AlgebraElement::c(1), m) == z(-1));
  CHECK(eval_E(AlgebraElement::b(1), p) == LaurentPoly(1));
}

TEST_CASE("eval_EN examples") {
  const StrandSigns p({1});
  CHECK(eval_EN(AlgebraElement::a(1), p, 1).is_zero());
  CHECK(eval_EN(AlgebraElement::a(1), p, 0) == 1 - q(-1));
  CHECK(eval_EN(normal_order_product(AlgebraElement::c(1), AlgebraElement::a(1), p), p, 2).is_zero());
}

TEST_CASE("trefoil term q^n c1^n a2^n b3^n") {
  const StrandSigns signs({1, 1, 1});
  for (int n = 0; n <= 5; ++n)
    for (int order = 1; order <= 6; ++order) {
      const auto x = AlgebraElement::monomial(mono({{1, {0, n, 0}}, {2, {0, 0, n}}, {3, {n, 0, 0}}}), q(n));
      LaurentPoly expected = q(std::int64_t{n} * order);
      for (int i = 1; i <= n; ++i) expected *= 1 - q(order - i);
      CHECK(eval_EN(x, signs, order) == expected);
    }
}

TEST_CASE("operator_action_oracle examples") {
  CHECK(operator_action_oracle(mono({{1, {0, 0, 1}}}), StrandSigns({1})) == 1 - z(1));
  CHECK(operator_action_oracle(mono({{1, {0, 1, 0}}}), StrandSigns({1})) == z(1));
  CHECK(operator_action_oracle(mono({{1, {1, 0, 0}}}), StrandSigns({-1})) == LaurentPoly(1));
}

TEST_CASE("property: closed forms agree with the operator realization") {
  for (int sign : {1, -1})
    for (int s = 0; s <= 4; ++s)
      for (int r = 0; r <= 4; ++r)
        for (int d = 0; d <= 4; ++d) {
          const auto m = mono({{1, {s, r, d}}});
          CHECK(eval_E(m, StrandSigns({sign})) == operator_action_oracle(m, StrandSigns({sign})));
        }
  // Two indices at once.
  const auto m = mono({{1, {1, 2, 1}}, {2, {2, 1, 2}}});
  CHECK(eval_E(m, StrandSigns({1, -1})) == operator_action_oracle(m, StrandSigns({1, -1})));
}

TEST_CASE("property: associativity") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const StrandSigns signs({trial % 2 ? 1 : -1, trial % 3 ? -1 : 1, 1});
    const auto x = random_element(rng, 3), y = random_element(rng, 3), w = random_element(rng, 3);
    CHECK(normal_order_product(x, normal_order_product(y, w, signs), signs) ==
          normal_order_product(normal_order_product(x, y, signs), w, signs));
  }
}

TEST_CASE("property: ideal degree is superadditive") {
  std::mt19937 rng(23);
  const StrandSigns signs({1, -1, 1});
  for (int trial = 0; trial < 40; ++trial) {
    const auto x = random_element(rng, 3), y = random_element(rng, 3);
    const auto xy = normal_order_product(x, y, signs);
    if (xy.is_zero() || x.is_zero() || y.is_zero()) continue;
    CHECK(*xy.ideal_degree() >= *x.ideal_degree() + *y.ideal_degree());
  }
}

TEST_CASE("property: separated factors evaluate multiplicatively") {
  std::mt19937 rng(29);
  std::uniform_int_distribution<int> pw(0, 3);
  for (int trial = 0; trial < 40; ++trial) {
    const StrandSigns signs({trial % 2 ? 1 : -1, 1, -1, trial % 3 ? 1 : -1});
    const auto x = AlgebraElement::monomial(mono({{1, {pw(rng), pw(rng), pw(rng)}}, {2, {pw(rng), pw(rng), pw(rng)}}}));
    const auto y = AlgebraElement::monomial(mono({{3, {pw(rng), pw(rng), pw(rng)}}, {4, {pw(rng), pw(rng), pw(rng)}}}));
    CHECK(eval_E(normal_order_product(x, y, signs), signs) == eval_E(x, signs) * eval_E(y, signs));
  }
}

TEST_CASE("property: a^d makes eval_EN divisible by (1-q)...(1-q^d)") {
  for (int sign : {1, -1})
    for (int d = 1; d <= 6; ++d)
      for (int r = 0; r <= 3; ++r)
        for (int order : {-2, 0, 1, 2, 5, 9}) {
          const auto x = AlgebraElement::monomial(mono({{1, {1, r, d}}}));
          LaurentPoly fact = 1;
          for (int i = 1; i <= d; ++i) fact *= 1 - q(i);
          CHECK(divides(fact, eval_EN(x, StrandSigns({sign}), order)));
        }
}
