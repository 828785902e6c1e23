#include <doctest.h>

#include <random>

#include "qjones/braid.hpp"
#include "qjones/deformed_burau.hpp"
#include "qjones/format.hpp"
#include "qjones/foxburau.hpp"
#include "qjones/mcmahon.hpp"

using namespace qjones;

namespace {

FreeWord g(int i, int e = 1) { return FreeWord::generator(i, e); }
GroupRingElement el(const FreeWord& w, long c = 1) { return GroupRingElement::of(w, c); }
LaurentPoly t(std::int64_t k) { return LaurentPoly::z_power(k); }

FreeWord random_word(std::mt19937& rng, int m, int length) {
  std::uniform_int_distribution<int> idx(1, m), coin(0, 1);
  std::vector<FreeLetter> letters;
  for (int i = 0; i < length; ++i) letters.push_back({idx(rng), coin(rng) ? 1 : -1});
  return FreeWord(letters);
}

BraidWord random_braid(std::mt19937& rng, int m, int length) {
  std::uniform_int_distribution<int> gen(1, m - 1), coin(0, 1);
  std::vector<Crossing> word;
  for (int i = 0; i < length; ++i) word.push_back({gen(rng), coin(rng) ? 1 : -1});
  return BraidWord(m, std::move(word));
}

// Substitutes z_j -> images[j-1] into a group ring element.
GroupRingElement substitute(const GroupRingElement& x, const std::vector<FreeWord>& images) {
  GroupRingElement out;
  for (const auto& [w, c] : x.terms()) {
    FreeWord img;
    for (const auto& l : w.letters()) img *= l.exp > 0 ? images[l.index - 1] : images[l.index - 1].inverse();
    out += el(img) * GroupRingElement(c.get_si());
  }
  return out;
}

}  // namespace

TEST_CASE("free words reduce") {
  CHECK(FreeWord({{1, 1}, {2, 1}, {2, -1}, {1, -1}}).is_identity());
  CHECK((g(1) * g(2) * g(1, -1)).to_string() == "z1 z2 z1^-1");
  CHECK(FreeWord{}.to_string() == "1");
  CHECK((g(1) * g(2)).inverse() == g(2, -1) * g(1, -1));
  CHECK((g(1) * g(2, -1) * g(3)).exponent_sum() == 1);
}

TEST_CASE("artin_action examples") {
  const auto s1 = parse_braid("1");
  CHECK(artin_action(s1, 1) == g(1) * g(2) * g(1, -1));
  CHECK(artin_action(s1, 2) == g(1));
  // Three applications send z2 to z1 z2 z1 z2^-1 z1^-1; z1 z2 z1^-1 is the image under sigma_1^2.
  CHECK(artin_action(parse_braid("1 1 1"), 2) == g(1) * g(2) * g(1) * g(2, -1) * g(1, -1));
  CHECK(artin_action(parse_braid("1 1"), 2) == g(1) * g(2) * g(1, -1));
  CHECK(artin_action(parse_braid("-1"), 1) == g(2));
  CHECK(artin_action(parse_braid("-1"), 2) == g(2, -1) * g(1) * g(2));
}

TEST_CASE("property: Artin action is a homomorphism") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const int m = 2 + trial % 3;
    const auto b1 = random_braid(rng, m, 4), b2 = random_braid(rng, m, 4);
    std::vector<Crossing> w = b1.word();
    w.insert(w.end(), b2.word().begin(), b2.word().end());
    const BraidWord both(m, w);
    // (b1 b2)(z_i) = b1(b2(z_i)).
    const auto outer = artin_images(b1);
    for (int i = 1; i <= m; ++i) {
      FreeWord expected;
      const FreeWord inner = artin_action(b2, i);
      for (const auto& l : inner.letters())
        expected *= l.exp > 0 ? outer[l.index - 1] : outer[l.index - 1].inverse();
      CHECK(artin_action(both, i) == expected);
    }
    // Inverse braid undoes the action.
    const auto id = artin_images(BraidWord(m, {}));
    std::vector<Crossing> inv;
    for (auto it = b1.word().rbegin(); it != b1.word().rend(); ++it) inv.push_back({it->generator, -it->sign});
    std::vector<Crossing> loop = b1.word();
    loop.insert(loop.end(), inv.begin(), inv.end());
    CHECK(artin_images(BraidWord(m, loop)) == id);
    // The product z_1 ... z_m is fixed.
    FreeWord prod, image;
    const auto imgs = artin_images(b1);
    for (int i = 1; i <= m; ++i) {
      prod *= g(i);
      image *= imgs[i - 1];
    }
    CHECK(prod == image);
  }
}

TEST_CASE("fox_derivative examples") {
  CHECK(fox_derivative(g(1) * g(2) * g(1, -1), 1) == 1 - el(g(1) * g(2) * g(1, -1)));
  CHECK(fox_derivative(g(1), 2).is_zero());
  CHECK(fox_derivative(g(1, -1), 1) == -el(g(1, -1)));
  CHECK((1 - el(g(1) * g(2) * g(1, -1))).to_string() == "1 - z1 z2 z1^-1");
}

TEST_CASE("property: fundamental identity") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = 1 + trial % 4;
    const auto w = random_word(rng, m, trial % 15);
    GroupRingElement lhs;
    for (int j = 1; j <= m; ++j) lhs += fox_derivative(w, j) * (el(g(j)) - 1);
    CHECK(lhs == el(w) - 1);
  }
}

TEST_CASE("property: Leibniz rule and augmentation") {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 50; ++trial) {
    const auto u = random_word(rng, 3, 6), v = random_word(rng, 3, 6);
    for (int i = 1; i <= 3; ++i) CHECK(fox_derivative(u * v, i) == fox_derivative(u, i) + el(u) * fox_derivative(v, i));
    const auto x = el(u, 2) - el(v, 3) + 1, y = el(v) + el(u, -1);
    CHECK((x * y).augmentation() == x.augmentation() * y.augmentation());
  }
}

TEST_CASE("psi_matrix") {
  const auto p = psi_matrix(parse_braid("1"));
  CHECK(p[0][0] == 1 - el(g(1) * g(2) * g(1, -1)));
  CHECK(p[0][1] == el(g(1)));
  CHECK(p[1][0] == GroupRingElement(1));
  CHECK(p[1][1].is_zero());
  const auto id = psi_matrix(BraidWord(3, {}));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(id[i][j] == GroupRingElement(i == j ? 1 : 0));
}

TEST_CASE("property: chain rule for psi") {
  // psi(b1 b2)_{ij} = sum_k b1(d b2(z_i) / d z_k) psi(b1)_{kj}.
  std::mt19937 rng(53);
  for (int trial = 0; trial < 10; ++trial) {
    const auto b1 = random_braid(rng, 3, 3), b2 = random_braid(rng, 3, 3);
    std::vector<Crossing> w = b1.word();
    w.insert(w.end(), b2.word().begin(), b2.word().end());
    const auto both = psi_matrix(BraidWord(3, w));
    const auto p1 = psi_matrix(b1), p2 = psi_matrix(b2);
    const auto img = artin_images(b1);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        GroupRingElement sum;
        for (int k = 0; k < 3; ++k) sum += substitute(p2[i][k], img) * p1[k][j];
        CHECK(both[i][j] == sum);
      }
  }
}

TEST_CASE("relators and Ja = psi - I") {
  for (const auto& e : bundled_corpus()) {
    const auto b = e.braid();
    const auto rel = closure_relators(b);
    const auto psi = psi_matrix(b);
    const int m = b.strands();
    for (int i = 0; i < m; ++i) {
      CHECK(rel[i] == artin_action(b, i + 1) * g(i + 1, -1));
      for (int j = 0; j < m; ++j) {
        const GroupRingElement ja = fox_derivative(rel[i], j + 1);
        // d(r_i)/dz_j = psi_ij - beta(z_i) z_i^{-1} delta_ij, which is psi_ij - 1 after relators are set to 1.
        const GroupRingElement expected = psi[i][j] - (i == j ? el(rel[i]) : GroupRingElement{});
        CHECK(ja == expected);
        CHECK(ja.abelianize() == (psi[i][j] - (i == j ? GroupRingElement(1) : GroupRingElement{})).abelianize());
      }
    }
  }
}

TEST_CASE("abelianization is the transposed Burau specialization") {
  for (const auto& e : bundled_corpus()) {
    const auto b = e.braid();
    const auto check = abelianize_check(b);
    CHECK(check.burau == classical_specialization(rho(b)).transposed());
    CHECK(check.alexander == alexander(b));
    if (e.alexander) CHECK(check.alexander == parse_laurent(*e.alexander));
  }
}

TEST_CASE("abelianize_check examples") {
  CHECK(abelianize_check(parse_braid("1 1 1")).alexander == t(1) - 1 + t(-1));
  CHECK(abelianize_check(parse_braid("1")).alexander == LaurentPoly(1));
  CHECK(abelianize_check(parse_braid("1 -2 1 -2")).alexander == 3 - t(1) - t(-1));
  CHECK(abelianize_check(parse_braid("1 1 1 1 1")).alexander == t(2) - t(1) + 1 - t(-1) + t(-2));
}
