#pragma once

// Right-multiplication engine for powers of an element of A_eps followed by
// an evaluation map. Only (r_j, d_j) of the accumulated monomial influence both
// the reordering q-power of later products and the final evaluation, so the
// b-exponents are dropped from the state.

#include <cstdint>
#include <map>
#include <optional>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qjones/error.hpp"
#include "qjones/exactpoly.hpp"
#include "qjones/qweyl.hpp"

namespace qjones::detail {

using Key = std::vector<std::int32_t>;

struct KeyHash {
  std::size_t operator()(const Key& k) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto v : k) {
      h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(v));
      h *= 1099511628211ULL;
    }
    return h;
  }
};

/// One monomial of a right factor: sparse (0-based index, powers), coefficient, grade.
struct FactorTerm {
  std::vector<std::pair<int, GeneratorPowers>> entries;
  LaurentPoly coef;
  int grade = 0;
};

inline void append_terms(std::vector<FactorTerm>& out, const AlgebraElement& x, int grade) {
  for (const auto& [m, c] : x.terms()) {
    FactorTerm t;
    for (const auto& e : m.entries()) t.entries.emplace_back(e.index - 1, e.powers);
    t.coef = c;
    t.grade = grade;
    out.push_back(std::move(t));
  }
}

/// Generic q: coefficients in Z[q^{+-1/4}], evaluation E_N (z = q^{N-1}).
class GenericRing {
 public:
  using Value = LaurentPoly;

  explicit GenericRing(int n) : n_(n) {}

  Value lift(const LaurentPoly& c) const { return c; }
  Value zero() const { return {}; }
  Value one() const { return 1; }
  static bool is_zero(const Value& v) { return v.is_zero(); }
  static void add(Value& acc, const Value& v) { acc += v; }
  static Value mul(const Value& a, const Value& b) { return a * b; }
  Value scaled_q(const Value& v, std::int64_t e) const { return v.times_monomial(QExponent::q(e)); }
  std::int32_t reduce_r(std::int32_t r) const { return r; }
  bool prune_d(std::int32_t) const { return false; }
  Value factor(int sign, int r, int d) const {
    return evaluation_factor(sign, r, d).substitute_z(QExponent::q(n_ - 1));
  }
  Value finish(const Value& v) const { return v; }

 private:
  int n_;
};

/// Z[q]/(q^N - 1) with E_0 (z = q^{-1}); the image in Z[zeta_N] is taken at the end.
/// Monomials with some d_j >= N are dropped: their E_0-image and that of every
/// right multiple contains a full period of factors (1 - q^{i}), hence vanishes at zeta_N.
class CyclicRing {
 public:
  using Value = std::vector<mpz_class>;

  explicit CyclicRing(int order) : order_(order) {}

  Value zero() const { return Value(static_cast<std::size_t>(order_)); }
  Value one() const {
    Value v = zero();
    v[0] = 1;
    return v;
  }
  Value lift(const LaurentPoly& c) const {
    Value v = zero();
    for (const auto& t : c.terms()) {
      if (t.exp.z != 0) throw Error("cyclic lift of a polynomial in z");
      v[index(QExponent{t.exp.q4}.q_power())] += t.coef;
    }
    return v;
  }
  static bool is_zero(const Value& v) {
    for (const auto& c : v)
      if (c != 0) return false;
    return true;
  }
  static void add(Value& acc, const Value& v) {
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += v[i];
  }
  Value mul(const Value& a, const Value& b) const {
    Value out = zero();
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (b[j] == 0) continue;
        std::size_t t = i + j;
        if (t >= n) t -= n;
        out[t] += a[i] * b[j];
      }
    }
    return out;
  }
  Value scaled_q(const Value& v, std::int64_t e) const {
    Value out = zero();
    const std::size_t shift = index(e);
    for (std::size_t i = 0; i < v.size(); ++i) {
      std::size_t t = i + shift;
      if (t >= v.size()) t -= v.size();
      out[t] = v[i];
    }
    return out;
  }
  std::int32_t reduce_r(std::int32_t r) const { return r % order_; }
  bool prune_d(std::int32_t d) const { return d >= order_; }
  Value factor(int sign, int r, int d) const {
    return lift(evaluation_factor(sign, r, d).substitute_z(QExponent::q(-1)));
  }
  CyclotomicInt finish(const Value& v) const { return CyclotomicInt::from_coefficients(order_, v); }

 private:
  std::size_t index(std::int64_t e) const {
    std::int64_t r = e % order_;
    if (r < 0) r += order_;
    return static_cast<std::size_t>(r);
  }

  int order_;
};

/// Z[q^{+-1}]/(P) for a modulus P with unit leading and constant coefficients,
/// with E_0. A Laurent polynomial is divisible by P iff its image is zero.
class ModularRing {
 public:
  using Value = std::vector<mpz_class>;

  explicit ModularRing(std::vector<mpz_class> modulus) : p_(std::move(modulus)) {
    while (!p_.empty() && p_.back() == 0) p_.pop_back();
    if (p_.size() < 2 || (p_.back() != 1 && p_.back() != -1) || (p_.front() != 1 && p_.front() != -1)) {
      throw DomainError("modulus needs unit leading and constant coefficients and positive degree");
    }
    deg_ = p_.size() - 1;
    // q * (-(p_1 + p_2 q + ... + p_deg q^{deg-1}) / p_0) = 1 mod P.
    q_inv_ = zero();
    for (std::size_t i = 1; i < p_.size(); ++i) q_inv_[i - 1] = -p_[i] * p_.front();
  }

  std::size_t degree() const { return deg_; }
  Value zero() const { return Value(deg_); }
  Value one() const {
    Value v = zero();
    v[0] = 1;
    return v;
  }
  Value lift(const LaurentPoly& c) const {
    Value out = zero();
    for (const auto& t : c.terms()) {
      if (t.exp.z != 0) throw Error("modular lift of a polynomial in z");
      Value m = power(QExponent{t.exp.q4}.q_power());
      for (auto& x : m) x *= t.coef;
      add(out, m);
    }
    return out;
  }
  static bool is_zero(const Value& v) {
    for (const auto& c : v)
      if (c != 0) return false;
    return true;
  }
  static void add(Value& acc, const Value& v) {
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += v[i];
  }
  Value mul(const Value& a, const Value& b) const {
    std::vector<mpz_class> raw(2 * deg_);
    for (std::size_t i = 0; i < deg_; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < deg_; ++j) raw[i + j] += a[i] * b[j];
    }
    return reduce(std::move(raw));
  }
  Value scaled_q(const Value& v, std::int64_t e) const { return e == 0 ? v : mul(v, power(e)); }
  std::int32_t reduce_r(std::int32_t r) const { return r; }
  bool prune_d(std::int32_t) const { return false; }
  Value factor(int sign, int r, int d) const {
    return lift(evaluation_factor(sign, r, d).substitute_z(QExponent::q(-1)));
  }
  /// Remainder as a polynomial in q of degree < deg P.
  LaurentPoly finish(const Value& v) const {
    LaurentPoly out;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) out += LaurentPoly::monomial(v[i], QExponent::q(static_cast<std::int64_t>(i)));
    return out;
  }

 private:
  Value reduce(std::vector<mpz_class> raw) const {
    const mpz_class& lead = p_.back();
    for (std::size_t i = raw.size(); i-- > deg_;) {
      if (raw[i] == 0) continue;
      const mpz_class c = raw[i] * lead;  // lead = +-1 is its own inverse
      for (std::size_t j = 0; j <= deg_; ++j) raw[i - deg_ + j] -= c * p_[j];
    }
    raw.resize(deg_);
    return raw;
  }
  const Value& power(std::int64_t e) const {
    auto it = powers_.find(e);
    if (it != powers_.end()) return it->second;
    Value v;
    if (e >= 0) {
      std::vector<mpz_class> raw(std::max<std::size_t>(deg_, static_cast<std::size_t>(e) + 1));
      raw[static_cast<std::size_t>(e)] = 1;
      v = reduce(std::move(raw));
    } else {
      v = mul(power(e + 1), q_inv_);
    }
    return powers_.emplace(e, std::move(v)).first->second;
  }

  std::vector<mpz_class> p_;
  std::size_t deg_ = 0;
  Value q_inv_;
  mutable std::map<std::int64_t, Value> powers_;
};

/// Sparse state sum_key coef * (monomial with the key's (r_j, d_j)).
/// Key layout: [r_1, d_1, ..., r_k, d_k, extra...]; `extra` slots are owned by the caller.
template <class Ring>
class MonomialState {
 public:
  using Value = typename Ring::Value;
  using Map = std::unordered_map<Key, Value, KeyHash>;

  MonomialState(const Ring& ring, std::vector<int> signs, int extra)
      : ring_(&ring), signs_(std::move(signs)), extra_(extra) {}

  void set_unit() {
    terms_.clear();
    terms_.emplace(Key(2 * signs_.size() + static_cast<std::size_t>(extra_), 0), ring_->one());
  }
  const Map& terms() const { return terms_; }
  Map& terms() { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::size_t extra_offset() const { return 2 * signs_.size(); }

  /// Right product of one state entry by one factor monomial: new key and the
  /// reordering q-exponent, or false when the result is pruned.
  bool multiply_key(Key& key, const FactorTerm& f, std::int64_t& e) const {
    e = 0;
    for (const auto& [j, p] : f.entries) {
      auto& r = key[2 * static_cast<std::size_t>(j)];
      auto& d = key[2 * static_cast<std::size_t>(j) + 1];
      e += reorder_q_exponent(signs_[static_cast<std::size_t>(j)], GeneratorPowers{0, r, d}, p);
      d += p.d;
      if (ring_->prune_d(d)) return false;
      r = ring_->reduce_r(r + p.r);
    }
    return true;
  }

  void accumulate(Map& out, Key key, const Value& v) const {
    if (Ring::is_zero(v)) return;
    auto [it, inserted] = out.try_emplace(std::move(key), v);
    if (!inserted) {
      Ring::add(it->second, v);
      if (Ring::is_zero(it->second)) out.erase(it);
    }
  }

  /// Sum over entries of coef * prod_j E(r_j, d_j), restricted to keys accepted by `keep`.
  template <class Keep>
  Value evaluate(Keep keep) const {
    Value total = ring_->zero();
    for (const auto& [key, coef] : terms_) {
      if (!keep(key)) continue;
      Value v = coef;
      for (std::size_t j = 0; j < signs_.size(); ++j) {
        const int r = key[2 * j];
        const int d = key[2 * j + 1];
        if (r == 0 && d == 0) continue;
        v = ring_->mul(v, factor(signs_[j], r, d));
        if (Ring::is_zero(v)) break;
      }
      Ring::add(total, v);
    }
    return total;
  }
  Value evaluate() const {
    return evaluate([](const Key&) { return true; });
  }

 private:
  const Value& factor(int sign, int r, int d) const {
    const auto k = std::make_tuple(sign, r, d);
    auto it = factor_cache_.find(k);
    if (it == factor_cache_.end()) it = factor_cache_.emplace(k, ring_->factor(sign, r, d)).first;
    return it->second;
  }

  const Ring* ring_;
  std::vector<int> signs_;
  int extra_;
  Map terms_;
  mutable std::map<std::tuple<int, int, int>, Value> factor_cache_;
};

/// Fermionic powers P_n = C^n; grade (if capped) lives in the single extra slot.
template <class Ring>
class PowerSeries {
 public:
  using Value = typename Ring::Value;

  PowerSeries(const Ring& ring, std::vector<int> signs, std::vector<FactorTerm> factor, std::optional<int> max_grade)
      : ring_(ring), state_(ring, std::move(signs), 1), max_grade_(max_grade) {
    for (auto& f : factor) lifted_.push_back({std::move(f), Value{}});
    for (auto& [f, v] : lifted_) v = ring_.lift(f.coef);
    state_.set_unit();
  }

  const MonomialState<Ring>& state() const { return state_; }
  bool exhausted() const { return state_.empty(); }

  /// P_n -> P_{n+1} = P_n * C.
  void step() {
    typename MonomialState<Ring>::Map next;
    const std::size_t g = state_.extra_offset();
    for (const auto& [key, coef] : state_.terms()) {
      for (const auto& [f, fc] : lifted_) {
        if (max_grade_ && key[g] + f.grade > *max_grade_) continue;
        Key k = key;
        std::int64_t e = 0;
        if (!state_.multiply_key(k, f, e)) continue;
        k[g] += f.grade;
        state_.accumulate(next, std::move(k), ring_.scaled_q(ring_.mul(coef, fc), e));
      }
    }
    state_.terms() = std::move(next);
  }

  Value evaluate() const { return state_.evaluate(); }

 private:
  const Ring& ring_;
  MonomialState<Ring> state_;
  std::vector<std::pair<FactorTerm, Value>> lifted_;
  std::optional<int> max_grade_;
};

}  // namespace qjones::detail
