#include "qjones/verma_oracle.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <limits>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/float128.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include "qjones/error.hpp"

namespace qjones {

LaurentPoly braiding_coeff(int sign, int n1, int n2, int l, int n) {
  if (l < 0 || n1 < 0 || n2 < 0) throw DomainError("braiding indices must be nonnegative");
  const std::int64_t nm1 = n - 1;
  if (sign > 0) {
    if (l > n1) return {};
    LaurentPoly c = q_int_binom(n1, l, 1) * q_pochhammer(QExponent::q(nm1 - n2), -1, l, 0);
    return c.times_monomial(QExponent{-nm1 * nm1} + QExponent::q(std::int64_t{n2} * (l - n1) + nm1 * n2));
  }
  if (l > n2) return {};
  LaurentPoly c = q_int_binom(n2, l, -1) * q_pochhammer(QExponent::q(n1 - nm1), 1, l, 0);
  return c.times_monomial(QExponent{nm1 * nm1} + QExponent::q(std::int64_t{n1} * (n2 - l) - nm1 * n1));
}

// ---------------------------------------------------------------------------
// Module structure

LaurentPoly quantum_integer(int n) {
  if (n < 0) return -quantum_integer(-n);
  LaurentPoly out;
  for (int j = 0; j < n; ++j) out += LaurentPoly::monomial(1, QExponent::v(n - 1 - 2 * j));
  return out;
}

LaurentPoly VermaAction::k_weight(int i) const { return LaurentPoly::monomial(1, QExponent::v(n_ - 1 - 2 * i)); }

LaurentPoly VermaAction::e_coeff(int i) const { return i <= 0 ? LaurentPoly{} : q_integer(i, 1); }

LaurentPoly VermaAction::f_coeff(int i) const {
  return quantum_integer(n_ - 1 - i).times_monomial(QExponent::v(i));
}

bool VermaAction::check_relations(int max_index) const {
  const LaurentPoly q = LaurentPoly::q_power(1);
  for (int i = 0; i <= max_index; ++i) {
    // K E e_i = q E K e_i
    if (i > 0 && !(k_weight(i - 1) * e_coeff(i) == q * e_coeff(i) * k_weight(i))) return false;
    // K F e_i = q^{-1} F K e_i
    if (!(q * k_weight(i + 1) * f_coeff(i) == f_coeff(i) * k_weight(i))) return false;
    // (EF - FE) e_i = [N-1-2i] e_i
    const LaurentPoly ef = e_coeff(i + 1) * f_coeff(i);
    const LaurentPoly fe = i > 0 ? f_coeff(i - 1) * e_coeff(i) : LaurentPoly{};
    if (!(ef - fe == quantum_integer(n_ - 1 - 2 * i))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Exact tensor states

namespace {

using SparseMap = std::map<std::vector<int>, LaurentPoly>;

class CoeffCache {
 public:
  explicit CoeffCache(int n) : n_(n) {}
  const LaurentPoly& get(int sign, int n1, int n2, int l) {
    const auto key = std::make_tuple(sign, n1, n2, l);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, braiding_coeff(sign, n1, n2, l, n_)).first;
    return it->second;
  }

 private:
  int n_;
  std::map<std::tuple<int, int, int, int>, LaurentPoly> cache_;
};

void add_to(SparseMap& m, std::vector<int> key, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = m.try_emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
  }
}

SparseMap apply_gate(const SparseMap& x, int sign, int pos, CoeffCache& cache) {
  SparseMap out;
  const auto a = static_cast<std::size_t>(pos - 1);
  for (const auto& [state, c] : x) {
    const int n1 = state[a];
    const int n2 = state[a + 1];
    const int top = sign > 0 ? n1 : n2;
    for (int l = 0; l <= top; ++l) {
      const LaurentPoly& g = cache.get(sign, n1, n2, l);
      if (g.is_zero()) continue;
      std::vector<int> t = state;
      if (sign > 0) {
        t[a] = n2 + l;
        t[a + 1] = n1 - l;
      } else {
        t[a] = n2 - l;
        t[a + 1] = n1 + l;
      }
      add_to(out, std::move(t), c * g);
    }
  }
  return out;
}

SparseMap to_map(const TensorState& x) {
  SparseMap m;
  for (const auto& [k, c] : x) add_to(m, k, c);
  return m;
}

TensorState from_map(const SparseMap& m) { return {m.begin(), m.end()}; }

bool check_on_basis(int cap, int factors, const std::function<bool(const SparseMap&)>& check) {
  std::vector<int> state(static_cast<std::size_t>(factors), 0);
  for (;;) {
    SparseMap basis;
    basis.emplace(state, LaurentPoly(1));
    if (!check(basis)) return false;
    int p = 0;
    while (p < factors && ++state[p] == cap) state[p++] = 0;
    if (p == factors) return true;
  }
}

}  // namespace

TensorState apply_braiding(const TensorState& x, int sign, int pos, int n) {
  CoeffCache cache(n);
  return from_map(apply_gate(to_map(x), sign, pos, cache));
}

bool check_braid_relation(int n, int cap) {
  if (cap < 1) throw DomainError("cap must be positive");
  CoeffCache cache(n);
  return check_on_basis(cap, 3, [&](const SparseMap& e) {
    const SparseMap lhs = apply_gate(apply_gate(apply_gate(e, 1, 1, cache), 1, 2, cache), 1, 1, cache);
    const SparseMap rhs = apply_gate(apply_gate(apply_gate(e, 1, 2, cache), 1, 1, cache), 1, 2, cache);
    return lhs == rhs;
  });
}

bool check_braiding_inverse(int n, int cap) {
  if (cap < 1) throw DomainError("cap must be positive");
  CoeffCache cache(n);
  return check_on_basis(cap, 2, [&](const SparseMap& e) {
    return apply_gate(apply_gate(e, 1, 1, cache), -1, 1, cache) == e &&
           apply_gate(apply_gate(e, -1, 1, cache), 1, 1, cache) == e;
  });
}

LaurentPoly state_sum_jones(const BraidWord& b, int n) {
  require_knot(b);
  if (n < 1) throw DomainError("state sum needs N >= 1");
  const int m = b.strands();
  CoeffCache cache(n);
  LaurentPoly trace;
  std::vector<int> start(static_cast<std::size_t>(m), 0);
  for (;;) {
    SparseMap x;
    x.emplace(start, LaurentPoly(1));
    for (auto it = b.word().rbegin(); it != b.word().rend() && !x.empty(); ++it) {
      x = apply_gate(x, it->sign, it->generator, cache);
    }
    const auto diag = x.find(start);
    if (diag != x.end()) {
      // K^{-1} on the traced factors 2..m.
      std::int64_t weight = 0;
      for (int i = 1; i < m; ++i) weight += 1 - n + 2 * start[static_cast<std::size_t>(i)];
      trace += diag->second.times_monomial(QExponent::v(weight));
    }
    int p = 1;
    while (p < m && ++start[static_cast<std::size_t>(p)] == n) start[static_cast<std::size_t>(p++)] = 0;
    if (p == m) break;
  }
  const std::int64_t framing = std::int64_t{b.writhe()} * (std::int64_t{n} * n - 1);  // in v^{1/2} units
  LaurentPoly j = trace.times_monomial(QExponent{framing});
  if (!j.is_q_integral()) throw Error("state sum landed off the integer q-lattice");
  return j;
}

// ---------------------------------------------------------------------------
// Complex state sum at q = exp(2 pi i / N)

namespace {

using Float128 = boost::multiprecision::float128;
// Fixed-precision MPFR types keep no global state, so concurrent calls are safe.
template <unsigned Digits10>
using MpReal = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<Digits10>,
                                             boost::multiprecision::et_off>;

template <class T>
struct Cx {
  T re{0}, im{0};

  Cx() = default;
  Cx(T r) : re(std::move(r)) {}  // NOLINT
  Cx(T r, T i) : re(std::move(r)), im(std::move(i)) {}

  Cx& operator+=(const Cx& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  friend Cx operator+(Cx a, const Cx& b) { return a += b; }
  friend Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
  friend Cx operator*(const Cx& a, const Cx& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  bool is_zero() const { return re == 0 && im == 0; }
  T modulus() const {
    using std::sqrt;
    return sqrt(re * re + im * im);
  }
};

// Gate coefficients without the q^{-+(N-1)^2/4} factors, which are collected
// into one global power of q. With `magnitudes` set every table holds |.|
// taken after the fact, which turns the sum into a bound on sum |path|.
template <class T>
class NumericGates {
 public:
  using C = Cx<T>;

  NumericGates(int n, bool magnitudes) : n_(n), powers_(static_cast<std::size_t>(n)) {
    using std::cos;
    using std::sin;
    const T two_pi = 2 * boost::math::constants::pi<T>();
    for (int e = 0; e < n; ++e) {
      const T t = two_pi * e / n;
      powers_[e] = C(cos(t), sin(t));
    }
    // Gaussian binomials in x = q^{-1} (for b_+) and x = q (for b_-).
    gauss_qinv_.assign(static_cast<std::size_t>(n) * n, C{});
    gauss_q_.assign(static_cast<std::size_t>(n) * n, C{});
    for (int a = 0; a < n; ++a) {
      at(gauss_qinv_, a, 0) = at(gauss_q_, a, 0) = C(T(1));
      for (int l = 1; l <= a; ++l) {
        const C keep_q = l <= a - 1 ? at(gauss_q_, a - 1, l) : C{};
        const C keep_qinv = l <= a - 1 ? at(gauss_qinv_, a - 1, l) : C{};
        at(gauss_q_, a, l) = at(gauss_q_, a - 1, l - 1) + zeta(l) * keep_q;
        at(gauss_qinv_, a, l) = at(gauss_qinv_, a - 1, l - 1) + zeta(-l) * keep_qinv;
      }
    }
    // Pochhammer prefixes; a factor (1 - zeta^{multiple of N}) is an exact zero,
    // which the callers exclude through the W_N range test.
    poch_plus_.assign(static_cast<std::size_t>(n) * n, C{});
    poch_minus_.assign(static_cast<std::size_t>(n) * n, C{});
    for (int a = 0; a < n; ++a) {
      at(poch_plus_, a, 0) = at(poch_minus_, a, 0) = C(T(1));
      for (int l = 1; l < n; ++l) {
        at(poch_plus_, a, l) = at(poch_plus_, a, l - 1) * one_minus(n - 1 - a - (l - 1));
        at(poch_minus_, a, l) = at(poch_minus_, a, l - 1) * one_minus(a + (l - 1) - (n - 1));
      }
    }
    if (magnitudes) {
      for (auto* t : {&gauss_q_, &gauss_qinv_, &poch_plus_, &poch_minus_})
        for (auto& c : *t) c = C(c.modulus());
      for (auto& p : powers_) p = C(T(1));
    }
  }

  C zeta(std::int64_t e) const {
    std::int64_t r = e % n_;
    if (r < 0) r += n_;
    return powers_[static_cast<std::size_t>(r)];
  }

  /// b_+ : e_{n1} (x) e_{n2} -> e_{n2+l} (x) e_{n1-l}; zero unless n2 + l < N.
  C plus(int n1, int n2, int l) const {
    if (l > n1 || n2 + l >= n_) return {};
    return at(gauss_qinv_, n1, l) * zeta(std::int64_t{n2} * (l - n1) + std::int64_t{n_ - 1} * n2) *
           at(poch_plus_, n2, l);
  }
  /// b_- : e_{n1} (x) e_{n2} -> e_{n2-l} (x) e_{n1+l}; zero unless n1 + l < N.
  C minus(int n1, int n2, int l) const {
    if (l > n2 || n1 + l >= n_) return {};
    return at(gauss_q_, n2, l) * zeta(std::int64_t{n1} * (n2 - l) - std::int64_t{n_ - 1} * n1) *
           at(poch_minus_, n1, l);
  }

 private:
  C one_minus(std::int64_t e) const { return C(T(1)) - zeta(e); }

  C& at(std::vector<C>& t, int a, int l) const { return t[static_cast<std::size_t>(a) * n_ + l]; }
  const C& at(const std::vector<C>& t, int a, int l) const { return t[static_cast<std::size_t>(a) * n_ + l]; }

  int n_;
  std::vector<C> powers_;
  std::vector<C> gauss_qinv_, gauss_q_, poch_plus_, poch_minus_;
};

template <class T>
struct Entry {
  std::size_t index;
  Cx<T> value;
};

template <class T>
class NumericSum {
 public:
  using C = Cx<T>;

  NumericSum(const BraidWord& b, int n, bool magnitudes)
      : b_(b), n_(n), m_(b.strands()), gates_(n, magnitudes), stride_(static_cast<std::size_t>(m_)) {
    std::size_t s = 1;
    for (int i = m_ - 1; i >= 0; --i) {
      stride_[static_cast<std::size_t>(i)] = s;
      s *= static_cast<std::size_t>(n);
    }
    dense_.assign(s, C{});
    scratch_.assign(s, C{});
    mark_.assign(s, false);
  }

  C run() {
    const auto& w = b_.word();
    const std::size_t h = w.size() / 2;
    C total;
    std::vector<int> start(static_cast<std::size_t>(m_), 0);
    for (;;) {
      const std::size_t idx = encode(start);
      // Right part G_{h+1} ... G_k applied to e_start (G_k first).
      std::vector<Entry<T>> right{{idx, C(T(1))}};
      for (std::size_t j = w.size(); j-- > h;) right = apply(right, w[j], false);
      // Left part as a row: (G_1 ... G_h)^T e_start, G_1^T first.
      std::vector<Entry<T>> left{{idx, C(T(1))}};
      for (std::size_t j = 0; j < h; ++j) left = apply(left, w[j], true);
      C diag;
      for (const auto& e : right) dense_[e.index] = e.value;
      for (const auto& e : left) diag += e.value * dense_[e.index];
      for (const auto& e : right) dense_[e.index] = C{};
      std::int64_t weight = 0;
      for (int i = 1; i < m_; ++i) weight += start[static_cast<std::size_t>(i)];
      total += diag * gates_.zeta(weight);
      int p = 1;
      while (p < m_ && ++start[static_cast<std::size_t>(p)] == n_) start[static_cast<std::size_t>(p++)] = 0;
      if (p == m_) break;
    }
    // v^{w(N^2-1)/2} q^{-+(N-1)^2/4 per crossing} v^{(m-1)(1-N)} = q^{(N-1)(w-m+1)/2}.
    const std::int64_t twice = std::int64_t{n_ - 1} * (b_.writhe() - m_ + 1);
    return total * gates_.zeta(twice / 2);
  }

 private:
  std::size_t encode(const std::vector<int>& s) const {
    std::size_t idx = 0;
    for (int i = 0; i < m_; ++i) idx += static_cast<std::size_t>(s[static_cast<std::size_t>(i)]) * stride_[static_cast<std::size_t>(i)];
    return idx;
  }
  int digit(std::size_t idx, int i) const {
    return static_cast<int>((idx / stride_[static_cast<std::size_t>(i)]) % static_cast<std::size_t>(n_));
  }

  void put(std::size_t idx, const C& v) {
    if (!mark_[idx]) {
      mark_[idx] = true;
      touched_.push_back(idx);
    }
    scratch_[idx] += v;
  }

  std::vector<Entry<T>> apply(const std::vector<Entry<T>>& x, const Crossing& c, bool transposed) {
    const int a = c.generator - 1;
    const std::size_t sa = stride_[static_cast<std::size_t>(a)];
    const std::size_t sb = stride_[static_cast<std::size_t>(a + 1)];
    for (const auto& e : x) {
      const int t1 = digit(e.index, a);
      const int t2 = digit(e.index, a + 1);
      const std::size_t base = e.index - static_cast<std::size_t>(t1) * sa - static_cast<std::size_t>(t2) * sb;
      auto emit = [&](int u1, int u2, const C& g) {
        if (g.is_zero()) return;
        put(base + static_cast<std::size_t>(u1) * sa + static_cast<std::size_t>(u2) * sb, e.value * g);
      };
      if (!transposed) {
        if (c.sign > 0) {
          for (int l = 0; l <= t1; ++l) emit(t2 + l, t1 - l, gates_.plus(t1, t2, l));
        } else {
          for (int l = 0; l <= t2; ++l) emit(t2 - l, t1 + l, gates_.minus(t1, t2, l));
        }
      } else if (c.sign > 0) {
        // <(t1,t2)| b_+ |(s1,s2)> with t1 = s2 + l, t2 = s1 - l.
        for (int l = 0; l <= t1 && t2 + l < n_; ++l) emit(t2 + l, t1 - l, gates_.plus(t2 + l, t1 - l, l));
      } else {
        // t1 = s2 - l, t2 = s1 + l.
        for (int l = 0; l <= t2 && t1 + l < n_; ++l) emit(t2 - l, t1 + l, gates_.minus(t2 - l, t1 + l, l));
      }
    }
    std::vector<Entry<T>> out;
    out.reserve(touched_.size());
    for (auto idx : touched_) {
      if (!scratch_[idx].is_zero()) out.push_back({idx, scratch_[idx]});
      scratch_[idx] = C{};
      mark_[idx] = false;
    }
    touched_.clear();
    return out;
  }

  const BraidWord& b_;
  int n_;
  int m_;
  NumericGates<T> gates_;
  std::vector<std::size_t> stride_;
  std::vector<C> dense_;
  std::vector<C> scratch_;
  std::vector<bool> mark_;
  std::vector<std::size_t> touched_;
};

template <class T>
std::complex<double> to_complex(const Cx<T>& c) {
  return {static_cast<double>(c.re), static_cast<double>(c.im)};
}

// Rounding error of a path product of length L is at most about L eps |path|,
// so the accumulated error is bounded by (k + m + 8) eps A.
bool accurate(double bound, double eps, std::size_t ops, std::complex<double> value, double tolerance) {
  return bound * eps * static_cast<double>(ops) <= tolerance * std::abs(value);
}

}  // namespace

NumericStateSum numeric_state_sum_detailed(const BraidWord& b, int n, double tolerance) {
  require_knot(b);
  if (n < 1) throw DomainError("state sum needs N >= 1");
  if (n == 1) return {1.0, 1.0, 53};
  double states = 1.0;
  for (int i = 0; i < b.strands(); ++i) states *= n;
  if (states > 2e7) throw DomainError("numeric state sum: N^m too large for the dense index");

  const double bound = NumericSum<double>(b, n, true).run().re;
  const std::size_t ops = b.length() + static_cast<std::size_t>(b.strands()) + 8;

  NumericStateSum out{to_complex(NumericSum<double>(b, n, false).run()), bound, 53};
  if (accurate(bound, std::numeric_limits<double>::epsilon(), ops, out.value, tolerance)) return out;

  out.value = to_complex(NumericSum<Float128>(b, n, false).run());
  out.precision_bits = 113;
  if (accurate(bound, std::ldexp(1.0, -112), ops, out.value, tolerance)) return out;

  const auto attempt = [&](auto zero, int bits) {
    using T = decltype(zero);
    out.value = to_complex(NumericSum<T>(b, n, false).run());
    out.precision_bits = bits;
    return accurate(bound, std::ldexp(1.0, 1 - bits), ops, out.value, tolerance);
  };
  if (attempt(MpReal<60>{}, 200) || attempt(MpReal<120>{}, 399) || attempt(MpReal<240>{}, 797) ||
      attempt(MpReal<480>{}, 1595) || attempt(MpReal<960>{}, 3189)) {
    return out;
  }
  throw UnterminatedError("numeric state sum: cancellation beyond 3000 bits");
}

std::complex<double> numeric_state_sum(const BraidWord& b, int n) {
  return numeric_state_sum_detailed(b, n).value;
}

}  // namespace qjones
