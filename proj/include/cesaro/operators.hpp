#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "cesaro/numeric.hpp"
#include "cesaro/sequence.hpp"

namespace cesaro {

enum class OpKind { Ct, Dphi, Shift, Rt, CtDual };

struct OperatorSpec {
  OpKind kind = OpKind::Ct;
  RealParam t;               // ignored for Dphi/Shift
  unsigned shift_power = 1;  // Shift only

  // t in [0,1]; t = 1 is the classical averaging case and is legal for Ct
  // only. Rt keeps t < 1 (its series form needs it); the dual truncation
  // likewise follows the t < 1 statement of its defining sum.
  void validate() const {
    if (kind == OpKind::Dphi || kind == OpKind::Shift) return;
    const double tv = t.value;
    if (t.exact) {
      if (*t.exact < 0 || *t.exact > 1)
        throw std::invalid_argument("t must lie in [0, 1]");
      if (*t.exact == 1 && kind != OpKind::Ct)
        throw std::invalid_argument("t = 1 is only valid for the averaging operator");
    } else {
      if (!(tv >= 0.0 && tv <= 1.0))
        throw std::invalid_argument("t must lie in [0, 1]");
      if (tv == 1.0 && kind != OpKind::Ct)
        throw std::invalid_argument("t = 1 is only valid for the averaging operator");
    }
  }
};

namespace detail {

template <class S>
typename ScalarOps<S>::Acc real_acc(const real_t<S>& v) {
  if constexpr (std::is_same_v<S, Rational>)
    return v;
  else
    return static_cast<long double>(v);
}

template <class S>
typename ScalarOps<S>::Acc index_acc(std::size_t k) {
  if constexpr (std::is_same_v<S, Rational>)
    return Rational(k);
  else
    return static_cast<long double>(k);
}

}  // namespace detail

// (y)_n = (1/(n+1)) sum_{i<=n} t^{n-i} x_i. The weighted prefix sum obeys
// s_n = t s_{n-1} + x_n, so one pass suffices; accumulation runs in extended
// precision (exact in rational mode).
template <class S>
std::vector<S> apply_ct(const real_t<S>& t, const std::vector<S>& x) {
  using Ops = ScalarOps<S>;
  const auto ta = detail::real_acc<S>(t);
  typename Ops::Acc s{};
  std::vector<S> y(x.size());
  for (std::size_t n = 0; n < x.size(); ++n) {
    s = ta * s + Ops::to_acc(x[n]);
    y[n] = Ops::from_acc(s / detail::index_acc<S>(n + 1));
  }
  return y;
}

// (y)_n = sum_{k<=n} t^k x_{n-k}: the same weighted prefix sum, undivided.
template <class S>
std::vector<S> apply_rt(const real_t<S>& t, const std::vector<S>& x) {
  using Ops = ScalarOps<S>;
  const auto ta = detail::real_acc<S>(t);
  typename Ops::Acc s{};
  std::vector<S> y(x.size());
  for (std::size_t n = 0; n < x.size(); ++n) {
    s = ta * s + Ops::to_acc(x[n]);
    y[n] = Ops::from_acc(s);
  }
  return y;
}

template <class S>
std::vector<S> apply_dphi(const std::vector<S>& x) {
  using Ops = ScalarOps<S>;
  std::vector<S> y(x.size());
  for (std::size_t n = 0; n < x.size(); ++n)
    y[n] = Ops::from_acc(Ops::to_acc(x[n]) / detail::index_acc<S>(n + 1));
  return y;
}

// m zeros prepended, tail dropped past the truncation.
template <class S>
std::vector<S> apply_shift(unsigned m, const std::vector<S>& x) {
  std::vector<S> y(x.size(), S{});
  for (std::size_t n = m; n < x.size(); ++n) y[n] = x[n - m];
  return y;
}

// (y)_i = sum_{k=i}^{N-1} t^{k-i} y_k/(k+1); the input is read as finitely
// supported within its truncation. A genuine tail would contribute at most
// max_k|y_k| * t^{N-i} / ((N+1)(1-t)) to coordinate i.
template <class S>
std::vector<S> apply_ct_dual(const real_t<S>& t, const std::vector<S>& x) {
  using Ops = ScalarOps<S>;
  const auto ta = detail::real_acc<S>(t);
  typename Ops::Acc u{};
  std::vector<S> y(x.size());
  for (std::size_t i = x.size(); i-- > 0;) {
    u = ta * u + Ops::to_acc(x[i]) / detail::index_acc<S>(i + 1);
    y[i] = Ops::from_acc(u);
  }
  return y;
}

// x_n = (n+1) y_n - n t y_{n-1}, with y_{-1} := 0. Total, t = 1 included.
template <class S>
std::vector<S> apply_inverse_ct(const real_t<S>& t, const std::vector<S>& y) {
  using Ops = ScalarOps<S>;
  const auto ta = detail::real_acc<S>(t);
  std::vector<S> x(y.size());
  for (std::size_t n = 0; n < y.size(); ++n) {
    typename Ops::Acc acc = detail::index_acc<S>(n + 1) * Ops::to_acc(y[n]);
    if (n > 0) acc -= detail::index_acc<S>(n) * ta * Ops::to_acc(y[n - 1]);
    x[n] = Ops::from_acc(acc);
  }
  return x;
}

struct ResolventOptions {
  double sing_tol = 1e-12;  // reject nu within sing_tol*max(1,|nu|) of 1/(n+1)
};

namespace detail {

template <class S, class Nu>
void reject_singular_nu(const Nu& nu, std::size_t N, double sing_tol) {
  if constexpr (std::is_same_v<S, Rational>) {
    (void)sing_tol;
    if (nu == 0) return;  // 0 is not a diagonal entry
    const Rational inv = Rational(1) / nu;
    if (inv > 0 && boost::multiprecision::denominator(inv) == 1) {
      const BigInt k = boost::multiprecision::numerator(inv);
      if (k >= 1 && k <= BigInt(N)) {
        const std::size_t n = k.convert_to<std::size_t>() - 1;
        throw std::domain_error(
            "resolvent parameter equals diagonal entry at n = " +
            std::to_string(n));
      }
    }
  } else {
    const double scale = std::max(1.0, std::abs(nu));
    for (std::size_t n = 0; n < N; ++n) {
      if (std::abs(nu - Nu(1.0 / static_cast<double>(n + 1))) <
          sing_tol * scale)
        throw std::domain_error("resolvent parameter too close to diagonal entry at n = " +
                                std::to_string(n));
    }
  }
}

}  // namespace detail

// Forward substitution on the lower-triangular system (C_t - nu I) x = y.
// Default path: each diagonal divide touches one coordinate once, so errors
// do not feed back through near-singular products.
template <class S, class Nu>
std::vector<S> resolvent_forward(const real_t<S>& t, const Nu& nu,
                                 const std::vector<S>& y,
                                 const ResolventOptions& opt = {}) {
  using Ops = ScalarOps<S>;
  detail::reject_singular_nu<S>(nu, y.size(), opt.sing_tol);
  const auto ta = detail::real_acc<S>(t);
  typename Ops::Acc s{};
  const auto nua = Ops::to_acc(S(nu));
  std::vector<S> x(y.size());
  for (std::size_t n = 0; n < y.size(); ++n) {
    const auto np1 = detail::index_acc<S>(n + 1);
    const typename Ops::Acc phi = detail::index_acc<S>(1) / np1;
    const typename Ops::Acc xn =
        (Ops::to_acc(y[n]) - ta * s / np1) / (phi - nua);
    x[n] = Ops::from_acc(xn);
    s = ta * s + xn;
  }
  return x;
}

// Closed-form coordinates of the same resolvent. General law (validated
// against forward substitution, exactly in rational arithmetic):
//   x_n = y_n/(phi_n - nu)
//       + sum_{k=1}^{n} (-1)^k nu^{k-1} t^k y_{n-k}
//         / ((n+1) prod_{j=n-k}^{n} (phi_j - nu)),   phi_j = 1/(j+1).
// The k-th magnitude grows like (t|nu|/dist(nu, [0,1]))^k, so this path is a
// cross-check, not the default.
template <class S, class Nu>
std::vector<S> resolvent_closed_form(const real_t<S>& t, const Nu& nu,
                                     const std::vector<S>& y,
                                     const ResolventOptions& opt = {}) {
  using Ops = ScalarOps<S>;
  detail::reject_singular_nu<S>(nu, y.size(), opt.sing_tol);
  const auto ta = detail::real_acc<S>(t);
  const auto nua = Ops::to_acc(S(nu));
  const auto one = detail::index_acc<S>(1);
  std::vector<S> x(y.size());
  for (std::size_t n = 0; n < y.size(); ++n) {
    const auto np1 = detail::index_acc<S>(n + 1);
    // running prod_{j=n-k..n} (phi_j - nu)
    typename Ops::Acc prod = one / np1 - nua;
    typename Ops::Acc acc = Ops::to_acc(y[n]) / prod;
    typename Ops::Acc coef{};  // (-1)^k nu^{k-1} t^k, built incrementally
    for (std::size_t k = 1; k <= n; ++k) {
      const auto j = detail::index_acc<S>(n - k + 1);
      prod = prod * (one / j - nua);
      if (k == 1)
        coef = typename Ops::Acc(-ta);
      else
        coef = -coef * nua * ta;
      acc += coef * Ops::to_acc(y[n - k]) / (np1 * prod);
    }
    x[n] = Ops::from_acc(acc);
  }
  return x;
}

// Forward substitution for (I - C_t) w = y on {y : y_0 = 0}; the first row is
// vacuous and w_0 := 0 selects the complement of the fixed line.
template <class S>
std::vector<S> solve_i_minus_ct(const real_t<S>& t, const std::vector<S>& y,
                                double zero_tol = 1e-12) {
  using Ops = ScalarOps<S>;
  if (y.empty()) return {};
  if constexpr (std::is_same_v<S, Rational>) {
    (void)zero_tol;
    if (y[0] != 0)
      throw std::domain_error("not in the range: coordinate 0 must vanish");
  } else {
    double scale = 0.0;
    for (const auto& v : y) scale = std::max(scale, ScalarOps<S>::abs(v));
    if (ScalarOps<S>::abs(y[0]) > zero_tol * std::max(1.0, scale))
      throw std::domain_error("not in the range: coordinate 0 must vanish");
  }
  const auto ta = detail::real_acc<S>(t);
  std::vector<S> w(y.size(), S{});
  typename Ops::Acc s{};  // weighted prefix sum of w through n
  for (std::size_t n = 1; n < y.size(); ++n) {
    const auto np1 = detail::index_acc<S>(n + 1);
    const typename Ops::Acc wn =
        (Ops::to_acc(y[n]) + ta * s / np1) * np1 / detail::index_acc<S>(n);
    w[n] = Ops::from_acc(wn);
    s = ta * s + wn;
  }
  return w;
}

// ---- dense matrix (oracle route and CLI dumps) -------------------------------

template <class T>
struct DenseMatrix {
  std::size_t n = 0;
  std::vector<T> a;  // row-major

  explicit DenseMatrix(std::size_t size) : n(size), a(size * size, T{}) {}
  T& at(std::size_t r, std::size_t c) { return a[r * n + c]; }
  const T& at(std::size_t r, std::size_t c) const { return a[r * n + c]; }
};

// entry (n, i) = t^{n-i}/(n+1) for i <= n.
template <class T>
DenseMatrix<T> materialize_ct(const T& t, std::size_t N) {
  if (N == 0) throw std::invalid_argument("matrix needs N >= 1");
  DenseMatrix<T> m(N);
  for (std::size_t r = 0; r < N; ++r) {
    T pw(1);
    const T d = T(1) / T(static_cast<unsigned>(r + 1));
    for (std::size_t c = r + 1; c-- > 0;) {
      m.at(r, c) = pw * d;
      pw = pw * t;
    }
  }
  return m;
}

template <class T, class S>
std::vector<S> matvec(const DenseMatrix<T>& m, const std::vector<S>& x) {
  if (x.size() != m.n) throw std::invalid_argument("matvec size mismatch");
  using Ops = ScalarOps<S>;
  std::vector<S> y(m.n);
  for (std::size_t r = 0; r < m.n; ++r) {
    typename Ops::Acc acc{};
    for (std::size_t c = 0; c <= r && c < m.n; ++c)
      acc += Ops::to_acc(S(x[c] * m.at(r, c)));
    y[r] = Ops::from_acc(acc);
  }
  return y;
}

// ---- Sequence-level dispatch --------------------------------------------------

Sequence apply(const OperatorSpec& op, const Sequence& x);
Sequence apply_inverse(const RealParam& t, const Sequence& y);

struct ComplexParam {
  Complex value;
  std::optional<Rational> exact;  // real rational nu for exact mode
  static ComplexParam parse(const std::string& s);  // "re,im" | "re" | "num/den"
};

// coordinate_route switches from forward substitution to the coordinate law;
// that path amplifies terms like (t|nu|/dist(nu, diag))^k, so it is meant for
// cross-checks on short prefixes, not production solves.
Sequence apply_resolvent(const RealParam& t, const ComplexParam& nu,
                         const Sequence& y, const ResolventOptions& opt = {},
                         bool coordinate_route = false);
Sequence solve_range(const RealParam& t, const Sequence& y,
                     double zero_tol = 1e-12);

struct MatrixAny {
  Mode mode;
  DenseMatrix<double> f{0};
  DenseMatrix<Rational> q{0};
};
MatrixAny materialize(const RealParam& t, std::size_t N, Mode mode);

}  // namespace cesaro
