#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "cesaro/numeric.hpp"
#include "cesaro/sequence.hpp"

namespace cesaro {

enum class SpaceKind { Lp, Ces, Dp, OmegaN };
enum class LadderDirection { Plus, Minus };

struct SpaceSpec {
  SpaceKind kind = SpaceKind::Lp;
  Exponent p = Exponent(2.0);
  std::size_t seminorm_index = 0;  // OmegaN only

  static SpaceSpec lp(Exponent p) { return {SpaceKind::Lp, p, 0}; }
  static SpaceSpec ces(double p) { return {SpaceKind::Ces, Exponent(p), 0}; }
  static SpaceSpec dp(double p) { return {SpaceKind::Dp, Exponent(p), 0}; }
  static SpaceSpec omega(std::size_t n) {
    return {SpaceKind::OmegaN, Exponent(1.0), n};
  }

  void validate() const {
    if ((kind == SpaceKind::Ces || kind == SpaceKind::Dp) && p.is_inf())
      throw std::invalid_argument("ces/dp require a finite exponent");
  }

  std::string name() const;
};

// Exponent ladder approaching the base space. Plus: p_k strictly decreasing
// toward p from above; minus: p_k strictly increasing toward p from below.
struct LadderSpec {
  SpaceKind family = SpaceKind::Lp;  // Lp, Ces, or Dp
  Exponent base = Exponent(2.0);
  LadderDirection direction = LadderDirection::Plus;
  std::size_t count = 4;

  void validate() const {
    if (family == SpaceKind::OmegaN)
      throw std::invalid_argument("ladder family must be lp, ces, or dp");
    if (count == 0) throw std::invalid_argument("ladder needs at least one rung");
    if (direction == LadderDirection::Plus) {
      if (base.is_inf())
        throw std::invalid_argument("plus ladder needs a finite base exponent");
    } else {
      if (!base.is_inf() && base.value() <= 1.0)
        throw std::invalid_argument("minus ladder needs base exponent > 1");
    }
    if ((family == SpaceKind::Ces || family == SpaceKind::Dp) &&
        direction == LadderDirection::Minus && base.is_inf())
      throw std::invalid_argument("ces/dp ladders need finite rungs from a finite base");
  }

  // p_k for k = 1..count. Plus: p + 1/k. Minus, finite p: 1 + (p-1)k/(k+1);
  // minus from inf: k + 1.
  std::vector<double> exponents() const {
    validate();
    std::vector<double> out;
    out.reserve(count);
    for (std::size_t k = 1; k <= count; ++k) {
      if (direction == LadderDirection::Plus) {
        out.push_back(base.value() + 1.0 / static_cast<double>(k));
      } else if (base.is_inf()) {
        out.push_back(static_cast<double>(k) + 1.0);
      } else {
        const double p = base.value();
        out.push_back(1.0 + (p - 1.0) * static_cast<double>(k) /
                                static_cast<double>(k + 1));
      }
    }
    return out;
  }
};

// ---- magnitude kernels -----------------------------------------------------

template <class S>
std::vector<mag_t<S>> magnitudes(const std::vector<S>& x) {
  std::vector<mag_t<S>> m;
  m.reserve(x.size());
  for (const auto& v : x) m.push_back(ScalarOps<S>::abs(v));
  return m;
}

// Least decreasing majorant on the truncation: suffix maximum of |x|.
template <class M>
std::vector<M> suffix_max(std::vector<M> m) {
  for (std::size_t i = m.size(); i-- > 1;)
    if (m[i] > m[i - 1]) m[i - 1] = m[i];
  return m;
}

// Cesaro averages of a nonnegative vector: a_n = (sum_{i<=n} m_i)/(n+1).
// Exact for rational magnitudes, compensated for doubles.
inline std::vector<double> prefix_averages(const std::vector<double>& m) {
  std::vector<double> a(m.size());
  long double s = 0.0L;
  for (std::size_t n = 0; n < m.size(); ++n) {
    s += m[n];
    a[n] = static_cast<double>(s / static_cast<long double>(n + 1));
  }
  return a;
}

inline std::vector<Rational> prefix_averages(const std::vector<Rational>& m) {
  std::vector<Rational> a(m.size());
  Rational s = 0;
  for (std::size_t n = 0; n < m.size(); ++n) {
    s += m[n];
    a[n] = s / Rational(n + 1);
  }
  return a;
}

// ---- float norms -----------------------------------------------------------

inline double lp_norm_mag(const std::vector<double>& m, const Exponent& p) {
  if (p.is_inf()) {
    double r = 0.0;
    for (double v : m) r = std::max(r, v);
    return r;
  }
  const double pv = p.value();
  if (pv == 1.0) {
    long double s = 0.0L;
    for (double v : m) s += v;
    return static_cast<double>(s);
  }
  long double s = 0.0L;
  for (double v : m) s += std::pow(static_cast<long double>(v), pv);
  return static_cast<double>(std::pow(s, 1.0L / pv));
}

inline double ces_norm_mag(const std::vector<double>& m, double p) {
  return lp_norm_mag(prefix_averages(m), Exponent(p));
}

inline double dp_norm_mag(std::vector<double> m, double p) {
  return lp_norm_mag(suffix_max(std::move(m)), Exponent(p));
}

inline double omega_seminorm_mag(const std::vector<double>& m, std::size_t n) {
  if (n >= m.size())
    throw std::invalid_argument("seminorm index outside truncation");
  double r = 0.0;
  for (std::size_t j = 0; j <= n; ++j) r = std::max(r, m[j]);
  return r;
}

inline double norm_mag(const std::vector<double>& m, const SpaceSpec& s) {
  s.validate();
  switch (s.kind) {
    case SpaceKind::Lp:
      return lp_norm_mag(m, s.p);
    case SpaceKind::Ces:
      return ces_norm_mag(m, s.p.value());
    case SpaceKind::Dp:
      return dp_norm_mag(m, s.p.value());
    case SpaceKind::OmegaN:
      return omega_seminorm_mag(m, s.seminorm_index);
  }
  throw std::logic_error("unreachable");
}

template <class S>
double norm_vec(const std::vector<S>& x, const SpaceSpec& s) {
  if constexpr (std::is_same_v<S, Rational>) {
    std::vector<double> m;
    m.reserve(x.size());
    for (const auto& v : x)
      m.push_back(static_cast<double>(ScalarOps<Rational>::abs(v)));
    return norm_mag(m, s);
  } else {
    return norm_mag(magnitudes(x), s);
  }
}

// ---- exact norms (p in {1, inf} and the omega seminorm) ---------------------

Rational norm_exact(const std::vector<Rational>& x, const SpaceSpec& s);

// ---- Sequence-level operations ----------------------------------------------

Sequence majorant(const Sequence& x);
double norm(const Sequence& x, const SpaceSpec& s);
std::vector<double> ladder_norms(const Sequence& x, const LadderSpec& l);

// Trailing-window mean of successive magnitude ratios |x_{n+1}|/|x_n|. A
// finite-truncation estimate of the limit ratio; never a membership claim.
double ratio_beta(const Sequence& x, std::size_t window);

}  // namespace cesaro
