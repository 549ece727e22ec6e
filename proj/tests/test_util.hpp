#pragma once

#include <cstddef>
#include <vector>

#include "cesaro/numeric.hpp"

namespace testutil {

// max_i |a_i - b_i| / max(1, max_i |b_i|)
inline double rel_sup_diff(const std::vector<cesaro::Complex>& a,
                           const std::vector<cesaro::Complex>& b) {
  double num = 0.0, den = 1.0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    num = std::max(num, std::abs(a[i] - b[i]));
    den = std::max(den, std::abs(b[i]));
  }
  return num / den;
}

inline double rel_sup_diff(const std::vector<double>& a,
                           const std::vector<double>& b) {
  double num = 0.0, den = 1.0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    num = std::max(num, std::abs(a[i] - b[i]));
    den = std::max(den, std::abs(b[i]));
  }
  return num / den;
}

inline std::vector<cesaro::Complex> random_complex(std::uint64_t seed,
                                                   std::size_t n) {
  cesaro::Rng rng(seed);
  std::vector<cesaro::Complex> x(n);
  for (auto& v : x) {
    const double re = rng.uniform_pm1();
    const double im = rng.uniform_pm1();
    v = cesaro::Complex(re, im);
  }
  return x;
}

inline std::vector<double> random_real(std::uint64_t seed, std::size_t n) {
  cesaro::Rng rng(seed);
  return rng.vector_pm1(n);
}

// small fractions: numerators in [-8, 8], denominators in [1, 9]
inline std::vector<cesaro::Rational> random_rationals(std::uint64_t seed,
                                                      std::size_t n) {
  cesaro::Rng rng(seed);
  std::vector<cesaro::Rational> x(n);
  for (auto& q : x) {
    const int num = static_cast<int>(rng.uniform_pm1() * 9.0);
    const int den = 1 + static_cast<int>((rng.uniform_pm1() + 1.0) * 4.5);
    q = cesaro::Rational(num, den);
  }
  return x;
}

inline std::vector<cesaro::Complex> to_complex(
    const std::vector<cesaro::Rational>& q) {
  std::vector<cesaro::Complex> f(q.size());
  for (std::size_t i = 0; i < q.size(); ++i)
    f[i] = cesaro::Complex(static_cast<double>(q[i]), 0.0);
  return f;
}

}  // namespace testutil
