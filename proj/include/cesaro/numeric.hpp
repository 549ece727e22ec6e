#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace cesaro {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Complex = std::complex<double>;

// Extended-real exponent p in [1, inf]. Infinity is a distinguished state of
// this type, never a sentinel double.
class Exponent {
 public:
  static Exponent inf() {
    Exponent e;
    e.inf_ = true;
    return e;
  }

  explicit Exponent(double p) : p_(p) {
    if (!(p >= 1.0) || p != p || p > 1e300)
      throw std::invalid_argument("exponent must be a finite real >= 1");
  }

  bool is_inf() const { return inf_; }

  double value() const {
    if (inf_) throw std::logic_error("infinite exponent has no finite value");
    return p_;
  }

  // Hoelder conjugate: 1 <-> inf, otherwise p/(p-1).
  Exponent conjugate() const {
    if (inf_) return Exponent(1.0);
    if (p_ == 1.0) return inf();
    return Exponent(p_ / (p_ - 1.0));
  }

  std::string str() const;

  friend bool operator==(const Exponent& a, const Exponent& b) {
    if (a.inf_ != b.inf_) return false;
    return a.inf_ || a.p_ == b.p_;
  }

 private:
  Exponent() = default;
  bool inf_ = false;
  double p_ = 1.0;
};

// Deterministic uniforms on [-1, 1). mt19937_64 output is pinned by the
// standard; the bits-to-double map below avoids std::uniform_real_distribution,
// whose stream is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform_pm1() {
    const double u = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    return 2.0 * u - 1.0;
  }

  std::vector<double> vector_pm1(std::size_t n) {
    std::vector<double> v(n);
    for (auto& x : v) x = uniform_pm1();
    return v;
  }

 private:
  std::mt19937_64 gen_;
};

// 17 significant digits: enough to round-trip any double, stable byte output.
std::string format_real(double x);
std::string format_rational(const Rational& q);  // canonical "num/den"
Rational parse_rational(const std::string& s);   // "num/den" or integer

// Scalar parameter such as t that may carry an exact fraction alongside its
// double value. Exact-mode operations require the fraction.
struct RealParam {
  double value = 0.0;
  std::optional<Rational> exact;

  static RealParam from_double(double v) { return {v, std::nullopt}; }
  static RealParam from_rational(const Rational& q) {
    return {static_cast<double>(q), q};
  }
  // Accepts "0.3", "1/2", "1".
  static RealParam parse(const std::string& s);

  const Rational& require_exact(const char* what) const {
    if (!exact)
      throw std::invalid_argument(std::string(what) +
                                  ": exact mode needs a num/den parameter");
    return *exact;
  }
};

// Scalar kinds used by the kernels: double (real float work), Complex
// (float-complex sequence mode), Rational (exact mode).
template <class S>
struct ScalarOps;

template <>
struct ScalarOps<double> {
  using Mag = double;                 // magnitude type
  using Acc = long double;            // accumulator for recurrences
  using Real = double;                // type of real parameters like t
  static double abs(double x) { return x < 0 ? -x : x; }
  static Acc to_acc(double x) { return x; }
  static double from_acc(Acc a) { return static_cast<double>(a); }
  static bool is_zero(double x) { return x == 0.0; }
};

template <>
struct ScalarOps<Complex> {
  using Mag = double;
  using Acc = std::complex<long double>;
  using Real = double;
  static double abs(const Complex& x) { return std::abs(x); }
  static Acc to_acc(const Complex& x) {
    return {static_cast<long double>(x.real()),
            static_cast<long double>(x.imag())};
  }
  static Complex from_acc(const Acc& a) {
    return {static_cast<double>(a.real()), static_cast<double>(a.imag())};
  }
  static bool is_zero(const Complex& x) {
    return x.real() == 0.0 && x.imag() == 0.0;
  }
};

template <>
struct ScalarOps<Rational> {
  using Mag = Rational;
  using Acc = Rational;
  using Real = Rational;
  static Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }
  static const Rational& to_acc(const Rational& x) { return x; }
  static const Rational& from_acc(const Rational& a) { return a; }
  static bool is_zero(const Rational& x) { return x == 0; }
};

template <class S>
using real_t = typename ScalarOps<S>::Real;
template <class S>
using mag_t = typename ScalarOps<S>::Mag;

}  // namespace cesaro
