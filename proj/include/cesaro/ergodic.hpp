#pragma once

#include <cstddef>
#include <vector>

#include "cesaro/numeric.hpp"
#include "cesaro/operators.hpp"
#include "cesaro/sequence.hpp"
#include "cesaro/spaces.hpp"

namespace cesaro {

// Iterates C_t^n x for n = 1..n_max, by repeated application.
template <class S>
std::vector<std::vector<S>> power_orbit(const real_t<S>& t,
                                        const std::vector<S>& x,
                                        std::size_t n_max) {
  if (n_max == 0) throw std::invalid_argument("orbit needs n_max >= 1");
  std::vector<std::vector<S>> orbit;
  orbit.reserve(n_max);
  orbit.push_back(apply_ct<S>(t, x));
  for (std::size_t n = 1; n < n_max; ++n)
    orbit.push_back(apply_ct<S>(t, orbit.back()));
  return orbit;
}

// n-th averaging stage: (1/n) sum_{m=1}^{n} C_t^m x.
template <class S>
std::vector<S> cesaro_means(const real_t<S>& t, const std::vector<S>& x,
                            std::size_t n) {
  using Ops = ScalarOps<S>;
  if (n == 0) throw std::invalid_argument("means need n >= 1");
  std::vector<typename Ops::Acc> acc(x.size());
  std::vector<S> it = x;
  for (std::size_t m = 1; m <= n; ++m) {
    it = apply_ct<S>(t, it);
    for (std::size_t k = 0; k < it.size(); ++k) acc[k] += Ops::to_acc(it[k]);
  }
  std::vector<S> mean(x.size());
  for (std::size_t k = 0; k < x.size(); ++k)
    mean[k] = Ops::from_acc(acc[k] / detail::index_acc<S>(n));
  return mean;
}

// Limit of the iteration for t < 1: x_0 * (t^k), the projection onto the
// fixed line along {x : x_0 = 0}.
template <class S>
std::vector<S> projection_p(const real_t<S>& t, const std::vector<S>& x) {
  using Ops = ScalarOps<S>;
  std::vector<S> p(x.size(), S{});
  if (x.empty()) return p;
  auto c = Ops::to_acc(x[0]);
  const auto ta = detail::real_acc<S>(t);
  p[0] = x[0];
  for (std::size_t k = 1; k < x.size(); ++k) {
    c = c * ta;
    p[k] = Ops::from_acc(c);
  }
  return p;
}

struct ErgodicTrace {
  double t = 0.0;
  std::size_t N = 0;
  bool raw_norms = false;  // t = 1: no reference point, raw norms recorded
  std::vector<std::size_t> steps;
  std::vector<double> iterate_metric;  // ||C^n x - Px|| or raw ||C^n x||
  std::vector<double> mean_metric;     // ||means_n - Px|| or raw norm
  double fitted_rate = 0.0;            // OLS slope of log iterate error
  bool rate_valid = false;
  bool power_bound_ok = false;  // r_n(C^m x) <= r_n(x) over the whole orbit
  bool mean_identity_ok = false;  // T^n/n = T_[n] - ((n-1)/n) T_[n-1]
};

ErgodicTrace ergodic_report(const RealParam& t, const Sequence& x,
                            std::size_t n_max, const SpaceSpec& space);

// Sequence-level wrappers for the CLI.
Sequence projection_limit(const RealParam& t, const Sequence& x);
Sequence nth_power(const RealParam& t, const Sequence& x, std::size_t n);
Sequence nth_mean(const RealParam& t, const Sequence& x, std::size_t n);

}  // namespace cesaro
