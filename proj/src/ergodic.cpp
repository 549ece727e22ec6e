#include "cesaro/ergodic.hpp"

#include <algorithm>
#include <cmath>

namespace cesaro {

namespace {

// Slope of the least-squares line through (xs, ys).
double ols_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  const std::size_t n = xs.size();
  long double sx = 0.0L, sy = 0.0L, sxx = 0.0L, sxy = 0.0L;
  for (std::size_t i = 0; i < n; ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += static_cast<long double>(xs[i]) * xs[i];
    sxy += static_cast<long double>(xs[i]) * ys[i];
  }
  const long double den = n * sxx - sx * sx;
  if (den == 0.0L) return 0.0;
  return static_cast<double>((n * sxy - sx * sy) / den);
}

template <class M>
std::vector<M> prefix_max(const std::vector<M>& m) {
  std::vector<M> r(m.size());
  M cur{};
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i == 0 || m[i] > cur) cur = m[i];
    r[i] = cur;
  }
  return r;
}

template <class S>
ErgodicTrace trace_impl(const real_t<S>& t, double t_display,
                        const std::vector<S>& x, std::size_t n_max,
                        const SpaceSpec& space) {
  using Ops = ScalarOps<S>;
  constexpr bool exact = std::is_same_v<S, Rational>;
  if (n_max == 0) throw std::invalid_argument("trace needs n_max >= 1");
  if (x.empty()) throw std::invalid_argument("trace needs a nonempty input");
  space.validate();

  ErgodicTrace tr;
  tr.t = t_display;
  tr.N = x.size();
  tr.raw_norms = (t_display == 1.0);

  std::vector<S> ref;
  if (!tr.raw_norms) ref = projection_p<S>(t, x);

  const auto base_r = prefix_max(magnitudes(x));

  std::vector<typename Ops::Acc> acc(x.size());
  std::vector<S> it = x;
  std::vector<S> prev_mean;
  std::vector<S> diff(x.size());

  tr.power_bound_ok = true;
  tr.mean_identity_ok = true;

  for (std::size_t n = 1; n <= n_max; ++n) {
    it = apply_ct<S>(t, it);
    for (std::size_t k = 0; k < it.size(); ++k) acc[k] += Ops::to_acc(it[k]);
    std::vector<S> mean(x.size());
    for (std::size_t k = 0; k < x.size(); ++k)
      mean[k] = Ops::from_acc(acc[k] / detail::index_acc<S>(n));

    // the orbit never escapes the coordinate envelope of the input
    const auto it_r = prefix_max(magnitudes(it));
    for (std::size_t j = 0; j < it_r.size(); ++j) {
      if constexpr (exact) {
        if (it_r[j] > base_r[j]) tr.power_bound_ok = false;
      } else {
        if (it_r[j] > base_r[j] + 1e-12 * (1.0 + base_r[j]))
          tr.power_bound_ok = false;
      }
    }

    // n-th power over n equals the first difference of the averaging stages
    if (n >= 2) {
      if constexpr (exact) {
        const Rational nn(n);
        const Rational w = Rational(n - 1) / nn;
        for (std::size_t k = 0; k < x.size(); ++k)
          if (it[k] / nn != mean[k] - w * prev_mean[k])
            tr.mean_identity_ok = false;
      } else {
        const double nn = static_cast<double>(n);
        const double w = static_cast<double>(n - 1) / nn;
        double err = 0.0, scale = 0.0;
        for (std::size_t k = 0; k < x.size(); ++k) {
          const auto l = it[k] / S(nn);
          const auto r = mean[k] - prev_mean[k] * S(w);
          err = std::max(err, static_cast<double>(Ops::abs(l - r)));
          scale = std::max(scale, static_cast<double>(Ops::abs(l)));
        }
        if (err > 1e-12 * std::max(1.0, scale)) tr.mean_identity_ok = false;
      }
    }

    tr.steps.push_back(n);
    if (tr.raw_norms) {
      tr.iterate_metric.push_back(norm_vec(it, space));
      tr.mean_metric.push_back(norm_vec(mean, space));
    } else {
      for (std::size_t k = 0; k < x.size(); ++k) diff[k] = it[k] - ref[k];
      tr.iterate_metric.push_back(norm_vec(diff, space));
      for (std::size_t k = 0; k < x.size(); ++k) diff[k] = mean[k] - ref[k];
      tr.mean_metric.push_back(norm_vec(diff, space));
    }
    prev_mean = std::move(mean);
  }

  if (!tr.raw_norms) {
    std::vector<double> xs, ys;
    for (std::size_t i = n_max / 2; i < n_max; ++i) {
      const double e = tr.iterate_metric[i];
      if (e > 0.0 && std::isfinite(std::log(e))) {
        xs.push_back(static_cast<double>(tr.steps[i]));
        ys.push_back(std::log(e));
      }
    }
    if (xs.size() >= 3) {
      tr.fitted_rate = ols_slope(xs, ys);
      tr.rate_valid = true;
    }
  }
  return tr;
}

}  // namespace

ErgodicTrace ergodic_report(const RealParam& t, const Sequence& x,
                            std::size_t n_max, const SpaceSpec& space) {
  if (x.mode() == Mode::Float) {
    if (!(t.value >= 0.0 && t.value <= 1.0))
      throw std::invalid_argument("t must lie in [0, 1]");
    return trace_impl<Complex>(t.value, t.value, x.cf(), n_max, space);
  }
  const Rational& tq = t.require_exact("ergodic");
  if (tq < 0 || tq > 1) throw std::invalid_argument("t must lie in [0, 1]");
  return trace_impl<Rational>(tq, t.value, x.cq(), n_max, space);
}

Sequence projection_limit(const RealParam& t, const Sequence& x) {
  if (x.mode() == Mode::Float) {
    if (!(t.value >= 0.0 && t.value <= 1.0))
      throw std::invalid_argument("t must lie in [0, 1]");
    return Sequence(projection_p<Complex>(t.value, x.cf()));
  }
  const Rational& tq = t.require_exact("project");
  if (tq < 0 || tq > 1) throw std::invalid_argument("t must lie in [0, 1]");
  return Sequence(projection_p<Rational>(tq, x.cq()));
}

Sequence nth_power(const RealParam& t, const Sequence& x, std::size_t n) {
  if (n == 0) throw std::invalid_argument("power needs n >= 1");
  if (x.mode() == Mode::Float) {
    if (!(t.value >= 0.0 && t.value <= 1.0))
      throw std::invalid_argument("t must lie in [0, 1]");
    return Sequence(power_orbit<Complex>(t.value, x.cf(), n).back());
  }
  const Rational& tq = t.require_exact("power");
  if (tq < 0 || tq > 1) throw std::invalid_argument("t must lie in [0, 1]");
  return Sequence(power_orbit<Rational>(tq, x.cq(), n).back());
}

Sequence nth_mean(const RealParam& t, const Sequence& x, std::size_t n) {
  if (x.mode() == Mode::Float) {
    if (!(t.value >= 0.0 && t.value <= 1.0))
      throw std::invalid_argument("t must lie in [0, 1]");
    return Sequence(cesaro_means<Complex>(t.value, x.cf(), n));
  }
  const Rational& tq = t.require_exact("mean");
  if (tq < 0 || tq > 1) throw std::invalid_argument("t must lie in [0, 1]");
  return Sequence(cesaro_means<Rational>(tq, x.cq(), n));
}

}  // namespace cesaro
