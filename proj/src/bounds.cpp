#include "cesaro/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace cesaro {

double l1_opnorm(double t, std::size_t N) {
  if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("t must lie in [0, 1]");
  if (N == 0) throw std::invalid_argument("needs N >= 1");
  // backward recurrence gives every column sum: S_j = 1/(j+1) + t S_{j+1}
  long double best = 0.0L;
  long double s = 0.0L;
  for (std::size_t j = N; j-- > 0;) {
    s = 1.0L / static_cast<long double>(j + 1) + static_cast<long double>(t) * s;
    best = std::max(best, s);
  }
  return static_cast<double>(best);
}

double dual_linf_opnorm(double t, std::size_t N) {
  if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("t must lie in [0, 1]");
  if (N == 0) throw std::invalid_argument("needs N >= 1");
  // row sums realized as the dual action on the all-ones vector
  const std::vector<double> ones(N, 1.0);
  const auto row = apply_ct_dual<double>(t, ones);
  double best = 0.0;
  for (double v : row) best = std::max(best, v);
  return best;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Holds:
      return "holds";
    case Verdict::Violated:
      return "violated";
    case Verdict::AsymptoticProgress:
      return "asymptotic-progress";
  }
  throw std::logic_error("unreachable");
}

std::vector<double> apply_op_real(const OperatorSpec& op,
                                  const std::vector<double>& x) {
  op.validate();
  switch (op.kind) {
    case OpKind::Ct:
      return apply_ct<double>(op.t.value, x);
    case OpKind::Rt:
      return apply_rt<double>(op.t.value, x);
    case OpKind::Dphi:
      return apply_dphi<double>(x);
    case OpKind::Shift:
      return apply_shift<double>(op.shift_power, x);
    case OpKind::CtDual:
      return apply_ct_dual<double>(op.t.value, x);
  }
  throw std::logic_error("unreachable");
}

std::vector<double> apply_op_adjoint_real(const OperatorSpec& op,
                                          const std::vector<double>& x) {
  op.validate();
  switch (op.kind) {
    case OpKind::Ct:
      return apply_ct_dual<double>(op.t.value, x);
    case OpKind::CtDual:
      return apply_ct<double>(op.t.value, x);
    case OpKind::Dphi:
      return apply_dphi<double>(x);
    case OpKind::Shift: {
      std::vector<double> y(x.size(), 0.0);
      for (std::size_t i = 0; i + op.shift_power < x.size(); ++i)
        y[i] = x[i + op.shift_power];
      return y;
    }
    case OpKind::Rt: {
      // transpose of the undivided prefix kernel: v_i = x_i + t v_{i+1}
      const long double t = op.t.value;
      std::vector<double> y(x.size());
      long double v = 0.0L;
      for (std::size_t i = x.size(); i-- > 0;) {
        v = t * v + x[i];
        y[i] = static_cast<double>(v);
      }
      return y;
    }
  }
  throw std::logic_error("unreachable");
}

namespace {

std::vector<double> abs_vec(const std::vector<double>& x) {
  std::vector<double> m(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) m[i] = std::fabs(x[i]);
  return m;
}

double space_norm(const std::vector<double>& x, const SpaceSpec& space) {
  return norm_mag(abs_vec(x), space);
}

double l2_norm(const std::vector<double>& x) {
  long double s = 0.0L;
  for (double v : x) s += static_cast<long double>(v) * v;
  return static_cast<double>(std::sqrt(s));
}

}  // namespace

OpnormEstimate opnorm_estimate_detail(const OperatorSpec& op,
                                      const SpaceSpec& space, std::size_t N,
                                      std::size_t trials, std::uint64_t seed) {
  op.validate();
  space.validate();
  if (N == 0) throw std::invalid_argument("needs N >= 1");

  OpnormEstimate est;
  std::vector<double> best_vec;

  auto consider = [&](const std::vector<double>& v) {
    const double den = space_norm(v, space);
    if (den == 0.0 || !std::isfinite(den)) return;
    const double num = space_norm(apply_op_real(op, v), space);
    const double ratio = num / den;
    if (ratio > est.trial_max) {
      est.trial_max = ratio;
      best_vec = v;
    }
  };

  // basis vectors first, then signed-random trials and their modulus variants
  const std::size_t nb = std::min<std::size_t>(N, 32);
  for (std::size_t j = 0; j < nb; ++j) {
    std::vector<double> e(N, 0.0);
    e[j] = 1.0;
    consider(e);
  }
  Rng rng(seed);
  for (std::size_t k = 0; k < trials; ++k) {
    const auto x = rng.vector_pm1(N);
    consider(x);
    consider(abs_vec(x));
  }

  est.value = est.trial_max;

  const bool p2 = (space.kind == SpaceKind::Lp && !space.p.is_inf() &&
                   space.p.value() == 2.0);
  if (p2 && !best_vec.empty()) {
    // Gram power iteration; the Rayleigh quotient sqrt(||Av||/||v||-form) is
    // itself a ratio at a concrete vector, so the estimate stays a certified
    // lower bound at every step.
    std::vector<double> v = best_vec;
    {
      const double nv = l2_norm(v);
      for (auto& c : v) c /= nv;
    }
    double prev = 0.0;
    const std::size_t max_iter = 20000;
    std::size_t it = 0;
    while (it < max_iter) {
      ++it;
      const auto av = apply_op_real(op, v);
      const double sigma = l2_norm(av);  // ||Av|| with ||v|| = 1
      est.power_iter = sigma;
      if (sigma == 0.0) break;
      auto w = apply_op_adjoint_real(op, av);
      const double nw = l2_norm(w);
      if (nw == 0.0) break;
      for (auto& c : w) c /= nw;
      v = std::move(w);
      if (it > 1 && std::fabs(sigma - prev) <= 1e-10 * std::max(1.0, sigma))
        break;
      prev = sigma;
    }
    est.power_iter_used = true;
    est.iterations = it;
    est.value = std::max(est.value, est.power_iter);
  }
  return est;
}

namespace {

BoundReport make_report(std::string claim, double t, double p, std::size_t N,
                        std::size_t trials, std::uint64_t seed, double observed,
                        double bound, double slack) {
  BoundReport r;
  r.claim = std::move(claim);
  r.t = t;
  r.p = p;
  r.N = N;
  r.trials = trials;
  r.seed = seed;
  r.observed = observed;
  r.bound = bound;
  r.margin = bound - observed;
  r.verdict = (observed <= bound + slack) ? Verdict::Holds : Verdict::Violated;
  return r;
}

}  // namespace

std::vector<BoundReport> bound_suite(double t, double p, std::size_t N,
                                     std::size_t trials, std::uint64_t seed) {
  if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("t must lie in [0, 1]");
  if (!(p > 1.0) || !std::isfinite(p))
    throw std::invalid_argument("the suite needs a finite exponent p > 1");
  if (N == 0) throw std::invalid_argument("needs N >= 1");
  const double slack = 1e-9;
  const double pconj = p / (p - 1.0);

  std::vector<BoundReport> out;
  OperatorSpec ct{OpKind::Ct, RealParam::from_double(t), 1};

  if (t == 1.0) {
    // no finite (1-t) bound exists; record progress toward the conjugate
    // exponent, which truncations approach from below
    const double obs = opnorm_estimate(ct, SpaceSpec::ces(p), N, trials, seed);
    BoundReport r = make_report("ces-ratio-progress", t, p, N, trials, seed,
                                obs, pconj, slack);
    r.verdict = (obs <= pconj + slack) ? Verdict::AsymptoticProgress
                                       : Verdict::Violated;
    out.push_back(std::move(r));
    return out;
  }

  const double geo = 1.0 / (1.0 - t);

  out.push_back(make_report(
      "ces-ratio", t, p, N, trials, seed,
      opnorm_estimate(ct, SpaceSpec::ces(p), N, trials, seed),
      std::min(geo, pconj), slack));

  out.push_back(make_report(
      "dp-ratio", t, p, N, trials, seed,
      opnorm_estimate(ct, SpaceSpec::dp(p), N, trials, seed),
      std::pow(1.0 - t, -1.0 - 1.0 / p), slack));

  // lp window: the interpolation form above, the first-column ratio below
  const double upper_form =
      std::pow(t == 0.0 ? 1.0 : -std::log1p(-t) / t, 1.0 / p);
  const double lp_obs =
      opnorm_estimate(ct, SpaceSpec::lp(Exponent(p)), N, trials, seed);
  out.push_back(
      make_report("lp-window", t, p, N, trials, seed, lp_obs, upper_form, slack));
  {
    long double s = 0.0L, pw = 1.0L;
    for (std::size_t n = 0; n < N; ++n) {
      s += std::pow(pw / static_cast<long double>(n + 1),
                    static_cast<long double>(p));
      pw *= t;
    }
    const double col0 = static_cast<double>(
        std::pow(s, 1.0L / static_cast<long double>(p)));
    out.push_back(make_report("lp-floor", t, p, N, trials, seed, col0, lp_obs,
                              slack));
  }

  out.push_back(make_report("dual-sup-row", t, 1.0, N, 0, seed,
                            dual_linf_opnorm(t, N), geo, slack));

  return out;
}

BoundReport shift_dp_extremality(unsigned m, double p, std::size_t N,
                                 std::size_t trials, std::uint64_t seed) {
  if (!(p >= 1.0) || !std::isfinite(p))
    throw std::invalid_argument("needs a finite exponent p >= 1");
  if (N <= m) throw std::invalid_argument("truncation must exceed the shift power");
  OperatorSpec sh{OpKind::Shift, RealParam::from_double(0.0), m};
  const double obs =
      opnorm_estimate(sh, SpaceSpec::dp(p), N, trials, seed);
  const double bound = std::pow(static_cast<double>(m + 1), 1.0 / p);
  BoundReport r = make_report("shift-dp-extremal", 0.0, p, N, trials, seed,
                              obs, bound, 1e-9);
  // e_0 is in the trial set and attains the bound, so equality is part of the
  // claim, not just the one-sided comparison
  if (r.verdict == Verdict::Holds && obs < bound - 1e-9)
    r.verdict = Verdict::Violated;
  return r;
}

}  // namespace cesaro
