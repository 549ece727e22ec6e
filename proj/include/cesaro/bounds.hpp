#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cesaro/numeric.hpp"
#include "cesaro/operators.hpp"
#include "cesaro/spaces.hpp"

namespace cesaro {

// Max column l1 sum of the N-truncation; column 0 dominates termwise, so this
// is sum_{n<N} t^n/(n+1). Tail to the closed form (1/t)log(1/(1-t)) is at
// most t^N/((N+1)(1-t)).
double l1_opnorm(double t, std::size_t N);

// Max row l1 sum of the truncated dual matrix; always <= 1/(1-t).
double dual_linf_opnorm(double t, std::size_t N);

enum class Verdict { Holds, Violated, AsymptoticProgress };
std::string verdict_name(Verdict v);

struct BoundReport {
  std::string claim;
  double t = 0.0;
  double p = 0.0;
  std::size_t N = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  double observed = 0.0;
  double bound = 0.0;
  double margin = 0.0;  // bound - observed
  Verdict verdict = Verdict::Holds;
};

struct OpnormEstimate {
  double value = 0.0;        // certified lower bound on the truncated norm
  double trial_max = 0.0;    // best ratio over basis + random trials
  double power_iter = 0.0;   // Gram power-iteration value (p = 2 only)
  bool power_iter_used = false;
  std::size_t iterations = 0;
};

OpnormEstimate opnorm_estimate_detail(const OperatorSpec& op,
                                      const SpaceSpec& space, std::size_t N,
                                      std::size_t trials, std::uint64_t seed);

inline double opnorm_estimate(const OperatorSpec& op, const SpaceSpec& space,
                              std::size_t N, std::size_t trials,
                              std::uint64_t seed) {
  return opnorm_estimate_detail(op, space, N, trials, seed).value;
}

// Claims for one (t, p, N): ces and dp ratio bounds, the lp window from the
// l1 closed form, and the dual sup-norm row bound. t = 1 instead emits the
// asymptotic-progress claim toward the conjugate exponent.
std::vector<BoundReport> bound_suite(double t, double p, std::size_t N,
                                     std::size_t trials, std::uint64_t seed);

// Shift extremality in d_p: ratio at e_0 equals (m+1)^{1/p}; trials never
// exceed it.
BoundReport shift_dp_extremality(unsigned m, double p, std::size_t N,
                                 std::size_t trials, std::uint64_t seed);

// Real-vector application of the operator and its adjoint on the truncation
// (plumbing for the estimators).
std::vector<double> apply_op_real(const OperatorSpec& op,
                                  const std::vector<double>& x);
std::vector<double> apply_op_adjoint_real(const OperatorSpec& op,
                                          const std::vector<double>& x);

}  // namespace cesaro
