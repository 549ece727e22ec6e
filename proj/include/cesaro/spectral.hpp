#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cesaro/numeric.hpp"
#include "cesaro/operators.hpp"
#include "cesaro/sequence.hpp"
#include "cesaro/spaces.hpp"

namespace cesaro {

// Binomial by the multiplicative running product; never factorial quotients.
inline BigInt binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt c = 1;
  for (std::size_t j = 1; j <= k; ++j) {
    c *= BigInt(n - k + j);
    c /= BigInt(j);  // exact: C(n-k+j, j) is an integer at every step
  }
  return c;
}

inline std::vector<double> lambda_set(std::size_t k) {
  std::vector<double> v(k);
  for (std::size_t n = 0; n < k; ++n) v[n] = 1.0 / static_cast<double>(n + 1);
  return v;
}

inline std::vector<Rational> lambda_set_exact(std::size_t k) {
  std::vector<Rational> v(k);
  for (std::size_t n = 0; n < k; ++n) v[n] = Rational(1, n + 1);
  return v;
}

// Eigenvector for eigenvalue 1/(m+1): zeros before position m, then
// coordinate m+k = alpha * C(m+k, k) * t^k. Coefficients advance by the
// running rule c_{k} = c_{k-1} * (m+k)/k * t.
template <class S>
std::vector<S> eigvec_x(std::size_t m, const real_t<S>& t, const S& alpha,
                        std::size_t N) {
  using Ops = ScalarOps<S>;
  if (N <= m) throw std::invalid_argument("truncation must extend past m");
  if (Ops::is_zero(alpha))
    throw std::invalid_argument("scale must be nonzero");
  std::vector<S> x(N, S{});
  x[m] = alpha;
  auto c = Ops::to_acc(alpha);
  const auto ta = detail::real_acc<S>(t);
  for (std::size_t k = 1; m + k < N; ++k) {
    c = c * ta * detail::index_acc<S>(m + k) / detail::index_acc<S>(k);
    x[m + k] = Ops::from_acc(c);
  }
  return x;
}

// Dual eigenvector for eigenvalue 1/(n+1): length n+1, coordinate n-i equals
// (-1)^i C(n, i) t^i.
template <class S>
std::vector<S> dual_eigvec_z(std::size_t n, const real_t<S>& t) {
  using Ops = ScalarOps<S>;
  std::vector<S> z(n + 1, S{});
  z[n] = S(1);
  auto c = Ops::to_acc(S(1));
  const auto ta = detail::real_acc<S>(t);
  for (std::size_t i = 1; i <= n; ++i) {
    c = -c * ta * detail::index_acc<S>(n - i + 1) / detail::index_acc<S>(i);
    z[n - i] = Ops::from_acc(c);
  }
  return z;
}

// Bilinear pairing sum x_i z_i over the shorter support.
template <class S>
S pairing(const std::vector<S>& a, const std::vector<S>& b) {
  using Ops = ScalarOps<S>;
  typename Ops::Acc acc{};
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i)
    acc += Ops::to_acc(S(a[i] * b[i]));
  return Ops::from_acc(acc);
}

// Candidate eigenvector of the t = 1 dual at a general complex z:
// x_0 = 1, x_{i+1} = x_i (1 - 1/(z(i+1))).
std::vector<Complex> c1_dual_eigvec(Complex z, std::size_t N);

// Partial sums of sum |x_i|^q plus a trailing-ratio geometric tail estimate.
// Reports progress toward q-power summability; never a membership claim.
struct DecayDiagnostic {
  double q = 2.0;
  double partial_sum = 0.0;
  double trailing_ratio = 0.0;  // mean of last-window |x_{i+1}|/|x_i|
  double tail_estimate = -1.0;  // geometric fit; negative when the fit fails
  std::string verdict;          // "consistent with membership" | "inconclusive"
};
DecayDiagnostic decay_diagnostic(const std::vector<Complex>& x, double q);

// Instance check of the alternating binomial sum identity
// sum_{k=n-i}^{n} (-1)^{(n-i)-k} C(n+1, k+1) = C(n, i) for i = 0..n.
bool binom_identity_check(std::size_t n);

struct SpectralReport {
  double t = 0.0;
  std::size_t N = 0;
  Mode mode = Mode::Float;
  std::size_t cap = 0;
  std::string domain_label;        // "d1" for t < 1, "omega-only" at t = 1
  std::vector<double> eigenvalues; // Lambda prefix, then 0 (accumulation point)
  std::vector<double> residuals;   // per m < cap, relative sup-residual
  double max_residual = 0.0;
  bool diagonal_ok = false;        // truncated matrix diagonal == lambda_set(N)
  bool residuals_exact_zero = false;  // exact mode only
};

SpectralReport verify_spectrum(const RealParam& t, std::size_t N, Mode mode,
                               std::size_t cap = 32);

// Rank of a dense matrix by column elimination with partial pivoting.
std::size_t matrix_rank(DenseMatrix<double> a, double rel_tol = 1e-9);

// dim Ker(C_t - I/(m+1)) on the N-truncation via rank counting.
std::size_t eigen_kernel_dim(double t, std::size_t m, std::size_t N);

// Sequence-level constructors used by the CLI.
Sequence eigvec(std::size_t m, const RealParam& t, const ComplexParam& alpha,
                std::size_t N, Mode mode);
Sequence dual_eigvec(std::size_t n, const RealParam& t, Mode mode);

}  // namespace cesaro
