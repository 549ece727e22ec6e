#include "cesaro/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace cesaro {

std::vector<Complex> c1_dual_eigvec(Complex z, std::size_t N) {
  if (z == Complex(0.0, 0.0)) throw std::invalid_argument("z must be nonzero");
  if (N == 0) throw std::invalid_argument("truncation needs N >= 1");
  std::vector<Complex> x(N);
  std::complex<long double> c(1.0L, 0.0L);
  const std::complex<long double> zl(z.real(), z.imag());
  x[0] = Complex(1.0, 0.0);
  for (std::size_t i = 0; i + 1 < N; ++i) {
    c *= (std::complex<long double>(1.0L, 0.0L) -
          std::complex<long double>(1.0L, 0.0L) /
              (zl * static_cast<long double>(i + 1)));
    x[i + 1] = Complex(static_cast<double>(c.real()),
                       static_cast<double>(c.imag()));
  }
  return x;
}

DecayDiagnostic decay_diagnostic(const std::vector<Complex>& x, double q) {
  if (!(q >= 1.0)) throw std::invalid_argument("exponent must be >= 1");
  DecayDiagnostic d;
  d.q = q;
  long double partial = 0.0L;
  for (const auto& v : x) partial += std::pow((long double)std::abs(v), q);
  d.partial_sum = static_cast<double>(partial);

  const std::size_t window = std::min<std::size_t>(64, x.size() / 4);
  d.verdict = "inconclusive";
  if (window < 4 || x.size() < window + 1) return d;
  long double racc = 0.0L;
  std::size_t count = 0;
  for (std::size_t i = x.size() - window - 1; i + 1 < x.size(); ++i) {
    const double a = std::abs(x[i]);
    const double b = std::abs(x[i + 1]);
    if (a == 0.0) return d;  // product hit an exact zero; tail is zero-filled
    racc += static_cast<long double>(b) / a;
    ++count;
  }
  d.trailing_ratio = static_cast<double>(racc / count);
  const double rho = std::pow(d.trailing_ratio, q);
  if (rho < 1.0) {
    const double last = std::pow(std::abs(x.back()), q);
    d.tail_estimate = last * rho / (1.0 - rho);
    // consistent when the fitted tail is a modest fraction of the mass seen
    if (d.tail_estimate <= 0.5 * d.partial_sum)
      d.verdict = "consistent with membership";
  }
  return d;
}

bool binom_identity_check(std::size_t n) {
  // sum_{k=n-i}^{n} (-1)^{(n-i)-k} C(n+1, k+1) == C(n, i) for i = 0..n
  for (std::size_t i = 0; i <= n; ++i) {
    BigInt acc = 0;
    for (std::size_t k = n - i; k <= n; ++k) {
      const BigInt term = binomial(n + 1, k + 1);
      acc += (((n - i) - k) % 2 == 0) ? term : -term;
    }
    if (acc != binomial(n, i)) return false;
  }
  return true;
}

namespace {

double relative_sup_residual(const std::vector<Complex>& lhs,
                             const std::vector<Complex>& rhs) {
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    num = std::max(num, std::abs(lhs[i] - rhs[i]));
    den = std::max(den, std::abs(rhs[i]));
  }
  return den == 0.0 ? num : num / den;
}

}  // namespace

SpectralReport verify_spectrum(const RealParam& t, std::size_t N, Mode mode,
                               std::size_t cap) {
  if (N < 2) throw std::invalid_argument("spectrum check needs N >= 2");
  SpectralReport rep;
  rep.t = t.value;
  rep.N = N;
  rep.mode = mode;
  rep.cap = std::min(cap, N);
  rep.domain_label = (t.value == 1.0) ? "omega-only" : "d1";

  rep.eigenvalues = lambda_set(rep.cap);
  rep.eigenvalues.push_back(0.0);  // accumulation point marker

  if (mode == Mode::Float) {
    const double tv = t.value;
    if (!(tv >= 0.0 && tv <= 1.0))
      throw std::invalid_argument("t must lie in [0, 1]");
    for (std::size_t m = 0; m < rep.cap; ++m) {
      const auto x = eigvec_x<Complex>(m, tv, Complex(1.0, 0.0), N);
      const auto cx = apply_ct<Complex>(tv, x);
      std::vector<Complex> lx(N);
      const double lam = 1.0 / static_cast<double>(m + 1);
      for (std::size_t i = 0; i < N; ++i) lx[i] = lam * x[i];
      rep.residuals.push_back(relative_sup_residual(cx, lx));
    }
    const auto mat = materialize_ct<double>(tv, N);
    rep.diagonal_ok = true;
    for (std::size_t n = 0; n < N; ++n)
      if (mat.at(n, n) != 1.0 / static_cast<double>(n + 1))
        rep.diagonal_ok = false;
  } else {
    const Rational& tq = t.require_exact("spectrum");
    if (tq < 0 || tq > 1) throw std::invalid_argument("t must lie in [0, 1]");
    bool all_zero = true;
    for (std::size_t m = 0; m < rep.cap; ++m) {
      const auto x = eigvec_x<Rational>(m, tq, Rational(1), N);
      const auto cx = apply_ct<Rational>(tq, x);
      const Rational lam(1, m + 1);
      Rational num = 0, den = 0;
      for (std::size_t i = 0; i < N; ++i) {
        const Rational r = ScalarOps<Rational>::abs(cx[i] - lam * x[i]);
        if (r > num) num = r;
        const Rational d = ScalarOps<Rational>::abs(lam * x[i]);
        if (d > den) den = d;
      }
      if (num != 0) all_zero = false;
      rep.residuals.push_back(den == 0
                                  ? static_cast<double>(num)
                                  : static_cast<double>(Rational(num / den)));
    }
    rep.residuals_exact_zero = all_zero;
    const auto mat = materialize_ct<Rational>(tq, N);
    rep.diagonal_ok = true;
    for (std::size_t n = 0; n < N; ++n)
      if (mat.at(n, n) != Rational(1, n + 1)) rep.diagonal_ok = false;
  }

  rep.max_residual = 0.0;
  for (double r : rep.residuals) rep.max_residual = std::max(rep.max_residual, r);
  return rep;
}

std::size_t matrix_rank(DenseMatrix<double> a, double rel_tol) {
  const std::size_t n = a.n;
  double scale = 0.0;
  for (double v : a.a) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) return 0;
  const double tol = rel_tol * scale;
  std::size_t rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t piv = row;
    for (std::size_t r = row + 1; r < n; ++r)
      if (std::abs(a.at(r, col)) > std::abs(a.at(piv, col))) piv = r;
    if (std::abs(a.at(piv, col)) <= tol) continue;
    if (piv != row)
      for (std::size_t c = 0; c < n; ++c) std::swap(a.at(piv, c), a.at(row, c));
    const double d = a.at(row, col);
    for (std::size_t r = row + 1; r < n; ++r) {
      const double f = a.at(r, col) / d;
      if (f == 0.0) continue;
      for (std::size_t c = col; c < n; ++c) a.at(r, c) -= f * a.at(row, c);
    }
    ++rank;
    ++row;
  }
  return rank;
}

std::size_t eigen_kernel_dim(double t, std::size_t m, std::size_t N) {
  if (m >= N) throw std::invalid_argument("m must lie inside the truncation");
  auto a = materialize_ct<double>(t, N);
  const double lam = 1.0 / static_cast<double>(m + 1);
  for (std::size_t i = 0; i < N; ++i) a.at(i, i) -= lam;
  return N - matrix_rank(std::move(a));
}

Sequence eigvec(std::size_t m, const RealParam& t, const ComplexParam& alpha,
                std::size_t N, Mode mode) {
  if (mode == Mode::Float)
    return Sequence(eigvec_x<Complex>(m, t.value, alpha.value, N));
  const Rational& tq = t.require_exact("eigvec");
  if (!alpha.exact)
    throw std::invalid_argument("eigvec: exact mode needs a rational scale");
  return Sequence(eigvec_x<Rational>(m, tq, *alpha.exact, N));
}

Sequence dual_eigvec(std::size_t n, const RealParam& t, Mode mode) {
  if (mode == Mode::Float) {
    if (!(t.value >= 0.0 && t.value < 1.0))
      throw std::invalid_argument("dual eigenvectors need t in [0, 1)");
    return Sequence(dual_eigvec_z<Complex>(n, t.value));
  }
  const Rational& tq = t.require_exact("dual-eigvec");
  if (tq < 0 || tq >= 1)
    throw std::invalid_argument("dual eigenvectors need t in [0, 1)");
  return Sequence(dual_eigvec_z<Rational>(n, tq));
}

}  // namespace cesaro
