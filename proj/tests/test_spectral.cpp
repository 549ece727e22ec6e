#include "doctest.h"

#include <cmath>
#include <vector>

#include "cesaro/spectral.hpp"
#include "test_util.hpp"

using namespace cesaro;

TEST_CASE("binomial coefficients") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(10, 0) == 1);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(52, 5) == 2598960);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(60, 30) == BigInt("118264581564861424"));
}

TEST_CASE("eigenvalue family") {
  const auto l = lambda_set(3);
  CHECK(l == std::vector<double>{1.0, 0.5, 1.0 / 3.0});
  const auto lq = lambda_set_exact(3);
  CHECK(lq[0] == Rational(1));
  CHECK(lq[1] == Rational(1, 2));
  CHECK(lq[2] == Rational(1, 3));
}

TEST_CASE("eigenvector coordinates") {
  const auto x = eigvec_x<Complex>(1, 0.5, Complex(1, 0), 5);
  CHECK(x[0] == Complex(0, 0));
  CHECK(x[1] == Complex(1, 0));
  CHECK(x[2] == Complex(1, 0));
  CHECK(x[3] == Complex(0.75, 0));
  CHECK(x[4] == Complex(0.5, 0));

  // coordinate m+k is alpha C(m+k, k) t^k
  const Rational t(2, 3);
  const auto xq = eigvec_x<Rational>(2, t, Rational(5), 12);
  for (std::size_t k = 0; k + 2 < 12; ++k) {
    Rational tk = 1;
    for (std::size_t j = 0; j < k; ++j) tk *= t;
    CHECK(xq[2 + k] == Rational(5) * Rational(binomial(2 + k, k)) * tk);
  }

  CHECK_THROWS_AS(eigvec_x<Complex>(4, 0.5, Complex(1, 0), 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(eigvec_x<Complex>(0, 0.5, Complex(0, 0), 4),
                  std::invalid_argument);
}

TEST_CASE("eigen equation holds on truncations") {
  SUBCASE("float residuals stay at rounding level") {
    for (std::size_t m : {0, 1, 3, 8}) {
      const auto x = eigvec_x<Complex>(m, 0.7, Complex(1, 0), 256);
      const auto cx = apply_ct<Complex>(0.7, x);
      const double lam = 1.0 / static_cast<double>(m + 1);
      double num = 0.0, den = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        num = std::max(num, std::abs(cx[i] - lam * x[i]));
        den = std::max(den, std::abs(lam * x[i]));
      }
      CHECK(num / den < 1e-13);
    }
  }

  SUBCASE("exact residuals vanish") {
    const Rational t(1, 2);
    for (std::size_t m : {0, 1, 2, 5}) {
      const auto x = eigvec_x<Rational>(m, t, Rational(1), 64);
      const auto cx = apply_ct<Rational>(t, x);
      const Rational lam(1, m + 1);
      for (std::size_t i = 0; i < x.size(); ++i) CHECK(cx[i] == lam * x[i]);
    }
  }
}

TEST_CASE("dual eigenvector coordinates and equation") {
  const auto z = dual_eigvec_z<Rational>(2, Rational(1, 2));
  REQUIRE(z.size() == 3);
  CHECK(z[0] == Rational(1, 4));
  CHECK(z[1] == Rational(-1));
  CHECK(z[2] == Rational(1));

  // the dual kernel fixes z up to the eigenvalue 1/(n+1), exactly
  const Rational t(3, 7);
  for (std::size_t n : {0, 1, 2, 5, 9}) {
    const auto zq = dual_eigvec_z<Rational>(n, t);
    const auto czq = apply_ct_dual<Rational>(t, zq);
    const Rational lam(1, n + 1);
    for (std::size_t i = 0; i <= n; ++i) CHECK(czq[i] == lam * zq[i]);
  }
}

TEST_CASE("eigenvector families are biorthogonal under the pairing") {
  const Rational t(2, 5);
  const std::size_t L = 12;
  for (std::size_t m = 0; m < 5; ++m) {
    const auto x = eigvec_x<Rational>(m, t, Rational(1), L);
    for (std::size_t n = 0; n < 5; ++n) {
      auto z = dual_eigvec_z<Rational>(n, t);
      z.resize(L, Rational(0));
      const Rational p = pairing<Rational>(x, z);
      if (m == n)
        CHECK(p == Rational(1));
      else
        CHECK(p == Rational(0));
    }
  }
}

TEST_CASE("product-formula candidate for the classical dual") {
  const auto x = c1_dual_eigvec(Complex(2, 0), 6);
  CHECK(x[0] == Complex(1, 0));
  CHECK(x[1] == Complex(0.5, 0));
  CHECK(x[2] == Complex(0.375, 0));
  CHECK(x[3] == Complex(0.3125, 0));

  // z = 1 collapses the product at the first factor
  const auto e0 = c1_dual_eigvec(Complex(1, 0), 5);
  CHECK(e0[0] == Complex(1, 0));
  for (std::size_t i = 1; i < 5; ++i) CHECK(e0[i] == Complex(0, 0));

  CHECK_THROWS_AS(c1_dual_eigvec(Complex(0, 0), 4), std::invalid_argument);
  CHECK_THROWS_AS(c1_dual_eigvec(Complex(1, 0), 0), std::invalid_argument);
}

TEST_CASE("decay diagnostic") {
  SUBCASE("geometric input fits its own tail") {
    std::vector<Complex> geo(128);
    double v = 1.0;
    for (auto& c : geo) {
      c = Complex(v, 0);
      v *= 0.8;
    }
    const auto d = decay_diagnostic(geo, 2.0);
    CHECK(d.trailing_ratio == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(d.partial_sum == doctest::Approx(1.0 / 0.36).epsilon(1e-9));
    CHECK(d.tail_estimate >= 0.0);
    CHECK(d.verdict == "consistent with membership");
  }

  SUBCASE("zero inside the window stops the fit") {
    std::vector<Complex> e0(64);
    e0[0] = Complex(1, 0);
    const auto d = decay_diagnostic(e0, 2.0);
    CHECK(d.partial_sum == 1.0);
    CHECK(d.verdict == "inconclusive");
    CHECK(d.tail_estimate < 0.0);
  }

  SUBCASE("short inputs are inconclusive") {
    const auto d = decay_diagnostic(std::vector<Complex>(8, Complex(1, 0)), 2.0);
    CHECK(d.verdict == "inconclusive");
  }

  CHECK_THROWS_AS(decay_diagnostic({}, 0.5), std::invalid_argument);
}

TEST_CASE("alternating binomial sum identity") {
  for (std::size_t n = 0; n <= 12; ++n) CHECK(binom_identity_check(n));
}

TEST_CASE("spectrum verification report") {
  SUBCASE("float") {
    const auto r = verify_spectrum(RealParam::from_double(0.7), 256,
                                   Mode::Float, 12);
    CHECK(r.domain_label == "d1");
    CHECK(r.cap == 12);
    REQUIRE(r.eigenvalues.size() == 13);
    CHECK(r.eigenvalues.front() == 1.0);
    CHECK(r.eigenvalues.back() == 0.0);
    CHECK(r.max_residual < 1e-13);
    CHECK(r.diagonal_ok);
  }

  SUBCASE("classical parameter flags the domain") {
    const auto r = verify_spectrum(RealParam::from_double(1.0), 32,
                                   Mode::Float, 4);
    CHECK(r.domain_label == "omega-only");
    CHECK(r.max_residual < 1e-13);
  }

  SUBCASE("exact residuals are identically zero") {
    const auto r = verify_spectrum(RealParam::parse("7/10"), 48,
                                   Mode::Exact, 8);
    CHECK(r.residuals_exact_zero);
    CHECK(r.max_residual == 0.0);
    CHECK(r.diagonal_ok);
  }

  CHECK_THROWS_AS(verify_spectrum(RealParam::from_double(0.5), 1, Mode::Float),
                  std::invalid_argument);
}

TEST_CASE("rank and kernel dimension") {
  DenseMatrix<double> id(6);
  for (std::size_t i = 0; i < 6; ++i) id.at(i, i) = 1.0;
  CHECK(matrix_rank(id) == 6);

  CHECK(matrix_rank(DenseMatrix<double>(4)) == 0);

  DenseMatrix<double> rank1(5);
  for (std::size_t r = 0; r < 5; ++r)
    for (std::size_t c = 0; c < 5; ++c)
      rank1.at(r, c) = static_cast<double>((r + 1) * (c + 1));
  CHECK(matrix_rank(rank1) == 1);

  // each eigenvalue 1/(m+1) has a one-dimensional kernel on the truncation
  CHECK(eigen_kernel_dim(0.5, 4, 64) == 1);
  CHECK(eigen_kernel_dim(0.9, 0, 16) == 1);
  CHECK(eigen_kernel_dim(1.0, 2, 32) == 1);
  CHECK_THROWS_AS(eigen_kernel_dim(0.5, 8, 8), std::invalid_argument);
}

TEST_CASE("sequence-level spectral constructors") {
  const auto xf = eigvec(1, RealParam::from_double(0.5),
                         ComplexParam::parse("1"), 5, Mode::Float);
  CHECK(xf.cf()[3] == Complex(0.75, 0));

  CHECK_THROWS_AS(eigvec(1, RealParam::from_double(0.5),
                         ComplexParam::parse("0.5,0.25"), 5, Mode::Exact),
                  std::invalid_argument);

  const auto zq = dual_eigvec(2, RealParam::parse("1/2"), Mode::Exact);
  CHECK(zq.cq()[0] == Rational(1, 4));

  // the finite-support dual statement needs t strictly below 1
  CHECK_THROWS_AS(dual_eigvec(2, RealParam::from_double(1.0), Mode::Float),
                  std::invalid_argument);
}
