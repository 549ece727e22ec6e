#include "doctest.h"

#include <cmath>
#include <vector>

#include "cesaro/spaces.hpp"
#include "test_util.hpp"

using namespace cesaro;

TEST_CASE("exponent arithmetic") {
  CHECK_THROWS_AS(Exponent(0.5), std::invalid_argument);
  CHECK_THROWS_AS(Exponent(std::nan("")), std::invalid_argument);
  CHECK_THROWS_AS(Exponent(1e301), std::invalid_argument);

  CHECK(Exponent::inf().is_inf());
  CHECK_THROWS_AS(Exponent::inf().value(), std::logic_error);

  CHECK(Exponent(1.0).conjugate().is_inf());
  CHECK(Exponent::inf().conjugate() == Exponent(1.0));
  CHECK(Exponent(2.0).conjugate() == Exponent(2.0));
  CHECK(Exponent(4.0).conjugate().value() == doctest::Approx(4.0 / 3.0));
  CHECK(Exponent(2.0).str() == "2");
  CHECK(Exponent::inf().str() == "inf");
}

TEST_CASE("float norms on small vectors") {
  const std::vector<double> m = {3.0, 4.0};
  CHECK(lp_norm_mag(m, Exponent(2.0)) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(lp_norm_mag(m, Exponent(1.0)) == 7.0);
  CHECK(lp_norm_mag(m, Exponent::inf()) == 4.0);

  // averages of (0, 2, 1) are (0, 1, 1); majorant is (2, 2, 1)
  const std::vector<double> x = {0.0, 2.0, 1.0};
  CHECK(ces_norm_mag(x, 1.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(dp_norm_mag(x, 1.0) == 5.0);
  CHECK(dp_norm_mag(x, 2.0) == 3.0);
  CHECK(omega_seminorm_mag(x, 1) == 2.0);
  CHECK_THROWS_AS(omega_seminorm_mag(x, 3), std::invalid_argument);
}

TEST_CASE("prefix averages and suffix maxima") {
  const std::vector<double> ones = {1.0, 1.0, 1.0};
  CHECK(prefix_averages(ones) == std::vector<double>{1.0, 1.0, 1.0});

  std::vector<double> e0 = {1.0, 0.0, 0.0, 0.0};
  const auto a = prefix_averages(e0);
  for (std::size_t n = 0; n < a.size(); ++n)
    CHECK(a[n] == doctest::Approx(1.0 / (n + 1)).epsilon(1e-16));

  const std::vector<Rational> q = {Rational(1, 2), Rational(-1, 3)};
  const auto aq = prefix_averages(magnitudes(q));
  CHECK(aq[0] == Rational(1, 2));
  CHECK(aq[1] == Rational(5, 12));

  CHECK(suffix_max(std::vector<double>{0.0, 2.0, 1.0}) ==
        std::vector<double>{2.0, 2.0, 1.0});
}

TEST_CASE("averaged norm of a basis vector against the analytic tail") {
  // averages of e_0 are 1/(n+1); the squared l2 sum over n < N is
  // pi^2/6 - psi'(N+1) with psi'(N+1) strictly between 1/(N+1) and 1/N
  const std::size_t N = 100000;
  std::vector<double> e0(N, 0.0);
  e0[0] = 1.0;
  const double got = ces_norm_mag(e0, 2.0);
  const double zeta2 = 1.6449340668482264;
  CHECK(got > std::sqrt(zeta2 - 1.0 / static_cast<double>(N)));
  CHECK(got < std::sqrt(zeta2 - 1.0 / static_cast<double>(N + 1)));
}

TEST_CASE("exact norms where the exponent admits them") {
  const std::vector<Rational> x = {Rational(1, 2), Rational(-1, 3)};
  CHECK(norm_exact(x, SpaceSpec::lp(Exponent(1.0))) == Rational(5, 6));
  CHECK(norm_exact(x, SpaceSpec::lp(Exponent::inf())) == Rational(1, 2));
  CHECK(norm_exact(x, SpaceSpec::ces(1.0)) == Rational(11, 12));
  CHECK(norm_exact(x, SpaceSpec::omega(1)) == Rational(1, 2));

  const std::vector<Rational> y = {Rational(0), Rational(2), Rational(1)};
  CHECK(norm_exact(y, SpaceSpec::dp(1.0)) == Rational(5));

  CHECK_THROWS_WITH_AS(
      norm_exact(x, SpaceSpec::lp(Exponent(2.0))),
      "exact evaluation covers p in {1, inf} and the coordinate seminorms",
      std::invalid_argument);
}

TEST_CASE("space validation and names") {
  SpaceSpec bad{SpaceKind::Ces, Exponent::inf(), 0};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  CHECK(SpaceSpec::lp(Exponent::inf()).name() == "lp(inf)");
  CHECK(SpaceSpec::ces(2.0).name() == "ces(2)");
  CHECK(SpaceSpec::dp(1.5).name() == "dp(1.5)");
  CHECK(SpaceSpec::omega(3).name() == "r3");
}

TEST_CASE("sequence-level norm dispatch") {
  const Sequence xf(std::vector<Complex>{Complex(3, 0), Complex(0, 4)});
  CHECK(norm(xf, SpaceSpec::lp(Exponent(2.0))) ==
        doctest::Approx(5.0).epsilon(1e-15));

  // exact input with p = 1 goes through the exact path
  const Sequence xq(std::vector<Rational>{Rational(1, 2), Rational(-1, 3)});
  CHECK(norm(xq, SpaceSpec::ces(1.0)) ==
        doctest::Approx(11.0 / 12.0).epsilon(1e-16));
  // p = 2 falls back to double evaluation
  const Sequence yq(std::vector<Rational>{Rational(3), Rational(-4)});
  CHECK(norm(yq, SpaceSpec::lp(Exponent(2.0))) ==
        doctest::Approx(5.0).epsilon(1e-15));
}

TEST_CASE("majorant of a sequence") {
  const Sequence xf(std::vector<Complex>{Complex(0, 3), Complex(-4, 0),
                                         Complex(1, 0)});
  const auto mf = majorant(xf);
  CHECK(mf.cf()[0] == Complex(4, 0));
  CHECK(mf.cf()[1] == Complex(4, 0));
  CHECK(mf.cf()[2] == Complex(1, 0));

  const Sequence xq(std::vector<Rational>{Rational(1), Rational(-5), Rational(2)});
  const auto mq = majorant(xq);
  CHECK(mq.cq()[0] == Rational(5));
  CHECK(mq.cq()[1] == Rational(5));
  CHECK(mq.cq()[2] == Rational(2));
}

TEST_CASE("exponent ladders") {
  LadderSpec plus{SpaceKind::Lp, Exponent(2.0), LadderDirection::Plus, 3};
  const auto pe = plus.exponents();
  REQUIRE(pe.size() == 3);
  CHECK(pe[0] == doctest::Approx(3.0));
  CHECK(pe[1] == doctest::Approx(2.5));
  CHECK(pe[2] == doctest::Approx(2.0 + 1.0 / 3.0));

  LadderSpec minus{SpaceKind::Lp, Exponent(2.0), LadderDirection::Minus, 3};
  const auto me = minus.exponents();
  CHECK(me[0] == doctest::Approx(1.5));
  CHECK(me[1] == doctest::Approx(1.0 + 2.0 / 3.0));
  CHECK(me[2] == doctest::Approx(1.75));

  LadderSpec from_inf{SpaceKind::Lp, Exponent::inf(), LadderDirection::Minus, 3};
  CHECK(from_inf.exponents() == std::vector<double>{2.0, 3.0, 4.0});

  LadderSpec bad_plus{SpaceKind::Lp, Exponent::inf(), LadderDirection::Plus, 2};
  CHECK_THROWS_AS(bad_plus.validate(), std::invalid_argument);
  LadderSpec bad_minus{SpaceKind::Lp, Exponent(1.0), LadderDirection::Minus, 2};
  CHECK_THROWS_AS(bad_minus.validate(), std::invalid_argument);
  LadderSpec bad_family{SpaceKind::OmegaN, Exponent(2.0), LadderDirection::Plus, 2};
  CHECK_THROWS_AS(bad_family.validate(), std::invalid_argument);
  LadderSpec bad_ces{SpaceKind::Ces, Exponent::inf(), LadderDirection::Minus, 2};
  CHECK_THROWS_AS(bad_ces.validate(), std::invalid_argument);
  LadderSpec zero{SpaceKind::Lp, Exponent(2.0), LadderDirection::Plus, 0};
  CHECK_THROWS_AS(zero.validate(), std::invalid_argument);
}

TEST_CASE("ladder norms decrease as the exponent grows") {
  const Sequence x(std::vector<Complex>{Complex(0.9, 0), Complex(0.5, 0.2),
                                        Complex(-0.3, 0), Complex(0.1, 0)});
  // plus ladder exponents fall toward the base, so lp norms rise along it
  LadderSpec plus{SpaceKind::Lp, Exponent(2.0), LadderDirection::Plus, 4};
  const auto ns = ladder_norms(x, plus);
  REQUIRE(ns.size() == 4);
  for (std::size_t i = 0; i + 1 < ns.size(); ++i) CHECK(ns[i] <= ns[i + 1]);

  LadderSpec minus{SpaceKind::Lp, Exponent(2.0), LadderDirection::Minus, 4};
  const auto ms = ladder_norms(x, minus);
  for (std::size_t i = 0; i + 1 < ms.size(); ++i) CHECK(ms[i] >= ms[i + 1]);
}

TEST_CASE("trailing ratio estimate") {
  std::vector<Complex> geo(32);
  double v = 3.0;
  for (auto& c : geo) {
    c = Complex(v, 0);
    v *= 0.8;
  }
  CHECK(ratio_beta(Sequence(geo), 10) == doctest::Approx(0.8).epsilon(1e-12));

  std::vector<Rational> geoq(16);
  Rational q = 1;
  for (auto& c : geoq) {
    c = q;
    q *= Rational(4, 5);
  }
  CHECK(ratio_beta(Sequence(geoq), 5) == doctest::Approx(0.8).epsilon(1e-15));

  CHECK_THROWS_AS(ratio_beta(Sequence(geo), 0), std::invalid_argument);
  CHECK_THROWS_AS(ratio_beta(Sequence(geo), 32), std::invalid_argument);

  const Sequence with_zero(std::vector<Complex>{Complex(1, 0), Complex(0, 0),
                                                Complex(1, 0)});
  CHECK_THROWS_AS(ratio_beta(with_zero, 2), std::domain_error);
}
