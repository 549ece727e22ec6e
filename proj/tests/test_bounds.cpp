#include "doctest.h"

#include <cmath>
#include <limits>
#include <vector>

#include "cesaro/bounds.hpp"
#include "test_util.hpp"

using namespace cesaro;

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  long double s = 0.0L;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += static_cast<long double>(a[i]) * b[i];
  return static_cast<double>(s);
}

}  // namespace

TEST_CASE("column-sum norm of the averaging truncation") {
  // t = 0 leaves the coordinate divide, norm 1 at e_0
  CHECK(l1_opnorm(0.0, 64) == 1.0);

  // closed form (1/t) log(1/(1-t)); the truncation tail is below 2^-250
  CHECK(l1_opnorm(0.5, 256) ==
        doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-13));
  CHECK(l1_opnorm(0.9, 512) ==
        doctest::Approx(std::log(10.0) / 0.9).epsilon(1e-13));

  // classical case grows like the harmonic numbers
  CHECK(l1_opnorm(1.0, 4) == doctest::Approx(25.0 / 12.0).epsilon(1e-15));

  CHECK(l1_opnorm(0.7, 128) <= l1_opnorm(0.7, 256));

  CHECK_THROWS_AS(l1_opnorm(-0.1, 8), std::invalid_argument);
  CHECK_THROWS_AS(l1_opnorm(0.5, 0), std::invalid_argument);
}

TEST_CASE("dual row sums agree with the column-sum route") {
  for (double t : {0.0, 0.3, 0.8}) {
    const double a = dual_linf_opnorm(t, 200);
    const double b = l1_opnorm(t, 200);
    CHECK(a == doctest::Approx(b).epsilon(1e-13));
    if (t < 1.0) CHECK(a <= 1.0 / (1.0 - t) + 1e-12);
  }
}

TEST_CASE("adjoint pairs satisfy the inner-product identity") {
  const std::size_t N = 64;
  const auto x = testutil::random_real(71, N);
  const auto y = testutil::random_real(72, N);

  const std::vector<OperatorSpec> ops = {
      {OpKind::Ct, RealParam::from_double(0.6), 1},
      {OpKind::CtDual, RealParam::from_double(0.6), 1},
      {OpKind::Rt, RealParam::from_double(0.6), 1},
      {OpKind::Dphi, RealParam::from_double(0.0), 1},
      {OpKind::Shift, RealParam::from_double(0.0), 3},
  };
  for (const auto& op : ops) {
    const double lhs = dot(apply_op_real(op, x), y);
    const double rhs = dot(x, apply_op_adjoint_real(op, y));
    CHECK(std::abs(lhs - rhs) < 1e-13 * std::max(1.0, std::abs(lhs)));
  }
}

TEST_CASE("norm estimator") {
  const OperatorSpec ct{OpKind::Ct, RealParam::from_double(0.5), 1};

  SUBCASE("on l1 the basis trials attain the column-sum norm") {
    const double est =
        opnorm_estimate(ct, SpaceSpec::lp(Exponent(1.0)), 64, 20, 5);
    CHECK(est == doctest::Approx(l1_opnorm(0.5, 64)).epsilon(1e-12));
  }

  SUBCASE("l2 runs the Gram iteration, other spaces do not") {
    const auto d2 =
        opnorm_estimate_detail(ct, SpaceSpec::lp(Exponent(2.0)), 64, 10, 5);
    CHECK(d2.power_iter_used);
    CHECK(d2.iterations >= 1);
    CHECK(d2.value >= d2.trial_max);
    CHECK(d2.value >= d2.power_iter);

    const auto dc = opnorm_estimate_detail(ct, SpaceSpec::ces(2.0), 64, 10, 5);
    CHECK_FALSE(dc.power_iter_used);
    CHECK(dc.value == dc.trial_max);
  }

  SUBCASE("classical l2 value matches the pinned truncation norm") {
    const OperatorSpec c1{OpKind::Ct, RealParam::from_double(1.0), 1};
    const double est =
        opnorm_estimate(c1, SpaceSpec::lp(Exponent(2.0)), 512, 8, 3);
    CHECK(est == doctest::Approx(1.720283314990).epsilon(1e-6));
  }

  SUBCASE("deterministic in the seed") {
    const double a = opnorm_estimate(ct, SpaceSpec::dp(2.0), 48, 30, 17);
    const double b = opnorm_estimate(ct, SpaceSpec::dp(2.0), 48, 30, 17);
    CHECK(a == b);
  }

  CHECK_THROWS_AS(opnorm_estimate(ct, SpaceSpec::lp(Exponent(2.0)), 0, 4, 1),
                  std::invalid_argument);
}

TEST_CASE("bound suite below the classical parameter") {
  const auto reports = bound_suite(0.5, 2.0, 128, 40, 7);
  REQUIRE(reports.size() == 5);
  CHECK(reports[0].claim == "ces-ratio");
  CHECK(reports[1].claim == "dp-ratio");
  CHECK(reports[2].claim == "lp-window");
  CHECK(reports[3].claim == "lp-floor");
  CHECK(reports[4].claim == "dual-sup-row");
  for (const auto& r : reports) {
    CHECK(r.verdict == Verdict::Holds);
    CHECK(r.margin == r.bound - r.observed);
  }

  // closed-form bounds for t = 1/2, p = 2
  CHECK(reports[0].bound == doctest::Approx(2.0));
  CHECK(reports[1].bound == doctest::Approx(std::pow(0.5, -1.5)));
  CHECK(reports[2].bound == doctest::Approx(std::sqrt(2.0 * std::log(2.0))));
  CHECK(reports[4].bound == doctest::Approx(2.0));
  CHECK(reports[4].observed ==
        doctest::Approx(l1_opnorm(0.5, 128)).epsilon(1e-12));
}

TEST_CASE("bound suite at the boundary parameters") {
  SUBCASE("t = 1 reports progress toward the conjugate exponent") {
    const auto reports = bound_suite(1.0, 2.0, 128, 20, 7);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].claim == "ces-ratio-progress");
    CHECK(reports[0].verdict == Verdict::AsymptoticProgress);
    CHECK(reports[0].bound == 2.0);
    CHECK(reports[0].observed < 2.0);
    CHECK(reports[0].observed > 1.0);
  }

  SUBCASE("t = 0 pins the lp window at 1") {
    const auto reports = bound_suite(0.0, 3.0, 64, 20, 7);
    REQUIRE(reports.size() == 5);
    CHECK(reports[2].bound == 1.0);
    for (const auto& r : reports) CHECK(r.verdict == Verdict::Holds);
  }
}

TEST_CASE("bound suite input validation") {
  CHECK_THROWS_AS(bound_suite(1.5, 2.0, 64, 8, 1), std::invalid_argument);
  CHECK_THROWS_AS(bound_suite(0.5, 1.0, 64, 8, 1), std::invalid_argument);
  CHECK_THROWS_AS(bound_suite(0.5, std::numeric_limits<double>::infinity(), 64,
                              8, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(bound_suite(0.5, 2.0, 0, 8, 1), std::invalid_argument);
}

TEST_CASE("shift extremality in the majorant spaces") {
  const auto r2 = shift_dp_extremality(3, 2.0, 64, 20, 9);
  CHECK(r2.claim == "shift-dp-extremal");
  CHECK(r2.verdict == Verdict::Holds);
  CHECK(r2.bound == 2.0);
  CHECK(r2.observed == doctest::Approx(2.0).epsilon(1e-12));

  const auto r1 = shift_dp_extremality(3, 1.0, 64, 20, 9);
  CHECK(r1.bound == 4.0);
  CHECK(r1.verdict == Verdict::Holds);

  CHECK_THROWS_AS(shift_dp_extremality(8, 2.0, 8, 4, 1), std::invalid_argument);
}

TEST_CASE("verdict names") {
  CHECK(verdict_name(Verdict::Holds) == "holds");
  CHECK(verdict_name(Verdict::Violated) == "violated");
  CHECK(verdict_name(Verdict::AsymptoticProgress) == "asymptotic-progress");
}
