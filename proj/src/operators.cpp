#include "cesaro/operators.hpp"

namespace cesaro {

namespace {

template <class S>
std::vector<S> apply_kind(const OperatorSpec& op, const real_t<S>& t,
                          const std::vector<S>& x) {
  switch (op.kind) {
    case OpKind::Ct:
      return apply_ct<S>(t, x);
    case OpKind::Dphi:
      return apply_dphi<S>(x);
    case OpKind::Shift:
      return apply_shift<S>(op.shift_power, x);
    case OpKind::Rt:
      return apply_rt<S>(t, x);
    case OpKind::CtDual:
      return apply_ct_dual<S>(t, x);
  }
  throw std::logic_error("unreachable");
}

}  // namespace

Sequence apply(const OperatorSpec& op, const Sequence& x) {
  op.validate();
  if (x.mode() == Mode::Float)
    return Sequence(apply_kind<Complex>(op, op.t.value, x.cf()));
  const Rational t = (op.kind == OpKind::Dphi || op.kind == OpKind::Shift)
                         ? Rational(0)
                         : op.t.require_exact("apply");
  return Sequence(apply_kind<Rational>(op, t, x.cq()));
}

Sequence apply_inverse(const RealParam& t, const Sequence& y) {
  if (y.mode() == Mode::Float) {
    if (!(t.value >= 0.0 && t.value <= 1.0))
      throw std::invalid_argument("t must lie in [0, 1]");
    return Sequence(apply_inverse_ct<Complex>(t.value, y.cf()));
  }
  const Rational& tq = t.require_exact("inverse");
  if (tq < 0 || tq > 1) throw std::invalid_argument("t must lie in [0, 1]");
  return Sequence(apply_inverse_ct<Rational>(tq, y.cq()));
}

ComplexParam ComplexParam::parse(const std::string& s) {
  const auto comma = s.find(',');
  if (comma != std::string::npos) {
    const RealParam re = RealParam::parse(s.substr(0, comma));
    const RealParam im = RealParam::parse(s.substr(comma + 1));
    ComplexParam out{Complex(re.value, im.value), std::nullopt};
    if (im.value == 0.0 && re.exact) out.exact = re.exact;
    return out;
  }
  const RealParam re = RealParam::parse(s);
  return ComplexParam{Complex(re.value, 0.0), re.exact};
}

Sequence apply_resolvent(const RealParam& t, const ComplexParam& nu,
                         const Sequence& y, const ResolventOptions& opt,
                         bool coordinate_route) {
  if (y.mode() == Mode::Float) {
    if (!(t.value >= 0.0 && t.value < 1.0))
      throw std::invalid_argument("resolvent needs t in [0, 1)");
    if (coordinate_route)
      return Sequence(
          resolvent_closed_form<Complex>(t.value, nu.value, y.cf(), opt));
    return Sequence(
        resolvent_forward<Complex>(t.value, nu.value, y.cf(), opt));
  }
  const Rational& tq = t.require_exact("resolvent");
  if (tq < 0 || tq >= 1)
    throw std::invalid_argument("resolvent needs t in [0, 1)");
  if (!nu.exact)
    throw std::invalid_argument("resolvent: exact mode needs a rational nu");
  if (coordinate_route)
    return Sequence(
        resolvent_closed_form<Rational>(tq, *nu.exact, y.cq(), opt));
  return Sequence(resolvent_forward<Rational>(tq, *nu.exact, y.cq(), opt));
}

Sequence solve_range(const RealParam& t, const Sequence& y, double zero_tol) {
  if (y.mode() == Mode::Float) {
    if (!(t.value >= 0.0 && t.value < 1.0))
      throw std::invalid_argument("range solve needs t in [0, 1)");
    return Sequence(solve_i_minus_ct<Complex>(t.value, y.cf(), zero_tol));
  }
  const Rational& tq = t.require_exact("solve-range");
  if (tq < 0 || tq >= 1)
    throw std::invalid_argument("range solve needs t in [0, 1)");
  return Sequence(solve_i_minus_ct<Rational>(tq, y.cq(), zero_tol));
}

MatrixAny materialize(const RealParam& t, std::size_t N, Mode mode) {
  MatrixAny out{mode, DenseMatrix<double>(0), DenseMatrix<Rational>(0)};
  if (mode == Mode::Float) {
    if (!(t.value >= 0.0 && t.value <= 1.0))
      throw std::invalid_argument("t must lie in [0, 1]");
    out.f = materialize_ct<double>(t.value, N);
  } else {
    const Rational& tq = t.require_exact("matrix");
    if (tq < 0 || tq > 1) throw std::invalid_argument("t must lie in [0, 1]");
    out.q = materialize_ct<Rational>(tq, N);
  }
  return out;
}

}  // namespace cesaro
