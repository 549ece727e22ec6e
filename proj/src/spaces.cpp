#include "cesaro/spaces.hpp"

#include <cmath>

namespace cesaro {

std::string SpaceSpec::name() const {
  switch (kind) {
    case SpaceKind::Lp:
      return "lp(" + p.str() + ")";
    case SpaceKind::Ces:
      return "ces(" + p.str() + ")";
    case SpaceKind::Dp:
      return "dp(" + p.str() + ")";
    case SpaceKind::OmegaN:
      return "r" + std::to_string(seminorm_index);
  }
  return "?";
}

Rational norm_exact(const std::vector<Rational>& x, const SpaceSpec& s) {
  s.validate();
  const auto mags = magnitudes(x);
  switch (s.kind) {
    case SpaceKind::Lp: {
      if (s.p.is_inf()) {
        Rational r = 0;
        for (const auto& m : mags)
          if (m > r) r = m;
        return r;
      }
      if (s.p.value() == 1.0) {
        Rational r = 0;
        for (const auto& m : mags) r += m;
        return r;
      }
      break;
    }
    case SpaceKind::Ces: {
      if (s.p.value() == 1.0) {
        Rational r = 0;
        for (const auto& a : prefix_averages(mags)) r += a;
        return r;
      }
      break;
    }
    case SpaceKind::Dp: {
      if (s.p.value() == 1.0) {
        Rational r = 0;
        for (const auto& m : suffix_max(mags)) r += m;
        return r;
      }
      break;
    }
    case SpaceKind::OmegaN: {
      if (s.seminorm_index >= mags.size())
        throw std::invalid_argument("seminorm index outside truncation");
      Rational r = 0;
      for (std::size_t j = 0; j <= s.seminorm_index; ++j)
        if (mags[j] > r) r = mags[j];
      return r;
    }
  }
  throw std::invalid_argument(
      "exact evaluation covers p in {1, inf} and the coordinate seminorms");
}

Sequence majorant(const Sequence& x) {
  if (x.mode() == Mode::Float) {
    auto m = suffix_max(magnitudes(x.cf()));
    std::vector<Complex> out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) out[i] = Complex(m[i], 0.0);
    return Sequence(std::move(out));
  }
  return Sequence(suffix_max(magnitudes(x.cq())));
}

double norm(const Sequence& x, const SpaceSpec& s) {
  if (x.mode() == Mode::Float) return norm_vec(x.cf(), s);
  // rational input: exact where the space admits it, double elsewhere
  s.validate();
  const bool exactable =
      s.kind == SpaceKind::OmegaN ||
      (s.p.is_inf() && s.kind == SpaceKind::Lp) ||
      (!s.p.is_inf() && s.p.value() == 1.0);
  if (exactable) return static_cast<double>(norm_exact(x.cq(), s));
  return norm_vec(x.cq(), s);
}

std::vector<double> ladder_norms(const Sequence& x, const LadderSpec& l) {
  l.validate();
  std::vector<double> out;
  out.reserve(l.count);
  for (double pk : l.exponents()) {
    SpaceSpec s{l.family, Exponent(pk), 0};
    out.push_back(norm(x, s));
  }
  return out;
}

double ratio_beta(const Sequence& x, std::size_t window) {
  const std::size_t n = x.size();
  if (window < 1 || window + 1 > n)
    throw std::invalid_argument("window must satisfy 1 <= window <= N - 1");
  std::vector<double> mags;
  if (x.mode() == Mode::Float) {
    mags = magnitudes(x.cf());
  } else {
    mags.reserve(n);
    for (const auto& q : x.cq())
      mags.push_back(static_cast<double>(ScalarOps<Rational>::abs(q)));
  }
  long double acc = 0.0L;
  for (std::size_t j = n - window - 1; j + 1 < n; ++j) {
    if (mags[j] == 0.0 || mags[j + 1] == 0.0)
      throw std::domain_error("zero coordinate inside the ratio window");
    acc += static_cast<long double>(mags[j + 1]) / mags[j];
  }
  return static_cast<double>(acc / static_cast<long double>(window));
}

}  // namespace cesaro
