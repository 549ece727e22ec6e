#include "cesaro/numeric.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>

namespace cesaro {

std::string Exponent::str() const {
  if (inf_) return "inf";
  return format_real(p_);
}

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_rational(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    const BigInt num(s.substr(0, slash));
    const BigInt den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational: '" + s + "'");
  }
}

RealParam RealParam::parse(const std::string& s) {
  const bool fractional = s.find('/') != std::string::npos;
  const bool integral =
      !s.empty() &&
      s.find_first_not_of("0123456789+-") == std::string::npos;
  if (fractional || integral) {
    const Rational q = parse_rational(s);
    return from_rational(q);
  }
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || (end && *end != '\0'))
    throw std::invalid_argument("not a real parameter: '" + s + "'");
  return from_double(v);
}

}  // namespace cesaro
