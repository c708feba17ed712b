#include "uaw/rational.hpp"

namespace uaw {

std::string rat_str(const QRational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

std::string rat_str_slash(const QRational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

QRational rat_parse(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) return QRational(BigInt(std::string(s)));
    BigInt num{std::string(s.substr(0, slash))};
    BigInt den{std::string(s.substr(slash + 1))};
    if (den == 0) throw division_by_zero("rational literal with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    return QRational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational literal: " + std::string(s));
  }
}

}  // namespace uaw
