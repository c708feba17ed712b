#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace uaw {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number. cpp_rational keeps gcd(num,den)=1 and den>0, which is
// exactly the canonical form we rely on for syntactic equality everywhere.
using QRational = boost::multiprecision::cpp_rational;

// Division by zero anywhere in the coefficient field.
struct division_by_zero : std::domain_error {
  division_by_zero() : std::domain_error("division by zero") {}
  explicit division_by_zero(const std::string& what) : std::domain_error(what) {}
};

// Specializing q at a zero of the denominator (or at q=0).
struct pole_error : std::domain_error {
  explicit pole_error(const std::string& what) : std::domain_error(what) {}
};

// "−3/4", "5" — shortest faithful form.
std::string rat_str(const QRational& r);

// Always "p/q", e.g. "5/1"; used where a fixed shape matters (JSON).
std::string rat_str_slash(const QRational& r);

// Accepts the forms rat_str produces. Throws std::invalid_argument otherwise.
QRational rat_parse(std::string_view s);

}  // namespace uaw
