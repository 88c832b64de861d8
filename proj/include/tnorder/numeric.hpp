#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace tnorder {

// Number of scalar multiplications, tensor sizes and leg dimensions. Never
// rounded: optimality is checked by exact equality.
using Cost = boost::multiprecision::cpp_int;

// Normalized fraction with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

std::string to_decimal(const Cost& value);
std::string to_string(const Rational& value);

// Accepts a plain non-negative decimal integer; throws ValidationError.
Cost parse_decimal(std::string_view text);

}  // namespace tnorder
