#include "tnorder/numeric.hpp"

#include "tnorder/errors.hpp"

#include <cctype>

namespace tnorder {

std::string to_decimal(const Cost& value) { return value.str(); }

std::string to_string(const Rational& value) {
  const Cost num = boost::multiprecision::numerator(value);
  const Cost den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Cost parse_decimal(std::string_view text) {
  if (text.empty()) throw ValidationError("empty integer literal");
  Cost value = 0;
  for (char ch : text) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw ValidationError("invalid integer literal '" + std::string(text) + "'");
    }
    value = value * 10 + (ch - '0');
  }
  return value;
}

}  // namespace tnorder
