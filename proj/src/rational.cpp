#include "wreath/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace wreath {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto fail = [&text]() -> void {
    throw std::invalid_argument("malformed rational '" + text + "'");
  };

  std::string num = text;
  std::string den = "1";
  if (const auto slash = text.find('/'); slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  std::string num_digits = num;
  if (!num_digits.empty() && num_digits[0] == '-') num_digits.erase(0, 1);
  if (!all_digits(num_digits) || !all_digits(den)) fail();

  mpz_class n(num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw std::invalid_argument("rational with zero denominator: '" + text + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& value) {
  return value.get_str();
}

bool is_nonnegative_integer(const Rational& value) {
  return value.get_den() == 1 && sgn(value) >= 0;
}

}  // namespace wreath
