#include "gjt/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace gjt {

namespace {

BigInt parse_integer(std::string_view digits, std::string_view whole) {
  std::string_view body = digits;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  if (body.empty()) throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
  for (char c : body) {
    if (c < '0' || c > '9') throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
  }
  std::string text(digits.front() == '+' ? digits.substr(1) : digits);
  return BigInt(text, 10);
}

}  // namespace

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  const BigInt num = parse_integer(text.substr(0, slash), text);
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && den_text.front() == '-') {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  const BigInt den = parse_integer(den_text, text);
  if (den == 0) throw std::invalid_argument("rational with zero denominator: '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string Rational::str() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.value_ == 0) throw std::domain_error("rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace gjt
