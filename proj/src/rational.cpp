#include "aef/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "aef/error.hpp"

namespace aef {

namespace {

bool is_integer_literal(std::string_view text) {
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    ++pos;
  }
  if (pos == text.size()) {
    return false;
  }
  for (; pos < text.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
      return false;
    }
  }
  return true;
}

mpz_class parse_integer(std::string_view text) {
  if (!is_integer_literal(text)) {
    throw InputError("malformed rational");
  }
  if (text.front() == '+') {
    text.remove_prefix(1);
  }
  return mpz_class(std::string(text), 10);
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(mpz_class(std::to_string(value), 10)) {}

Rational::Rational(const mpz_class& integer) : value_(integer) {}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
}

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) {
    throw InputError("zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(std::int64_t numerator, std::int64_t denominator)
    : Rational(mpz_class(std::to_string(numerator), 10),
               mpz_class(std::to_string(denominator), 10)) {}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text));
  }
  const auto den_text = text.substr(slash + 1);
  if (den_text.find('/') != std::string_view::npos) {
    throw InputError("malformed rational");
  }
  const mpz_class num = parse_integer(text.substr(0, slash));
  const mpz_class den = parse_integer(den_text);
  return Rational(num, den);
}

std::string Rational::str() const {
  if (is_integer()) {
    return value_.get_num().get_str();
  }
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

mpz_class Rational::ceil() const {
  mpz_class out;
  mpz_cdiv_q(out.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) {
    throw std::domain_error("division by zero");
  }
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const {
  return Rational(mpq_class(-value_));
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.str();
}

Rational average_of(const Rational& total, std::size_t count) {
  if (count == 0) {
    return Rational{};
  }
  return total / Rational(static_cast<std::int64_t>(count));
}

}  // namespace aef
