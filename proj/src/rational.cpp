#include "hyperdiff/rational.hpp"

#include "hyperdiff/error.hpp"

#include <algorithm>
#include <cctype>

namespace hyperdiff {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void bad(std::string_view text) {
  throw Error(ErrorKind::Parse, "not a rational number: \"" + std::string(text) + "\"");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad(text);
    const Integer d{std::string(den)};
    if (d == 0) bad(text);
    value = Rational(Integer(std::string(num)), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      bad(text);
    }
    std::string digits = std::string(whole) + std::string(frac);
    Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(frac.size()));
    value = Rational(Integer(digits), scale);
  } else {
    if (!all_digits(s)) bad(text);
    value = Rational(Integer(std::string(s)));
  }
  return negative ? Rational(-value) : value;
}

std::string format_rational(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string format_decimal(const Rational& value, int digits) {
  if (digits < 0) digits = 0;
  const Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(digits));
  const bool negative = value < 0;
  const Rational magnitude = negative ? Rational(-value) : value;
  const Rational scaled = magnitude * scale;
  const Integer num = boost::multiprecision::numerator(scaled);
  const Integer den = boost::multiprecision::denominator(scaled);
  Integer q = num / den;
  if ((num % den) * 2 >= den) q += 1;

  std::string body = q.str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  if (negative && q != 0) body.insert(0, "-");
  return body;
}

}  // namespace hyperdiff
