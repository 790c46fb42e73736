#include "wbary/exact.hpp"

#include "wbary/error.hpp"

#include <cctype>
#include <limits>

namespace wbary {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::NonPositiveRho: return "NonPositiveRho";
    case ErrorCode::InconsistentComponents: return "InconsistentComponents";
    case ErrorCode::TooManySingularPoints: return "TooManySingularPoints";
    case ErrorCode::TooManyVertices: return "TooManyVertices";
    case ErrorCode::WeightOutOfRange: return "WeightOutOfRange";
    case ErrorCode::OutOfScope: return "OutOfScope";
  }
  return "UnknownError";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// cpp_int reads a leading 0 as an octal prefix.
BigInt decimal_digits(std::string_view digits) {
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  return BigInt{std::string(digits)};
}

[[noreturn]] void bad_number(std::string_view text, const char* why) {
  throw Error(ErrorCode::ParseError,
              "cannot parse '" + std::string(text) + "' as an exact number (" + why + ")");
}

}  // namespace

BigInt parse_integer(std::string_view text) {
  const std::string_view original = text;
  text = trim(text);
  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (!all_digits(text)) bad_number(original, "expected an integer");
  BigInt value = decimal_digits(text);
  return negative ? BigInt(-value) : value;
}

Rational parse_rational(std::string_view text) {
  const std::string_view original = text;
  text = trim(text);
  if (text.empty()) bad_number(original, "empty");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash));
    BigInt den = parse_integer(text.substr(slash + 1));
    if (den == 0) bad_number(original, "zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    return Rational(num, den);
  }

  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  std::string_view int_part = text;
  std::string_view frac_part;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    int_part = text.substr(0, dot);
    frac_part = text.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) bad_number(original, "no digits");
    if (!int_part.empty() && !all_digits(int_part)) bad_number(original, "bad integer part");
    if (!frac_part.empty() && !all_digits(frac_part)) bad_number(original, "bad fractional part");
  } else if (!all_digits(int_part)) {
    bad_number(original, "expected p/q or a finite decimal");
  }

  std::string digits(int_part);
  digits += frac_part;
  if (digits.empty()) digits = "0";
  BigInt num = decimal_digits(digits);
  BigInt den = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac_part.size()));
  Rational value(num, den);
  return negative ? Rational(-value) : value;
}

std::string to_string(const BigInt& n) { return n.str(); }

std::string to_string(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

BigInt floor_rational(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  BigInt quotient = num / den;  // truncates toward zero
  if (num < 0 && quotient * den != num) quotient -= 1;
  return quotient;
}

std::int64_t to_int64(const BigInt& n) {
  if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorCode::OutOfScope, "integer " + n.str() + " does not fit a 64-bit count");
  }
  return static_cast<std::int64_t>(n);
}

}  // namespace wbary
