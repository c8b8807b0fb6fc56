#include "degenkit/numeric.hpp"

#include <cctype>

#include "degenkit/error.hpp"

namespace degenkit {
namespace {

bool is_decimal(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) return false;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  if (!is_decimal(text) || text.size() > 4096) {
    throw Error(Errc::Parse, "expected an integer, got '" + std::string(text.substr(0, 40)) + "'");
  }
  std::string digits(text);
  if (digits.front() == '+') digits.erase(0, 1);
  return Integer(digits, 10);
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw Error(Errc::Parse, "signed denominator in '" + std::string(text) + "'");
  }
  Integer den = parse_integer(den_text);
  if (den == 0) throw Error(Errc::Parse, "zero denominator in '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

long parse_small_int(std::string_view text, long lo, long hi, std::string_view what) {
  Integer v = parse_integer(text);
  if (v < lo || v > hi) {
    throw Error(Errc::Parse, std::string(what) + " out of range [" + std::to_string(lo) + ", " +
                                 std::to_string(hi) + "]: " + std::string(text.substr(0, 40)));
  }
  return v.get_si();
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) { return value.get_str(); }

}  // namespace degenkit
