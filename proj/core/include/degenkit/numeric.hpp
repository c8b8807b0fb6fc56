#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace degenkit {

using Integer = mpz_class;
using Rational = mpq_class;

/// Strict decimal integer: optional sign followed by at least one digit.
/// Throws Error(Parse) on anything else.
Integer parse_integer(std::string_view text);

/// Accepts an integer or `p/q` with q nonzero; the result is canonicalized.
Rational parse_rational(std::string_view text);

/// Narrowing parse for small structural quantities (dimensions, counts).
long parse_small_int(std::string_view text, long lo, long hi, std::string_view what);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

/// Element of Q(i), kept exact.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)), im(0) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussianRational& operator+=(const GaussianRational& b) {
    re += b.re;
    im += b.im;
    return *this;
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

}  // namespace degenkit
