#pragma once

#include <gmpxx.h>

#include <cctype>
#include <optional>
#include <string>
#include <string_view>

#include "lpembed/error.hpp"

namespace lpembed {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator (GMP canonical form).
using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(double v) { return v == 0.0; }

/// mpq_class(n, d) does not reduce; everything stored goes through here.
inline Rational canonical(Rational q) {
  q.canonicalize();
  return q;
}
inline double canonical(double v) { return v; }

inline double to_double(const Rational& q) { return q.get_d(); }
inline double to_double(double v) { return v; }

/// Exact value of a binary64 number.
inline Rational exact_from_double(double v) {
  Rational q(v);
  q.canonicalize();
  return q;
}

/// "num/den", with the denominator omitted when it is 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "[-+]digits" or "[-+]digits/digits". Anything else throws ParseError.
inline Rational parse_rational(std::string_view text) {
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
      if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!digits(num) || !digits(den))
    throw ParseError("malformed rational '" + std::string(text) + "'");
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (sgn(d) == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline Rational pow(const Rational& base, unsigned exponent) {
  Rational result(1);
  Rational b = base;
  while (exponent != 0) {
    if (exponent & 1u) result *= b;
    exponent >>= 1;
    if (exponent != 0) b *= b;
  }
  return result;
}

/// Exact k-th root of q if q is the k-th power of a rational.
inline std::optional<Rational> rational_root(const Rational& q, unsigned k) {
  if (k == 0) return std::nullopt;
  if (sgn(q) < 0 && k % 2 == 0) return std::nullopt;
  Integer num_abs = abs(q.get_num());
  Integer num_root, den_root;
  if (mpz_root(num_root.get_mpz_t(), num_abs.get_mpz_t(), k) == 0) return std::nullopt;
  if (mpz_root(den_root.get_mpz_t(), q.get_den().get_mpz_t(), k) == 0) return std::nullopt;
  if (sgn(q) < 0) num_root = -num_root;
  Rational r(num_root, den_root);
  r.canonicalize();
  return r;
}

inline Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace lpembed
