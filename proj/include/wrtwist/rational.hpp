#pragma once

// Exact integers, rationals and quadratic surds p + q*sqrt(r).

#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "wrtwist/errors.hpp"

namespace wrtwist {

using Integer = boost::multiprecision::cpp_int;
// Always stored reduced with a positive denominator.
using Rat = boost::multiprecision::cpp_rational;

// Use this rather than Rat(num, den): the two-argument constructor rejects a
// negative denominator.
inline Rat make_rat(const Integer& num, const Integer& den) {
  if (den == 0) throw InvariantError("rational with zero denominator");
  if (den < 0) return Rat(Integer(-num), Integer(-den));
  return Rat(num, den);
}

inline Integer numer(const Rat& x) { return boost::multiprecision::numerator(x); }
inline Integer denom(const Rat& x) { return boost::multiprecision::denominator(x); }

inline int sign(const Integer& x) { return x.sign(); }
inline int sign(const Rat& x) { return x.sign(); }

inline Integer abs(const Integer& x) { return x < 0 ? Integer(-x) : x; }
inline Rat abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(abs(a), abs(b));
}

// Floor division, rounding toward negative infinity.
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Integer floor_rat(const Rat& x) { return floor_div(numer(x), denom(x)); }
inline Integer ceil_rat(const Rat& x) { return -floor_rat(Rat(-x)); }

inline double to_double(const Rat& x) { return x.convert_to<double>(); }
inline double to_double(const Integer& x) { return x.convert_to<double>(); }

// "num/den", always with an explicit denominator ("3/1", "0/1").
inline std::string to_string(const Rat& x) {
  return numer(x).str() + "/" + denom(x).str();
}

// Accepts "n", "n/d" with optional sign on n; d must be positive.
inline Rat parse_rat(std::string_view text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) return Rat(Integer(std::string(text)));
    Integer n(std::string(text.substr(0, slash)));
    Integer d(std::string(text.substr(slash + 1)));
    if (d <= 0) throw InvariantError("non-positive denominator in '" + std::string(text) + "'");
    return Rat(n, d);
  } catch (const std::runtime_error&) {
    throw InvariantError("malformed rational '" + std::string(text) + "'");
  }
}

inline std::int64_t to_int64(const Integer& x) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
    throw InvariantError("integer " + x.str() + " does not fit in 64 bits");
  return x.convert_to<std::int64_t>();
}

/// Exact value p + q*sqrt(r) with rational p, q and r >= 0.
struct SurdValue {
  Rat p;
  Rat q;
  Rat r;

  static SurdValue rational(Rat value) { return {std::move(value), 0, 0}; }

  bool is_rational() const { return q == 0 || r == 0; }
  double to_double() const {
    return wrtwist::to_double(p) + wrtwist::to_double(q) * std::sqrt(wrtwist::to_double(r));
  }

  SurdValue operator+(const Rat& shift) const { return {p + shift, q, r}; }
  SurdValue operator-(const Rat& shift) const { return {p - shift, q, r}; }
};

/// Orders p + q*sqrt(r) against n without any floating point: the question
/// reduces to q*sqrt(r) versus n - p, which is settled by signs and, when both
/// sides share a sign, by comparing squares.
inline std::strong_ordering surd_cmp(const SurdValue& s, const Rat& n) {
  if (s.r < 0) throw InvariantError("surd with negative radicand");
  const Rat rhs = n - s.p;
  const int qs = (s.q == 0 || s.r == 0) ? 0 : sign(s.q);
  int diff;  // sign of q*sqrt(r) - rhs
  if (qs == 0) {
    diff = -sign(rhs);
  } else {
    const Rat left_sq = s.q * s.q * s.r;
    const Rat right_sq = rhs * rhs;
    if (qs > 0) {
      diff = rhs < 0 ? 1 : (left_sq > right_sq) - (left_sq < right_sq);
    } else {
      diff = rhs > 0 ? -1 : (right_sq > left_sq) - (right_sq < left_sq);
    }
  }
  return diff <=> 0;
}

/// Difference hi - lo of two surds sharing a radicand (or either rational).
inline SurdValue surd_sub(const SurdValue& hi, const SurdValue& lo) {
  if (lo.is_rational()) return {hi.p - lo.p, hi.q, hi.r};
  if (hi.is_rational()) return {hi.p - lo.p, -lo.q, lo.r};
  if (hi.r != lo.r) throw InvariantError("incomparable surds with different radicands");
  return {hi.p - lo.p, hi.q - lo.q, hi.r};
}

inline std::strong_ordering surd_cmp(const SurdValue& a, const SurdValue& b) {
  return surd_cmp(surd_sub(a, b), Rat(0));
}

inline Integer surd_floor(const SurdValue& s) {
  // Start from the floating estimate and walk to the exact answer.
  const double approx = s.to_double();
  Integer n = std::isfinite(approx) ? Integer(std::floor(approx)) : floor_rat(s.p);
  while (surd_cmp(s, Rat(n)) < 0) --n;
  while (surd_cmp(s, Rat(n + 1)) >= 0) ++n;
  return n;
}

inline Integer surd_ceil(const SurdValue& s) {
  return -surd_floor(SurdValue{-s.p, -s.q, s.r});
}

}  // namespace wrtwist
