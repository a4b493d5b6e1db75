#pragma once

// Brute-force reference for the enumeration, plus a numeric well-roundedness
// check by planar reduction. Deliberately shares nothing with the closed-form
// code: plain __int128 arithmetic on doubled real and imaginary parts.
//
// For an element x = a*t + c*(y + g*delta) put
//   R(x) = 2 Re x                      = 2at + c*w,
//   I(x) = 2 Im x / sqrt(D)            = 2cg (NonResidue) or cg (Residue),
// so that 4 Im(xy)/sqrt(D) = R(x) I(y) + R(y) I(x). With p, q, r the scaled
// Im(x^2), Im(y^2), Im(xy), the basis is good iff (p+q+r)(p+q-r) <= 0 and
// r != 0. Since r^2 - pq = V^2 (V the scaled covolume), goodness is the same
// as p^2 + pq + q^2 <= V^2, so every vector of a good basis obeys
// 3 p^2 <= 4 V^2. That necessary condition bounds all four entries by t
// (NonResidue) or 3t (Residue) and prunes the scan.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wrtwist/enumeration.hpp"
#include "wrtwist/errors.hpp"
#include "wrtwist/field.hpp"
#include "wrtwist/ideal.hpp"

namespace wrtwist {

// Keeps every product below 2^127.
inline constexpr long long kOracleMaxT = 10000;
inline constexpr long long kOracleMaxBound = 30000;

inline long long safe_bound(const IdealTriple& ideal) {
  const long long t = to_int64(ideal.t);
  return ideal.field.residue() ? 3 * t : t;
}

namespace oracle_detail {

__extension__ typedef __int128 i128;

struct Scaled {
  long long t, w, i_unit;  // I(x) = c * i_unit
  i128 vol;                // scaled covolume V
};

inline i128 re2(const Scaled& s, i128 a, i128 c) { return 2 * a * s.t + c * s.w; }
inline i128 im2(const Scaled& s, i128 c) { return c * s.i_unit; }
inline i128 sq(const Scaled& s, i128 a, i128 c) { return 2 * re2(s, a, c) * im2(s, c); }
inline i128 cross(const Scaled& s, i128 a, i128 c, i128 b, i128 d) {
  return re2(s, a, c) * im2(s, d) + re2(s, b, d) * im2(s, c);
}
inline bool may_extend(const Scaled& s, i128 p) { return 3 * p * p <= 4 * s.vol * s.vol; }

inline bool good(const Scaled& s, i128 a, i128 c, i128 b, i128 d) {
  const i128 p = sq(s, a, c);
  const i128 q = sq(s, b, d);
  const i128 r = cross(s, a, c, b, d);
  if (r == 0) return false;
  const i128 lo = p + q - r;
  const i128 hi = p + q + r;
  return (lo <= 0 && hi >= 0) || (lo >= 0 && hi <= 0);
}

inline long long fdiv(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
inline long long cdiv(long long a, long long b) { return -fdiv(-a, b); }

// Returns (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0.
inline std::array<long long, 3> ext_gcd(long long a, long long b) {
  long long x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    const long long q = a / b;
    std::tie(a, b) = std::pair(b, a - q * b);
    std::tie(x0, x1) = std::pair(x1, x0 - q * x1);
    std::tie(y0, y1) = std::pair(y1, y0 - q * y1);
  }
  if (a < 0) return {-a, -x0, -y0};
  return {a, x0, y0};
}

// [lo, hi] restricted to where a monotone predicate holds; empty if lo > hi.
template <class Pred>
std::pair<long long, long long> monotone_range(long long lo, long long hi, Pred pred) {
  if (lo > hi) return {1, 0};
  const bool at_lo = pred(lo);
  const bool at_hi = pred(hi);
  if (at_lo == at_hi) return at_lo ? std::pair(lo, hi) : std::pair(1LL, 0LL);
  // Single switch point: find the last k with pred(k) == at_lo.
  long long l = lo, h = hi;
  while (h - l > 1) {
    const long long m = l + (h - l) / 2;
    (pred(m) == at_lo ? l : h) = m;
  }
  return at_lo ? std::pair(lo, l) : std::pair(h, hi);
}

inline std::array<long long, 4> normalized(long long a, long long c, long long b, long long d) {
  if (a < 0 || (a == 0 && c < 0)) {
    a = -a;
    c = -c;
  }
  if (static_cast<i128>(a) * d + static_cast<i128>(b) * c < 0) {
    b = -b;
    d = -d;
  }
  return {a, c, b, d};
}

}  // namespace oracle_detail

/// Every good tuple with all entries bounded by `bound` in absolute value,
/// sign-normalized like all_good_tuples (both orientations are present).
inline std::vector<GoodTuple> brute_force_good_tuples(const IdealTriple& ideal, long long bound) {
  using namespace oracle_detail;
  validate(ideal);
  const long long safe = safe_bound(ideal);
  if (bound < safe) throw InsufficientBound(bound, safe);
  if (safe > 3 * kOracleMaxT || bound > kOracleMaxBound || ideal.t > kOracleMaxT) {
    throw InvariantError("oracle limited to t <= " + std::to_string(kOracleMaxT) + " and bound <= " +
                         std::to_string(kOracleMaxBound));
  }

  const long long t = to_int64(ideal.t);
  const long long y = to_int64(ideal.y);
  const long long g = to_int64(ideal.g);
  const bool residue = ideal.field.residue();
  Scaled s{t, residue ? 2 * y + g : 2 * y, residue ? g : 2 * g, static_cast<i128>(residue ? 2 : 4) * t * g};

  std::set<std::array<long long, 4>> found;
  for (long long c = -bound; c <= bound; ++c) {
    // 3p^2 <= 4V^2 forces |c * R(x)| <= 2t; scan a over that superset.
    long long a_lo = 0, a_hi = 1;
    if (c != 0) {
      const long long reach = (2 * t) / std::llabs(c);
      a_lo = std::max(0LL, cdiv(-reach - c * s.w, 2 * t));
      a_hi = std::min(bound, fdiv(reach - c * s.w, 2 * t));
    } else {
      a_lo = a_hi = 1;
    }
    for (long long a = a_lo; a <= a_hi; ++a) {
      if (a == 0 && c <= 0) continue;
      const auto [h, xa, xc] = ext_gcd(a, c);
      if (h != 1) continue;
      if (!may_extend(s, sq(s, a, c))) continue;

      // a*d0 - b0*c = 1; every other partner is +-(b0 + k a, d0 + k c).
      const long long b0 = -xc;
      const long long d0 = xa;
      long long k_lo = -4 * kOracleMaxBound, k_hi = 4 * kOracleMaxBound;
      auto clip = [&](long long base, long long step) {
        if (step == 0) {
          if (std::llabs(base) > bound) k_lo = 1, k_hi = 0;
          return;
        }
        long long lo = (step > 0) ? cdiv(-bound - base, step) : cdiv(bound - base, step);
        long long hi = (step > 0) ? fdiv(bound - base, step) : fdiv(-bound - base, step);
        k_lo = std::max(k_lo, lo);
        k_hi = std::min(k_hi, hi);
      };
      clip(b0, a);
      clip(d0, c);
      if (k_lo > k_hi) continue;

      auto q_at = [&](long long k) { return sq(s, b0 + k * a, d0 + k * c); };
      auto above = [&](long long k) {
        const i128 q = q_at(k);
        return q >= 0 || may_extend(s, q);
      };
      auto below = [&](long long k) {
        const i128 q = q_at(k);
        return q <= 0 || may_extend(s, q);
      };
      // q(k) = 2 (A + kB)(C + kE) is monotone on either side of its vertex.
      std::vector<std::pair<long long, long long>> branches;
      const i128 A = re2(s, b0, d0), B = re2(s, a, c), C = im2(s, d0), E = im2(s, c);
      if (B == 0 || E == 0) {
        branches.emplace_back(k_lo, k_hi);
      } else {
        const i128 num = -(A * E + B * C);
        const i128 den = 2 * B * E;
        i128 kv = num / den;
        if ((num % den != 0) && ((num < 0) != (den < 0))) --kv;
        const long long split = static_cast<long long>(std::clamp<i128>(kv, k_lo - 1, k_hi));
        branches.emplace_back(k_lo, split);
        branches.emplace_back(split + 1, k_hi);
      }
      for (const auto& [lo, hi] : branches) {
        const auto r1 = monotone_range(lo, hi, above);
        const auto r2 = monotone_range(std::max(lo, r1.first), std::min(hi, r1.second), below);
        for (long long k = r2.first; k <= r2.second; ++k) {
          const long long b = b0 + k * a;
          const long long d = d0 + k * c;
          if (good(s, a, c, b, d)) found.insert(normalized(a, c, b, d));
        }
      }
    }
  }
  std::vector<GoodTuple> out;
  for (const auto& [a, c, b, d] : found) out.push_back({a, c, b, d});
  std::sort(out.begin(), out.end());
  return out;
}

// ------------------------------------------------------ numeric check

/// Lagrange reduction of a planar basis: returns (b1, b2) with |b1| <= |b2|
/// and |<b1,b2>| <= |b1|^2 / 2.
inline std::pair<Vec2, Vec2> gauss_reduce(Vec2 b1, Vec2 b2) {
  auto n2 = [](const Vec2& v) { return v[0] * v[0] + v[1] * v[1]; };
  if (b1[0] * b2[1] - b1[1] * b2[0] == 0) throw DegenerateBasis("gauss_reduce: dependent vectors");
  if (n2(b1) > n2(b2)) std::swap(b1, b2);
  for (int iter = 0; iter < 10000; ++iter) {
    const double mu = std::round((b1[0] * b2[0] + b1[1] * b2[1]) / n2(b1));
    b2 = {b2[0] - mu * b1[0], b2[1] - mu * b1[1]};
    if (n2(b2) >= n2(b1)) return {b1, b2};
    std::swap(b1, b2);
  }
  throw InvariantError("gauss_reduce did not converge");
}

inline bool is_well_rounded_numeric(const Vec2& b1, const Vec2& b2, double tol) {
  const auto [r1, r2] = gauss_reduce(b1, b2);
  const double n1 = std::hypot(r1[0], r1[1]);
  const double n2 = std::hypot(r2[0], r2[1]);
  if (n2 - n1 > tol * n2) return false;
  const double cosine = (r1[0] * r2[0] + r1[1] * r2[1]) / (n1 * n2);
  return std::abs(cosine) <= 0.5 + tol;
}

}  // namespace wrtwist
