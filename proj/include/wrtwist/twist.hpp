#pragma once

// Twisting criteria for a basis {u, v} of an ideal lattice.
//
// With the lattice columns (Re u, -Im u), (Re v, -Im v), a basis is good for
// twisting when F = F1 * F2 <= 0 and Im(uv) != 0, where
//   F1 = -(Im(u^2) + Im(v^2) + Im(uv)) / 2,
//   F2 = -(Im(u^2) + Im(v^2) - Im(uv)) / 2.
// Every imaginary part is a rational multiple of sqrt(D), so only the
// rational coefficients are ever computed; F itself is never formed.

#include <array>
#include <cmath>

#include "wrtwist/errors.hpp"
#include "wrtwist/field.hpp"
#include "wrtwist/rational.hpp"

namespace wrtwist {

struct BasisPair {
  QuadElem u;
  QuadElem v;
  FieldDesc field;
};

inline Rat im_sq_coeff(const QuadElem& x, const FieldDesc& k) { return im_coeff(elem_mul(x, x, k), k); }
inline Rat im_prod_coeff(const QuadElem& x, const QuadElem& y, const FieldDesc& k) {
  return im_coeff(elem_mul(x, y, k), k);
}

/// F1 / sqrt(D).
inline Rat f1_coeff(const BasisPair& b) {
  const auto& k = b.field;
  return -(im_sq_coeff(b.u, k) + im_sq_coeff(b.v, k) + im_prod_coeff(b.u, b.v, k)) / 2;
}

/// F2 / sqrt(D).
inline Rat f2_coeff(const BasisPair& b) {
  const auto& k = b.field;
  return -(im_sq_coeff(b.u, k) + im_sq_coeff(b.v, k) - im_prod_coeff(b.u, b.v, k)) / 2;
}

/// Re(u) Im(v) + Re(v) Im(u), divided by sqrt(D). Nonzero for usable bases.
inline Rat nondegeneracy_coeff(const BasisPair& b) {
  const auto& k = b.field;
  return re(b.u, k) * im_coeff(b.v, k) + re(b.v, k) * im_coeff(b.u, k);
}

inline bool is_good(const BasisPair& b) {
  return sign(f1_coeff(b)) * sign(f2_coeff(b)) <= 0 && nondegeneracy_coeff(b) != 0;
}

/// Cosine of the angle between the twisted basis vectors (exact).
inline Rat cos_theta(const BasisPair& b) {
  const auto& k = b.field;
  const Rat cross = im_prod_coeff(b.u, b.v, k);
  if (cross == 0) throw DegenerateBasis("Im(uv) = 0: basis is degenerate for twisting");
  return (im_sq_coeff(b.u, k) + im_sq_coeff(b.v, k)) / (2 * cross);
}

/// beta = alpha^4 = (Im(v)^2 - Im(u)^2) / (Re(u)^2 - Re(v)^2).
inline Rat twist_beta(const BasisPair& b) {
  const auto& k = b.field;
  const Rat re_u = re(b.u, k);
  const Rat re_v = re(b.v, k);
  const Rat im_u = im_coeff(b.u, k);
  const Rat im_v = im_coeff(b.v, k);
  const Rat den = re_u * re_u - re_v * re_v;
  if (den == 0) throw NotTwistable(NotTwistable::Reason::DenomZero);
  const Rat beta = (im_v * im_v - im_u * im_u) * k.d() / den;
  if (beta <= 0) throw NotTwistable(NotTwistable::Reason::NonPositive);
  return beta;
}

inline double twist_alpha(const BasisPair& b) { return std::pow(to_double(twist_beta(b)), 0.25); }

inline Vec2 apply_twist(double alpha, const Vec2& x) { return {alpha * x[0], x[1] / alpha}; }

/// T_alpha applied to the embedded basis; both vectors have the same length.
inline std::array<Vec2, 2> twist_embed(const BasisPair& b) {
  const double alpha = twist_alpha(b);
  return {apply_twist(alpha, embed(b.u, b.field)), apply_twist(alpha, embed(b.v, b.field))};
}

inline double norm(const Vec2& x) { return std::hypot(x[0], x[1]); }
inline double dot(const Vec2& x, const Vec2& y) { return x[0] * y[0] + x[1] * y[1]; }
inline double cross(const Vec2& x, const Vec2& y) { return x[0] * y[1] - x[1] * y[0]; }

/// The vector x' with {(1,0), x'} spanning a lattice similar to the one
/// spanned by T_alpha {first, second}. Normalized so that x'[1] > 0 and
/// |x'| >= 1, swapping the roles of the basis vectors when needed.
inline Vec2 tau_normal_form(double alpha, const Vec2& first, const Vec2& second) {
  if (!(alpha > 0)) throw DegenerateBasis("tau normal form needs alpha > 0");
  if (cross(first, second) == 0) throw DegenerateBasis("tau normal form of a degenerate basis");
  const double a4 = std::pow(alpha, 4);
  auto z_of = [&](const Vec2& x, const Vec2& y) {
    const auto [a, c] = x;
    const auto [b, d] = y;
    const double scale = 1.0 / (a4 * a * a + c * c);
    const double det = a * d - b * c;
    Vec2 z{(a * b * a4 + c * d) * scale, alpha * alpha * det * scale};
    if (det < 0) z = {-z[0], -z[1]};
    return z;
  };
  Vec2 z = z_of(first, second);
  if (norm(z) < 1) z = z_of(second, first);
  return z;
}

}  // namespace wrtwist
