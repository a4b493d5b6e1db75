#pragma once

// The imaginary quadratic field Q(sqrt(-D)) and its ring of integers Z[delta].
//
// delta = sqrt(-D)          when -D != 1 (mod 4)  (NonResidue)
// delta = (1 + sqrt(-D))/2  when -D == 1 (mod 4)  (Residue, i.e. D == 3 mod 4)
//
// Elements are stored as p + q*delta in both cases. Real and imaginary parts
// are exact rationals, the imaginary part being a rational multiple of sqrt(D).

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <string>

#include "wrtwist/errors.hpp"
#include "wrtwist/rational.hpp"

namespace wrtwist {

enum class FieldCase { NonResidue, Residue };

inline const char* to_string(FieldCase c) {
  return c == FieldCase::Residue ? "residue" : "nonresidue";
}

inline bool is_squarefree(std::int64_t n) {
  if (n < 1) return false;
  for (std::int64_t p = 2; p <= n / p; ++p) {
    if (n % (p * p) == 0) return false;
  }
  return true;
}

class FieldDesc {
 public:
  /// Throws FieldError unless d >= 1 and d is squarefree.
  explicit FieldDesc(std::int64_t d) : d_(d) {
    if (d < 1) throw FieldError("D must be positive, got " + std::to_string(d));
    if (!is_squarefree(d)) throw FieldError("D must be squarefree, got " + std::to_string(d));
    kind_ = (d % 4 == 3) ? FieldCase::Residue : FieldCase::NonResidue;
  }

  std::int64_t d() const { return d_; }
  FieldCase kind() const { return kind_; }
  bool residue() const { return kind_ == FieldCase::Residue; }
  double sqrt_d() const { return std::sqrt(static_cast<double>(d_)); }

  friend bool operator==(const FieldDesc&, const FieldDesc&) = default;

 private:
  std::int64_t d_;
  FieldCase kind_;
};

/// p + q*delta.
struct QuadElem {
  Integer p;
  Integer q;

  friend bool operator==(const QuadElem&, const QuadElem&) = default;
};

inline QuadElem elem_mul(const QuadElem& x, const QuadElem& y, const FieldDesc& k) {
  const Integer pp = x.p * y.p;
  const Integer cross = x.p * y.q + x.q * y.p;
  const Integer qq = x.q * y.q;
  if (k.residue()) {
    // delta^2 = delta - (1 + D)/4
    const Integer shift = (1 + k.d()) / 4;
    return {pp - qq * shift, cross + qq};
  }
  return {pp - qq * k.d(), cross};
}

inline QuadElem elem_add(const QuadElem& x, const QuadElem& y) { return {x.p + y.p, x.q + y.q}; }
inline QuadElem elem_scale(const Integer& n, const QuadElem& x) { return {n * x.p, n * x.q}; }

inline Integer elem_norm(const QuadElem& x, const FieldDesc& k) {
  if (k.residue()) return x.p * x.p + x.p * x.q + x.q * x.q * ((1 + k.d()) / 4);
  return x.p * x.p + x.q * x.q * k.d();
}

inline Rat re(const QuadElem& x, const FieldDesc& k) {
  if (k.residue()) return Rat(x.p) + Rat(x.q, 2);
  return Rat(x.p);
}

/// Im(x) = im_coeff(x) * sqrt(D).
inline Rat im_coeff(const QuadElem& x, const FieldDesc& k) {
  if (k.residue()) return Rat(x.q, 2);
  return Rat(x.q);
}

inline std::complex<double> to_complex(const QuadElem& x, const FieldDesc& k) {
  return {to_double(re(x, k)), to_double(im_coeff(x, k)) * k.sqrt_d()};
}

using Vec2 = std::array<double, 2>;

/// Column of the ideal lattice: (Re x, -Im x), the image under (Re, Im) of the
/// conjugate embedding.
inline Vec2 embed(const QuadElem& x, const FieldDesc& k) {
  const auto z = to_complex(x, k);
  return {z.real() + 0.0, -z.imag() + 0.0};  // + 0.0 turns -0 into 0
}

}  // namespace wrtwist
