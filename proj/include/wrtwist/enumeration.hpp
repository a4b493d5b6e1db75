#pragma once

// Enumeration of all good bases of an ideal, given by its canonical basis
// {t, y + g*delta}, as integer tuples (a, c, b, d):
//
//   x = a*t + c*(y + g*delta),   y' = b*t + d*(y + g*delta),   ad - bc = +-1.
//
// First every extendable first vector (a, c) is listed, then each is extended
// to at most two good bases up to similarity using closed-form interval
// endpoints. All interval arithmetic is exact (SurdValue).
//
// Both field cases share one set of formulas through
//   w   = 2y (NonResidue) or 2y + g (Residue),
//   rho = 2at + cw = 2 Re(x),
// so that the extendability bound reads |c * rho| <= t in both cases.

#include <algorithm>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "wrtwist/errors.hpp"
#include "wrtwist/field.hpp"
#include "wrtwist/ideal.hpp"
#include "wrtwist/rational.hpp"
#include "wrtwist/twist.hpp"

namespace wrtwist {

struct GoodTuple {
  Integer a;
  Integer c;
  Integer b;
  Integer d;

  friend bool operator==(const GoodTuple&, const GoodTuple&) = default;
  friend std::strong_ordering operator<=>(const GoodTuple&, const GoodTuple&) = default;
};

inline std::string to_string(const GoodTuple& t) {
  return "(" + t.a.str() + "," + t.c.str() + "," + t.b.str() + "," + t.d.str() + ")";
}

enum class Branch {
  C0,       // c = 0: x = t
  A0,       // a = 0: x = y + g*delta
  Kernel,   // Re(x) = 0, x purely imaginary
  General,  // a >= 1, c != 0, Re(x) != 0
};

inline const char* to_string(Branch b) {
  switch (b) {
    case Branch::C0: return "C0";
    case Branch::A0: return "A0";
    case Branch::Kernel: return "Kernel";
    case Branch::General: return "General";
  }
  return "?";
}

struct ExtendablePair {
  Integer a;
  Integer c;
  Branch branch;

  friend bool operator==(const ExtendablePair&, const ExtendablePair&) = default;
};

/// Closed interval [lo, hi] over the branch's free parameter (see extend_to_good).
struct SurdInterval {
  SurdValue lo;
  SurdValue hi;
};

struct EnumerationStats {
  long a_iterations = 0;    // values of a >= 1 scanned
  long c_candidates = 0;    // (a, c) candidates tested against the bound
  long pairs = 0;           // extendable pairs produced
};

// ---------------------------------------------------------------- helpers

inline Integer twice_re_offset(const IdealTriple& ideal) {
  return ideal.field.residue() ? Integer(2 * ideal.y + ideal.g) : Integer(2 * ideal.y);
}

inline Integer twice_re(const IdealTriple& ideal, const Integer& a, const Integer& c) {
  return 2 * a * ideal.t + c * twice_re_offset(ideal);
}

inline BasisPair realize(const IdealTriple& ideal, const GoodTuple& t) {
  return {elem_at(ideal, t.a, t.c), elem_at(ideal, t.b, t.d), ideal.field};
}

/// Representative modulo x -> -x and y -> -y: a > 0 (or a = 0, c > 0) and
/// a*d + b*c > 0. For unimodular tuples a*d + b*c is odd, hence never zero.
inline GoodTuple normalize_signs(GoodTuple t) {
  if (t.a < 0 || (t.a == 0 && t.c < 0)) {
    t.a = -t.a;
    t.c = -t.c;
  }
  if (t.a * t.d + t.b * t.c < 0) {
    t.b = -t.b;
    t.d = -t.d;
  }
  return t;
}

/// Representative modulo signs and the swap {x, y} -> {y, x}; both orderings
/// give similar twists.
inline GoodTuple normalize_orientation(const GoodTuple& t) {
  return std::min(normalize_signs(t), normalize_signs(GoodTuple{t.b, t.d, t.a, t.c}));
}

/// Integers n with lo <= n <= hi (closed) or lo < n < hi (open). Empty when
/// lo > hi; the endpoints may carry different radicands.
inline std::vector<Integer> integers_in(const SurdValue& lo, const SurdValue& hi, bool closed) {
  Integer first = closed ? surd_ceil(lo) : surd_floor(lo) + 1;
  Integer last = closed ? surd_floor(hi) : surd_ceil(hi) - 1;
  std::vector<Integer> out;
  for (Integer n = first; n <= last; ++n) out.push_back(n);
  return out;
}

// ---------------------------------------------------------- extendable pairs

/// Every first vector (a, c), normalized to a >= 0 (c > 0 when a = 0), that
/// extends to a good basis and satisfies (Im x^2)^2 <= vol^2.
inline std::vector<ExtendablePair> extendable_pairs(const IdealTriple& ideal,
                                                    EnumerationStats* stats = nullptr) {
  const Integer& t = ideal.t;
  const Integer& y = ideal.y;
  const Integer w = twice_re_offset(ideal);
  std::vector<ExtendablePair> pairs;

  pairs.push_back({1, 0, Branch::C0});

  if (!ideal.field.residue() && y == 0) {
    pairs.push_back({0, 1, Branch::A0});
  } else {
    // Re(x) = 0 with gcd(a, c) = 1.
    const Integer h = gcd(2 * t, w);
    pairs.push_back({w / h, -(2 * t) / h, Branch::Kernel});
    if (t >= w) pairs.push_back({0, 1, Branch::A0});
  }

  const Integer a_max = ideal.field.residue() ? Integer((2 * y + ideal.g + 1) / 2) : Integer((y + 1) / 2);
  if (a_max >= 1) {
    const Rat alpha(t, w);
    for (Integer a = 1; a <= a_max; ++a) {
      if (stats) ++stats->a_iterations;
      // (c + a alpha)^2 in [a^2 alpha^2 - alpha, a^2 alpha^2 + alpha].
      const Rat centre = -a * alpha;
      const Rat outer = a * a * alpha * alpha + alpha;
      const Rat inner = a * a * alpha * alpha - alpha;
      std::vector<Integer> cs;
      if (inner >= 0) {
        for (auto& c : integers_in({centre, -1, outer}, {centre, -1, inner}, true)) cs.push_back(c);
        for (auto& c : integers_in({centre, 1, inner}, {centre, 1, outer}, true)) cs.push_back(c);
      } else {
        cs = integers_in({centre, -1, outer}, {centre, 1, outer}, true);
      }
      std::sort(cs.begin(), cs.end());
      cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
      for (const auto& c : cs) {
        if (stats) ++stats->c_candidates;
        if (c == 0 || gcd(a, c) != 1) continue;
        const Integer rho = twice_re(ideal, a, c);
        if (rho == 0) continue;  // the kernel pair, listed above
        if (abs(c * rho) > t) continue;
        pairs.push_back({a, c, Branch::General});
      }
    }
  }
  if (stats) stats->pairs += static_cast<long>(pairs.size());
  return pairs;
}

// ------------------------------------------------------ interval endpoints
//
// Each branch has one free integer parameter s:
//   C0       tuple (1, 0, s, 1)
//   A0       tuple (0, 1, 1, s)
//   Kernel   in the swapped basis {y + g*delta, t}, x' = a' u' + c' v' with
//            a' = -c > 0, c' = -a; s = b' and d' = (1 + s c') / a'
//   General  tuple (a, c, s, (1 + s c) / a)

namespace detail {

struct KernelFrame {
  Integer a;  // a' = -c
  Integer c;  // c' = -a
};

inline KernelFrame kernel_frame(const ExtendablePair& p) { return {-p.c, -p.a}; }

inline SurdInterval unit_interval(const SurdValue& lo, const Rat& width) { return {lo, lo + width}; }

}  // namespace detail

/// Endpoints from the closed forms for the canonical basis.
inline std::vector<SurdInterval> closed_form_intervals(const IdealTriple& ideal, const ExtendablePair& p) {
  const Integer& t = ideal.t;
  const Integer w = twice_re_offset(ideal);
  switch (p.branch) {
    case Branch::C0: {
      const Rat beta1 = Rat(-1, 2) - make_rat(w, 2 * t);
      return {detail::unit_interval(SurdValue::rational(beta1), 1)};
    }
    case Branch::A0: {
      if (w == 0) {
        // Im(x^2) = 0: the two linear factors vanish at -1/2 and 1/2.
        return {{SurdValue::rational(Rat(-1, 2)), SurdValue::rational(Rat(1, 2))}};
      }
      const Rat alpha(t, w);
      const Rat rad = alpha * alpha - Rat(3, 4);
      const Rat base = Rat(-1, 2) - alpha;
      return {detail::unit_interval({base, -1, rad}, 1), detail::unit_interval({base, 1, rad}, 1)};
    }
    case Branch::Kernel: {
      const Rat half(detail::kernel_frame(p).a, 2);
      return {{SurdValue::rational(-half), SurdValue::rational(half)}};
    }
    case Branch::General: {
      const Rat a(p.a);
      const Rat beta = make_rat(t, p.c * twice_re(ideal, p.a, p.c));
      const Rat rad = beta * beta - Rat(3, 4);
      const Rat base = make_rat(-p.a * p.c - 2, 2 * p.c) + a * beta;
      return {detail::unit_interval({base, -a, rad}, a), detail::unit_interval({base, a, rad}, a)};
    }
  }
  throw InvariantError("unknown branch");
}

/// The same intervals, re-derived from F1 and F2 as quadratics in s.
///
/// Writing the second vector as (yhat + s*x)/m with P = Im(x^2), Q = Im(yhat^2),
/// R = Im(x*yhat) (all over sqrt(D)), one gets
///   -2 m^2 F1 = P s^2 + (2R + mP) s + (m^2 P + Q + mR),
///   -2 m^2 F2 = P s^2 + (2R - mP) s + (m^2 P + Q - mR),
/// sharing the discriminant 4(R^2 - PQ) - 3 m^2 P^2. F1 F2 <= 0 exactly on
/// [e1, e2] U [e3, e4] for the sorted roots e1 <= e2 <= e3 <= e4.
inline std::vector<SurdInterval> derived_intervals(const IdealTriple& ideal, const ExtendablePair& p) {
  const auto& k = ideal.field;
  QuadElem x, yhat;
  Integer m = 1;
  switch (p.branch) {
    case Branch::C0:
      x = elem_at(ideal, 1, 0);
      yhat = elem_at(ideal, 0, 1);
      break;
    case Branch::A0:
      x = elem_at(ideal, 0, 1);
      yhat = elem_at(ideal, 1, 0);
      break;
    case Branch::Kernel: {
      // Basis {u', v'} = {y + g delta, t}.
      const auto f = detail::kernel_frame(p);
      x = elem_add(elem_scale(f.a, elem_at(ideal, 0, 1)), elem_scale(f.c, elem_at(ideal, 1, 0)));
      yhat = elem_at(ideal, 1, 0);
      m = f.a;
      break;
    }
    case Branch::General:
      x = elem_at(ideal, p.a, p.c);
      yhat = elem_at(ideal, 0, 1);
      m = p.a;
      break;
  }
  const Rat P = im_sq_coeff(x, k);
  const Rat Q = im_sq_coeff(yhat, k);
  const Rat R = im_prod_coeff(x, yhat, k);
  const Rat mr(m);

  if (P == 0) {
    if (R == 0) throw InvariantError("derived_intervals: degenerate pair");
    Rat r1 = -(Q + mr * R) / (2 * R);
    Rat r2 = -(Q - mr * R) / (2 * R);
    if (r1 > r2) std::swap(r1, r2);
    return {{SurdValue::rational(r1), SurdValue::rational(r2)}};
  }
  const Rat disc = 4 * (R * R - P * Q) - 3 * mr * mr * P * P;
  if (disc < 0) return {};
  const Rat half_inv = Rat(1) / (2 * P);
  std::vector<SurdValue> roots = {
      {-(2 * R + mr * P) * half_inv, -half_inv, disc},
      {-(2 * R + mr * P) * half_inv, half_inv, disc},
      {-(2 * R - mr * P) * half_inv, -half_inv, disc},
      {-(2 * R - mr * P) * half_inv, half_inv, disc},
  };
  std::sort(roots.begin(), roots.end(), [](const SurdValue& l, const SurdValue& r) { return surd_cmp(l, r) < 0; });
  return {{roots[0], roots[1]}, {roots[2], roots[3]}};
}

// --------------------------------------------------------------- extension

/// All good tuples whose first vector is the pair p, sign-normalized.
inline std::vector<GoodTuple> extend_to_good(const IdealTriple& ideal, const ExtendablePair& p) {
  std::vector<Integer> params;
  for (const auto& iv : closed_form_intervals(ideal, p)) {
    for (auto& s : integers_in(iv.lo, iv.hi, true)) params.push_back(std::move(s));
  }
  std::sort(params.begin(), params.end());
  params.erase(std::unique(params.begin(), params.end()), params.end());

  std::vector<GoodTuple> out;
  for (const auto& s : params) {
    std::optional<GoodTuple> tuple;
    switch (p.branch) {
      case Branch::C0:
        tuple = GoodTuple{1, 0, s, 1};
        break;
      case Branch::A0:
        tuple = GoodTuple{0, 1, 1, s};
        break;
      case Branch::Kernel: {
        const auto f = detail::kernel_frame(p);
        const Integer num = 1 + s * f.c;
        if (num % f.a != 0) break;
        // Back from {y + g delta, t}: (a', c', b', d') -> (c', a', d', b').
        tuple = GoodTuple{f.c, f.a, num / f.a, s};
        break;
      }
      case Branch::General: {
        const Integer num = 1 + s * p.c;
        if (num % p.a != 0) break;
        tuple = GoodTuple{p.a, p.c, s, num / p.a};
        break;
      }
    }
    if (!tuple) continue;
    const BasisPair basis = realize(ideal, *tuple);
    if (nondegeneracy_coeff(basis) == 0) continue;
    if (!is_good(basis)) {
      throw InvariantError("closed-form interval produced a non-good tuple " + to_string(*tuple) + " for " +
                           describe(ideal));
    }
    out.push_back(normalize_signs(*tuple));
  }
  return out;
}

/// Every good tuple found from the extendable pairs, sign-normalized,
/// deduplicated and sorted. Never empty for a valid ideal.
inline std::vector<GoodTuple> all_good_tuples(const IdealTriple& ideal, EnumerationStats* stats = nullptr) {
  std::vector<GoodTuple> out;
  for (const auto& p : extendable_pairs(ideal, stats)) {
    auto found = extend_to_good(ideal, p);
    out.insert(out.end(), found.begin(), found.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.empty()) throw InvariantError("no good tuple found for " + describe(ideal));
  return out;
}

}  // namespace wrtwist
