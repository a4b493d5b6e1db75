#pragma once

// Integral ideals of Z[delta] in canonical form {t, y + g*delta}.

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "wrtwist/errors.hpp"
#include "wrtwist/field.hpp"
#include "wrtwist/rational.hpp"

namespace wrtwist {

struct IdealTriple {
  FieldDesc field;
  Integer t;
  Integer y;
  Integer g;

  friend bool operator==(const IdealTriple&, const IdealTriple&) = default;
};

inline std::string describe(const IdealTriple& ideal) {
  return "(t,y,g)=(" + ideal.t.str() + "," + ideal.y.str() + "," + ideal.g.str() +
         ") in Q(sqrt(-" + std::to_string(ideal.field.d()) + "))";
}

/// Throws InvariantError if (t, y, g) is not the canonical basis of an ideal.
inline void validate(const IdealTriple& ideal) {
  const auto& [k, t, y, g] = ideal;
  auto fail = [&](const char* why) {
    throw InvariantError(std::string("not a canonical ideal basis: ") + why + " " + describe(ideal));
  };
  if (t <= 0) fail("t must be positive");
  if (g <= 0 || g > t) fail("need 0 < g <= t");
  if (y < 0 || y >= t) fail("need 0 <= y < t");
  if (t % g != 0 || y % g != 0) fail("g must divide t and y");
  // Closure under multiplication by delta is equivalent to t*g | N(y + g*delta).
  if (elem_norm({y, g}, k) % (t * g) != 0) fail("t*g must divide N(y + g*delta)");
}

inline IdealTriple make_ideal(const FieldDesc& k, Integer t, Integer y, Integer g) {
  IdealTriple ideal{k, std::move(t), std::move(y), std::move(g)};
  validate(ideal);
  return ideal;
}

/// Canonical basis of the O_K-ideal generated by `gens`.
///
/// The Z-module spanned by {x, delta*x : x in gens} is brought to the
/// triangular form {(t, 0), (y, g)} in (1, delta) coordinates by Euclidean
/// column reduction on the delta row, then gcd of the remaining rational row.
inline IdealTriple canonical_basis(std::span<const QuadElem> gens, const FieldDesc& k) {
  const QuadElem delta{0, 1};
  std::vector<QuadElem> cols;
  for (const auto& x : gens) {
    if (x.p == 0 && x.q == 0) continue;
    cols.push_back(x);
    cols.push_back(elem_mul(delta, x, k));
  }
  if (cols.empty()) throw ZeroIdealError();

  // Euclid on the delta coordinate until one column carries it.
  for (;;) {
    auto pivot = cols.end();
    int nonzero = 0;
    for (auto it = cols.begin(); it != cols.end(); ++it) {
      if (it->q == 0) continue;
      ++nonzero;
      if (pivot == cols.end() || abs(it->q) < abs(pivot->q)) pivot = it;
    }
    if (nonzero <= 1) break;
    for (auto it = cols.begin(); it != cols.end(); ++it) {
      if (it == pivot || it->q == 0) continue;
      const Integer m = floor_div(it->q, pivot->q);
      it->p -= m * pivot->p;
      it->q -= m * pivot->q;
    }
  }
  auto pivot = std::find_if(cols.begin(), cols.end(), [](const QuadElem& c) { return c.q != 0; });
  if (pivot == cols.end()) {
    // Nonzero ideals always have elements with a delta component.
    throw InvariantError("generators do not span a rank-2 module");
  }
  Integer t = 0;
  for (auto it = cols.begin(); it != cols.end(); ++it) {
    if (it != pivot) t = gcd(t, it->p);
  }
  if (t == 0) throw InvariantError("generators do not span a rank-2 module");
  Integer g = pivot->q;
  Integer y = pivot->p;
  if (g < 0) {
    g = -g;
    y = -y;
  }
  y %= t;
  if (y < 0) y += t;
  return make_ideal(k, t, y, g);
}

inline IdealTriple canonical_basis(std::initializer_list<QuadElem> gens, const FieldDesc& k) {
  return canonical_basis(std::span<const QuadElem>(gens.begin(), gens.size()), k);
}

/// Squared covolume of the ideal lattice: (t g)^2 D, or (t g)^2 D / 4 in the
/// residue case.
inline Rat vol_sq(const IdealTriple& ideal) {
  const Integer tg = ideal.t * ideal.g;
  Rat v = Rat(tg * tg * ideal.field.d());
  if (ideal.field.residue()) v /= 4;
  return v;
}

/// a*t + c*(y + g*delta).
inline QuadElem elem_at(const IdealTriple& ideal, const Integer& a, const Integer& c) {
  return {a * ideal.t + c * ideal.y, c * ideal.g};
}

}  // namespace wrtwist
