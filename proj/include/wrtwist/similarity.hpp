#pragma once

// Similarity classes of the well-rounded twists. A well-rounded planar
// lattice is determined up to similarity by |cos| of the angle between its
// two minimal vectors, and that value is an exact rational here.

#include <map>
#include <vector>

#include "wrtwist/enumeration.hpp"
#include "wrtwist/errors.hpp"
#include "wrtwist/ideal.hpp"
#include "wrtwist/rational.hpp"

namespace wrtwist {

enum class TwistLabel { Orthogonal, Hexagonal, Generic };

inline const char* to_string(TwistLabel l) {
  switch (l) {
    case TwistLabel::Orthogonal: return "orthogonal";
    case TwistLabel::Hexagonal: return "hexagonal";
    case TwistLabel::Generic: return "generic";
  }
  return "?";
}

struct TwistClass {
  Rat cos_abs;
  std::vector<GoodTuple> representatives;
  TwistLabel label;
};

inline TwistLabel label_for(const Rat& cos_abs) {
  if (cos_abs == 0) return TwistLabel::Orthogonal;
  if (cos_abs == Rat(1, 2)) return TwistLabel::Hexagonal;
  return TwistLabel::Generic;
}

/// |cos| of the twisted basis from the real parts alone:
///   |(Re u * c + Re v * d) / (Re u * d + Re v * c)|.
/// g and sqrt(D) cancel, and doubled real parts keep everything integral.
inline Rat cos_abs_key(const IdealTriple& ideal, const GoodTuple& t) {
  const Integer ru = twice_re(ideal, t.a, t.c);
  const Integer rv = twice_re(ideal, t.b, t.d);
  const Integer num = ru * t.c + rv * t.d;
  const Integer den = ru * t.d + rv * t.c;
  if (den == 0) throw InvariantError("cos_abs_key: degenerate tuple " + to_string(t));
  return Rat(abs(num), abs(den));
}

inline std::vector<TwistClass> classify(const IdealTriple& ideal, const std::vector<GoodTuple>& tuples) {
  std::map<Rat, std::vector<GoodTuple>> groups;
  for (const auto& t : tuples) groups[cos_abs_key(ideal, t)].push_back(t);

  std::vector<TwistClass> out;
  for (auto& [key, reps] : groups) {
    if (key > Rat(1, 2)) throw InvariantError("cos_abs above 1/2 for " + to_string(reps.front()));
    std::sort(reps.begin(), reps.end());
    out.push_back({key, std::move(reps), label_for(key)});
  }
  return out;
}

}  // namespace wrtwist
