#include <iostream>
#include <set>

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <gtest/gtest.h>

#include "corpus.hpp"
#include "wrtwist/wrtwist.hpp"

using namespace wrtwist;

namespace {

const IdealTriple& example201() {
  static const IdealTriple i = make_ideal(FieldDesc(201), 615, 6, 3);
  return i;
}

std::vector<GoodTuple> table201() {
  return {{0, 1, 1, -102}, {0, 1, 1, 0}, {1, -102, -2, 205}, {1, -102, 0, 1}, {1, 0, 0, 1}, {2, -205, -1, 102}};
}

std::set<Integer> integers_of(const std::vector<SurdInterval>& ivs) {
  std::set<Integer> out;
  for (const auto& iv : ivs)
    for (auto& n : integers_in(iv.lo, iv.hi, true)) out.insert(n);
  return out;
}

}  // namespace

TEST(IntegersIn, Examples) {
  EXPECT_EQ(integers_in(SurdValue::rational(Rat(-1, 2)), SurdValue::rational(Rat(1, 2)), true),
            std::vector<Integer>{0});
  EXPECT_EQ(integers_in(SurdValue::rational(-1), SurdValue::rational(1), false), std::vector<Integer>{0});
  EXPECT_EQ(integers_in(SurdValue::rational(-1), SurdValue::rational(1), true), (std::vector<Integer>{-1, 0, 1}));
  EXPECT_TRUE(integers_in(SurdValue::rational(1), SurdValue::rational(0), true).empty());

  // alpha = 205/4: the lower A0 interval of the worked example holds d = -102.
  const Rat alpha(205, 4);
  const SurdValue lo{Rat(-1, 2) - alpha, -1, alpha * alpha - Rat(3, 4)};
  EXPECT_EQ(integers_in(lo, lo + 1, true), std::vector<Integer>{-102});
}

TEST(IntegersIn, OpenIntervalsAgainstHighPrecision) {
  using Big = boost::multiprecision::cpp_dec_float_100;
  auto big = [](const Rat& x) { return Big(numer(x).str()) / Big(denom(x).str()); };
  for (int a = 1; a <= 30; ++a) {
    for (int b = 1; b <= 30; ++b) {
      // (-1 + sqrt(a/b) - 1/2, -1/2 + sqrt(a/b) + 1/3), shared radicand
      const Rat r(a, b);
      const SurdValue lo{Rat(-3, 2), 1, r};
      const SurdValue hi{Rat(-1, 6), 1, r};
      const Big root = boost::multiprecision::sqrt(big(r));
      std::vector<Integer> expect;
      for (long long n = -5; n <= 10; ++n) {
        if (Big(n) > big(Rat(-3, 2)) + root && Big(n) < big(Rat(-1, 6)) + root) expect.push_back(n);
      }
      EXPECT_EQ(integers_in(lo, hi, false), expect) << a << "/" << b;
    }
  }
}

TEST(Enumeration, ExtendablePairsExample) {
  const auto pairs = extendable_pairs(example201());
  std::vector<std::pair<Integer, Integer>> got;
  for (const auto& p : pairs) got.emplace_back(p.a, p.c);
  std::sort(got.begin(), got.end());
  const std::vector<std::pair<Integer, Integer>> want{{0, 1}, {1, -102}, {1, 0}, {2, -205}};
  EXPECT_EQ(got, want);
  for (const auto& p : pairs) {
    if (p.a == 2) {
      EXPECT_EQ(p.branch, Branch::Kernel);
    }
  }
}

TEST(Enumeration, ExtendablePairsRingOfIntegers) {
  const auto nr = extendable_pairs(make_ideal(FieldDesc(5), 1, 0, 1));
  ASSERT_EQ(nr.size(), 2u);
  EXPECT_EQ(nr[0], (ExtendablePair{1, 0, Branch::C0}));
  EXPECT_EQ(nr[1], (ExtendablePair{0, 1, Branch::A0}));

  const std::set<std::pair<Integer, Integer>> allowed{{1, 0}, {1, -2}, {0, 1}, {1, -1}};
  for (const auto& p : extendable_pairs(make_ideal(FieldDesc(7), 1, 0, 1)))
    EXPECT_TRUE(allowed.count({p.a, p.c})) << p.a << "," << p.c;
}

TEST(Enumeration, ExtendToGoodExamples) {
  const auto& i = example201();
  EXPECT_EQ(extend_to_good(i, {1, 0, Branch::C0}), (std::vector<GoodTuple>{{1, 0, 0, 1}}));
  EXPECT_EQ(extend_to_good(i, {0, 1, Branch::A0}), (std::vector<GoodTuple>{{0, 1, 1, -102}, {0, 1, 1, 0}}));
  EXPECT_EQ(extend_to_good(i, {2, -205, Branch::Kernel}), (std::vector<GoodTuple>{{2, -205, -1, 102}}));
}

TEST(Enumeration, AllGoodTuplesExample) { EXPECT_EQ(all_good_tuples(example201()), table201()); }

TEST(Enumeration, RingOfIntegers) {
  EXPECT_EQ(all_good_tuples(make_ideal(FieldDesc(5), 1, 0, 1)),
            (std::vector<GoodTuple>{{0, 1, 1, 0}, {1, 0, 0, 1}}));
  for (const auto& t : all_good_tuples(make_ideal(FieldDesc(7), 1, 0, 1))) {
    const auto b = realize(make_ideal(FieldDesc(7), 1, 0, 1), t);
    EXPECT_EQ(f1_coeff(b) * f2_coeff(b), 0) << to_string(t);
  }
}

TEST(Enumeration, Normalization) {
  EXPECT_EQ(normalize_signs({-2, 205, 1, -102}), (GoodTuple{2, -205, -1, 102}));
  EXPECT_EQ(normalize_signs({0, -1, -1, 3}), (GoodTuple{0, 1, 1, -3}));
  EXPECT_EQ(normalize_orientation({1, -102, -2, 205}), normalize_orientation({2, -205, -1, 102}));
  EXPECT_EQ(normalize_orientation({0, 1, 1, 0}), (GoodTuple{0, 1, 1, 0}));
}

// The closed-form endpoints and the re-derived quadratic roots must select
// the same integers for every extendable pair.
TEST(Enumeration, ClosedFormsMatchDerivedIntervals) {
  std::size_t pairs = 0;
  for (const auto& e : corpus::principal_ideals(240)) {
    for (const auto& p : extendable_pairs(e.ideal)) {
      ++pairs;
      EXPECT_EQ(integers_of(closed_form_intervals(e.ideal, p)), integers_of(derived_intervals(e.ideal, p)))
          << describe(e.ideal) << " pair " << p.a << "," << p.c << " " << to_string(p.branch);
    }
  }
  EXPECT_GT(pairs, 240u);
}

// Checked independently of the closed forms: unimodular, coprime first
// column, good, at most two similarity classes per first vector.
TEST(Enumeration, Soundness) {
  for (const auto& e : corpus::principal_ideals(240)) {
    const auto& i = e.ideal;
    for (const auto& p : extendable_pairs(i)) {
      EXPECT_EQ(gcd(p.a, p.c), 1);
      const auto ext = extend_to_good(i, p);
      std::set<Rat> classes;
      for (const auto& t : ext) {
        const Integer det = t.a * t.d - t.b * t.c;
        EXPECT_TRUE(det == 1 || det == -1) << to_string(t);
        EXPECT_TRUE(is_good(realize(i, t))) << to_string(t);
        classes.insert(abs(cos_theta(realize(i, t))));
      }
      EXPECT_LE(classes.size(), 2u) << describe(i);
    }
  }
}

TEST(Enumeration, NonResidueTwoGenerators) {
  // Non-principal ideals too: every pair (2, 1 + delta) style ideal is non-empty
  // and sound.
  for (std::int64_t d : {5, 6, 10, 13, 14, 21, 22, 26, 29, 30, 31, 35, 39}) {
    const FieldDesc k(d);
    for (int p = 2; p <= 7; ++p) {
      for (int y = 0; y < p; ++y) {
        const auto i = canonical_basis({QuadElem{p, 0}, QuadElem{y, 1}}, k);
        const auto ts = all_good_tuples(i);
        EXPECT_FALSE(ts.empty());
        for (const auto& t : ts) EXPECT_TRUE(is_good(realize(i, t)));
      }
    }
  }
}

// Soft check: the number of first vectors examined stays near y + 2.
TEST(Enumeration, LoopCountLogged) {
  long worst = 0;
  std::string where;
  for (const auto& e : corpus::principal_ideals(240)) {
    if (e.ideal.field.residue()) continue;
    EnumerationStats stats;
    all_good_tuples(e.ideal, &stats);
    const long excess = stats.pairs - static_cast<long>(e.ideal.y) - 2;
    if (excess > worst) {
      worst = excess;
      where = describe(e.ideal);
    }
  }
  std::cout << "[ info ] largest pairs - (y + 2) over NonResidue corpus: " << worst
            << (where.empty() ? "" : " at " + where) << "\n";
  SUCCEED();
}
