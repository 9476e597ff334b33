#include <gtest/gtest.h>

#include "bethe/olambda.hpp"

using namespace bethe;

namespace {

const std::vector<std::pair<int, int>> kCases{{0, 1}, {1, 1}, {0, 2}, {2, 1}, {1, 2}};

OElement lin(const FGRing& r, std::initializer_list<std::pair<std::size_t, long>> terms, int bpow) {
  OElement x = r.zero();
  for (auto [v, c] : terms) x += r.var(v).scaled(MultiPoly(r.nvars(), Rational(c)));
  return x.shifted(bpow);
}

}  // namespace

TEST(OSystem, SmallestCase) {
  auto [a, s] = build_system(0, 1);
  const FGRing& r = a.ring;
  ASSERT_EQ(s.equations.size(), 2u);
  EXPECT_EQ(s.equations[0], lin(r, {{r.ft(1), 1}, {r.gt(1), 3}}, 1));
  EXPECT_EQ(s.equations[1], lin(r, {{r.ft(1), 2}}, 1) - r.b().scaled(MultiPoly(r.nvars(), Rational(2))));
}

TEST(OSystem, EmptyWithoutNilpotents) {
  for (int k = 0; k <= 3; ++k) EXPECT_TRUE(build_system(k, 0).second.equations.empty());
}

TEST(OSystem, StageMatricesAndFirstPair) {
  for (auto [k, d] : kCases) {
    auto s = build_system(k, d).second;
    EXPECT_EQ(s.equations.size(), static_cast<std::size_t>(2 * d));
    // First pair: linear coefficients d and d+2 in the first equation.
    EXPECT_EQ(s.stage_matrix[0](0, 0), Rational(d));
    EXPECT_EQ(s.stage_matrix[0](0, 1), Rational(d + 2));
    for (int i = 1; i <= d; ++i) {
      const QMatrix& m = s.stage_matrix[static_cast<std::size_t>(i - 1)];
      Rational det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
      EXPECT_EQ(det, Rational(-i * (d + 1) * (d + 1 - i) * (d + 1 + i)));
    }
  }
}

TEST(Eliminate, HandOracle) {
  auto e = eliminate(0, 1);
  const FGRing& r = e.ring;
  EXPECT_EQ(e.phi[0], r.b());
  EXPECT_EQ(e.psi[0], r.b().scaled(MultiPoly(r.nvars(), make_rational(-1, 3))));
  EXPECT_TRUE(eliminate(2, 0).phi.empty());
}

TEST(Eliminate, SubstitutionBoundsAndGrading) {
  for (auto [k, d] : kCases) {
    auto e = eliminate(k, d);
    auto rep = elimination_check(e);
    EXPECT_TRUE(rep.ok()) << k << "," << d << ": " << rep.first_failure();
    EXPECT_LE(e.passes, d + 2);
  }
}

TEST(OperatorO, SmallestCase) {
  auto op = universal_operator_O(0, 1);
  const FGRing& r = op.ring;
  UniPoly<OElement> wr(r.zero(), {r.var(r.g(1)), r.constant(Rational(2))});
  EXPECT_EQ(op.wr, wr);
  EXPECT_EQ(op.wr1, UniPoly<OElement>(r.zero(), {r.b().scaled(MultiPoly(r.nvars(), Rational(2)))}));
  EXPECT_EQ(op.F2[0], r.b());
}

TEST(OperatorO, ChecksForAllCases) {
  for (auto [k, d] : kCases) {
    auto op = universal_operator_O(k, d);
    EXPECT_EQ(op.F1[0], op.ring.constant(Rational(2 * k + d)));
    auto rep = operator_O_check(op);
    EXPECT_TRUE(rep.ok()) << k << "," << d << ": " << rep.first_failure();
  }
  for (int k = 0; k <= 2; ++k) {
    auto op = universal_operator_O(k, 0);
    EXPECT_TRUE(is_zero(op.F2[0]));
    EXPECT_TRUE(operator_O_check(op).ok());
  }
}

TEST(WronskiMap, Examples) {
  auto op = universal_operator_O(0, 1);
  auto w = wronski_map(op);
  const FGRing& r = op.ring;
  EXPECT_EQ(w.W[0], r.constant(Rational(2)));
  EXPECT_EQ(w.sigma[0], r.var(r.g(1)).scaled(MultiPoly(r.nvars(), make_rational(-1, 2))));
  auto w11 = wronski_map(universal_operator_O(1, 1));
  EXPECT_EQ(w11.W[0][0], MultiPoly(w11.W[0][0].nvars(), Rational(2)));
  // d = 0: the classical Wronski map, no b anywhere.
  auto op20 = universal_operator_O(2, 0);
  auto w20 = wronski_map(op20);
  for (const auto& s : w20.sigma) EXPECT_EQ(s.order(), 0);
  for (auto [k, d] : kCases) {
    auto o = universal_operator_O(k, d);
    auto rep = wronski_map_check(o, wronski_map(o));
    EXPECT_TRUE(rep.ok()) << rep.first_failure();
  }
}

TEST(CharacterO, Examples) {
  auto c = character_O(0, 1, 3);
  EXPECT_TRUE(c.ch_O0.agrees_with(QSeries::polynomial(0, {Rational(1), Rational(1), Rational(1), Rational(1)}, 3), 3));
  QSeries a1 = QSeries::polynomial(-1, {Rational(1), Rational(1)}, 5);
  EXPECT_TRUE(c.ch_O.agrees_with((a1 * c.ch_O0).truncated(2), 2));
  EXPECT_TRUE(c.report.ok()) << c.report.first_failure();
}

TEST(CharacterO, IdentitiesThroughOrder20) {
  for (int n = 1; n <= 8; ++n)
    for (int k = 0; 2 * k <= n; ++k) {
      auto c = character_O(k, n - 2 * k, 20);
      EXPECT_TRUE(c.report.ok()) << n << "," << k << ": " << c.report.first_failure();
    }
}

TEST(GeneratorSpan, SmallCases) {
  for (auto [k, d] : std::vector<std::pair<int, int>>{{0, 1}, {1, 0}, {2, 0}, {1, 1}, {0, 2}}) {
    auto rep = generator_span_check(universal_operator_O(k, d), 3);
    EXPECT_TRUE(rep.ok()) << k << "," << d << ": " << rep.first_failure();
  }
}
