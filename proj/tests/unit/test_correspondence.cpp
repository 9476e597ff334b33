#include <gtest/gtest.h>

#include "bethe/correspondence.hpp"

using namespace bethe;

namespace {

using QA = NilpotentElement<Rational>;

UniPoly<Rational> qpoly(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return UniPoly<Rational>(Rational(0), v);
}

QA qa(int d, std::initializer_list<Rational> c) { return QA(d, std::vector<Rational>(c)); }

AdPoly<Rational> adpoly(int d, std::vector<QA> c) { return AdPoly<Rational>(QA(d, Rational(0)), std::move(c)); }

}  // namespace

TEST(ConstructSolutions, HandPair) {
  // k = 1, d = 0, W = u^2 - 1, U = 2.
  auto sol = construct_solutions(qpoly({-1, 0, 1}), {qa(0, {0}), qa(0, {2})}, 1, 0, Rational(0));
  EXPECT_EQ(sol.F, adpoly(0, {qa(0, {0}), qa(0, {1})}));
  EXPECT_EQ(sol.G, adpoly(0, {qa(0, {1}), qa(0, {0}), qa(0, {1})}));
  EXPECT_TRUE(sol.report.ok()) << sol.report.first_failure();

  auto op = universal_operator_O(1, 0, 4);
  auto [h, rep] = special_hom_from_solutions(sol, op, qpoly({-1, 0, 1}), Rational(0));
  EXPECT_TRUE(rep.ok()) << rep.first_failure();
  EXPECT_EQ(eta_apply(h, op.ring.var(op.ring.f(0))), qa(0, {0}));
  EXPECT_EQ(eta_apply(h, op.ring.var(op.ring.g(0))), qa(0, {1}));
}

TEST(ConstructSolutions, OnePointWithNilpotent) {
  // k = 0, d = 1, W = u - 3, U_1 = b: F = 1 + b u.
  auto sol = construct_solutions(qpoly({-3, 1}), {qa(1, {0, 1})}, 0, 1, Rational(0));
  EXPECT_EQ(sol.F, adpoly(1, {qa(1, {1, 0}), qa(1, {0, 1})}));
  EXPECT_EQ(sol.G.degree(), 3);
  EXPECT_TRUE(is_zero(sol.G.coeff(0)));
  EXPECT_TRUE(sol.report.ok()) << sol.report.first_failure();
  auto [h, rep] = special_hom_from_solutions(sol, universal_operator_O(0, 1, 4), qpoly({-3, 1}), Rational(0));
  EXPECT_TRUE(rep.ok()) << rep.first_failure();
}

TEST(ConstructSolutions, IndicialMismatch) {
  EXPECT_THROW(construct_solutions(qpoly({-1, 0, 1}), {qa(0, {0}), qa(0, {3})}, 1, 0, Rational(0)), IndicialError);
  EXPECT_THROW(construct_solutions(qpoly({-3, 1}), {qa(1, {0, 2})}, 0, 1, Rational(0)), IndicialError);
}

TEST(ConstructSolutions, PerturbationBreaksKernel) {
  auto sol = construct_solutions(qpoly({-1, 0, 1}), {qa(0, {0}), qa(0, {2})}, 1, 0, Rational(0));
  AdPoly<Rational> W = adpoly(0, {qa(0, {-1}), qa(0, {0}), qa(0, {1})});
  AdPoly<Rational> U = adpoly(0, {qa(0, {2})});
  auto D = [&](const AdPoly<Rational>& y) {
    return W * y.derivative().derivative() - W.derivative() * y.derivative() + U * y;
  };
  EXPECT_TRUE(D(sol.G).is_zero_poly());
  AdPoly<Rational> g2 = sol.G + adpoly(0, {qa(0, {make_rational(1, 7)})});
  EXPECT_FALSE(D(g2).is_zero_poly());
}

TEST(SeriesAtInfinity, Geometric) {
  // 1/(u - 2) = sum 2^{j-1} u^{-j}.
  auto s = series_at_infinity(adpoly(0, {qa(0, {1})}), adpoly(0, {qa(0, {-2}), qa(0, {1})}), 4);
  for (int j = 1; j <= 4; ++j) EXPECT_EQ(s[static_cast<std::size_t>(j - 1)], qa(0, {Rational(1 << (j - 1))}));
}

TEST(EtaMatchesLeaf, AllLeavesUpToN3) {
  for (int n = 1; n <= 3; ++n) {
    auto pts = seeded_points(n, 7);
    EvalModule m = build_eval_module(n, pts);
    for (const auto& blk : deformed_isotypical_decomposition(m, KMatrix::nilpotent()))
      for (const auto& leaf : eigenleaf_decomposition(blk)) {
        auto rep = eta_matches_leaf(leaf, pts, n + 2);
        for (const auto& c : rep.checks)
          if (c.name.find(kSpecialCheck) == std::string::npos) EXPECT_TRUE(c.pass) << n << " " << c.name;
      }
  }
}

// Wr(F,G) = eta(W_0) W, and eta(W_0) keeps its b-terms on actual leaves.
TEST(EtaMatchesLeaf, WronskianUnitOnTwoPoints) {
  std::vector<Rational> pts{Rational(-5), Rational(2)};
  EvalModule m = build_eval_module(2, pts);
  auto blocks = deformed_isotypical_decomposition(m, KMatrix::nilpotent());
  auto leaf = eigenleaf_decomposition(blocks[0]).at(0);
  auto op = leaf_operator(leaf);
  std::vector<QA> U;
  for (const auto& row : op.exact) {
    std::vector<Rational> c;
    for (const auto& e : row) c.push_back(*e);
    U.emplace_back(2, c);
  }
  EXPECT_EQ(U[1], qa(2, {Rational(0), make_rational(3, 2), make_rational(49, 8)}));
  auto W = qpoly({-10, 3, 1});
  auto sol = construct_solutions(W, U, 0, 2, Rational(0));
  auto [h, rep] = special_hom_from_solutions(sol, universal_operator_O(0, 2, 4), W, Rational(0));
  EXPECT_EQ(h.wr_unit, qa(2, {Rational(3), make_rational(9, 4), make_rational(87, 8)}));
  for (const auto& c : rep.checks) EXPECT_EQ(c.pass, c.name != kSpecialCheck) << c.name;
}

TEST(EtaMatchesLeaf, OnePointIsSpecial) {
  std::vector<Rational> pts{Rational(3)};
  EvalModule m = build_eval_module(1, pts);
  auto blocks = deformed_isotypical_decomposition(m, KMatrix::nilpotent());
  auto rep = eta_matches_leaf(eigenleaf_decomposition(blocks[0]).at(0), pts, 3);
  EXPECT_TRUE(rep.ok()) << rep.first_failure();
}

TEST(DimensionIdentity, UpToN4) {
  for (int n = 1; n <= 4; ++n) {
    auto rep = dimension_identity_check(n);
    EXPECT_TRUE(rep.ok()) << n << " " << rep.first_failure();
  }
}

TEST(NuConsistency, SmallModules) {
  for (int n = 2; n <= 4; ++n) {
    EvalModule m = build_eval_module(n, seeded_points(n, 3));
    for (const auto& w : weights_of(n)) {
      auto rep = nu_consistency_check(m, w);
      EXPECT_TRUE(rep.ok()) << n << " " << w.str() << " " << rep.first_failure();
    }
  }
}

TEST(SeededPoints, DistinctAndDeterministic) {
  auto a = seeded_points(6, 11);
  EXPECT_EQ(a, seeded_points(6, 11));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) EXPECT_NE(a[i], a[j]);
  EXPECT_THROW(seeded_points(12, 1), DomainError);
}
