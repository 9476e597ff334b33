#include <gtest/gtest.h>

#include <bit>
#include <numeric>

#include "bethe/gl2rep.hpp"
#include "bethe/random.hpp"

using namespace bethe;

namespace {

// Hook-length formula for a two-row shape, independent of the ballot count.
Integer hook_length_syt(int l1, int l2) {
  const int n = l1 + l2;
  Integer hooks = 1;
  for (int c = 0; c < l1; ++c) {
    int below = c < l2 ? 1 : 0;
    hooks *= (l1 - c - 1) + below + 1;
  }
  for (int c = 0; c < l2; ++c) hooks *= (l2 - c - 1) + 1;
  return factorial(n) / hooks;
}

QSeries closed_form_char_vs0(int n, int k, int order) {
  // (1-q^{d+1})^2/(1-q) * q^{2k-n} / ((q)_{n-k+1} (q)_k)
  const int d = n - 2 * k;
  const int big = order + 2 * d + 4;
  std::vector<Rational> top(static_cast<std::size_t>(d) + 2, Rational(0));
  top[0] = 1;
  top[static_cast<std::size_t>(d) + 1] = -1;
  QSeries one_minus = QSeries::polynomial(0, top, big);
  QSeries num = one_minus * one_minus;
  QSeries den = QSeries::polynomial(0, {1, -1}, big) * qseries_pochhammer(n - k + 1, big) * qseries_pochhammer(k, big);
  return (num / den).shifted(2 * k - n).truncated(order);
}

}  // namespace

TEST(WeightLabel, Validation) {
  EXPECT_THROW(WeightLabel::make(1, 2), InvalidWeightError);
  EXPECT_THROW(WeightLabel::make(2, -1), InvalidWeightError);
  auto w = WeightLabel::from_nk(5, 2);
  EXPECT_EQ(w.l1, 3);
  EXPECT_EQ(w.d(), 1);
  EXPECT_EQ(weights_of(4).size(), 3u);
}

TEST(Syt, MatchesHookLengthOracle) {
  for (int n = 0; n <= 10; ++n)
    for (int k = 0; 2 * k <= n; ++k)
      EXPECT_EQ(syt_count(WeightLabel::from_nk(n, k)), hook_length_syt(n - k, k)) << n << "," << k;
}

TEST(Irrep, Examples) {
  auto v = build_irrep(WeightLabel::make(1, 0));
  EXPECT_EQ(v.e21(1, 0), 1);
  EXPECT_EQ(v.e12(0, 1), 1);
  EXPECT_EQ(v.e11(0, 0), 1);
  EXPECT_EQ(v.e22(1, 1), 1);
  EXPECT_EQ(v.e11(1, 1), 0);

  auto det = build_irrep(WeightLabel::make(1, 1));
  ASSERT_EQ(det.dim(), 1u);
  EXPECT_TRUE(det.e12.is_zero_matrix());
  EXPECT_TRUE(det.e21.is_zero_matrix());
  EXPECT_EQ(det.e11(0, 0), 1);
  EXPECT_EQ(det.e22(0, 0), 1);

  // Spin 1: lowering with entries 1, 2.
  auto s1 = build_irrep(WeightLabel::make(2, 0));
  EXPECT_EQ(s1.e21(1, 0), 1);
  EXPECT_EQ(s1.e21(2, 1), 2);
  EXPECT_EQ(s1.e21(2, 0), 0);
}

TEST(Irrep, Gl2RelationsHold) {
  for (int n = 0; n <= 8; ++n)
    for (int k = 0; 2 * k <= n; ++k) {
      auto m = build_irrep(WeightLabel::from_nk(n, k));
      const auto I = QMatrix::identity(m.dim());
      EXPECT_EQ(commutator(m.e12, m.e21), m.e11 - m.e22);
      EXPECT_EQ(m.e11 + m.e22, I.scaled(Rational(n)));
      EXPECT_EQ(commutator(m.e11, m.e12), m.e12);
      EXPECT_EQ(commutator(m.e11, m.e21), -m.e21);
      EXPECT_EQ(commutator(m.e22, m.e21), m.e21);
      EXPECT_TRUE(m.e12.column(0) == std::vector<Rational>(m.dim(), Rational(0)));
    }
}

TEST(SpinBasis, OrderingAndWeights) {
  SpinBasis b(3);
  EXPECT_EQ(b.mask(0), 0u);
  // popcount-1 masks in factor-word order: v+v+v-, v+v-v+, v-v+v+.
  EXPECT_EQ(b.mask(1), 0b100u);
  EXPECT_EQ(b.mask(2), 0b010u);
  EXPECT_EQ(b.mask(3), 0b001u);
  for (int m = 0; m <= 3; ++m) EXPECT_EQ(b.weight_end(m) - b.weight_begin(m), binomial(3, m).get_ui());
  for (int n = 1; n <= 6; ++n) {
    SpinBasis bb(n);
    std::size_t total = 0;
    for (int m = 0; m <= n; ++m) {
      EXPECT_EQ(bb.weight_end(m) - bb.weight_begin(m), binomial(n, m).get_ui());
      total += bb.weight_end(m) - bb.weight_begin(m);
    }
    EXPECT_EQ(total, std::size_t{1} << n);
    for (std::size_t i = 0; i < bb.size(); ++i) EXPECT_EQ(bb.position(bb.mask(i)), i);
  }
}

TEST(EvalModule, Examples) {
  auto m1 = build_eval_module(1, {Rational(0)});
  EXPECT_EQ(m1.current(Gen::e11, 0), QMatrix::from_rows({{1, 0}, {0, 0}}));
  EXPECT_TRUE(m1.current(Gen::e11, 1).is_zero_matrix());

  auto m2 = build_eval_module(2, {Rational(0), Rational(1)});
  EXPECT_EQ(m2.current(Gen::e21, 1), m2.local(Gen::e21, 1));

  auto m3 = build_eval_module(3, {Rational(2), make_rational(-1, 3), Rational(5)});
  EXPECT_EQ(m3.current(Gen::e11, 0) + m3.current(Gen::e22, 0), QMatrix::identity(8).scaled(Rational(3)));

  EXPECT_THROW(build_eval_module(2, {Rational(1), Rational(1)}), RepeatedPointError);
  EXPECT_THROW(build_eval_module(2, {Rational(1)}), ShapeError);
}

TEST(EvalModule, CurrentAlgebraRelations) {
  auto m = build_eval_module(3, {Rational(1), make_rational(-2, 3), Rational(4)});
  auto bracket = [](Gen a, Gen b) -> std::vector<std::pair<Gen, int>> {
    // [e_ij, e_kl] = delta_jk e_il - delta_li e_kj
    auto idx = [](Gen g) -> std::pair<int, int> {
      switch (g) {
        case Gen::e11: return {1, 1};
        case Gen::e12: return {1, 2};
        case Gen::e21: return {2, 1};
        default: return {2, 2};
      }
    };
    auto gen = [](int i, int j) {
      if (i == 1) return j == 1 ? Gen::e11 : Gen::e12;
      return j == 1 ? Gen::e21 : Gen::e22;
    };
    auto [i, j] = idx(a);
    auto [k, l] = idx(b);
    std::vector<std::pair<Gen, int>> out;
    if (j == k) out.emplace_back(gen(i, l), 1);
    if (l == i) out.emplace_back(gen(k, j), -1);
    return out;
  };
  for (Gen a : kAllGens)
    for (Gen b : kAllGens)
      for (int r = 0; r <= 3; ++r)
        for (int p = 0; p <= 3; ++p) {
          QMatrix want(m.dim(), m.dim());
          for (auto [g, s] : bracket(a, b)) want += m.current(g, r + p).scaled(Rational(s));
          EXPECT_EQ(commutator(m.current(a, r), m.current(b, p)), want);
        }
  for (int r = 0; r <= 4; ++r)
    EXPECT_EQ(m.current(Gen::e11, r) + m.current(Gen::e22, r), QMatrix::identity(8).scaled(m.power_sum(r)));
}

TEST(SingularSubspace, Examples) {
  SpinBasis b2(2);
  QMatrix singlet = singular_subspace(b2, WeightLabel::make(1, 1));
  ASSERT_EQ(singlet.cols(), 1u);
  // v+⊗v- (mask 0b10) and v-⊗v+ (mask 0b01) with opposite signs.
  EXPECT_EQ(singlet(b2.position(0b10), 0), -singlet(b2.position(0b01), 0));
  EXPECT_NE(singlet(b2.position(0b10), 0), 0);
  QMatrix top = singular_subspace(b2, WeightLabel::make(2, 0));
  ASSERT_EQ(top.cols(), 1u);
  EXPECT_EQ(top(b2.position(0), 0), 1);
  EXPECT_EQ(singular_subspace(SpinBasis(3), WeightLabel::make(2, 1)).cols(), 2u);
  EXPECT_EQ(singular_subspace(SpinBasis(3), WeightLabel::make(2, 0)).cols(), 0u);
}

TEST(SingularSubspace, DimensionIsSytCount) {
  for (int n = 1; n <= 7; ++n) {
    SpinBasis b(n);
    for (const auto& w : weights_of(n)) EXPECT_EQ(singular_subspace(b, w).cols(), syt_count(w).get_ui());
  }
}

TEST(Symbolic, ActionExamples) {
  auto v = SymbolicVector::basis_vector(2, 3, 0b00);
  auto w = symbolic_action(Gen::e21, 0, v);
  SymbolicVector want(2, 3);
  want.add_term(0b01, {0, 0}, Rational(1));
  want.add_term(0b10, {0, 0}, Rational(1));
  EXPECT_EQ(w, want);
  int deg = 99;
  ASSERT_TRUE(w.homogeneous(deg));
  EXPECT_EQ(deg, -1);

  auto x = symbolic_action(Gen::e11, 1, v);
  SymbolicVector want2(2, 3);
  want2.add_term(0b00, {1, 0}, Rational(1));
  want2.add_term(0b00, {0, 1}, Rational(1));
  EXPECT_EQ(x, want2);
  ASSERT_TRUE(x.homogeneous(deg));
  EXPECT_EQ(deg, 1);

  EXPECT_THROW(symbolic_action(Gen::e11, 4, v), BoundExceededError);
}

TEST(Symbolic, CentralCurrentIsPowerSum) {
  Rng rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    SymbolicVector v(3, 8);
    for (int t = 0; t < 4; ++t)
      v.add_term(static_cast<std::uint32_t>(rng.uniform(0, 7)),
                 {static_cast<int>(rng.uniform(0, 2)), static_cast<int>(rng.uniform(0, 2)),
                  static_cast<int>(rng.uniform(0, 2))},
                 Rational(rng.nonzero(-4, 4)));
    for (int r = 0; r <= 2; ++r)
      EXPECT_EQ(symbolic_action(Gen::e11, r, v) + symbolic_action(Gen::e22, r, v), multiply_power_sum(r, v));
  }
}

TEST(Symbolic, ActionIsGraded) {
  Rng rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3;
    // Homogeneous vector of degree delta.
    int delta = static_cast<int>(rng.uniform(-1, 2));
    SymbolicVector v(n, 10);
    for (int t = 0; t < 5; ++t) {
      auto mask = static_cast<std::uint32_t>(rng.uniform(0, 7));
      int zdeg = delta + std::popcount(mask);
      if (zdeg < 0) continue;
      std::vector<int> z(3, 0);
      for (int i = 0; i < zdeg; ++i) ++z[static_cast<std::size_t>(rng.uniform(0, 2))];
      v.add_term(mask, z, Rational(rng.nonzero(-5, 5)));
    }
    for (Gen g : kAllGens)
      for (int r = 0; r <= 3; ++r) {
        auto w = symbolic_action(g, r, v);
        int deg = 0;
        ASSERT_TRUE(w.homogeneous(deg));
        if (!w.is_zero()) EXPECT_EQ(deg, delta + r + gen_degree(g));
      }
  }
}

TEST(Symbolic, SymmetrizerImageInvariant) {
  Rng rng(23);
  for (int trial = 0; trial < 5; ++trial) {
    SymbolicVector v(3, 4);
    for (int t = 0; t < 3; ++t)
      v.add_term(static_cast<std::uint32_t>(rng.uniform(0, 7)),
                 {static_cast<int>(rng.uniform(0, 1)), static_cast<int>(rng.uniform(0, 2)), 0},
                 Rational(rng.nonzero(-4, 4)));
    auto s = symmetrize(v);
    EXPECT_EQ(s.permuted({1, 0, 2}), s);
    EXPECT_EQ(s.permuted({0, 2, 1}), s);
  }
}

TEST(Molien, Examples) {
  EXPECT_EQ(molien_graded_weight_dimension(2, 1, 0), 1);
  EXPECT_EQ(molien_graded_weight_dimension(2, 1, 1), 2);
  for (int j = 0; j < 6; ++j) EXPECT_EQ(molien_graded_weight_dimension(1, 0, j), 1);
  EXPECT_EQ(molien_graded_weight_dimension(3, 4, 0), 0);
}

TEST(Molien, AgreesWithSymmetrizerRank) {
  for (int n = 1; n <= 3; ++n)
    for (int m = 0; m <= n; ++m)
      for (int j = 0; j <= 4; ++j)
        EXPECT_EQ(molien_graded_weight_dimension(n, m, j), symmetrizer_rank(n, m, j)) << n << m << j;
}

TEST(Character, Examples) {
  auto c = brute_isotypical_character(2, 1, 4);
  std::vector<int> want{1, 1, 2, 2, 3};
  for (int e = 0; e <= 4; ++e) EXPECT_EQ(c.coeff(e), want[static_cast<std::size_t>(e)]);
  EXPECT_EQ(c.coeff(-1), 0);

  // n = 1: (1 + q^{-1})/(1 - q).
  auto c1 = brute_isotypical_character(1, 0, 6);
  EXPECT_EQ(c1.lowest(), -1);
  EXPECT_EQ(c1.coeff(-1), 1);
  for (int e = 0; e <= 6; ++e) EXPECT_EQ(c1.coeff(e), 2);

  EXPECT_THROW(brute_isotypical_character(2, 2, 3), InvalidWeightError);
}

TEST(Character, BruteMatchesClosedForm) {
  for (int n = 1; n <= 5; ++n)
    for (int k = 0; 2 * k <= n; ++k) {
      auto brute = brute_isotypical_character(n, k, 10);
      auto closed = closed_form_char_vs0(n, k, 10);
      EXPECT_TRUE(brute.agrees_with(closed, 10)) << n << "," << k << ": " << brute.to_string() << " vs "
                                                 << closed.to_string();
    }
}
