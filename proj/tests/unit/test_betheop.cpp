#include <gtest/gtest.h>

#include "bethe/betheop.hpp"
#include "bethe/random.hpp"

using namespace bethe;

namespace {

std::vector<Rational> random_points(Rng& rng, int n) {
  std::vector<Rational> pts;
  while (static_cast<int>(pts.size()) < n) {
    Rational p = make_rational(rng.uniform(-12, 12), rng.uniform(1, 3));
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
  }
  return pts;
}

// Specialize z_s -> b_s and read the result as a column vector.
std::vector<Rational> specialize(const SymbolicVector& v, const EvalModule& m) {
  std::vector<Rational> col(m.dim(), Rational(0));
  for (const auto& [key, c] : v.terms()) {
    Rational w = c;
    for (int s = 0; s < m.n(); ++s) w *= rational_pow(m.points()[static_cast<std::size_t>(s)], static_cast<unsigned>(key.second[static_cast<std::size_t>(s)]));
    col[m.basis().position(key.first)] += w;
  }
  return col;
}

}  // namespace

TEST(BetheSeries, SingleSite) {
  auto m = build_eval_module(1, {Rational(0)});
  auto tw = bethe_b2_series(m, KMatrix::nilpotent());
  EXPECT_EQ(tw.simple[0], m.local(Gen::e21, 0));
  auto plain = bethe_b2_series(m, KMatrix::zero());
  EXPECT_TRUE(plain.simple[0].is_zero_matrix());
  EXPECT_TRUE(plain.double_pole[0].is_zero_matrix());
}

TEST(BetheSeries, TwistDifferenceIsE21Current) {
  Rng rng(2);
  for (int n = 1; n <= 4; ++n) {
    auto m = build_eval_module(n, random_points(rng, n));
    auto a = bethe_b2_series(m, KMatrix::nilpotent());
    auto b = bethe_b2_series(m, KMatrix::zero());
    for (int s = 0; s < n; ++s) {
      EXPECT_EQ(a.simple[static_cast<std::size_t>(s)] - b.simple[static_cast<std::size_t>(s)], m.local(Gen::e21, s));
      EXPECT_TRUE(a.double_pole[static_cast<std::size_t>(s)].is_zero_matrix());
    }
  }
}

TEST(UniversalOperator, Examples) {
  auto m1 = build_eval_module(1, {Rational(0)});
  auto op1 = universal_operator(m1, KMatrix::nilpotent());
  EXPECT_EQ(op1.W, UniPoly<Rational>(Rational(0), {Rational(0), Rational(1)}));
  ASSERT_EQ(op1.U.size(), 1u);
  EXPECT_EQ(op1.U[0], m1.local(Gen::e21, 0));

  auto m2 = build_eval_module(2, {Rational(0), Rational(1)});
  auto op2 = universal_operator(m2, KMatrix::nilpotent());
  EXPECT_EQ(op2.U[0], m2.local(Gen::e21, 0) + m2.local(Gen::e21, 1));
  EXPECT_TRUE(universal_operator(m2, KMatrix::zero()).U[0].is_zero_matrix());
}

TEST(UniversalOperator, ReconstructionAndSeriesCrossCheck) {
  Rng rng(4);
  for (int n = 1; n <= 4; ++n)
    for (auto k : {KMatrix::zero(), KMatrix::nilpotent()}) {
      auto m = build_eval_module(n, random_points(rng, n));
      auto rep = reconstruction_check(m, k);
      EXPECT_TRUE(rep.ok()) << rep.first_failure();
    }
}

TEST(BetheCoefficient, Examples) {
  Rng rng(6);
  for (int n = 1; n <= 3; ++n) {
    auto m = build_eval_module(n, random_points(rng, n));
    EXPECT_EQ(bethe_coefficient(m, 1, 1, KMatrix::zero()), QMatrix::identity(m.dim()).scaled(Rational(-n)));
    EXPECT_EQ(bethe_coefficient(m, 2, 1, KMatrix::nilpotent()), m.current(Gen::e21, 0));
  }
  auto m2 = build_eval_module(2, {Rational(3), make_rational(-1, 2)});
  EXPECT_TRUE(bethe_coefficient(m2, 2, 1, KMatrix::zero()).is_zero_matrix());
  EXPECT_EQ(bethe_coefficient(m2, 1, 3, KMatrix::zero()), QMatrix::identity(4).scaled(-(Rational(9) + make_rational(1, 4))));
}

TEST(Commutativity, Examples) {
  auto m3 = build_eval_module(3, {Rational(0), Rational(1), Rational(-2)});
  auto rep = commutativity_check(m3, KMatrix::nilpotent(), 4);
  EXPECT_TRUE(rep.ok()) << rep.first_failure();
  EXPECT_TRUE(commutativity_check(build_eval_module(1, {Rational(5)}), KMatrix::nilpotent(), 3).ok());
  EXPECT_TRUE(commutativity_check(build_eval_module(1, {Rational(5)}), KMatrix::zero(), 3).ok());
  auto m2 = build_eval_module(2, {Rational(0), Rational(1)});
  auto b0 = bethe_coefficient(m2, 2, 2, KMatrix::zero());
  EXPECT_TRUE(commutator(b0, m2.current(Gen::e21, 0)).is_zero_matrix());
  EXPECT_THROW(commutativity_check(m2, KMatrix::zero(), 1), DomainError);
}

TEST(Commutativity, TwistedGeneratorsDoNotCommuteWithGl2) {
  // Sanity: the check is not vacuous. B_22 with the twist fails to commute with e12.
  auto m = build_eval_module(2, {Rational(0), Rational(1)});
  auto b = bethe_coefficient(m, 2, 2, KMatrix::nilpotent());
  EXPECT_FALSE(commutator(b, m.current(Gen::e12, 0)).is_zero_matrix());
}

TEST(NilpFormula, Examples) {
  auto m1 = build_eval_module(1, {make_rational(2, 7)});
  EXPECT_TRUE(nilp_formula_check(m1, 2).ok());
  auto m2 = build_eval_module(2, {Rational(0), Rational(1)});
  QMatrix diff = bethe_coefficient(m2, 2, 2, KMatrix::nilpotent()) - bethe_coefficient(m2, 2, 2, KMatrix::zero());
  EXPECT_EQ(diff, m2.local(Gen::e21, 1));
  auto rep = nilp_formula_check(build_eval_module(4, {Rational(1), Rational(-1), make_rational(1, 2), Rational(3)}), 8);
  EXPECT_TRUE(rep.ok()) << rep.first_failure();
}

TEST(BetheSpectrum, B22CharpolyAndPlainEigenvalues) {
  Rng rng(8);
  for (int n = 1; n <= 4; ++n) {
    auto m = build_eval_module(n, random_points(rng, n));
    QMatrix b22 = bethe_coefficient(m, 2, 2, KMatrix::nilpotent());
    QMatrix b022 = bethe_coefficient(m, 2, 2, KMatrix::zero());
    EXPECT_EQ(charpoly(b22), charpoly(b022));
    // B0_22 is diagonalizable with eigenvalue k(n-k+1) on the isotypical component.
    UniPoly<Rational> want(Rational(0), {Rational(1)});
    for (const auto& w : weights_of(n)) {
      Rational ev = w.k() * (n - w.k() + 1);
      auto dim = static_cast<std::size_t>(w.d() + 1) * syt_count(w).get_ui();
      QMatrix eig = kernel(b022 - QMatrix::identity(m.dim()).scaled(ev));
      EXPECT_EQ(eig.cols(), dim) << n << " " << w.str();
    }
    // B0_2j preserves the weight spaces.
    for (int j = 1; j <= 2 * n; ++j) {
      QMatrix b = bethe_coefficient(m, 2, j, KMatrix::zero());
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
          if (!is_zero(b(r, c))) EXPECT_EQ(m.basis().popcount_at(r), m.basis().popcount_at(c));
    }
  }
}

TEST(BetheSymbolic, HomogeneousOfDegreeJMinusI) {
  Rng rng(10);
  const int n = 3;
  for (int trial = 0; trial < 6; ++trial) {
    auto mask = static_cast<std::uint32_t>(rng.uniform(0, 7));
    std::vector<int> z{static_cast<int>(rng.uniform(0, 1)), static_cast<int>(rng.uniform(0, 1)), 0};
    auto v = SymbolicVector::basis_vector(n, 12, mask, z);
    int deg0 = 0;
    ASSERT_TRUE(v.homogeneous(deg0));
    for (auto k : {KMatrix::zero(), KMatrix::nilpotent()})
      for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 5; ++j) {
          auto w = symbolic_bethe(i, j, k, v);
          int deg = 0;
          ASSERT_TRUE(w.homogeneous(deg)) << i << j;
          if (!w.is_zero()) EXPECT_EQ(deg, deg0 + j - i);
        }
  }
}

TEST(BetheSymbolic, SpecializesToModuleMatrices) {
  auto m = build_eval_module(3, {Rational(2), make_rational(-1, 2), Rational(3)});
  for (auto k : {KMatrix::zero(), KMatrix::nilpotent()})
    for (int j = 1; j <= 5; ++j) {
      QMatrix b = bethe_coefficient(m, 2, j, k);
      for (std::size_t c = 0; c < m.dim(); ++c) {
        auto v = SymbolicVector::basis_vector(3, 8, m.basis().mask(c));
        EXPECT_EQ(specialize(symbolic_bethe(2, j, k, v), m), b.column(c)) << j;
      }
    }
}

TEST(IrrepImage, Examples) {
  EXPECT_EQ(irrep_bethe_image(WeightLabel::make(2, 0)), UniPoly<Rational>::monomial(Rational(1), 3));
  EXPECT_EQ(irrep_bethe_image(WeightLabel::make(1, 1)), UniPoly<Rational>::monomial(Rational(1), 1));
  EXPECT_EQ(irrep_bethe_image(WeightLabel::make(3, 1)), UniPoly<Rational>::monomial(Rational(1), 3));
}
