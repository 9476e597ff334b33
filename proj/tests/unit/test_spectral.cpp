#include <gtest/gtest.h>

#include "bethe/random.hpp"
#include "bethe/spectral.hpp"

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

std::vector<Rational> ints(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

UniPoly<Rational> poly(std::initializer_list<long> c) { return UniPoly<Rational>(Rational(0), ints(c)); }

const IsotypicBlock& block_of(const std::vector<IsotypicBlock>& bs, int k) {
  for (const auto& b : bs)
    if (b.weight.k() == k) return b;
  throw std::logic_error("no block");
}

}  // namespace

TEST(Isotypic, Examples) {
  auto b1 = deformed_isotypical_decomposition(build_eval_module(1, ints({4})), KMatrix::nilpotent());
  ASSERT_EQ(b1.size(), 1u);
  EXPECT_EQ(b1[0].dim(), 2u);
  EXPECT_EQ(b1[0].eigenvalue, Rational(0));

  auto b2 = deformed_isotypical_decomposition(build_eval_module(2, ints({0, 1})), KMatrix::nilpotent());
  EXPECT_EQ(block_of(b2, 0).dim(), 3u);
  EXPECT_EQ(block_of(b2, 1).dim(), 1u);
  EXPECT_EQ(block_of(b2, 1).eigenvalue, Rational(2));

  auto b3 = deformed_isotypical_decomposition(build_eval_module(3, ints({0, 1, 2})), KMatrix::nilpotent());
  EXPECT_EQ(block_of(b3, 0).dim(), 4u);
  EXPECT_EQ(block_of(b3, 1).dim(), 4u);
  EXPECT_EQ(block_of(b3, 1).eigenvalue, Rational(3));
}

TEST(Isotypic, DimensionsAndPlainBlocksAreEigenspaces) {
  Rng rng(21);
  for (int n = 1; n <= 5; ++n) {
    auto m = build_eval_module(n, random_points(rng, n));
    std::size_t total = 0;
    for (const auto& b : deformed_isotypical_decomposition(m, KMatrix::nilpotent())) {
      EXPECT_EQ(b.dim(), static_cast<std::size_t>(b.weight.d() + 1) * syt_count(b.weight).get_ui());
      total += b.dim();
    }
    EXPECT_EQ(total, m.dim());
    QMatrix b022 = bethe_coefficient(m, 2, 2, KMatrix::zero());
    for (const auto& b : deformed_isotypical_decomposition(m, KMatrix::zero())) {
      QMatrix x = b022 - QMatrix::identity(m.dim()).scaled(b.eigenvalue);
      EXPECT_TRUE((x * b.basis).is_zero_matrix()) << n << " " << b.weight.str();
    }
  }
}

TEST(Triangular, PlainBlocksNeedNoCorrection) {
  auto m = build_eval_module(3, ints({0, 1, 2}));
  for (const auto& b : deformed_isotypical_decomposition(m, KMatrix::zero())) {
    auto tb = triangular_block_basis(m, b);
    EXPECT_EQ(tb.w, tb.leading);
  }
}

TEST(Triangular, TwistedCorrectionsAreStrictlyLower) {
  auto m2 = build_eval_module(2, ints({0, 1}));
  auto b = block_of(deformed_isotypical_decomposition(m2, KMatrix::nilpotent()), 1);
  auto tb = triangular_block_basis(m2, b);
  ASSERT_EQ(tb.w.cols(), 1u);
  EXPECT_EQ(tb.weight_of[0], 1);
  // The singlet sits in weight 1; the correction is a multiple of v- ⊗ v-.
  EXPECT_TRUE(is_zero(tb.leading(1, 0) + tb.leading(2, 0)));
  EXPECT_FALSE(is_zero(tb.w(3, 0)));
  EXPECT_TRUE(is_zero(tb.w(0, 0)));

  Rng rng(23);
  for (int n = 2; n <= 4; ++n) {
    auto m = build_eval_module(n, random_points(rng, n));
    for (const auto& blk : deformed_isotypical_decomposition(m, KMatrix::nilpotent())) {
      auto t = triangular_block_basis(m, blk);
      EXPECT_EQ(t.w.cols(), blk.dim());
      for (std::size_t c = 0; c < t.w.cols(); ++c)
        for (std::size_t r = 0; r < m.dim(); ++r) {
          Rational diff = t.w(r, c) - t.leading(r, c);
          if (!is_zero(diff)) EXPECT_GT(m.basis().popcount_at(r), t.weight_of[c]);
          if (!is_zero(t.leading(r, c))) EXPECT_EQ(m.basis().popcount_at(r), t.weight_of[c]);
        }
    }
  }
}

TEST(Eigenleaves, Examples) {
  auto b2 = deformed_isotypical_decomposition(build_eval_module(2, ints({0, 1})), KMatrix::nilpotent());
  auto l20 = eigenleaf_decomposition(block_of(b2, 0));
  ASSERT_EQ(l20.size(), 1u);
  EXPECT_EQ(l20[0].basis.cols(), 3u);
  auto l11 = eigenleaf_decomposition(block_of(b2, 1));
  ASSERT_EQ(l11.size(), 1u);
  EXPECT_EQ(l11[0].basis.cols(), 1u);

  auto b3 = deformed_isotypical_decomposition(build_eval_module(3, ints({0, 1, 2})), KMatrix::nilpotent());
  auto l21 = eigenleaf_decomposition(block_of(b3, 1));
  ASSERT_EQ(l21.size(), 2u);
  for (const auto& l : l21) EXPECT_EQ(l.basis.cols(), 2u);
}

TEST(Eigenleaves, CountsDimsAndResiduals) {
  Rng rng(25);
  for (int n = 1; n <= 4; ++n) {
    auto m = build_eval_module(n, random_points(rng, n));
    for (const auto& blk : deformed_isotypical_decomposition(m, KMatrix::nilpotent())) {
      auto leaves = eigenleaf_decomposition(blk, 128, 3);
      EXPECT_EQ(leaves.size(), syt_count(blk.weight).get_ui());
      FMatrix all;
      PrecisionScope scope(leaves.front().precision);
      for (const auto& l : leaves) {
        EXPECT_EQ(l.basis.cols(), static_cast<std::size_t>(blk.weight.d() + 1));
        EXPECT_LT(l.residual, pow2(-64, 128));
        all = all.hconcat(l.basis);
      }
      EXPECT_EQ(rank_numeric(all, pow2(-64, 128)), blk.dim());
    }
  }
}

TEST(LeafOperator, Examples) {
  auto m = build_eval_module(2, ints({0, 1}));
  auto bs = deformed_isotypical_decomposition(m, KMatrix::nilpotent());
  auto op11 = leaf_operator(eigenleaf_decomposition(block_of(bs, 1))[0]);
  EXPECT_EQ(op11.d, 0);
  EXPECT_EQ(*op11.exact[1][0], Rational(2));
  auto op20 = leaf_operator(eigenleaf_decomposition(block_of(bs, 0))[0]);
  EXPECT_EQ(op20.d, 2);
  EXPECT_EQ(*op20.exact[1][0], Rational(0));
  EXPECT_EQ(*op20.exact[0][0], Rational(0));
  EXPECT_EQ(*op20.exact[0][1], Rational(1));
  EXPECT_EQ(*op20.exact[0][2], Rational(0));
}

TEST(LeafOperator, PolynomialInNForSmallModules) {
  Rng rng(27);
  for (int n = 2; n <= 4; ++n) {
    auto m = build_eval_module(n, random_points(rng, n));
    for (const auto& blk : deformed_isotypical_decomposition(m, KMatrix::nilpotent()))
      for (const auto& leaf : eigenleaf_decomposition(blk)) {
        auto op = leaf_operator(leaf);
        PrecisionScope scope(leaf.precision);
        EXPECT_LT(op.residual, pow2(-40, 128));
        EXPECT_EQ(*op.exact[1][0], Rational(blk.weight.k() * (n - blk.weight.k() + 1)));
      }
  }
}

TEST(Roundtrip, HandExample) {
  auto r = leaf_from_polynomials(poly({0, 1}), poly({1, 0, 1}));
  EXPECT_TRUE(r.rational_points);
  EXPECT_EQ(r.exact_points, ints({-1, 1}));
  EXPECT_EQ(r.matches, 1u);
  EXPECT_EQ(r.leaf_count, 1u);
  // D = ∂² - 2u/(u²-1) ∂ + 2/(u²-1)
  PrecisionScope scope(128);
  EXPECT_EQ(r.target.c0[1], PrecFloat(2));
  EXPECT_EQ(r.target.W.coeff(0), PrecFloat(-1));
}

TEST(Roundtrip, IrrationalPoints) {
  auto r = leaf_from_polynomials(poly({1}), poly({0, 2, -3, 1}));
  EXPECT_FALSE(r.rational_points);
  EXPECT_EQ(r.n, 2);
  EXPECT_EQ(r.matches, 1u);
  // Wr(u, u^4 - 14u^2 - 12) = 3u^4 - 14u^2 + 12
  auto r2 = leaf_from_polynomials(poly({0, 1}), poly({-12, 0, -14, 0, 1}));
  EXPECT_FALSE(r2.rational_points);
  EXPECT_EQ(r2.n, 4);
  EXPECT_EQ(r2.leaf_count, 3u);
  EXPECT_EQ(r2.matches, 1u);
  // Wr(u, u^4 - 15u^2 - 12) = 3(u^2 - 1)(u^2 - 4)
  auto r3 = leaf_from_polynomials(poly({0, 1}), poly({-12, 0, -15, 0, 1}));
  EXPECT_TRUE(r3.rational_points);
  EXPECT_EQ(r3.exact_points, ints({-2, -1, 1, 2}));
  EXPECT_EQ(r3.leaf_count, 3u);
  EXPECT_EQ(r3.matches, 1u);
}

TEST(Roundtrip, DegenerateWronskian) {
  EXPECT_THROW(leaf_from_polynomials(poly({0, 1}), poly({0, 0, 1})), GenericityFailure);
  EXPECT_THROW(leaf_from_polynomials(poly({1}), poly({1, 0, 1, 0, 1})), GenericityFailure);
}

TEST(SingularSpectrum, MatchesLeaves) {
  Rng rng(29);
  for (int n = 1; n <= 4; ++n) {
    auto rep = singular_spectrum_match(build_eval_module(n, random_points(rng, n)));
    EXPECT_TRUE(rep.ok()) << n << " " << rep.first_failure();
  }
}

TEST(BlockAlgebra, RegularRepresentation) {
  Rng rng(31);
  for (int n = 1; n <= 4; ++n) {
    auto m = build_eval_module(n, random_points(rng, n));
    for (const auto& blk : deformed_isotypical_decomposition(m, KMatrix::nilpotent())) {
      auto rep = block_algebra_check(m, blk);
      EXPECT_TRUE(rep.ok()) << n << " " << rep.first_failure();
    }
  }
}
