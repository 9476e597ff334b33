// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <thread>

#include "bethe/correspondence.hpp"
#include "bethe/olambda.hpp"
#include "bethe/suite.hpp"

#ifndef BETHE_SOURCE_DIR
#define BETHE_SOURCE_DIR "."
#endif

using namespace bethe;

namespace {

constexpr std::uint64_t kSeed = 1;
constexpr unsigned kPrec = 128;

std::vector<Rational> points_for(int n, int set) { return seeded_points(n, derive_seed(kSeed, 1, n, 0, set)); }

std::string wlabel(int n, int k) { return "(" + std::to_string(n - k) + "," + std::to_string(k) + ")"; }

Report c1_commutativity() {
  Report rep;
  for (int n = 1; n <= 4; ++n)
    for (int set = 0; set < 3; ++set) {
      EvalModule m = build_eval_module(n, points_for(n, set));
      const std::string tag = "n=" + std::to_string(n) + " set=" + std::to_string(set) + " ";
      for (const auto& c : commutativity_check(m, KMatrix::zero(), 2 * n).checks)
        if (c.name.find("[B0_2") == std::string::npos) rep.add(tag + "K=zero " + c.name, c.pass, c.residual, c.detail);
      rep.append(commutativity_check(m, KMatrix::nilpotent(), 2 * n), tag + "K=nilpotent ");
    }
  return rep;
}

Report c2_gl2_commutation() {
  Report rep;
  for (int n = 1; n <= 4; ++n)
    for (int set = 0; set < 3; ++set) {
      EvalModule m = build_eval_module(n, points_for(n, set));
      bool any = false;
      for (const auto& c : commutativity_check(m, KMatrix::zero(), 2 * n).checks)
        if (c.name.find("[B0_2") != std::string::npos) {
          any = true;
          rep.add("n=" + std::to_string(n) + " " + c.name, c.pass, c.residual, c.detail);
        }
      rep.add("n=" + std::to_string(n) + " gl2 commutation checked", any);
    }
  return rep;
}

Report c3_nilp_formula() {
  Report rep;
  for (int n = 1; n <= 4; ++n)
    for (int set = 0; set < 3; ++set)
      rep.append(nilp_formula_check(build_eval_module(n, points_for(n, set)), 2 * n), "n=" + std::to_string(n) + " ");
  return rep;
}

Report c4_u1() {
  Report rep;
  for (int n = 1; n <= 4; ++n)
    for (int set = 0; set < 3; ++set) {
      EvalModule m = build_eval_module(n, points_for(n, set));
      const std::string tag = "n=" + std::to_string(n) + " ";
      rep.append(u1_check(m), tag);
      for (const KMatrix& k : {KMatrix::zero(), KMatrix::nilpotent()}) {
        auto s = bethe_b2_series(m, k);
        bool clean = true;
        for (const auto& dp : s.double_pole) clean = clean && dp.is_zero_matrix();
        rep.add(tag + "double-pole part vanishes", clean);
      }
    }
  return rep;
}

Report c5_blocks() {
  Report rep;
  for (int n = 1; n <= 6; ++n) {
    EvalModule m = build_eval_module(n, points_for(n, 0));
    std::size_t total = 0;
    for (const auto& blk : deformed_isotypical_decomposition(m, KMatrix::nilpotent())) {
      total += blk.dim();
      const auto want = static_cast<std::size_t>(blk.weight.d() + 1) * syt_count(blk.weight).get_ui();
      rep.add("n=" + std::to_string(n) + " " + blk.weight.str() + " dim (n-2k+1)#SYT", blk.dim() == want, "0",
              std::to_string(blk.dim()) + " vs " + std::to_string(want));
    }
    rep.add("n=" + std::to_string(n) + " blocks sum to 2^n", total == (std::size_t{1} << n));
  }
  return rep;
}

Report c6_leaves() {
  Report rep;
  const PrecFloat tol = pow2(-static_cast<long>(kPrec / 2), kPrec);
  for (int n = 1; n <= 5; ++n) {
    EvalModule m = build_eval_module(n, points_for(n, 0));
    for (const auto& blk : deformed_isotypical_decomposition(m, KMatrix::nilpotent())) {
      const std::string tag = "n=" + std::to_string(n) + " " + blk.weight.str() + " ";
      const auto d1 = static_cast<std::size_t>(blk.weight.d() + 1);
      auto leaves = eigenleaf_decomposition(blk, kPrec, kSeed);
      rep.add(tag + "leaf count #SYT", leaves.size() == syt_count(blk.weight).get_ui(), "0",
              std::to_string(leaves.size()));
      PrecisionScope scope(leaves.front().precision);
      FMatrix all(blk.dim(), leaves.size() * d1);
      std::size_t col = 0;
      for (const auto& l : leaves) {
        rep.add(tag + "leaf dimension n-2k+1", l.basis.cols() == d1);
        rep.add(tag + "residual < 2^(-precision/2)", l.residual < tol, l.residual.str(6));
        for (std::size_t c = 0; c < l.basis.cols() && col < all.cols(); ++c, ++col)
          for (std::size_t r = 0; r < blk.dim(); ++r) all(r, col) = l.basis(r, c);
      }
      rep.add(tag + "basis union invertible", rank_numeric(all, tol) == blk.dim());
    }
  }
  return rep;
}

Report c7_leaf_operators() {
  Report rep;
  const PrecFloat tol = pow2(-40, kPrec);
  for (int n = 1; n <= 5; ++n) {
    EvalModule m = build_eval_module(n, points_for(n, 0));
    for (const auto& blk : deformed_isotypical_decomposition(m, KMatrix::nilpotent())) {
      const int k = blk.weight.k();
      const std::string tag = "n=" + std::to_string(n) + " " + blk.weight.str() + " ";
      for (const auto& l : eigenleaf_decomposition(blk, kPrec, kSeed)) {
        try {
          LeafOperator op = leaf_operator(l);
          bool u1 = true;
          for (std::size_t j = 0; j < op.exact[0].size(); ++j)
            u1 = u1 && op.exact[0][j] && *op.exact[0][j] == Rational(j == 1 ? 1 : 0);
          if (op.d == 0) u1 = op.exact[0][0] && is_zero(*op.exact[0][0]);
          rep.add(tag + "U_1 -> N exactly", u1);
          rep.add(tag + "U_i polynomial in N, residual < 2^-40", op.residual < tol, op.residual.str(6));
          if (n >= 2)
            rep.add(tag + "c_20 = k(n-k+1)", op.exact[1][0] && *op.exact[1][0] == Rational(k * (n - k + 1)));
        } catch (const std::exception& e) {
          rep.add(tag + "leaf operator", false, "0", e.what());
        }
      }
    }
  }
  return rep;
}

Report c8_elimination() {
  Report rep;
  const std::string dir = std::string(BETHE_SOURCE_DIR) + "/golden/elimination/";
  for (auto [k, d] : RunConfig{}.kd) {
    const std::string tag = "(k,d)=(" + std::to_string(k) + "," + std::to_string(d) + ") ";
    auto e = eliminate(k, d);
    rep.append(elimination_check(e), tag);
    rep.append(golden_compare(dir + golden_name(k, d), elimination_golden(k, d), false), tag);
    if (k == 0 && d == 1) {
      const FGRing& r = e.ring;
      rep.add(tag + "phi_1 = b, psi_3 = -b/3",
              e.phi[0] == r.b() && e.psi[0] == r.b().scaled(MultiPoly(r.nvars(), make_rational(-1, 3))));
    }
  }
  return rep;
}

Report c9_operator_O() {
  Report rep;
  for (auto [k, d] : RunConfig{}.kd) {
    const std::string tag = "(k,d)=(" + std::to_string(k) + "," + std::to_string(d) + ") ";
    auto op = universal_operator_O(eliminate(k, d));
    rep.append(operator_O_check(op), tag);
    rep.append(wronski_map_check(op, wronski_map(op)), tag);
  }
  return rep;
}

Report c10_characters() {
  Report rep;
  for (int n = 1; n <= 5; ++n)
    for (int k = 0; 2 * k <= n; ++k)
      rep.add(wlabel(n, k) + " brute = closed form to q^10",
              brute_isotypical_character(n, k, 10).agrees_with(isotypical_character_closed(n, k, 10), 10));
  for (int n = 1; n <= 8; ++n)
    for (int k = 0; 2 * k <= n; ++k) rep.append(character_O(k, n - 2 * k, 20).report, wlabel(n, k) + " ");
  return rep;
}

Report c11_dimension() {
  Report rep;
  for (int n = 1; n <= 6; ++n) rep.append(dimension_identity_check(n, kSeed, kPrec), "n=" + std::to_string(n) + " ");
  return rep;
}

Report c12_eta() {
  Report rep;
  for (int n = 1; n <= 4; ++n) {
    auto pts = points_for(n, 0);
    EvalModule m = build_eval_module(n, pts);
    for (const auto& blk : deformed_isotypical_decomposition(m, KMatrix::nilpotent())) {
      auto leaves = eigenleaf_decomposition(blk, kPrec, kSeed);
      for (std::size_t i = 0; i < leaves.size(); ++i)
        rep.append(eta_matches_leaf(leaves[i], pts, n + 2), "n=" + std::to_string(n) + " leaf " + std::to_string(i) + " ");
    }
  }
  return rep;
}

Report c13_regular() {
  Report rep;
  for (int n = 1; n <= 4; ++n) {
    EvalModule m = build_eval_module(n, points_for(n, 0));
    for (const auto& blk : deformed_isotypical_decomposition(m, KMatrix::nilpotent()))
      rep.append(block_algebra_check(m, blk, kSeed), "n=" + std::to_string(n) + " ");
  }
  return rep;
}

Report c14_irreps() {
  Report rep;
  for (int n = 1; n <= 8; ++n)
    for (const auto& w : weights_of(n))
      rep.add(w.str() + " minimal polynomial t^(n-2k+1)",
              irrep_bethe_image(w) == UniPoly<Rational>::monomial(Rational(1), static_cast<std::size_t>(w.d() + 1)));
  return rep;
}

Report c15_roundtrip() {
  RunConfig cfg;
  cfg.suites = {"spectral"};
  cfg.seed = kSeed;
  Report rep;
  for (const auto& in : run_suite(cfg).instances)
    if (in.name.rfind("roundtrip", 0) == 0) rep.append(in.report, in.name + " ");
  return rep;
}

Report c16_determinism() {
  RunConfig a;
  a.suites = {"all"};
  a.golden_dir = std::string(BETHE_SOURCE_DIR) + "/golden";
  a.jobs = 1;
  RunConfig b = a;
  b.jobs = std::max(2u, std::thread::hardware_concurrency());
  const std::string x = run_suite(a).dump();
  const std::string y = run_suite(a).dump();
  const std::string z = run_suite(b).dump();
  Report rep;
  rep.add("same seed, same bytes", x == y, "0", std::to_string(x.size()) + " bytes");
  rep.add("same bytes with " + std::to_string(b.jobs) + " workers", x == z);
  return rep;
}

struct Criterion {
  int id;
  const char* title;
  std::function<Report()> run;
  double limit_seconds;  // 0: no limit
};

}  // namespace

int main() {
  PrecisionScope scope(kPrec);
  const std::vector<Criterion> criteria{
      {1, "commutativity of B_2j, n <= 4, both K", c1_commutativity, 60},
      {2, "gl2-commutation of B0_2j", c2_gl2_commutation, 0},
      {3, "B_2j - B0_2j = e21 t^(j-1), weight-lowering", c3_nilp_formula, 0},
      {4, "U_1 = sum e21^(s) / 0, no double poles", c4_u1, 0},
      {5, "block dimensions, n <= 6", c5_blocks, 300},
      {6, "eigenleaf decomposition, n <= 5", c6_leaves, 0},
      {7, "leaf operator structure, n <= 5", c7_leaf_operators, 0},
      {8, "staged elimination and goldens", c8_elimination, 120},
      {9, "universal operator of O_lambda", c9_operator_O, 0},
      {10, "characters", c10_characters, 0},
      {11, "dimension identity, n <= 6", c11_dimension, 0},
      {12, "eta matching on every leaf, n <= 4", c12_eta, 0},
      {13, "regular representation on blocks, n <= 4", c13_regular, 0},
      {14, "minimal polynomial of e21 on irreps, n <= 8", c14_irreps, 0},
      {15, "leaf/polynomial-pair roundtrip, n <= 4", c15_roundtrip, 0},
      {16, "certificate determinism", c16_determinism, 0},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Report rep;
    try {
      rep = c.run();
    } catch (const std::exception& e) {
      rep.add("exception", false, "0", e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_seconds > 0)
      rep.add("runtime < " + std::to_string(static_cast<int>(c.limit_seconds)) + " s", secs < c.limit_seconds);
    std::size_t bad = 0;
    for (const auto& ch : rep.checks) bad += ch.pass ? 0 : 1;
    const bool ok = bad == 0 && !rep.checks.empty();
    failed += ok ? 0 : 1;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << std::setw(2) << c.id << ": " << c.title << " ["
              << rep.checks.size() << " checks, " << std::fixed << std::setprecision(2) << secs << " s]";
    if (!ok) {
      std::cout << " " << bad << " failed; first: ";
      for (const auto& ch : rep.checks)
        if (!ch.pass) {
          std::cout << ch.name << (ch.detail.empty() ? "" : " (" + ch.detail + ")");
          break;
        }
    }
    std::cout << std::endl;
  }
  std::cout << (failed == 0 ? "ALL CRITERIA PASS" : std::to_string(failed) + " criterion(s) FAIL") << std::endl;
  return failed == 0 ? 0 : 1;
}
