#include "bethe/api.hpp"

#include <sstream>

#include "bethe/betheop.hpp"
#include "bethe/correspondence.hpp"
#include "bethe/olambda.hpp"
#include "bethe/spectral.hpp"

namespace bethe {

namespace {

Json matrix_json(const QMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(to_string(m(i, j)));
    rows.push_back(std::move(r));
  }
  return rows;
}

Json series_json(const QSeries& q) {
  Json c = Json::array();
  for (const auto& x : q.coeffs()) c.push_back(to_string(x));
  return Json{{"lowest", q.lowest()}, {"order", q.order()}, {"coeffs", c}};
}

Json points_json(const std::vector<Rational>& pts) {
  Json a = Json::array();
  for (const auto& p : pts) a.push_back(to_string(p));
  return a;
}

void check_kd(int k, int d) {
  if (k < 0 || d < 0 || 2 * k + d < 1) throw ConfigError("need k >= 0, d >= 0, 2k+d >= 1");
}

}  // namespace

std::vector<Rational> parse_points(const std::string& s) {
  std::vector<Rational> pts;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      pts.push_back(parse_rational(tok));
    } catch (const std::exception&) {
      throw ConfigError("bad point '" + tok + "'");
    }
  }
  return pts;
}

std::vector<Rational> resolve_points(int n, const std::vector<Rational>& points, std::uint64_t seed) {
  if (n < 1 || n > 8) throw ConfigError("n must lie in [1, 8]");
  if (points.empty()) return seeded_points(n, seed);
  if (static_cast<int>(points.size()) != n) throw ConfigError("expected exactly n points");
  return points;
}

Json operator_json(int n, const std::vector<Rational>& points, const std::string& kname) {
  if (kname != "zero" && kname != "nilpotent") throw ConfigError("K must be zero or nilpotent");
  EvalModule m = build_eval_module(n, points);
  auto uo = universal_operator(m, kname == "zero" ? KMatrix::zero() : KMatrix::nilpotent());
  Json U = Json::array();
  for (const auto& u : uo.U) U.push_back(matrix_json(u));
  Json W = Json::array();
  for (const auto& c : uo.W.coeffs()) W.push_back(to_string(c));
  return Json{{"n", n}, {"points", points_json(points)}, {"K", kname}, {"W", W}, {"U", U}};
}

Json decompose_json(int n, const std::vector<Rational>& points) {
  EvalModule m = build_eval_module(n, points);
  Json blocks = Json::array();
  for (const auto& b : deformed_isotypical_decomposition(m, KMatrix::nilpotent()))
    blocks.push_back(Json{{"weight", b.weight.str()},
                          {"eigenvalue", to_string(b.eigenvalue)},
                          {"dim", b.dim()},
                          {"syt", syt_count(b.weight).get_str()}});
  return Json{{"n", n}, {"points", points_json(points)}, {"blocks", blocks}};
}

Json leaves_json(int n, const std::vector<Rational>& points, unsigned precision, std::uint64_t seed) {
  PrecisionScope scope(precision);
  EvalModule m = build_eval_module(n, points);
  Json out = Json::array();
  for (const auto& b : deformed_isotypical_decomposition(m, KMatrix::nilpotent())) {
    for (const auto& leaf : eigenleaf_decomposition(b, precision, seed)) {
      LeafOperator lo = leaf_operator(leaf);
      Json phi = Json::array();
      for (const auto& x : leaf.phi) phi.push_back(x.str(30));
      Json c = Json::array();
      for (std::size_t i = 0; i < lo.U.size(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < lo.U[i].coeffs().size(); ++j)
          row.push_back(lo.exact[i][j] ? to_string(*lo.exact[i][j]) : lo.U[i][j].str(30));
        c.push_back(std::move(row));
      }
      out.push_back(Json{{"weight", leaf.weight.str()}, {"phi", phi}, {"c", c}, {"residual", lo.residual.str(6)}});
    }
  }
  return Json{{"n", n}, {"points", points_json(points)}, {"precision", precision}, {"leaves", out}};
}

Json eliminate_json(int k, int d) {
  check_kd(k, d);
  return elimination_golden(k, d);
}

Json character_json(int k, int d, int order) {
  check_kd(k, d);
  if (order < 0 || order > 200) throw ConfigError("order must lie in [0, 200]");
  OCharacters c = character_O(k, d, order);
  return Json{{"k", k},
              {"d", d},
              {"ch_O", series_json(c.ch_O)},
              {"ch_O0", series_json(c.ch_O0)},
              {"isotypical_closed", series_json(isotypical_character_closed(2 * k + d, k, order))},
              {"checks", to_json(c.report)}};
}

}  // namespace bethe
