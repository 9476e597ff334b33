#include "bethe/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "bethe/correspondence.hpp"

namespace bethe {

namespace {

// Genericity failures (repeated Wronskian roots, no or several matching
// leaves) consume a retry; real-rootedness is a precondition of the numeric
// roundtrip and is met by rejection sampling.
constexpr int kRoundtripRetries = 20;
constexpr int kRealRootDraws = 10000;

const std::set<std::string> kSuites{"core", "spectral", "elimination", "correspondence"};

Json points_json(const std::vector<Rational>& pts) {
  Json a = Json::array();
  for (const auto& p : pts) a.push_back(to_string(p));
  return a;
}

Json element_json(const OElement& x, const FGRing& r) {
  Json a = Json::array();
  for (const auto& c : x.coeffs()) a.push_back(c.to_string(r.names));
  return a;
}

Json elements_json(const std::vector<OElement>& xs, const FGRing& r) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(element_json(x, r));
  return a;
}

std::string tol_str(const PrecFloat& x) { return x.str(6); }

using Task = std::function<Instance()>;

Instance make_instance(std::string suite, std::string name, Json params) {
  Instance in;
  in.suite = std::move(suite);
  in.name = std::move(name);
  in.params = std::move(params);
  return in;
}

// ---- core ----

}  // namespace

Report u1_check(const EvalModule& m) {
  Report rep;
  QMatrix sum(m.dim(), m.dim());
  for (int s = 0; s < m.n(); ++s) sum += m.local(Gen::e21, s);
  rep.add("U_1 = sum_s e21^(s) (K nilpotent)", universal_operator(m, KMatrix::nilpotent()).U[0] == sum);
  rep.add("U_1 = 0 (K zero)", universal_operator(m, KMatrix::zero()).U[0].is_zero_matrix());
  return rep;
}

namespace {

void core_tasks(const RunConfig& cfg, std::vector<Task>& out) {
  for (int n = 1; n <= cfg.n; ++n) {
    for (int set = 0; set < 3; ++set) {
      auto pts = seeded_points(n, derive_seed(cfg.seed, 1, n, 0, set));
      out.push_back([n, set, pts] {
        Instance in = make_instance("core", "n=" + std::to_string(n) + " set=" + std::to_string(set),
                                    Json{{"n", n}, {"points", points_json(pts)}});
        EvalModule m = build_eval_module(n, pts);
        in.report.append(commutativity_check(m, KMatrix::zero(), 2 * n), "K=zero: ");
        in.report.append(commutativity_check(m, KMatrix::nilpotent(), 2 * n), "K=nilpotent: ");
        in.report.append(nilp_formula_check(m, 2 * n));
        in.report.append(reconstruction_check(m, KMatrix::zero()), "K=zero: ");
        in.report.append(reconstruction_check(m, KMatrix::nilpotent()), "K=nilpotent: ");
        in.report.append(u1_check(m));
        return in;
      });
    }
  }
  out.push_back([] {
    Instance in = make_instance("core", "irrep images n<=8", Json{{"n", 8}});
    for (int m = 1; m <= 8; ++m)
      for (const auto& w : weights_of(m)) {
        UniPoly<Rational> p = irrep_bethe_image(w);
        in.report.add(w.str() + ": minimal polynomial of e21 is t^(d+1)",
                      p == UniPoly<Rational>::monomial(Rational(1), static_cast<std::size_t>(w.d() + 1)));
      }
    return in;
  });
}

// ---- spectral ----

}  // namespace

Report leaf_report(const EvalModule& m, unsigned precision, int tolerance, std::uint64_t seed) {
  Report rep;
  auto blocks = deformed_isotypical_decomposition(m, KMatrix::nilpotent());
  std::size_t total = 0;
  for (const auto& blk : blocks) total += blk.dim();
  rep.add("blocks fill 2^n", total == m.dim(), "0", std::to_string(total));
  PrecFloat leaf_tol = pow2(-static_cast<long>(precision / 2), precision);
  PrecFloat fit_tol = pow2(-tolerance, precision);
  for (const auto& blk : blocks) {
    const std::string tag = blk.weight.str() + ": ";
    const auto syt = syt_count(blk.weight).get_ui();
    const auto d1 = static_cast<std::size_t>(blk.weight.d() + 1);
    rep.add(tag + "block dimension (d+1) #SYT", blk.dim() == d1 * syt, "0", std::to_string(blk.dim()));
    auto leaves = eigenleaf_decomposition(blk, precision, seed);
    rep.add(tag + "leaf count #SYT", leaves.size() == syt, "0", std::to_string(leaves.size()));
    PrecisionScope scope(leaves.front().precision);
    FMatrix all(blk.dim(), leaves.size() * d1);
    PrecFloat worst(0);
    bool dims = true;
    std::size_t col = 0;
    for (const auto& l : leaves) {
      if (l.basis.cols() != d1) dims = false;
      worst = worst < l.residual ? l.residual : worst;
      for (std::size_t c = 0; c < l.basis.cols() && col < all.cols(); ++c, ++col)
        for (std::size_t r = 0; r < blk.dim(); ++r) all(r, col) = l.basis(r, c);
    }
    rep.add(tag + "leaf dimension d+1", dims);
    rep.add(tag + "leaf residual < 2^(-precision/2)", worst < leaf_tol, tol_str(worst));
    rep.add(tag + "leaf bases span the block", rank_numeric(all, leaf_tol) == blk.dim());

    PrecFloat fit(0);
    bool ops = true;
    std::string why;
    for (const auto& l : leaves) {
      try {
        LeafOperator op = leaf_operator(l);
        fit = fit < op.residual ? op.residual : fit;
      } catch (const std::exception& e) {
        ops = false;
        why = e.what();
      }
    }
    rep.add(tag + "U_1 -> N, c_20 = k(n-k+1), U_i polynomial in N", ops && fit < fit_tol, tol_str(fit), why);
    rep.append(block_algebra_check(m, blk, seed));
  }
  rep.append(singular_spectrum_match(m, precision, seed));
  return rep;
}

namespace {

std::string poly_str(const UniPoly<Rational>& p) {
  std::string s;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) s += (i ? " " : "") + to_string(p.coeffs()[i]);
  return "[" + s + "]";
}

void spectral_tasks(const RunConfig& cfg, std::vector<Task>& out) {
  for (int n = 1; n <= cfg.n; ++n) {
    auto pts = seeded_points(n, derive_seed(cfg.seed, 2, n, 0, 0));
    out.push_back([n, pts, cfg] {
      Instance in = make_instance("spectral", "leaves n=" + std::to_string(n), Json{{"n", n}, {"points", points_json(pts)}});
      in.report = leaf_report(build_eval_module(n, pts), cfg.precision, cfg.tolerance, cfg.seed);
      return in;
    });
  }
  for (int n = 1; n <= std::min(cfg.n, 4); ++n)
    for (int k = 0; 2 * k <= n; ++k)
      out.push_back([n, k, cfg] {
        Instance in = make_instance("spectral", "roundtrip n=" + std::to_string(n) + " k=" + std::to_string(k),
                                    Json{{"n", n}, {"k", k}, {"pairs", 10}, {"retries", kRoundtripRetries}, {"real_root_draws", kRealRootDraws}});
        for (int i = 0; i < 10; ++i) {
          Rng rng(derive_seed(cfg.seed, 3, n, k, i));
          const std::string tag = "pair " + std::to_string(i) + ": ";
          std::string last = "no attempt";
          bool done = false;
          int draws_total = 0;
          for (int attempt = 1; attempt <= kRoundtripRetries && !done; ++attempt) {
            UniPoly<Rational> F0, G0;
            int draws = 0;
            bool got = generic_pair(n, k, rng, kRealRootDraws, F0, G0, draws);
            draws_total += draws;
            if (!got) {
              last = "no real-rooted Wronskian in " + std::to_string(kRealRootDraws) + " draws";
              break;
            }
            const std::string what = "F0=" + poly_str(F0) + " G0=" + poly_str(G0);
            if (!is_squarefree(poly_wronskian(F0, G0))) {
              last = what + ": Wronskian not squarefree";
              continue;
            }
            try {
              RoundtripResult r = leaf_from_polynomials(F0, G0, cfg.precision, cfg.seed);
              if (r.matches != 1) {
                last = what + ": " + std::to_string(r.matches) + " matching leaves";
                continue;
              }
              in.report.add(tag + "unique matching leaf", true, tol_str(r.best_distance),
                            what + " attempt=" + std::to_string(attempt) + " draws=" + std::to_string(draws_total));
              done = true;
            } catch (const GenericityFailure& e) {
              last = what + ": " + e.what();
            }
          }
          if (!done) in.report.add(tag + "unique matching leaf", false, "0", last);
        }
        return in;
      });
}

// ---- elimination ----

void elimination_tasks(const RunConfig& cfg, std::vector<Task>& out) {
  for (auto [k, d] : cfg.kd) {
    out.push_back([k, d, cfg] {
      Instance in = make_instance("elimination", "k=" + std::to_string(k) + " d=" + std::to_string(d),
                                  Json{{"k", k}, {"d", d}});
      auto e = eliminate(k, d);
      in.report.append(elimination_check(e), "elimination: ");
      if (k == 0 && d == 1) {
        const FGRing& r = e.ring;
        in.report.add("phi_1 = b, psi_3 = -b/3",
                      e.phi[0] == r.b() && e.psi[0] == r.b().scaled(MultiPoly(r.nvars(), make_rational(-1, 3))));
      }
      auto op = universal_operator_O(e);
      in.report.append(operator_O_check(op), "operator: ");
      in.report.append(wronski_map_check(op, wronski_map(op)), "wronski: ");
      if (!cfg.golden_dir.empty())
        in.report.append(golden_compare(cfg.golden_dir + "/elimination/" + golden_name(k, d), elimination_golden(k, d),
                                        false),
                         "golden: ");
      return in;
    });
  }
  out.push_back([cfg] {
    Instance in = make_instance("elimination", "characters", Json{{"n_closed", 8}, {"n_brute", std::min(cfg.n, 5)}});
    for (int n = 1; n <= 8; ++n)
      for (int k = 0; 2 * k <= n; ++k)
        in.report.append(character_O(k, n - 2 * k, 20).report, "(" + std::to_string(n - k) + "," + std::to_string(k) + ") ");
    for (int n = 1; n <= std::min(cfg.n, 5); ++n)
      for (int k = 0; 2 * k <= n; ++k) {
        QSeries brute = brute_isotypical_character(n, k, 10);
        in.report.add("(" + std::to_string(n - k) + "," + std::to_string(k) + ") brute character = closed form to q^10",
                      brute.agrees_with(isotypical_character_closed(n, k, 10), 10));
      }
    return in;
  });
}

// ---- correspondence ----

void correspondence_tasks(const RunConfig& cfg, std::vector<Task>& out) {
  for (int n = 1; n <= std::min(cfg.n, 4); ++n) {
    auto pts = seeded_points(n, derive_seed(cfg.seed, 4, n, 0, 0));
    out.push_back([n, pts, cfg] {
      Instance in = make_instance("correspondence", "eta n=" + std::to_string(n),
                                  Json{{"n", n}, {"points", points_json(pts)}, {"J", n + 2}});
      EvalModule m = build_eval_module(n, pts);
      for (const auto& blk : deformed_isotypical_decomposition(m, KMatrix::nilpotent())) {
        auto leaves = eigenleaf_decomposition(blk, cfg.precision, cfg.seed);
        for (std::size_t i = 0; i < leaves.size(); ++i)
          in.report.append(eta_matches_leaf(leaves[i], pts, n + 2), "leaf " + std::to_string(i) + " ");
      }
      return in;
    });
  }
  for (int n = 1; n <= std::min(cfg.n, 6); ++n)
    out.push_back([n, cfg] {
      Instance in = make_instance("correspondence", "dimension n=" + std::to_string(n), Json{{"n", n}});
      in.report = dimension_identity_check(n, cfg.seed, cfg.precision);
      return in;
    });
  for (int n = 2; n <= std::min(cfg.n, 4); ++n) {
    auto pts = seeded_points(n, derive_seed(cfg.seed, 5, n, 0, 0));
    out.push_back([n, pts, cfg] {
      Instance in = make_instance("correspondence", "nu n=" + std::to_string(n), Json{{"n", n}, {"points", points_json(pts)}});
      EvalModule m = build_eval_module(n, pts);
      for (const auto& w : weights_of(n)) in.report.append(nu_consistency_check(m, w, cfg.precision, cfg.seed));
      return in;
    });
  }
}

}  // namespace

void RunConfig::validate() const {
  if (precision < 64) throw ConfigError("precision must be at least 64 bits");
  if (tolerance < 1 || static_cast<unsigned>(tolerance) > precision)
    throw ConfigError("tolerance exponent must lie in [1, precision]");
  if (n < 1 || n > 8) throw ConfigError("n must lie in [1, 8]");
  if (suites.empty()) throw ConfigError("no suite selected");
  for (const auto& s : suites)
    if (s != "all" && !kSuites.count(s)) throw ConfigError("unknown suite '" + s + "'");
  for (auto [k, d] : kd)
    if (k < 0 || d < 0 || 2 * k + d < 1) throw ConfigError("invalid (k, d) pair");
}

Json RunConfig::to_json() const {
  Json kdj = Json::array();
  for (auto [k, d] : kd) kdj.push_back(Json::array({k, d}));
  Json j{{"precision", precision}, {"tolerance", tolerance}, {"n", n},          {"kd", kdj},
         {"seed", std::to_string(seed)}, {"suite", suites}, {"timings", timings}};
  if (!golden_dir.empty()) j["golden"] = true;
  return j;
}

void RunConfig::merge_json(const Json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  try {
    for (const auto& [key, v] : j.items()) {
      if (key == "precision")
        precision = v.get<unsigned>();
      else if (key == "tolerance")
        tolerance = v.get<int>();
      else if (key == "n")
        n = v.get<int>();
      else if (key == "seed")
        seed = v.is_string() ? std::stoull(v.get<std::string>()) : v.get<std::uint64_t>();
      else if (key == "suite")
        suites = v.is_string() ? std::vector<std::string>{v.get<std::string>()} : v.get<std::vector<std::string>>();
      else if (key == "jobs")
        jobs = v.get<unsigned>();
      else if (key == "timings")
        timings = v.get<bool>();
      else if (key == "golden_dir")
        golden_dir = v.get<std::string>();
      else if (key == "kd") {
        kd.clear();
        for (const auto& p : v) kd.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
      } else
        throw ConfigError("unknown config key '" + key + "'");
    }
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
}

bool Certificate::ok() const {
  for (const auto& in : instances)
    if (!in.report.ok()) return false;
  return true;
}

Json to_json(const Report& r) {
  Json a = Json::array();
  for (const auto& c : r.checks) {
    Json x{{"name", c.name}, {"status", c.pass ? "pass" : "fail"}, {"residual", c.residual}};
    if (!c.detail.empty()) x["detail"] = c.detail;
    a.push_back(std::move(x));
  }
  return a;
}

Json Certificate::to_json() const {
  Json inst = Json::array();
  for (const auto& in : instances) {
    Json x{{"suite", in.suite},
           {"name", in.name},
           {"params", in.params},
           {"checks", bethe::to_json(in.report)},
           {"status", in.report.ok() ? "pass" : "fail"}};
    if (config.timings) x["runtime_s"] = in.seconds;
    inst.push_back(std::move(x));
  }
  return Json{{"tool", "bethe-gl2"},
              {"version", kToolVersion},
              {"config", config.to_json()},
              {"instances", inst},
              {"status", ok() ? "pass" : "fail"}};
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

std::string Certificate::dump() const { return canonical_dump(to_json()); }

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag, int n, int k, int i) {
  // splitmix64 over the packed tuple
  std::uint64_t x = seed ^ (tag << 56) ^ (static_cast<std::uint64_t>(n) << 40) ^ (static_cast<std::uint64_t>(k) << 24) ^
                    static_cast<std::uint64_t>(i);
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

bool generic_pair(int n, int k, Rng& rng, int max_draws, UniPoly<Rational>& F0, UniPoly<Rational>& G0, int& draws) {
  auto draw = [&](int deg) {
    std::vector<Rational> c;
    for (int i = 0; i < deg; ++i) c.emplace_back(rng.uniform(-5, 5));
    c.emplace_back(1);
    return UniPoly<Rational>(Rational(0), c);
  };
  for (draws = 1; draws <= max_draws; ++draws) {
    F0 = draw(k);
    G0 = draw(n - k + 1);
    UniPoly<Rational> w = poly_wronskian(F0, G0);
    if (w.degree() != n) continue;
    bool real = true;
    for (const auto& [f, mult] : squarefree_factorization(w)) real = real && count_real_roots(f) == f.degree();
    if (real) return true;
  }
  draws = max_draws;
  return false;
}

Certificate run_suite(const RunConfig& cfg) {
  cfg.validate();
  std::vector<Task> tasks;
  auto want = [&](const std::string& s) {
    return std::find(cfg.suites.begin(), cfg.suites.end(), s) != cfg.suites.end() ||
           std::find(cfg.suites.begin(), cfg.suites.end(), "all") != cfg.suites.end();
  };
  if (want("core")) core_tasks(cfg, tasks);
  if (want("spectral")) spectral_tasks(cfg, tasks);
  if (want("elimination")) elimination_tasks(cfg, tasks);
  if (want("correspondence")) correspondence_tasks(cfg, tasks);

  Certificate cert;
  cert.config = cfg;
  cert.instances.resize(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      PrecisionScope scope(cfg.precision);
      auto t0 = std::chrono::steady_clock::now();
      Instance in;
      try {
        in = tasks[i]();
      } catch (const std::exception& e) {
        in.name = "task " + std::to_string(i);
        in.report.add("exception", false, "0", e.what());
      }
      in.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      cert.instances[i] = std::move(in);
    }
  };
  unsigned jobs = cfg.jobs ? cfg.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(tasks.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return cert;
}

std::string golden_name(int k, int d) { return "k" + std::to_string(k) + "_d" + std::to_string(d) + ".json"; }

Json elimination_golden(int k, int d) {
  auto e = eliminate(k, d);
  const int n = 2 * k + d;
  auto op = universal_operator_O(e, n + 2);
  auto wm = wronski_map(op);
  const FGRing& r = e.ring;
  Json stages = Json::array();
  for (const auto& s : e.stages)
    stages.push_back(Json{{"i", s.i}, {"det", to_string(s.det)}, {"c_f", to_string(s.c_f)}, {"c_g", to_string(s.c_g)}});
  return Json{{"k", k},
              {"d", d},
              {"variables", r.names},
              {"phi", elements_json(e.phi, r)},
              {"psi", elements_json(e.psi, r)},
              {"stages", stages},
              {"F1", elements_json(op.F1, r)},
              {"F2", elements_json(op.F2, r)},
              {"W", elements_json(wm.W, r)},
              {"sigma", elements_json(wm.sigma, r)}};
}

Report golden_compare(const std::string& path, const Json& computed, bool bless) {
  Report rep;
  const std::string text = canonical_dump(computed);
  if (bless) {
    const auto parent = std::filesystem::path(path).parent_path();
    if (!parent.empty()) std::filesystem::create_directories(parent);
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << text;
    rep.add(path + " blessed", static_cast<bool>(f));
    return rep;
  }
  std::ifstream f(path);
  if (!f) {
    rep.add(path + " matches", false, "0", "missing golden file");
    return rep;
  }
  std::stringstream ss;
  ss << f.rdbuf();
  if (ss.str() == text) {
    rep.add(path + " matches", true);
    return rep;
  }
  std::string detail;
  try {
    Json old = Json::parse(ss.str());
    for (const auto& op : Json::diff(old, computed)) detail += (detail.empty() ? "" : ", ") + op.at("path").get<std::string>();
  } catch (const Json::exception&) {
    detail = "golden file is not valid JSON";
  }
  if (detail.empty()) detail = "formatting differs";
  rep.add(path + " matches", false, "0", detail);
  return rep;
}

}  // namespace bethe
