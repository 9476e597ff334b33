#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "bethe/api.hpp"

using namespace bethe;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kInternal = 3 };

void emit(const Json& j, const std::string& path) {
  if (path.empty()) {
    std::cout << canonical_dump(j);
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << canonical_dump(j);
}

struct ModuleArgs {
  int n = 2;
  std::string points;
  std::vector<Rational> resolve(std::uint64_t seed) const { return resolve_points(n, parse_points(points), seed); }
};

int run(int argc, char** argv) {
  CLI::App app{"Bethe algebra of the gl_2 Gaudin model: exact and high-precision checks"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string config_path;
  unsigned precision = 0;
  unsigned jobs = 0;
  std::string output;
  std::uint64_t seed = 1;
  auto* o_prec = app.add_option("--precision", precision, "working precision in bits (>= 64)");
  auto* o_jobs = app.add_option("--jobs", jobs, "worker threads (default: logical cores)");
  app.add_option("--config", config_path, "JSON config with the flag names as keys");
  app.add_option("--output,-o", output, "write JSON here instead of stdout");
  auto* o_seed = app.add_option("--seed", seed, "seed for points and random combinations");

  auto* op = app.add_subcommand("operator", "W(u) and the U_i of the universal operator on an evaluation module");
  ModuleArgs op_m;
  std::string kname = "nilpotent";
  op->add_option("--n", op_m.n, "number of points")->required();
  op->add_option("--points", op_m.points, "comma separated rationals (default: seeded)");
  op->add_option("--K", kname, "zero or nilpotent")->check(CLI::IsMember({"zero", "nilpotent"}));

  auto* dec = app.add_subcommand("decompose", "deformed isotypical blocks");
  ModuleArgs dec_m;
  dec->add_option("--n", dec_m.n, "number of points")->required();
  dec->add_option("--points", dec_m.points, "comma separated rationals (default: seeded)");

  auto* lv = app.add_subcommand("leaves", "Bethe eigenleaves and their operators U_i = sum c_ij N^j");
  ModuleArgs lv_m;
  lv->add_option("--n", lv_m.n, "number of points")->required();
  lv->add_option("--points", lv_m.points, "comma separated rationals (default: seeded)");

  auto* el = app.add_subcommand("eliminate", "staged elimination for O_lambda, compared with its golden file");
  int ek = 0, ed = 1;
  std::string golden_dir = "golden";
  el->add_option("--k", ek, "k")->required();
  el->add_option("--d", ed, "d")->required();
  el->add_option("--golden-dir", golden_dir, "directory holding elimination/ goldens");

  auto* ch = app.add_subcommand("character", "graded characters of O_lambda, O0_lambda and the isotypical component");
  int ck = 0, cd = 1, order = 10;
  ch->add_option("--k", ck, "k")->required();
  ch->add_option("--d", cd, "d")->required();
  ch->add_option("--order", order, "truncation order")->check(CLI::Range(0, 200));

  auto* vf = app.add_subcommand("verify", "run check suites and emit a certificate");
  std::vector<std::string> suites;
  int vn = 0;
  bool as_json = false, timings = false;
  std::string vgolden;
  auto* o_suite = vf->add_option("--suite", suites, "core, spectral, elimination, correspondence or all")->delimiter(',');
  auto* o_n = vf->add_option("--n", vn, "largest n");
  vf->add_flag("--json", as_json, "print the certificate as JSON");
  vf->add_flag("--timings", timings, "include per-instance runtimes");
  vf->add_option("--golden-dir", vgolden, "compare elimination goldens from this directory");

  auto* gd = app.add_subcommand("golden", "compare or rewrite golden/elimination files");
  bool bless = false;
  std::string gdir = "golden";
  gd->add_flag("--bless", bless, "rewrite the files");
  gd->add_option("--dir", gdir, "golden directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  if (!config_path.empty()) {
    std::ifstream f(config_path);
    if (!f) throw ConfigError("cannot read config " + config_path);
    Json j;
    try {
      j = Json::parse(f);
    } catch (const Json::exception& e) {
      throw ConfigError(std::string("config is not JSON: ") + e.what());
    }
    cfg.merge_json(j);
  }
  if (const char* env = std::getenv("BETHE_GL2_PRECISION")) {
    try {
      cfg.precision = static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      throw ConfigError("BETHE_GL2_PRECISION is not a number");
    }
  }
  if (o_prec->count()) cfg.precision = precision;
  if (o_jobs->count()) cfg.jobs = jobs;
  if (o_seed->count()) cfg.seed = seed;
  if (cfg.precision < 64) throw ConfigError("precision must be at least 64 bits");
  PrecisionScope scope(cfg.precision);

  if (op->parsed()) {
    emit(operator_json(op_m.n, op_m.resolve(cfg.seed), kname), output);
    return kPass;
  }
  if (dec->parsed()) {
    emit(decompose_json(dec_m.n, dec_m.resolve(cfg.seed)), output);
    return kPass;
  }
  if (lv->parsed()) {
    emit(leaves_json(lv_m.n, lv_m.resolve(cfg.seed), cfg.precision, cfg.seed), output);
    return kPass;
  }
  if (el->parsed()) {
    Json g = eliminate_json(ek, ed);
    emit(g, output);
    const std::string path = golden_dir + "/elimination/" + golden_name(ek, ed);
    if (std::ifstream(path)) {
      Report r = golden_compare(path, g, false);
      std::cerr << (r.ok() ? "golden match: " : "golden MISMATCH: ") << path
                << (r.ok() ? "" : " (" + r.checks[0].detail + ")") << "\n";
      return r.ok() ? kPass : kFail;
    }
    return kPass;
  }
  if (ch->parsed()) {
    Json c = character_json(ck, cd, order);
    emit(c, output);
    for (const auto& x : c["checks"])
      if (x["status"] != "pass") return kFail;
    return kPass;
  }
  if (vf->parsed()) {
    if (o_suite->count()) cfg.suites = suites;
    if (o_n->count()) cfg.n = vn;
    if (timings) cfg.timings = true;
    if (!vgolden.empty()) cfg.golden_dir = vgolden;
    cfg.validate();
    Certificate cert = run_suite(cfg);
    if (as_json || !output.empty()) {
      emit(cert.to_json(), output);
    }
    if (!as_json) {
      for (const auto& in : cert.instances) {
        std::cout << (in.report.ok() ? "PASS " : "FAIL ") << in.suite << " " << in.name;
        if (!in.report.ok()) std::cout << ": " << in.report.first_failure();
        std::cout << "\n";
      }
    }
    return cert.ok() ? kPass : kFail;
  }
  if (gd->parsed()) {
    Report all;
    for (auto [k, d] : cfg.kd)
      all.append(golden_compare(gdir + "/elimination/" + golden_name(k, d), elimination_golden(k, d), bless));
    for (const auto& c : all.checks)
      std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    return all.ok() ? kPass : kFail;
  }
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ConfigError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidWeightError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}
