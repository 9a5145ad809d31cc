// Batch verification front end: parses group/automorphism/distribution
// specs, runs symmetry checks, decompositions, exhaustive and fuzz suites,
// the difference-reduction transcript and the order-2 counterexample family,
// and emits machine-readable JSON (plus optional CSV detail).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "heyde/io.hpp"
#include "heyde/rg.hpp"
#include "heyde/symmetry.hpp"

using nlohmann::json;

namespace {

struct Options {
  std::string mode;
  std::string group_spec;
  std::string alpha_spec;
  std::string mu1_path;
  std::string mu2_path;
  int grid_denominator = 6;
  double tol = heyde::kDefaultTol;
  unsigned long long seed = 0;
  long long count = 100;
  std::string out_path;
  std::string csv_path;
  bool allow_even = false;
  // counterexample family parameters
  std::string sigma1 = "2";
  std::string sigma1p = "1";
  std::string kappa1 = "12/17";
  std::string a_spec = "-2";
  bool kappa_boundary = false;
};

long long max_group_order() {
  if (const char* env = std::getenv("HEYDE_MAX_GROUP_ORDER")) {
    try {
      return std::stoll(env);
    } catch (const std::logic_error&) {
      throw std::invalid_argument("HEYDE_MAX_GROUP_ORDER is not an integer");
    }
  }
  return 100;
}

heyde::Dist load_dist(const heyde::FinGroup& g, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open distribution file '" + path + "'");
  json j = json::parse(in);
  return heyde::dist_from_json(g, j);
}

void emit(const Options& opt, const json& report) {
  const std::string text = report.dump(2) + "\n";
  if (opt.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(opt.out_path);
    if (!out) throw std::runtime_error("cannot open output file '" + opt.out_path + "'");
    out << text;
  }
}

json subgroup_to_json(const heyde::Subgroup& s) {
  json arr = json::array();
  for (long long i : s.members) arr.push_back(heyde::format_elem(s.group.element(i)));
  return arr;
}

json decomposition_to_json(const heyde::Decomposition& d) {
  json j;
  j["omega"] = heyde::dist_to_json(d.omega);
  j["x1"] = heyde::format_elem(d.x1);
  j["x2"] = heyde::format_elem(d.x2);
  j["kernel"] = subgroup_to_json(d.kernel);
  j["shifts_balanced"] = d.shifts_balanced;
  return j;
}

json hypothesis_flags(const heyde::SymmetryInstance& inst, double tol, bool* all_hold) {
  const bool odd = !heyde::has_order_two(inst.group);
  const bool nonvan =
      heyde::is_nonvanishing(inst.mu1, tol) && heyde::is_nonvanishing(inst.mu2, tol);
  if (all_hold) *all_hold = odd && nonvan;
  json j;
  j["odd_order"] = odd;
  j["nonvanishing"] = nonvan;
  return j;
}

// Shared by check and decompose.
int run_check(const Options& opt, bool decompose_required) {
  const heyde::FinGroup g = heyde::parse_group_spec(opt.group_spec);
  const heyde::GroupMap alpha = heyde::parse_map_spec(g, opt.alpha_spec);
  heyde::SymmetryInstance inst{g, alpha, load_dist(g, opt.mu1_path), load_dist(g, opt.mu2_path)};
  inst.validate();

  const bool direct = heyde::symmetry_direct(inst);
  const bool fourier = heyde::symmetry_fourier(inst, opt.tol);
  bool hypotheses = false;
  json flags = hypothesis_flags(inst, opt.tol, &hypotheses);

  json report;
  report["mode"] = decompose_required ? "decompose" : "check";
  report["group"] = heyde::format_group_spec(g);
  report["alpha"] = heyde::map_to_json(alpha);
  report["symmetric"] = direct;
  report["symmetric_direct"] = direct;
  report["symmetric_fourier"] = fourier;
  report["nonvanishing"] = flags["nonvanishing"];
  report["hypothesis_flags"] = flags;

  bool breach = direct != fourier;
  report["checker_mismatch"] = direct != fourier;

  std::optional<heyde::Decomposition> dec;
  if (direct) dec = heyde::decompose(inst);
  report["decomposition"] = dec ? decomposition_to_json(*dec) : json(nullptr);
  if (direct && !dec) {
    if (hypotheses) {
      breach = true;  // theorem guarantees a decomposition here
      report["theorem_breach"] = true;
    } else {
      report["outside_hypotheses"] = true;
    }
  }
  if (decompose_required && direct && hypotheses)
    report["reconstruction_ok"] =
        dec && heyde::shift(dec->omega, dec->x1) == inst.mu1 &&
        heyde::shift(dec->omega, dec->x2) == inst.mu2;

  emit(opt, report);
  return breach ? 1 : 0;
}

int run_exhaustive(const Options& opt) {
  const heyde::FinGroup g = heyde::parse_group_spec(opt.group_spec);
  const bool even = heyde::has_order_two(g);
  if (even && !opt.allow_even)
    throw std::invalid_argument("group has elements of order 2; pass --allow-even to scan it");

  std::vector<heyde::GroupMap> alphas;
  if (!opt.alpha_spec.empty()) {
    alphas.push_back(heyde::parse_map_spec(g, opt.alpha_spec));
    if (!heyde::is_automorphism(alphas.back()))
      throw std::invalid_argument("--alpha is not an automorphism");
  } else {
    alphas = heyde::enumerate_automorphisms(g, max_group_order());
  }

  const std::vector<heyde::Dist> grid = heyde::enumerate_grid_dists(g, opt.grid_denominator);
  std::vector<heyde::CharFn> transforms;
  std::vector<bool> nonvan;
  transforms.reserve(grid.size());
  for (const auto& mu : grid) {
    transforms.push_back(heyde::fourier(mu));
    bool nv = true;
    for (const auto& v : transforms.back().values)
      if (std::abs(v) <= opt.tol) nv = false;
    nonvan.push_back(nv);
  }

  std::ofstream csv;
  if (!opt.csv_path.empty()) {
    csv.open(opt.csv_path);
    if (!csv) throw std::runtime_error("cannot open CSV file '" + opt.csv_path + "'");
    csv << "alpha_index,mu1_index,mu2_index,symmetric,nonvanishing,decomposed\n";
  }

  long long instances = 0, symmetric = 0, sym_nonvan = 0, decompositions = 0;
  long long mismatches = 0, decomposition_failures = 0, unimodular_failures = 0;
  for (size_t ai = 0; ai < alphas.size(); ++ai) {
    const auto& alpha = alphas[ai];
    for (size_t i = 0; i < grid.size(); ++i) {
      for (size_t j = 0; j < grid.size(); ++j) {
        ++instances;
        heyde::SymmetryInstance inst{g, alpha, grid[i], grid[j]};
        const bool direct = heyde::symmetry_direct(inst);
        const bool fourier =
            heyde::charfn_equation_holds(alpha, transforms[i], transforms[j], opt.tol);
        if (direct != fourier) ++mismatches;
        bool decomposed = false;
        if (direct) {
          ++symmetric;
          if (nonvan[i] && nonvan[j]) {
            ++sym_nonvan;
            if (!even) {
              auto dec = heyde::decompose(inst);
              decomposed = dec.has_value();
              if (decomposed)
                ++decompositions;
              else
                ++decomposition_failures;
              if (!heyde::unimodular_on_forced_subgroup(inst, opt.tol)) ++unimodular_failures;
            }
          }
        }
        if (csv.is_open())
          csv << ai << ',' << i << ',' << j << ',' << (direct ? 1 : 0) << ','
              << (nonvan[i] && nonvan[j] ? 1 : 0) << ',' << (decomposed ? 1 : 0) << '\n';
      }
    }
  }

  json report;
  report["mode"] = "exhaustive";
  report["group"] = heyde::format_group_spec(g);
  report["grid_denominator"] = opt.grid_denominator;
  report["automorphisms"] = alphas.size();
  report["grid_distributions"] = grid.size();
  report["instances"] = instances;
  report["symmetric"] = symmetric;
  report["symmetric_nonvanishing"] = sym_nonvan;
  report["decompositions"] = decompositions;
  report["mismatches"] = mismatches;
  if (even) {
    report["outside_hypotheses"] = true;
    report["note"] = "order-2 elements present; theorem checks skipped";
  } else {
    report["decomposition_failures"] = decomposition_failures;
    report["unimodular_failures"] = unimodular_failures;
  }
  emit(opt, report);

  const bool breach =
      mismatches > 0 || (!even && (decomposition_failures > 0 || unimodular_failures > 0));
  return breach ? 1 : 0;
}

int run_fuzz(const Options& opt) {
  const heyde::FinGroup g = heyde::parse_group_spec(opt.group_spec);
  const bool even = heyde::has_order_two(g);
  std::vector<heyde::GroupMap> alphas;
  if (!opt.alpha_spec.empty())
    alphas.push_back(heyde::parse_map_spec(g, opt.alpha_spec));
  else
    alphas = heyde::enumerate_automorphisms(g, max_group_order());

  std::mt19937_64 rng(opt.seed);
  long long symmetric = 0, mismatches = 0, decomposition_failures = 0;
  for (long long it = 0; it < opt.count; ++it) {
    const auto& alpha = alphas[rng() % alphas.size()];
    heyde::SymmetryInstance inst{g, alpha,
                                 heyde::random_grid_dist(g, opt.grid_denominator, rng),
                                 heyde::random_grid_dist(g, opt.grid_denominator, rng)};
    const bool direct = heyde::symmetry_direct(inst);
    if (direct != heyde::symmetry_fourier(inst, opt.tol)) ++mismatches;
    if (direct) {
      ++symmetric;
      if (!even && heyde::is_nonvanishing(inst.mu1, opt.tol) &&
          heyde::is_nonvanishing(inst.mu2, opt.tol) && !heyde::decompose(inst))
        ++decomposition_failures;
    }
  }
  json report;
  report["mode"] = "fuzz";
  report["group"] = heyde::format_group_spec(g);
  report["grid_denominator"] = opt.grid_denominator;
  report["seed"] = opt.seed;
  report["count"] = opt.count;
  report["symmetric"] = symmetric;
  report["mismatches"] = mismatches;
  report["decomposition_failures"] = decomposition_failures;
  emit(opt, report);
  return (mismatches > 0 || decomposition_failures > 0) ? 1 : 0;
}

int run_counterexample(const Options& opt) {
  const heyde::Rat sigma1 = heyde::parse_rational(opt.sigma1);
  const heyde::Rat sigma1p = heyde::parse_rational(opt.sigma1p);
  const heyde::Rat a = heyde::parse_rational(opt.a_spec);
  heyde::RatComplex kappa1(heyde::parse_rational(opt.kappa1));
  if (opt.kappa_boundary) {
    // kappa1^2 == sigma1p/sigma1 exactly; only possible when the ratio is a
    // rational square.
    const heyde::Rat ratio = sigma1p / sigma1;
    const auto isqrt = [](long long v) {
      long long r = static_cast<long long>(std::sqrt(static_cast<double>(v)));
      while (r * r > v) --r;
      while ((r + 1) * (r + 1) <= v) ++r;
      return r;
    };
    const long long pn = isqrt(ratio.numerator()), pd = isqrt(ratio.denominator());
    if (pn * pn != ratio.numerator() || pd * pd != ratio.denominator())
      throw std::invalid_argument("sigma1'/sigma1 = " + heyde::format_rational(ratio) +
                                  " is not a rational square; no exact boundary kappa");
    kappa1 = heyde::RatComplex(heyde::Rat(pn, pd));
  }

  const heyde::RGInstance inst = heyde::make_remark_family(sigma1, sigma1p, kappa1, a);
  const bool symmetric = heyde::rg_symmetry(inst);
  bool irreducible = false;
  try {
    irreducible = !heyde::rg_decompose(inst).has_value();
  } catch (const std::invalid_argument&) {
    irreducible = false;  // precondition rejected; counts as a failure below
  }
  double min1 = 0, min2 = 0;
  const bool pd1 = heyde::rg_positive_definite_check(inst.f1, {}, opt.tol, &min1);
  const bool pd2 = heyde::rg_positive_definite_check(inst.f2, {}, opt.tol, &min2);

  // Certificate: the matched coefficient tuples per character pair.
  const heyde::FinGroup& g = inst.f1.group();
  json cert = json::array();
  for (long long h1 = 0; h1 < g.order(); ++h1)
    for (long long h2 = 0; h2 < g.order(); ++h2) {
      const heyde::Elem e1 = g.element(h1), e2 = g.element(h2);
      const heyde::Elem te2 = adjoint(inst.alphaG).apply(e2);
      const long long ia = g.index_of(g.add(e1, e2));
      const long long ib = g.index_of(g.add(e1, te2));
      const long long ic = g.index_of(g.sub(e1, e2));
      const long long id = g.index_of(g.sub(e1, te2));
      json row;
      row["h1"] = heyde::format_elem(e1);
      row["h2"] = heyde::format_elem(e2);
      row["s1s2_lhs"] = heyde::format_rational(inst.f1.quad()[ia] + inst.a * inst.f2.quad()[ib]);
      row["s1s2_rhs"] =
          heyde::format_rational(-(inst.f1.quad()[ic] + inst.a * inst.f2.quad()[id]));
      row["s1sq_lhs"] = heyde::format_rational(inst.f1.quad()[ia] + inst.f2.quad()[ib]);
      row["s1sq_rhs"] = heyde::format_rational(inst.f1.quad()[ic] + inst.f2.quad()[id]);
      cert.push_back(std::move(row));
    }

  json report;
  report["mode"] = "counterexample";
  report["family"] = {{"sigma1", heyde::format_rational(sigma1)},
                      {"sigma1p", heyde::format_rational(sigma1p)},
                      {"sigma2", heyde::format_rational(-sigma1 / a)},
                      {"sigma2p", heyde::format_rational(-sigma1p / a)},
                      {"kappa1", heyde::format_rational(kappa1.re)},
                      {"a", heyde::format_rational(a)}};
  report["f1"] = heyde::rg_charfn_to_json(inst.f1);
  report["f2"] = heyde::rg_charfn_to_json(inst.f2);
  report["symmetric"] = symmetric;
  report["irreducible"] = irreducible;
  report["positive_definite"] = pd1 && pd2;
  report["min_density"] = std::min(min1, min2);
  report["certificate"] = cert;
  emit(opt, report);
  return (symmetric && irreducible && pd1 && pd2) ? 0 : 1;
}

int run_transcript(const Options& opt) {
  const heyde::FinGroup g = heyde::parse_group_spec(opt.group_spec);
  const heyde::GroupMap alpha = heyde::parse_map_spec(g, opt.alpha_spec);
  heyde::SymmetryInstance inst{g, alpha, load_dist(g, opt.mu1_path), load_dist(g, opt.mu2_path)};
  const auto rep = heyde::difference_reduction(inst, opt.tol);

  json report;
  report["mode"] = "transcript";
  report["group"] = heyde::format_group_spec(g);
  report["alpha"] = heyde::map_to_json(alpha);
  report["applicable"] = rep.applicable;
  if (!rep.applicable) {
    report["reject_reason"] = rep.reject_reason;
  } else {
    report["residual_base"] = rep.residual_base;
    report["residual_step1"] = rep.residual_step1;
    report["residual_step2"] = rep.residual_step2;
    report["residual_step3"] = rep.residual_step3;
    report["residual_cube_p"] = rep.residual_cube_p;
    report["residual_cube_q"] = rep.residual_cube_q;
    report["max_p_on_subgroup"] = rep.max_p_on_subgroup;
    report["max_q_on_subgroup"] = rep.max_q_on_subgroup;
    report["failing_step"] = rep.failing_step(opt.tol);
    report["concluded"] = rep.concluded(opt.tol);
  }
  emit(opt, report);
  return rep.applicable && !rep.ok(opt.tol) ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Exact verification of conditional-symmetry characterizations on finite Abelian "
               "groups and R x G"};
  app.add_option("--mode", opt.mode, "check|decompose|fuzz|exhaustive|counterexample|transcript")
      ->required()
      ->check(CLI::IsMember(
          {"check", "decompose", "fuzz", "exhaustive", "counterexample", "transcript"}));
  app.add_option("--group", opt.group_spec, "group spec, e.g. Z3 or Z3xZ9");
  app.add_option("--alpha", opt.alpha_spec, "scalar c or JSON matrix [[..],[..]]");
  app.add_option("--mu1", opt.mu1_path, "JSON file: element -> mass p/q");
  app.add_option("--mu2", opt.mu2_path, "JSON file: element -> mass p/q");
  app.add_option("--grid-denominator", opt.grid_denominator, "simplex grid denominator")
      ->check(CLI::PositiveNumber);
  app.add_option("--tol", opt.tol, "float tolerance")->check(CLI::PositiveNumber);
  app.add_option("--seed", opt.seed, "RNG seed (fuzz)");
  app.add_option("--count", opt.count, "number of fuzz draws")->check(CLI::PositiveNumber);
  app.add_option("--out", opt.out_path, "write the JSON report here (default stdout)");
  app.add_option("--csv", opt.csv_path, "write per-instance CSV rows here (exhaustive)");
  app.add_flag("--allow-even", opt.allow_even, "permit groups with order-2 elements");
  app.add_option("--sigma1", opt.sigma1, "counterexample: sigma_1");
  app.add_option("--sigma1p", opt.sigma1p, "counterexample: sigma_1'");
  app.add_option("--kappa1", opt.kappa1, "counterexample: kappa_1 (rational)");
  app.add_option("--a", opt.a_spec, "counterexample: real automorphism coefficient");
  app.add_flag("--kappa1-boundary", opt.kappa_boundary,
               "use the exact boundary kappa_1 = sqrt(sigma1'/sigma1) when rational");
  CLI11_PARSE(app, argc, argv);

  try {
    const auto require = [&](const std::string& value, const char* flag) {
      if (value.empty())
        throw std::invalid_argument(std::string("mode '") + opt.mode + "' requires " + flag);
    };
    if (opt.mode == "check" || opt.mode == "decompose" || opt.mode == "transcript") {
      require(opt.group_spec, "--group");
      require(opt.alpha_spec, "--alpha");
      require(opt.mu1_path, "--mu1");
      require(opt.mu2_path, "--mu2");
    }
    if (opt.mode == "exhaustive" || opt.mode == "fuzz") require(opt.group_spec, "--group");

    if (opt.mode == "check") return run_check(opt, false);
    if (opt.mode == "decompose") return run_check(opt, true);
    if (opt.mode == "exhaustive") return run_exhaustive(opt);
    if (opt.mode == "fuzz") return run_fuzz(opt);
    if (opt.mode == "counterexample") return run_counterexample(opt);
    return run_transcript(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
