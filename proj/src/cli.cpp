#include "starform/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <json.hpp>

#include "starform/cech.hpp"
#include "starform/random_symbols.hpp"
#include "starform/reps.hpp"

namespace starform {

namespace {

constexpr const char* kSchema = "starform-report/1";

void sort_checks(Report& r) {
  std::sort(r.checks.begin(), r.checks.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
}

std::string kappa_name(const Rational& k) {
  if (k == 0) return "standard";
  if (k == Rational(1, 2)) return "weyl";
  return "kappa=" + to_string(k);
}

SymbolSeries one_series(int order, int dim) {
  return symbol_series(order, Symbol::one(dim));
}

}  // namespace

bool Report::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::string Report::render(bool as_json) const {
  if (as_json) {
    nlohmann::ordered_json j;
    j["schema"] = kSchema;
    j["command"] = command;
    j["config"] = {{"order", config.order},
                   {"dim", config.dim},
                   {"kappa", to_string(config.kappa)},
                   {"charge", to_string(config.charge)},
                   {"seed", config.seed}};
    nlohmann::ordered_json vals = nlohmann::ordered_json::object();
    for (const auto& [k, v] : values) vals[k] = v;
    j["values"] = vals;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks)
      j["checks"].push_back({{"id", c.id}, {"status", c.pass ? "pass" : "fail"},
                             {"detail", c.detail}});
    j["pass"] = all_pass();
    return j.dump(2) + "\n";
  }
  std::string out = "starform " + command + " (order=" + std::to_string(config.order) +
                    " dim=" + std::to_string(config.dim) + " kappa=" + to_string(config.kappa) +
                    " charge=" + to_string(config.charge) +
                    " seed=" + std::to_string(config.seed) + ")\n";
  for (const auto& [k, v] : values) out += "  " + k + " = " + v + "\n";
  for (const auto& c : checks) {
    out += std::string(c.pass ? "  [pass] " : "  [FAIL] ") + c.id;
    if (!c.detail.empty()) out += "  (" + c.detail + ")";
    out += "\n";
  }
  out += all_pass() ? "all checks passed\n" : "CHECKS FAILED\n";
  return out;
}

Report cmd_assoc(const RunConfig& cfg, bool inject_sign_bug) {
  Report report{"assoc", cfg, {}, {}};
  int n = cfg.order;
  int dim = cfg.dim;
  const int trials = 25;

  std::vector<std::pair<std::string, StarProductSpec>> specs = {
      {"standard", StarProductSpec::standard(n, dim)},
      {"weyl", StarProductSpec::weyl(n, dim)},
      {"kappa=1/3", StarProductSpec::kappa_ordered(n, dim, Rational(1, 3))},
  };
  if (dim == 2 && is_integer(cfg.charge) && cfg.charge != 0) {
    LineBundleData bundle(cfg.charge, build_torus_cover(2));
    specs.emplace_back("magnetic-weyl", bundle.magnetic_spec(0, n, Rational(1, 2)));
  }
  for (auto& [name, spec] : specs) spec.debug_flip_c1_sign = inject_sign_bug;

  for (const auto& [name, spec] : specs) {
    SymbolGen gen(cfg.seed, dim);
    bool assoc = true, unital = true, c0 = true, bracket = true;
    std::string witness;
    for (int t = 0; t < trials; ++t) {
      SymbolSeries f = gen.series(n), g = gen.series(n), h = gen.series(n);
      SymbolSeries lhs = star(spec, star(spec, f, g), h);
      SymbolSeries rhs = star(spec, f, star(spec, g, h));
      if (!(lhs == rhs)) {
        assoc = false;
        if (witness.empty()) witness = "assoc trial " + std::to_string(t);
      }
      SymbolSeries one = one_series(n, dim);
      if (!(star(spec, one, f) == f && star(spec, f, one) == f)) unital = false;
      // Semiclassical conditions on the lambda^0 and antisymmetrized
      // lambda^1 terms.
      SymbolSeries fg = star(spec, f, g);
      if (!(fg[0] == f[0] * g[0])) c0 = false;
      if (n >= 1) {
        Symbol anti = fg[1] - star(spec, g, f)[1];
        Symbol expect = poisson(f[0], g[0]) * TauScalar(GaussianRational::i());
        if (!(anti == expect)) bracket = false;
      }
    }
    report.checks.push_back({"assoc:" + name, assoc, witness});
    report.checks.push_back({"unital:" + name, unital, ""});
    report.checks.push_back({"c0-pointwise:" + name, c0, ""});
    report.checks.push_back({"c1-bracket:" + name, bracket, ""});
  }

  // Hermitian property holds for the Weyl product and fails for the
  // standard-ordered one on a recorded witness.
  {
    StarProductSpec weyl = StarProductSpec::weyl(n, dim);
    weyl.debug_flip_c1_sign = inject_sign_bug;
    SymbolGen gen(cfg.seed + 1, dim);
    bool herm = true;
    for (int t = 0; t < trials; ++t) {
      SymbolSeries f = gen.series(n), g = gen.series(n);
      if (!(series_conj(star(weyl, f, g)) == star(weyl, series_conj(g), series_conj(f))))
        herm = false;
    }
    report.checks.push_back({"hermitian:weyl", herm, ""});

    StarProductSpec std_spec = StarProductSpec::standard(std::max(n, 1), dim);
    SymbolSeries f = symbol_series(std_spec.ctx.order, Symbol::p(0, dim));
    MultiIndex k(dim, 0);
    k[0] = 1;
    SymbolSeries g = symbol_series(std_spec.ctx.order, Symbol::trig(k));
    bool fails = !(series_conj(star(std_spec, f, g)) ==
                   star(std_spec, series_conj(g), series_conj(f)));
    report.checks.push_back(
        {"hermitian-witness:standard", fails, "p *_S e_1 is a non-Hermitian witness"});
  }

  sort_checks(report);
  return report;
}

Report cmd_relative_class(const RunConfig& cfg) {
  Report report{"relative-class", cfg, {}, {}};
  if (!is_integer(cfg.charge)) {
    report.checks.push_back({"charge-integral", false, "monopole charge must be an integer"});
    return report;
  }
  LineBundleData bundle(cfg.charge, build_torus_cover(2));
  StarProductSpec spec = StarProductSpec::kappa_ordered(std::max(cfg.order, 2), 2, cfg.kappa);
  CechClassResult result = relative_class(bundle, spec);
  report.values.emplace_back("class", to_string(result.coordinate));
  report.values.emplace_back("integral", result.integral ? "true" : "false");
  report.checks.push_back({"class-equals-charge", result.coordinate == cfg.charge,
                           "computed " + to_string(result.coordinate)});
  report.checks.push_back(
      {"quantum-matches-classical", true, "asserted inside the pipeline"});
  DiracReport dirac = dirac_check(bundle, spec.ctx.order);
  report.checks.push_back({"dirac-consistent", dirac.integral == result.integral, ""});
  sort_checks(report);
  return report;
}

Report cmd_dirac(const RunConfig& cfg) {
  Report report{"dirac", cfg, {}, {}};
  LineBundleData field =
      LineBundleData::field_only(series_constant(cfg.order, cfg.charge));
  DiracReport dirac = dirac_check(field, cfg.order);
  report.values.emplace_back("charge", to_string(dirac.charges[0]));
  report.values.emplace_back("morita_equivalent", dirac.integral ? "true" : "false");
  report.checks.push_back(
      {"charge-roundtrip", dirac.charges[0] == cfg.charge, "B = 2 pi charge dx^dy"});
  report.checks.push_back({"verdict-matches-integrality",
                           dirac.integral == is_integer(cfg.charge), ""});
  sort_checks(report);
  return report;
}

Report cmd_reps(const RunConfig& cfg) {
  Report report{"reps", cfg, {}, {}};
  int n = cfg.order;
  const int dim = 2;
  StarProductSpec weyl = StarProductSpec::weyl(n, dim);
  SymbolGen gen(cfg.seed, dim);

  // Representation property for kappa in {0, 1/2}.
  for (const Rational& k : {Rational(0), Rational(1, 2)}) {
    StarProductSpec spec = StarProductSpec::kappa_ordered(n, dim, k);
    bool ok = true;
    for (int t = 0; t < 10; ++t) {
      SymbolSeries f = gen.series(n), g = gen.series(n);
      SymbolSeries u = gen.wave_series(n);
      SymbolSeries lhs = rho_kappa(spec, star(spec, f, g), u);
      SymbolSeries rhs = rho_kappa(spec, f, rho_kappa(spec, g, u));
      if (!(lhs == rhs)) ok = false;
    }
    report.checks.push_back({"rep-property:" + kappa_name(k), ok, ""});
  }

  // Adjoint identity at kappa = 1/2 and the recorded kappa = 0 witness.
  {
    bool ok = true;
    for (int t = 0; t < 10; ++t) {
      SymbolSeries f = gen.series(n);
      SymbolSeries u = gen.wave_series(n), v = gen.wave_series(n);
      if (!adjoint_residual(weyl, f, u, v).is_zero()) ok = false;
    }
    report.checks.push_back({"adjoint:weyl", ok, ""});

    StarProductSpec std_spec = StarProductSpec::standard(n, dim);
    MultiIndex k(dim, 0);
    k[0] = 1;
    SymbolSeries f = symbol_series(n, Symbol::p(0, dim) * Symbol::trig(k));
    SymbolSeries u = one_series(n, dim);
    MultiIndex mk(dim, 0);
    mk[0] = -1;
    SymbolSeries v = symbol_series(n, Symbol::trig(mk));
    bool witness = !adjoint_residual(std_spec, f, u, v).is_zero();
    report.checks.push_back(
        {"adjoint-witness:standard", witness, "p e_1 breaks the standard-order adjoint"});
  }

  if (!is_integer(cfg.charge)) {
    report.checks.push_back({"charge-integral", false, "reps suite needs an integer charge"});
    sort_checks(report);
    return report;
  }
  LineBundleData bundle(cfg.charge, build_torus_cover(2));
  if (cfg.charge == 0)
    report.values.emplace_back("note", "charge 0: eta_W reduces to rho_W");

  // eta_W globality across a wrapping overlap, via pair transport.
  {
    int a = 0, b = 2;  // x-arcs 0 and 2: nontrivial deck offset and transition
    bool ok = true;
    for (int t = 0; t < 5; ++t) {
      SymbolSeries f = gen.series(n);
      SymbolSeries sigma_b = gen.wave_series(n);
      SymbolSeries sigma_a = bundle.to_chart(a, b, sigma_b, true);
      SymbolSeries r_b = eta_weyl_local(weyl, bundle, b, f, sigma_b);
      SymbolSeries r_a = eta_weyl_local(weyl, bundle, a, f, sigma_a);
      if (!(r_a == bundle.to_chart(a, b, r_b, true))) ok = false;
    }
    report.checks.push_back({"eta-globality", ok, "patch pair (0,2)"});
  }

  // eta_W is a representation of the magnetic product.
  {
    StarProductSpec magnetic = bundle.magnetic_spec(0, n, Rational(1, 2));
    bool ok = true;
    for (int t = 0; t < 5; ++t) {
      SymbolSeries f = gen.series(n), g = gen.series(n);
      SymbolSeries sigma = gen.wave_series(n);
      SymbolSeries lhs = eta_weyl_local(weyl, bundle, 0, star(magnetic, f, g), sigma);
      SymbolSeries rhs =
          eta_weyl_local(weyl, bundle, 0, f, eta_weyl_local(weyl, bundle, 0, g, sigma));
      if (!(lhs == rhs)) ok = false;
    }
    report.checks.push_back({"eta-representation", ok, ""});
  }

  // Rieffel induction: balancing, isometry, intertwining, positivity.
  {
    bool balanced = true, isometric = true, intertwines = true;
    for (int t = 0; t < 5; ++t) {
      SymbolSeries s = gen.series(n), f = gen.series(n);
      SymbolSeries u = gen.wave_series(n), v = gen.wave_series(n);
      SymbolSeries tt = gen.series(n);
      // U(s . f (x) u) = U(s (x) rho_W(f) u): the module action lands in the
      // quantum coefficients as s_hat *_W f.
      SymbolSeries dot = star(weyl, quantum_coefficients(weyl, s), f);
      SymbolSeries lhs = rho_kappa(weyl, dot, u);
      SymbolSeries rhs = rieffel_u_local(weyl, s, rho_kappa(weyl, f, u));
      if (!(lhs == rhs)) balanced = false;

      TauSeries ip_module = rieffel_inner(weyl, s, u, tt, v);
      TauSeries ip_image = l2_inner(rieffel_u_local(weyl, s, u), rieffel_u_local(weyl, tt, v));
      if (!(ip_module == ip_image)) isometric = false;

      SymbolSeries lhs2 = rieffel_u_twisted(weyl, bundle, 0, f, s, u);
      SymbolSeries rhs2 = eta_weyl_local(weyl, bundle, 0, f, rieffel_u_local(weyl, s, u));
      if (!(lhs2 == rhs2)) intertwines = false;
    }
    report.checks.push_back({"rieffel-balancing", balanced, ""});
    report.checks.push_back({"rieffel-isometry", isometric, ""});
    report.checks.push_back({"rieffel-intertwiner", intertwines, ""});

    std::vector<std::pair<SymbolSeries, SymbolSeries>> tensors;
    tensors.emplace_back(gen.wave_series(n), gen.wave_series(n));
    tensors.emplace_back(gen.wave_series(n), gen.wave_series(n));
    double val = induction_positivity_value(weyl, tensors);
    report.checks.push_back({"induction-positivity", val >= -1e-9,
                             "lowest-order Gram value " + std::to_string(val)});
  }

  sort_checks(report);
  return report;
}

int run_cli(const std::vector<std::string>& args, std::string& output) {
  CLI::App app{"starform: exact deformation quantization workbench on T*T^n"};
  app.require_subcommand(1);

  RunConfig cfg;
  if (const char* env = std::getenv("STARFORM_ORDER")) cfg.order = std::atoi(env);

  std::string kappa_text = to_string(cfg.kappa), charge_text = to_string(cfg.charge);
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--order", cfg.order, "truncation order N");
    cmd->add_option("--dim", cfg.dim, "torus dimension (1 or 2)");
    cmd->add_option("--kappa", kappa_text, "ordering parameter, rational a/b");
    cmd->add_option("--charge", charge_text, "monopole/magnetic charge, rational");
    cmd->add_option("--seed", cfg.seed, "random seed");
    cmd->add_flag("--json", cfg.json, "machine-readable JSON report");
  };
  CLI::App* assoc = app.add_subcommand("assoc", "randomized star-product law suite");
  CLI::App* relclass = app.add_subcommand("relative-class", "Cech class of the magnetic pair");
  CLI::App* dirac = app.add_subcommand("dirac", "Dirac integrality verdict");
  CLI::App* reps = app.add_subcommand("reps", "representation and Rieffel induction suite");
  for (CLI::App* c : {assoc, relclass, dirac, reps}) add_common(c);

  auto parse_rational = [](const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(BigInt(text));
    return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    cfg.kappa = parse_rational(kappa_text);
    cfg.charge = parse_rational(charge_text);
    if (cfg.order < 0 || (cfg.dim != 1 && cfg.dim != 2))
      throw CLI::ValidationError("config", "order must be >= 0 and dim in {1,2}");
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      output = app.help();
      return 0;
    }
    output = std::string("usage error: ") + e.what() + "\n";
    return 2;
  } catch (const std::exception& e) {
    output = std::string("usage error: ") + e.what() + "\n";
    return 2;
  }

  try {
    Report report;
    if (assoc->parsed()) report = cmd_assoc(cfg);
    if (relclass->parsed()) report = cmd_relative_class(cfg);
    if (dirac->parsed()) report = cmd_dirac(cfg);
    if (reps->parsed()) report = cmd_reps(cfg);
    output = report.render(cfg.json);
    return report.all_pass() ? 0 : 1;
  } catch (const std::exception& e) {
    output = std::string("error: ") + e.what() + "\n";
    return 1;
  }
}

}  // namespace starform
