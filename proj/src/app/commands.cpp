#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "torus/app.hpp"
#include "torus/errors.hpp"

namespace torus::app {

namespace {

constexpr double kPi = std::numbers::pi;
const double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add(std::vector<double> vals) {
    std::vector<std::string> r;
    for (double v : vals) r.push_back(fmt(v));
    rows.push_back(std::move(r));
  }
};

std::string timestamp_line() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[64];
  std::strftime(buf, sizeof buf, "# generated %Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_table(const Table& t, const std::string& name, const RunOptions& opt, RunReport& rep) {
  std::filesystem::create_directories(opt.out_dir);
  const auto path = (std::filesystem::path(opt.out_dir) / name).string();
  std::ofstream os(path);
  if (!os) fail(ErrorKind::Config, path + ": cannot write");
  if (opt.timestamp) os << timestamp_line() << "\n";
  for (size_t i = 0; i < t.header.size(); ++i) os << (i ? "," : "") << t.header[i];
  os << "\n";
  for (const auto& r : t.rows) {
    for (size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
    os << "\n";
  }
  rep.artifacts.push_back(path);
}

void write_csv(const ScenarioConfig& cfg, const Table& t, const std::string& name, const RunOptions& opt,
               RunReport& rep) {
  if (cfg.wants("csv")) write_table(t, name, opt, rep);
}

void write_series(const ScenarioConfig& cfg, const Table& t, const std::string& name, const RunOptions& opt,
                  RunReport& rep) {
  if (cfg.wants("series")) write_table(t, name, opt, rep);
}

void finish(const ScenarioConfig& cfg, const RunOptions& opt, RunReport& rep) {
  if (cfg.wants("report")) rep.artifacts.push_back((std::filesystem::path(opt.out_dir) / (rep.command + ".txt")).string());
  if (cfg.wants("json")) rep.artifacts.push_back((std::filesystem::path(opt.out_dir) / (rep.command + ".json")).string());
  // the report lists itself, so write after the artifact list is complete
  if (cfg.wants("report")) {
    std::filesystem::create_directories(opt.out_dir);
    std::ofstream(std::filesystem::path(opt.out_dir) / (rep.command + ".txt")) << rep.text();
  }
  if (cfg.wants("json")) {
    std::filesystem::create_directories(opt.out_dir);
    std::ofstream(std::filesystem::path(opt.out_dir) / (rep.command + ".json")) << rep.json();
  }
}

RunReport start(const std::string& cmd, const ScenarioConfig& cfg) {
  RunReport r;
  r.command = cmd;
  r.set_meta("config", cfg.source);
  r.set_meta("case", cfg.scenario == Scenario::constant_vf ? "constant_vf" : "pdfv");
  std::ostringstream t;
  t << "a=" << fmt(cfg.torus.a) << " c=" << fmt(cfg.torus.c);
  r.set_meta("torus", t.str());
  r.set_meta("field", cfg.field.describe());
  r.set_meta("k", std::to_string(cfg.quantum.k));
  r.set_meta("grid_n", std::to_string(cfg.grid_n));
  return r;
}

const char* case_name(Scenario s) { return s == Scenario::constant_vf ? "constant_vf" : "pdfv"; }

// Dirichlet window away from the tan poles, shared by the pdfv residual checks.
Grid inner_window(int n) { return Grid::dirichlet(n, -kPi / 2 + 0.1, kPi / 2 - 0.1); }

void add_geometry_checks(const ScenarioConfig& cfg, RunReport& rep) {
  const GeometryChecks g = geometry_checks(cfg.torus);
  rep.below("frame-identity", "metric-from-vierbein", g.frame_defect, 1e-13);
  rep.above("christoffel-fd-order", "christoffel-closed-form", g.christoffel_order, 1.9,
            "max error " + fmt(g.christoffel_err_h2) + " at h/2");
  rep.info("spin-connection-gap", "spin-connection-printed-vs-frame", g.spin_max_diff,
           "max |printed - frame contraction| over x");
}

}  // namespace

// ---------------------------------------------------------------- geometry

RunReport cmd_geometry(const ScenarioConfig& cfg, const RunOptions& opt) {
  RunReport rep = start("geometry", cfg);
  for (const auto& w : cfg.torus.validate()) rep.set_meta("warning", w);
  add_geometry_checks(cfg, rep);
  Table t{{"x", "R", "g_xx", "g_uu", "gamma_u_xu", "gamma_x_uu", "spin_printed", "spin_frame", "spin_diff"}, {}};
  const int n = 256;
  for (int i = 0; i < n; ++i) {
    const double x = 2.0 * kPi * i / n;
    const Mat3 g = metric_at(cfg.torus, x);
    const ChristoffelSet c = christoffel_at(cfg.torus, x);
    const SpinConnectionReport s = compare_spin_connection(cfg.torus, x);
    t.add({x, radius_profile(cfg.torus, x), g[1][1], g[2][2], c.gamma_2_12, c.gamma_1_22, s.printed, s.derived,
           s.difference});
  }
  write_csv(cfg, t, "geometry.csv", opt, rep);
  Table series{{"x", "spin_printed", "spin_frame"}, {}};
  for (const auto& r : t.rows) series.rows.push_back({r[0], r[6], r[7]});
  write_series(cfg, series, "spin_connection_series.csv", opt, rep);
  finish(cfg, opt, rep);
  return rep;
}

// ---------------------------------------------------------------- spectrum

std::vector<SpectrumRow> spectrum_levels(const ScenarioConfig& cfg) {
  std::vector<SpectrumRow> out;
  const int L = cfg.levels;
  if (cfg.box_selftest) {
    const Grid g = Grid::dirichlet(cfg.spectrum_n, 0.0, kPi);
    const auto r = eig_lowest(discretize_schrodinger([](double) { return cplx(0.0); }, g), L);
    for (int n = 0; n < L; ++n) out.push_back({n, r.eigenvalues[n], r.residuals[n], (n + 1.0) * (n + 1.0)});
    return out;
  }
  if (cfg.scenario == Scenario::pdfv) {
    if (cfg.field.au != AuKind::linear || cfg.fermi.kind != VfKind::cosine)
      fail(ErrorKind::FamilyMismatch, "pdfv spectrum needs field.au: linear and fermi.kind: cosine");
    const double a = cfg.torus.a, e = cfg.field_spec.e, a2 = cfg.field_spec.a2;
    const auto r = rosen_morse_fd(a, e, a2, cfg.spectrum_n, L);
    for (int n = 0; n < L; ++n)
      out.push_back({n, r.eigenvalues[n], r.residuals[n], rosen_morse_level(n, a, e, a2).eps_sq});
    return out;
  }
  // constant V_F: the hermitized counterpart potential on the ring
  const PotentialForm v = hermitian_counterpart_case1(cfg.torus, cfg.field, cfg.quantum.k);
  TridiagonalSym m;
  try {
    m = discretize_schrodinger(v.v, Grid::periodic(cfg.grid_n));
  } catch (const Error& err) {
    if (err.kind() == ErrorKind::ComplexPotential)
      fail(ErrorKind::ComplexPotential, std::string(err.what()) +
                                            "; the potential is not real for this field (use a real C2 and the "
                                            "hermitizing A_x), or run `verify` for the pseudo-Hermitian checks");
    throw;
  }
  const auto r = eig_lowest(m, L);
  for (int n = 0; n < L; ++n) out.push_back({n, r.eigenvalues[n], r.residuals[n], std::nullopt});
  return out;
}

RunReport cmd_spectrum(const ScenarioConfig& cfg, const RunOptions& opt) {
  RunReport rep = start("spectrum", cfg);
  const auto rows = spectrum_levels(cfg);
  const bool box = cfg.box_selftest;
  rep.set_meta("problem", box ? "box self-test on (0, pi)"
                              : cfg.scenario == Scenario::pdfv ? "Rosen-Morse (Liouville form, cos-weighted)"
                                                               : "hermitized counterpart on the ring");
  Table t{{"n", "lambda", "residual"}, {}};
  if (rows.front().analytic) t.header = {"n", "lambda", "residual", "analytic", "rel_dev"};
  for (const auto& r : rows) {
    if (r.analytic) {
      const double dev = std::abs(r.numeric - *r.analytic) / std::max(1.0, std::abs(*r.analytic));
      t.add({double(r.n), r.numeric, r.residual, *r.analytic, dev});
      const double tol = box ? 1e-5 : 1e-3;
      rep.below("level-" + std::to_string(r.n), box ? "plumbing" : "rosen-morse-quantization", dev, tol);
    } else {
      t.add({double(r.n), r.numeric, r.residual});
      rep.info("level-" + std::to_string(r.n), "counterpart-spectrum", r.numeric,
               "eigen residual " + fmt(r.residual));
    }
  }
  write_csv(cfg, t, "spectrum.csv", opt, rep);
  finish(cfg, opt, rep);
  return rep;
}

// ---------------------------------------------------------------- verify

RunReport cmd_verify(const ScenarioConfig& cfg, const RunOptions& opt) {
  RunReport rep = start("verify", cfg);
  rep.set_meta("rho_convention", "squared for the squaring oracle, printed for the counterpart chain");
  rep.set_meta("case2_transcription", "derived");
  rep.set_meta("case2_reading", "consistent");
  rep.set_meta("beta_branch", "negative");
  rep.set_meta("negative_control", opt.negative_control ? "on (superpotential sin x coefficient x1.01)" : "off");
  const TorusParams& p = cfg.torus;
  const double e = cfg.field_spec.e;
  const int k = cfg.quantum.k;

  add_geometry_checks(cfg, rep);

  // squaring oracle with the configured field
  {
    const double e1 = squaring_defect(p, cfg.field, k, Grid::periodic(cfg.grid_n / 2));
    const double e2 = squaring_defect(p, cfg.field, k, Grid::periodic(cfg.grid_n));
    rep.below("squaring-oracle", "dirac-square-decouples", e2, 1e-6, std::log2(e1 / e2));
  }

  // Hermiticity of H_D
  {
    const Grid g = Grid::periodic(cfg.grid_n);
    const GaugeField au = GaugeField::linear_au(e, cfg.field_spec.a2, k);
    rep.info("hermiticity-defect-ax-zero", "dirac-hermiticity", self_adjointness_defect(p, au, k, g),
             "derivative terms are anti-Hermitian; see notes");
    rep.info("hermiticity-defect-ax-imaginary", "dirac-hermiticity",
             self_adjointness_defect(p, au.with_ax(GaugeField::hermitizing_ax(e)), k, g));
    rep.above("hermiticity-defect-ax-real", "dirac-hermiticity",
              self_adjointness_defect(p, au.with_ax(GaugeField::cosine_ax(e, 1.0)), k, g), 1e-3);
    double w1_imag = 0.0;
    for (int i = 0; i < g.n; ++i)
      w1_imag = std::max(w1_imag, std::abs(dirac_offdiag(p, au.with_ax(GaugeField::hermitizing_ax(e)), g.x(i)).w1.imag()));
    rep.below("w1-real-for-imaginary-ax", "dirac-hermiticity", w1_imag, 1e-14);
  }

  // constant V_F chain
  {
    const GaugeField f = GaugeField::quadratic_au_tied(e, cfg.field_spec.C2, k, p.a)
                             .with_ax(GaugeField::hermitizing_ax(e));
    const Grid g = Grid::dirichlet(256, 0.0, 2 * kPi);
    const auto [hs, hm] = decouple_constant_vf(p, f, k, g);
    double sig = 0.0, dv = 0.0;
    const PotentialForm cp = hermitian_counterpart_case1(p, f, k);
    const PotentialForm cf = counterpart_closed_form(p, e, cfg.field_spec.C2);
    for (int i = 0; i < g.n; ++i) {
      sig = std::max(sig, std::abs(hs.sigma(g.x(i))));
      dv = std::max(dv, std::abs(hs.rho(g.x(i)) - cp.v(g.x(i))) + std::abs(cp.v(g.x(i)) - cf.v(g.x(i))));
    }
    rep.below("hermitizing-ax-removes-first-derivative", "hermitizing-gauge", sig, 1e-14);
    rep.below("counterpart-closed-form", "counterpart-trigonometric-form", dv, 1e-12);

    const double scale = opt.negative_control ? 1.01 : 1.0;
    const FactorizationDefect fd = factorization_defect(p, 10000, scale);
    rep.below("factorization-minus", "superpotential-factorization", fd.minus, 1e-12);
    rep.below("factorization-plus", "superpotential-factorization", fd.plus, 1e-12);
    if (!opt.negative_control) {
      const FactorizationDefect bad = factorization_defect(p, 10000, 1.01);
      rep.above("factorization-negative-control-ratio", "superpotential-factorization",
                std::max(bad.minus, bad.plus) / std::max({fd.minus, fd.plus, 1e-16}), 1e3);
    }

    const auto [v, v1] = partner_potentials_case1(p);
    const Superpotential sp = superpotential_case1(p, e, scale);
    double r[2];
    int j = 0;
    for (int n : {cfg.grid_n / 2, cfg.grid_n}) {
      const Grid gi = Grid::dirichlet(n, 0.0, 2 * kPi);
      r[j++] = intertwining_residual(sp.W, schrodinger(v, gi), schrodinger(v1, gi), bump_testset(gi, 6, 5));
    }
    rep.below("superpotential-intertwining", "partner-intertwining", r[1], 1e-5, std::log2(r[0] / r[1]));

    const Grid g2 = Grid::dirichlet(2048, 0.0, 2 * kPi);
    const auto [h2, hm2] = decouple_constant_vf(p, f, k, g2);
    const SLProblem target = schrodinger(cp, g2);
    rep.info("printed-eta2-intertwining-case1", "eta2-intertwining",
             intertwining_residual(eta2_case1(p, 0.0), h2, target, bump_testset(g2, 6, 11)),
             "first-order map with the printed A(x) is not an intertwiner");
    rep.info("printed-eta1-intertwining-case1", "eta1-intertwining",
             intertwining_residual(eta1_case1(p), h2, target, bump_testset(g2, 6, 11)));
  }

  // Case 1 analytic spectrum on the real branch
  if (p.a < 1.0) {
    const MathieuParams m = case1_real_branch(p.a, e);
    const MorseLevels ml = morse_levels(m, 1.0);
    const CplxFn u = transformed_potential(m, 1.0);
    ShootingProblem sh{[u](double t) { return u(t).real(); }, -4.0, 40.0, 40000, 1e-13};
    double worst = 0.0, wres = 0.0;
    int used = 0;
    for (int n = 0; n < std::min(ml.bound, cfg.levels); ++n) {
      if (ml.kappa - n - 0.5 < 0.3) break;  // too shallow to resolve on the window
      const Case1Energy en = case1_energy(n, 1.0, m);
      const double s = shoot_bound_state(sh, n).energy;
      worst = std::max(worst, std::abs(en.energy_sq.real() - s) / std::abs(s));
      Case1Solution sol = case1_solution(n, 1.0, m);
      calibrate_case1(sol, -1.0, 8.0);
      wres = std::max(wres, sol.reading_residuals[static_cast<int>(sol.reading)]);
      rep.set_meta("case1_reading", to_string(sol.reading));
      ++used;
    }
    rep.below("case1-energy-vs-shooting", "case1-closed-form-energy", worst, 1e-4, std::nullopt,
              std::to_string(used) + " bound levels, kappa=" + fmt(ml.kappa));
    rep.below("case1-wavefunction-residual", "case1-laguerre-solution", wres, 1e-6);
    const MorseChain ch = case1_transform_chain(mathieu_form(p, e, cfg.field_spec.C2), 1.0);
    rep.info("case1-truncation-printed", "exponential-map-expansion", ch.truncation_printed);
    rep.info("case1-truncation-corrected", "exponential-map-expansion", ch.truncation_corrected);
    if (cfg.alpha != 1.0) {
      const MorseLevels ma = morse_levels(m, cfg.alpha);
      rep.info("case1-alpha-deviation", "case1-closed-form-energy",
               std::abs(case1_energy(0, cfg.alpha, m).energy_sq.real() - ma.level(0)),
               "closed form vs Morse level at alpha=" + fmt(cfg.alpha));
    }
  } else {
    rep.info("case1-real-branch", "case1-closed-form-energy", p.a, "a >= 1: no real branch, skipped");
  }

  // position-dependent V_F chain
  {
    const double a2 = cfg.field_spec.a2;
    const GaugeField lf = GaugeField::linear_au(e, a2, k);
    const FermiVelocity vf = FermiVelocity::cosine(p.a);
    const PotentialForm gen = veff_case2(p, lf, k, vf), rm = veff_rosen_morse(p.a, e, a2);
    const Grid w = inner_window(2001);
    double d = 0.0;
    for (int i = 0; i < w.n; ++i) d = std::max(d, std::abs(gen.v(w.x(i)) - rm.v(w.x(i))));
    rep.below("effective-potential-equivalence", "rosen-morse-reduction", d, 1e-10);

    double r[2];
    int j = 0;
    for (int n : {400, 800}) {
      const Grid g = inner_window(n);
      const auto pd = decouple_pdfv(p, lf, k, vf, g);
      r[j++] = gauge_mapping_residual(pd.plus, gauge_prefactor(pd.plus, 0.0), remove_first_derivative(pd.plus),
                                      bump_testset(g, 4, 1));
    }
    rep.below("gauge-removes-first-derivative", "first-derivative-gauge", r[1], 1e-5, std::log2(r[0] / r[1]));
    {
      const Grid g = inner_window(800);
      const auto pd = decouple_pdfv(p, lf, k, vf, g);
      const double a = p.a;
      // closed form of the printed prefactor for A_x = 0
      CplxFn pfn = [a](double x) { return std::exp(0.5 * a * a * (std::cos(x) - 1.0)) / std::sqrt(std::cos(x)); };
      rep.info("printed-prefactor-mapping", "pdfv-prefactor",
               gauge_mapping_residual(pd.plus, pfn, rm, bump_testset(g, 4, 1)),
               "printed prefactor does not carry the first-derivative gauge");
      const Grid g2 = Grid::dirichlet(2048, -kPi / 2 + 0.1, kPi / 2 - 0.1);
      const auto pd2 = decouple_pdfv(p, lf.with_ax(GaugeField::hermitizing_ax(e)), k, vf, g2);
      rep.info("printed-eta2-intertwining-case2", "eta2-intertwining",
               intertwining_residual(eta2_case2(p, 0.0), pd2.plus, schrodinger(rm, g2), bump_testset(g2, 6, 11)));
    }

    const auto fd = rosen_morse_fd_levels(p.a, e, a2, cfg.spectrum_n, std::max(cfg.levels, 4));
    double dev = 0.0, res = 0.0;
    for (int n = 0; n < 4; ++n) {
      const Case2Solution s = rosen_morse_level(n, p.a, e, a2);
      dev = std::max(dev, std::abs(fd[n] - s.eps_sq) / std::max(1.0, std::abs(s.eps_sq)));
      if (n < 3)
        res = std::max(res, schrodinger_residual([&](double x) { return case2_wavefunction(s, x); }, rm.v, s.eps_sq,
                                                 -kPi / 2 + 0.2, kPi / 2 - 0.2, 2001));
    }
    rep.below("case2-quantization-vs-fd", "rosen-morse-quantization", dev, 1e-3);
    rep.below("case2-wavefunction-residual", "rosen-morse-hypergeometric-solution", res, 1e-6);
    const Case2HypParams h = case2_hyp_params(0.0, -0.25, 0.0);
    rep.info("displayed-hyp-params-product-gap", "hypergeometric-parameter-matching",
             std::abs(h.a_disp * h.b_disp - h.a_match * h.b_match), "printed a, b vs matched double root");
    const auto cut = rosen_morse_cutoff_levels(p.a, e, a2, 1e-3, cfg.spectrum_n, 1);
    rep.info("hard-cutoff-fd-level-0", "rosen-morse-quantization", cut[0], "Dirichlet at delta=1e-3; converges slowly");
  }

  // solver and special-function self-tests
  {
    const Grid g = Grid::dirichlet(4000, 0.0, kPi);
    const auto r = eig_lowest(discretize_schrodinger([](double) { return cplx(0.0); }, g), 4);
    double dev = 0.0;
    for (int n = 0; n < 4; ++n) dev = std::max(dev, std::abs(r.eigenvalues[n] - (n + 1.0) * (n + 1.0)) / ((n + 1.0) * (n + 1.0)));
    rep.below("box-selftest", "plumbing", dev, 1e-5);
    const double want = -std::log(0.5) / 0.5;
    rep.below("hypergeometric-log-identity", "plumbing", std::abs(gauss_2f1(1.0, 1.0, 2.0, 0.5) - want), 1e-13);
  }

  Table t{{"check", "anchor", "status", "value", "tolerance", "order"}, {}};
  for (const auto& c : rep.checks)
    t.rows.push_back({c.name, c.anchor, to_string(c.status), fmt(c.value),
                      c.status == Status::info ? "" : fmt(c.tolerance), c.order ? fmt(*c.order) : ""});
  write_csv(cfg, t, "verify.csv", opt, rep);
  finish(cfg, opt, rep);
  return rep;
}

// ---------------------------------------------------------------- sweep

ScenarioConfig with_parameter(const ScenarioConfig& cfg, const std::string& name, double value) {
  ScenarioConfig c = cfg;
  if (name == "a") c.torus.a = value;
  else if (name == "c") c.torus.c = value;
  else if (name == "e") c.field_spec.e = value;
  else if (name == "k") c.quantum.k = static_cast<int>(std::lround(value));
  else if (name == "a2") c.field_spec.a2 = value;
  else if (name == "C2") c.field_spec.C2 = value;
  else if (name == "alpha") c.alpha = value;
  else if (name == "C1") c.C1 = value;
  else fail(ErrorKind::UnknownParameter, "unknown sweep parameter '" + name + "' (a, c, e, k, a2, C2, alpha, C1)");
  finalize(c);
  return c;
}

RunReport cmd_sweep(const ScenarioConfig& cfg, const RunOptions& opt) {
  const SweepSpec& sw = cfg.sweep;
  if (sw.points < 1) fail(ErrorKind::Config, cfg.source + ": sweep.points: need at least one point");
  with_parameter(cfg, sw.parameter, sw.from);  // rejects unknown names before any work
  RunReport rep = start("sweep", cfg);
  rep.set_meta("parameter", sw.parameter);
  rep.set_meta("range", fmt(sw.from) + ".." + fmt(sw.to) + " (" + std::to_string(sw.points) + " points)");
  const int L = cfg.levels;
  const bool c1 = cfg.scenario == Scenario::constant_vf;

  Table t;
  t.header = {sw.parameter};
  if (c1) {
    for (auto h : {"c_re", "c_im", "C2_re", "C2_im", "factorization_defect"}) t.header.push_back(h);
    for (int n = 0; n < L; ++n) t.header.push_back("lambda_" + std::to_string(n));
    for (int n = 0; n < L; ++n) t.header.push_back("E2_" + std::to_string(n));
  } else {
    for (int n = 0; n < L; ++n) t.header.push_back("lambda_" + std::to_string(n));
    for (int n = 0; n < L; ++n) t.header.push_back("eps2_" + std::to_string(n));
    t.header.push_back("max_rel_dev");
    for (int n = 0; n < L; ++n) t.header.push_back("eps2_q" + std::to_string(n));
  }

  std::vector<std::vector<double>> rows(sw.points);
  std::vector<std::string> errors(sw.points);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < sw.points; ++i) {
    try {
      const double val = sw.points == 1 ? sw.from : sw.from + (sw.to - sw.from) * i / (sw.points - 1);
      const ScenarioConfig c = with_parameter(cfg, sw.parameter, val);
      std::vector<double> row{val};
      const auto levels = spectrum_levels(c);
      if (c1) {
        const Superpotential sp = superpotential_case1(c.torus, c.field_spec.e);
        const FactorizationDefect fd = factorization_defect(c.torus, 10000);
        row.insert(row.end(), {sp.c.real(), sp.c.imag(), sp.C2.real(), sp.C2.imag(), std::max(fd.minus, fd.plus)});
        for (const auto& l : levels) row.push_back(l.numeric);
        for (int n = 0; n < L; ++n) {
          double e2 = kNaN;
          if (c.torus.a < 1.0) {
            const MathieuParams m = case1_real_branch(c.torus.a, c.field_spec.e);
            if (n < morse_levels(m, c.alpha).bound) e2 = case1_energy(n, c.alpha, m).energy_sq.real();
          }
          row.push_back(e2);
        }
      } else {
        double dev = 0.0;
        for (const auto& l : levels) row.push_back(l.numeric);
        for (const auto& l : levels) {
          row.push_back(l.analytic.value_or(kNaN));
          if (l.analytic) dev = std::max(dev, std::abs(l.numeric - *l.analytic) / std::max(1.0, std::abs(*l.analytic)));
        }
        row.push_back(dev);
        for (int n = 0; n < L; ++n) {
          double q = kNaN;
          try {
            q = case2_quantize(n, c.alpha, c.C1).eps_sq;
          } catch (const Error&) {
          }
          row.push_back(q);
        }
      }
      rows[i] = std::move(row);
    } catch (const std::exception& ex) {
      errors[i] = ex.what();
    }
  }
  for (int i = 0; i < sw.points; ++i)
    if (!errors[i].empty()) fail(ErrorKind::InvalidArgument, "sweep row " + std::to_string(i) + ": " + errors[i]);
  for (auto& r : rows) t.add(r);
  rep.info("rows", "plumbing", sw.points);
  write_csv(cfg, t, "sweep.csv", opt, rep);
  finish(cfg, opt, rep);
  return rep;
}

// ---------------------------------------------------------------- analytic

RunReport cmd_analytic(const ScenarioConfig& cfg, const RunOptions& opt) {
  RunReport rep = start("analytic", cfg);
  const TorusParams& p = cfg.torus;
  const double e = cfg.field_spec.e;
  const int L = cfg.levels;
  if (cfg.scenario == Scenario::constant_vf) {
    const MorseChain ch = case1_transform_chain(mathieu_form(p, e, cfg.field_spec.C2), cfg.alpha);
    rep.info("truncation-printed", "exponential-map-expansion", ch.truncation_printed);
    rep.info("truncation-corrected", "exponential-map-expansion", ch.truncation_corrected);
    if (p.a >= 1.0) {
      rep.info("real-branch", "case1-closed-form-energy", p.a, "a >= 1: no real branch");
    } else {
      const MathieuParams m = case1_real_branch(p.a, e);
      const MorseLevels ml = morse_levels(m, cfg.alpha);
      rep.set_meta("kappa", fmt(ml.kappa));
      rep.set_meta("bound_levels", std::to_string(ml.bound));
      const CplxFn u = transformed_potential(m, cfg.alpha);
      ShootingProblem sh{[u](double t) { return u(t).real(); }, -4.0 / cfg.alpha, 40.0 / cfg.alpha, 40000, 1e-13};
      Table t{{"n", "E2_re", "E2_im", "morse", "shooting", "rel_dev", "wave_residual"}, {}};
      for (int n = 0; n < std::min(ml.bound, L); ++n) {
        const Case1Energy en = case1_energy(n, cfg.alpha, m);
        double s = kNaN, dev = kNaN;
        if (ml.kappa - n - 0.5 >= 0.3) {
          s = shoot_bound_state(sh, n).energy;
          dev = std::abs(en.energy_sq.real() - s) / std::abs(s);
        }
        Case1Solution sol = case1_solution(n, cfg.alpha, m);
        calibrate_case1(sol, -1.0 / cfg.alpha, 8.0 / cfg.alpha);
        const double wr = sol.reading_residuals[static_cast<int>(sol.reading)];
        rep.set_meta("reading", to_string(sol.reading));
        t.add({double(n), en.energy_sq.real(), en.energy_sq.imag(), ml.level(n), s, dev, wr});
        rep.info("E2-" + std::to_string(n), "case1-closed-form-energy", en.energy_sq.real(),
                 "shooting " + fmt(s));
        Table w{{"t", "re", "im"}, {}};
        for (int i = 0; i <= 400; ++i) {
          const double tt = (-1.0 + 9.0 * i / 400) / cfg.alpha;
          const cplx z = case1_wavefunction(sol, tt);
          w.add({tt, z.real(), z.imag()});
        }
        write_series(cfg, w, "case1_wavefunction_" + std::to_string(n) + ".csv", opt, rep);
      }
      write_csv(cfg, t, "case1_levels.csv", opt, rep);
    }
  } else {
    const double a2 = cfg.field_spec.a2;
    const auto fd = rosen_morse_fd_levels(p.a, e, a2, cfg.spectrum_n, L);
    Table t{{"n", "alpha_n", "beta", "a_h", "eps", "eps_sq", "root_residual", "fd", "rel_dev"}, {}};
    std::vector<double> e2;
    for (int n = 0; n < L; ++n) {
      const Case2Solution s = rosen_morse_level(n, p.a, e, a2);
      e2.push_back(s.eps_sq);
      const double dev = std::abs(fd[n] - s.eps_sq) / std::max(1.0, std::abs(s.eps_sq));
      t.add({double(n), s.alpha, s.beta.real(), s.a_h.real(), s.eps, s.eps_sq, s.residual, fd[n], dev});
      rep.info("eps2-" + std::to_string(n), "rosen-morse-quantization", s.eps_sq, "fd " + fmt(fd[n]));
      const Grid g = Grid::dirichlet(399, -kPi / 2 + 0.01, kPi / 2 - 0.01);
      const GridFunction wf = case2_wavefunction_table(s, g);
      Table w{{"x", "re", "im", "abs"}, {}};
      for (int i = 0; i < g.n; ++i) w.add({g.x(i), wf.values[i].real(), wf.values[i].imag(), std::abs(wf.values[i])});
      write_series(cfg, w, "case2_wavefunction_" + std::to_string(n) + ".csv", opt, rep);
    }
    if (L >= 3) {
      const MuNuFit fit = fit_mu_nu(e2);
      rep.info("fit-mu", "level-fit", fit.mu, "least-squares fit, rms " + fmt(fit.rms));
      rep.info("fit-nu", "level-fit", fit.nu);
    }
    if (cfg.C1 != 0.0 || cfg.alpha != 1.0) {
      const Case2Solution q = case2_quantize(0, cfg.alpha, cfg.C1);
      rep.info("quantize-alpha-C1-level-0", "rosen-morse-quantization", q.eps_sq);
    }
    write_csv(cfg, t, "case2_levels.csv", opt, rep);
  }
  rep.set_meta("scenario", case_name(cfg.scenario));
  finish(cfg, opt, rep);
  return rep;
}

}  // namespace torus::app
