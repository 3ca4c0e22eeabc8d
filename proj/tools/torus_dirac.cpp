// torus-dirac: batch front end for the Dirac-on-a-torus library.
#include <CLI11.hpp>
#include <iostream>

#include "torus/app.hpp"
#include "torus/errors.hpp"

using namespace torus;

int main(int argc, char** argv) {
  CLI::App cli{"Dirac operator on a torus: geometry, spectra, verification, sweeps"};
  cli.require_subcommand(1);

  std::string config, out = "out";
  int grid_n = 0;
  bool no_timestamp = false, negative_control = false;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", config, "scenario file (YAML)");
    sub->add_option("--out", out, "output directory")->capture_default_str();
    sub->add_option("--grid-n", grid_n, "override grid.n");
    sub->add_flag("--no-timestamp", no_timestamp, "omit the timestamp line in CSV files");
  };
  auto* geo = cli.add_subcommand("geometry", "metric, Christoffel and spin-connection tables");
  auto* spec = cli.add_subcommand("spectrum", "numeric spectra of the Hermitian branches");
  auto* ver = cli.add_subcommand("verify", "residual suite; exit status 1 on any failed check");
  auto* sw = cli.add_subcommand("sweep", "one row per parameter value");
  auto* ana = cli.add_subcommand("analytic", "closed-form levels and wavefunction series");
  for (auto* s : {geo, spec, ver, sw, ana}) common(s);
  ver->add_flag("--negative-control", negative_control, "perturb the superpotential by 1%");
  std::string param;
  double from = 0.0, to = 0.0;
  int points = -1;
  sw->add_option("--param", param, "a, c, e, k, a2, C2, alpha or C1");
  sw->add_option("--from", from, "first value");
  sw->add_option("--to", to, "last value");
  sw->add_option("--points", points, "number of rows");

  CLI11_PARSE(cli, argc, argv);

  try {
    app::ScenarioConfig cfg;
    if (!config.empty()) {
      cfg = app::load_config(config);
    } else {
      app::finalize(cfg);
    }
    if (grid_n > 0) {
      cfg.grid_n = grid_n;
      app::finalize(cfg);
    }
    if (!param.empty()) cfg.sweep.parameter = param;
    if (sw->count("--from")) cfg.sweep.from = from;
    if (sw->count("--to")) cfg.sweep.to = to;
    if (sw->count("--points")) cfg.sweep.points = points;

    app::RunOptions opt{out, !no_timestamp, negative_control};
    app::RunReport rep;
    if (*geo) rep = app::cmd_geometry(cfg, opt);
    else if (*spec) rep = app::cmd_spectrum(cfg, opt);
    else if (*ver) rep = app::cmd_verify(cfg, opt);
    else if (*sw) rep = app::cmd_sweep(cfg, opt);
    else rep = app::cmd_analytic(cfg, opt);
    std::cout << rep.text();
    return rep.ok() ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.kind()) << "]: " << e.what() << "\n";
    return e.kind() == ErrorKind::Config || e.kind() == ErrorKind::UnknownParameter ? 2 : 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
