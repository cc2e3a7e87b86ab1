// trigreen: lattice Green's functions and exterior Dirichlet solves on the
// triangular lattice.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "trigreen/commands.hpp"
#include "trigreen/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Lattice Green's functions for the discrete Helmholtz equation on the triangular lattice"};
  app.require_subcommand(1, 1);

  std::string config_path;
  std::optional<std::string> k, eps, n, m, guess, h, preset, window, out;
  std::vector<std::string> window_parts;

  for (const char* name : {"green", "convergence", "solve", "field", "oracle"}) {
    auto* sub = app.add_subcommand(name);
    sub->set_help_flag("--help", "print this help and exit");
    sub->add_option("--config", config_path, "key = value configuration file");
    sub->add_option("--k", k, "wavenumber in (0, 2 sqrt 2)");
    sub->add_option("--eps", eps, "imaginary shift added to k^2");
    sub->add_option("--n", n, "truncation shell N (odd)");
    sub->add_option("--m", m, "served radius M");
    sub->add_option("--guess", guess, "closing guess: zero, shift or heuristic");
    sub->add_option("--h", h, "heuristic parameter, 're' or 're im'");
    sub->add_option("--preset", preset, "example1-sym, example1-skew or example2");
    sub->add_option("--window", window_parts, "x1min x1max x2min x2max")->expected(4)->allow_extra_args(false);
    sub->add_option("--out", out, "output path");
  }
  CLI11_PARSE(app, argc, argv);
  const std::string command = app.get_subcommands().front()->get_name();

  if (!window_parts.empty()) {
    std::string joined;
    for (const auto& part : window_parts) joined += part + " ";
    window = joined;
  }

  trigreen::RunConfig cfg;
  try {
    if (!config_path.empty()) cfg = trigreen::load_config(config_path);
    const std::pair<const char*, std::optional<std::string>*> overrides[] = {
        {"k", &k},         {"epsilon", &eps},   {"n", &n},           {"m", &m},    {"guess", &guess},
        {"h", &h},         {"preset", &preset}, {"window", &window}, {"out", &out}};
    for (const auto& [key, value] : overrides) {
      if (*value) trigreen::set_config_value(cfg, key, **value);
    }
  } catch (const trigreen::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return trigreen::kExitConfig;
  }
  return trigreen::run_command(command, cfg, std::cout, std::cerr);
}
