#include <CLI11.hpp>

#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace sta::cli;
  CLI::App app{"sta: complexified spacetime algebra calculator"};
  app.require_subcommand(1);

  std::string text;
  bool matrix = false;
  auto* eval = app.add_subcommand("eval", "evaluate an expression");
  eval->add_option("expr", text, "expression, e.g. \"e1*e2*e3 - I\"")->required();
  eval->add_flag("--matrix", matrix, "also print the 4x4 matrix");

  std::uint64_t seed = 42;
  long n = 1000;
  double tol = 1e-9;
  auto* ident = app.add_subcommand("identities", "run the seeded identity suite");
  ident->add_option("--seed", seed, "PRNG seed");
  ident->add_option("--n", n, "number of random samples");
  ident->add_option("--tol", tol, "pass threshold");

  std::vector<double> x{1.0, 0.0}, y{1.0, 1.0};
  double phi_x = 0.0, phi_y = 0.0;
  auto* prob = app.add_subcommand("prob", "probability between two family states");
  prob->add_option("--x", x, "x1 x2")->expected(2)->allow_extra_args(false);
  prob->add_option("--y", y, "y1 y2")->expected(2)->allow_extra_args(false);
  prob->add_option("--phi-x", phi_x);
  prob->add_option("--phi-y", phi_y);

  GridSpec spec;
  std::vector<double> gy{1.0, 1.0}, r1{-3.0, 3.0}, r2{-3.0, 3.0};
  std::string format = "csv", out_path;
  auto* grid = app.add_subcommand("grid", "emit a probability surface");
  grid->add_option("--y", gy, "y1 y2")->expected(2)->allow_extra_args(false);
  grid->add_option("--phi-x", spec.phi_x);
  grid->add_option("--phi-y", spec.phi_y);
  grid->add_option("--x1-range", r1, "lo hi")->expected(2)->allow_extra_args(false);
  grid->add_option("--x2-range", r2, "lo hi")->expected(2)->allow_extra_args(false);
  grid->add_option("--steps", spec.steps);
  grid->add_flag("--x-equals-y", spec.x_equals_y, "set y = x at every point");
  grid->add_option("--format", format, "csv or json");
  grid->add_option("--out", out_path, "output path (stdout when omitted)");

  std::vector<double> parts;
  double obs_tol = 1e-9;
  auto* obs = app.add_subcommand("observables", "bilinears and Fierz report for a spinor");
  obs->add_option("parts", parts, "re1 im1 re2 im2 re3 im3 re4 im4")->expected(8)->required();
  obs->add_option("--tol", obs_tol);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (*eval) return cmd_eval(text, matrix, std::cout, std::cerr);
  if (*ident) return cmd_identities(seed, n, tol, std::cout, std::cerr);
  if (*prob) return cmd_prob({x[0], x[1]}, {y[0], y[1]}, phi_x, phi_y, std::cout);
  if (*grid) {
    spec.y = {gy[0], gy[1]};
    spec.x1_range = {r1[0], r1[1]};
    spec.x2_range = {r2[0], r2[1]};
    return cmd_grid(spec, format, out_path, std::cout, std::cerr);
  }
  std::array<double, 8> a{};
  std::copy(parts.begin(), parts.end(), a.begin());
  return cmd_observables(a, obs_tol, std::cout, std::cerr);
}
