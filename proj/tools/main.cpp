#include "commands.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  using namespace canspec::cli;

  CLI::App app{"Direct spectral problem for diagonal canonical systems"};
  app.require_subcommand(1);

  RecoverJob recover;
  auto* rec = app.add_subcommand("recover", "Verblunsky coefficients and moments from step heights");
  rec->add_option("--heights", recover.heights, "comma-separated heights h^0,h^1,...");
  rec->add_option("--file", recover.file, "file of whitespace-separated heights");
  rec->add_option("--geometric", recover.geometric, "geometric heights a^n, e.g. a=0.5");
  rec->add_option("--n", recover.n, "last index for --geometric");
  rec->add_option("--route", recover.route, "verblunsky | moments | both");
  rec->add_option("--tol", recover.tol, "cross-validation tolerance");
  rec->add_option("-o,--output", recover.output, "JSON report path");

  PeriodizeJob periodize;
  auto* per = app.add_subcommand("periodize", "Step averages of h_11 and the recovered measure");
  per->add_option("--h11", periodize.h11, "built-in h_11 or sample file");
  per->add_option("--T", periodize.T, "step length");
  per->add_option("--N", periodize.N, "number of steps");
  per->add_option("--heights-out", periodize.heights_out, "CSV of step heights");
  per->add_option("--moments-out", periodize.moments_out, "CSV of recovered moments");
  per->add_option("-o,--output", periodize.output, "JSON report path");

  DensityJob density;
  double geronimus = 0;
  auto* den = app.add_subcommand("density", "Cosine partial sums and closed-form densities");
  den->add_option("--moments", density.moments, "comma-separated moments");
  den->add_option("--heights", density.heights, "comma-separated step heights");
  den->add_option("--alphas", density.alphas, "comma-separated Verblunsky coefficients");
  den->add_option("--h11", density.h11, "built-in h_11 or sample file, periodized with --T, --N");
  auto* ger = den->add_option("--geronimus", geronimus, "constant Verblunsky coefficient");
  den->add_option("--expgrowth", density.expgrowth_Ts, "step sizes T for the e^t family");
  den->add_option("--T", density.T, "step length; the line period is pi/T");
  den->add_option("--N", density.N, "steps for --h11, coefficients for --geronimus");
  den->add_option("--terms", density.terms, "cosine terms (default: all moments)");
  den->add_option("--grid", density.grid, "lo,hi,spacing");
  den->add_flag("--line", density.line, "report on the line of period pi/T");
  den->add_option("--compare", density.compare,
                  "one-minus-cos | geronimus | lebesgue-atom:m | expgrowth-printed");
  den->add_option("--atoms-out", density.atoms_out, "CSV of atoms (location, mass)");
  den->add_option("-o,--output", density.output, "CSV path");

  ConvergeJob converge;
  auto* con = app.add_subcommand("converge", "Step approximations of a Dirac system");
  con->add_option("--f", converge.f, "built-in potential or sample file");
  con->add_option("--a", converge.a, "horizon");
  con->add_option("--Ts", converge.Ts, "decreasing step sizes dividing a");
  con->add_option("--grid", converge.grid, "lo,hi,spacing");
  con->add_option("--dt", converge.dt, "RK4 step (default 1e-3 a)");
  con->add_option("--frame", converge.frame, "dirac | canonical");
  con->add_option("--tail-tol", converge.tail_tol, "bound on the truncated PW tail");
  con->add_option("--csv", converge.csv, "CSV table path");
  con->add_option("-o,--output", converge.output, "JSON report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kInputError;
  }

  if (*rec) return run_recover(recover, std::cout, std::cerr);
  if (*per) return run_periodize(periodize, std::cout, std::cerr);
  if (*den) {
    if (*ger) density.geronimus = geronimus;
    return run_density(density, std::cout, std::cerr);
  }
  return run_converge(converge, std::cout, std::cerr);
}
