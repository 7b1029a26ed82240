#pragma once

// Subcommands of the canspec tool. Each run_* writes data to `out`,
// diagnostics to `err`, and returns the process exit code:
// 0 ok, 1 input error, 2 positivity failure, 3 quadrature failure.

#include "canspec/types.hpp"

#include <exception>
#include <iosfwd>
#include <optional>
#include <string>

namespace canspec::cli {

enum ExitCode : int { kOk = 0, kInputError = 1, kPositivityFailure = 2, kQuadratureFailure = 3 };

struct RecoverJob {
  std::string heights;     ///< comma list
  std::string file;        ///< whitespace-separated heights
  std::string geometric;   ///< "a=0.5" or "0.5"
  Index n = 10;            ///< last index for --geometric
  std::string route = "both";
  double tol = 1e-9;
  std::string output;      ///< JSON file; stdout when empty
};

struct PeriodizeJob {
  std::string h11 = "const:1";
  double T = 0.5;
  Index N = 20;
  std::string heights_out;  ///< CSV n,t,h11
  std::string moments_out;  ///< CSV n,c
  std::string output;       ///< JSON file; stdout when empty
};

struct DensityJob {
  // One source.
  std::string moments;
  std::string heights;
  std::string alphas;
  std::string h11;
  std::optional<double> geronimus;
  std::string expgrowth_Ts;

  double T = 0.5;  ///< step for --h11, and the line period pi/T for --line
  Index N = 20;    ///< steps for --h11, coefficients for --geronimus
  Index terms = -1;  ///< cosine terms; -1 uses every moment
  std::string grid;  ///< "lo,hi,spacing"
  bool line = false;
  std::string compare;  ///< geronimus | one-minus-cos | lebesgue-atom:m | expgrowth-printed
  std::string atoms_out;
  std::string output;   ///< CSV file; stdout when empty
};

struct ConvergeJob {
  std::string f = "const:1";
  double a = 1;
  std::string Ts = "0.5,0.25,0.125,0.0625";
  std::string grid = "-20,20,0.01";
  double dt = 0;
  std::string frame = "dirac";
  double tail_tol = 0.1;
  std::string csv;     ///< per-T table
  std::string output;  ///< JSON file; stdout when empty
};

/// Exit code for an exception escaping a command.
int exit_code(const std::exception& e);

int run_recover(const RecoverJob& job, std::ostream& out, std::ostream& err);
int run_periodize(const PeriodizeJob& job, std::ostream& out, std::ostream& err);
int run_density(const DensityJob& job, std::ostream& out, std::ostream& err);
int run_converge(const ConvergeJob& job, std::ostream& out, std::ostream& err);

}  // namespace canspec::cli
