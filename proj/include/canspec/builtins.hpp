#pragma once

// Named Hamiltonians and potentials accepted on the command line.
//
//   h_11:  const:c       c
//          exp:k         e^{k t}
//          affine:b      1 + b t
//          inverse-square:c   1/(1 + c t)^2
//   f:     const:c       c
//          decay:k       k/(1 + t)      ("decay:1/(1+t)" means k = 1)
//
// A parameter may be written bare ("affine:1") or named ("affine:b=1").
// Anything else is read as a two-column sample file.

#include "canspec/systems.hpp"
#include "canspec/types.hpp"

#include <functional>
#include <string>

namespace canspec {

struct BuiltinSpec {
  std::string name;
  double param = 0;
};

/// Splits "name:value" / "name:key=value"; `key` is the only accepted key.
BuiltinSpec parse_builtin(const std::string& text, const std::string& key, double fallback);

std::function<double(double)> make_hamiltonian(const std::string& spec);

/// Potential on [0, horizon]; sample files set their own horizon.
DiracPotential make_potential(const std::string& spec, double horizon);

/// h^n = a^n for n = 0..n_max.
StepHeights<double> geometric_heights(double a, Index n_max);

}  // namespace canspec
