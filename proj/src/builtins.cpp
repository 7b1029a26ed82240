#include "canspec/builtins.hpp"

#include "canspec/errors.hpp"
#include "canspec/io.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>

namespace canspec {

namespace {

bool is_builtin(const std::string& name, std::initializer_list<const char*> names) {
  return std::any_of(names.begin(), names.end(), [&](const char* n) { return name == n; });
}

std::string head(const std::string& text) { return text.substr(0, text.find(':')); }

/// Linear interpolation through the table; NaN outside it.
std::function<double(double)> interpolant(const SampleTable& table) {
  auto t = std::make_shared<SampleTable>(table);
  for (size_t i = 1; i < t->ts.size(); ++i)
    if (!(t->ts[i] > t->ts[i - 1])) throw InvalidInput("sample times must increase");
  return [t](double s) {
    const auto& ts = t->ts;
    if (s < ts.front() || s > ts.back()) return std::numeric_limits<double>::quiet_NaN();
    size_t i = static_cast<size_t>(std::upper_bound(ts.begin(), ts.end(), s) - ts.begin());
    i = std::clamp<size_t>(i, 1, ts.size() - 1);
    const double w = (s - ts[i - 1]) / (ts[i] - ts[i - 1]);
    return (1 - w) * t->values[i - 1] + w * t->values[i];
  };
}

}  // namespace

BuiltinSpec parse_builtin(const std::string& text, const std::string& key, double fallback) {
  BuiltinSpec spec;
  const auto colon = text.find(':');
  spec.name = text.substr(0, colon);
  if (colon == std::string::npos) {
    spec.param = fallback;
    return spec;
  }
  std::string value = text.substr(colon + 1);
  const auto eq = value.find('=');
  if (eq != std::string::npos) {
    if (value.substr(0, eq) != key)
      throw InvalidInput("'" + spec.name + "' takes parameter '" + key + "', got '" +
                         value.substr(0, eq) + "'");
    value = value.substr(eq + 1);
  }
  const std::vector<double> parsed = parse_list(value);
  if (parsed.size() != 1) throw InvalidInput("'" + text + "': expected one parameter");
  spec.param = parsed[0];
  return spec;
}

std::function<double(double)> make_hamiltonian(const std::string& text) {
  const std::string name = head(text);
  if (!is_builtin(name, {"const", "exp", "affine", "inverse-square"}))
    return interpolant(read_samples(text));

  if (name == "const") {
    const double c = parse_builtin(text, "c", 1).param;
    if (!(c > 0)) throw InvalidInput("const Hamiltonian needs c > 0");
    return [c](double) { return c; };
  }
  if (name == "exp") {
    const double k = parse_builtin(text, "k", 1).param;
    return [k](double t) { return std::exp(k * t); };
  }
  if (name == "affine") {
    const double b = parse_builtin(text, "b", 1).param;
    return [b](double t) { return 1 + b * t; };
  }
  const double c = parse_builtin(text, "c", 0.25).param;
  return [c](double t) { return 1 / ((1 + c * t) * (1 + c * t)); };
}

DiracPotential make_potential(const std::string& text, double horizon) {
  const std::string name = head(text);
  if (!is_builtin(name, {"const", "decay"})) {
    const SampleTable table = read_samples(text);
    return DiracPotential::sampled(table.ts, table.values);
  }
  if (name == "const") {
    const double c = parse_builtin(text, "c", 1).param;
    return DiracPotential::smooth([c](double) { return c; }, horizon,
                                  [c](double t) { return c * t; });
  }
  const double k = text == "decay:1/(1+t)" ? 1.0 : parse_builtin(text, "k", 1).param;
  return DiracPotential::smooth([k](double t) { return k / (1 + t); }, horizon,
                                [k](double t) { return k * std::log1p(t); });
}

StepHeights<double> geometric_heights(double a, Index n_max) {
  if (!(a > 0)) throw InvalidInput("geometric ratio must be positive");
  if (n_max < 0) throw InvalidInput("geometric: negative length");
  Vector<double> h(n_max + 1);
  h[0] = 1;
  for (Index n = 1; n <= n_max; ++n) h[n] = h[n - 1] * a;
  return StepHeights<double>(h);
}

}  // namespace canspec
