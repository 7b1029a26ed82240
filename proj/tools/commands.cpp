#include "commands.hpp"

#include "canspec/builtins.hpp"
#include "canspec/direct_problem.hpp"
#include "canspec/io.hpp"
#include "canspec/measure.hpp"
#include "canspec/systems.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>

namespace canspec::cli {

using json = nlohmann::ordered_json;

namespace {

json to_json(const Vector<double>& v) {
  json a = json::array();
  for (Index i = 0; i < v.size(); ++i) a.push_back(std::isfinite(v[i]) ? json(v[i]) : json(nullptr));
  return a;
}

json to_json(const std::vector<double>& v) {
  return to_json(Vector<double>(Eigen::Map<const Vector<double>>(v.data(), static_cast<Index>(v.size()))));
}

json to_json(const PositivityReport& p) {
  json j;
  j["valid"] = p.valid();
  j["first_failure"] = p.first_failure ? json(*p.first_failure) : json(nullptr);
  j["valid_through"] = p.valid_through;
  return j;
}

void emit_json(const json& j, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << j.dump(2) << '\n';
    return;
  }
  const std::string resolved = resolve_output_path(path);
  std::ofstream os(resolved);
  if (!os) throw InvalidInput("cannot open " + resolved + " for writing");
  os << j.dump(2) << '\n';
}

void emit_csv(const std::vector<std::string>& header, const std::vector<Vector<double>>& cols,
              const std::string& path, std::ostream& out) {
  if (path.empty())
    write_csv(out, header, cols);
  else
    write_csv(path, header, cols);
}

template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e);
  }
}

Vector<double> to_vector(const std::vector<double>& v) {
  Vector<double> out(static_cast<Index>(v.size()));
  for (size_t i = 0; i < v.size(); ++i) out[static_cast<Index>(i)] = v[i];
  return out;
}

StepHeights<double> load_heights(const RecoverJob& job) {
  const int sources = !job.heights.empty() + !job.file.empty() + !job.geometric.empty();
  if (sources != 1) throw InvalidInput("give exactly one of --heights, --file, --geometric");
  if (!job.heights.empty()) return StepHeights<double>(to_vector(parse_list(job.heights)));
  if (!job.geometric.empty()) {
    const double a = parse_builtin("geometric:" + job.geometric, "a", 0).param;
    return geometric_heights(a, job.n);
  }
  std::ifstream is(job.file);
  if (!is) throw InvalidInput("cannot read " + job.file);
  std::vector<double> hs;
  std::string token;
  while (is >> token) {
    try {
      hs.push_back(std::stod(token));
    } catch (const std::exception&) {
      throw InvalidInput(job.file + ": not a number: '" + token + "'");
    }
  }
  if (hs.empty()) throw InvalidInput(job.file + ": no heights");
  return StepHeights<double>(to_vector(hs));
}

Vector<double> parse_grid(const std::string& text, double lo, double hi, double spacing) {
  if (!text.empty()) {
    const std::vector<double> g = parse_list(text);
    if (g.size() != 3) throw InvalidInput("--grid expects lo,hi,spacing");
    lo = g[0], hi = g[1], spacing = g[2];
  }
  if (!(hi > lo) || !(spacing > 0)) throw InvalidInput("--grid needs lo < hi and spacing > 0");
  return uniform_grid(lo, hi, spacing);
}

SpectralMeasure lebesgue_plus_atom(double mass) {
  SpectralMeasure m;
  m.density = [](double) { return 1.0; };
  if (mass != 0) m.atoms.push_back({0.0, mass});
  return m;
}

}  // namespace

// ---------------------------------------------------------------------------

int exit_code(const std::exception& e) {
  if (dynamic_cast<const NotPositiveDefinite*>(&e)) return kPositivityFailure;
  if (dynamic_cast<const QuadratureFailure*>(&e)) return kQuadratureFailure;
  return kInputError;
}

int run_recover(const RecoverJob& job, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (job.route != "verblunsky" && job.route != "moments" && job.route != "both")
      throw InvalidInput("--route must be verblunsky, moments or both");
    const StepHeights<double> h = load_heights(job);
    const RecoveryReport<double> report = cross_validate(h, job.tol);

    json j;
    j["heights"] = to_json(h.values);
    PositivityReport positivity = report.positivity;
    if (job.route != "moments") j["alphas"] = to_json(report.alphas.alphas);
    if (job.route == "verblunsky") {
      j["moments"] = to_json(report.moments_via_alphas.values);
      positivity = check_positive_definite(report.moments_via_alphas);
    } else {
      j["moments"] = to_json(report.moments.values);
    }
    if (job.route == "both") {
      j["moments_via_alphas"] = to_json(report.moments_via_alphas.values);
      j["max_cross_error"] = std::isfinite(report.max_cross_error) ? json(report.max_cross_error)
                                                                   : json(nullptr);
      j["height_roundtrip_error"] = report.height_roundtrip_error;
      j["consistent"] = report.consistent;
    }
    j["positivity"] = to_json(positivity);
    emit_json(j, job.output, out);

    if (!positivity.valid()) {
      err << "error: recovered moments fail the Toeplitz positivity test at order "
          << *positivity.first_failure << '\n';
      return int(kPositivityFailure);
    }
    if (job.route == "both" && !report.consistent)
      err << "warning: routes disagree by " << report.max_cross_error << '\n';
    return int(kOk);
  });
}

int run_periodize(const PeriodizeJob& job, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!(job.T > 0) || job.N < 1) throw InvalidInput("--T must be positive and --N at least 1");
    const StepHamiltonian H = periodize(make_hamiltonian(job.h11), job.T, job.N);
    const RecoveryReport<double> report = cross_validate(H.heights);

    if (!job.heights_out.empty()) {
      Vector<double> n(job.N), t(job.N);
      for (Index k = 0; k < job.N; ++k) n[k] = double(k), t[k] = double(k) * job.T;
      write_csv(job.heights_out, {"n", "t", "h11"}, {n, t, H.heights.values});
    }
    if (!job.moments_out.empty() && report.moments.size() > 0) {
      Vector<double> n(report.moments.size());
      for (Index k = 0; k < n.size(); ++k) n[k] = double(k);
      write_csv(job.moments_out, {"n", "c"}, {n, report.moments.values});
    }

    json j;
    j["h11"] = job.h11;
    j["T"] = job.T;
    j["N"] = job.N;
    j["line_period"] = std::numbers::pi / job.T;
    j["heights"] = to_json(H.heights.values);
    j["alphas"] = to_json(report.alphas.alphas);
    j["moments"] = to_json(report.moments.values);
    j["max_cross_error"] =
        std::isfinite(report.max_cross_error) ? json(report.max_cross_error) : json(nullptr);
    j["positivity"] = to_json(report.positivity);
    emit_json(j, job.output, out);

    if (!report.positivity.valid()) {
      err << "error: recovered moments fail the Toeplitz positivity test\n";
      return int(kPositivityFailure);
    }
    return int(kOk);
  });
}

int run_density(const DensityJob& job, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!job.expgrowth_Ts.empty()) {
      const std::vector<double> Ts = parse_list(job.expgrowth_Ts);
      const Vector<double> xs = parse_grid(job.grid, -3, 3, 0.005);
      std::vector<std::string> header{"x"};
      std::vector<Vector<double>> cols{xs};
      for (double T : Ts) {
        header.push_back("T=" + format_double(T));
        cols.push_back(expgrowth_family(T).sample(xs));
      }
      if (job.compare == "expgrowth-printed")
        for (double T : Ts) {
          Vector<double> w(xs.size());
          for (Index i = 0; i < xs.size(); ++i) w[i] = expgrowth_printed_density(T, xs[i]);
          header.push_back("printed_T=" + format_double(T));
          cols.push_back(w);
        }
      header.push_back("limit");
      cols.push_back(expgrowth_limit().sample(xs));
      emit_csv(header, cols, job.output, out);
      return int(kOk);
    }

    const int sources = !job.moments.empty() + !job.heights.empty() + !job.alphas.empty() +
                        !job.h11.empty() + job.geronimus.has_value();
    if (sources != 1)
      throw InvalidInput(
          "give exactly one of --moments, --heights, --alphas, --h11, --geronimus, --expgrowth");
    if (!(job.T > 0) || job.N < 1) throw InvalidInput("--T must be positive and --N at least 1");

    MomentSequence<double> c;
    if (!job.moments.empty()) {
      c = MomentSequence<double>(to_vector(parse_list(job.moments)));
    } else if (!job.heights.empty()) {
      c = recover_moments(StepHeights<double>(to_vector(parse_list(job.heights))));
    } else if (!job.alphas.empty()) {
      c = moments_from_verblunsky(VerblunskySequence<double>(to_vector(parse_list(job.alphas))));
    } else if (!job.h11.empty()) {
      c = recover_moments(periodize(make_hamiltonian(job.h11), job.T, job.N).heights);
    } else {
      c = moments_from_verblunsky(
          VerblunskySequence<double>(Vector<double>::Constant(job.N, *job.geronimus)));
    }
    if (c.size() == 0) throw InvalidInput("no moments");
    const PositivityReport positivity = check_positive_definite(c);
    if (!positivity.valid())
      err << "warning: moments fail the Toeplitz positivity test at order "
          << *positivity.first_failure << '\n';

    const Index terms = job.terms < 0 ? c.size() - 1 : job.terms;
    const double P = std::numbers::pi / job.T;
    auto place = [&](const SpectralMeasure& circle) {
      return job.line ? rescale_to_line(circle, P) : circle;
    };
    const Vector<double> xs = job.line ? parse_grid(job.grid, -P / 2, P / 2, P / 1000)
                                       : parse_grid(job.grid, 0, 2 * std::numbers::pi,
                                                    2 * std::numbers::pi / 1000);

    std::vector<std::string> header{"x", "w"};
    std::vector<Vector<double>> cols{xs, place(cosine_partial_sum(c, terms)).sample(xs)};

    if (!job.compare.empty()) {
      SpectralMeasure reference;
      if (job.compare == "one-minus-cos") {
        reference = cosine_partial_sum(MomentSequence<double>(make_vector({1.0, -0.5})), 1);
      } else if (job.compare == "geronimus") {
        if (!job.geronimus) throw InvalidInput("--compare geronimus needs --geronimus alpha");
        reference = geronimus_measure(*job.geronimus);
      } else if (job.compare.rfind("lebesgue-atom:", 0) == 0) {
        const double mass = parse_builtin(job.compare, "m", 0).param;
        const MomentSequence<double> d = periodize_measure(lebesgue_plus_atom(mass), P, terms);
        reference = cosine_partial_sum(d, terms);
      } else {
        throw InvalidInput("unknown --compare '" + job.compare + "'");
      }
      header.push_back(job.compare.substr(0, job.compare.find(':')));
      cols.push_back(place(reference).sample(xs));
    }
    emit_csv(header, cols, job.output, out);

    if (!job.atoms_out.empty()) {
      if (!job.geronimus) throw InvalidInput("--atoms-out needs a closed-form source (--geronimus)");
      const SpectralMeasure m = place(geronimus_measure(*job.geronimus));
      Vector<double> loc(static_cast<Index>(m.atoms.size())), mass(loc.size());
      for (size_t k = 0; k < m.atoms.size(); ++k)
        loc[Index(k)] = m.atoms[k].location, mass[Index(k)] = m.atoms[k].mass;
      write_csv(job.atoms_out, {"location", "mass"}, {loc, mass});
    }
    return int(kOk);
  });
}

int run_converge(const ConvergeJob& job, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const std::vector<double> Ts = parse_list(job.Ts);
    const Vector<double> xs = parse_grid(job.grid, -20, 20, 0.01);
    if (!(job.a > 0)) throw InvalidInput("--a must be positive");
    if (job.dt < 0) throw InvalidInput("--dt must be positive");
    if (job.frame != "dirac" && job.frame != "canonical")
      throw InvalidInput("--frame must be dirac or canonical");

    const double horizon = job.a + *std::max_element(Ts.begin(), Ts.end());
    const DiracPotential f = make_potential(job.f, horizon);
    ConvergenceOptions opts;
    opts.dt = job.dt;
    opts.frame = job.frame == "dirac" ? Frame::Dirac : Frame::Canonical;
    opts.tail_tol = job.tail_tol;
    const std::vector<SincKernel> phis = default_sinc_test_set(job.a);
    const ConvergenceTable table = convergence_experiment(f, job.a, Ts, xs, phis, opts);

    json j;
    j["f"] = job.f;
    j["a"] = job.a;
    j["dt"] = job.dt > 0 ? job.dt : 1e-3 * job.a;
    j["frame"] = job.frame;
    j["grid"] = {xs[0], xs[xs.size() - 1], xs.size()};
    json kernels = json::array();
    for (const SincKernel& k : phis) kernels.push_back({{"b", k.b}, {"lambda", k.lambda}});
    j["kernels"] = kernels;
    j["reference_pw_norms"] = to_json(table.reference_pw_norms);
    json rows = json::array();
    for (const ConvergenceRow& r : table.rows)
      rows.push_back({{"T", r.T},
                      {"sup_weight_diff", r.sup_weight_diff},
                      {"pw_norms", to_json(r.pw_norms)},
                      {"pw_diffs", to_json(r.pw_diffs)}});
    j["rows"] = rows;
    j["weight_strictly_decreasing"] = table.weight_strictly_decreasing();
    json mono = json::array();
    for (size_t k = 0; k < phis.size(); ++k) mono.push_back(table.pw_strictly_decreasing(k));
    j["pw_strictly_decreasing"] = mono;
    emit_json(j, job.output, out);

    if (!job.csv.empty()) {
      const Index R = static_cast<Index>(table.rows.size());
      std::vector<std::string> header{"T", "sup_weight_diff"};
      std::vector<Vector<double>> cols(2 + phis.size(), Vector<double>(R));
      for (size_t k = 0; k < phis.size(); ++k) header.push_back("pw_diff_" + std::to_string(k));
      for (Index r = 0; r < R; ++r) {
        const ConvergenceRow& row = table.rows[size_t(r)];
        cols[0][r] = row.T;
        cols[1][r] = row.sup_weight_diff;
        for (size_t k = 0; k < phis.size(); ++k) cols[2 + k][r] = row.pw_diffs[k];
      }
      write_csv(job.csv, header, cols);
    }
    return int(kOk);
  });
}

}  // namespace canspec::cli
