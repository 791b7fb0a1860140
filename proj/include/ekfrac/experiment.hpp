#pragma once

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "ekfrac/bagley_torvik.hpp"
#include "ekfrac/csv.hpp"
#include "ekfrac/oscillator.hpp"
#include "ekfrac/relax.hpp"

namespace ekfrac {

enum class Model { Relaxation, Oscillator, BagleyTorvik };
enum class ForcingKind { Zero, Affine };

struct OutputSet {
  bool trajectory = true;
  bool decay_rate = false;
  bool diagnostics = false;
};

/// One experiment: a model, parameter sweep lists, a grid, and the outputs
/// to emit per parameter combination.
struct ExperimentSpec {
  std::string name = "experiment";
  Model model = Model::Relaxation;
  std::vector<double> alpha{1.0};
  std::vector<double> beta{0.0};     // Relaxation only
  std::vector<double> lambda{1.0};
  std::vector<double> eta{0.0};      // Oscillator only
  GridPolicy grid;
  OutputSet outputs;
  double u0 = 1.0, v0 = 1.0;         // Oscillator initial data
  double A = 1.0, B = 0.0, C = 0.0;  // Bagley-Torvik
  double y0 = 0.0, y0_prime = 0.0;
  ForcingKind forcing = ForcingKind::Zero;
  double f0 = 0.0, f1 = 0.0;
  bool decay_summary = false;        // per-beta mean of the tail decay rate
  double tail_fraction = 0.2;

  void validate() const {
    grid.validate();
    if (name.empty()) throw ValidationError("experiment: name must not be empty");
    if (alpha.empty() || beta.empty() || lambda.empty() || eta.empty())
      throw ValidationError("experiment: sweep lists must not be empty");
    switch (model) {
      case Model::Relaxation:
        for (double a : alpha)
          for (double b : beta)
            for (double l : lambda) RelaxParams{a, b, l, 0.0}.validate();
        break;
      case Model::Oscillator:
        for (double a : alpha)
          for (double l : lambda)
            for (double e : eta) OscParams{a, l, e}.validate();
        break;
      case Model::BagleyTorvik:
        BtParams{A, B, C, y0, y0_prime, {}}.validate();
        break;
    }
    if (decay_summary && model != Model::Relaxation)
      throw ValidationError("experiment: decay_summary applies to the relaxation model");
    if (!(tail_fraction > 0.0 && tail_fraction <= 1.0))
      throw ValidationError("experiment: tail_fraction must be in (0,1]");
  }
};

struct ManifestEntry {
  std::string file;
  std::string kind;
  ParamEcho params;
};

struct Manifest {
  std::vector<ManifestEntry> entries;
};

struct RunOptions {
  std::string out_dir = ".";
  int workers = 1;
};

namespace detail {

inline std::string model_name(Model m) {
  switch (m) {
    case Model::Relaxation: return "relaxation";
    case Model::Oscillator: return "oscillator";
    case Model::BagleyTorvik: return "bagley_torvik";
  }
  return "?";
}

inline std::string compact(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

struct Point {
  double alpha = 0, beta = 0, lambda = 0, eta = 0;
  std::string tag;       // filename fragment for swept parameters
  ParamEcho echo;
};

inline std::vector<Point> expand_points(const ExperimentSpec& spec) {
  std::vector<Point> pts;
  auto base_echo = [&](Point& pt) {
    pt.echo.emplace_back("model", model_name(spec.model));
    auto add = [&](const char* k, double v) { pt.echo.emplace_back(k, format_g17(v)); };
    if (spec.model != Model::BagleyTorvik) add("alpha", pt.alpha);
    if (spec.model == Model::Relaxation) add("beta", pt.beta);
    if (spec.model != Model::BagleyTorvik) add("lambda", pt.lambda);
    if (spec.model == Model::Oscillator) {
      add("eta", pt.eta);
      add("u0", spec.u0);
      add("v0", spec.v0);
    }
    if (spec.model == Model::BagleyTorvik) {
      add("A", spec.A);
      add("B", spec.B);
      add("C", spec.C);
      add("y0", spec.y0);
      add("y0_prime", spec.y0_prime);
      add("f0", spec.forcing == ForcingKind::Affine ? spec.f0 : 0.0);
      add("f1", spec.forcing == ForcingKind::Affine ? spec.f1 : 0.0);
    }
    add("h", spec.grid.h);
    add("t_end", spec.grid.t_end);
    pt.echo.emplace_back("mode", spec.grid.mode == GridMode::Adaptive ? "adaptive" : "uniform");
    if (spec.grid.mode == GridMode::Adaptive) {
      add("h_min", spec.grid.h_min);
      add("h_max", spec.grid.h_max);
    }
  };

  auto tag_for = [&](const char* key, double v, const std::vector<double>& sweep) {
    return sweep.size() > 1 ? std::string("_") + key + compact(v) : std::string();
  };

  switch (spec.model) {
    case Model::Relaxation:
      for (double a : spec.alpha)
        for (double b : spec.beta)
          for (double l : spec.lambda) {
            Point pt;
            pt.alpha = a;
            pt.beta = b;
            pt.lambda = l;
            pt.tag = tag_for("alpha", a, spec.alpha) + tag_for("beta", b, spec.beta) +
                     tag_for("lambda", l, spec.lambda);
            base_echo(pt);
            pts.push_back(std::move(pt));
          }
      break;
    case Model::Oscillator:
      for (double a : spec.alpha)
        for (double l : spec.lambda)
          for (double e : spec.eta) {
            Point pt;
            pt.alpha = a;
            pt.lambda = l;
            pt.eta = e;
            pt.tag = tag_for("alpha", a, spec.alpha) + tag_for("lambda", l, spec.lambda) +
                     tag_for("eta", e, spec.eta);
            base_echo(pt);
            pts.push_back(std::move(pt));
          }
      break;
    case Model::BagleyTorvik: {
      Point pt;
      base_echo(pt);
      pts.push_back(std::move(pt));
      break;
    }
  }
  return pts;
}

inline void write_diagnostics_csv(const std::string& path, const DiagnosticsReport& rep,
                                  const ParamEcho& params) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open for writing: " + path);
  for (const auto& [k, v] : params) os << "# " << k << "=" << v << "\n";
  os << "metric,value\n";
  os << "classification," << (rep.classification == Damping::Underdamped ? "underdamped" : "overdamped")
     << "\n";
  os << "zero_crossings," << rep.zero_crossings.size() << "\n";
  os << "deriv_sign_changes," << rep.deriv_sign_changes.size() << "\n";
  for (double t : rep.zero_crossings) os << "zero_crossing_at," << format_g17(t) << "\n";
  for (double t : rep.deriv_sign_changes) os << "deriv_sign_change_at," << format_g17(t) << "\n";
  if (!os) throw IoError("write failed: " + path);
}

}  // namespace detail

/// Runs every parameter combination, writes one CSV per combination and
/// output kind plus a manifest and a gnuplot script. Deterministic output
/// for a given spec regardless of the worker count.
inline Manifest run_experiment(const ExperimentSpec& spec, const RunOptions& opt) {
  spec.validate();
  const auto points = detail::expand_points(spec);

  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(opt.out_dir, ec);
  if (ec) throw IoError("cannot create output directory: " + opt.out_dir);

  struct PointResult {
    std::vector<ManifestEntry> entries;
    double beta = 0.0;
    double tail_mean = 0.0;
    bool has_tail = false;
  };
  std::vector<PointResult> results(points.size());
  std::vector<std::exception_ptr> errors(points.size());

  auto run_point = [&](std::size_t idx) {
    const auto& pt = points[idx];
    PointResult& res = results[idx];
    const std::string stem = (fs::path(opt.out_dir) / (spec.name + pt.tag)).string();

    Trajectory u;
    switch (spec.model) {
      case Model::Relaxation:
        u = solve_relaxation({pt.alpha, pt.beta, pt.lambda, 0.0}, spec.grid);
        break;
      case Model::Oscillator: {
        OscOptions oo;
        oo.u0 = spec.u0;
        oo.v0 = spec.v0;
        u = solve_oscillator({pt.alpha, pt.lambda, pt.eta}, spec.grid, oo).u;
        break;
      }
      case Model::BagleyTorvik: {
        BtParams bp{spec.A, spec.B, spec.C, spec.y0, spec.y0_prime, {}};
        if (spec.forcing == ForcingKind::Affine) bp.forcing = bt_affine_forcing(spec.f0, spec.f1);
        u = solve_bt(bp, spec.grid);
        break;
      }
    }

    if (spec.outputs.trajectory) {
      ParamEcho echo = pt.echo;
      echo.emplace_back("kind", "trajectory");
      write_trajectory_csv(stem + ".csv", u, echo, false);
      res.entries.push_back({spec.name + pt.tag + ".csv", "trajectory", echo});
    }
    if (spec.outputs.decay_rate) {
      // relaxation reports log|u'/u|, the oscillator reports |u'/u|
      Trajectory rate;
      if (spec.model == Model::Relaxation) {
        rate = decay_rate(u);
      } else {
        rate = classify_trajectory(u).decay_rate;
      }
      ParamEcho echo = pt.echo;
      echo.emplace_back("kind", spec.model == Model::Relaxation ? "log_decay_rate" : "decay_rate");
      write_trajectory_csv(stem + "_decay.csv", rate, echo, false);
      res.entries.push_back({spec.name + pt.tag + "_decay.csv", "decay_rate", echo});
      if (spec.decay_summary && !rate.empty()) {
        const double t_lo = (1.0 - spec.tail_fraction) * spec.grid.t_end;
        double sum = 0.0;
        std::size_t n = 0;
        for (std::size_t i = 0; i < rate.size(); ++i)
          if (rate.times[i] >= t_lo) {
            sum += rate.values[i];
            ++n;
          }
        if (n > 0) {
          res.beta = pt.beta;
          res.tail_mean = sum / static_cast<double>(n);
          res.has_tail = true;
        }
      }
    }
    if (spec.outputs.diagnostics) {
      DiagnosticsReport rep = classify_trajectory(u);
      std::string meta;
      for (const auto& [k, v] : pt.echo) meta += (meta.empty() ? "" : ";") + k + "=" + v;
      rep.metadata = meta;
      ParamEcho echo = pt.echo;
      echo.emplace_back("kind", "diagnostics");
      detail::write_diagnostics_csv(stem + "_diag.csv", rep, echo);
      res.entries.push_back({spec.name + pt.tag + "_diag.csv", "diagnostics", echo});
    }
  };

  const int workers = std::max(1, std::min<int>(opt.workers, static_cast<int>(points.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < points.size(); ++i) {
      try {
        run_point(i);
      } catch (...) {
        errors[i] = std::current_exception();
        break;
      }
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= points.size()) return;
          try {
            run_point(i);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  Manifest manifest;
  for (auto& res : results)
    for (auto& entry : res.entries) manifest.entries.push_back(std::move(entry));

  if (spec.decay_summary) {
    std::vector<std::vector<double>> rows;
    for (const auto& res : results)
      if (res.has_tail) rows.push_back({res.beta, res.tail_mean});
    std::sort(rows.begin(), rows.end());
    ParamEcho echo{{"model", detail::model_name(spec.model)},
                   {"kind", "decay_summary"},
                   {"tail_fraction", format_g17(spec.tail_fraction)}};
    const std::string file = spec.name + "_summary.csv";
    write_table_csv((fs::path(opt.out_dir) / file).string(), "beta,mean_tail_log_decay_rate", rows, echo);
    manifest.entries.push_back({file, "decay_summary", echo});
  }

  // gnuplot companion; plotting is optional output, never a dependency
  {
    std::ofstream os(fs::path(opt.out_dir) / (spec.name + ".gp"), std::ios::binary);
    if (!os) throw IoError("cannot write gnuplot script");
    os << "set datafile separator ','\nset key outside\nplot \\\n";
    bool first = true;
    for (const auto& entry : manifest.entries) {
      if (entry.kind != "trajectory" && entry.kind != "decay_rate") continue;
      if (!first) os << ", \\\n";
      os << "  '" << entry.file << "' using 1:2 with lines title '" << entry.file << "'";
      first = false;
    }
    os << "\n";
  }

  std::sort(manifest.entries.begin(), manifest.entries.end(),
            [](const ManifestEntry& a, const ManifestEntry& b) { return a.file < b.file; });
  {
    std::ofstream os(fs::path(opt.out_dir) / "manifest.csv", std::ios::binary);
    if (!os) throw IoError("cannot write manifest");
    os << "file,kind,params\n";
    for (const auto& entry : manifest.entries) {
      std::string meta;
      for (const auto& [k, v] : entry.params) meta += (meta.empty() ? "" : ";") + k + "=" + v;
      os << entry.file << "," << entry.kind << "," << meta << "\n";
    }
    if (!os) throw IoError("write failed: manifest");
  }
  return manifest;
}

enum class OracleKind { ClosedFormAlpha1, SaigoKilbas, Manufactured };

inline std::optional<OracleKind> oracle_from_name(std::string name) {
  for (auto& c : name) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (name == "closed_form_alpha1" || name == "closed-form-alpha1") return OracleKind::ClosedFormAlpha1;
  if (name == "saigo_kilbas" || name == "saigo-kilbas") return OracleKind::SaigoKilbas;
  if (name == "manufactured") return OracleKind::Manufactured;
  return std::nullopt;
}

struct CompareReport {
  double max_abs = 0.0;
  double rms = 0.0;
  bool pass = false;
  std::size_t nodes = 0;
};

/// Compares CSV trajectory data against a named analytic oracle, using the
/// parameter echo embedded in the file. Optionally writes a per-node
/// residual CSV.
inline CompareReport compare_to_oracle(const CsvData& data, OracleKind oracle, double tol,
                                       const std::string& residual_path = "") {
  if (!(tol > 0.0)) throw ValidationError("compare: tol must be positive");
  if (data.traj.empty()) throw ValidationError("compare: zero-length trajectory");

  auto need = [&](const char* key) {
    const auto v = find_param(data, key);
    if (!v) throw ValidationError(std::string("compare: csv lacks parameter '") + key + "'");
    return *v;
  };

  std::function<double(double)> f;
  switch (oracle) {
    case OracleKind::ClosedFormAlpha1: {
      const double beta = need("beta"), lam = need("lambda");
      f = [beta, lam](double t) { return closed_form_alpha1(beta, lam, t); };
      break;
    }
    case OracleKind::SaigoKilbas: {
      const double alpha = need("alpha"), beta = need("beta"), lam = need("lambda");
      f = [alpha, beta, lam](double t) { return saigo_kilbas_ml({alpha, beta, lam, t}).value; };
      break;
    }
    case OracleKind::Manufactured: {
      const double y0 = need("y0"), y0p = need("y0_prime");
      f = [y0, y0p](double t) { return y0 + y0p * t; };
      break;
    }
  }

  CompareReport rep;
  rep.nodes = data.traj.size();
  std::vector<std::vector<double>> rows;
  rows.reserve(data.traj.size());
  double sq = 0.0;
  for (std::size_t i = 0; i < data.traj.size(); ++i) {
    const double t = data.traj.times[i];
    const double num = data.traj.values[i];
    const double ora = f(t);
    if (!std::isfinite(ora)) throw SolverError("compare: oracle evaluation failed at t = " + format_g17(t));
    const double r = num - ora;
    rep.max_abs = std::max(rep.max_abs, std::fabs(r));
    sq += r * r;
    if (!residual_path.empty()) rows.push_back({t, num, ora, r});
  }
  rep.rms = std::sqrt(sq / static_cast<double>(data.traj.size()));
  rep.pass = rep.max_abs <= tol;
  if (!residual_path.empty())
    write_table_csv(residual_path, "t,numeric,oracle,residual", rows, data.params);
  return rep;
}

// ---------------------------------------------------------------------------
// Presets mirroring the experiment configurations of the study
// ---------------------------------------------------------------------------

inline std::vector<std::string> preset_names() {
  return {"fig1", "fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "fig8", "fig9", "bt"};
}

inline ExperimentSpec make_preset(const std::string& name) {
  ExperimentSpec s;
  s.name = name;
  if (name == "fig1") {
    s.model = Model::Relaxation;
    s.alpha = {1.0, 0.9};
    s.beta = {0.5};
    s.lambda = {1.0};
    s.grid.h = 1e-3;
    s.grid.t_end = 5.0;
  } else if (name == "fig2") {
    s.model = Model::Relaxation;
    s.alpha = {0.9};
    s.beta = {-0.3, 0.0, 0.1, 0.5};
    s.lambda = {1.0};
    s.grid.h = 1e-3;
    s.grid.t_end = 5.0;
  } else if (name == "fig3") {
    s.model = Model::Relaxation;
    s.alpha = {0.9};
    s.beta.clear();
    for (int k = 0; k <= 10; ++k) s.beta.push_back(-0.6 + 0.05 * k);
    s.lambda = {1.0};
    s.grid.h = 0.1;
    s.grid.t_end = 500.0;
    s.outputs.trajectory = false;
    s.outputs.decay_rate = true;
    s.decay_summary = true;
  } else if (name == "fig4" || name == "fig5" || name == "fig6") {
    s.model = Model::Oscillator;
    s.alpha = {1.0};
    s.lambda = {1.0, 2.0, 3.0};
    s.eta = {0.5};
    s.grid.h = 0.1;
    s.grid.t_end = name == "fig4" ? 40.0 : 10.0;
    if (name == "fig6") {
      s.outputs.trajectory = false;
      s.outputs.decay_rate = true;
    }
  } else if (name == "fig7") {
    s.model = Model::Oscillator;
    s.alpha = {0.9};
    s.lambda = {5.0};
    s.eta = {0.5};
    s.grid.h = 0.1;
    s.grid.t_end = 150.0;
    s.outputs.decay_rate = true;
  } else if (name == "fig8") {
    s.model = Model::Oscillator;
    s.alpha = {1.0, 0.9, 0.7, 0.5};
    s.lambda = {5.0, 10.0};
    s.eta = {0.5};
    s.grid.h = 1e-3;
    s.grid.t_end = 5.0;
    s.outputs.diagnostics = true;
  } else if (name == "fig9") {
    s.model = Model::Oscillator;
    s.alpha = {1.0, 0.8, 0.6};
    s.lambda = {10.0};
    s.eta = {0.5, 1.0, 1.5};
    s.grid.h = 1e-3;
    s.grid.t_end = 5.0;
    s.outputs.diagnostics = true;
  } else if (name == "bt") {
    s.model = Model::BagleyTorvik;
    s.A = 1.0;
    s.B = 1.0;
    s.C = 1.0;
    s.y0 = 1.0;
    s.y0_prime = 1.0;
    s.forcing = ForcingKind::Affine;
    s.f0 = 1.0;
    s.f1 = 1.0;
    s.grid.h = 1e-3;
    s.grid.t_end = 5.0;
  } else {
    throw ValidationError("unknown preset: " + name);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Flat key = value spec files, sweep values comma-separated
// ---------------------------------------------------------------------------

namespace detail {

inline std::string trim(std::string s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.pop_back();
  return s;
}

inline std::vector<double> parse_list(const std::string& v, const std::string& key) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    cell = trim(cell);
    if (cell.empty()) continue;
    try {
      out.push_back(std::stod(cell));
    } catch (...) {
      throw ValidationError("spec: bad number '" + cell + "' for key " + key);
    }
  }
  if (out.empty()) throw ValidationError("spec: empty value list for key " + key);
  return out;
}

inline double parse_one(const std::string& v, const std::string& key) {
  const auto list = parse_list(v, key);
  if (list.size() != 1) throw ValidationError("spec: key " + key + " takes a single value");
  return list.front();
}

}  // namespace detail

inline ExperimentSpec parse_spec_text(const std::string& text) {
  ExperimentSpec s;
  s.outputs.trajectory = true;
  std::stringstream ss(text);
  std::string line;
  bool model_seen = false;
  while (std::getline(ss, line)) {
    line = detail::trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ValidationError("spec: expected 'key = value': " + line);
    std::string key = detail::trim(line.substr(0, eq));
    std::string val = detail::trim(line.substr(eq + 1));
    for (auto& c : key) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));

    if (key == "model") {
      if (val == "relaxation") s.model = Model::Relaxation;
      else if (val == "oscillator") s.model = Model::Oscillator;
      else if (val == "bagley_torvik") s.model = Model::BagleyTorvik;
      else throw ValidationError("spec: unknown model '" + val + "'");
      model_seen = true;
    } else if (key == "name") {
      s.name = val;
    } else if (key == "alpha") {
      s.alpha = detail::parse_list(val, key);
    } else if (key == "beta") {
      s.beta = detail::parse_list(val, key);
    } else if (key == "lambda") {
      s.lambda = detail::parse_list(val, key);
    } else if (key == "eta") {
      s.eta = detail::parse_list(val, key);
    } else if (key == "h") {
      s.grid.h = detail::parse_one(val, key);
    } else if (key == "t_end") {
      s.grid.t_end = detail::parse_one(val, key);
    } else if (key == "h_min") {
      s.grid.h_min = detail::parse_one(val, key);
    } else if (key == "h_max") {
      s.grid.h_max = detail::parse_one(val, key);
    } else if (key == "n_warmup") {
      s.grid.n_warmup = static_cast<int>(detail::parse_one(val, key));
    } else if (key == "mode") {
      if (val == "uniform") s.grid.mode = GridMode::Uniform;
      else if (val == "adaptive") s.grid.mode = GridMode::Adaptive;
      else throw ValidationError("spec: unknown mode '" + val + "'");
    } else if (key == "outputs") {
      s.outputs = {};
      std::stringstream os(val);
      std::string kind;
      while (std::getline(os, kind, ',')) {
        kind = detail::trim(kind);
        if (kind == "trajectory") s.outputs.trajectory = true;
        else if (kind == "decay_rate") s.outputs.decay_rate = true;
        else if (kind == "diagnostics") s.outputs.diagnostics = true;
        else throw ValidationError("spec: unknown output kind '" + kind + "'");
      }
    } else if (key == "u0") {
      s.u0 = detail::parse_one(val, key);
    } else if (key == "v0") {
      s.v0 = detail::parse_one(val, key);
    } else if (key == "a") {
      s.A = detail::parse_one(val, key);
    } else if (key == "b") {
      s.B = detail::parse_one(val, key);
    } else if (key == "c") {
      s.C = detail::parse_one(val, key);
    } else if (key == "y0") {
      s.y0 = detail::parse_one(val, key);
    } else if (key == "y0_prime") {
      s.y0_prime = detail::parse_one(val, key);
    } else if (key == "forcing") {
      if (val == "zero") s.forcing = ForcingKind::Zero;
      else if (val == "affine") s.forcing = ForcingKind::Affine;
      else throw ValidationError("spec: unknown forcing '" + val + "'");
    } else if (key == "f0") {
      s.f0 = detail::parse_one(val, key);
    } else if (key == "f1") {
      s.f1 = detail::parse_one(val, key);
    } else if (key == "decay_summary") {
      s.decay_summary = val == "true" || val == "1";
    } else if (key == "tail_fraction") {
      s.tail_fraction = detail::parse_one(val, key);
    } else {
      throw ValidationError("spec: unknown key '" + key + "'");
    }
  }
  if (!model_seen) throw ValidationError("spec: missing 'model' key");
  s.validate();
  return s;
}

inline ExperimentSpec parse_spec_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw ValidationError("spec: cannot open file " + path);
  std::stringstream buf;
  buf << is.rdbuf();
  return parse_spec_text(buf.str());
}

}  // namespace ekfrac
