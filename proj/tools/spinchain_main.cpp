// Command-line front end: sampling runs, spectral statistics, and TSV/JSON
// artifacts for every figure-scale experiment the library supports.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "spinchain/degeneracy.hpp"
#include "spinchain/entanglement.hpp"
#include "spinchain/free_fermion.hpp"
#include "spinchain/hciz.hpp"
#include "spinchain/io.hpp"
#include "spinchain/parallel.hpp"
#include "spinchain/spectra.hpp"
#include "spinchain/unfolding.hpp"

using json = nlohmann::ordered_json;
using namespace spinchain;

namespace {

constexpr int kSchemaVersion = 1;
constexpr int kExitInvariant = 2;

struct CommonOpts {
  std::string out_dir = ".";
  std::uint64_t seed = 12345;
  int threads = 0;
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("SPINCHAIN_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
    }
  }
  return 12345;
}

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--out", opts.out_dir, "Output directory")->capture_default_str();
  cmd->add_option("--seed", opts.seed, "RNG seed (env SPINCHAIN_SEED supplies the default)");
  cmd->add_option("--threads", opts.threads, "Worker threads (0 = hardware)");
}

int resolve_threads(const CommonOpts& opts) {
  return opts.threads > 0 ? opts.threads : default_thread_count();
}

void write_manifest(const CommonOpts& opts, const std::string& command,
                    const std::vector<std::string>& argv, double wall_seconds) {
  json m;
  m["schema_version"] = kSchemaVersion;
  m["command"] = command;
  m["argv"] = argv;
  m["seed"] = opts.seed;
  m["threads"] = opts.threads;
  m["version"] = "0.1.0";
  m["wall_time_s"] = wall_seconds;
  write_file(opts.out_dir + "/manifest.json", m.dump(2) + "\n");
}

std::vector<double> make_grid(double lo, double hi, int points) {
  std::vector<double> g(points);
  for (int i = 0; i < points; ++i)
    g[i] = points == 1 ? lo : lo + (hi - lo) * i / (points - 1);
  return g;
}

// Spectra of `samples` draws, computed into index-addressed slots so results
// do not depend on scheduling.
std::vector<RealVector> sample_spectra(const EnsembleSpec& spec, int samples, int threads) {
  std::vector<RealVector> out(samples);
  parallel_for(samples, threads,
               [&](std::int64_t s) { out[s] = sampled_eigenvalues(sample(spec, s)); });
  return out;
}

int run_spectra(const CommonOpts& opts, Family family, int n, int samples, int bins,
                double range_lo, double range_hi, bool symmetrize) {
  EnsembleSpec spec{family, n, opts.seed};
  std::vector<RealVector> spectra = sample_spectra(spec, samples, resolve_threads(opts));

  HistogramAccumulator acc({range_lo, range_hi, bins});
  for (const RealVector& w : spectra) acc.add(w);
  Histogram hist = finalize_histogram(acc, symmetrize);
  write_file(opts.out_dir + "/spectra_hist.tsv", histogram_tsv(hist));

  json summary;
  summary["family"] = family_name(family);
  summary["n"] = n;
  summary["samples"] = samples;
  summary["captured_fraction"] = hist.captured_fraction;
  summary["expected_trace_h2"] = expected_trace_h2(spec);
  json moments = json::array();
  for (int m = 1; m <= 6; ++m) {
    KahanSum mean, sq;
    for (const RealVector& w : spectra) {
      double v = trace_moment(w, m);
      mean.add(v);
      sq.add(v * v);
    }
    double mu = mean.value() / samples;
    double var = samples > 1 ? (sq.value() / samples - mu * mu) / (samples - 1) : 0.0;
    json row;
    row["m"] = m;
    row["mean"] = mu;
    row["stderr"] = std::sqrt(std::max(0.0, var));
    moments.push_back(row);
  }
  summary["moments"] = moments;
  write_file(opts.out_dir + "/spectra_summary.json", summary.dump(2) + "\n");
  return 0;
}

int run_charfn(const CommonOpts& opts, Family family, int n, int samples, double t_max,
               double t_step) {
  EnsembleSpec spec{family, n, opts.seed};
  int points = static_cast<int>(std::floor(t_max / t_step + 1e-9)) + 1;
  std::vector<double> grid(points);
  for (int i = 0; i < points; ++i) grid[i] = i * t_step;

  std::vector<CharacteristicCurve> curves(samples);
  parallel_for(samples, resolve_threads(opts), [&](std::int64_t s) {
    curves[s] = characteristic_fn(sampled_eigenvalues(sample(spec, s)), grid);
  });

  std::vector<double> re(points), im(points), gauss(points), bound(points), se(points);
  double worst_violation = -1e300;
  for (int q = 0; q < points; ++q) {
    KahanSum sre, sim;
    for (int s = 0; s < samples; ++s) {
      sre.add(curves[s].values[q].real());
      sim.add(curves[s].values[q].imag());
    }
    Complex mean(sre.value() / samples, sim.value() / samples);
    KahanSum dev;
    for (int s = 0; s < samples; ++s) dev.add(std::norm(curves[s].values[q] - mean));
    re[q] = mean.real();
    im[q] = mean.imag();
    gauss[q] = std::exp(-0.5 * grid[q] * grid[q]);
    bound[q] = grid[q] * grid[q] * (4.0 * std::sqrt(2.0) + 9.0) / std::sqrt(double(n));
    se[q] = samples > 1 ? std::sqrt(dev.value() / (double(samples) * (samples - 1))) : 0.0;
    double violation = std::abs(mean - Complex(gauss[q], 0.0)) - (bound[q] + 3.0 * se[q]);
    worst_violation = std::max(worst_violation, violation);
  }
  write_file(opts.out_dir + "/charfn.tsv",
             curve_tsv({"t", "re_psi", "im_psi", "gaussian", "bound", "stderr"},
                       {grid, re, im, gauss, bound, se}));

  json summary;
  summary["family"] = family_name(family);
  summary["n"] = n;
  summary["samples"] = samples;
  summary["worst_violation"] = worst_violation;
  bool theorem_applies = (family == Family::Generic) && n % 2 == 0 && n >= 4;
  summary["theorem_applies"] = theorem_applies;
  bool ok = !theorem_applies || worst_violation <= 0.0;
  summary["bound_satisfied"] = ok;
  write_file(opts.out_dir + "/charfn_summary.json", summary.dump(2) + "\n");
  return ok ? 0 : kExitInvariant;
}

int run_spacings(const CommonOpts& opts, Family family, int n, int samples,
                 bool drop_zero_spacings) {
  EnsembleSpec spec{family, n, opts.seed};
  std::vector<RealVector> spectra = sample_spectra(spec, samples, resolve_threads(opts));
  UnfoldingMap map = build_unfolding(spectra);
  std::vector<std::vector<double>> unfolded;
  unfolded.reserve(spectra.size());
  for (const RealVector& w : spectra) unfolded.push_back(unfold(map, w));
  SpacingSample spacings = spacing_sample(unfolded, drop_zero_spacings);
  Histogram hist = spacing_histogram(spacings);
  write_file(opts.out_dir + "/spacings_hist.tsv", histogram_tsv(hist));

  std::vector<double> centers(hist.density.size());
  for (size_t j = 0; j < centers.size(); ++j) centers[j] = hist.bin_center(static_cast<int>(j));

  json distances;
  distances["family"] = family_name(family);
  distances["n"] = n;
  distances["samples"] = samples;
  distances["zero_fraction"] =
      static_cast<double>(spacings.zero_count) / static_cast<double>(spacings.total_count);
  distances["dropped_zeros"] = drop_zero_spacings;
  struct Ref {
    const char* name;
    int beta;
    double area, mean;
  };
  for (const Ref& ref : {Ref{"poisson", 0, 1.0, 1.0}, Ref{"goe", 1, 1.0, 1.0},
                         Ref{"gue", 2, 1.0, 1.0}, Ref{"gse_rescaled", 4, 0.5, 2.0},
                         Ref{"gse", 4, 1.0, 1.0}}) {
    std::vector<double> curve = surmise(ref.beta, centers, ref.area, ref.mean);
    distances[std::string("l1_") + ref.name] = l1_distance(hist, curve);
    write_file(opts.out_dir + "/surmise_" + ref.name + ".tsv",
               curve_tsv({"s", "rho"}, {centers, curve}));
  }
  write_file(opts.out_dir + "/spacings_distances.json", distances.dump(2) + "\n");
  return 0;
}

int run_purity(const CommonOpts& opts, Family family, int n, int samples, int l) {
  EnsembleSpec spec{family, n, opts.seed};
  const std::uint64_t dim = 1ULL << n;
  std::vector<std::vector<double>> per_sample(samples);
  parallel_for(samples, resolve_threads(opts), [&](std::int64_t s) {
    EigenSystem es = diagonalize(sample(spec, s).dense(), true);
    per_sample[s] = eigenstate_purities(es, l, n);
  });
  std::vector<double> index(dim), linent(dim);
  for (std::uint64_t k = 0; k < dim; ++k) {
    index[k] = static_cast<double>(k);
    KahanSum acc;
    for (int s = 0; s < samples; ++s) acc.add(1.0 - per_sample[s][k]);
    linent[k] = acc.value() / samples;
  }
  write_file(opts.out_dir + "/linear_entropy.tsv",
             curve_tsv({"k", "linear_entropy"}, {index, linent}));

  json report;
  report["family"] = family_name(family);
  report["n"] = n;
  report["l"] = l;
  report["samples"] = samples;
  bool invariant_family = family == Family::Inv || family == Family::InvLocal ||
                          (family == Family::Heis && !spec.heis_site_dependent);
  bool no_local = !sample(spec, 0).has_local_terms();
  int applicable = 0, violations = 0;
  if (invariant_family && 2 * l < n) {
    json rows = json::array();
    for (int s = 0; s < samples; ++s) {
      BlockPurityReport r = check_block_purity_bound(sample(spec, s), l);
      json row;
      row["sample"] = s;
      row["applicable"] = r.applicable;
      row["average_purity"] = r.average_purity;
      row["lower"] = r.lower;
      row["upper"] = r.upper;
      rows.push_back(row);
      if (r.applicable) {
        ++applicable;
        if (!r.within_bounds) ++violations;
      }
    }
    report["check"] = "block_purity_bound";
    report["per_sample"] = rows;
  } else if (no_local && l == 1) {
    json rows = json::array();
    for (int s = 0; s < samples; ++s) {
      SingleQubitReport r = check_single_qubit_theorem(sample(spec, s));
      json row;
      row["sample"] = s;
      row["applicable"] = r.applicable;
      row["max_deviation"] = r.max_deviation;
      rows.push_back(row);
      if (r.applicable) {
        ++applicable;
        if (r.max_deviation >= 1e-8) ++violations;
      }
    }
    report["check"] = "single_qubit_theorem";
    report["per_sample"] = rows;
  } else {
    report["check"] = "none";
  }
  report["applicable_samples"] = applicable;
  report["violations"] = violations;
  write_file(opts.out_dir + "/purity_report.json", report.dump(2) + "\n");
  return violations == 0 ? 0 : kExitInvariant;
}

int run_jw(const CommonOpts& opts, const std::string& model, int n, double eps, int trend_max) {
  json summary;
  summary["model"] = model;
  summary["n"] = n;
  summary["eps"] = eps;
  const int kDenseCheckBudget = 12;

  RealVector spectrum;
  if (model == "xy-plus-z") {
    ClosedFormSpectrum cf = xy_plus_z_closed_form(n, eps);
    spectrum = cf.values;
    summary["n_is_odd_prime"] = cf.n_is_odd_prime;
    if (!cf.n_is_odd_prime)
      summary["note"] = "closed form extended beyond odd prime n by analyticity";
    if (n <= kDenseCheckBudget) {
      RealVector dense =
          diagonalize(fixed_hamiltonian(FixedKind::EpsXYPlusZ, n, eps).dense(), false).values;
      summary["max_residual_vs_dense"] = (spectrum - dense).cwiseAbs().maxCoeff();
      RealVector merged = cyclic_xy_z_spectrum(n, eps);
      summary["max_residual_sector_merge"] = (merged - dense).cwiseAbs().maxCoeff();
    }
    // convergence trend of the unit-variance empirical CDF toward the normal
    std::vector<double> ns, inv_err;
    for (int m = 3; m <= trend_max; ++m) {
      ns.push_back(m);
      inv_err.push_back(1.0 / xy_plus_z_cdf_error(m, eps, -0.8));
    }
    write_file(opts.out_dir + "/en_trend.tsv",
               curve_tsv({"n", "inv_E_at_-0.8"}, {ns, inv_err}));
  } else if (model == "epsj-z") {
    spectrum = epsj_z_closed_form(n, eps);
    if (n <= kDenseCheckBudget) {
      RealVector dense =
          diagonalize(fixed_hamiltonian(FixedKind::EpsJZ, n, eps).dense(), false).values;
      summary["max_residual_vs_dense"] = (spectrum - dense).cwiseAbs().maxCoeff();
    }
  } else if (model == "random-jw") {
    EnsembleSpec spec{Family::Jw, n, opts.seed};
    SampledHamiltonian h = sample(spec, 0);
    BogoliubovModes modes = bogoliubov_diagonalize(assemble_quadratic_form(h));
    spectrum = reconstruct_spectrum(modes);
    if (n <= kDenseCheckBudget) {
      RealVector dense = diagonalize(h.dense(), false).values;
      summary["max_residual_vs_dense"] = (spectrum - dense).cwiseAbs().maxCoeff();
    }
  } else {
    std::cerr << "unknown jw model: " << model << "\n";
    return 1;
  }
  std::vector<double> idx(spectrum.size()), vals(spectrum.size());
  for (Eigen::Index i = 0; i < spectrum.size(); ++i) {
    idx[i] = static_cast<double>(i);
    vals[i] = spectrum[i];
  }
  write_file(opts.out_dir + "/jw_spectrum.tsv", curve_tsv({"k", "lambda"}, {idx, vals}));
  write_file(opts.out_dir + "/jw_summary.json", summary.dump(2) + "\n");

  if (summary.contains("max_residual_vs_dense") &&
      summary["max_residual_vs_dense"].get<double>() > 1e-8)
    return kExitInvariant;
  return 0;
}

int run_degeneracy(const CommonOpts& opts, Family family, int n, int samples,
                   double threshold) {
  EnsembleSpec spec{family, n, opts.seed};
  CensusRow row = degeneracy_census(spec, samples, threshold);
  std::ostringstream tsv;
  tsv << "# family n samples nondegenerate_fraction\n";
  tsv << family_name(row.family) << '\t' << row.n << '\t' << row.samples << '\t'
      << format_value(row.nondegenerate_fraction) << '\n';
  write_file(opts.out_dir + "/degeneracy_census.tsv", tsv.str());
  return 0;
}

int run_hciz(const CommonOpts& opts, const std::string& curve, double grid_max, int grid_points,
             int mc_samples) {
  if (curve == "normalization") {
    json summary;
    summary["density_constant"] = hciz::density_constant();
    summary["hyperplane_normalization"] = hciz::hyperplane_normalization();
    summary["one_point_at_zero"] = hciz::one_point_n2(0.0);
    summary["two_point_normalization"] = hciz::two_point_normalization();
    write_file(opts.out_dir + "/hciz_summary.json", summary.dump(2) + "\n");
    return 0;
  }
  std::vector<double> grid = make_grid(-grid_max, grid_max, grid_points);
  if (curve == "one-point") {
    std::vector<double> rho = hciz::one_point_n2(grid);
    write_file(opts.out_dir + "/hciz_one_point.tsv", curve_tsv({"lambda", "rho"}, {grid, rho}));
    json summary;
    summary["curve"] = curve;
    summary["rho_at_zero"] = hciz::one_point_n2(0.0);
    if (mc_samples > 0) {
      EnsembleSpec spec{Family::Generic, 2, opts.seed};
      HistogramSpec hs{-grid_max, grid_max, grid_points};
      HistogramAccumulator acc(hs);
      for (int s = 0; s < mc_samples; ++s)
        acc.add(diagonalize(sample(spec, s).dense(), false).values);
      Histogram hist = finalize_histogram(acc, true);
      write_file(opts.out_dir + "/hciz_mc_hist.tsv", histogram_tsv(hist));
      std::vector<double> centers(hs.bins);
      for (int j = 0; j < hs.bins; ++j) centers[j] = hist.bin_center(j);
      summary["mc_samples"] = mc_samples;
      summary["l1_distance"] = l1_distance(hist, hciz::one_point_n2(centers));
    }
    write_file(opts.out_dir + "/hciz_summary.json", summary.dump(2) + "\n");
    return 0;
  }
  if (curve == "two-point") {
    std::vector<double> rho = hciz::two_point_n2(grid);
    write_file(opts.out_dir + "/hciz_two_point.tsv", curve_tsv({"lambda", "rho"}, {grid, rho}));
    json summary;
    summary["curve"] = curve;
    summary["two_point_normalization"] = hciz::two_point_normalization();
    summary["one_point_at_zero"] = hciz::one_point_n2(0.0);
    if (mc_samples > 0) {
      // samples conditioned on an eigenvalue within 0.01 of zero; the
      // conditional distance histogram is scaled to integrate to rho21(0)
      EnsembleSpec spec{Family::Generic, 2, opts.seed};
      HistogramSpec hs{-grid_max, grid_max, grid_points};
      HistogramAccumulator acc(hs);
      int accepted = 0;
      std::uint64_t index = 0;
      while (accepted < mc_samples) {
        RealVector w = diagonalize(sample(spec, index++).dense(), false).values;
        int nearest = 0;
        for (int i = 1; i < 4; ++i)
          if (std::abs(w[i]) < std::abs(w[nearest])) nearest = i;
        if (std::abs(w[nearest]) >= 0.01) continue;
        ++accepted;
        for (int i = 0; i < 4; ++i)
          if (i != nearest) acc.add(w[i] - w[nearest]);
      }
      Histogram hist = finalize_histogram(acc, true);
      double target = hciz::one_point_n2(0.0);
      for (double& d : hist.density) d *= target;
      write_file(opts.out_dir + "/hciz_mc_hist.tsv", histogram_tsv(hist));
      std::vector<double> centers(hs.bins);
      for (int j = 0; j < hs.bins; ++j) centers[j] = hist.bin_center(j);
      std::vector<double> curve_vals = hciz::two_point_n2(centers);
      summary["mc_samples"] = mc_samples;
      summary["l1_distance"] = l1_distance(hist, curve_vals);
    }
    write_file(opts.out_dir + "/hciz_summary.json", summary.dump(2) + "\n");
    return 0;
  }
  std::cerr << "unknown hciz curve: " << curve << "\n";
  return 1;
}

int run_tbasis(const CommonOpts& opts, int n, int l) {
  json summary;
  summary["n"] = n;
  summary["l"] = l;
  double avg = translation_basis_purity(n, l);
  summary["average_purity"] = avg;
  summary["inverse_excess"] = 1.0 / (avg - std::pow(2.0, -l));
  bool ok = true;
  if (l == 1) {
    double closed = 0.5 + 0.5 / n;
    summary["closed_form"] = closed;
    summary["closed_form_deviation"] = std::abs(avg - closed);
    ok = std::abs(avg - closed) < 1e-9;
  }
  write_file(opts.out_dir + "/tbasis.json", summary.dump(2) + "\n");
  return ok ? 0 : kExitInvariant;
}

}  // namespace

int main(int argc, char** argv) {
  // keep the BLAS single-threaded; sample-level parallelism is explicit
  setenv("OPENBLAS_NUM_THREADS", "1", 0);

  std::vector<std::string> raw_args(argv + 1, argv + argc);
  // --manifest FILE replays a recorded invocation
  for (size_t i = 0; i < raw_args.size(); ++i) {
    if (raw_args[i] == "--manifest") {
      if (i + 1 >= raw_args.size()) {
        std::cerr << "--manifest needs a file\n";
        return 1;
      }
      json m = json::parse(read_file(raw_args[i + 1]));
      std::vector<std::string> recorded = m["argv"].get<std::vector<std::string>>();
      std::vector<std::string> extra(raw_args.begin() + i + 2, raw_args.end());
      // flags after the manifest file override their recorded values
      std::vector<std::string> replay;
      for (size_t k = 0; k < recorded.size(); ++k) {
        bool overridden = false;
        if (recorded[k].rfind("--", 0) == 0)
          for (const std::string& e : extra) overridden = overridden || e == recorded[k];
        if (overridden) {
          if (k + 1 < recorded.size() && recorded[k + 1].rfind("--", 0) != 0) ++k;
          continue;
        }
        replay.push_back(recorded[k]);
      }
      replay.insert(replay.end(), extra.begin(), extra.end());
      raw_args = replay;
      break;
    }
  }

  CLI::App app{"Random nearest-neighbour qubit chain spectral statistics"};
  app.require_subcommand(1);

  CommonOpts opts;
  opts.seed = default_seed();

  std::string family_str = "generic";
  int n = 8, samples = 16, bins = 240, l = 1, grid_points = 121, mc_samples = 0;
  int trend_max = 21;
  double range_lo = -3.0, range_hi = 3.0, t_max = 3.0, t_step = 0.1, eps = 1.0;
  double threshold = 1e-10, grid_max = 3.0;
  bool symmetrize = false, drop_zeros = false;
  std::string jw_model = "xy-plus-z", hciz_curve = "one-point";

  auto add_family = [&](CLI::App* cmd) {
    cmd->add_option("--family", family_str, "generic|uniform|local|inv|inv-local|jw|heis")
        ->capture_default_str();
    cmd->add_option("--n", n, "chain length")->capture_default_str();
    cmd->add_option("--samples", samples, "sample count")->capture_default_str();
  };

  CLI::App* c_spectra = app.add_subcommand("spectra", "Pooled spectral histogram and moments");
  add_family(c_spectra);
  c_spectra->add_option("--bins", bins)->capture_default_str();
  c_spectra->add_option("--range-lo", range_lo)->capture_default_str();
  c_spectra->add_option("--range-hi", range_hi)->capture_default_str();
  c_spectra->add_flag("--symmetrize", symmetrize, "average bins symmetrically about zero");
  add_common(c_spectra, opts);

  CLI::App* c_charfn = app.add_subcommand("charfn", "Ensemble characteristic function");
  add_family(c_charfn);
  c_charfn->add_option("--t-max", t_max)->capture_default_str();
  c_charfn->add_option("--t-step", t_step)->capture_default_str();
  add_common(c_charfn, opts);

  CLI::App* c_spacings = app.add_subcommand("spacings", "Unfolded level-spacing statistics");
  add_family(c_spacings);
  c_spacings->add_flag("--drop-zero-spacings", drop_zeros);
  add_common(c_spacings, opts);

  CLI::App* c_purity = app.add_subcommand("purity", "Reduced eigenstate purity runs");
  add_family(c_purity);
  c_purity->add_option("--l", l, "block length")->capture_default_str();
  add_common(c_purity, opts);

  CLI::App* c_jw = app.add_subcommand("jw", "Jordan-Wigner solvable chains");
  c_jw->add_option("--model", jw_model, "xy-plus-z|epsj-z|random-jw")->capture_default_str();
  c_jw->add_option("--n", n)->capture_default_str();
  c_jw->add_option("--eps", eps)->capture_default_str();
  c_jw->add_option("--trend-max", trend_max, "largest n in the E_n trend")
      ->capture_default_str();
  add_common(c_jw, opts);

  CLI::App* c_degen = app.add_subcommand("degeneracy", "Degeneracy census");
  add_family(c_degen);
  c_degen->add_option("--threshold", threshold)->capture_default_str();
  add_common(c_degen, opts);

  CLI::App* c_hciz = app.add_subcommand("hciz", "Conjectured n=2 joint density curves");
  c_hciz->add_option("--curve", hciz_curve, "one-point|two-point|normalization")
      ->capture_default_str();
  c_hciz->add_option("--grid-max", grid_max)->capture_default_str();
  c_hciz->add_option("--grid-points", grid_points)->capture_default_str();
  c_hciz->add_option("--mc-samples", mc_samples, "Monte-Carlo comparison sample count")
      ->capture_default_str();
  add_common(c_hciz, opts);

  CLI::App* c_tbasis = app.add_subcommand("tbasis", "Translation-eigenbasis purity");
  c_tbasis->add_option("--n", n)->capture_default_str();
  c_tbasis->add_option("--l", l)->capture_default_str();
  add_common(c_tbasis, opts);

  std::vector<char*> parse_argv;
  parse_argv.push_back(argv[0]);
  for (std::string& s : raw_args) parse_argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(parse_argv.size()), parse_argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    std::filesystem::create_directories(opts.out_dir);
    auto t0 = std::chrono::steady_clock::now();
    int rc = 1;
    std::string command;
    if (*c_spectra) {
      command = "spectra";
      rc = run_spectra(opts, family_from_string(family_str), n, samples, bins, range_lo,
                       range_hi, symmetrize);
    } else if (*c_charfn) {
      command = "charfn";
      rc = run_charfn(opts, family_from_string(family_str), n, samples, t_max, t_step);
    } else if (*c_spacings) {
      command = "spacings";
      rc = run_spacings(opts, family_from_string(family_str), n, samples, drop_zeros);
    } else if (*c_purity) {
      command = "purity";
      rc = run_purity(opts, family_from_string(family_str), n, samples, l);
    } else if (*c_jw) {
      command = "jw";
      rc = run_jw(opts, jw_model, n, eps, trend_max);
    } else if (*c_degen) {
      command = "degeneracy";
      rc = run_degeneracy(opts, family_from_string(family_str), n, samples, threshold);
    } else if (*c_hciz) {
      command = "hciz";
      rc = run_hciz(opts, hciz_curve, grid_max, grid_points, mc_samples);
    } else if (*c_tbasis) {
      command = "tbasis";
      rc = run_tbasis(opts, n, l);
    }
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    write_manifest(opts, command, raw_args, wall);
    return rc;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvariant;
  }
}
