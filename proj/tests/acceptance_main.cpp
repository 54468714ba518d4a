// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Criterion numbers can be passed as arguments to run a subset.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "spinchain/degeneracy.hpp"
#include "spinchain/entanglement.hpp"
#include "spinchain/free_fermion.hpp"
#include "spinchain/hciz.hpp"
#include "spinchain/io.hpp"
#include "spinchain/spectra.hpp"
#include "spinchain/unfolding.hpp"

using namespace spinchain;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

Matrix dense_pauli_oracle(const std::vector<int>& labels) {
  auto sigma = [](int a) {
    Matrix m(2, 2);
    switch (a) {
      case 0: m << 1, 0, 0, 1; break;
      case 1: m << 0, 1, 1, 0; break;
      case 2: m << 0, Complex(0, -1), Complex(0, 1), 0; break;
      default: m << 1, 0, 0, -1; break;
    }
    return m;
  };
  Matrix m = sigma(labels[0]);
  for (size_t j = 1; j < labels.size(); ++j) m = kron(m, sigma(labels[j]));
  return m;
}

Outcome criterion1_pauli_oracle() {
  for (int n = 1; n <= 3; ++n) {
    int words = 1 << (2 * n);
    std::vector<PauliString> strings;
    std::vector<Matrix> dense;
    for (int code = 0; code < words; ++code) {
      std::vector<int> labels(n);
      int c = code;
      for (int j = 0; j < n; ++j) {
        labels[j] = c & 3;
        c >>= 2;
      }
      strings.push_back(PauliString::from_labels(labels));
      dense.push_back(dense_pauli_oracle(labels));
    }
    for (int p = 0; p < words; ++p)
      for (int q = 0; q < words; ++q) {
        PauliString prod = mul(strings[p], strings[q]);
        Matrix expect = dense[p] * dense[q];
        // zero tolerance on the phase quadrant: the bitwise word and phase
        // must reproduce the dense product, which lands on an exact Pauli
        if (max_abs(prod.to_dense() - expect) > 1e-12)
          return {false, "product mismatch at n=" + std::to_string(n)};
        bool dense_comm = max_abs(dense[p] * dense[q] - dense[q] * dense[p]) < 1e-12;
        if (commutes(strings[p], strings[q]) != dense_comm)
          return {false, "commutation mismatch at n=" + std::to_string(n)};
      }
  }
  return {true, "4^6 pairs at n=3 plus all smaller n"};
}

Outcome criterion2_variance() {
  std::ostringstream detail;
  for (Family f : {Family::Generic, Family::Uniform, Family::Local, Family::Inv,
                   Family::InvLocal, Family::Jw, Family::Heis}) {
    for (int n : {4, 8}) {
      EnsembleSpec spec{f, n, 4242};
      double analytic = expected_trace_h2(spec);
      if (std::abs(analytic - 1.0) > 1e-12)
        return {false, family_name(f) + " n=" + std::to_string(n) + " analytic variance " +
                           format_value(analytic)};
      const int S = 200;
      double mean = 0, sq = 0;
      for (int s = 0; s < S; ++s) {
        double v = sample(spec, s).normalized_trace_h2();
        mean += v;
        sq += v * v;
      }
      mean /= S;
      double se = std::sqrt((sq / S - mean * mean) / (S - 1));
      if (std::abs(mean - 1.0) > 5 * se)
        return {false, family_name(f) + " n=" + std::to_string(n) + " MC mean " +
                           format_value(mean) + " se " + format_value(se)};
    }
  }
  detail << "14 family/size points, analytic exact, MC within 5 se";
  return {true, detail.str()};
}

// shared GENERIC n=12 spectra, used by criteria 3 and 11
const std::vector<RealVector>& generic12_spectra() {
  static std::vector<RealVector> spectra = [] {
    EnsembleSpec spec{Family::Generic, 12, 7};
    std::vector<RealVector> out(64);
    for (int s = 0; s < 64; ++s) out[s] = sampled_eigenvalues(sample(spec, s));
    return out;
  }();
  return spectra;
}

Outcome criterion3_moments() {
  const auto& spectra = generic12_spectra();
  double m2 = 0, m3 = 0, m4 = 0;
  for (const RealVector& w : spectra) {
    m2 += trace_moment(w, 2);
    m3 += trace_moment(w, 3);
    m4 += trace_moment(w, 4);
  }
  m2 /= spectra.size();
  m3 /= spectra.size();
  m4 /= spectra.size();
  std::ostringstream detail;
  detail << "m2=" << format_value(m2) << " m3=" << format_value(m3)
         << " m4=" << format_value(m4);
  bool pass = std::abs(m2 - 1.0) <= 0.02 && std::abs(m3) <= 0.05 && std::abs(m4 - 3.0) <= 0.06;
  if (std::abs(m4 - 3.0) > 0.06)
    detail << "; note: the exact ensemble expectation of m4 at n=12 is 3 - 32/(9n) = "
           << format_value(3.0 - 32.0 / 108.0)
           << ", so the demanded 3 +- 0.06 cannot be met by any faithful sampler";
  return {pass, detail.str()};
}

Outcome criterion4_charfn_bound() {
  EnsembleSpec spec{Family::Generic, 8, 77};
  const int S = 500;
  std::vector<double> grid;
  for (int i = 0; i <= 30; ++i) grid.push_back(0.1 * i);
  std::vector<CharacteristicCurve> curves(S);
  for (int s = 0; s < S; ++s)
    curves[s] = characteristic_fn(sampled_eigenvalues(sample(spec, s)), grid);
  double worst = -1e300;
  for (size_t q = 0; q < grid.size(); ++q) {
    Complex mean(0, 0);
    for (int s = 0; s < S; ++s) mean += curves[s].values[q];
    mean /= double(S);
    double var = 0;
    for (int s = 0; s < S; ++s) var += std::norm(curves[s].values[q] - mean);
    double se = std::sqrt(var / (double(S) * (S - 1)));
    double bound = grid[q] * grid[q] * (4.0 * std::sqrt(2.0) + 9.0) / std::sqrt(8.0);
    double excess = std::abs(mean - Complex(std::exp(-0.5 * grid[q] * grid[q]), 0)) -
                    (bound + 3.0 * se);
    worst = std::max(worst, excess);
  }
  return {worst <= 0.0, "worst excess over bound " + format_value(worst)};
}

Outcome criterion5_block_split() {
  EnsembleSpec spec{Family::Local, 12, 31};
  std::vector<double> grid;
  for (int i = 0; i <= 30; ++i) grid.push_back(0.1 * i);
  double worst = -1e300;
  for (int s = 0; s < 20; ++s) {
    SampledHamiltonian h = sample(spec, s);
    BlockSplitResult r = block_split_characteristic(h, 3, grid);
    for (size_t q = 0; q < grid.size(); ++q) {
      double excess = std::abs(r.psi.values[q] - r.phi.values[q]) - r.bound[q];
      worst = std::max(worst, excess);
    }
  }
  return {worst <= 1e-12, "20 samples at n=12, l=3; worst excess " + format_value(worst)};
}

Outcome criterion6_jw_equivalence() {
  double worst = 0.0;
  for (int n = 4; n <= 10; ++n) {
    EnsembleSpec spec{Family::Jw, n, 555};
    SampledHamiltonian h = sample(spec, n);
    RealVector rec = reconstruct_spectrum(bogoliubov_diagonalize(assemble_quadratic_form(h)));
    RealVector dense = diagonalize(h.dense(), false).values;
    worst = std::max(worst, (rec - dense).cwiseAbs().maxCoeff());
  }
  for (int n : {5, 7})
    for (double eps : {0.3, 1.0}) {
      RealVector closed = xy_plus_z_closed_form(n, eps).values;
      RealVector dense =
          diagonalize(fixed_hamiltonian(FixedKind::EpsXYPlusZ, n, eps).dense(), false).values;
      worst = std::max(worst, (closed - dense).cwiseAbs().maxCoeff());
    }
  return {worst < 1e-8, "max eigenvalue discrepancy " + format_value(worst)};
}

Outcome criterion7_single_qubit() {
  EnsembleSpec spec{Family::Generic, 8, 808};
  int done = 0;
  double worst = 0.0;
  std::uint64_t index = 0;
  while (done < 20 && index < 60) {
    SingleQubitReport r = check_single_qubit_theorem(sample(spec, index++));
    if (!r.applicable) continue;
    ++done;
    worst = std::max(worst, r.max_deviation);
  }
  if (done < 20) return {false, "could not find 20 non-degenerate samples"};
  return {worst < 1e-8, "20 samples x 256 eigenstates, worst deviation " + format_value(worst)};
}

Outcome criterion8_block_purity() {
  EnsembleSpec spec{Family::InvLocal, 9, 909};
  for (int l : {1, 2, 3}) {
    int done = 0;
    std::uint64_t index = 0;
    while (done < 20 && index < 60) {
      BlockPurityReport r = check_block_purity_bound(sample(spec, index++), l);
      if (!r.applicable) continue;
      ++done;
      if (!r.within_bounds)
        return {false, "l=" + std::to_string(l) + " average purity " +
                           format_value(r.average_purity) + " outside [" +
                           format_value(r.lower) + ", " + format_value(r.upper) + "]"};
    }
    if (done < 20) return {false, "could not find 20 applicable samples at l=" + std::to_string(l)};
  }
  return {true, "60 sample/block-length checks inside the two-sided bound"};
}

Outcome criterion9_tbasis() {
  for (int n = 4; n <= 10; ++n) {
    double avg = translation_basis_purity(n, 1);
    if (std::abs(avg - (0.5 + 0.5 / n)) > 1e-9)
      return {false, "l=1 n=" + std::to_string(n) + " purity " + format_value(avg)};
  }
  double avg2 = translation_basis_purity(10, 2);
  double inv_excess = 1.0 / (avg2 - 0.25);
  if (std::abs(inv_excess - 9.30233) > 1e-4)
    return {false, "l=2 n=10 inverse excess " + format_value(inv_excess)};
  return {true, "l=1 exact for n=4..10; l=2 n=10 inverse excess " + format_value(inv_excess)};
}

Outcome criterion10_kramers() {
  double worst_gap = 0.0, worst_resid = 0.0;
  for (int n : {5, 7, 9}) {
    EnsembleSpec spec{Family::Generic, n, 111};
    for (int s = 0; s < 20; ++s) {
      KramersReport r = kramers_check(sample(spec, s), 1e-8);
      if (!r.paired) return {false, "pairing failed at n=" + std::to_string(n)};
      worst_gap = std::max(worst_gap, r.max_pair_gap);
      worst_resid = std::max(worst_resid, r.symmetry_residual);
    }
  }
  bool pass = worst_resid < 1e-10;
  return {pass, "worst pair gap " + format_value(worst_gap) + ", symmetry residual " +
                    format_value(worst_resid)};
}

double spacing_l1(const std::vector<RealVector>& spectra, int beta, double area, double mean,
                  bool drop_zeros, double* zero_fraction) {
  UnfoldingMap map = build_unfolding(spectra);
  std::vector<std::vector<double>> unfolded;
  for (const RealVector& w : spectra) unfolded.push_back(unfold(map, w));
  SpacingSample s = spacing_sample(unfolded, drop_zeros);
  if (zero_fraction)
    *zero_fraction = static_cast<double>(s.zero_count) / static_cast<double>(s.total_count);
  Histogram h = spacing_histogram(s);
  std::vector<double> centers(h.density.size());
  for (size_t j = 0; j < centers.size(); ++j) centers[j] = h.bin_center(static_cast<int>(j));
  return l1_distance(h, surmise(beta, centers, area, mean));
}

Outcome criterion11_spacings() {
  std::ostringstream detail;
  // GENERIC even n=12 -> GOE (reuses the criterion-3 spectra)
  double d_goe = spacing_l1(generic12_spectra(), 1, 1.0, 1.0, false, nullptr);
  detail << "GOE=" << format_value(d_goe);
  if (d_goe >= 0.12) return {false, detail.str()};

  auto batch = [](Family f, int n, std::uint64_t seed) {
    EnsembleSpec spec{f, n, seed};
    std::vector<RealVector> out(64);
    for (int s = 0; s < 64; ++s) out[s] = sampled_eigenvalues(sample(spec, s));
    return out;
  };
  double d_gue = spacing_l1(batch(Family::Local, 11, 1002), 2, 1.0, 1.0, false, nullptr);
  detail << " GUE=" << format_value(d_gue);
  if (d_gue >= 0.12) return {false, detail.str()};

  double d_poisson = spacing_l1(batch(Family::InvLocal, 11, 1003), 0, 1.0, 1.0, false, nullptr);
  detail << " Poisson=" << format_value(d_poisson);
  if (d_poisson >= 0.12) return {false, detail.str()};

  double zero_fraction = 0.0;
  double d_gse =
      spacing_l1(batch(Family::Generic, 11, 1004), 4, 0.5, 2.0, true, &zero_fraction);
  detail << " GSE=" << format_value(d_gse) << " (zero mass " << format_value(zero_fraction)
         << ")";
  if (d_gse >= 0.15) return {false, detail.str()};
  return {true, detail.str()};
}

Outcome criterion12_hciz() {
  double at0 = hciz::one_point_n2(0.0);
  if (std::abs(at0 - 0.266) > 0.005) return {false, "rho21(0) = " + format_value(at0)};
  double norm = hciz::hyperplane_normalization();
  if (std::abs(norm - 1.0) > 2e-3) return {false, "normalization = " + format_value(norm)};
  double tp = hciz::two_point_normalization();
  if (std::abs(tp - at0) > 1e-3)
    return {false, "two-point normalization " + format_value(tp) + " vs " + format_value(at0)};

  EnsembleSpec spec{Family::Generic, 2, 2121};
  HistogramSpec hs{-3.0, 3.0, 120};
  HistogramAccumulator acc(hs);
  const int S = 1 << 15;
  for (int s = 0; s < S; ++s) acc.add(diagonalize(sample(spec, s).dense(), false).values);
  Histogram hist = finalize_histogram(acc, true);
  std::vector<double> centers(hs.bins);
  for (int j = 0; j < hs.bins; ++j) centers[j] = hist.bin_center(j);
  double l1 = l1_distance(hist, hciz::one_point_n2(centers));
  std::ostringstream detail;
  detail << "rho21(0)=" << format_value(at0) << " norm=" << format_value(norm)
         << " 2pt=" << format_value(tp) << " MC L1=" << format_value(l1);
  return {l1 < 0.05, detail.str()};
}

Outcome criterion13_determinism() {
#ifndef SPINCHAIN_CLI_PATH
  return {false, "CLI path not configured"};
#else
  namespace fs = std::filesystem;
  fs::path base = fs::temp_directory_path() / "spinchain_determinism";
  fs::remove_all(base);
  fs::create_directories(base);
  auto run = [&](const std::string& args, const std::string& out) {
    std::string cmd = std::string(SPINCHAIN_CLI_PATH) + " " + args + " --out " +
                      (base / out).string() + " > /dev/null 2>&1";
    return std::system(cmd.c_str());
  };
  const std::string invocation =
      "spectra --family local --n 6 --samples 12 --seed 99 --symmetrize";
  if (run(invocation + " --threads 1", "a") != 0) return {false, "first run failed"};
  if (run(invocation + " --threads 2", "b") != 0) return {false, "second run failed"};
  std::string cmd = std::string(SPINCHAIN_CLI_PATH) + " --manifest " +
                    (base / "a/manifest.json").string() + " --out " + (base / "c").string() +
                    " > /dev/null 2>&1";
  if (std::system(cmd.c_str()) != 0) return {false, "manifest replay failed"};
  for (const char* file : {"spectra_hist.tsv", "spectra_summary.json"}) {
    std::string a = read_file((base / "a" / file).string());
    if (a != read_file((base / "b" / file).string()))
      return {false, std::string(file) + " differs across thread counts"};
    if (a != read_file((base / "c" / file).string()))
      return {false, std::string(file) + " differs under manifest replay"};
  }
  // a second subcommand with parallel accumulation
  const std::string spacing_inv = "spacings --family local --n 8 --samples 8 --seed 5";
  if (run(spacing_inv + " --threads 1", "d") != 0) return {false, "spacings run failed"};
  if (run(spacing_inv + " --threads 3", "e") != 0) return {false, "spacings run failed"};
  for (const char* file : {"spacings_hist.tsv", "spacings_distances.json"}) {
    if (read_file((base / "d" / file).string()) != read_file((base / "e" / file).string()))
      return {false, std::string(file) + " differs across thread counts"};
  }
  return {true, "byte-identical across thread counts and manifest replay"};
#endif
}

}  // namespace

int main(int argc, char** argv) {
  setenv("OPENBLAS_NUM_THREADS", "1", 0);
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> fn;
  };
  std::vector<Criterion> criteria = {
      {1, "Pauli algebra dense-vs-bitwise oracle", criterion1_pauli_oracle},
      {2, "variance normalization", criterion2_variance},
      {3, "limiting moments at n=12", criterion3_moments},
      {4, "characteristic-function bound", criterion4_charfn_bound},
      {5, "block-splitting bound", criterion5_block_split},
      {6, "JW solver equivalence", criterion6_jw_equivalence},
      {7, "single-qubit reduced purity theorem", criterion7_single_qubit},
      {8, "block purity bound", criterion8_block_purity},
      {9, "translation-basis purity", criterion9_tbasis},
      {10, "Kramers degeneracy", criterion10_kramers},
      {11, "spacing statistics", criterion11_spacings},
      {12, "joint-density conjecture at n=2", criterion12_hciz},
      {13, "CLI determinism", criterion13_determinism},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.fn();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion %2d: %s — %s [%.1fs]\n", out.pass ? "PASS" : "FAIL", c.id,
                c.name, out.detail.c_str(), wall);
    std::fflush(stdout);
    if (!out.pass) ++failures;
  }
  return failures;
}
