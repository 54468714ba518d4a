#include "spinchain/ensembles.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "spinchain/rng.hpp"

namespace spinchain {

Family family_from_string(const std::string& name) {
  if (name == "generic") return Family::Generic;
  if (name == "uniform") return Family::Uniform;
  if (name == "local") return Family::Local;
  if (name == "inv") return Family::Inv;
  if (name == "inv-local" || name == "inv_local") return Family::InvLocal;
  if (name == "jw") return Family::Jw;
  if (name == "heis") return Family::Heis;
  throw std::invalid_argument("unknown family: " + name);
}

std::string family_name(Family f) {
  switch (f) {
    case Family::Generic: return "generic";
    case Family::Uniform: return "uniform";
    case Family::Local: return "local";
    case Family::Inv: return "inv";
    case Family::InvLocal: return "inv-local";
    case Family::Jw: return "jw";
    case Family::Heis: return "heis";
  }
  return "?";
}

double coefficient_variance(Family family, int n) {
  switch (family) {
    case Family::Generic:
    case Family::Uniform:
    case Family::Inv: return 1.0 / (9.0 * n);
    case Family::Local:
    case Family::InvLocal: return 1.0 / (12.0 * n);
    case Family::Jw: return 1.0 / (5.0 * n - 4.0);
    case Family::Heis: return 1.0 / (3.0 * n);
  }
  return 0.0;
}

namespace {

Term make_bond(int j, int a, int b, int n, int orbit) {
  PauliString op = (b == 0)
                       ? PauliString::single_site(j, a, n)
                       : mul(PauliString::single_site(j, a, n),
                             PauliString::single_site(j % n + 1, b, n));
  return Term{op, j, a, b, orbit};
}

}  // namespace

std::vector<Term> term_list(const EnsembleSpec& spec) {
  const int n = spec.n;
  if (n < 2) throw std::invalid_argument("chain length must be >= 2");
  std::vector<Term> terms;
  switch (spec.family) {
    case Family::Generic:
    case Family::Uniform:
      for (int j = 1; j <= n; ++j)
        for (int b = 1; b <= 3; ++b)
          for (int a = 1; a <= 3; ++a)
            terms.push_back(make_bond(j, a, b, n, static_cast<int>(terms.size())));
      break;
    case Family::Local:
      for (int j = 1; j <= n; ++j)
        for (int b = 0; b <= 3; ++b)
          for (int a = 1; a <= 3; ++a)
            terms.push_back(make_bond(j, a, b, n, static_cast<int>(terms.size())));
      break;
    case Family::Inv:
      for (int j = 1; j <= n; ++j)
        for (int b = 1; b <= 3; ++b)
          for (int a = 1; a <= 3; ++a) terms.push_back(make_bond(j, a, b, n, 3 * (b - 1) + (a - 1)));
      break;
    case Family::InvLocal:
      for (int j = 1; j <= n; ++j)
        for (int b = 0; b <= 3; ++b)
          for (int a = 1; a <= 3; ++a) terms.push_back(make_bond(j, a, b, n, 3 * b + (a - 1)));
      break;
    case Family::Jw:
      // open chain: bonds j = 1..n-1 with a,b in {1,2}, then s_j^(3) locals
      for (int j = 1; j < n; ++j)
        for (int b = 1; b <= 2; ++b)
          for (int a = 1; a <= 2; ++a)
            terms.push_back(make_bond(j, a, b, n, static_cast<int>(terms.size())));
      for (int j = 1; j <= n; ++j) {
        Term t{PauliString::single_site(j, 3, n), j, 3, 0, static_cast<int>(terms.size())};
        terms.push_back(t);
      }
      break;
    case Family::Heis:
      for (int j = 1; j <= n; ++j)
        for (int a = 1; a <= 3; ++a) {
          int orbit = spec.heis_site_dependent ? static_cast<int>(terms.size()) : a - 1;
          terms.push_back(make_bond(j, a, a, n, orbit));
        }
      break;
  }
  return terms;
}

int independent_coefficients(const EnsembleSpec& spec) {
  int max_orbit = -1;
  for (const Term& t : term_list(spec)) max_orbit = std::max(max_orbit, t.orbit);
  return max_orbit + 1;
}

SampledHamiltonian sample(const EnsembleSpec& spec, std::uint64_t index) {
  SampledHamiltonian h;
  h.spec = spec;
  h.terms = term_list(spec);
  int orbits = 0;
  for (const Term& t : h.terms) orbits = std::max(orbits, t.orbit + 1);

  Rng rng = Rng::substream(spec.seed, index);
  double var = coefficient_variance(spec.family, spec.n);
  std::vector<double> draw(orbits);
  for (int k = 0; k < orbits; ++k) {
    if (spec.family == Family::Uniform) {
      double half = std::sqrt(3.0 * var);
      draw[k] = rng.uniform(-half, half);
    } else {
      draw[k] = rng.gaussian(std::sqrt(var));
    }
  }
  h.coefficients.resize(h.terms.size());
  for (size_t i = 0; i < h.terms.size(); ++i) h.coefficients[i] = draw[h.terms[i].orbit];
  return h;
}

Matrix SampledHamiltonian::dense(int budget) const {
  const int nn = spec.n;
  if (nn > budget) throw std::invalid_argument("dense Hamiltonian exceeds memory budget");
  std::uint64_t dim = 1ULL << nn;
  Matrix m = Matrix::Zero(dim, dim);
  for (size_t i = 0; i < terms.size(); ++i) {
    if (coefficients[i] == 0.0) continue;
    const PauliString& p = terms[i].op;
    for (std::uint64_t y = 0; y < dim; ++y) {
      auto act = p.apply(y);
      m(act.index, y) += coefficients[i] * act.coeff;
    }
  }
  return m;
}

namespace {

// Collapse coefficients term-by-term onto canonical Pauli words.  Two terms
// can realize the same word (e.g. the two bonds of an n = 2 ring), in which
// case their phases relative to the canonical word are +-1.
std::vector<double> word_collapsed(const std::vector<Term>& terms,
                                   const std::vector<double>& coeffs) {
  std::map<std::pair<std::uint64_t, std::uint64_t>, double> words;
  for (size_t i = 0; i < terms.size(); ++i) {
    const PauliString& p = terms[i].op;
    double sign = p.phase().real();  // bond/local words have real phase
    words[{p.x_mask(), p.z_mask()}] += sign * coeffs[i];
  }
  std::vector<double> out;
  out.reserve(words.size());
  for (const auto& [w, c] : words) out.push_back(c);
  return out;
}

}  // namespace

double SampledHamiltonian::normalized_trace_h2() const {
  double s = 0.0;
  for (double c : word_collapsed(terms, coefficients)) s += c * c;
  return s;
}

void SampledHamiltonian::scale(double c) {
  for (double& v : coefficients) v *= c;
}

bool SampledHamiltonian::has_local_terms() const {
  for (const Term& t : terms)
    if (t.b == 0) return true;
  return false;
}

bool SampledHamiltonian::all_even_weight() const {
  for (const Term& t : terms)
    if (t.op.weight() % 2 != 0) return false;
  return true;
}

double expected_trace_h2(const EnsembleSpec& spec) {
  std::vector<Term> terms = term_list(spec);
  double var = coefficient_variance(spec.family, spec.n);
  // E[(sum_i c_i)^2] over a word with orbit-shared draws: group signed
  // multiplicities per orbit, then sum var * (multiplicity)^2 over orbits.
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::map<int, double>> words;
  for (const Term& t : terms) {
    double sign = t.op.phase().real();
    words[{t.op.x_mask(), t.op.z_mask()}][t.orbit] += sign;
  }
  double total = 0.0;
  for (const auto& [w, orbit_mult] : words)
    for (const auto& [orbit, mult] : orbit_mult) total += var * mult * mult;
  return total;
}

SampledHamiltonian fixed_hamiltonian(FixedKind kind, int n, double eps) {
  if (n < 2) throw std::invalid_argument("chain length must be >= 2");
  SampledHamiltonian h;
  h.spec.family = Family::Local;  // shape tag only; coefficients are fixed
  h.spec.n = n;
  switch (kind) {
    case FixedKind::ZField:
      for (int j = 1; j <= n; ++j) {
        h.terms.push_back(Term{PauliString::single_site(j, 3, n), j, 3, 0, j - 1});
        h.coefficients.push_back(1.0);
      }
      break;
    case FixedKind::EpsXYPlusZ:
      for (int j = 1; j <= n; ++j) {
        h.terms.push_back(Term{mul(PauliString::single_site(j, 1, n),
                                   PauliString::single_site(j % n + 1, 2, n)),
                               j, 1, 2, 2 * (j - 1)});
        h.coefficients.push_back(eps);
        h.terms.push_back(Term{PauliString::single_site(j, 3, n), j, 3, 0, 2 * j - 1});
        h.coefficients.push_back(1.0);
      }
      break;
    case FixedKind::EpsJZ:
      for (int j = 1; j <= n; ++j) {
        h.terms.push_back(Term{PauliString::single_site(j, 3, n), j, 3, 0, j - 1});
        h.coefficients.push_back(std::pow(eps, j));
      }
      break;
  }
  return h;
}

}  // namespace spinchain
