// Copyright 2026 The qts Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qts/postselected_ts.hpp"

#include <gsl/gsl_multimin.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <nlohmann/json.hpp>
#include <random>
#include <sstream>
#include <stdexcept>

#include "qts/permanent.hpp"

namespace qts {

namespace {

struct Slot {
  const char* name;
  std::size_t a, b;
  bool attenuator;
  bool fixed;
};

// Circuit order. Attenuator ancillas are 7..11.
constexpr std::array<Slot, 10> kSlots{{
    {"split", 2, 3, false, false},
    {"coupler1", 1, 2, false, true},
    {"c1_top", 0, 7, true, false},
    {"lower_arm", 3, 8, true, false},
    {"middle", 2, 3, false, false},
    {"coupler2", 3, 5, false, true},
    {"c2_bottom", 6, 9, true, false},
    {"upper_arm", 2, 10, true, false},
    {"combine", 2, 3, false, false},
    {"t_bottom", 4, 11, true, false},
}};

const std::array<int, 8> kSigns{-1, 1, 1, 1, 1, 1, 1, 1};

std::size_t slot_index(const std::string& name) {
  for (std::size_t i = 0; i < kSlots.size(); ++i) {
    if (name == kSlots[i].name) return i;
  }
  throw std::invalid_argument("unknown splitter '" + name + "'");
}

}  // namespace

PtsParameters PtsParameters::initial() {
  PtsParameters p;
  for (const auto& s : kSlots) {
    p.splitters.push_back({s.name, s.fixed ? 1.0 / 3.0 : 0.5, DottedSide::kSecond, s.fixed,
                           s.attenuator});
  }
  p.at("coupler2").dotted = DottedSide::kFirst;
  return p;
}

SplitterSetting& PtsParameters::at(const std::string& name) {
  for (auto& s : splitters) {
    if (s.name == name) return s;
  }
  throw std::invalid_argument("no splitter named '" + name + "'");
}

const SplitterSetting& PtsParameters::at(const std::string& name) const {
  return const_cast<PtsParameters*>(this)->at(name);
}

void PtsParameters::validate() const {
  if (splitters.size() != kSlots.size()) {
    throw std::invalid_argument("expected " + std::to_string(kSlots.size()) + " splitters, got " +
                                std::to_string(splitters.size()));
  }
  for (std::size_t i = 0; i < kSlots.size(); ++i) {
    const auto& s = splitters[i];
    if (s.name != kSlots[i].name) {
      throw std::invalid_argument("splitter " + std::to_string(i) + " should be '" +
                                  kSlots[i].name + "', got '" + s.name + "'");
    }
    if (!(s.reflectivity >= 0.0 && s.reflectivity <= 1.0)) {
      throw std::invalid_argument("splitter '" + s.name + "' reflectivity outside [0, 1]");
    }
  }
}

OpticalCircuit pts_circuit(const PtsParameters& params) {
  params.validate();
  OpticalCircuit c(kPtsModes);
  for (std::size_t i = 0; i < kSlots.size(); ++i) {
    const auto& slot = kSlots[i];
    const auto& s = params.splitters[i];
    c.add(slot.attenuator ? attenuator(s.reflectivity, slot.a, slot.b, s.dotted, s.name)
                          : beam_splitter(s.reflectivity, slot.a, slot.b, s.dotted, s.name));
  }
  return c;
}

ModeLayout pts_layout() { return ModeLayout(kPtsModes, {{0, 1}, {5, 6}, {2, 4}}); }

DetectionPattern pts_coincidence() {
  const ModeLayout layout = pts_layout();
  DetectionPattern p(kPtsModes);
  for (const auto& g : layout.groups()) p.require_group(g, 1);
  p.zero(3);
  for (std::size_t m = 7; m < kPtsModes; ++m) p.zero(m);
  return p;
}

Matrix pts_coincidence_transfer(const PtsParameters& params) {
  const Matrix u = single_photon_transfer(pts_circuit(params));
  const ModeLayout layout = pts_layout();
  const WireDims dims = layout.logical_dims();
  const auto n = static_cast<Eigen::Index>(dims.total_dim());
  Matrix t(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const Occupation in = layout.occupation(basis_digits(static_cast<std::size_t>(j), dims));
    for (Eigen::Index i = 0; i < n; ++i) {
      const Occupation out = layout.occupation(basis_digits(static_cast<std::size_t>(i), dims));
      t(i, j) = permanent_amplitude(u, in, out);
    }
  }
  return t;
}

GateRealization pts_gate(const PtsParameters& params) {
  const ModeLayout layout = pts_layout();
  return characterize("post-selected T-S", pts_circuit(params), layout, layout, pts_coincidence(),
                      Rational(1), "3 photons");
}

PtsFit pts_fit(const Matrix& t) {
  if (t.rows() != 8 || t.cols() != 8) throw std::invalid_argument("pts_fit: expected 8x8");
  PtsFit f;
  for (int k = 0; k < 8; ++k) f.lambda += kSigns[k] * t(k, k).real() / 8.0;
  f.probability = f.lambda * f.lambda;
  for (int k = 0; k < 8; ++k) {
    f.magnitude_spread = std::max(f.magnitude_spread, std::abs(double(kSigns[k]) * t(k, k) - f.lambda));
    for (int j = 0; j < 8; ++j) {
      f.max_imag = std::max(f.max_imag, std::abs(t(k, j).imag()));
      if (j != k) f.off_diagonal = std::max(f.off_diagonal, std::abs(t(k, j)));
    }
  }
  return f;
}

// Solver ---------------------------------------------------------------------

namespace {

// Free settings are parameterized as reflectivity = cos^2(theta), which keeps
// every setting inside [0, 1] without bounds.
struct Problem {
  PtsParameters base;
  std::vector<std::size_t> free;

  PtsParameters at(const gsl_vector* x) const {
    PtsParameters p = base;
    for (std::size_t i = 0; i < free.size(); ++i) {
      const double c = std::cos(gsl_vector_get(x, i));
      p.splitters[free[i]].reflectivity = std::clamp(c * c, 0.0, 1.0);
    }
    return p;
  }

  // Returns lambda; fills constraint residuals.
  double evaluate(const gsl_vector* x, std::vector<double>& c) const {
    const Matrix t = pts_coincidence_transfer(at(x));
    double lambda = 0.0;
    for (int k = 0; k < 8; ++k) lambda += kSigns[k] * t(k, k).real() / 8.0;
    c.clear();
    for (int k = 0; k < 8; ++k) {
      c.push_back(kSigns[k] * t(k, k).real() - lambda);
      for (int j = 0; j < 8; ++j) {
        if (j != k) c.push_back(t(k, j).real());
      }
    }
    return lambda;
  }
};

struct Lagrangian {
  const Problem* problem;
  std::vector<double> multipliers;
  double mu = 1.0;

  double operator()(const gsl_vector* x) const {
    std::vector<double> c;
    double v = -problem->evaluate(x, c);
    for (std::size_t i = 0; i < c.size(); ++i) {
      const double m = multipliers.empty() ? 0.0 : multipliers[i];
      v += m * c[i] + 0.5 * mu * c[i] * c[i];
    }
    return v;
  }
};

double lagrangian_f(const gsl_vector* x, void* p) { return (*static_cast<Lagrangian*>(p))(x); }

void lagrangian_df(const gsl_vector* x, void* p, gsl_vector* g) {
  const auto& l = *static_cast<Lagrangian*>(p);
  constexpr double h = 1e-6;
  gsl_vector* y = gsl_vector_alloc(x->size);
  gsl_vector_memcpy(y, x);
  for (std::size_t i = 0; i < x->size; ++i) {
    const double xi = gsl_vector_get(x, i);
    gsl_vector_set(y, i, xi + h);
    const double fp = l(y);
    gsl_vector_set(y, i, xi - h);
    const double fm = l(y);
    gsl_vector_set(y, i, xi);
    gsl_vector_set(g, i, (fp - fm) / (2 * h));
  }
  gsl_vector_free(y);
}

void lagrangian_fdf(const gsl_vector* x, void* p, double* f, gsl_vector* g) {
  *f = lagrangian_f(x, p);
  lagrangian_df(x, p, g);
}

void simplex_minimize(Lagrangian& l, gsl_vector* x, double step, unsigned max_iter) {
  gsl_multimin_function fn{&lagrangian_f, x->size, &l};
  gsl_vector* steps = gsl_vector_alloc(x->size);
  gsl_vector_set_all(steps, step);
  gsl_multimin_fminimizer* s =
      gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, x->size);
  gsl_multimin_fminimizer_set(s, &fn, x, steps);
  for (unsigned it = 0; it < max_iter; ++it) {
    if (gsl_multimin_fminimizer_iterate(s)) break;
    if (gsl_multimin_test_size(gsl_multimin_fminimizer_size(s), 1e-10) == GSL_SUCCESS) break;
  }
  gsl_vector_memcpy(x, s->x);
  gsl_multimin_fminimizer_free(s);
  gsl_vector_free(steps);
}

void bfgs_minimize(Lagrangian& l, gsl_vector* x, unsigned max_iter) {
  gsl_multimin_function_fdf fn{&lagrangian_f, &lagrangian_df, &lagrangian_fdf, x->size, &l};
  gsl_multimin_fdfminimizer* s =
      gsl_multimin_fdfminimizer_alloc(gsl_multimin_fdfminimizer_vector_bfgs2, x->size);
  gsl_multimin_fdfminimizer_set(s, &fn, x, 1e-3, 0.1);
  for (unsigned it = 0; it < max_iter; ++it) {
    if (gsl_multimin_fdfminimizer_iterate(s)) break;
    if (gsl_multimin_test_gradient(s->gradient, 1e-11) == GSL_SUCCESS) break;
  }
  if (std::isfinite(s->f)) gsl_vector_memcpy(x, s->x);
  gsl_multimin_fdfminimizer_free(s);
}

double max_abs(const std::vector<double>& c) {
  double m = 0.0;
  for (double v : c) m = std::max(m, std::abs(v));
  return m;
}

struct Candidate {
  std::vector<double> theta;
  double lambda = -std::numeric_limits<double>::infinity();
  double violation = std::numeric_limits<double>::infinity();
};

// Penalty simplex from a random start, then augmented Lagrangian rounds with
// BFGS on finite-difference gradients.
Candidate solve_from(const Problem& problem, const std::vector<double>& start,
                     double constraint_tol) {
  const std::size_t n = start.size();
  gsl_vector* x = gsl_vector_alloc(n);
  for (std::size_t i = 0; i < n; ++i) gsl_vector_set(x, i, start[i]);

  Lagrangian l{&problem, {}, 100.0};
  simplex_minimize(l, x, 0.3, 4000);

  std::vector<double> c;
  problem.evaluate(x, c);
  l.multipliers.assign(c.size(), 0.0);
  for (int round = 0; round < 40; ++round) {
    bfgs_minimize(l, x, 500);
    problem.evaluate(x, c);
    const double v = max_abs(c);
    if (v < constraint_tol) break;
    for (std::size_t i = 0; i < c.size(); ++i) l.multipliers[i] += l.mu * c[i];
    if (v > 1e-3 * constraint_tol * l.mu) l.mu = std::min(l.mu * 4.0, 1e9);
  }

  Candidate cand;
  cand.lambda = problem.evaluate(x, c);
  cand.violation = max_abs(c);
  cand.theta.assign(x->data, x->data + n);
  gsl_vector_free(x);
  return cand;
}

constexpr std::array<const char*, 5> kOrientable{"split", "coupler1", "middle", "coupler2",
                                                 "combine"};

}  // namespace

PtsSolveResult solve_pts_reflectivities(const PtsSolveOptions& options) {
  const PtsParameters initial = PtsParameters::initial();
  PtsSolveResult best;
  best.seed = options.seed;
  best.params = initial;
  best.fit.lambda = -std::numeric_limits<double>::infinity();
  double best_violation = std::numeric_limits<double>::infinity();

  const unsigned orientations = options.enumerate_orientations ? 1u << kOrientable.size() : 1u;
  for (unsigned mask = 0; mask < orientations; ++mask) {
    Problem problem{initial, {}};
    for (std::size_t b = 0; b < kOrientable.size(); ++b) {
      if (mask & (1u << b)) {
        auto& s = problem.base.at(kOrientable[b]);
        s.dotted = s.dotted == DottedSide::kFirst ? DottedSide::kSecond : DottedSide::kFirst;
      }
    }
    for (std::size_t i = 0; i < problem.base.splitters.size(); ++i) {
      if (!problem.base.splitters[i].fixed) problem.free.push_back(i);
    }

    std::mt19937_64 rng(options.seed + mask);
    std::uniform_real_distribution<double> angle(0.05, 1.52);
    Candidate round_best;
    for (unsigned s = 0; s < options.starts; ++s) {
      std::vector<double> start(problem.free.size());
      for (auto& v : start) v = angle(rng);
      Candidate c = solve_from(problem, start, options.constraint_tol);
      const bool feasible = c.violation < 1e-8;
      const bool best_feasible = round_best.violation < 1e-8;
      if ((feasible && (!best_feasible || c.lambda > round_best.lambda)) ||
          (!feasible && !best_feasible && c.violation < round_best.violation)) {
        round_best = c;
      }
    }
    ++best.orientations_tried;

    gsl_vector_view xv = gsl_vector_view_array(round_best.theta.data(), round_best.theta.size());
    const PtsParameters params = problem.at(&xv.vector);
    const PtsFit fit = pts_fit(pts_coincidence_transfer(params));
    const double violation = std::max(fit.magnitude_spread, fit.off_diagonal);
    const bool better = violation < 1e-8 ? (best_violation >= 1e-8 || fit.lambda > best.fit.lambda)
                                         : (best_violation >= 1e-8 && violation < best_violation);
    if (better) {
      best.params = params;
      best.fit = fit;
      best_violation = violation;
    }
    best.converged = std::abs(best.fit.probability - options.target_probability) <
                         options.probability_tol &&
                     best_violation < 1e-8;
    if (best.converged) break;
  }

  std::ostringstream msg;
  msg.precision(12);
  msg << (best.converged ? "reached" : "missed") << " target " << options.target_probability
      << ": probability " << best.fit.probability << ", constraint residual " << best_violation
      << " after " << best.orientations_tried << " orientation(s)";
  best.message = msg.str();
  return best;
}

// JSON -----------------------------------------------------------------------

namespace {

std::string side_name(DottedSide d) { return d == DottedSide::kFirst ? "first" : "second"; }

DottedSide parse_side(const std::string& s) {
  if (s == "first") return DottedSide::kFirst;
  if (s == "second") return DottedSide::kSecond;
  throw std::invalid_argument("dotted side must be 'first' or 'second', got '" + s + "'");
}

}  // namespace

std::string pts_parameters_to_json(const PtsParameters& params, const PtsSolveResult* provenance) {
  params.validate();
  nlohmann::ordered_json j;
  j["construction"] = "postselected-ts";
  auto& arr = j["splitters"] = nlohmann::ordered_json::array();
  for (const auto& s : params.splitters) {
    arr.push_back({{"name", s.name},
                   {"kind", s.attenuator ? "attenuator" : "beamsplitter"},
                   {"reflectivity", s.reflectivity},
                   {"dotted", side_name(s.dotted)},
                   {"fixed", s.fixed}});
  }
  if (provenance) {
    j["solver"] = {{"seed", provenance->seed},
                   {"orientations_tried", provenance->orientations_tried},
                   {"probability", provenance->fit.probability},
                   {"magnitude_spread", provenance->fit.magnitude_spread},
                   {"converged", provenance->converged}};
  }
  return j.dump(2) + "\n";
}

PtsParameters pts_parameters_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("parameter file is not valid JSON: ") + e.what());
  }
  if (!j.contains("splitters") || !j["splitters"].is_array()) {
    throw std::invalid_argument("parameter file has no 'splitters' array");
  }
  PtsParameters p = PtsParameters::initial();
  std::vector<bool> seen(p.splitters.size(), false);
  for (const auto& e : j["splitters"]) {
    try {
      const std::size_t i = slot_index(e.at("name").get<std::string>());
      auto& s = p.splitters[i];
      s.reflectivity = e.at("reflectivity").get<double>();
      if (e.contains("dotted")) s.dotted = parse_side(e["dotted"].get<std::string>());
      seen[i] = true;
    } catch (const nlohmann::json::exception& ex) {
      throw std::invalid_argument(std::string("malformed splitter entry: ") + ex.what());
    }
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) throw std::invalid_argument(std::string("missing splitter '") + kSlots[i].name + "'");
  }
  p.validate();
  return p;
}

PtsParameters load_pts_parameters(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return pts_parameters_from_json(ss.str());
}

void save_pts_parameters(const std::filesystem::path& path, const PtsParameters& params,
                         const PtsSolveResult* provenance) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << pts_parameters_to_json(params, provenance);
}

}  // namespace qts
