// Copyright 2026 The albertsim Authors
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

#include "albertsim/automaton.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace albert {

namespace {

// Eigenvalues closer than this are treated as one measurement level. Every
// observable the library measures has level gaps of at least 1e-4 (integer
// code numbers, or j * label_spread with label_spread >= 1e-4), three decades
// above solver noise at our matrix sizes.
constexpr double kLevelGroupTol = 1e-7;

constexpr double kMinLabelSpread = 1e-4;

std::string format_g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct Levels {
  std::vector<double> values;             // distinct eigenvalues, ascending
  std::vector<ComplexMatrix> projectors;  // aligned, on the observable's own basis
};

// Distinct eigenvalues with their eigenprojectors. Diagonal matrices take an
// exact path (no solver): registry observables and records are diagonal, and
// keeping their degenerate padding levels exactly degenerate keeps branch
// errors at true zero instead of solver roundoff.
Levels eigenlevels(const ComplexMatrix& m) {
  const Eigen::Index n = m.rows();
  double offdiag_sq = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i != j) offdiag_sq += std::norm(m(i, j));
    }
  }
  std::vector<std::pair<double, ComplexVector>> pairs;
  pairs.reserve(static_cast<std::size_t>(n));
  if (offdiag_sq == 0.0) {
    for (Eigen::Index i = 0; i < n; ++i) {
      ComplexVector e = ComplexVector::Zero(n);
      e(i) = Complex(1.0, 0.0);
      pairs.emplace_back(m(i, i).real(), std::move(e));
    }
    // Ties broken by basis index: std::stable_sort keeps insertion order.
    std::stable_sort(pairs.begin(), pairs.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
  } else {
    Eigensystem es = hermitian_eigensystem(m);
    for (Eigen::Index i = 0; i < n; ++i) {
      pairs.emplace_back(es.eigenvalues(i), es.eigenvectors.col(i));
    }
  }
  Levels levels;
  for (const auto& [value, vec] : pairs) {
    if (levels.values.empty() || value - levels.values.back() > kLevelGroupTol) {
      levels.values.push_back(value);
      levels.projectors.push_back(ComplexMatrix::Zero(n, n));
    }
    levels.projectors.back() += vec * vec.adjoint();
  }
  return levels;
}

std::vector<std::string> scope_union(const std::vector<std::string>& a,
                                     const std::vector<std::string>& b,
                                     const RegisterLayout& layout) {
  std::vector<std::string> result;
  for (const Register& r : layout.registers()) {
    const bool in_a = std::find(a.begin(), a.end(), r.name) != a.end();
    const bool in_b = std::find(b.begin(), b.end(), r.name) != b.end();
    if (in_a || in_b) result.push_back(r.name);
  }
  return result;
}

void require_disjoint(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  for (const std::string& name : a) {
    if (std::find(b.begin(), b.end(), name) != b.end()) {
      throw std::invalid_argument("register '" + name + "' appears in both scopes");
    }
  }
}

}  // namespace

ChainState::ChainState(RegisterLayout layout, const StateVector& initial)
    : layout_(std::move(layout)), vector_(initial.amplitudes()) {
  if (vector_.size() != layout_.total_dim()) {
    throw std::invalid_argument("initial state dimension does not match layout");
  }
}

ChainState ChainState::with_system_state(const RegisterLayout& layout,
                                         std::string_view system_register,
                                         const StateVector& system_state) {
  if (system_state.dim() != layout.dim_of(system_register)) {
    throw std::invalid_argument("system state dimension does not match its register");
  }
  const Eigen::Index stride = layout.stride_of(system_register);
  ComplexVector full = ComplexVector::Zero(layout.total_dim());
  for (Eigen::Index i = 0; i < system_state.dim(); ++i) {
    full(i * stride) = system_state.amplitudes()(i);
  }
  ChainState state(layout, StateVector(std::move(full)));
  state.log_step("prepare", std::string(system_register) + " <- state");
  return state;
}

void ChainState::apply_gait(const Gait& gait, const std::string& step_operation,
                            const std::string& step_operands) {
  vector_ = apply_on_registers(gait.matrix, gait.scope, layout_, vector_);
  const double n = vector_.norm();
  norm_drift_ = std::max(norm_drift_, std::abs(n - 1.0));
  if (std::abs(n - 1.0) > 1e-9) {
    throw std::runtime_error("state norm drifted to " + format_g17(n) +
                             " after '" + step_operation + "': gait is not unitary");
  }
  steps_.push_back(StepRecord{step_operation, step_operands, n});
}

void ChainState::log_step(const std::string& operation, const std::string& operands) {
  steps_.push_back(StepRecord{operation, operands, vector_.norm()});
}

ChainState ChainState::extended(const std::vector<Register>& extra) const {
  RegisterLayout bigger = layout_.extended(extra);
  const Eigen::Index factor = bigger.total_dim() / layout_.total_dim();
  ComplexVector full = ComplexVector::Zero(bigger.total_dim());
  // Registers appended on the right are least significant, so the old flat
  // index scales by the appended dimension with the new registers at |0>.
  for (Eigen::Index i = 0; i < vector_.size(); ++i) {
    full(i * factor) = vector_(i);
  }
  ChainState state(std::move(bigger), StateVector(std::move(full)));
  state.steps_ = steps_;
  state.norm_drift_ = norm_drift_;
  std::ostringstream names;
  for (std::size_t i = 0; i < extra.size(); ++i) {
    if (i > 0) names << ' ';
    names << extra[i].name << ":|0>";
  }
  state.log_step("extend", names.str());
  return state;
}

bool ChainReport::all_passed() const {
  return std::all_of(assertions.begin(), assertions.end(),
                     [](const AssertionRecord& a) { return a.pass || a.skipped; });
}

Observable godel_observable(const godel::NumberRegistry& registry, const RegisterLayout& layout,
                            std::string_view register_name) {
  if (registry.size() == 0) throw std::invalid_argument("registry is empty");
  const Eigen::Index dim = layout.dim_of(register_name);
  if (static_cast<std::size_t>(dim) < registry.size()) {
    throw std::invalid_argument("register '" + std::string(register_name) + "' (dim " +
                                std::to_string(dim) + ") cannot hold " +
                                std::to_string(registry.size()) + " code numbers");
  }
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  std::vector<double> labels(static_cast<std::size_t>(dim), 0.0);
  for (std::size_t i = 0; i < registry.size(); ++i) {
    auto value = registry.number_at(i).to_double_exact();
    if (!value) {
      throw std::overflow_error("code number " + registry.number_at(i).to_decimal() +
                                " exceeds 2^53 - 1 and cannot be an exact eigenvalue");
    }
    m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = *value;
    labels[i] = *value;
  }
  return Observable{std::move(m), {std::string(register_name)}, std::move(labels)};
}

Gait proof_gait(const StateVector& psi, Eigen::Index target_index, Eigen::Index dim,
                std::uint64_t seed) {
  if (psi.dim() != dim) throw std::invalid_argument("state dimension mismatch");
  if (target_index < 0 || target_index >= dim) {
    throw std::out_of_range("target index out of range");
  }
  SeededRng rng(seed);
  ComplexMatrix from = complete_basis({psi.amplitudes()}, dim, rng);
  ComplexVector target = ComplexVector::Zero(dim);
  target(target_index) = Complex(1.0, 0.0);
  ComplexMatrix to = complete_basis({target}, dim, rng);
  // Maps psi -> column 0 of `from`'s dual -> e_target; the remaining action
  // is whatever the two seeded completions induce.
  return Gait{to * from.adjoint(), {}};
}

Gait commuting_gait(const Observable& p, const std::vector<Complex>& phases) {
  Levels levels = eigenlevels(p.matrix);
  const Eigen::Index dim = p.matrix.rows();
  if (static_cast<Eigen::Index>(levels.values.size()) != dim) {
    throw std::invalid_argument(
        "observable has a degenerate spectrum: eigenbasis is ambiguous, refusing to build a "
        "commuting gait");
  }
  if (static_cast<Eigen::Index>(phases.size()) != dim) {
    throw std::invalid_argument("need exactly one phase per eigenvector");
  }
  ComplexMatrix u = ComplexMatrix::Zero(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    const Complex phase = phases[static_cast<std::size_t>(j)];
    if (std::abs(std::abs(phase) - 1.0) > 1e-9) {
      throw std::invalid_argument("phase " + std::to_string(j) + " is not unit modulus");
    }
    u += phase * levels.projectors[static_cast<std::size_t>(j)];
  }
  return Gait{std::move(u), p.scope};
}

double readout_godel_number(const StateVector& psi, const Gait& u, const Observable& p) {
  if (u.matrix.rows() != psi.dim() || p.matrix.rows() != psi.dim()) {
    throw std::invalid_argument("dimension mismatch between state, gait, and observable");
  }
  StateVector walked{ComplexVector(u.matrix * psi.amplitudes())};
  return expectation_value(walked, p.matrix);
}

Gait measurement_unitary(const Observable& obs, std::string_view pointer,
                         const RegisterLayout& layout) {
  const std::string pointer_name(pointer);
  if (std::find(obs.scope.begin(), obs.scope.end(), pointer_name) != obs.scope.end()) {
    throw std::invalid_argument("pointer register overlaps the observable's scope");
  }
  const Eigen::Index pointer_dim = layout.dim_of(pointer);
  Levels levels = eigenlevels(obs.matrix);
  if (static_cast<Eigen::Index>(levels.values.size()) > pointer_dim) {
    throw std::invalid_argument("pointer register '" + pointer_name + "' (dim " +
                                std::to_string(pointer_dim) + ") cannot record " +
                                std::to_string(levels.values.size()) + " distinct levels");
  }
  ComplexMatrix shift = ComplexMatrix::Zero(pointer_dim, pointer_dim);
  for (Eigen::Index k = 0; k < pointer_dim; ++k) {
    shift((k + 1) % pointer_dim, k) = Complex(1.0, 0.0);
  }
  const Eigen::Index scope_dim = obs.matrix.rows();
  ComplexMatrix v = ComplexMatrix::Zero(scope_dim * pointer_dim, scope_dim * pointer_dim);
  ComplexMatrix shift_power = ComplexMatrix::Identity(pointer_dim, pointer_dim);
  for (std::size_t j = 0; j < levels.projectors.size(); ++j) {
    v += tensor(levels.projectors[j], shift_power);
    shift_power = shift * shift_power;
  }
  std::vector<std::string> scope = obs.scope;
  scope.push_back(pointer_name);
  return Gait{std::move(v), std::move(scope)};
}

Observable albert_record_observable(const Observable& obs, std::string_view pointer,
                                    const RegisterLayout& layout) {
  const Eigen::Index pointer_dim = layout.dim_of(pointer);
  Levels levels = eigenlevels(obs.matrix);
  if (static_cast<Eigen::Index>(levels.values.size()) > pointer_dim) {
    throw std::invalid_argument("pointer register cannot record " +
                                std::to_string(levels.values.size()) + " distinct levels");
  }
  ComplexMatrix g = ComplexMatrix::Zero(pointer_dim, pointer_dim);
  std::vector<double> labels(static_cast<std::size_t>(pointer_dim), 0.0);
  for (std::size_t j = 0; j < levels.values.size(); ++j) {
    g(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j)) = levels.values[j];
    labels[j] = levels.values[j];
  }
  return Observable{std::move(g), {std::string(pointer)}, std::move(labels)};
}

Observable error_observable(const Observable& record, const Observable& obs,
                            const RegisterLayout& layout) {
  require_disjoint(record.scope, obs.scope);
  std::vector<std::string> scope = scope_union(record.scope, obs.scope, layout);
  RegisterLayout sub = layout.sublayout(scope);
  ComplexMatrix e =
      embed_operator(record.matrix, record.scope, sub) - embed_operator(obs.matrix, obs.scope, sub);
  return Observable{std::move(e), std::move(scope), {}};
}

double error_norm(const Observable& record, const Observable& obs, const RegisterLayout& layout,
                  const ComplexVector& state) {
  ComplexVector recorded = apply_on_registers(record.matrix, record.scope, layout, state);
  ComplexVector observed = apply_on_registers(obs.matrix, obs.scope, layout, state);
  return (recorded - observed).norm();
}

double verify_error_commutator_identity(const Observable& p, const Observable& u_obs,
                                        const Observable& g_p, const Observable& g_u,
                                        const RegisterLayout& layout) {
  require_disjoint(g_p.scope, p.scope);
  require_disjoint(g_u.scope, u_obs.scope);
  require_disjoint(g_p.scope, g_u.scope);
  const ComplexMatrix ep = embed_operator(error_observable(g_p, p, layout).matrix,
                                          scope_union(g_p.scope, p.scope, layout), layout);
  const ComplexMatrix eu = embed_operator(error_observable(g_u, u_obs, layout).matrix,
                                          scope_union(g_u.scope, u_obs.scope, layout), layout);
  const ComplexMatrix lhs = commutator(ep, eu);
  const ComplexMatrix rhs = commutator(embed_operator(p.matrix, p.scope, layout),
                                       embed_operator(u_obs.matrix, u_obs.scope, layout));
  return (lhs - rhs).norm();
}

U1Construction construct_u1(const ChainState& psi1, const std::vector<std::string>& scope,
                            const Observable& system_obs, std::uint64_t seed,
                            double label_spread) {
  if (label_spread < kMinLabelSpread) {
    throw std::invalid_argument("label spread below 1e-4 would blur measurement levels");
  }
  for (const std::string& name : system_obs.scope) {
    if (std::find(scope.begin(), scope.end(), name) == scope.end()) {
      throw std::invalid_argument("system observable register '" + name +
                                  "' is outside the construction scope");
    }
  }
  const ComplexVector phi = extract_scope_state(psi1.vector(), psi1.layout(), scope);
  const Eigen::Index m = phi.size();
  if (m < 2) throw std::invalid_argument("scope dimension must be at least 2");

  // Degenerate input: all weight on one configuration of the system
  // register(s) means phi factorizes as (system basis state) x (pointer
  // state). The anchored eigenbasis then carries no record correlation and
  // the non-commutation demand is void; flag instead of retrying.
  RegisterLayout sub = psi1.layout().sublayout(scope);
  bool degenerate = true;
  {
    Eigen::Index seen_config = -1;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (std::norm(phi(i)) <= 1e-18) continue;
      std::vector<Eigen::Index> digits = sub.digits_of(i);
      Eigen::Index config = 0;
      for (const std::string& name : system_obs.scope) {
        config = config * sub.dim_of(name) + digits[static_cast<std::size_t>(sub.position_of(name))];
      }
      if (seen_config < 0) {
        seen_config = config;
      } else if (config != seen_config) {
        degenerate = false;
        break;
      }
    }
  }

  U1Construction result;
  result.degenerate = degenerate;
  const int max_attempts = degenerate ? 1 : kU1MaxAttempts;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    SeededRng rng(seed + static_cast<std::uint64_t>(attempt));
    ComplexMatrix basis = complete_basis({phi}, m, rng);
    ComplexMatrix h = ComplexMatrix::Zero(m, m);
    ComplexMatrix u = ComplexMatrix::Zero(m, m);
    std::vector<double> labels(static_cast<std::size_t>(m));
    for (Eigen::Index j = 0; j < m; ++j) {
      const ComplexMatrix proj = basis.col(j) * basis.col(j).adjoint();
      const double lambda = static_cast<double>(j) * label_spread;
      const double theta =
          2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(m);
      h += lambda * proj;
      u += Complex(std::cos(theta), std::sin(theta)) * proj;
      labels[static_cast<std::size_t>(j)] = lambda;
    }
    result.gait = Gait{std::move(u), scope};
    result.companion = Observable{std::move(h), scope, std::move(labels)};
    result.commutator_norm = commutator_norm(system_obs.matrix, system_obs.scope,
                                             result.companion.matrix, scope, psi1.layout());
    result.attempts = attempt + 1;
    if (degenerate || result.commutator_norm > kNoncommuteThreshold) break;
  }
  // Exhausting every reseed without non-commutation only happens when the
  // input is structurally degenerate; flag it rather than fail.
  if (!degenerate && result.commutator_norm <= kNoncommuteThreshold) {
    result.degenerate = true;
  }
  return result;
}

void measure_observable(ChainState& state, const Observable& obs, const std::string& pointer,
                        const std::string& step_operands) {
  Gait v = measurement_unitary(obs, pointer, state.layout());
  state.apply_gait(v, "measure", step_operands);
}

namespace {

std::string format_amplitude(const Complex& c) {
  if (c.imag() == 0.0) return format_g17(c.real());
  std::string s = format_g17(c.real());
  s += (c.imag() < 0 ? "-" : "+");
  s += format_g17(std::abs(c.imag()));
  s += "i";
  return s;
}

std::vector<std::string> synthesize_scenario(Eigen::Index d, const std::vector<Complex>& coeffs,
                                             Eigen::Index p1, Eigen::Index p2, std::uint64_t seed,
                                             const godel::NumberRegistry& registry,
                                             double label_spread) {
  std::vector<std::string> lines;
  lines.push_back("seed " + std::to_string(seed));
  lines.push_back("system s dim=" + std::to_string(d));
  lines.push_back("register a1 dim=" + std::to_string(p1));
  lines.push_back("register a2 dim=" + std::to_string(p2));
  std::string godel_line = "godel R = numbers";
  for (std::size_t i = 0; i < registry.size(); ++i) {
    godel_line += " " + registry.number_at(i).to_decimal();
  }
  lines.push_back(godel_line);
  std::string state_line = "state psi = amplitudes";
  for (const Complex& c : coeffs) state_line += " " + format_amplitude(c);
  lines.push_back(state_line);
  lines.push_back("observable P = godel_diag R");
  lines.push_back("measure P -> a1");
  std::string define_line = "define U1 = eigen_including current on s a1";
  if (label_spread != 1.0) define_line += " spread=" + format_g17(label_spread);
  lines.push_back(define_line);
  lines.push_back("measure U1 -> a2");
  lines.push_back("assert accurate P tol=1e-9");
  lines.push_back("assert accurate U1 tol=1e-9");
  lines.push_back("assert noncommute P U1 min=1e-6");
  return lines;
}

}  // namespace

ChainOutcome albert_chain(Eigen::Index d, const std::vector<Complex>& coefficients,
                          std::pair<Eigen::Index, Eigen::Index> pointer_dims, std::uint64_t seed,
                          double label_spread) {
  const auto [p1, p2] = pointer_dims;
  if (d < 2) throw std::invalid_argument("system dimension must be at least 2");
  if (static_cast<Eigen::Index>(coefficients.size()) != d) {
    throw std::invalid_argument("need exactly one coefficient per system basis state");
  }
  if (p1 < d) {
    throw std::invalid_argument("first pointer cannot record " + std::to_string(d) + " levels");
  }
  if (p2 < d * p1) {
    throw std::invalid_argument("second pointer cannot record " + std::to_string(d * p1) +
                                " levels");
  }

  // Registry: d small odd code numbers 5, 9, 13, ... each carrying its
  // self-referential sentence registered by fiat (the sentence's true code is
  // astronomically larger; the fixed point is modeled, and reported as such).
  godel::NumberRegistry registry(static_cast<std::size_t>(d));
  std::vector<std::string> sentences;
  for (Eigen::Index w = 0; w < d; ++w) {
    godel::GodelNumber number(static_cast<std::uint64_t>(4 * w + 5));
    godel::Proposition sentence = godel::diagonal_sentence(number);
    registry.register_number(number);
    sentences.push_back(sentence.text());
  }

  RegisterLayout layout({{"s", d}, {"a1", p1}, {"a2", p2}});
  ComplexVector c(d);
  for (Eigen::Index i = 0; i < d; ++i) c(i) = coefficients[static_cast<std::size_t>(i)];
  StateVector psi{std::move(c)};

  ChainState state = ChainState::with_system_state(layout, "s", psi);
  Observable p = godel_observable(registry, layout, "s");
  measure_observable(state, p, "a1", "P -> a1");

  U1Construction u1 = construct_u1(state, {"s", "a1"}, p, seed, label_spread);
  state.log_step("define", "U1 on s a1 (attempts " + std::to_string(u1.attempts) + ")");
  measure_observable(state, u1.companion, "a2", "U1 -> a2");

  Observable g_p = albert_record_observable(p, "a1", layout);
  Observable g_u1 = albert_record_observable(u1.companion, "a2", layout);
  const double err_p = error_norm(g_p, p, layout, state.vector());
  const double err_u1 = error_norm(g_u1, u1.companion, layout, state.vector());

  ChainReport report;
  report.kind = "self-measurement-chain";
  report.seed = seed;
  report.layout_description = layout.describe();
  for (std::size_t i = 0; i < registry.size(); ++i) {
    report.registry_numbers.push_back(registry.number_at(i).to_decimal());
  }
  report.sentences = std::move(sentences);
  report.modeled_fixed_point = true;
  report.scenario_lines =
      synthesize_scenario(d, coefficients, p1, p2, seed, registry, label_spread);
  report.steps = state.steps();
  report.norms = {{"error_p", err_p},
                  {"error_u1", err_u1},
                  {"commutator_p_u1", u1.commutator_norm}};
  report.assertions = {
      {"accurate P", err_p, 1e-9, "<=", err_p <= 1e-9, false},
      {"accurate U1", err_u1, 1e-9, "<=", err_u1 <= 1e-9, false},
      {"noncommute P U1", u1.commutator_norm, kNoncommuteThreshold, ">",
       u1.commutator_norm > kNoncommuteThreshold, u1.degenerate},
  };
  report.norm_drift = state.norm_drift();
  report.degenerate = u1.degenerate;

  return ChainOutcome{std::move(report), std::move(state),    std::move(layout),
                      std::move(p),      std::move(u1.companion), std::move(u1.gait),
                      std::move(registry), u1.degenerate};
}

ChainReport external_chain(const ChainOutcome& base,
                           std::pair<Eigen::Index, Eigen::Index> tilde_pointer_dims,
                           std::uint64_t seed) {
  const auto [t1, t2] = tilde_pointer_dims;
  ChainState state = base.state.extended({{"at1", t1}, {"at2", t2}});
  const RegisterLayout& layout = state.layout();

  measure_observable(state, base.system_obs, "at1", "P -> at1");
  Observable g_p_tilde = albert_record_observable(base.system_obs, "at1", layout);
  // The first record is accurate at this point; the next measurement is what
  // spoils it. Captured before and after so the report shows the contrast.
  const double err_p_first = error_norm(g_p_tilde, base.system_obs, layout, state.vector());

  measure_observable(state, base.u1_companion, "at2", "U1 -> at2");
  Observable g_u1_tilde = albert_record_observable(base.u1_companion, "at2", layout);
  const double err_p = error_norm(g_p_tilde, base.system_obs, layout, state.vector());
  const double err_u1 = error_norm(g_u1_tilde, base.u1_companion, layout, state.vector());
  const double joint = std::max(err_p, err_u1);

  ChainReport report;
  report.kind = "external-chain";
  report.seed = seed;
  report.layout_description = layout.describe();
  report.registry_numbers = base.report.registry_numbers;
  report.sentences = base.report.sentences;
  report.modeled_fixed_point = base.report.modeled_fixed_point;
  report.scenario_lines = base.report.scenario_lines;
  report.steps = state.steps();
  report.norms = base.report.norms;
  report.norms.push_back({"external_error_p_after_first_measurement", err_p_first});
  report.norms.push_back({"external_error_p", err_p});
  report.norms.push_back({"external_error_u1", err_u1});
  report.assertions = base.report.assertions;
  report.assertions.push_back({"disturbance P U1", joint, kNoncommuteThreshold, ">",
                               joint > kNoncommuteThreshold, base.degenerate});
  report.norm_drift = state.norm_drift();
  report.degenerate = base.degenerate;
  return report;
}

}  // namespace albert
