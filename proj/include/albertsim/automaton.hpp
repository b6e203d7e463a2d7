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

#ifndef ALBERTSIM_AUTOMATON_HPP
#define ALBERTSIM_AUTOMATON_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "albertsim/godel.hpp"
#include "albertsim/hilbert.hpp"

namespace albert {

/// Hermitian operator together with the registers it acts on and the exact
/// eigenvalues it was constructed from (level order for diagonal operators,
/// ascending otherwise; empty when no exact labels exist).
struct Observable {
  ComplexMatrix matrix;
  std::vector<std::string> scope;
  std::vector<double> labels;
};

/// Unitary step of the machine, with the registers it acts on.
struct Gait {
  ComplexMatrix matrix;
  std::vector<std::string> scope;
};

struct StepRecord {
  std::string operation;  // "prepare", "measure", "define", "extend"
  std::string operands;   // human-readable detail, e.g. "P -> a1"
  double norm_after = 0.0;
};

/// Full-layout state vector plus an ordered log of the steps that produced
/// it. Applying a gait checks the norm stays within kStateNormTol of 1.
class ChainState {
 public:
  ChainState(RegisterLayout layout, const StateVector& initial);

  /// All registers at |0> except `system_register`, which holds `system_state`.
  static ChainState with_system_state(const RegisterLayout& layout,
                                      std::string_view system_register,
                                      const StateVector& system_state);

  const RegisterLayout& layout() const { return layout_; }
  const ComplexVector& vector() const { return vector_; }
  double norm() const { return vector_.norm(); }
  const std::vector<StepRecord>& steps() const { return steps_; }
  double norm_drift() const { return norm_drift_; }

  void apply_gait(const Gait& gait, const std::string& step_operation,
                  const std::string& step_operands);
  void log_step(const std::string& operation, const std::string& operands);

  /// Same state tensored with |0> on each appended register; log carries over.
  ChainState extended(const std::vector<Register>& extra) const;

 private:
  RegisterLayout layout_;
  ComplexVector vector_;
  std::vector<StepRecord> steps_;
  double norm_drift_ = 0.0;
};

struct AssertionRecord {
  std::string name;        // e.g. "accurate P"
  double measured = 0.0;
  double threshold = 0.0;
  std::string comparison;  // "<=" (accuracy) or ">" (non-commutation)
  bool pass = false;
  bool skipped = false;    // true when a degenerate input voids the check
};

struct NormRecord {
  std::string name;
  double value = 0.0;
};

/// Everything a run reports: every number here is reproducible from
/// (seed, layout, coefficients) alone.
struct ChainReport {
  std::string kind;  // "self-measurement-chain", "external-chain", "scenario"
  std::uint64_t seed = 0;
  std::string layout_description;
  std::vector<std::string> registry_numbers;  // decimal strings, exact
  std::vector<std::string> sentences;         // registered sentence texts
  bool modeled_fixed_point = false;  // sentence numbers assigned by fiat
  std::vector<std::string> scenario_lines;    // source echo (scripts) or synthesized
  std::vector<StepRecord> steps;
  std::vector<NormRecord> norms;
  std::vector<AssertionRecord> assertions;
  double norm_drift = 0.0;
  bool degenerate = false;

  bool all_passed() const;
};

/// Diagonal observable on `register_name` whose entry i is the number held at
/// registry index i (exactly representable in a double) and 0 on unregistered
/// levels. Labels are the diagonal entries in level order.
Observable godel_observable(const godel::NumberRegistry& registry, const RegisterLayout& layout,
                            std::string_view register_name);

/// Unitary mapping `psi` exactly to the `target_index` basis state; the
/// remaining action comes from two seeded basis completions.
Gait proof_gait(const StateVector& psi, Eigen::Index target_index, Eigen::Index dim,
                std::uint64_t seed);

/// U = sum_j phase_j |v_j><v_j| over P's eigenbasis, so [P, U] = 0 by
/// construction. P must be nondegenerate on its scope (rejected otherwise:
/// a degenerate spectrum leaves the eigenbasis ambiguous).
Gait commuting_gait(const Observable& p, const std::vector<Complex>& phases);

/// <psi|U'PU|psi>: the number read off after walking `psi` through the gait.
double readout_godel_number(const StateVector& psi, const Gait& u, const Observable& p);

/// Pre-measurement unitary V = sum_j Proj_j (x) Shift^j on obs.scope plus the
/// pointer: distinct eigenvalues sorted ascending, rank j drives j pointer
/// increments, so V(|v_j> (x) |0>) = |v_j> (x) |j>. Correlation only — no
/// collapse anywhere in the library.
Gait measurement_unitary(const Observable& obs, std::string_view pointer,
                         const RegisterLayout& layout);

/// Record observable G on the pointer register: level j carries the j-th
/// sorted distinct eigenvalue of obs, unused levels 0. Structurally a pointer
/// operator only — it is not a function of obs itself.
Observable albert_record_observable(const Observable& obs, std::string_view pointer,
                                    const RegisterLayout& layout);

/// E = embed(record) - embed(obs): vanishes exactly on states whose pointer
/// record agrees with the observed value.
Observable error_observable(const Observable& record, const Observable& obs,
                            const RegisterLayout& layout);

/// ||(record - obs) state|| without materializing the error operator on the
/// full layout; identical to applying error_observable's matrix.
double error_norm(const Observable& record, const Observable& obs, const RegisterLayout& layout,
                  const ComplexVector& state);

/// Frobenius norm of [E(P), E(U)] - [P, U] in the full layout. The records
/// live on their own registers, so the difference is 0 up to roundoff.
double verify_error_commutator_identity(const Observable& p, const Observable& u_obs,
                                        const Observable& g_p, const Observable& g_u,
                                        const RegisterLayout& layout);

/// Eigenbasis-anchored operator pair on `scope`: Hermitian companion
/// H = sum_j (j * label_spread) |b_j><b_j| and unitary sum_j e^{2 pi i j / m} |b_j><b_j|
/// with b_0 the current state restricted to `scope` and the rest a seeded
/// completion. Retries the completion (up to 16 reseeds) until
/// ||[embed(system_obs), embed(H)]||_F > 1e-6; a state whose scope part is a
/// product of a system basis state with a pointer state is flagged degenerate
/// instead (no retries — the non-commutation requirement is void there).
struct U1Construction {
  Gait gait;
  Observable companion;  // shares the gait's eigenbasis; labels j * label_spread
  bool degenerate = false;
  double commutator_norm = 0.0;  // full-layout ||[system_obs, companion]||_F
  int attempts = 0;
};

inline constexpr int kU1MaxAttempts = 16;
inline constexpr double kNoncommuteThreshold = 1e-6;

U1Construction construct_u1(const ChainState& psi1, const std::vector<std::string>& scope,
                            const Observable& system_obs, std::uint64_t seed,
                            double label_spread = 1.0);

/// Applies the pre-measurement of obs into `pointer` on the chain state and
/// logs the step.
void measure_observable(ChainState& state, const Observable& obs, const std::string& pointer,
                        const std::string& step_operands);

/// Result of the two-stage self-measurement run; the report carries the
/// verdicts, the rest feeds the external contrast.
struct ChainOutcome {
  ChainReport report;
  ChainState state;           // |psi2> on (system, pointer1, pointer2)
  RegisterLayout layout;
  Observable system_obs;      // P
  Observable u1_companion;    // H1 on (system, pointer1)
  Gait u1;
  godel::NumberRegistry registry;
  bool degenerate = false;
};

/// The full pipeline: registry of d numbers 5, 9, 13, ... with their
/// self-referential sentences registered by fiat; P from the registry;
/// psi = sum_w c_w |w>; measure P into pointer1; build (U1, H1) on
/// system+pointer1; measure H1 into pointer2. Reports ||E(P) psi2||,
/// ||E(U1) psi2|| (both <= 1e-9 expected) and ||[P, H1]||_F (> 1e-6 expected
/// for non-degenerate coefficients; the assertion is skipped, not failed, on
/// degenerate input).
ChainOutcome albert_chain(Eigen::Index d, const std::vector<Complex>& coefficients,
                          std::pair<Eigen::Index, Eigen::Index> pointer_dims,
                          std::uint64_t seed, double label_spread = 1.0);

/// Second machine measuring the first: appends fresh pointers, re-measures P
/// and then H1 on |psi2>. Its H1 measurement disturbs its own P record, so
/// max of the two error norms is expected > 1e-6 on generic inputs (and ~0 on
/// a degenerate single-branch state, where everything commutes).
ChainReport external_chain(const ChainOutcome& base,
                           std::pair<Eigen::Index, Eigen::Index> tilde_pointer_dims,
                           std::uint64_t seed);

}  // namespace albert

#endif  // ALBERTSIM_AUTOMATON_HPP
