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

#ifndef ALBERTSIM_HILBERT_HPP
#define ALBERTSIM_HILBERT_HPP

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace albert {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// Structural tolerances used across the library. Reconstruction-level checks
// (eigendecomposition round trips) are one decade looser than structural ones.
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kUnitaryTol = 1e-10;
inline constexpr double kReconstructionTol = 1e-9;
inline constexpr double kStateNormTol = 1e-12;

/// Deterministic 64-bit-seeded stream of uniforms and Gaussians.
///
/// The generator is std::mt19937_64 with uniforms taken as the high 53 bits
/// of each draw (x >> 11) * 2^-53 and Gaussians produced by Box-Muller, so a
/// seed pins the exact sequence independent of the standard library's
/// distribution implementations.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }
  double uniform01();
  double normal();
  Complex normal_complex();

 private:
  std::mt19937_64 engine_;
};

struct Register {
  std::string name;
  Eigen::Index dim = 0;
};

/// Ordered list of named registers with row-major index arithmetic: the
/// leftmost register is the most significant digit of a flat basis index.
class RegisterLayout {
 public:
  RegisterLayout() = default;
  explicit RegisterLayout(std::vector<Register> registers);

  Eigen::Index register_count() const { return static_cast<Eigen::Index>(registers_.size()); }
  Eigen::Index total_dim() const { return total_; }
  const std::vector<Register>& registers() const { return registers_; }
  const Register& at(Eigen::Index position) const { return registers_.at(static_cast<std::size_t>(position)); }

  bool has(std::string_view name) const;
  Eigen::Index position_of(std::string_view name) const;  // throws on unknown name
  Eigen::Index dim_of(std::string_view name) const;
  Eigen::Index stride_of(std::string_view name) const;

  std::vector<Eigen::Index> digits_of(Eigen::Index flat) const;
  Eigen::Index flat_of(const std::vector<Eigen::Index>& digits) const;

  /// Layout restricted to `names`, in the order given.
  RegisterLayout sublayout(const std::vector<std::string>& names) const;
  /// Layout with `extra` registers appended on the right.
  RegisterLayout extended(const std::vector<Register>& extra) const;

  std::string describe() const;  // e.g. "s:2 a1:2 a2:4"

 private:
  std::vector<Register> registers_;
  std::vector<Eigen::Index> strides_;
  Eigen::Index total_ = 1;
};

/// Unit-norm complex amplitude vector. Construction normalizes, so the norm
/// is 1 to within kStateNormTol afterwards; zero or non-finite input throws.
class StateVector {
 public:
  explicit StateVector(ComplexVector amplitudes);
  static StateVector basis_state(Eigen::Index dim, Eigen::Index index);

  Eigen::Index dim() const { return amps_.size(); }
  const ComplexVector& amplitudes() const { return amps_; }
  double norm() const { return amps_.norm(); }

 private:
  ComplexVector amps_;
};

bool is_hermitian(const ComplexMatrix& m, double tol = kHermitianTol);
bool is_unitary(const ComplexMatrix& m, double tol = kUnitaryTol);

/// Kronecker product; basis ordering is row-major over the left factor first.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector tensor(const ComplexVector& a, const ComplexVector& b);

/// ab - ba. Throws on dimension mismatch.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Operator acting as `op` on the `scope` registers (scope order = op index
/// order, leftmost most significant) and as identity elsewhere, expressed in
/// the layout's global basis. Scope registers need not be adjacent.
ComplexMatrix embed_operator(const ComplexMatrix& op, const std::vector<std::string>& scope,
                             const RegisterLayout& layout);

/// embed_operator(op) * state without materializing the global matrix.
ComplexVector apply_on_registers(const ComplexMatrix& op, const std::vector<std::string>& scope,
                                 const RegisterLayout& layout, const ComplexVector& state);

struct Eigensystem {
  Eigen::VectorXd eigenvalues;   // ascending
  ComplexMatrix eigenvectors;    // orthonormal columns, aligned to eigenvalues
};

/// Spectral decomposition of a Hermitian matrix. Throws if the input deviates
/// from Hermiticity by more than kHermitianTol in Frobenius norm.
Eigensystem hermitian_eigensystem(const ComplexMatrix& m);

/// Orthonormal basis of C^dim whose leading columns are the given vectors
/// (re-orthonormalized; inputs must already be orthonormal to within
/// kHermitianTol). The remaining columns are drawn from `rng`, so the
/// completion is deterministic for a fixed seed.
ComplexMatrix complete_basis(const std::vector<ComplexVector>& vectors, Eigen::Index dim,
                             SeededRng& rng);

/// <state|op|state> for Hermitian op; the imaginary part is checked against
/// 1e-10 and discarded. A larger imaginary part signals a non-Hermitian
/// operator and throws.
double expectation_value(const StateVector& state, const ComplexMatrix& op);

/// State restricted to `scope`, provided every register outside the scope
/// holds a definite basis state; throws if amplitude weight above 1e-12 is
/// spread over more than one configuration of the complement registers.
ComplexVector extract_scope_state(const ComplexVector& state, const RegisterLayout& layout,
                                  const std::vector<std::string>& scope);

/// Frobenius norm of [embed(a), embed(b)] in the full layout, computed on the
/// union of the two scopes and scaled by sqrt(total_dim / union_dim).
double commutator_norm(const ComplexMatrix& a, const std::vector<std::string>& scope_a,
                       const ComplexMatrix& b, const std::vector<std::string>& scope_b,
                       const RegisterLayout& layout);

}  // namespace albert

#endif  // ALBERTSIM_HILBERT_HPP
