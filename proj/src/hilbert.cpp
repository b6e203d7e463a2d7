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

#include "albertsim/hilbert.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace albert {

double SeededRng::uniform01() {
  // High 53 bits give a uniform double in [0, 1); pinned here rather than
  // delegated so the stream is identical across standard libraries.
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double SeededRng::normal() {
  // Box-Muller; the clamp keeps log() finite when uniform01 returns 0.
  double u1 = uniform01();
  double u2 = uniform01();
  if (u1 < 1e-300) u1 = 1e-300;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Complex SeededRng::normal_complex() {
  double re = normal();
  double im = normal();
  return Complex(re, im);
}

RegisterLayout::RegisterLayout(std::vector<Register> registers) : registers_(std::move(registers)) {
  for (const Register& r : registers_) {
    if (r.name.empty()) throw std::invalid_argument("register with empty name");
    if (r.dim < 1) throw std::invalid_argument("register '" + r.name + "' has dimension < 1");
    for (const Register& other : registers_) {
      if (&other != &r && other.name == r.name) {
        throw std::invalid_argument("duplicate register name '" + r.name + "'");
      }
    }
  }
  strides_.assign(registers_.size(), 1);
  for (std::size_t i = registers_.size(); i-- > 0;) {
    if (i + 1 < registers_.size()) {
      strides_[i] = strides_[i + 1] * registers_[i + 1].dim;
    }
  }
  total_ = 1;
  for (const Register& r : registers_) total_ *= r.dim;
}

bool RegisterLayout::has(std::string_view name) const {
  return std::any_of(registers_.begin(), registers_.end(),
                     [&](const Register& r) { return r.name == name; });
}

Eigen::Index RegisterLayout::position_of(std::string_view name) const {
  for (std::size_t i = 0; i < registers_.size(); ++i) {
    if (registers_[i].name == name) return static_cast<Eigen::Index>(i);
  }
  throw std::out_of_range("unknown register '" + std::string(name) + "'");
}

Eigen::Index RegisterLayout::dim_of(std::string_view name) const {
  return registers_[static_cast<std::size_t>(position_of(name))].dim;
}

Eigen::Index RegisterLayout::stride_of(std::string_view name) const {
  return strides_[static_cast<std::size_t>(position_of(name))];
}

std::vector<Eigen::Index> RegisterLayout::digits_of(Eigen::Index flat) const {
  if (flat < 0 || flat >= total_) throw std::out_of_range("flat index out of range");
  std::vector<Eigen::Index> digits(registers_.size());
  for (std::size_t i = 0; i < registers_.size(); ++i) {
    digits[i] = (flat / strides_[i]) % registers_[i].dim;
  }
  return digits;
}

Eigen::Index RegisterLayout::flat_of(const std::vector<Eigen::Index>& digits) const {
  if (digits.size() != registers_.size()) throw std::invalid_argument("digit count mismatch");
  Eigen::Index flat = 0;
  for (std::size_t i = 0; i < registers_.size(); ++i) {
    if (digits[i] < 0 || digits[i] >= registers_[i].dim) {
      throw std::out_of_range("digit out of range for register '" + registers_[i].name + "'");
    }
    flat += digits[i] * strides_[i];
  }
  return flat;
}

RegisterLayout RegisterLayout::sublayout(const std::vector<std::string>& names) const {
  std::vector<Register> subset;
  subset.reserve(names.size());
  for (const std::string& n : names) {
    subset.push_back(registers_[static_cast<std::size_t>(position_of(n))]);
  }
  return RegisterLayout(std::move(subset));
}

RegisterLayout RegisterLayout::extended(const std::vector<Register>& extra) const {
  std::vector<Register> all = registers_;
  all.insert(all.end(), extra.begin(), extra.end());
  return RegisterLayout(std::move(all));
}

std::string RegisterLayout::describe() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < registers_.size(); ++i) {
    if (i > 0) out << ' ';
    out << registers_[i].name << ':' << registers_[i].dim;
  }
  return out.str();
}

StateVector::StateVector(ComplexVector amplitudes) : amps_(std::move(amplitudes)) {
  if (amps_.size() == 0) throw std::invalid_argument("empty state vector");
  if (!amps_.allFinite()) throw std::invalid_argument("non-finite amplitude");
  double n = amps_.norm();
  if (n < 1e-12) throw std::invalid_argument("state vector has (near-)zero norm");
  amps_ /= n;
}

StateVector StateVector::basis_state(Eigen::Index dim, Eigen::Index index) {
  if (index < 0 || index >= dim) throw std::out_of_range("basis index out of range");
  ComplexVector v = ComplexVector::Zero(dim);
  v(index) = Complex(1.0, 0.0);
  return StateVector(std::move(v));
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).norm() <= tol;
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  ComplexMatrix gram = m.adjoint() * m;
  gram -= ComplexMatrix::Identity(m.rows(), m.cols());
  return gram.norm() <= tol;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

ComplexVector tensor(const ComplexVector& a, const ComplexVector& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    throw std::invalid_argument("commutator requires equal square matrices");
  }
  return a * b - b * a;
}

namespace {

// Index bookkeeping shared by embed_operator and apply_on_registers: maps a
// flat layout index to (scope part, complement part) and back.
struct ScopeSplit {
  std::vector<Eigen::Index> scope_positions;   // positions in layout order of the scope registers, in scope order
  std::vector<Eigen::Index> scope_strides;     // layout strides of those registers
  std::vector<Eigen::Index> scope_local_strides;  // strides inside the op's own basis
  std::vector<Eigen::Index> other_positions;
  std::vector<Eigen::Index> other_strides;
  std::vector<Eigen::Index> other_dims;
  Eigen::Index scope_dim = 1;
  Eigen::Index other_dim = 1;
};

ScopeSplit split_scope(const std::vector<std::string>& scope, const RegisterLayout& layout) {
  ScopeSplit s;
  std::vector<bool> in_scope(static_cast<std::size_t>(layout.register_count()), false);
  for (const std::string& name : scope) {
    Eigen::Index pos = layout.position_of(name);
    if (in_scope[static_cast<std::size_t>(pos)]) {
      throw std::invalid_argument("register '" + name + "' repeated in scope");
    }
    in_scope[static_cast<std::size_t>(pos)] = true;
    s.scope_positions.push_back(pos);
    s.scope_strides.push_back(layout.stride_of(name));
    s.scope_dim *= layout.dim_of(name);
  }
  s.scope_local_strides.assign(scope.size(), 1);
  for (std::size_t i = scope.size(); i-- > 0;) {
    if (i + 1 < scope.size()) {
      s.scope_local_strides[i] =
          s.scope_local_strides[i + 1] * layout.dim_of(scope[i + 1]);
    }
  }
  for (Eigen::Index pos = 0; pos < layout.register_count(); ++pos) {
    if (!in_scope[static_cast<std::size_t>(pos)]) {
      const Register& r = layout.at(pos);
      s.other_positions.push_back(pos);
      s.other_strides.push_back(layout.stride_of(r.name));
      s.other_dims.push_back(r.dim);
      s.other_dim *= r.dim;
    }
  }
  return s;
}

// Flat layout offset of the k-th configuration of the complement registers.
Eigen::Index other_offset(const ScopeSplit& s, Eigen::Index k) {
  Eigen::Index offset = 0;
  for (std::size_t i = s.other_dims.size(); i-- > 0;) {
    offset += (k % s.other_dims[i]) * s.other_strides[i];
    k /= s.other_dims[i];
  }
  return offset;
}

// Flat layout offsets of every scope basis state (indexed by op-local index).
std::vector<Eigen::Index> scope_offsets_of(const ScopeSplit& s) {
  std::vector<Eigen::Index> offsets(static_cast<std::size_t>(s.scope_dim));
  for (Eigen::Index j = 0; j < s.scope_dim; ++j) {
    Eigen::Index rem = j;
    Eigen::Index offset = 0;
    for (std::size_t i = 0; i < s.scope_local_strides.size(); ++i) {
      Eigen::Index digit = rem / s.scope_local_strides[i];
      rem %= s.scope_local_strides[i];
      offset += digit * s.scope_strides[i];
    }
    offsets[static_cast<std::size_t>(j)] = offset;
  }
  return offsets;
}

}  // namespace

ComplexMatrix embed_operator(const ComplexMatrix& op, const std::vector<std::string>& scope,
                             const RegisterLayout& layout) {
  ScopeSplit s = split_scope(scope, layout);
  if (op.rows() != op.cols() || op.rows() != s.scope_dim) {
    throw std::invalid_argument("operator dimension does not match scope");
  }
  const Eigen::Index total = layout.total_dim();
  ComplexMatrix result = ComplexMatrix::Zero(total, total);
  const std::vector<Eigen::Index> scope_offsets = scope_offsets_of(s);
  for (Eigen::Index k = 0; k < s.other_dim; ++k) {
    const Eigen::Index base = other_offset(s, k);
    for (Eigen::Index col = 0; col < s.scope_dim; ++col) {
      for (Eigen::Index row = 0; row < s.scope_dim; ++row) {
        const Complex v = op(row, col);
        if (v != Complex(0.0, 0.0)) {
          result(base + scope_offsets[static_cast<std::size_t>(row)],
                 base + scope_offsets[static_cast<std::size_t>(col)]) = v;
        }
      }
    }
  }
  return result;
}

ComplexVector apply_on_registers(const ComplexMatrix& op, const std::vector<std::string>& scope,
                                 const RegisterLayout& layout, const ComplexVector& state) {
  ScopeSplit s = split_scope(scope, layout);
  if (op.rows() != op.cols() || op.rows() != s.scope_dim) {
    throw std::invalid_argument("operator dimension does not match scope");
  }
  if (state.size() != layout.total_dim()) {
    throw std::invalid_argument("state dimension does not match layout");
  }
  const std::vector<Eigen::Index> scope_offsets = scope_offsets_of(s);
  ComplexVector result = ComplexVector::Zero(state.size());
  ComplexVector slice(s.scope_dim);
  for (Eigen::Index k = 0; k < s.other_dim; ++k) {
    const Eigen::Index base = other_offset(s, k);
    for (Eigen::Index j = 0; j < s.scope_dim; ++j) {
      slice(j) = state(base + scope_offsets[static_cast<std::size_t>(j)]);
    }
    ComplexVector mapped = op * slice;
    for (Eigen::Index j = 0; j < s.scope_dim; ++j) {
      result(base + scope_offsets[static_cast<std::size_t>(j)]) = mapped(j);
    }
  }
  return result;
}

Eigensystem hermitian_eigensystem(const ComplexMatrix& m) {
  if (!is_hermitian(m, kHermitianTol)) {
    throw std::invalid_argument("matrix is not Hermitian within tolerance");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigendecomposition failed to converge");
  }
  return Eigensystem{solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix complete_basis(const std::vector<ComplexVector>& vectors, Eigen::Index dim,
                             SeededRng& rng) {
  if (static_cast<Eigen::Index>(vectors.size()) > dim) {
    throw std::invalid_argument("more seed vectors than dimensions");
  }
  ComplexMatrix basis(dim, dim);
  Eigen::Index filled = 0;
  for (const ComplexVector& v : vectors) {
    if (v.size() != dim) throw std::invalid_argument("seed vector dimension mismatch");
    ComplexVector w = v;
    for (Eigen::Index j = 0; j < filled; ++j) {
      w -= basis.col(j).dot(w) * basis.col(j);
    }
    if (w.norm() < 1e-6) {
      throw std::invalid_argument("seed vectors are not linearly independent");
    }
    basis.col(filled++) = w / w.norm();
  }
  while (filled < dim) {
    ComplexVector w(dim);
    for (Eigen::Index i = 0; i < dim; ++i) w(i) = rng.normal_complex();
    for (Eigen::Index j = 0; j < filled; ++j) {
      w -= basis.col(j).dot(w) * basis.col(j);
    }
    // A Gaussian draw landing in the span of the filled columns has measure
    // zero; redraw on near-dependence rather than failing.
    if (w.norm() < 1e-6) continue;
    basis.col(filled++) = w / w.norm();
  }
  return basis;
}

double expectation_value(const StateVector& state, const ComplexMatrix& op) {
  if (op.rows() != op.cols() || op.rows() != state.dim()) {
    throw std::invalid_argument("operator dimension does not match state");
  }
  Complex value = state.amplitudes().dot(op * state.amplitudes());
  if (std::abs(value.imag()) > 1e-10) {
    throw std::invalid_argument("expectation value has a non-real part: operator not Hermitian");
  }
  return value.real();
}

ComplexVector extract_scope_state(const ComplexVector& state, const RegisterLayout& layout,
                                  const std::vector<std::string>& scope) {
  ScopeSplit s = split_scope(scope, layout);
  if (state.size() != layout.total_dim()) {
    throw std::invalid_argument("state dimension does not match layout");
  }
  const std::vector<Eigen::Index> scope_offsets = scope_offsets_of(s);
  // Find the complement configuration carrying the weight; any second one
  // above tolerance means the scope state is not well defined.
  Eigen::Index support = -1;
  double support_weight = 0.0;
  for (Eigen::Index k = 0; k < s.other_dim; ++k) {
    const Eigen::Index base = other_offset(s, k);
    double weight = 0.0;
    for (Eigen::Index j = 0; j < s.scope_dim; ++j) {
      weight += std::norm(state(base + scope_offsets[static_cast<std::size_t>(j)]));
    }
    if (weight > support_weight) {
      support_weight = weight;
      support = k;
    }
  }
  if (support < 0) throw std::invalid_argument("state has no weight");
  for (Eigen::Index k = 0; k < s.other_dim; ++k) {
    if (k == support) continue;
    const Eigen::Index base = other_offset(s, k);
    for (Eigen::Index j = 0; j < s.scope_dim; ++j) {
      if (std::norm(state(base + scope_offsets[static_cast<std::size_t>(j)])) > 1e-12) {
        throw std::invalid_argument(
            "state is entangled with registers outside the requested scope");
      }
    }
  }
  ComplexVector result(s.scope_dim);
  const Eigen::Index base = other_offset(s, support);
  for (Eigen::Index j = 0; j < s.scope_dim; ++j) {
    result(j) = state(base + scope_offsets[static_cast<std::size_t>(j)]);
  }
  return result;
}

double commutator_norm(const ComplexMatrix& a, const std::vector<std::string>& scope_a,
                       const ComplexMatrix& b, const std::vector<std::string>& scope_b,
                       const RegisterLayout& layout) {
  // Registers outside both scopes contribute only an identity factor, so the
  // full-layout Frobenius norm is the union-scope norm times sqrt of the
  // complement dimension.
  std::vector<std::string> union_scope;
  for (const Register& r : layout.registers()) {
    const bool in_a = std::find(scope_a.begin(), scope_a.end(), r.name) != scope_a.end();
    const bool in_b = std::find(scope_b.begin(), scope_b.end(), r.name) != scope_b.end();
    if (in_a || in_b) union_scope.push_back(r.name);
  }
  RegisterLayout sub = layout.sublayout(union_scope);
  ComplexMatrix ea = embed_operator(a, scope_a, sub);
  ComplexMatrix eb = embed_operator(b, scope_b, sub);
  const double factor =
      std::sqrt(static_cast<double>(layout.total_dim()) / static_cast<double>(sub.total_dim()));
  return commutator(ea, eb).norm() * factor;
}

}  // namespace albert
