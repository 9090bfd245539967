// SPDX-License-Identifier: MIT
#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "ghzec/errors.hpp"

namespace ghzec {

using cdouble = std::complex<double>;

/// Largest register the dense simulator accepts.
inline constexpr int kMaxQubits = 24;
/// Largest subsystem a reduced density matrix may keep.
inline constexpr int kMaxDensityQubits = 12;
/// Absolute tolerance for amplitude-level comparisons.
inline constexpr double kAmpTolerance = 1e-12;
/// Fidelity at or above this value counts as perfect recovery.
inline constexpr double kFidelityThreshold = 1.0 - 1e-10;

/// Dense state vector over n qubits, immutable once constructed.
///
/// Qubit 0 is the most significant bit of the amplitude index, so the bits of
/// an index, read left to right, name qubits 0, 1, ..., n-1.  Basis-state
/// labels in documentation follow the same convention: |q0 q1 ... q_{n-1}>.
class State {
 public:
  /// |0...0> on n qubits (1 <= n <= kMaxQubits).
  static State zero(int n_qubits);

  /// Computational basis state |index> on n qubits.
  static State basis(int n_qubits, std::uint64_t index);

  /// Wraps an amplitude vector of length 2^n.  The vector must already be
  /// normalized to within 1e-8; it is renormalized exactly on ingest.
  static State from_amplitudes(int n_qubits, std::vector<cdouble> amps);

  int n_qubits() const noexcept { return n_qubits_; }
  std::uint64_t dim() const noexcept { return amps_.size(); }
  std::span<const cdouble> amplitudes() const noexcept { return amps_; }
  cdouble amplitude(std::uint64_t index) const;

  /// Euclidean norm (1 within 1e-12 for every state produced by this module).
  double norm() const noexcept;

 private:
  State(int n_qubits, std::vector<cdouble> amps)
      : n_qubits_(n_qubits), amps_(std::move(amps)) {}

  friend State apply_gate(State s, const struct Gate& g);
  friend State apply_sequence(State s, const struct GateSequence& seq);
  friend State tensor(const State& a, const State& b);
  friend State insert_zero_qubits(const State& s, int position, int count);
  friend State random_state(int n_qubits, std::uint64_t seed);

  int n_qubits_ = 0;
  std::vector<cdouble> amps_;
};

enum class GateKind {
  kH,
  kCnot,
  kCz,
  kToffoli,
  kUnitary1,
  kUnitary2,
};

/// One gate acting on named qubits.  Factory functions validate nothing about
/// register width (that happens at application time) but do validate matrix
/// unitarity and index distinctness.
struct Gate {
  GateKind kind;
  int q0 = -1;  ///< H/kUnitary1: target.  Others: first (control) qubit.
  int q1 = -1;  ///< kCnot/kCz: target.  kToffoli: second control.  kUnitary2: second qubit.
  int q2 = -1;  ///< kToffoli: target.
  std::vector<cdouble> matrix;  ///< Row-major 2x2 or 4x4 for custom unitaries.

  static Gate h(int target);
  static Gate cnot(int control, int target);
  static Gate cz(int a, int b);
  static Gate toffoli(int control0, int control1, int target);
  /// Arbitrary single-qubit unitary (row-major, basis |0>,|1>).
  static Gate unitary1(int target, const std::array<cdouble, 4>& m);
  /// Arbitrary two-qubit unitary.  Row/column index is (bit of qa << 1) | bit
  /// of qb, i.e. qa is the high bit of the gate-local basis.
  static Gate unitary2(int qa, int qb, const std::array<cdouble, 16>& m);

  /// Qubits touched by the gate, in role order.
  std::vector<int> qubits() const;
};

/// An ordered list of gates; position in the list is application order.
struct GateSequence {
  std::vector<Gate> gates;

  std::size_t size() const noexcept { return gates.size(); }
  bool empty() const noexcept { return gates.empty(); }
  void append(Gate g) { gates.push_back(std::move(g)); }
  void append(const GateSequence& other) {
    gates.insert(gates.end(), other.gates.begin(), other.gates.end());
  }
};

/// Dense density matrix on n <= kMaxDensityQubits qubits, row-major.
class DensityMatrix {
 public:
  explicit DensityMatrix(int n_qubits);

  int n_qubits() const noexcept { return n_qubits_; }
  std::uint64_t dim() const noexcept { return dim_; }
  cdouble& entry(std::uint64_t row, std::uint64_t col) {
    return m_[row * dim_ + col];
  }
  const cdouble& entry(std::uint64_t row, std::uint64_t col) const {
    return m_[row * dim_ + col];
  }
  std::span<const cdouble> data() const noexcept { return m_; }

  double trace_real() const noexcept;
  double max_hermiticity_defect() const noexcept;

 private:
  int n_qubits_;
  std::uint64_t dim_;
  std::vector<cdouble> m_;
};

/// Applies one gate.  Pass by value: callers keep their original, move in an
/// rvalue to update in place without copying the amplitude buffer.
State apply_gate(State s, const Gate& g);

/// Applies gates in list order.  Runs of CNOTs whose control set is disjoint
/// from their target set are executed as one fused index-permutation pass;
/// this is an exact rewrite (no arithmetic), so results are bit-identical to
/// gate-by-gate application.
State apply_sequence(State s, const GateSequence& seq);

/// Tensor product; qubits of `a` come first (more significant).
State tensor(const State& a, const State& b);

/// Returns the state on n+count qubits obtained by inserting `count` qubits
/// in state |0> so that they occupy qubit indices position..position+count-1.
State insert_zero_qubits(const State& s, int position, int count);

/// Partial trace onto `keep` (strictly ascending qubit indices).  Qubit
/// keep[j] of the input becomes qubit j of the result.
DensityMatrix reduced_density_matrix(const State& s, std::span<const int> keep);

/// <psi| rho |psi>.  Dimensions must match.
double fidelity(const DensityMatrix& rho, const State& psi);

/// <a|b> for equal-width states.
cdouble inner_product(const State& a, const State& b);

/// Fidelity <psi| Tr_rest(|s><s|) |psi> computed in one pass over `s`,
/// without materializing the reduced density matrix.  `keep` as in
/// reduced_density_matrix; psi lives on the kept qubits.
double subsystem_fidelity(const State& s, std::span<const int> keep,
                          const State& psi);

/// Haar-like random state: i.i.d. complex Gaussian amplitudes from a seeded
/// stream, normalized.
State random_state(int n_qubits, std::uint64_t seed);

}  // namespace ghzec
