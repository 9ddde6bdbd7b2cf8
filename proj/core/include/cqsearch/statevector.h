// Copyright 2026 The cqsearch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dense statevector simulator restricted to the gates the complex-query
// search needs.
//
// Qubit q is bit q of the basis-state index (least significant bit first).
// A register listed as qubits (q_0, ..., q_{k-1}) holds the value whose bit b
// is the state of q_b.

#ifndef CQSEARCH_STATEVECTOR_H_
#define CQSEARCH_STATEVECTOR_H_

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cqsearch/oracle.h"

namespace cqsearch {

using Amplitude = std::complex<double>;

inline constexpr int kDefaultQubitCap = 24;
// Hard upper bound regardless of configuration; the index type is 64-bit.
inline constexpr int kMaxAddressableQubits = 40;

// Qubit allocation for one run:
//   sample register i (1..eta): qubits (i-1)*nu .. i*nu - 1
//   incidence qubit j (1..N):   qubit nu*eta + j - 1
//   ancilla:                    qubit nu*eta + N
class RegisterLayout {
 public:
  explicit RegisterLayout(const SearchParameters& params);

  int nu() const { return nu_; }
  std::size_t eta() const { return eta_; }
  std::size_t n_items() const { return n_items_; }

  std::size_t total_qubits() const { return nu_ * eta_ + n_items_ + 1; }
  std::size_t sample_qubit_count() const { return nu_ * eta_; }

  std::vector<int> sample_register(std::size_t i) const;
  std::vector<int> incidence_register() const;
  int incidence_qubit(Item j) const;
  int ancilla() const;

 private:
  std::size_t nu_;
  std::size_t eta_;
  std::size_t n_items_;
};

class StateVector {
 public:
  // |0...0> on n_qubits. CapacityError if n_qubits > max_qubits.
  explicit StateVector(int n_qubits, int max_qubits = kDefaultQubitCap);

  // Scales `amplitudes` (length 2^k, not all zero) to unit norm.
  static StateVector normalized(std::vector<Amplitude> amplitudes,
                                int max_qubits = kDefaultQubitCap);

  int n_qubits() const { return n_qubits_; }
  std::size_t dimension() const { return amplitudes_.size(); }
  std::span<const Amplitude> amplitudes() const { return amplitudes_; }
  Amplitude amplitude(std::uint64_t index) const { return amplitudes_[index]; }
  double norm_squared() const;

  void apply_hadamard(int qubit);
  void apply_sigma_z(int qubit);

  // Flips `target` on basis states whose control bits spell control_value
  // (bit b of control_value <-> controls[b]).
  void apply_value_controlled_flip(std::span<const int> controls, std::uint64_t control_value,
                                   int target);

  // Multiplies basis states whose control bits spell control_value by
  // `phase` (unit modulus).
  void apply_value_controlled_phase(std::span<const int> controls, std::uint64_t control_value,
                                    Amplitude phase = -1.0);

  // H^{(x)k} diag(-1, 1, ..., 1) H^{(x)k} on the register, taken literally:
  // equal to I - 2|s><s|, the usual diffusion up to a global -1.
  void apply_inversion_about_average(std::span<const int> register_qubits);

  // Probability of each bit pattern on `qubits` (pattern bit b <-> qubits[b]).
  std::vector<double> marginal_distribution(std::span<const int> qubits) const;

 private:
  StateVector() = default;

  void check_qubit(int qubit) const;
  std::uint64_t control_mask(std::span<const int> controls, std::uint64_t control_value,
                             std::uint64_t* pattern) const;

  int n_qubits_ = 0;
  std::vector<Amplitude> amplitudes_;
};

// psi_1 = |0...0> over layout.total_qubits().
StateVector make_basis_state(const RegisterLayout& layout, int max_qubits = kDefaultQubitCap);

// |<a|b>|; DomainError on dimension mismatch.
double fidelity_mod_phase(const StateVector& a, const StateVector& b);

// low (x) high with `low` on the least significant qubits.
StateVector tensor_product(const StateVector& low, const StateVector& high,
                           int max_qubits = kDefaultQubitCap);

}  // namespace cqsearch

#endif  // CQSEARCH_STATEVECTOR_H_
