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

#include "cqsearch/statevector.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "cqsearch/errors.h"

namespace cqsearch {
namespace {

void check_capacity(int n_qubits, int max_qubits) {
  if (n_qubits < 0) throw DomainError("negative qubit count");
  const int cap = std::min(max_qubits, kMaxAddressableQubits);
  if (n_qubits > cap) {
    throw CapacityError("state needs " + std::to_string(n_qubits) +
                        " qubits, simulator cap is " + std::to_string(cap));
  }
}

}  // namespace

RegisterLayout::RegisterLayout(const SearchParameters& params)
    : nu_(static_cast<std::size_t>(params.nu())), eta_(params.eta()), n_items_(params.n_items()) {}

std::vector<int> RegisterLayout::sample_register(std::size_t i) const {
  if (i < 1 || i > eta_) {
    throw DomainError("sample register " + std::to_string(i) + " outside {1.." +
                      std::to_string(eta_) + "}");
  }
  std::vector<int> qubits(nu_);
  for (std::size_t b = 0; b < nu_; ++b) qubits[b] = static_cast<int>((i - 1) * nu_ + b);
  return qubits;
}

std::vector<int> RegisterLayout::incidence_register() const {
  std::vector<int> qubits(n_items_);
  for (std::size_t j = 0; j < n_items_; ++j) qubits[j] = static_cast<int>(nu_ * eta_ + j);
  return qubits;
}

int RegisterLayout::incidence_qubit(Item j) const {
  if (j < 1 || j > n_items_) {
    throw DomainError("incidence index " + std::to_string(j) + " outside {1.." +
                      std::to_string(n_items_) + "}");
  }
  return static_cast<int>(nu_ * eta_ + j - 1);
}

int RegisterLayout::ancilla() const { return static_cast<int>(nu_ * eta_ + n_items_); }

StateVector::StateVector(int n_qubits, int max_qubits) : n_qubits_(n_qubits) {
  check_capacity(n_qubits, max_qubits);
  amplitudes_.assign(std::size_t{1} << n_qubits, Amplitude{0.0, 0.0});
  amplitudes_[0] = 1.0;
}

StateVector StateVector::normalized(std::vector<Amplitude> amplitudes, int max_qubits) {
  const std::size_t dim = amplitudes.size();
  if (dim == 0 || (dim & (dim - 1)) != 0) {
    throw DomainError("amplitude vector length " + std::to_string(dim) +
                      " is not a power of two");
  }
  int n_qubits = 0;
  while ((std::size_t{1} << n_qubits) < dim) ++n_qubits;
  check_capacity(n_qubits, max_qubits);
  double norm2 = 0.0;
  for (const Amplitude& a : amplitudes) norm2 += std::norm(a);
  if (norm2 == 0.0) throw DomainError("cannot normalize the zero vector");
  const double scale = 1.0 / std::sqrt(norm2);
  for (Amplitude& a : amplitudes) a *= scale;
  StateVector state;
  state.n_qubits_ = n_qubits;
  state.amplitudes_ = std::move(amplitudes);
  return state;
}

double StateVector::norm_squared() const {
  double sum = 0.0;
  for (const Amplitude& a : amplitudes_) sum += std::norm(a);
  return sum;
}

void StateVector::check_qubit(int qubit) const {
  if (qubit < 0 || qubit >= n_qubits_) {
    throw DomainError("qubit " + std::to_string(qubit) + " outside [0, " +
                      std::to_string(n_qubits_) + ")");
  }
}

std::uint64_t StateVector::control_mask(std::span<const int> controls,
                                        std::uint64_t control_value,
                                        std::uint64_t* pattern) const {
  if (controls.size() < 64 && (control_value >> controls.size()) != 0) {
    throw DomainError("control value " + std::to_string(control_value) + " needs more than " +
                      std::to_string(controls.size()) + " control bits");
  }
  std::uint64_t mask = 0;
  *pattern = 0;
  for (std::size_t b = 0; b < controls.size(); ++b) {
    check_qubit(controls[b]);
    const std::uint64_t bit = std::uint64_t{1} << controls[b];
    if (mask & bit) throw DomainError("duplicate control qubit " + std::to_string(controls[b]));
    mask |= bit;
    if ((control_value >> b) & 1) *pattern |= bit;
  }
  return mask;
}

void StateVector::apply_hadamard(int qubit) {
  check_qubit(qubit);
  const std::size_t stride = std::size_t{1} << qubit;
  const double h = std::numbers::sqrt2 / 2.0;
  for (std::size_t block = 0; block < amplitudes_.size(); block += 2 * stride) {
    for (std::size_t i = block; i < block + stride; ++i) {
      const Amplitude a0 = amplitudes_[i];
      const Amplitude a1 = amplitudes_[i + stride];
      amplitudes_[i] = h * (a0 + a1);
      amplitudes_[i + stride] = h * (a0 - a1);
    }
  }
}

void StateVector::apply_sigma_z(int qubit) {
  check_qubit(qubit);
  const std::size_t stride = std::size_t{1} << qubit;
  for (std::size_t block = stride; block < amplitudes_.size(); block += 2 * stride) {
    for (std::size_t i = block; i < block + stride; ++i) amplitudes_[i] = -amplitudes_[i];
  }
}

void StateVector::apply_value_controlled_flip(std::span<const int> controls,
                                              std::uint64_t control_value, int target) {
  check_qubit(target);
  if (std::find(controls.begin(), controls.end(), target) != controls.end()) {
    throw DomainError("target qubit " + std::to_string(target) + " is also a control");
  }
  std::uint64_t pattern = 0;
  const std::uint64_t mask = control_mask(controls, control_value, &pattern);
  const std::uint64_t target_bit = std::uint64_t{1} << target;
  for (std::uint64_t i = 0; i < amplitudes_.size(); ++i) {
    if ((i & target_bit) == 0 && (i & mask) == pattern) {
      std::swap(amplitudes_[i], amplitudes_[i | target_bit]);
    }
  }
}

void StateVector::apply_value_controlled_phase(std::span<const int> controls,
                                               std::uint64_t control_value, Amplitude phase) {
  if (std::abs(std::abs(phase) - 1.0) > 1e-12) throw DomainError("phase must have unit modulus");
  std::uint64_t pattern = 0;
  const std::uint64_t mask = control_mask(controls, control_value, &pattern);
  for (std::uint64_t i = 0; i < amplitudes_.size(); ++i) {
    if ((i & mask) == pattern) amplitudes_[i] *= phase;
  }
}

void StateVector::apply_inversion_about_average(std::span<const int> register_qubits) {
  if (register_qubits.empty()) throw DomainError("empty register");
  for (int q : register_qubits) apply_hadamard(q);
  apply_value_controlled_phase(register_qubits, 0);
  for (int q : register_qubits) apply_hadamard(q);
}

std::vector<double> StateVector::marginal_distribution(std::span<const int> qubits) const {
  if (qubits.size() >= 32) throw CapacityError("marginal over 32 or more qubits");
  std::uint64_t seen = 0;
  for (int q : qubits) {
    check_qubit(q);
    const std::uint64_t bit = std::uint64_t{1} << q;
    if (seen & bit) throw DomainError("duplicate qubit " + std::to_string(q) + " in marginal");
    seen |= bit;
  }
  std::vector<double> probs(std::size_t{1} << qubits.size(), 0.0);
  for (std::uint64_t i = 0; i < amplitudes_.size(); ++i) {
    const double p = std::norm(amplitudes_[i]);
    if (p == 0.0) continue;
    std::size_t pattern = 0;
    for (std::size_t b = 0; b < qubits.size(); ++b) pattern |= ((i >> qubits[b]) & 1) << b;
    probs[pattern] += p;
  }
  return probs;
}

StateVector make_basis_state(const RegisterLayout& layout, int max_qubits) {
  const std::size_t total = layout.total_qubits();
  if (total > static_cast<std::size_t>(std::min(max_qubits, kMaxAddressableQubits))) {
    throw CapacityError("layout needs nu*eta + N + 1 = " + std::to_string(layout.nu()) + "*" +
                        std::to_string(layout.eta()) + " + " + std::to_string(layout.n_items()) +
                        " + 1 = " + std::to_string(total) + " qubits, simulator cap is " +
                        std::to_string(std::min(max_qubits, kMaxAddressableQubits)));
  }
  return StateVector(static_cast<int>(total), max_qubits);
}

double fidelity_mod_phase(const StateVector& a, const StateVector& b) {
  if (a.dimension() != b.dimension()) {
    throw DomainError("fidelity of states with dimensions " + std::to_string(a.dimension()) +
                      " and " + std::to_string(b.dimension()));
  }
  Amplitude inner{0.0, 0.0};
  const auto aa = a.amplitudes();
  const auto bb = b.amplitudes();
  for (std::size_t i = 0; i < aa.size(); ++i) inner += std::conj(aa[i]) * bb[i];
  return std::min(1.0, std::abs(inner));
}

StateVector tensor_product(const StateVector& low, const StateVector& high, int max_qubits) {
  check_capacity(low.n_qubits() + high.n_qubits(), max_qubits);
  std::vector<Amplitude> out(low.dimension() * high.dimension());
  const auto lo = low.amplitudes();
  const auto hi = high.amplitudes();
  for (std::size_t h = 0; h < hi.size(); ++h) {
    for (std::size_t l = 0; l < lo.size(); ++l) out[h * lo.size() + l] = hi[h] * lo[l];
  }
  return StateVector::normalized(std::move(out), max_qubits);
}

}  // namespace cqsearch
