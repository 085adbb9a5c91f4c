// Copyright 2026 The bellsamp Authors
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

#ifndef BELLSAMP_DENSE_HPP
#define BELLSAMP_DENSE_HPP

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "bellsamp/tableau.hpp"

namespace bellsamp {

using Complex = std::complex<double>;

// Brute-force statevector reference for desk-scale verification. All caps
// are explicit parameters; exceeding one raises CapacityError instead of
// silently truncating.
inline constexpr std::size_t kMaxDenseQubits = 14;
inline constexpr std::size_t kMaxBellQubits = 7;
inline constexpr std::size_t kMaxSearchQubits = 12;

// 2^n complex amplitudes with unit norm and the first nonzero amplitude
// made positive real, so equal states compare componentwise. Basis index
// bit (n-1-k) holds qubit k: an index read MSB-first lists qubit 0 first,
// matching the label order everywhere else.
class StateVector {
 public:
  StateVector(std::size_t n, std::vector<Complex> amps);

  std::size_t num_qubits() const { return n_; }
  const std::vector<Complex>& amplitudes() const { return amps_; }

  // Entrywise complex conjugate; an involution on normalized states.
  StateVector conjugated() const;

  // |<this|other>|.
  double overlap(const StateVector& other) const;

  bool approx_equal(const StateVector& other, double tol = 1e-10) const;

  // Debug dump: "index real imag" per line.
  std::string dump() const;

 private:
  std::size_t n_;
  std::vector<Complex> amps_;
};

// In-place i^e Z^z X^x action on a 2^n amplitude array.
void apply_pauli(const PauliString& p, std::vector<Complex>& amps);

// In-place Clifford gate on a 2^n amplitude array over `n` qubits.
void apply_gate_dense(const Gate& gate, std::vector<Complex>& amps,
                      std::size_t n);

// The unique (up to phase) unit vector fixed by all generators, computed by
// projecting a basis state with nonzero image through (I + g)/2 for each
// generator g.
StateVector from_tableau(const StabilizerTableau& t,
                         std::size_t max_qubits = kMaxDenseQubits);

// Index of a 2n-bit outcome: bit j of the label at index position 2n-1-j.
std::size_t bell_index(const BitVector& r);
BitVector bell_outcome(std::size_t index, std::size_t n);

// Probability of each 2n-bit outcome when corresponding qubit pairs of two
// copies of psi are measured in the Bell basis. Two independent evaluation
// paths:
//   bell_distribution            |<psi| sigma_r |psi*>|^2 / 2^n per entry
//   bell_distribution_projection two explicit copies pushed through the
//                                CNOT+H pair circuit, then |amplitude|^2
// Their entrywise agreement is itself a checked property.
std::vector<double> bell_distribution(const StateVector& psi);
std::vector<double> bell_distribution_projection(const StateVector& psi);

// The qubit set S with Z^(x in S) |psi> equal to |psi*> up to global phase,
// found by exhaustive subset search. Throws NotStabilizerError when no
// subset works.
std::vector<std::size_t> find_conjugation_set(
    const StateVector& psi, std::size_t max_qubits = kMaxSearchQubits);

// 2n-bit label with the (z, x) pair 10 on each listed qubit.
BitVector pair_encoding(const std::vector<std::size_t>& subset, std::size_t n);

// Amplitude structure of a stabilizer state: support is the affine space
// offset + span(direction_basis), and the amplitude at x is proportional to
// i^(linear_bits . x) * (-1)^(x^T quad_coeffs x).
struct QuadraticForm {
  std::size_t n = 0;
  BitVector offset;           // lexicographically least support element
  BitMatrix direction_basis;  // RREF basis of the direction space
  BitVector linear_bits;      // length n; the set S of the i^x_k factors
  BitMatrix quad_coeffs;      // n x n upper triangular, diagonal = linear
};

QuadraticForm quadratic_form_extract(
    const StateVector& psi, std::size_t max_qubits = kMaxSearchQubits);

StateVector reconstruct(const QuadraticForm& form);

}  // namespace bellsamp

#endif  // BELLSAMP_DENSE_HPP
