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

#ifndef BELLSAMP_TABLEAU_HPP
#define BELLSAMP_TABLEAU_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "bellsamp/pauli.hpp"
#include "bellsamp/rng.hpp"

namespace bellsamp {

enum class GateKind { H, S, X, Z, CNOT, CZ };

struct Gate {
  GateKind kind;
  std::size_t q0;
  std::size_t q1 = static_cast<std::size_t>(-1);

  static Gate h(std::size_t q) { return {GateKind::H, q}; }
  static Gate s(std::size_t q) { return {GateKind::S, q}; }
  static Gate x(std::size_t q) { return {GateKind::X, q}; }
  static Gate z(std::size_t q) { return {GateKind::Z, q}; }
  static Gate cnot(std::size_t control, std::size_t target) {
    return {GateKind::CNOT, control, target};
  }
  static Gate cz(std::size_t a, std::size_t b) { return {GateKind::CZ, a, b}; }

  bool two_qubit() const {
    return kind == GateKind::CNOT || kind == GateKind::CZ;
  }
};

// A stabilizer state as n commuting Hermitian Pauli generators with +/-1
// signs folded into their phases. The generator labels always have full F2
// rank, so the state is pure and uniquely determined up to global phase.
class StabilizerTableau {
 public:
  // |0...0>: generator k is +Z on qubit k.
  static StabilizerTableau zero_state(std::size_t n);

  // Exactly uniform over all stabilizer states: generator k is drawn
  // uniformly from the symplectic commutant of the previous ones minus
  // their span, then given a uniform sign. Every group admits the same
  // number of ordered generating sequences, so groups come out uniform.
  static StabilizerTableau random_state(std::size_t n, Rng& rng);

  // Validates: n >= 1 generators on n qubits, each Hermitian with +/-1
  // sign and a non-identity label, pairwise commuting, labels of rank n.
  static StabilizerTableau from_generators(std::vector<PauliString> gens);

  std::size_t num_qubits() const { return n_; }
  const std::vector<PauliString>& generators() const { return gens_; }

  // Conjugates every generator by the gate, phase-exact.
  void apply(const Gate& gate);
  void apply(const std::vector<Gate>& circuit);

  // Measures the Hermitian Pauli m on this state. If m's label is in the
  // group subspace the outcome is fixed by the signs and the state is
  // unchanged; otherwise the outcome is a fair coin and the state collapses
  // (the lowest-index anticommuting generator is replaced by outcome * m).
  int measure_pauli(const PauliString& m, Rng& rng);

  // Generators in RREF label order with signs carried through the row
  // operations exactly. Two tableaux describe the same state iff their
  // canonical forms are field-for-field equal.
  StabilizerTableau canonical_form() const;

  // RREF basis of the generator labels; always rank n.
  BitMatrix group_subspace() const;

  // Text format: "n=<count>" then one generator per line, e.g. "+XYZ".
  std::string to_text() const;
  static StabilizerTableau parse_text(std::string_view text);
  static StabilizerTableau parse_text(std::istream& in);

  // Field-for-field comparison; use canonical_form for state equality.
  bool operator==(const StabilizerTableau&) const = default;

  // Recheck the class invariants; throws std::invalid_argument on failure.
  void validate() const;

 private:
  StabilizerTableau(std::size_t n, std::vector<PauliString> gens)
      : n_(n), gens_(std::move(gens)) {}

  std::size_t n_ = 0;
  std::vector<PauliString> gens_;
};

}  // namespace bellsamp

#endif  // BELLSAMP_TABLEAU_HPP
