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

#ifndef BELLSAMP_LEARNER_HPP
#define BELLSAMP_LEARNER_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "bellsamp/dense.hpp"
#include "bellsamp/tableau.hpp"

namespace bellsamp {

// Black-box handle to copies of an unknown state. The learner can only
// call bell_sample (a joint Bell-basis measurement on two fresh copies,
// costing 2) and measure_sign (a single-copy measurement in a Hermitian
// Pauli's eigenbasis, costing 1). Copy accounting lives here so every
// backend pays the same price.
class StateAccess {
 public:
  static constexpr std::uint64_t kUnlimited =
      std::numeric_limits<std::uint64_t>::max();

  virtual ~StateAccess() = default;

  std::size_t num_qubits() const { return n_; }
  std::uint64_t copies_used() const { return used_; }

  BitVector bell_sample() {
    spend(2);
    return do_bell_sample();
  }

  int measure_sign(const PauliString& m) {
    spend(1);
    return do_measure_sign(m);
  }

 protected:
  StateAccess(std::size_t n, std::uint64_t copy_budget)
      : n_(n), budget_(copy_budget) {}

  virtual BitVector do_bell_sample() = 0;
  virtual int do_measure_sign(const PauliString& m) = 0;

 private:
  void spend(std::uint64_t copies) {
    if (budget_ != kUnlimited && used_ + copies > budget_) {
      throw AccessExhaustedError("state access copy budget exhausted");
    }
    used_ += copies;
  }

  std::size_t n_;
  std::uint64_t used_ = 0;
  std::uint64_t budget_;
};

// One joint Bell measurement on two copies, simulated exactly: both copies
// go into one 2n-qubit tableau, the pair circuit (CNOT then H) runs on each
// (A_i, B_i), and all qubits are read out in the computational basis.
// Outcome pair i is (A_i bit, B_i bit).
BitVector tableau_bell_sample(const StabilizerTableau& t, Rng& rng);

// Same distribution by construction of the outcome set: a uniformly random
// combination of the group subspace rows XORed onto a fixed coset offset.
// O(n^2) per sample; agreement with tableau_bell_sample is tested, not
// assumed.
BitVector coset_bell_sample(const StabilizerTableau& t,
                            const BitVector& offset, Rng& rng);

// Access backed by a tableau simulation of the hidden state. With
// use_coset_sampling the first Bell sample runs the full pair-circuit
// simulation and later ones reuse it as the coset offset; without it every
// sample simulates the circuit.
class TableauAccess : public StateAccess {
 public:
  TableauAccess(StabilizerTableau truth, Rng rng,
                bool use_coset_sampling = true,
                std::uint64_t copy_budget = kUnlimited);

  const StabilizerTableau& truth() const { return truth_; }

 protected:
  BitVector do_bell_sample() override;
  int do_measure_sign(const PauliString& m) override;

 private:
  StabilizerTableau truth_;
  Rng rng_;
  bool coset_;
  std::optional<BitVector> offset_;
  BitMatrix subspace_;
  std::vector<PauliString> canon_;  // for O(n^2) sign readout
};

// Access backed by the dense oracle: Bell samples drawn from the exact
// outcome distribution, sign measurements Born-sampled from <psi|M|psi>.
class DenseAccess : public StateAccess {
 public:
  DenseAccess(StateVector psi, Rng rng,
              std::uint64_t copy_budget = kUnlimited);

 protected:
  BitVector do_bell_sample() override;
  int do_measure_sign(const PauliString& m) override;

 private:
  StateVector psi_;
  std::vector<double> cdf_;
  Rng rng_;
};

struct LearnReport {
  std::size_t n = 0;
  bool success = false;
  std::uint64_t copies_used = 0;
  std::size_t basis_rank = 0;
  std::vector<BitVector> samples;  // 2n+1 raw outcomes; samples[0] is r0
  std::optional<StabilizerTableau> tableau;
  double duration_seconds = 0.0;

  std::string to_json(int indent = -1) const;
};

// The Bell-sampling learner. One reference sample r0, 2n further samples
// XORed against it, an RREF basis of the differences, and one single-copy
// sign measurement per basis element. Succeeds iff the differences span
// the full n dimensions, consuming 5n+2 copies; on rank deficiency it
// stops after sampling with 4n+2 copies spent and no output state.
// Requires a fresh access (no copies consumed yet).
LearnReport learn(StateAccess& access);

// Exact probability that k uniform vectors span an n-dimensional F2 space:
// prod_{i=0}^{n-1} (1 - 2^(i-k)). The complement at k = 2n is the learner's
// exact failure probability and is bounded by 2^-n.
double spanning_success_probability(std::size_t n, std::size_t k);

}  // namespace bellsamp

#endif  // BELLSAMP_LEARNER_HPP
