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

#include "bellsamp/learner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include <nlohmann/json.hpp>

#include "bellsamp/errors.hpp"

namespace bellsamp {

namespace {

// |psi> x |psi> as a 2n-qubit tableau: copy A on qubits 0..n-1, copy B on
// n..2n-1.
StabilizerTableau doubled(const StabilizerTableau& t) {
  const std::size_t n = t.num_qubits();
  std::vector<PauliString> gens;
  gens.reserve(2 * n);
  for (std::size_t side = 0; side < 2; ++side) {
    for (const auto& g : t.generators()) {
      BitVector bits(4 * n);
      for (std::size_t b = 0; b < 2 * n; ++b) {
        if (g.bits().get(b)) bits.set(2 * n * side + b, true);
      }
      gens.emplace_back(std::move(bits), g.phase_exponent());
    }
  }
  return StabilizerTableau::from_generators(std::move(gens));
}

PauliString z_on(std::size_t qubit, std::size_t n) {
  BitVector bits(2 * n);
  bits.set(2 * qubit, true);
  return PauliString(std::move(bits), 0);
}

}  // namespace

BitVector tableau_bell_sample(const StabilizerTableau& t, Rng& rng) {
  const std::size_t n = t.num_qubits();
  StabilizerTableau pair = doubled(t);
  for (std::size_t i = 0; i < n; ++i) {
    pair.apply(Gate::cnot(i, n + i));
    pair.apply(Gate::h(i));
  }
  BitVector r(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (pair.measure_pauli(z_on(i, 2 * n), rng) < 0) r.set(2 * i, true);
    if (pair.measure_pauli(z_on(n + i, 2 * n), rng) < 0) r.set(2 * i + 1, true);
  }
  return r;
}

BitVector coset_bell_sample(const StabilizerTableau& t,
                            const BitVector& offset, Rng& rng) {
  if (offset.size() != 2 * t.num_qubits()) {
    throw DimensionError("coset offset length must be 2n");
  }
  BitMatrix basis = t.group_subspace();
  BitVector r = offset;
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    if (rng.bit()) r ^= basis.row(i);
  }
  return r;
}

TableauAccess::TableauAccess(StabilizerTableau truth, Rng rng,
                             bool use_coset_sampling,
                             std::uint64_t copy_budget)
    : StateAccess(truth.num_qubits(), copy_budget),
      truth_(std::move(truth)),
      rng_(rng),
      coset_(use_coset_sampling),
      subspace_(truth_.group_subspace()),
      canon_(truth_.canonical_form().generators()) {}

BitVector TableauAccess::do_bell_sample() {
  if (!coset_) return tableau_bell_sample(truth_, rng_);
  if (!offset_) {
    // The first sample pins the coset; it is itself a valid draw.
    offset_ = tableau_bell_sample(truth_, rng_);
    return *offset_;
  }
  BitVector r = *offset_;
  for (std::size_t i = 0; i < subspace_.rows(); ++i) {
    if (rng_.bit()) r ^= subspace_.row(i);
  }
  return r;
}

int TableauAccess::do_measure_sign(const PauliString& m) {
  if (m.num_qubits() != num_qubits()) {
    throw DimensionError("measured Pauli qubit count mismatch");
  }
  if (!m.is_hermitian()) {
    throw std::invalid_argument("measured Pauli must be Hermitian");
  }
  // Each call consumes one fresh copy, so no collapse bookkeeping: inside
  // the group the sign readout is exact, outside it is a fair coin.
  BitVector rem = m.bits();
  PauliString prod(num_qubits());
  for (const auto& g : canon_) {
    std::size_t p = g.bits().leading_bit();
    if (p < rem.size() && rem.get(p)) {
      rem ^= g.bits();
      prod *= g;
    }
  }
  if (rem.any()) return rng_.sign();
  return prod.phase_exponent() == m.phase_exponent() ? +1 : -1;
}

DenseAccess::DenseAccess(StateVector psi, Rng rng, std::uint64_t copy_budget)
    : StateAccess(psi.num_qubits(), copy_budget),
      psi_(std::move(psi)),
      rng_(rng) {
  std::vector<double> dist = bell_distribution(psi_);
  cdf_.resize(dist.size());
  double acc = 0;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    acc += dist[i];
    cdf_[i] = acc;
  }
  cdf_.back() = 1.0;
}

BitVector DenseAccess::do_bell_sample() {
  double u = rng_.unit();
  auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  std::size_t idx = static_cast<std::size_t>(it - cdf_.begin());
  if (idx >= cdf_.size()) idx = cdf_.size() - 1;
  return bell_outcome(idx, num_qubits());
}

int DenseAccess::do_measure_sign(const PauliString& m) {
  if (m.num_qubits() != num_qubits()) {
    throw DimensionError("measured Pauli qubit count mismatch");
  }
  if (!m.is_hermitian()) {
    throw std::invalid_argument("measured Pauli must be Hermitian");
  }
  std::vector<Complex> acted = psi_.amplitudes();
  apply_pauli(m, acted);
  Complex expectation = 0;
  const auto& amps = psi_.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    expectation += std::conj(amps[i]) * acted[i];
  }
  double p_plus = std::clamp(0.5 * (1.0 + expectation.real()), 0.0, 1.0);
  return rng_.unit() < p_plus ? +1 : -1;
}

LearnReport learn(StateAccess& access) {
  if (access.copies_used() != 0) {
    throw std::invalid_argument("learn requires a fresh state access");
  }
  const std::size_t n = access.num_qubits();
  const auto start = std::chrono::steady_clock::now();

  LearnReport report;
  report.n = n;
  report.samples.reserve(2 * n + 1);

  BitVector r0 = access.bell_sample();
  report.samples.push_back(r0);
  BitMatrix diffs(2 * n);
  for (std::size_t i = 0; i < 2 * n; ++i) {
    BitVector r = access.bell_sample();
    diffs.append_row(r ^ r0);
    report.samples.push_back(std::move(r));
  }

  BitMatrix basis = rref_basis(diffs);
  report.basis_rank = basis.rows();

  if (report.basis_rank == n) {
    std::vector<PauliString> gens;
    gens.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      PauliString probe = PauliString::hermitian_from_bits(basis.row(i), +1);
      int sign = access.measure_sign(probe);
      gens.push_back(PauliString::hermitian_from_bits(basis.row(i), sign));
    }
    report.tableau = StabilizerTableau::from_generators(std::move(gens));
    report.success = true;
  }

  report.copies_used = access.copies_used();
  report.duration_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

double spanning_success_probability(std::size_t n, std::size_t k) {
  if (k < n) return 0.0;
  double prod = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    prod *= 1.0 - std::exp2(static_cast<double>(i) - static_cast<double>(k));
  }
  return prod;
}

std::string LearnReport::to_json(int indent) const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["success"] = success;
  j["copies_used"] = copies_used;
  j["basis_rank"] = basis_rank;
  nlohmann::ordered_json sample_list = nlohmann::ordered_json::array();
  for (const auto& s : samples) sample_list.push_back(s.str());
  j["samples"] = std::move(sample_list);
  if (tableau) {
    j["tableau"] = tableau->to_text();
  } else {
    j["tableau"] = nullptr;
  }
  j["duration_seconds"] = duration_seconds;
  return j.dump(indent);
}

}  // namespace bellsamp
