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

#include "bellsamp/tableau.hpp"

#include <istream>
#include <sstream>
#include <utility>

#include "bellsamp/errors.hpp"

namespace bellsamp {

namespace {

// Conjugation rules for the stored convention i^e Z^z X^x per qubit.
// Derived from HZH = X, HXH = Z, S X S^dag = (-i) ZX, and the CNOT / CZ
// action on Z/X factors; verified densely against matrix conjugation in the
// test suite.
void conjugate_one(PauliString& p, GateKind kind, std::size_t q) {
  bool z = p.bits().get(2 * q);
  bool x = p.bits().get(2 * q + 1);
  std::uint8_t e = p.phase_exponent();
  BitVector bits = p.bits();
  switch (kind) {
    case GateKind::H:
      bits.set(2 * q, x);
      bits.set(2 * q + 1, z);
      if (z && x) e = static_cast<std::uint8_t>((e + 2) & 3);
      break;
    case GateKind::S:
      bits.set(2 * q, z ^ x);
      if (x) e = static_cast<std::uint8_t>((e + 3) & 3);
      break;
    case GateKind::X:
      if (z) e = static_cast<std::uint8_t>((e + 2) & 3);
      break;
    case GateKind::Z:
      if (x) e = static_cast<std::uint8_t>((e + 2) & 3);
      break;
    default:
      throw std::invalid_argument("not a single-qubit gate");
  }
  p = PauliString(std::move(bits), e);
}

void conjugate_two(PauliString& p, GateKind kind, std::size_t a,
                   std::size_t b) {
  bool za = p.bits().get(2 * a), xa = p.bits().get(2 * a + 1);
  bool zb = p.bits().get(2 * b), xb = p.bits().get(2 * b + 1);
  std::uint8_t e = p.phase_exponent();
  BitVector bits = p.bits();
  if (kind == GateKind::CNOT) {
    // a = control, b = target: Z_b pulls back onto the control, X_a pushes
    // forward onto the target. Phase-free in the Z^z X^x ordering.
    bits.set(2 * a, za ^ zb);
    bits.set(2 * b + 1, xb ^ xa);
  } else {  // CZ
    bits.set(2 * a, za ^ xb);
    bits.set(2 * b, zb ^ xa);
    if (xa && xb) e = static_cast<std::uint8_t>((e + 2) & 3);
  }
  p = PauliString(std::move(bits), e);
}

BitMatrix label_matrix(const std::vector<PauliString>& gens) {
  BitMatrix m(gens.empty() ? 0 : gens.front().bits().size());
  for (const auto& g : gens) m.append_row(g.bits());
  return m;
}

}  // namespace

StabilizerTableau StabilizerTableau::zero_state(std::size_t n) {
  if (n == 0) throw std::domain_error("qubit count must be at least 1");
  std::vector<PauliString> gens;
  gens.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    BitVector bits(2 * n);
    bits.set(2 * k, true);
    gens.emplace_back(std::move(bits), 0);
  }
  return StabilizerTableau(n, std::move(gens));
}

StabilizerTableau StabilizerTableau::random_state(std::size_t n, Rng& rng) {
  if (n == 0) throw std::domain_error("qubit count must be at least 1");
  std::vector<PauliString> gens;
  gens.reserve(n);
  BitMatrix chosen_rref(2 * n);  // RREF of labels picked so far
  BitMatrix constraints(2 * n);  // pair-swapped labels; rows of the form

  for (std::size_t k = 0; k < n; ++k) {
    BitMatrix commutant = nullspace(constraints);  // dimension 2n - k
    BitVector label(2 * n);
    do {
      label = BitVector(2 * n);
      for (std::size_t i = 0; i < commutant.rows(); ++i) {
        if (rng.bit()) label ^= commutant.row(i);
      }
    } while (in_span(label, chosen_rref));  // rejects zero and dependents
    gens.push_back(PauliString::hermitian_from_bits(label, rng.sign()));
    constraints.append_row(pair_swap(label));
    BitMatrix all = label_matrix(gens);
    chosen_rref = rref_basis(all);
  }
  return StabilizerTableau(n, std::move(gens));
}

StabilizerTableau StabilizerTableau::from_generators(
    std::vector<PauliString> gens) {
  if (gens.empty()) throw std::domain_error("qubit count must be at least 1");
  std::size_t n = gens.front().num_qubits();
  StabilizerTableau t(n, std::move(gens));
  t.validate();
  return t;
}

void StabilizerTableau::validate() const {
  if (gens_.size() != n_ || n_ == 0) {
    throw std::invalid_argument("tableau needs exactly n generators");
  }
  for (const auto& g : gens_) {
    if (g.num_qubits() != n_) {
      throw std::invalid_argument("generator qubit count mismatch");
    }
    if (g.is_identity_label()) {
      throw std::invalid_argument("identity generator not allowed");
    }
    if (!g.is_hermitian()) {
      throw std::invalid_argument("generator is not Hermitian");
    }
    g.sign();  // throws unless the phase is +/-1 in the Hermitian convention
  }
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (!gens_[i].commutes_with(gens_[j])) {
        throw std::invalid_argument("generators do not commute");
      }
    }
  }
  if (rank(label_matrix(gens_)) != n_) {
    throw std::invalid_argument("generator labels are not independent");
  }
}

void StabilizerTableau::apply(const Gate& gate) {
  if (gate.q0 >= n_ || (gate.two_qubit() && gate.q1 >= n_)) {
    throw std::domain_error("gate qubit index out of range");
  }
  if (gate.two_qubit() && gate.q0 == gate.q1) {
    throw std::domain_error("two-qubit gate needs distinct qubits");
  }
  for (auto& g : gens_) {
    if (gate.two_qubit()) {
      conjugate_two(g, gate.kind, gate.q0, gate.q1);
    } else {
      conjugate_one(g, gate.kind, gate.q0);
    }
  }
}

void StabilizerTableau::apply(const std::vector<Gate>& circuit) {
  for (const auto& gate : circuit) apply(gate);
}

int StabilizerTableau::measure_pauli(const PauliString& m, Rng& rng) {
  if (m.num_qubits() != n_) {
    throw DimensionError("measured Pauli qubit count mismatch");
  }
  if (!m.is_hermitian()) {
    throw std::invalid_argument("measured Pauli must be Hermitian");
  }
  m.sign();  // require a +/-1 phase, not +/-i

  // The group subspace is maximal isotropic, so m's label lies in it iff
  // m commutes with every generator.
  std::size_t first = n_;
  for (std::size_t i = 0; i < n_; ++i) {
    if (!gens_[i].commutes_with(m)) {
      first = i;
      break;
    }
  }

  if (first == n_) {
    // Deterministic branch: rebuild m (up to sign) as a product of
    // generators and compare phases. The state does not change.
    StabilizerTableau canon = canonical_form();
    BitVector rem = m.bits();
    PauliString prod(n_);
    for (const auto& g : canon.gens_) {
      std::size_t p = g.bits().leading_bit();
      if (rem.get(p)) {
        rem ^= g.bits();
        prod *= g;
      }
    }
    if (rem.any()) {
      throw std::logic_error("commuting Pauli outside the group subspace");
    }
    return prod.phase_exponent() == m.phase_exponent() ? +1 : -1;
  }

  // Random branch: fair coin, then repair the other anticommuting
  // generators with the replaced one and store outcome * m in its place.
  int outcome = rng.sign();
  PauliString pivot = gens_[first];
  for (std::size_t i = 0; i < n_; ++i) {
    if (i != first && !gens_[i].commutes_with(m)) {
      gens_[i] *= pivot;
    }
  }
  gens_[first] = PauliString(
      m.bits(), static_cast<std::uint8_t>(
                    (m.phase_exponent() + (outcome < 0 ? 2 : 0)) & 3));
  return outcome;
}

StabilizerTableau StabilizerTableau::canonical_form() const {
  // Gauss-Jordan on the labels where the row operation is the phase-exact
  // Pauli product, so signs stay correct. RREF is unique, which makes the
  // result a canonical representative of the group.
  std::vector<PauliString> work = gens_;
  const std::size_t ncols = 2 * n_;
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < n_; ++col) {
    std::size_t p = r;
    while (p < n_ && !work[p].bits().get(col)) ++p;
    if (p == n_) continue;
    std::swap(work[r], work[p]);
    for (std::size_t q = 0; q < n_; ++q) {
      if (q != r && work[q].bits().get(col)) work[q] *= work[r];
    }
    ++r;
  }
  return StabilizerTableau(n_, std::move(work));
}

BitMatrix StabilizerTableau::group_subspace() const {
  return rref_basis(label_matrix(gens_));
}

std::string StabilizerTableau::to_text() const {
  std::string out = "n=" + std::to_string(n_) + "\n";
  for (const auto& g : gens_) {
    out += g.str();
    out += '\n';
  }
  return out;
}

StabilizerTableau StabilizerTableau::parse_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_text(in);
}

StabilizerTableau StabilizerTableau::parse_text(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty tableau text", 1);
  if (line.rfind("n=", 0) != 0) {
    throw ParseError("expected header of the form n=<count>", 1);
  }
  std::size_t n = 0;
  try {
    std::size_t pos = 0;
    n = std::stoul(line.substr(2), &pos);
    if (pos != line.size() - 2) throw std::invalid_argument("trailing junk");
  } catch (const std::exception&) {
    throw ParseError("invalid qubit count in header", 1);
  }
  if (n == 0) throw ParseError("qubit count must be at least 1", 1);

  std::vector<PauliString> gens;
  gens.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (!std::getline(in, line)) {
      throw ParseError("expected " + std::to_string(n) + " generators", k + 1);
    }
    PauliString g(1);
    try {
      g = PauliString::parse(line);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), k + 2);
    }
    if (g.num_qubits() != n) {
      throw ParseError("generator has wrong qubit count", k + 2);
    }
    gens.push_back(std::move(g));
  }
  try {
    return from_generators(std::move(gens));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid generator set: ") + e.what());
  }
}

}  // namespace bellsamp
