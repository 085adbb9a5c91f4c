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

#include "bellsamp/dense.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>

#include "bellsamp/errors.hpp"

namespace bellsamp {

namespace {

constexpr double kNormTol = 1e-12;
constexpr double kPhaseTol = 1e-8;
constexpr double kSupportTol = 1e-8;

const Complex kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

std::size_t qubit_bit(std::size_t n, std::size_t qubit) {
  return std::size_t(1) << (n - 1 - qubit);
}

// Basis index of an n-bit coordinate vector (qubit 0 most significant).
std::size_t index_of(const BitVector& x) {
  std::size_t idx = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    idx = (idx << 1) | (x.get(k) ? 1u : 0u);
  }
  return idx;
}

BitVector coords_of(std::size_t idx, std::size_t n) {
  BitVector x(n);
  for (std::size_t k = 0; k < n; ++k) {
    if ((idx >> (n - 1 - k)) & 1u) x.set(k, true);
  }
  return x;
}

}  // namespace

StateVector::StateVector(std::size_t n, std::vector<Complex> amps)
    : n_(n), amps_(std::move(amps)) {
  if (amps_.size() != (std::size_t(1) << n_)) {
    throw DimensionError("amplitude count must be 2^n");
  }
  double norm2 = 0;
  for (const auto& a : amps_) norm2 += std::norm(a);
  if (norm2 < kNormTol) {
    throw std::invalid_argument("cannot normalize the zero vector");
  }
  double inv = 1.0 / std::sqrt(norm2);
  for (auto& a : amps_) a *= inv;
  // Global phase: rotate the first amplitude of visible magnitude onto the
  // positive real axis.
  for (const auto& a : amps_) {
    if (std::abs(a) > kSupportTol) {
      Complex rot = std::conj(a) / std::abs(a);
      for (auto& b : amps_) b *= rot;
      break;
    }
  }
}

StateVector StateVector::conjugated() const {
  std::vector<Complex> out(amps_.size());
  for (std::size_t i = 0; i < amps_.size(); ++i) out[i] = std::conj(amps_[i]);
  return StateVector(n_, std::move(out));
}

double StateVector::overlap(const StateVector& other) const {
  if (n_ != other.n_) throw DimensionError("overlap: qubit counts differ");
  Complex acc = 0;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    acc += std::conj(amps_[i]) * other.amps_[i];
  }
  return std::abs(acc);
}

bool StateVector::approx_equal(const StateVector& other, double tol) const {
  if (n_ != other.n_) return false;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (std::abs(amps_[i] - other.amps_[i]) > tol) return false;
  }
  return true;
}

std::string StateVector::dump() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    out << i << ' ' << amps_[i].real() << ' ' << amps_[i].imag() << '\n';
  }
  return out.str();
}

void apply_pauli(const PauliString& p, std::vector<Complex>& amps) {
  const std::size_t n = p.num_qubits();
  if (amps.size() != (std::size_t(1) << n)) {
    throw DimensionError("amplitude count must be 2^n");
  }
  std::size_t xmask = 0, zmask = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (p.x_bit(k)) xmask |= qubit_bit(n, k);
    if (p.z_bit(k)) zmask |= qubit_bit(n, k);
  }
  const Complex lead = kPhases[p.phase_exponent()];
  std::vector<Complex> out(amps.size());
  for (std::size_t b = 0; b < amps.size(); ++b) {
    // Z^z X^x |b> = (-1)^(z . (b^x)) |b^x>
    std::size_t target = b ^ xmask;
    double sgn = (std::popcount(target & zmask) & 1) ? -1.0 : 1.0;
    out[target] = lead * sgn * amps[b];
  }
  amps = std::move(out);
}

void apply_gate_dense(const Gate& gate, std::vector<Complex>& amps,
                      std::size_t n) {
  const std::size_t size = std::size_t(1) << n;
  if (amps.size() != size) {
    throw DimensionError("amplitude count must be 2^n");
  }
  if (gate.q0 >= n || (gate.two_qubit() && gate.q1 >= n)) {
    throw std::domain_error("gate qubit index out of range");
  }
  const std::size_t b0 = qubit_bit(n, gate.q0);
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  switch (gate.kind) {
    case GateKind::H:
      for (std::size_t i = 0; i < size; ++i) {
        if (i & b0) continue;
        Complex lo = amps[i], hi = amps[i | b0];
        amps[i] = (lo + hi) * inv_sqrt2;
        amps[i | b0] = (lo - hi) * inv_sqrt2;
      }
      break;
    case GateKind::S:
      for (std::size_t i = 0; i < size; ++i) {
        if (i & b0) amps[i] *= Complex(0, 1);
      }
      break;
    case GateKind::X:
      for (std::size_t i = 0; i < size; ++i) {
        if (!(i & b0)) std::swap(amps[i], amps[i | b0]);
      }
      break;
    case GateKind::Z:
      for (std::size_t i = 0; i < size; ++i) {
        if (i & b0) amps[i] = -amps[i];
      }
      break;
    case GateKind::CNOT: {
      const std::size_t bt = qubit_bit(n, gate.q1);
      for (std::size_t i = 0; i < size; ++i) {
        if ((i & b0) && !(i & bt)) std::swap(amps[i], amps[i | bt]);
      }
      break;
    }
    case GateKind::CZ: {
      const std::size_t bt = qubit_bit(n, gate.q1);
      for (std::size_t i = 0; i < size; ++i) {
        if ((i & b0) && (i & bt)) amps[i] = -amps[i];
      }
      break;
    }
  }
}

StateVector from_tableau(const StabilizerTableau& t, std::size_t max_qubits) {
  const std::size_t n = t.num_qubits();
  if (n > max_qubits || max_qubits > 30) {
    throw CapacityError("dense statevector capped at " +
                        std::to_string(std::min<std::size_t>(max_qubits, 30)) +
                        " qubits");
  }

  // Pick a basis state inside the support so the projector image is
  // nonzero. Basis state |x> is in the support iff every Z-only group
  // element h satisfies sign(h) * (-1)^(z_h . x) = +1; collect generators
  // of the Z-only subgroup and solve the linear system for x.
  const auto& gens = t.generators();
  BitMatrix xparts(n);
  for (const auto& g : gens) {
    BitVector xp(n);
    for (std::size_t k = 0; k < n; ++k) xp.set(k, g.x_bit(k));
    xparts.append_row(std::move(xp));
  }
  BitMatrix combos = nullspace(transpose(xparts));
  BitMatrix zrows(n);
  BitVector rhs(combos.rows());
  for (std::size_t i = 0; i < combos.rows(); ++i) {
    PauliString h(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (combos.row(i).get(j)) h *= gens[j];
    }
    BitVector zp(n);
    for (std::size_t k = 0; k < n; ++k) zp.set(k, h.z_bit(k));
    zrows.append_row(std::move(zp));
    rhs.set(i, h.sign() < 0);
  }
  auto start = solve(zrows, rhs);
  if (!start) {
    throw std::logic_error("tableau has empty support");  // cannot happen
  }

  std::vector<Complex> amps(std::size_t(1) << n, Complex(0, 0));
  amps[index_of(*start)] = 1.0;
  for (const auto& g : gens) {
    std::vector<Complex> image = amps;
    apply_pauli(g, image);
    for (std::size_t i = 0; i < amps.size(); ++i) {
      amps[i] = 0.5 * (amps[i] + image[i]);
    }
  }
  return StateVector(n, std::move(amps));
}

std::size_t bell_index(const BitVector& r) {
  return index_of(r);
}

BitVector bell_outcome(std::size_t index, std::size_t n) {
  return coords_of(index, 2 * n);
}

std::vector<double> bell_distribution(const StateVector& psi) {
  const std::size_t n = psi.num_qubits();
  if (n > kMaxBellQubits) {
    throw CapacityError("Bell distribution capped at " +
                        std::to_string(kMaxBellQubits) + " qubits");
  }
  const std::vector<Complex>& bra = psi.amplitudes();
  const StateVector conj = psi.conjugated();
  const std::size_t outcomes = std::size_t(1) << (2 * n);
  const double scale = 1.0 / static_cast<double>(std::size_t(1) << n);
  std::vector<double> dist(outcomes);
#pragma omp parallel for schedule(static)
  for (long ri = 0; ri < static_cast<long>(outcomes); ++ri) {
    auto r = static_cast<std::size_t>(ri);
    PauliString sigma(bell_outcome(r, n), 0);
    std::vector<Complex> acted = conj.amplitudes();
    apply_pauli(sigma, acted);
    Complex ip = 0;
    for (std::size_t i = 0; i < acted.size(); ++i) {
      ip += std::conj(bra[i]) * acted[i];
    }
    dist[r] = std::norm(ip) * scale;
  }
  return dist;
}

std::vector<double> bell_distribution_projection(const StateVector& psi) {
  const std::size_t n = psi.num_qubits();
  if (n > kMaxBellQubits) {
    throw CapacityError("Bell distribution capped at " +
                        std::to_string(kMaxBellQubits) + " qubits");
  }
  const auto& a = psi.amplitudes();
  const std::size_t half = a.size();
  std::vector<Complex> joint(half * half);
  for (std::size_t i = 0; i < half; ++i) {
    for (std::size_t j = 0; j < half; ++j) {
      joint[(i << n) | j] = a[i] * a[j];
    }
  }
  // Change each (A_i, B_i) pair from the Bell basis to the computational
  // basis, then read probabilities off the amplitudes.
  for (std::size_t i = 0; i < n; ++i) {
    apply_gate_dense(Gate::cnot(i, n + i), joint, 2 * n);
    apply_gate_dense(Gate::h(i), joint, 2 * n);
  }
  const std::size_t outcomes = std::size_t(1) << (2 * n);
  std::vector<double> dist(outcomes);
  for (std::size_t r = 0; r < outcomes; ++r) {
    // Outcome pair i is (bit from A_i, bit from B_i); A bits are the high
    // half of the joint index.
    std::size_t split = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t ai = (r >> (2 * n - 1 - 2 * i)) & 1u;
      std::size_t bi = (r >> (2 * n - 2 - 2 * i)) & 1u;
      split |= ai << (2 * n - 1 - i);
      split |= bi << (n - 1 - i);
    }
    dist[r] = std::norm(joint[split]);
  }
  return dist;
}

std::vector<std::size_t> find_conjugation_set(const StateVector& psi,
                                              std::size_t max_qubits) {
  const std::size_t n = psi.num_qubits();
  if (n > max_qubits) {
    throw CapacityError("conjugation search capped at " +
                        std::to_string(max_qubits) + " qubits");
  }
  const auto& a = psi.amplitudes();
  const StateVector target = psi.conjugated();
  const auto& b = target.amplitudes();
  const std::size_t size = a.size();
  for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
    // <psi*| Z_mask |psi>, with the mask expressed in index-bit positions.
    std::size_t zmask = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if ((mask >> k) & 1u) zmask |= qubit_bit(n, k);
    }
    Complex ip = 0;
    for (std::size_t i = 0; i < size; ++i) {
      double sgn = (std::popcount(i & zmask) & 1) ? -1.0 : 1.0;
      ip += std::conj(b[i]) * sgn * a[i];
    }
    if (std::abs(ip) >= 1.0 - 1e-10) {
      std::vector<std::size_t> subset;
      for (std::size_t k = 0; k < n; ++k) {
        if ((mask >> k) & 1u) subset.push_back(k);
      }
      return subset;
    }
  }
  throw NotStabilizerError("no conjugation set found");
}

BitVector pair_encoding(const std::vector<std::size_t>& subset,
                        std::size_t n) {
  BitVector enc(2 * n);
  for (std::size_t q : subset) {
    if (q >= n) throw std::domain_error("conjugation qubit out of range");
    enc.set(2 * q, true);
  }
  return enc;
}

namespace {

// Phase exponent e with value close to i^e, or -1 when the value is not a
// fourth root of unity.
int phase_quadrant(const Complex& value) {
  if (std::abs(std::abs(value) - 1.0) > kPhaseTol) return -1;
  double turns = std::arg(value) / (std::numbers::pi / 2);
  int e = static_cast<int>(std::lround(turns)) & 3;
  if (std::abs(value - kPhases[e]) > kPhaseTol) return -1;
  return e;
}

}  // namespace

QuadraticForm quadratic_form_extract(const StateVector& psi,
                                     std::size_t max_qubits) {
  const std::size_t n = psi.num_qubits();
  if (n > max_qubits) {
    throw CapacityError("quadratic form extraction capped at " +
                        std::to_string(max_qubits) + " qubits");
  }
  const auto& a = psi.amplitudes();

  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i]) > kSupportTol) support.push_back(i);
  }
  if (support.empty() || !std::has_single_bit(support.size())) {
    throw NotStabilizerError("support size is not a power of two");
  }
  const std::size_t offset_idx = support.front();  // minimal == lex least

  // Direction space: the support relative to the offset must be linear.
  BitMatrix rel(n);
  for (std::size_t idx : support) {
    rel.append_row(coords_of(idx ^ offset_idx, n));
  }
  BitMatrix basis = rref_basis(rel);
  const std::size_t r = basis.rows();
  if ((std::size_t(1) << r) != support.size()) {
    throw NotStabilizerError("support is not an affine subspace");
  }
  std::vector<std::size_t> pivots = pivot_columns(basis);

  // Relative phase exponents g(c) in Z4, indexed by packed coordinates
  // over the direction basis.
  std::vector<int> g(std::size_t(1) << r);
  for (std::size_t idx : support) {
    BitVector w = coords_of(idx ^ offset_idx, n);
    std::size_t c = 0;
    for (std::size_t i = 0; i < r; ++i) {
      if (w.get(pivots[i])) c |= std::size_t(1) << i;
    }
    int e = phase_quadrant(a[idx] / a[offset_idx]);
    if (e < 0) throw NotStabilizerError("amplitude is not a power of i");
    g[c] = e;
  }

  // Imaginary structure: the parity of g must be linear in c; solve for a
  // global linear functional s with s . v_i matching it.
  BitVector parity(r);
  for (std::size_t i = 0; i < r; ++i) {
    parity.set(i, g[std::size_t(1) << i] & 1);
  }
  auto s = solve(basis, parity);
  if (!s) throw NotStabilizerError("phase parity is not linear");
  BitVector linear_bits = *s;

  auto ell = [&](std::size_t idx) {
    return static_cast<int>(std::popcount(idx & index_of(linear_bits)) & 1);
  };
  const int ell_offset = ell(offset_idx);

  // Remaining sign structure, as F2 values per point; must be a quadratic
  // polynomial in the coordinates.
  std::vector<int> qval(std::size_t(1) << r);
  for (std::size_t idx : support) {
    BitVector w = coords_of(idx ^ offset_idx, n);
    std::size_t c = 0;
    for (std::size_t i = 0; i < r; ++i) {
      if (w.get(pivots[i])) c |= std::size_t(1) << i;
    }
    int h = (g[c] - (ell(idx) - ell_offset)) & 3;
    if (h & 1) throw NotStabilizerError("phase structure is inconsistent");
    qval[c] = h >> 1;
  }
  std::vector<int> gamma(r);
  for (std::size_t i = 0; i < r; ++i) gamma[i] = qval[std::size_t(1) << i];
  std::vector<std::vector<int>> delta(r, std::vector<int>(r, 0));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      delta[i][j] = qval[(std::size_t(1) << i) | (std::size_t(1) << j)] ^
                    gamma[i] ^ gamma[j];
    }
  }
  for (std::size_t c = 0; c < qval.size(); ++c) {
    int expect = 0;
    for (std::size_t i = 0; i < r; ++i) {
      if (!((c >> i) & 1u)) continue;
      expect ^= gamma[i];
      for (std::size_t j = i + 1; j < r; ++j) {
        if ((c >> j) & 1u) expect ^= delta[i][j];
      }
    }
    if (expect != qval[c]) {
      throw NotStabilizerError("sign structure is not quadratic");
    }
  }

  // Rewrite the coordinate polynomial over the original variables using
  // c_i = x[pivot_i] + offset[pivot_i]; constants fold into the global
  // phase, linear terms go on the diagonal.
  QuadraticForm form;
  form.n = n;
  form.offset = coords_of(offset_idx, n);
  form.direction_basis = basis;
  form.linear_bits = linear_bits;
  form.quad_coeffs = BitMatrix(n, n);
  for (std::size_t i = 0; i < r; ++i) {
    if (gamma[i]) form.quad_coeffs.row(pivots[i]).flip(pivots[i]);
    for (std::size_t j = i + 1; j < r; ++j) {
      if (!delta[i][j]) continue;
      form.quad_coeffs.row(pivots[i]).flip(pivots[j]);
      if (form.offset.get(pivots[j])) {
        form.quad_coeffs.row(pivots[i]).flip(pivots[i]);
      }
      if (form.offset.get(pivots[i])) {
        form.quad_coeffs.row(pivots[j]).flip(pivots[j]);
      }
    }
  }
  return form;
}

StateVector reconstruct(const QuadraticForm& form) {
  const std::size_t n = form.n;
  const std::size_t r = form.direction_basis.rows();
  std::vector<Complex> amps(std::size_t(1) << n, Complex(0, 0));
  const std::size_t lin_mask = index_of(form.linear_bits);
  for (std::size_t c = 0; c < (std::size_t(1) << r); ++c) {
    BitVector x = form.offset;
    for (std::size_t i = 0; i < r; ++i) {
      if ((c >> i) & 1u) x ^= form.direction_basis.row(i);
    }
    std::size_t idx = index_of(x);
    int q = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!x.get(i)) continue;
      for (std::size_t j = i; j < n; ++j) {
        if (x.get(j) && form.quad_coeffs.row(i).get(j)) q ^= 1;
      }
    }
    int e = (static_cast<int>(std::popcount(idx & lin_mask) & 1) + 2 * q) & 3;
    amps[idx] = kPhases[e];
  }
  return StateVector(n, std::move(amps));
}

}  // namespace bellsamp
