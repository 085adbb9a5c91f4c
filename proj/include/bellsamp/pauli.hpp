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

#ifndef BELLSAMP_PAULI_HPP
#define BELLSAMP_PAULI_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "bellsamp/f2.hpp"

namespace bellsamp {

// Symplectic form on 2n-bit labels: sum_k (u_z[k] v_x[k] + u_x[k] v_z[k])
// mod 2. Zero iff the labelled operators commute.
int symplectic_product(const BitVector& u, const BitVector& v);

// Swap the two bits of every (z, x) pair; turns a label into the row of the
// symplectic form against it.
BitVector pair_swap(const BitVector& bits);

// An n-qubit Pauli operator i^phase * P_1 x ... x P_n, where the label pair
// (bits[2k], bits[2k+1]) picks qubit k's factor:
//
//   00 -> I,  01 -> X,  10 -> Z,  11 -> ZX
//
// i.e. bits[2k] is the Z component and bits[2k+1] the X component, and the
// 11 factor is the product ZX (equal to iY), not the Hermitian Y. Phases
// are exact fourth roots of unity tracked as an exponent of i; nothing here
// is floating point. Labels multiply by XOR:
//
//   (Z^a X^b)(Z^c X^d) = (-1)^(b*c) Z^(a+c) X^(b+d)
//
// which is where the per-qubit product sign comes from.
class PauliString {
 public:
  // n-qubit identity.
  explicit PauliString(std::size_t n) : n_(n), bits_(2 * n), phase_(0) {}

  // i^phase_exponent * sigma_bits. Length must be even.
  PauliString(BitVector bits, std::uint8_t phase_exponent);

  // The Hermitian operator sign * (-i)^k * sigma_bits, where k counts 11
  // pairs. Squares to the identity; this is the convention used for
  // stabilizer generators and measurements.
  static PauliString hermitian_from_bits(const BitVector& bits, int sign);

  // Text form: optional '+'/'-', then one of {I,X,Y,Z} per qubit, with Y
  // meaning the Hermitian Y.
  static PauliString parse(std::string_view text);
  std::string str() const;

  std::size_t num_qubits() const { return n_; }
  const BitVector& bits() const { return bits_; }
  std::uint8_t phase_exponent() const { return phase_; }

  bool z_bit(std::size_t qubit) const { return bits_.get(2 * qubit); }
  bool x_bit(std::size_t qubit) const { return bits_.get(2 * qubit + 1); }

  bool is_identity_label() const { return !bits_.any(); }

  // Number of 11 pairs in the label.
  std::size_t weight_y() const;

  bool is_hermitian() const;
  // +1 or -1 for a Hermitian operator; throws otherwise.
  int sign() const;

  PauliString& operator*=(const PauliString& rhs);
  friend PauliString operator*(PauliString lhs, const PauliString& rhs) {
    lhs *= rhs;
    return lhs;
  }

  bool commutes_with(const PauliString& other) const {
    return symplectic_product(bits_, other.bits_) == 0;
  }

  bool operator==(const PauliString&) const = default;

 private:
  std::size_t n_;
  BitVector bits_;
  std::uint8_t phase_;  // exponent of i, 0..3
};

}  // namespace bellsamp

#endif  // BELLSAMP_PAULI_HPP
