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

#include "bellsamp/pauli.hpp"

#include <bit>

#include "bellsamp/errors.hpp"

namespace bellsamp {

namespace {

// Bits 0, 2, 4, ... — the Z components of the interleaved layout. Pairs
// never straddle a word because the word size is even.
constexpr std::uint64_t kZMask = 0x5555555555555555ull;

int parity_of_x_dot_z(const BitVector& a, const BitVector& b) {
  // sum_k a_x[k] * b_z[k] mod 2. a_x[k] sits at bit 2k+1, so shifting a
  // right by one aligns it with b's Z component at bit 2k.
  std::uint64_t acc = 0;
  auto aw = a.words();
  auto bw = b.words();
  for (std::size_t w = 0; w < aw.size(); ++w) {
    acc ^= std::popcount((aw[w] >> 1) & bw[w] & kZMask);
  }
  return static_cast<int>(acc & 1);
}

}  // namespace

int symplectic_product(const BitVector& u, const BitVector& v) {
  if (u.size() != v.size() || u.size() % 2 != 0) {
    throw DimensionError("symplectic product needs equal even lengths");
  }
  return parity_of_x_dot_z(u, v) ^ parity_of_x_dot_z(v, u);
}

BitVector pair_swap(const BitVector& bits) {
  if (bits.size() % 2 != 0) {
    throw DimensionError("pair swap needs an even length");
  }
  BitVector out = bits;
  for (auto& w : out.words()) {
    w = ((w & kZMask) << 1) | ((w >> 1) & kZMask);
  }
  return out;
}

PauliString::PauliString(BitVector bits, std::uint8_t phase_exponent)
    : n_(bits.size() / 2), bits_(std::move(bits)), phase_(phase_exponent & 3) {
  if (bits_.size() % 2 != 0) {
    throw DimensionError("Pauli label length must be even");
  }
}

PauliString PauliString::hermitian_from_bits(const BitVector& bits, int sign) {
  if (bits.size() % 2 != 0) {
    throw DimensionError("Pauli label length must be even");
  }
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument("sign must be +1 or -1");
  }
  PauliString p(bits, 0);
  std::size_t k = p.weight_y();
  p.phase_ = static_cast<std::uint8_t>((3 * k + (sign < 0 ? 2 : 0)) & 3);
  return p;
}

std::size_t PauliString::weight_y() const {
  std::size_t count = 0;
  for (std::uint64_t w : bits_.words()) {
    count += std::popcount(w & (w >> 1) & kZMask);
  }
  return count;
}

bool PauliString::is_hermitian() const {
  // i^e sigma has dagger (-1)^k i^-e sigma, so Hermitian iff e == k mod 2.
  return ((phase_ ^ weight_y()) & 1) == 0;
}

int PauliString::sign() const {
  std::size_t k = weight_y();
  std::uint8_t rel = static_cast<std::uint8_t>((phase_ + k) & 3);
  if (rel == 0) return +1;
  if (rel == 2) return -1;
  throw std::invalid_argument("Pauli operator is not +/- Hermitian");
}

PauliString& PauliString::operator*=(const PauliString& rhs) {
  if (n_ != rhs.n_) {
    throw DimensionError("Pauli product: qubit counts differ");
  }
  phase_ = static_cast<std::uint8_t>(
      (phase_ + rhs.phase_ + 2 * parity_of_x_dot_z(bits_, rhs.bits_)) & 3);
  bits_ ^= rhs.bits_;
  return *this;
}

PauliString PauliString::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty Pauli string");
  int sign = +1;
  if (text.front() == '+' || text.front() == '-') {
    sign = text.front() == '-' ? -1 : +1;
    text.remove_prefix(1);
  }
  if (text.empty()) throw ParseError("Pauli string has no letters");
  BitVector bits(2 * text.size());
  for (std::size_t q = 0; q < text.size(); ++q) {
    switch (text[q]) {
      case 'I':
        break;
      case 'X':
        bits.set(2 * q + 1, true);
        break;
      case 'Z':
        bits.set(2 * q, true);
        break;
      case 'Y':
        bits.set(2 * q, true);
        bits.set(2 * q + 1, true);
        break;
      default:
        throw ParseError(std::string("invalid Pauli letter '") + text[q] +
                         "'");
    }
  }
  return hermitian_from_bits(bits, sign);
}

std::string PauliString::str() const {
  std::string out;
  out.reserve(n_ + 1);
  out.push_back(sign() < 0 ? '-' : '+');  // throws when not +/- Hermitian
  for (std::size_t q = 0; q < n_; ++q) {
    bool z = z_bit(q), x = x_bit(q);
    out.push_back(z ? (x ? 'Y' : 'Z') : (x ? 'X' : 'I'));
  }
  return out;
}

}  // namespace bellsamp
