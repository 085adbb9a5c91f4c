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

#ifndef BELLSAMP_F2_HPP
#define BELLSAMP_F2_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bellsamp {

// Dense bit vector over F2, packed 64 bits per word. Bit 0 is the leftmost
// character of the text form. Bits past size() are kept zero, so equality is
// a plain word compare.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t length)
      : len_(length), words_((length + 63) / 64, 0) {}

  // Text form: one '0'/'1' per bit, position 0 first.
  static BitVector from_string(std::string_view text);
  std::string str() const;

  std::size_t size() const { return len_; }

  bool get(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i, bool value) {
    std::uint64_t mask = std::uint64_t(1) << (i & 63);
    if (value) {
      words_[i >> 6] |= mask;
    } else {
      words_[i >> 6] &= ~mask;
    }
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

  bool any() const;
  std::size_t popcount() const;
  // Index of the first set bit; size() when the vector is zero.
  std::size_t leading_bit() const;

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) {
    a ^= b;
    return a;
  }

  bool operator==(const BitVector&) const = default;

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

 private:
  std::size_t len_ = 0;
  std::vector<std::uint64_t> words_;
};

// Row-major list of equal-length BitVectors. Knows its column count even
// with zero rows.
class BitMatrix {
 public:
  explicit BitMatrix(std::size_t ncols = 0) : ncols_(ncols) {}
  BitMatrix(std::size_t nrows, std::size_t ncols)
      : ncols_(ncols), rows_(nrows, BitVector(ncols)) {}

  static BitMatrix from_rows(std::vector<BitVector> rows);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return ncols_; }

  BitVector& row(std::size_t i) { return rows_[i]; }
  const BitVector& row(std::size_t i) const { return rows_[i]; }

  void append_row(BitVector v);

  bool operator==(const BitMatrix&) const = default;

 private:
  std::size_t ncols_;
  std::vector<BitVector> rows_;
};

// F2 rank. Does not modify m.
std::size_t rank(const BitMatrix& m);

// Unique reduced row echelon form with zero rows dropped; the canonical
// representative of the row space. Row count equals rank(m). Switches to an
// OpenMP elimination kernel above a size threshold; the result is identical
// to rref_basis_serial because RREF is unique.
BitMatrix rref_basis(const BitMatrix& m);

// Plain serial elimination, kept as the reference path for tests and
// benchmarks.
BitMatrix rref_basis_serial(const BitMatrix& m);

// Pivot column of each row of an RREF matrix.
std::vector<std::size_t> pivot_columns(const BitMatrix& rref);

// True iff v is an F2 combination of the rows of `rref` (which must be in
// reduced row echelon form).
bool in_span(const BitVector& v, const BitMatrix& rref);

// Coefficients c over the rows of `rref` with XOR_i c_i * row_i == v, or
// nullopt when v is outside the span.
std::optional<BitVector> span_coefficients(const BitVector& v,
                                           const BitMatrix& rref);

BitMatrix transpose(const BitMatrix& m);

// Rows form a basis of {x : m x = 0}.
BitMatrix nullspace(const BitMatrix& m);

// One solution of m x = b with free coordinates zero; nullopt when the
// system is inconsistent.
std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b);

}  // namespace bellsamp

#endif  // BELLSAMP_F2_HPP
