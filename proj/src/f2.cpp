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

#include "bellsamp/f2.hpp"

#include <bit>
#include <utility>

#include "bellsamp/errors.hpp"

namespace bellsamp {

BitVector BitVector::from_string(std::string_view text) {
  BitVector v(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      v.set(i, true);
    } else if (text[i] != '0') {
      throw ParseError("bit vector characters must be '0' or '1'");
    }
  }
  return v;
}

std::string BitVector::str() const {
  std::string out(len_, '0');
  for (std::size_t i = 0; i < len_; ++i) {
    if (get(i)) out[i] = '1';
  }
  return out;
}

bool BitVector::any() const {
  for (std::uint64_t w : words_) {
    if (w) return true;
  }
  return false;
}

std::size_t BitVector::popcount() const {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += std::popcount(w);
  return total;
}

std::size_t BitVector::leading_bit() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w]) return 64 * w + std::countr_zero(words_[w]);
  }
  return len_;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (len_ != other.len_) {
    throw DimensionError("BitVector XOR: lengths differ");
  }
  for (std::size_t w = 0; w < words_.size(); ++w) {
    words_[w] ^= other.words_[w];
  }
  return *this;
}

BitMatrix BitMatrix::from_rows(std::vector<BitVector> rows) {
  BitMatrix m(rows.empty() ? 0 : rows.front().size());
  for (auto& r : rows) m.append_row(std::move(r));
  return m;
}

void BitMatrix::append_row(BitVector v) {
  if (v.size() != ncols_) {
    throw DimensionError("BitMatrix row length does not match column count");
  }
  rows_.push_back(std::move(v));
}

namespace {

// Gaussian elimination with full reduction. Processing columns left to
// right keeps un-pivoted rows zero in every visited column, so on exit the
// first `r` rows are the RREF and the rest are zero. The per-pivot sweep
// over all other rows is the data-parallel kernel.
BitMatrix rref_impl(const BitMatrix& m, bool parallel) {
  BitMatrix work = m;
  const std::size_t nrows = work.rows();
  const std::size_t ncols = work.cols();
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < nrows; ++col) {
    std::size_t p = r;
    while (p < nrows && !work.row(p).get(col)) ++p;
    if (p == nrows) continue;
    if (p != r) std::swap(work.row(r), work.row(p));
    const BitVector& pivot = work.row(r);
    if (parallel) {
#pragma omp parallel for schedule(static)
      for (long q = 0; q < static_cast<long>(nrows); ++q) {
        auto uq = static_cast<std::size_t>(q);
        if (uq != r && work.row(uq).get(col)) work.row(uq) ^= pivot;
      }
    } else {
      for (std::size_t q = 0; q < nrows; ++q) {
        if (q != r && work.row(q).get(col)) work.row(q) ^= pivot;
      }
    }
    ++r;
  }
  BitMatrix out(ncols);
  for (std::size_t i = 0; i < r; ++i) out.append_row(std::move(work.row(i)));
  return out;
}

// Threshold below which the OpenMP sweep costs more than it saves.
constexpr std::size_t kParallelRows = 256;
constexpr std::size_t kParallelCols = 512;

}  // namespace

std::size_t rank(const BitMatrix& m) { return rref_basis(m).rows(); }

BitMatrix rref_basis(const BitMatrix& m) {
  bool big = m.rows() >= kParallelRows && m.cols() >= kParallelCols;
  return rref_impl(m, big);
}

BitMatrix rref_basis_serial(const BitMatrix& m) { return rref_impl(m, false); }

std::vector<std::size_t> pivot_columns(const BitMatrix& rref) {
  std::vector<std::size_t> pivots(rref.rows());
  for (std::size_t i = 0; i < rref.rows(); ++i) {
    pivots[i] = rref.row(i).leading_bit();
  }
  return pivots;
}

std::optional<BitVector> span_coefficients(const BitVector& v,
                                           const BitMatrix& rref) {
  if (v.size() != rref.cols()) {
    throw DimensionError("span query: vector length does not match basis");
  }
  BitVector coeffs(rref.rows());
  BitVector rem = v;
  for (std::size_t i = 0; i < rref.rows(); ++i) {
    std::size_t p = rref.row(i).leading_bit();
    if (p < rem.size() && rem.get(p)) {
      rem ^= rref.row(i);
      coeffs.set(i, true);
    }
  }
  if (rem.any()) return std::nullopt;
  return coeffs;
}

bool in_span(const BitVector& v, const BitMatrix& rref) {
  return span_coefficients(v, rref).has_value();
}

BitMatrix transpose(const BitMatrix& m) {
  BitMatrix out(m.rows());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    BitVector col(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (m.row(r).get(c)) col.set(r, true);
    }
    out.append_row(std::move(col));
  }
  return out;
}

BitMatrix nullspace(const BitMatrix& m) {
  const std::size_t ncols = m.cols();
  BitMatrix reduced = rref_basis(m);
  std::vector<std::size_t> pivots = pivot_columns(reduced);
  std::vector<bool> is_pivot(ncols, false);
  for (std::size_t p : pivots) is_pivot[p] = true;

  BitMatrix kernel(ncols);
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    BitVector x(ncols);
    x.set(f, true);
    for (std::size_t i = 0; i < reduced.rows(); ++i) {
      if (reduced.row(i).get(f)) x.set(pivots[i], true);
    }
    kernel.append_row(std::move(x));
  }
  return kernel;
}

std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b) {
  if (b.size() != m.rows()) {
    throw DimensionError("solve: right-hand side length does not match rows");
  }
  const std::size_t ncols = m.cols();
  BitMatrix augmented(ncols + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    BitVector row(ncols + 1);
    for (std::size_t w = 0; w < m.row(r).words().size(); ++w) {
      row.words()[w] = m.row(r).words()[w];
    }
    row.set(ncols, b.get(r));
    augmented.append_row(std::move(row));
  }
  BitMatrix reduced = rref_basis_serial(augmented);
  BitVector x(ncols);
  for (std::size_t i = 0; i < reduced.rows(); ++i) {
    std::size_t p = reduced.row(i).leading_bit();
    if (p == ncols) return std::nullopt;  // pivot in the constant column
    x.set(p, reduced.row(i).get(ncols));
  }
  return x;
}

}  // namespace bellsamp
