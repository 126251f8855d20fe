#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "genmat/prime_field.hpp"

namespace genmat {

// Row-major matrix over a prime field. Entries are expected to be reduced
// modulo the field the matrix will be used with.
class DenseMatrix {
 public:
  DenseMatrix() : rows_(0), cols_(0) {}

  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint64_t& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  std::uint64_t at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  // Mutable view of row r as a pointer range of length cols().
  std::uint64_t* row(std::size_t r) { return entries_.data() + r * cols_; }
  const std::uint64_t* row(std::size_t r) const { return entries_.data() + r * cols_; }

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<std::uint64_t> entries_;
};

// Indices of a maximal independent subset of rows, chosen greedily in
// ascending row order: a row is kept iff it is outside the span of the rows
// kept before it. Gaussian elimination, O(rank * rows * cols).
inline std::vector<std::size_t> row_basis(const DenseMatrix& m, const PrimeField& field) {
  std::vector<std::size_t> kept;
  std::vector<std::vector<std::uint64_t>> reduced;  // echelon rows, unit pivot
  std::vector<std::size_t> pivot_col;
  std::vector<std::uint64_t> work(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const std::uint64_t* src = m.row(r);
    work.assign(src, src + m.cols());
    for (std::size_t i = 0; i < reduced.size(); ++i) {
      std::uint64_t factor = work[pivot_col[i]];
      if (factor == 0) continue;
      const std::vector<std::uint64_t>& basis_row = reduced[i];
      for (std::size_t c = pivot_col[i]; c < m.cols(); ++c) {
        if (basis_row[c] != 0) work[c] = field.sub(work[c], field.mul(factor, basis_row[c]));
      }
    }
    std::size_t lead = m.cols();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (work[c] != 0) {
        lead = c;
        break;
      }
    }
    if (lead == m.cols()) continue;  // dependent row
    std::uint64_t scale = field.inv(work[lead]);
    for (std::size_t c = lead; c < m.cols(); ++c) work[c] = field.mul(work[c], scale);
    kept.push_back(r);
    reduced.push_back(work);
    pivot_col.push_back(lead);
  }
  return kept;
}

inline std::size_t rank(const DenseMatrix& m, const PrimeField& field) {
  return row_basis(m, field).size();
}

}  // namespace genmat
