#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "brk/field.hpp"

namespace brkfq {

/// Dense row-major matrix over F_q holding canonical residues.
class MatrixGF {
 public:
  static constexpr std::uint64_t kMaxEntries = 100'000'000;

  /// Zero matrix; throws CapExceeded if rows * cols > kMaxEntries.
  MatrixGF(FieldSpec spec, std::size_t rows, std::size_t cols);
  static MatrixGF from_rows(const FieldSpec& spec, const std::vector<std::vector<std::int64_t>>& rows);

  const FieldSpec& spec() const noexcept { return spec_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::uint32_t at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::uint32_t v) { entries_[r * cols_ + c] = v % spec_.modulus(); }
  std::span<const std::uint32_t> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }

  /// M v as residues.
  std::vector<std::uint32_t> apply(std::span<const std::uint32_t> v) const;

 private:
  FieldSpec spec_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint32_t> entries_;
};

struct Nullspace {
  std::size_t rank = 0;
  /// One vector per free column, in increasing free-column order. The vector
  /// for free column f has a 1 at f, zeros at the other free columns, and is
  /// determined at the pivot columns by the reduced row-echelon form.
  std::vector<std::vector<std::uint32_t>> basis;
  std::vector<std::size_t> free_columns;
};

/// Gauss-Jordan elimination to reduced row-echelon form. The pivot in each
/// column is the lowest-index row with a nonzero entry.
Nullspace nullspace_basis(const MatrixGF& m);

/// Incremental elimination. Rows are folded in one at a time against the
/// pivots seen so far, so callers can stop as soon as the rank reaches the
/// column count. The reduced row-echelon form is unique, so the nullspace
/// produced here coincides with nullspace_basis on the same rows.
class RowReducer {
 public:
  RowReducer(FieldSpec spec, std::size_t cols);

  /// Returns true if the row increased the rank.
  bool add_row(std::span<const std::uint32_t> row);

  std::size_t rank() const noexcept { return pivot_rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  bool full_rank() const noexcept { return rank() == cols_; }

  Nullspace nullspace() const;
  /// Basis vector of the smallest free column, if the nullspace is nontrivial.
  std::vector<std::uint32_t> first_null_vector() const;

 private:
  // Echelon pivot rows (leading 1 at pivot_col_[i]), reduced to RREF on demand.
  std::vector<std::vector<std::uint32_t>> reduced_rows() const;

  FieldSpec spec_;
  std::size_t cols_;
  std::vector<std::vector<std::uint32_t>> pivot_rows_;
  std::vector<std::size_t> pivot_col_;
  std::vector<std::ptrdiff_t> row_of_col_;  // -1 if the column has no pivot
  std::vector<std::uint32_t> scratch_;
};

}  // namespace brkfq
