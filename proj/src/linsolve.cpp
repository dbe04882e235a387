#include "brk/linsolve.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "brk/errors.hpp"

namespace brkfq {

namespace {

// dst -= factor * src on columns [from, end).
void axpy_neg(std::vector<std::uint32_t>& dst, std::span<const std::uint32_t> src,
              std::uint32_t factor, std::size_t from, const FieldSpec& spec) {
  const std::uint64_t q = spec.modulus();
  const std::uint64_t f = q - factor;
  for (std::size_t j = from; j < dst.size(); ++j) {
    if (src[j] != 0) dst[j] = static_cast<std::uint32_t>((dst[j] + f * src[j]) % q);
  }
}

void scale_row(std::vector<std::uint32_t>& row, std::uint32_t factor, std::size_t from,
               const FieldSpec& spec) {
  for (std::size_t j = from; j < row.size(); ++j) row[j] = spec.mul(row[j], factor);
}

Nullspace nullspace_from_rref(const std::vector<std::vector<std::uint32_t>>& rref,
                              const std::vector<std::size_t>& pivot_cols, std::size_t cols,
                              const FieldSpec& spec) {
  Nullspace ns;
  ns.rank = pivot_cols.size();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<std::uint32_t> v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = spec.neg(rref[i][f]);
    ns.basis.push_back(std::move(v));
    ns.free_columns.push_back(f);
  }
  return ns;
}

}  // namespace

MatrixGF::MatrixGF(FieldSpec spec, std::size_t rows, std::size_t cols)
    : spec_(std::move(spec)), rows_(rows), cols_(cols) {
  if (cols != 0 && rows > kMaxEntries / cols) {
    throw CapExceeded("matrix " + std::to_string(rows) + "x" + std::to_string(cols) +
                      " exceeds the entry cap " + std::to_string(kMaxEntries));
  }
  entries_.assign(rows * cols, 0);
}

MatrixGF MatrixGF::from_rows(const FieldSpec& spec,
                             const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  MatrixGF m(spec, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ArityMismatch("from_rows: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m.entries_[r * cols + c] = spec.reduce(rows[r][c]);
  }
  return m;
}

std::vector<std::uint32_t> MatrixGF::apply(std::span<const std::uint32_t> v) const {
  if (v.size() != cols_) throw ArityMismatch("matrix-vector product: length mismatch");
  std::vector<std::uint32_t> out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint32_t acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc = spec_.add(acc, spec_.mul(at(r, c), v[c]));
    out[r] = acc;
  }
  return out;
}

Nullspace nullspace_basis(const MatrixGF& m) {
  const FieldSpec& spec = m.spec();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<std::uint32_t>> a(rows);
  for (std::size_t r = 0; r < rows; ++r) a[r].assign(m.row(r).begin(), m.row(r).end());

  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[rank], a[p]);
    scale_row(a[rank], spec.inv(a[rank][c]), c, spec);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r != rank && a[r][c] != 0) axpy_neg(a[r], a[rank], a[r][c], c, spec);
    }
    pivot_cols.push_back(c);
    ++rank;
  }
  a.resize(rank);
  return nullspace_from_rref(a, pivot_cols, cols, spec);
}

RowReducer::RowReducer(FieldSpec spec, std::size_t cols)
    : spec_(std::move(spec)), cols_(cols), row_of_col_(cols, -1), scratch_(cols, 0) {}

bool RowReducer::add_row(std::span<const std::uint32_t> row) {
  if (row.size() != cols_) throw ArityMismatch("RowReducer: row length mismatch");
  if (full_rank()) return false;
  scratch_.assign(row.begin(), row.end());
  // Pivot rows are zero left of their pivot, so a left-to-right sweep clears
  // pivot columns without disturbing columns already passed. The first
  // nonzero non-pivot column becomes the new pivot.
  std::size_t lead = cols_;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (scratch_[c] == 0) continue;
    if (row_of_col_[c] < 0) {
      lead = c;
      break;
    }
    axpy_neg(scratch_, pivot_rows_[static_cast<std::size_t>(row_of_col_[c])], scratch_[c], c, spec_);
  }
  if (lead == cols_) return false;
  scale_row(scratch_, spec_.inv(scratch_[lead]), lead, spec_);
  row_of_col_[lead] = static_cast<std::ptrdiff_t>(pivot_rows_.size());
  pivot_rows_.push_back(scratch_);
  pivot_col_.push_back(lead);
  return true;
}

std::vector<std::vector<std::uint32_t>> RowReducer::reduced_rows() const {
  // Order rows by pivot column, then back-substitute right to left.
  std::vector<std::size_t> order(pivot_rows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return pivot_col_[a] < pivot_col_[b]; });
  std::vector<std::vector<std::uint32_t>> rows;
  rows.reserve(order.size());
  for (auto i : order) rows.push_back(pivot_rows_[i]);
  for (std::size_t i = rows.size(); i-- > 0;) {
    const std::size_t c = pivot_col_[order[i]];
    for (std::size_t r = 0; r < i; ++r) {
      if (rows[r][c] != 0) axpy_neg(rows[r], rows[i], rows[r][c], c, spec_);
    }
  }
  return rows;
}

Nullspace RowReducer::nullspace() const {
  std::vector<std::size_t> cols_sorted(pivot_col_);
  std::sort(cols_sorted.begin(), cols_sorted.end());
  return nullspace_from_rref(reduced_rows(), cols_sorted, cols_, spec_);
}

std::vector<std::uint32_t> RowReducer::first_null_vector() const {
  if (full_rank()) return {};
  std::size_t f = 0;
  while (row_of_col_[f] >= 0) ++f;
  std::vector<std::uint32_t> v(cols_, 0);
  v[f] = 1;
  for (const auto& r : reduced_rows()) {
    std::size_t c = 0;
    while (r[c] == 0) ++c;
    v[c] = spec_.neg(r[f]);
  }
  return v;
}

}  // namespace brkfq
