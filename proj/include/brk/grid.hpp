#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "brk/theorem.hpp"

namespace brkfq {

enum class Bound { pm, mm };

const char* to_string(Bound b);

struct GridOptions {
  Bound bound = Bound::pm;
  std::vector<std::uint32_t> moduli{3, 5, 7};
  std::vector<std::size_t> dims{2, 3};
  std::vector<std::uint32_t> ells{2, 3};
  std::size_t random_sets = 5;
  std::uint64_t seed = 0;
  // Multiplicity cells with n >= 3 are kept only for q up to this value;
  // their interpolation systems grow too quickly beyond it.
  std::uint32_t mm_max_q_above_n2 = 3;
};

/// One set to build and verify. The family depends only on (seed, q, n, d,
/// ell), so every set of a cell shares it.
struct GridCell {
  Bound bound = Bound::pm;
  std::uint32_t q = 0;
  std::size_t n = 0;
  std::size_t d = 0;
  std::uint32_t ell = 0;
  std::uint64_t k = 0;  // = q for the multiplicity bound, 0 otherwise
  std::uint64_t family_seed = 0;
  Strategy strategy = Strategy::canonical;
  std::uint64_t set_seed = 0;
};

/// Cells in (q, n, d, ell, set) order: for each parameter tuple with
/// ell < q (and ell >= 2 for pm) one canonical set, then random_sets random ones.
std::vector<GridCell> grid_cells(const GridOptions& options);

SurfaceFamilySpec grid_family(const GridCell& cell);

struct GridResult {
  GridCell cell;
  std::optional<BoundReport> report;
  std::optional<std::string> error;  // InvalidSet or a cap, reported as failure

  bool passed() const { return !error && report && report->passed(); }
};

/// Runs every cell on at most `jobs` worker threads. Results come back in
/// cell order whatever the job count.
std::vector<GridResult> run_grid(const std::vector<GridCell>& cells, unsigned jobs,
                                 const VerifyOptions& options = {});

}  // namespace brkfq
