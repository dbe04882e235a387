#include "brk/grid.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "brk/lemmas.hpp"

namespace brkfq {

const char* to_string(Bound b) { return b == Bound::pm ? "pm" : "mm"; }

std::vector<GridCell> grid_cells(const GridOptions& o) {
  std::vector<GridCell> cells;
  for (auto q : o.moduli) {
    for (auto n : o.dims) {
      if (o.bound == Bound::mm && n > 2 && q > o.mm_max_q_above_n2) continue;
      for (std::size_t d = 1; d < n; ++d) {
        for (auto ell : o.ells) {
          if (ell >= q || ell < 1 || (o.bound == Bound::pm && ell < 2)) continue;
          const std::uint64_t key = (std::uint64_t{q} << 32) ^ (std::uint64_t{n} << 24) ^
                                    (std::uint64_t{d} << 16) ^ ell;
          GridCell base{o.bound, q, n, d, ell, o.bound == Bound::mm ? q : 0u,
                        o.seed ^ (key * 0x9E3779B97F4A7C15ULL), Strategy::canonical, 0};
          cells.push_back(base);
          for (std::size_t j = 1; j <= o.random_sets; ++j) {
            GridCell c = base;
            c.strategy = Strategy::random;
            c.set_seed = base.family_seed + j;
            cells.push_back(c);
          }
        }
      }
    }
  }
  return cells;
}

SurfaceFamilySpec grid_family(const GridCell& cell) {
  Rng rng(cell.family_seed);
  return gen::family(FieldSpec(cell.q), cell.n, cell.d, cell.ell, rng);
}

namespace {

GridResult run_cell(const GridCell& cell, const VerifyOptions& options) {
  GridResult r{cell, std::nullopt, std::nullopt};
  try {
    BrkSet set = build_brk_set(grid_family(cell), cell.strategy, cell.set_seed);
    r.report = cell.bound == Bound::pm ? verify_theorem_pm(set, options)
                                       : verify_theorem_mm(set, cell.k, options);
  } catch (const Error& e) {
    r.error = e.what();
  }
  return r;
}

}  // namespace

std::vector<GridResult> run_grid(const std::vector<GridCell>& cells, unsigned jobs,
                                 const VerifyOptions& options) {
  std::vector<GridResult> results(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) results[i] = run_cell(cells[i], options);
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(cells.size(), 1))));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace brkfq
