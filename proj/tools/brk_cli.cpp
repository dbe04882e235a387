// brk: construct BRK-type sets, print bounds, verify them, interpolate.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "brk/grid.hpp"
#include "brk/lemmas.hpp"
#include "brk/polyparse.hpp"
#include "brk/serialize.hpp"
#include "brk/theorem.hpp"

using namespace brkfq;

namespace {

constexpr int kPass = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

// Name of the step currently running, reported with any error.
std::string g_stage = "arguments";

void emit(const Json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << dump(j);
  } else {
    write_text_file(out, dump(j));
  }
}

Strategy parse_strategy(const std::string& s) {
  if (s == "canonical") return Strategy::canonical;
  if (s == "random") return Strategy::random;
  throw ParseError("unknown strategy \"" + s + "\"");
}

struct Caps {
  std::uint64_t max_basis = InterpolationLimits{}.max_basis;
  std::uint64_t max_entries = InterpolationLimits{}.max_matrix_entries;
  std::uint64_t max_terms = PolyLimits{}.max_terms;

  void add_to(CLI::App* app) {
    app->add_option("--max-basis", max_basis, "Cap on interpolation unknowns")->check(CLI::PositiveNumber);
    app->add_option("--max-entries", max_entries, "Cap on equations x unknowns")->check(CLI::PositiveNumber);
    app->add_option("--max-terms", max_terms, "Cap on polynomial terms during expansion")
        ->check(CLI::PositiveNumber);
  }
  VerifyOptions options() const {
    VerifyOptions o;
    o.interpolation.max_basis = max_basis;
    o.interpolation.max_matrix_entries = max_entries;
    o.poly.max_terms = max_terms;
    return o;
  }
};

BrkSet load_brk_set(const std::string& path) {
  g_stage = "load set";
  SetFile file = set_from_json(read_json_file(path));
  if (!std::holds_alternative<BrkSet>(file)) {
    throw ParseError(path + ": this command needs a brk set, not a trainor set");
  }
  return std::get<BrkSet>(std::move(file));
}

// ---- construct -------------------------------------------------------------

struct ConstructArgs {
  std::string variant = "brk";
  std::uint32_t q = 0;
  std::size_t n = 2;
  std::size_t d = 1;
  std::uint32_t ell = 0;
  std::vector<std::string> h;
  std::string g;
  std::string strategy = "canonical";
  std::uint64_t seed = 0;
  std::string out;
  std::uint64_t max_points = BuildLimits{}.max_points;
};

int cmd_construct(const ConstructArgs& a) {
  g_stage = "construct: family";
  const FieldSpec spec(a.q);
  const Strategy strategy = parse_strategy(a.strategy);
  const BuildLimits limits{a.max_points};
  Json j;
  std::size_t count = 0;
  if (a.variant == "brk") {
    if (a.d < 1 || a.d >= a.n) throw DomainError("need 1 <= d < n");
    if (a.h.size() != a.n - a.d) {
      throw ParseError("expected " + std::to_string(a.n - a.d) + " --h polynomials, got " +
                       std::to_string(a.h.size()));
    }
    SurfaceFamilySpec family{spec, a.n, a.d, a.ell, {}};
    for (const auto& text : a.h) family.h.push_back(parse_poly(text, spec, a.d, 't'));
    if (family.ell == 0) family.ell = static_cast<std::uint32_t>(std::max<std::int64_t>(family.h[0].degree(), 0));
    g_stage = "construct: build";
    BrkSet set = build_brk_set(family, strategy, a.seed, limits);
    count = set.points.size();
    j = set_to_json(set);
  } else if (a.variant == "trainor") {
    if (a.g.empty()) throw ParseError("the trainor variant needs --g");
    if (a.n < 2) throw DomainError("need n >= 2");
    MultiPoly g = parse_poly(a.g, spec, a.n - 1, 'l');
    if (a.ell != 0 && g.degree() != a.ell) throw DomainError("--ell disagrees with deg g");
    g_stage = "construct: build";
    TrainorSet set = build_trainor_set(g, strategy, a.seed, limits);
    count = set.points.size();
    j = set_to_json(set);
  } else {
    throw ParseError("unknown variant \"" + a.variant + "\"");
  }
  g_stage = "construct: write";
  emit(j, a.out);
  (a.out.empty() ? std::cerr : std::cout) << "points: " << count << "\n";
  return kPass;
}

// ---- bounds ----------------------------------------------------------------

struct BoundsArgs {
  std::uint64_t q = 0;
  std::uint64_t n = 2;
  std::uint64_t ell = 1;
  std::vector<std::uint64_t> k;
};

int cmd_bounds(const BoundsArgs& a) {
  g_stage = "bounds";
  std::cout << "q=" << a.q << " n=" << a.n << " ell=" << a.ell << "\n";
  if (a.ell >= 2) {
    std::cout << "pm=" << pm_bound(a.q, a.n, a.ell) << "\n";
  } else {
    std::cout << "pm omitted: needs ell >= 2\n";
  }
  std::cout << "mm=" << rational_string(mm_bound(a.q, a.n, a.ell)) << "\n";
  for (auto k : a.k) {
    MmClaim c = mm_claim_bound(a.q, a.n, a.ell, k);
    std::cout << "mm_claim(k=" << k << ")=" << rational_string(c.ratio) << " D=" << c.degree
              << " M=" << c.multiplicity << " ceil=" << ceil(c.ratio) << "\n";
  }
  return kPass;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
  bool lemmas = false;
  std::uint64_t seed = 0;
  std::uint64_t trials = 1000;
  std::string out;

  std::string set;
  std::uint64_t k = 0;
  bool diagnose = false;
  std::string witness;
  Caps caps;

  std::string bound = "pm";
  std::vector<std::uint32_t> moduli{3, 5, 7};
  std::vector<std::size_t> dims{2, 3};
  std::vector<std::uint32_t> ells{1, 2, 3};
  std::size_t random_sets = 5;
  unsigned jobs = 1;
};

int report_invalid(const InvalidSet& e, const std::string& out) {
  Json j;
  j["stage"] = "validate";
  j["verdict"] = verdict_to_json(e.verdict());
  j["passed"] = false;
  emit(j, out);
  return kCheckFailed;
}

int cmd_verify_pm(const VerifyArgs& a) {
  BrkSet set = load_brk_set(a.set);
  if (a.diagnose) {
    std::optional<MultiPoly> witness;
    if (!a.witness.empty()) {
      g_stage = "load witness";
      witness = poly_from_json(read_json_file(a.witness));
    }
    g_stage = "diagnose";
    ValidationVerdict v = validate_brk_set(set);
    PmDiagnosis dx = diagnose_pm(set, witness, a.caps.options());
    Json j;
    j["validation"] = verdict_to_json(v);
    j["diagnosis"] = diagnosis_to_json(dx);
    const bool holds = v.valid && !dx.witness;
    j["passed"] = holds;
    emit(j, a.out);
    return holds ? kPass : kCheckFailed;
  }
  g_stage = "verify pm";
  try {
    BoundReport r = verify_theorem_pm(set, a.caps.options());
    emit(report_to_json(r), a.out);
    return r.passed() ? kPass : kCheckFailed;
  } catch (const InvalidSet& e) {
    return report_invalid(e, a.out);
  }
}

int cmd_verify_mm(const VerifyArgs& a) {
  BrkSet set = load_brk_set(a.set);
  g_stage = "verify mm";
  try {
    BoundReport r = verify_theorem_mm(set, a.k, a.caps.options());
    emit(report_to_json(r), a.out);
    return r.passed() ? kPass : kCheckFailed;
  } catch (const InvalidSet& e) {
    return report_invalid(e, a.out);
  }
}

int cmd_verify_validate(const VerifyArgs& a) {
  g_stage = "load set";
  SetFile file = set_from_json(read_json_file(a.set));
  g_stage = "validate";
  ValidationVerdict v = std::holds_alternative<BrkSet>(file)
                            ? validate_brk_set(std::get<BrkSet>(file))
                            : validate_trainor_set(std::get<TrainorSet>(file));
  emit(verdict_to_json(v), a.out);
  return v.valid ? kPass : kCheckFailed;
}

int cmd_verify_grid(const VerifyArgs& a) {
  g_stage = "grid";
  GridOptions o;
  if (a.bound == "pm") {
    o.bound = Bound::pm;
  } else if (a.bound == "mm") {
    o.bound = Bound::mm;
  } else {
    throw ParseError("unknown bound \"" + a.bound + "\"");
  }
  o.moduli = a.moduli;
  o.dims = a.dims;
  o.ells = a.ells;
  o.random_sets = a.random_sets;
  o.seed = a.seed;
  for (auto q : o.moduli) FieldSpec check(q);
  auto results = run_grid(grid_cells(o), a.jobs, a.caps.options());
  Json j = grid_to_json(results);
  emit(j, a.out);
  return j["passed"].get<bool>() ? kPass : kCheckFailed;
}

int cmd_verify_lemmas(const VerifyArgs& a) {
  g_stage = "lemmas";
  LemmaReport r = lemma_suite(a.seed, a.trials);
  emit(lemma_report_to_json(r), a.out);
  return r.passed() ? kPass : kCheckFailed;
}

// ---- interpolate -----------------------------------------------------------

struct InterpolateArgs {
  std::string points;
  std::string set;
  std::uint32_t degree = 0;
  std::uint32_t mult = 1;
  bool min_degree = false;
  std::string out;
  Caps caps;
};

int cmd_interpolate(const InterpolateArgs& a) {
  g_stage = "load points";
  std::optional<FieldSpec> spec;
  std::size_t n = 0;
  std::vector<Point> pts;
  if (!a.set.empty()) {
    SetFile file = set_from_json(read_json_file(a.set));
    if (auto* s = std::get_if<BrkSet>(&file)) {
      spec = s->family.spec;
      n = s->family.n;
      pts = s->points;
    } else {
      auto& t = std::get<TrainorSet>(file);
      spec = t.spec;
      n = t.n;
      pts = t.points;
    }
  } else {
    Json j = read_json_file(a.points);
    try {
      spec = FieldSpec(j.at("q").get<std::uint64_t>());
      n = j.at("n").get<std::size_t>();
      for (const auto& p : j.at("points")) {
        Point pt;
        for (const auto& v : p) {
          const auto x = v.get<std::uint64_t>();
          if (x >= spec->modulus()) throw ParseError("point entry is not a residue");
          pt.push_back(static_cast<std::uint32_t>(x));
        }
        if (pt.size() != n) throw ParseError("point of the wrong length");
        pts.push_back(std::move(pt));
      }
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(a.points + ": expected {q, n, points}: " + e.what());
    }
  }

  g_stage = "interpolate";
  InterpolationLimits limits{a.caps.max_basis, a.caps.max_entries};
  auto solve = [&](std::uint32_t degree) {
    return a.mult <= 1 ? find_vanishing(*spec, n, pts, degree, limits)
                       : find_vanishing_mult(*spec, n, pts, degree, a.mult, limits);
  };
  std::uint32_t degree = a.degree;
  Interpolation in;
  if (a.min_degree) {
    for (degree = 0;; ++degree) {
      in = solve(degree);
      if (in.witness || degree == a.degree) break;
    }
  } else {
    in = solve(degree);
  }
  Json j;
  j["q"] = spec->modulus();
  j["n"] = n;
  j["points"] = pts.size();
  j["D"] = degree;
  j["M"] = std::max<std::uint32_t>(a.mult, 1);
  j["rank"] = in.rank;
  j["unknowns"] = in.unknowns;
  j["equations"] = in.equations;
  j["witness"] = in.witness ? poly_to_json(*in.witness) : Json(nullptr);
  emit(j, a.out);
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construct and verify BRK-type sets over prime fields"};
  app.require_subcommand(1, 1);

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build a set file");
  construct->set_help_flag("--help", "Print this help message and exit");
  construct->add_option("--variant", ca.variant, "brk or trainor")->check(CLI::IsMember({"brk", "trainor"}));
  construct->add_option("--q", ca.q, "Field size (prime)")->required();
  construct->add_option("--n", ca.n, "Ambient dimension");
  construct->add_option("--d", ca.d, "Surface dimension (brk)");
  construct->add_option("--ell", ca.ell, "Degree; inferred from the family when omitted");
  construct->add_option("--h", ca.h, "Homogeneous h_i in t1..td, one per --h");
  construct->add_option("--g", ca.g, "Trainor g in l1..l(n-1)");
  construct->add_option("--strategy", ca.strategy, "canonical or random")
      ->check(CLI::IsMember({"canonical", "random"}));
  construct->add_option("--seed", ca.seed, "Seed for the random strategy");
  construct->add_option("-o,--output", ca.out, "Output file (stdout when omitted)");
  construct->add_option("--max-points", ca.max_points, "Cap on q^n")->check(CLI::PositiveNumber);

  BoundsArgs ba;
  auto* bounds = app.add_subcommand("bounds", "Print the exact lower bounds");
  bounds->add_option("--q", ba.q, "Field size (prime)")->required();
  bounds->add_option("--n", ba.n, "Ambient dimension");
  bounds->add_option("--ell", ba.ell, "Degree");
  bounds->add_option("--k", ba.k, "Multiplicity parameter, a multiple of q (repeatable)");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Verify bounds, validity or the lemma suite");
  verify->require_subcommand(0, 1);
  verify->add_flag("--lemmas", va.lemmas, "Run the randomized lemma suite");
  verify->add_option("--seed", va.seed, "Seed");
  verify->add_option("--trials", va.trials, "Trials per randomized lemma")->check(CLI::PositiveNumber);
  verify->add_option("-o,--output", va.out, "Report file (stdout when omitted)");

  auto* vpm = verify->add_subcommand("pm", "Polynomial-method bound on a set file");
  vpm->add_option("--set", va.set, "Set file")->required();
  vpm->add_flag("--diagnose", va.diagnose, "Replay the contradiction step by step");
  vpm->add_option("--witness", va.witness, "Polynomial file to diagnose instead of interpolating");
  vpm->add_option("-o,--output", va.out, "Report file");
  va.caps.add_to(vpm);

  auto* vmm = verify->add_subcommand("mm", "Multiplicity bound on a set file");
  vmm->add_option("--set", va.set, "Set file")->required();
  vmm->add_option("--k", va.k, "Multiplicity parameter, a multiple of q")->required();
  vmm->add_option("-o,--output", va.out, "Report file");
  va.caps.add_to(vmm);

  auto* vval = verify->add_subcommand("validate", "Check that a set file is a BRK-type set");
  vval->add_option("--set", va.set, "Set file")->required();
  vval->add_option("-o,--output", va.out, "Report file");

  auto* vgrid = verify->add_subcommand("grid", "Build and verify a parameter grid");
  vgrid->add_option("--bound", va.bound, "pm or mm")->check(CLI::IsMember({"pm", "mm"}));
  vgrid->add_option("--q", va.moduli, "Field sizes");
  vgrid->add_option("--n", va.dims, "Ambient dimensions");
  vgrid->add_option("--ell", va.ells, "Degrees");
  vgrid->add_option("--random", va.random_sets, "Random sets per cell");
  vgrid->add_option("--seed", va.seed, "Seed");
  vgrid->add_option("--jobs", va.jobs, "Worker threads")->check(CLI::PositiveNumber);
  vgrid->add_option("-o,--output", va.out, "Report file");
  va.caps.add_to(vgrid);

  InterpolateArgs ia;
  auto* interp = app.add_subcommand("interpolate", "Find a vanishing polynomial on a point list");
  auto* pts_opt = interp->add_option("--points", ia.points, "JSON {q, n, points}");
  auto* set_opt = interp->add_option("--set", ia.set, "Set file");
  pts_opt->excludes(set_opt);
  interp->add_option("--D", ia.degree, "Degree bound")->required();
  interp->add_option("--M", ia.mult, "Multiplicity (1 = plain vanishing)");
  interp->add_flag("--min-degree", ia.min_degree, "Report the least degree <= D admitting a witness");
  interp->add_option("-o,--output", ia.out, "Output file");
  ia.caps.add_to(interp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*construct) return cmd_construct(ca);
    if (*bounds) return cmd_bounds(ba);
    if (*verify) {
      if (*vpm) return cmd_verify_pm(va);
      if (*vmm) return cmd_verify_mm(va);
      if (*vval) return cmd_verify_validate(va);
      if (*vgrid) return cmd_verify_grid(va);
      if (va.lemmas) return cmd_verify_lemmas(va);
      std::cerr << "verify: give --lemmas or one of pm, mm, validate, grid\n";
      return kUsage;
    }
    if (*interp) {
      if (ia.points.empty() && ia.set.empty()) {
        std::cerr << "interpolate: give --points or --set\n";
        return kUsage;
      }
      return cmd_interpolate(ia);
    }
  } catch (const CapExceeded& e) {
    std::cerr << "error [" << g_stage << "]: cap exceeded: " << e.what() << "\n";
    return kUsage;
  } catch (const brkfq::ParseError& e) {
    std::cerr << "error [" << g_stage << "]: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error [" << g_stage << "]: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
