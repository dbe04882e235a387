#include "brk/serialize.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

#include "brk/errors.hpp"

namespace brkfq {

namespace {

[[noreturn]] void bad(const std::string& what) { throw ParseError("set file: " + what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing \"") + key + "\"");
  return j.at(key);
}

std::uint64_t uint_value(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    bad(std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::uint64_t>();
}

Point point_from_json(const Json& j, std::size_t len, std::uint32_t q, const char* what) {
  if (!j.is_array() || j.size() != len) {
    bad(std::string(what) + " must be an array of length " + std::to_string(len));
  }
  Point p;
  p.reserve(len);
  for (const auto& v : j) {
    const auto x = uint_value(v, what);
    if (x >= q) bad(std::string(what) + " entry " + std::to_string(x) + " is not a residue mod " + std::to_string(q));
    p.push_back(static_cast<std::uint32_t>(x));
  }
  return p;
}

std::vector<Point> points_from_json(const Json& j, std::size_t n, std::uint32_t q) {
  if (!j.is_array()) bad("points must be an array");
  std::vector<Point> pts;
  pts.reserve(j.size());
  for (const auto& p : j) pts.push_back(point_from_json(p, n, q, "point"));
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

Json points_to_json(const std::vector<Point>& pts) {
  Json out = Json::array();
  for (const auto& p : pts) out.push_back(p);
  return out;
}

Json bigint_to_json(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::int64_t>::max()) return v.convert_to<std::int64_t>();
  return v.str();
}

Json checks_to_json(const std::vector<Check>& checks) {
  Json out = Json::array();
  for (const auto& c : checks) {
    Json e;
    e["name"] = c.name;
    e["verdict"] = c.pass ? "PASS" : "FAIL";
    if (c.witness) e["witness"] = *c.witness;
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

Json poly_terms_to_json(const MultiPoly& f) {
  Json out = Json::array();
  for (const auto& [m, c] : f.terms()) {
    Json t;
    t["exponents"] = m.exponents();
    t["coeff"] = c;
    out.push_back(std::move(t));
  }
  return out;
}

MultiPoly poly_terms_from_json(const Json& terms, const FieldSpec& spec, std::size_t arity) {
  if (!terms.is_array()) throw ParseError("polynomial: terms must be an array");
  MultiPoly f(spec, arity);
  for (const auto& t : terms) {
    if (!t.is_object() || !t.contains("exponents") || !t.contains("coeff")) {
      throw ParseError("polynomial: term needs \"exponents\" and \"coeff\"");
    }
    const auto& e = t.at("exponents");
    if (!e.is_array() || e.size() != arity) {
      throw ParseError("polynomial: exponents must have length " + std::to_string(arity));
    }
    std::vector<std::uint32_t> exps;
    for (const auto& x : e) {
      if (!x.is_number_unsigned() && !(x.is_number_integer() && x.get<std::int64_t>() >= 0)) {
        throw ParseError("polynomial: exponents must be non-negative integers");
      }
      const auto v = x.get<std::uint64_t>();
      if (v > Monomial::kMaxExponent) throw ParseError("polynomial: exponent too large");
      exps.push_back(static_cast<std::uint32_t>(v));
    }
    const auto& c = t.at("coeff");
    if (!c.is_number_integer()) throw ParseError("polynomial: coeff must be an integer");
    std::int64_t cv = 0;
    if (c.is_number_unsigned()) {
      cv = static_cast<std::int64_t>(c.get<std::uint64_t>() % spec.modulus());
    } else {
      cv = c.get<std::int64_t>();
    }
    f.add_term(Monomial(std::move(exps)), spec.elem(cv));
  }
  return f;
}

Json poly_to_json(const MultiPoly& f) {
  Json out;
  out["q"] = f.spec().modulus();
  out["arity"] = f.arity();
  out["terms"] = poly_terms_to_json(f);
  return out;
}

MultiPoly poly_from_json(const Json& j) {
  try {
    const FieldSpec spec(uint_value(field(j, "q"), "q"));
    return poly_terms_from_json(field(j, "terms"), spec, uint_value(field(j, "arity"), "arity"));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string("polynomial: ") + e.what());
  }
}

Json set_to_json(const BrkSet& set) {
  const auto& fam = set.family;
  Json out;
  out["header"] = {{"variant", "brk"},
                   {"q", fam.spec.modulus()},
                   {"n", fam.n},
                   {"d", fam.d},
                   {"ell", fam.ell}};
  Json h = Json::array();
  for (const auto& p : fam.h) h.push_back(poly_terms_to_json(p));
  out["family"] = {{"h", std::move(h)}};
  Json inst = Json::array();
  for (const auto& i : set.instances) {
    Json g = Json::array();
    for (const auto& p : i.g) g.push_back(poly_terms_to_json(p));
    inst.push_back({{"rho", i.rho}, {"a", i.offset}, {"g", std::move(g)}});
  }
  out["instances"] = std::move(inst);
  out["points"] = points_to_json(set.points);
  return out;
}

Json set_to_json(const TrainorSet& set) {
  Json out;
  out["header"] = {{"variant", "trainor"},
                   {"q", set.spec.modulus()},
                   {"n", set.n},
                   {"ell", set.ell}};
  out["family"] = {{"g", poly_terms_to_json(set.g)}};
  Json inst = Json::array();
  for (const auto& i : set.instances) {
    inst.push_back({{"rho", i.rho}, {"a", i.offset}, {"g", poly_terms_to_json(i.g)}});
  }
  out["instances"] = std::move(inst);
  out["points"] = points_to_json(set.points);
  return out;
}

namespace {

BrkSet brk_from_json(const Json& j, const FieldSpec& spec, const Json& header) {
  const auto n = uint_value(field(header, "n"), "n");
  const auto d = uint_value(field(header, "d"), "d");
  const auto ell = uint_value(field(header, "ell"), "ell");
  if (n < 1 || n > 16 || d < 1 || d >= n) bad("need 1 <= d < n <= 16");
  if (ell < 1 || ell > Monomial::kMaxExponent) bad("ell out of range");
  BrkSet set{SurfaceFamilySpec{spec, n, d, static_cast<std::uint32_t>(ell), {}}, {}, {}, {}};
  const auto& h = field(field(j, "family"), "h");
  if (!h.is_array()) bad("family.h must be an array");
  for (const auto& p : h) set.family.h.push_back(poly_terms_from_json(p, spec, d));
  const auto& inst = field(j, "instances");
  if (!inst.is_array()) bad("instances must be an array");
  for (const auto& i : inst) {
    SurfaceInstance s{point_from_json(field(i, "rho"), n - d, spec.modulus(), "rho"),
                      point_from_json(field(i, "a"), n, spec.modulus(), "a"),
                      {}};
    const auto& g = field(i, "g");
    if (!g.is_array()) bad("instance g must be an array");
    for (const auto& p : g) s.g.push_back(poly_terms_from_json(p, spec, d));
    set.instances.push_back(std::move(s));
  }
  set.points = points_from_json(field(j, "points"), n, spec.modulus());
  return set;
}

TrainorSet trainor_from_json(const Json& j, const FieldSpec& spec, const Json& header) {
  const auto n = uint_value(field(header, "n"), "n");
  const auto ell = uint_value(field(header, "ell"), "ell");
  if (n < 2 || n > 16) bad("need 2 <= n <= 16");
  TrainorSet set{spec, n, static_cast<std::uint32_t>(ell),
                 poly_terms_from_json(field(field(j, "family"), "g"), spec, n - 1), {}, {}};
  const auto& inst = field(j, "instances");
  if (!inst.is_array()) bad("instances must be an array");
  for (const auto& i : inst) {
    const auto rho = uint_value(field(i, "rho"), "rho");
    if (rho >= spec.modulus()) bad("rho is not a residue");
    set.instances.push_back({static_cast<std::uint32_t>(rho),
                             point_from_json(field(i, "a"), n, spec.modulus(), "a"),
                             poly_terms_from_json(field(i, "g"), spec, n - 1)});
  }
  set.points = points_from_json(field(j, "points"), n, spec.modulus());
  return set;
}

}  // namespace

SetFile set_from_json(const Json& j) {
  try {
    const auto& header = field(j, "header");
    std::string variant = "brk";
    if (header.contains("variant")) {
      if (!header.at("variant").is_string()) bad("header.variant must be a string");
      variant = header.at("variant").get<std::string>();
    }
    const FieldSpec spec(uint_value(field(header, "q"), "q"));
    if (variant == "brk") return brk_from_json(j, spec, header);
    if (variant == "trainor") return trainor_from_json(j, spec, header);
    bad("unknown variant \"" + variant + "\"");
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string("set file: ") + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("set file: ") + e.what());
  }
}

Json report_to_json(const BoundReport& r) {
  Json out;
  Json params = {{"q", r.q}, {"n", r.n}, {"d", r.d}, {"ell", r.ell}};
  if (r.k) params["k"] = *r.k;
  out["params"] = std::move(params);
  Json bounds;
  bounds["pm"] = r.pm ? bigint_to_json(*r.pm) : Json(nullptr);
  bounds["mm"] = rational_string(r.mm);
  if (r.mm_claim) {
    bounds["mm_claim"] = rational_string(r.mm_claim->ratio);
    bounds["D"] = r.mm_claim->degree;
    bounds["M"] = r.mm_claim->multiplicity;
  } else {
    bounds["mm_claim"] = nullptr;
  }
  out["bounds"] = std::move(bounds);
  out["set_size"] = r.set_size;
  out["checks"] = checks_to_json(r.checks);
  out["passed"] = r.passed();
  return out;
}

Json lemma_report_to_json(const LemmaReport& report) {
  Json out;
  out["generator"] = std::string(Rng::kName);
  out["seed"] = report.seed;
  out["trials"] = report.trials;
  Json lemmas = Json::array();
  for (const auto& r : report.results) {
    Json e;
    e["name"] = r.name;
    e["trials"] = r.trials;
    e["failures"] = r.failures;
    e["verdict"] = r.pass() ? "PASS" : "FAIL";
    if (r.first_failure) e["first_failure"] = *r.first_failure;
    lemmas.push_back(std::move(e));
  }
  out["lemmas"] = std::move(lemmas);
  out["passed"] = report.passed();
  return out;
}

Json diagnosis_to_json(const PmDiagnosis& dx) {
  Json out;
  out["witness"] = dx.witness ? poly_to_json(*dx.witness) : Json(nullptr);
  out["leading_poly"] = dx.leading_poly ? poly_to_json(*dx.leading_poly) : Json(nullptr);
  out["steps"] = checks_to_json(dx.steps);
  out["failing_step"] = dx.failing_step;
  return out;
}

Json verdict_to_json(const ValidationVerdict& v) {
  Json out;
  out["valid"] = v.valid;
  out["clause"] = to_string(v.clause);
  out["message"] = v.message;
  if (v.poly_index) out["poly_index"] = *v.poly_index;
  if (v.rho) out["rho"] = *v.rho;
  if (v.t) out["t"] = *v.t;
  if (v.missing_point) out["missing_point"] = *v.missing_point;
  return out;
}

Json grid_to_json(const std::vector<GridResult>& results) {
  Json cells = Json::array();
  bool all = true;
  for (const auto& r : results) {
    const auto& c = r.cell;
    Json e = {{"bound", to_string(c.bound)}, {"q", c.q}, {"n", c.n}, {"d", c.d}, {"ell", c.ell}};
    if (c.bound == Bound::mm) e["k"] = c.k;
    e["family_seed"] = c.family_seed;
    e["strategy"] = c.strategy == Strategy::canonical ? "canonical" : "random";
    if (c.strategy == Strategy::random) e["set_seed"] = c.set_seed;
    if (r.report) e["report"] = report_to_json(*r.report);
    if (r.error) e["error"] = *r.error;
    e["verdict"] = r.passed() ? "PASS" : "FAIL";
    all = all && r.passed();
    cells.push_back(std::move(e));
  }
  Json out;
  out["cells"] = std::move(cells);
  out["passed"] = all;
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ParseError("cannot write " + path);
  out << text;
  if (!out) throw ParseError("write failed for " + path);
}

}  // namespace brkfq
