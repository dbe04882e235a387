#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "brk/brkset.hpp"
#include "brk/grid.hpp"
#include "brk/lemmas.hpp"
#include "brk/theorem.hpp"

namespace brkfq {

using Json = nlohmann::ordered_json;

/// Term records {exponents, coeff}, grlex-descending.
Json poly_terms_to_json(const MultiPoly& f);
MultiPoly poly_terms_from_json(const Json& terms, const FieldSpec& spec, std::size_t arity);

/// Standalone polynomial: {q, arity, terms}.
Json poly_to_json(const MultiPoly& f);
MultiPoly poly_from_json(const Json& j);

/// Set file with header.variant = "brk".
Json set_to_json(const BrkSet& set);
/// Set file with header.variant = "trainor"; family holds the single g and
/// each instance carries a scalar rho.
Json set_to_json(const TrainorSet& set);

using SetFile = std::variant<BrkSet, TrainorSet>;

/// Parses either variant (a missing variant means "brk"). Structure and value
/// ranges are checked here; membership semantics are left to the validators.
/// Throws ParseError.
SetFile set_from_json(const Json& j);

Json report_to_json(const BoundReport& report);
Json lemma_report_to_json(const LemmaReport& report);
Json diagnosis_to_json(const PmDiagnosis& dx);
Json verdict_to_json(const ValidationVerdict& v);
/// {bound, cells: [...], passed}; cell order is preserved.
Json grid_to_json(const std::vector<GridResult>& results);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace brkfq
