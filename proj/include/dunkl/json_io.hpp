#pragma once

#include <json.hpp>

#include "dunkl/poly.hpp"

namespace dunkl {

// {"arity": n, "params": [...], "terms": [{"exp": [...], "coef": "<canonical
// scalar string>"}]} with terms graded-lex descending. Round-trips
// bit-exactly. A "cyclo_order" key is added for cyclotomic coefficient
// fields (omitted when the field is plain Q(params)).
nlohmann::json poly_to_json(const Poly& p, const Field& f);
Poly poly_from_json(const nlohmann::json& j, Field* field_out = nullptr);

}  // namespace dunkl
