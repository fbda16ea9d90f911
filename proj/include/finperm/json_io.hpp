#pragma once

#include <json.hpp>

#include "finperm/cycles.hpp"
#include "finperm/lambda.hpp"

// JSON forms:
//   Permutation  sorted array of [from, to] pairs, fixed points omitted
//   PermExpr     {"op":"id"} | {"op":"swap","a":A,"b":B}
//              | {"op":"comp","left":E,"right":E}
//   LambdaTerm   {"op":"var","atom":A} | {"op":"app","fn":T,"arg":T}
//              | {"op":"lam","binder":A,"body":T}
//   CycleList    array of atom arrays
// Deserialization validates shape and semantic invariants and throws
// validation_error.

namespace finperm {

nlohmann::json perm_to_json(const Permutation& p);
Permutation perm_from_json(const nlohmann::json& j);

nlohmann::json expr_to_json(const PermExpr& e);
PermExpr expr_from_json(const nlohmann::json& j);

nlohmann::json term_to_json(const LambdaTerm& t);
LambdaTerm term_from_json(const nlohmann::json& j);

nlohmann::json cycles_to_json(const CycleList& cycles);
CycleList cycles_from_json(const nlohmann::json& j);

}  // namespace finperm
