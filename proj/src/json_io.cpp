#include "finperm/json_io.hpp"

#include "finperm/errors.hpp"

namespace finperm {

using nlohmann::json;

namespace {

Atom atom_from_json(const json& j, const char* what) {
  if (!j.is_number_unsigned())
    throw validation_error(std::string(what) + " must be a non-negative integer");
  return Atom{j.get<std::uint64_t>()};
}

}  // namespace

json perm_to_json(const Permutation& p) {
  json j = json::array();
  for (const auto& [from, to] : p.mapping()) j.push_back({from.id, to.id});
  return j;
}

Permutation perm_from_json(const json& j) {
  if (!j.is_array()) throw validation_error("permutation must be an array of pairs");
  std::vector<AtomPair> pairs;
  pairs.reserve(j.size());
  for (const json& entry : j) {
    if (!entry.is_array() || entry.size() != 2)
      throw validation_error("permutation entry must be a [from, to] pair");
    pairs.emplace_back(atom_from_json(entry[0], "permutation source"),
                       atom_from_json(entry[1], "permutation target"));
  }
  return Permutation::from_pairs(pairs);  // validates bijectivity, no fixed points
}

json expr_to_json(const PermExpr& e) {
  switch (e.kind()) {
    case PermExpr::Kind::id:
      return json{{"op", "id"}};
    case PermExpr::Kind::swap:
      return json{{"op", "swap"}, {"a", e.swap_first().id}, {"b", e.swap_second().id}};
    case PermExpr::Kind::comp:
      return json{{"op", "comp"},
                  {"left", expr_to_json(e.left())},
                  {"right", expr_to_json(e.right())}};
  }
  throw contract_error("expr_to_json: corrupt expression node");
}

PermExpr expr_from_json(const json& j) {
  if (!j.is_object() || !j.contains("op") || !j["op"].is_string())
    throw validation_error("expression node must be an object with an \"op\" tag");
  const std::string op = j["op"].get<std::string>();
  if (op == "id") return PermExpr::id();
  if (op == "swap") {
    if (!j.contains("a") || !j.contains("b"))
      throw validation_error("swap node needs \"a\" and \"b\"");
    return PermExpr::swap(atom_from_json(j["a"], "swap atom"),
                          atom_from_json(j["b"], "swap atom"));
  }
  if (op == "comp") {
    if (!j.contains("left") || !j.contains("right"))
      throw validation_error("comp node needs \"left\" and \"right\"");
    return PermExpr::comp(expr_from_json(j["left"]), expr_from_json(j["right"]));
  }
  throw validation_error("unknown expression op \"" + op + "\"");
}

json term_to_json(const LambdaTerm& t) {
  switch (t.kind()) {
    case LambdaTerm::Kind::var:
      return json{{"op", "var"}, {"atom", t.atom().id}};
    case LambdaTerm::Kind::app:
      return json{{"op", "app"}, {"fn", term_to_json(t.fn())}, {"arg", term_to_json(t.arg())}};
    case LambdaTerm::Kind::lam:
      return json{{"op", "lam"}, {"binder", t.atom().id}, {"body", term_to_json(t.body())}};
  }
  throw contract_error("term_to_json: corrupt term node");
}

LambdaTerm term_from_json(const json& j) {
  if (!j.is_object() || !j.contains("op") || !j["op"].is_string())
    throw validation_error("term node must be an object with an \"op\" tag");
  const std::string op = j["op"].get<std::string>();
  if (op == "var") {
    if (!j.contains("atom")) throw validation_error("var node needs \"atom\"");
    return LambdaTerm::var(atom_from_json(j["atom"], "variable atom"));
  }
  if (op == "app") {
    if (!j.contains("fn") || !j.contains("arg"))
      throw validation_error("app node needs \"fn\" and \"arg\"");
    return LambdaTerm::app(term_from_json(j["fn"]), term_from_json(j["arg"]));
  }
  if (op == "lam") {
    if (!j.contains("binder") || !j.contains("body"))
      throw validation_error("lam node needs \"binder\" and \"body\"");
    return LambdaTerm::lam(atom_from_json(j["binder"], "binder atom"),
                           term_from_json(j["body"]));
  }
  throw validation_error("unknown term op \"" + op + "\"");
}

json cycles_to_json(const CycleList& cycles) {
  json j = json::array();
  for (const Cycle& c : cycles) {
    json seq = json::array();
    for (Atom a : c.full()) seq.push_back(a.id);
    j.push_back(std::move(seq));
  }
  return j;
}

CycleList cycles_from_json(const json& j) {
  if (!j.is_array()) throw validation_error("cycle list must be an array");
  CycleList cycles;
  for (const json& seq : j) {
    if (!seq.is_array() || seq.size() < 2)
      throw validation_error("each cycle must be an array of at least two atoms");
    std::vector<Atom> atoms;
    atoms.reserve(seq.size());
    for (const json& a : seq) atoms.push_back(atom_from_json(a, "cycle atom"));
    cycles.push_back(Cycle::from_sequence(atoms));
  }
  return cycles;
}

}  // namespace finperm
