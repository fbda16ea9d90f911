#include "finperm/cli.hpp"

#include <istream>
#include <iostream>
#include <sstream>
#include <variant>

#include "finperm/checks.hpp"
#include "finperm/cycles.hpp"
#include "finperm/errors.hpp"
#include "finperm/json_io.hpp"
#include "finperm/nominal.hpp"

namespace finperm::cli {

namespace {

using nlohmann::json;

constexpr std::uint64_t kSelftestSeed = 20240601;

const char* kUsage =
    "usage: finperm [--json] <command> [args]\n"
    "\n"
    "commands:\n"
    "  normalize EXPR          canonical form of a swap expression\n"
    "  cycles [--from-cycles] INPUT\n"
    "                          disjoint-cycle decomposition; INPUT is a swap\n"
    "                          expression, or cycle notation with --from-cycles\n"
    "  apply EXPR ATOM         image of an atom under the expression\n"
    "  compose EXPR EXPR       canonical form of the composition\n"
    "                          (right operand applied first)\n"
    "  invert EXPR             canonical form of the inverse\n"
    "  equal EXPR EXPR         exit 0 if equivalent, 1 if not\n"
    "  support EXPR            atoms moved by the denoted permutation\n"
    "  lamact EXPR TERM        apply the permutation to a lambda term\n"
    "  lamsupport TERM         free variables of a lambda term\n"
    "  fresh ATOM TERM         is the atom fresh for the term?\n"
    "  selftest quick|full     run the packaged validation suites\n"
    "\n"
    "EXPR: 'id', swaps '(1 3)', juxtaposition or ';' for composition.\n"
    "TERM: variables 'x1', '\\x1. body', juxtaposition, parentheses.\n"
    "'-' reads that argument from standard input.\n"
    "--json switches every command to JSON output.\n";

struct NormalizeCmd { PermExpr expr; };
struct CyclesCmd { std::variant<PermExpr, CycleList> input; };
struct ApplyCmd { PermExpr expr; Atom atom; };
struct ComposeCmd { PermExpr left, right; };
struct InvertCmd { PermExpr expr; };
struct EqualCmd { PermExpr left, right; };
struct SupportCmd { PermExpr expr; };
struct LamActCmd { PermExpr expr; LambdaTerm term; };
struct LamSupportCmd { LambdaTerm term; };
struct FreshCmd { Atom atom; LambdaTerm term; };
struct SelftestCmd { bool full; };

using Command = std::variant<NormalizeCmd, CyclesCmd, ApplyCmd, ComposeCmd,
                             InvertCmd, EqualCmd, SupportCmd, LamActCmd,
                             LamSupportCmd, FreshCmd, SelftestCmd>;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class CommandParser {
public:
  CommandParser(std::vector<std::string> args, std::istream& input)
      : args_(std::move(args)), input_(input) {}

  bool json_mode() const { return json_; }

  Command parse() {
    std::vector<std::string> positional;
    bool from_cycles = false;
    for (const std::string& a : args_) {
      if (a == "--json")
        json_ = true;
      else if (a == "--from-cycles")
        from_cycles = true;
      else if (a.size() > 1 && a[0] == '-' && a != "-")
        throw UsageError("unknown flag '" + a + "'");
      else
        positional.push_back(a);
    }
    if (positional.empty()) throw UsageError("missing command");
    const std::string cmd = positional.front();
    positional.erase(positional.begin());

    if (cmd == "cycles") {
      std::string text = fetch(arg1(cmd, positional));
      if (from_cycles) return CyclesCmd{parse_cycles(text)};
      return CyclesCmd{parse_expr(text)};
    }
    if (from_cycles) throw UsageError("--from-cycles only applies to 'cycles'");
    if (cmd == "normalize") return NormalizeCmd{expr(arg1(cmd, positional))};
    if (cmd == "apply") {
      auto [a, b] = arg2(cmd, positional);
      return ApplyCmd{expr(a), atom(b)};
    }
    if (cmd == "compose") {
      auto [a, b] = arg2(cmd, positional);
      return ComposeCmd{expr(a), expr(b)};
    }
    if (cmd == "invert") return InvertCmd{expr(arg1(cmd, positional))};
    if (cmd == "equal") {
      auto [a, b] = arg2(cmd, positional);
      return EqualCmd{expr(a), expr(b)};
    }
    if (cmd == "support") return SupportCmd{expr(arg1(cmd, positional))};
    if (cmd == "lamact") {
      auto [a, b] = arg2(cmd, positional);
      return LamActCmd{expr(a), term(b)};
    }
    if (cmd == "lamsupport") return LamSupportCmd{term(arg1(cmd, positional))};
    if (cmd == "fresh") {
      auto [a, b] = arg2(cmd, positional);
      return FreshCmd{atom(a), term(b)};
    }
    if (cmd == "selftest") {
      std::string level = arg1(cmd, positional);
      if (level == "quick") return SelftestCmd{false};
      if (level == "full") return SelftestCmd{true};
      throw UsageError("selftest level must be 'quick' or 'full'");
    }
    throw UsageError("unknown command '" + cmd + "'");
  }

private:
  static std::string arg1(const std::string& cmd, std::vector<std::string>& pos) {
    if (pos.size() != 1)
      throw UsageError("'" + cmd + "' takes exactly one argument");
    return pos.front();
  }

  static std::pair<std::string, std::string> arg2(const std::string& cmd,
                                                  std::vector<std::string>& pos) {
    if (pos.size() != 2)
      throw UsageError("'" + cmd + "' takes exactly two arguments");
    return {pos[0], pos[1]};
  }

  std::string fetch(const std::string& arg) {
    if (arg != "-") return arg;
    std::ostringstream buffer;
    buffer << input_.rdbuf();
    return buffer.str();
  }

  PermExpr expr(const std::string& arg) { return parse_expr(fetch(arg)); }
  LambdaTerm term(const std::string& arg) { return parse_term(fetch(arg)); }

  Atom atom(const std::string& arg) {
    if (arg.empty()) throw UsageError("expected an atom (a non-negative integer)");
    std::uint64_t value = 0;
    for (char c : arg) {
      if (c < '0' || c > '9')
        throw UsageError("'" + arg + "' is not an atom (a non-negative integer)");
      std::uint64_t digit = static_cast<std::uint64_t>(c - '0');
      if (value > (UINT64_MAX - digit) / 10) throw UsageError("atom '" + arg + "' is too large");
      value = value * 10 + digit;
    }
    return Atom{value};
  }

  std::vector<std::string> args_;
  std::istream& input_;
  bool json_ = false;
};

json atoms_to_json(const AtomSet& s) {
  json j = json::array();
  for (Atom a : s) j.push_back(a.id);
  return j;
}

class Executor {
public:
  explicit Executor(bool json_mode) : json_(json_mode) {}

  RunResult operator()(const NormalizeCmd& cmd) {
    return expr_result(normalize(cmd.expr));
  }

  RunResult operator()(const CyclesCmd& cmd) {
    CycleList cycles = std::holds_alternative<PermExpr>(cmd.input)
                           ? perm_to_cycles(eval(std::get<PermExpr>(cmd.input)))
                           : std::get<CycleList>(cmd.input);
    CycleList canonical = canonical_cycles(cycles);
    if (json_)
      return ok_json(json{{"cycles", cycles_to_json(canonical)},
                     {"text", format_cycles(canonical)}});
    return ok_text(format_cycles(canonical));
  }

  RunResult operator()(const ApplyCmd& cmd) {
    Atom image = eval(cmd.expr).apply(cmd.atom);
    if (json_) return ok_json(json{{"atom", image.id}});
    return ok_text(to_string(image));
  }

  RunResult operator()(const ComposeCmd& cmd) {
    return expr_result(normalize(PermExpr::comp(cmd.left, cmd.right)));
  }

  RunResult operator()(const InvertCmd& cmd) {
    Permutation inv = eval(cmd.expr).inverse();
    return expr_result(cycles_to_expr(canonical_cycles(perm_to_cycles(inv))));
  }

  RunResult operator()(const EqualCmd& cmd) {
    bool equal = expr_equiv(cmd.left, cmd.right);
    RunResult r = json_ ? ok_json(json{{"equal", equal}}) : ok_text(equal ? "true" : "false");
    r.status = equal ? exit_ok : exit_inequivalent;
    return r;
  }

  RunResult operator()(const SupportCmd& cmd) {
    AtomSet s = semantic_support(cmd.expr);
    if (json_) return ok_json(json{{"atoms", atoms_to_json(s)}});
    return ok_text(to_string(s));
  }

  RunResult operator()(const LamActCmd& cmd) {
    LambdaTerm t = lambda_act(eval(cmd.expr), cmd.term);
    if (json_) return ok_json(json{{"term", term_to_json(t)}, {"text", format_term(t)}});
    return ok_text(format_term(t));
  }

  RunResult operator()(const LamSupportCmd& cmd) {
    AtomSet s = lambda_support(cmd.term).atoms;
    if (json_) return ok_json(json{{"atoms", atoms_to_json(s)}});
    return ok_text(to_string(s));
  }

  RunResult operator()(const FreshCmd& cmd) {
    bool fresh = is_fresh(lambda_term_action(), cmd.atom, lambda_support(cmd.term).atoms);
    if (json_) return ok_json(json{{"fresh", fresh}});
    return ok_text(fresh ? "true" : "false");
  }

  RunResult operator()(const SelftestCmd& cmd) {
    std::vector<SuiteResult> suites;
    suites.push_back(check_group_laws(kSelftestSeed, 100));
    suites.push_back(check_normalization_roundtrip(kSelftestSeed, 100, 8, 6));
    if (cmd.full) suites.push_back(check_support_equivalence());

    bool all_ok = true;
    for (const SuiteResult& s : suites) all_ok = all_ok && s.ok();

    RunResult r;
    r.status = all_ok ? exit_ok : exit_inequivalent;
    if (json_) {
      json out = json::array();
      for (const SuiteResult& s : suites)
        out.push_back({{"name", s.name}, {"checks", s.checks}, {"failures", s.failures}});
      r.out = json{{"suites", out}, {"ok", all_ok}}.dump() + "\n";
      return r;
    }
    std::string text;
    for (const SuiteResult& s : suites) {
      text += s.name + ": " + std::to_string(s.checks) + " checks, " +
              std::to_string(s.failures.size()) + " failures\n";
      for (const std::string& f : s.failures) text += "  " + f + "\n";
    }
    text += all_ok ? "ok\n" : "FAILED\n";
    r.out = text;
    return r;
  }

private:
  RunResult expr_result(const PermExpr& e) {
    if (json_)
      return ok_json(json{{"expr", expr_to_json(e)}, {"text", format_expr(e)}});
    return ok_text(format_expr(e));
  }

  RunResult ok_json(const json& j) {
    RunResult r;
    r.out = j.dump() + "\n";
    return r;
  }

  RunResult ok_text(const std::string& line) {
    RunResult r;
    r.out = line + "\n";
    return r;
  }

  bool json_;
};

}  // namespace

RunResult run(const std::vector<std::string>& args, std::istream& input) {
  if (args.size() == 1 && (args[0] == "--help" || args[0] == "help")) {
    RunResult r;
    r.out = kUsage;
    return r;
  }
  CommandParser parser(args, input);
  try {
    Command command = parser.parse();
    return std::visit(Executor(parser.json_mode()), command);
  } catch (const UsageError& e) {
    RunResult r;
    r.status = exit_usage;
    r.err = std::string("error: ") + e.what() + "\n\n" + kUsage;
    return r;
  } catch (const parse_error& e) {
    RunResult r;
    r.status = exit_usage;
    r.err = std::string("error: ") + e.what() + "\n";
    return r;
  } catch (const validation_error& e) {
    RunResult r;
    r.status = exit_usage;
    r.err = std::string("error: ") + e.what() + "\n";
    return r;
  } catch (const std::logic_error& e) {
    // contract and bound violations: nothing a CLI user can cause directly
    RunResult r;
    r.status = exit_internal;
    r.err = std::string("internal error: ") + e.what() + "\n";
    return r;
  }
}

RunResult run(const std::vector<std::string>& args) { return run(args, std::cin); }

}  // namespace finperm::cli
