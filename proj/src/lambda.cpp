#include "finperm/lambda.hpp"

#include <cctype>

#include "finperm/errors.hpp"

namespace finperm {

LambdaTerm LambdaTerm::var(Atom a) {
  return LambdaTerm(std::make_shared<const Node>(Node{Kind::var, a, nullptr, nullptr}));
}

LambdaTerm LambdaTerm::app(LambdaTerm fn, LambdaTerm arg) {
  return LambdaTerm(std::make_shared<const Node>(
      Node{Kind::app, {}, std::move(fn.node_), std::move(arg.node_)}));
}

LambdaTerm LambdaTerm::lam(Atom binder, LambdaTerm body) {
  return LambdaTerm(std::make_shared<const Node>(
      Node{Kind::lam, binder, std::move(body.node_), nullptr}));
}

Atom LambdaTerm::atom() const {
  if (is_app()) throw contract_error("atom() on an application node");
  return node_->atom;
}

LambdaTerm LambdaTerm::fn() const {
  if (!is_app()) throw contract_error("fn() on a non-application node");
  return LambdaTerm(node_->first);
}

LambdaTerm LambdaTerm::arg() const {
  if (!is_app()) throw contract_error("arg() on a non-application node");
  return LambdaTerm(node_->second);
}

LambdaTerm LambdaTerm::body() const {
  if (!is_lam()) throw contract_error("body() on a non-abstraction node");
  return LambdaTerm(node_->first);
}

bool operator==(const LambdaTerm& a, const LambdaTerm& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->kind != b.node_->kind) return false;
  switch (a.node_->kind) {
    case LambdaTerm::Kind::var:
      return a.node_->atom == b.node_->atom;
    case LambdaTerm::Kind::app:
      return LambdaTerm(a.node_->first) == LambdaTerm(b.node_->first) &&
             LambdaTerm(a.node_->second) == LambdaTerm(b.node_->second);
    case LambdaTerm::Kind::lam:
      return a.node_->atom == b.node_->atom &&
             LambdaTerm(a.node_->first) == LambdaTerm(b.node_->first);
  }
  return false;
}

LambdaTerm lambda_act(const Permutation& p, const LambdaTerm& t) {
  switch (t.kind()) {
    case LambdaTerm::Kind::var:
      return LambdaTerm::var(p.apply(t.atom()));
    case LambdaTerm::Kind::app:
      return LambdaTerm::app(lambda_act(p, t.fn()), lambda_act(p, t.arg()));
    case LambdaTerm::Kind::lam:
      return LambdaTerm::lam(p.apply(t.atom()), lambda_act(p, t.body()));
  }
  throw contract_error("lambda_act: corrupt term node");
}

namespace {

void collect_free(const LambdaTerm& t, const AtomSet& bound, std::vector<Atom>& out) {
  switch (t.kind()) {
    case LambdaTerm::Kind::var:
      if (!bound.contains(t.atom())) out.push_back(t.atom());
      return;
    case LambdaTerm::Kind::app:
      collect_free(t.fn(), bound, out);
      collect_free(t.arg(), bound, out);
      return;
    case LambdaTerm::Kind::lam: {
      AtomSet extended = bound;
      extended.insert(t.atom());
      collect_free(t.body(), extended, out);
      return;
    }
  }
}

void collect_all(const LambdaTerm& t, std::vector<Atom>& out) {
  switch (t.kind()) {
    case LambdaTerm::Kind::var:
      out.push_back(t.atom());
      return;
    case LambdaTerm::Kind::app:
      collect_all(t.fn(), out);
      collect_all(t.arg(), out);
      return;
    case LambdaTerm::Kind::lam:
      out.push_back(t.atom());
      collect_all(t.body(), out);
      return;
  }
}

}  // namespace

AtomSet free_vars(const LambdaTerm& t) {
  std::vector<Atom> out;
  collect_free(t, {}, out);
  return AtomSet(std::move(out));
}

AtomSet term_atoms(const LambdaTerm& t) {
  std::vector<Atom> out;
  collect_all(t, out);
  return AtomSet(std::move(out));
}

bool alpha_eq(const LambdaTerm& a, const LambdaTerm& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case LambdaTerm::Kind::var:
      return a.atom() == b.atom();
    case LambdaTerm::Kind::app:
      return alpha_eq(a.fn(), b.fn()) && alpha_eq(a.arg(), b.arg());
    case LambdaTerm::Kind::lam: {
      if (a.atom() == b.atom()) return alpha_eq(a.body(), b.body());
      // Swap both binders to one fresh atom; swapping cannot capture.
      Atom fresh{std::max(term_atoms(a).max().id, term_atoms(b).max().id) + 1};
      return alpha_eq(lambda_act(transposition(a.atom(), fresh), a.body()),
                      lambda_act(transposition(b.atom(), fresh), b.body()));
    }
  }
  return false;
}

GAction<LambdaTerm> lambda_term_action() {
  return GAction<LambdaTerm>{
      [](const Permutation& g, const LambdaTerm& t) { return lambda_act(g, t); },
      [](const LambdaTerm& a, const LambdaTerm& b) { return alpha_eq(a, b); },
  };
}

// ---------------------------------------------------------------------------
// Concrete syntax

namespace {

class TermParser {
public:
  explicit TermParser(std::string_view text) : text_(text) {}

  LambdaTerm parse() {
    LambdaTerm t = term();
    skip_ws();
    if (pos_ != text_.size()) throw parse_error(pos_, "end of input");
    return t;
  }

private:
  // term := '\' var '.' term | app
  LambdaTerm term() {
    skip_ws();
    if (at('\\')) {
      ++pos_;
      Atom binder = variable();
      skip_ws();
      expect('.');
      return LambdaTerm::lam(binder, term());
    }
    return application();
  }

  // app := atom_term+
  LambdaTerm application() {
    LambdaTerm t = atom_term();
    while (true) {
      skip_ws();
      if (pos_ == text_.size() || at(')')) return t;
      t = LambdaTerm::app(t, atom_term());
    }
  }

  // atom_term := var | '(' term ')'
  LambdaTerm atom_term() {
    skip_ws();
    if (at('(')) {
      ++pos_;
      LambdaTerm t = term();
      skip_ws();
      expect(')');
      return t;
    }
    if (at('x')) return LambdaTerm::var(variable());
    throw parse_error(pos_, "a variable or '('");
  }

  Atom variable() {
    skip_ws();
    if (!at('x')) throw parse_error(pos_, "a variable like 'x3'");
    ++pos_;
    if (pos_ == text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw parse_error(pos_, "digits after 'x'");
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::uint64_t digit = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > (UINT64_MAX - digit) / 10) throw parse_error(pos_, "a smaller number");
      value = value * 10 + digit;
      ++pos_;
    }
    return Atom{value};
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw parse_error(pos_, std::string("'") + c + "'");
    ++pos_;
  }

  bool at(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void print(const LambdaTerm& t, std::string& out) {
  switch (t.kind()) {
    case LambdaTerm::Kind::var:
      out += 'x';
      out += to_string(t.atom());
      return;
    case LambdaTerm::Kind::lam:
      out += "\\x";
      out += to_string(t.atom());
      out += ". ";
      print(t.body(), out);
      return;
    case LambdaTerm::Kind::app: {
      LambdaTerm f = t.fn();
      if (f.is_lam()) {
        out += '(';
        print(f, out);
        out += ')';
      } else {
        print(f, out);
      }
      out += ' ';
      LambdaTerm a = t.arg();
      if (a.is_var()) {
        print(a, out);
      } else {
        out += '(';
        print(a, out);
        out += ')';
      }
      return;
    }
  }
}

}  // namespace

LambdaTerm parse_term(std::string_view text) { return TermParser(text).parse(); }

std::string format_term(const LambdaTerm& t) {
  std::string out;
  print(t, out);
  return out;
}

}  // namespace finperm
