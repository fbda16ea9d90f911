#include "finperm/perm_expr.hpp"

#include <cctype>

#include "finperm/errors.hpp"

namespace finperm {

PermExpr PermExpr::id() {
  static const auto node = std::make_shared<const Node>(Node{Kind::id, {}, {}, nullptr, nullptr});
  return PermExpr(node);
}

PermExpr PermExpr::swap(Atom a, Atom b) {
  return PermExpr(std::make_shared<const Node>(Node{Kind::swap, a, b, nullptr, nullptr}));
}

PermExpr PermExpr::comp(PermExpr left, PermExpr right) {
  return PermExpr(std::make_shared<const Node>(
      Node{Kind::comp, {}, {}, std::move(left.node_), std::move(right.node_)}));
}

Atom PermExpr::swap_first() const {
  if (!is_swap()) throw contract_error("swap_first on a non-swap node");
  return node_->a;
}

Atom PermExpr::swap_second() const {
  if (!is_swap()) throw contract_error("swap_second on a non-swap node");
  return node_->b;
}

PermExpr PermExpr::left() const {
  if (!is_comp()) throw contract_error("left on a non-comp node");
  return PermExpr(node_->left);
}

PermExpr PermExpr::right() const {
  if (!is_comp()) throw contract_error("right on a non-comp node");
  return PermExpr(node_->right);
}

bool operator==(const PermExpr& a, const PermExpr& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->kind != b.node_->kind) return false;
  switch (a.node_->kind) {
    case PermExpr::Kind::id:
      return true;
    case PermExpr::Kind::swap:
      return a.node_->a == b.node_->a && a.node_->b == b.node_->b;
    case PermExpr::Kind::comp:
      return PermExpr(a.node_->left) == PermExpr(b.node_->left) &&
             PermExpr(a.node_->right) == PermExpr(b.node_->right);
  }
  return false;
}

Permutation eval(const PermExpr& e) {
  switch (e.kind()) {
    case PermExpr::Kind::id:
      return identity();
    case PermExpr::Kind::swap:
      return transposition(e.swap_first(), e.swap_second());
    case PermExpr::Kind::comp:
      return compose(eval(e.left()), eval(e.right()));
  }
  throw contract_error("eval: corrupt expression node");
}

namespace {

void collect_atoms(const PermExpr& e, std::vector<Atom>& out) {
  switch (e.kind()) {
    case PermExpr::Kind::id:
      return;
    case PermExpr::Kind::swap:
      out.push_back(e.swap_first());
      out.push_back(e.swap_second());
      return;
    case PermExpr::Kind::comp:
      collect_atoms(e.left(), out);
      collect_atoms(e.right(), out);
      return;
  }
}

}  // namespace

AtomSet atoms_of(const PermExpr& e) {
  std::vector<Atom> atoms;
  collect_atoms(e, atoms);
  return AtomSet(std::move(atoms));
}

AtomSet semantic_support(const PermExpr& e) {
  Permutation p = eval(e);
  AtomSet result;
  for (Atom a : atoms_of(e))
    if (p.apply(a) != a) result.insert(a);
  return result;
}

bool subsumes(const PermExpr& p, const PermExpr& q) {
  Permutation fp = eval(p);
  Permutation fq = eval(q);
  for (Atom a : atoms_of(p))
    if (fp.apply(a) != fq.apply(a)) return false;
  return true;
}

bool expr_equiv(const PermExpr& p, const PermExpr& q) {
  return subsumes(p, q) && subsumes(q, p);
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class ExprParser {
public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  PermExpr parse() {
    PermExpr e = sequence();
    skip_ws();
    if (pos_ != text_.size()) throw parse_error(pos_, "end of input");
    return e;
  }

private:
  // sequence := juxt (';' juxt)*
  PermExpr sequence() {
    PermExpr e = juxtaposition();
    while (true) {
      skip_ws();
      if (!at(';')) return e;
      ++pos_;
      e = PermExpr::comp(e, juxtaposition());
    }
  }

  // juxt := element+
  PermExpr juxtaposition() {
    PermExpr e = element();
    while (true) {
      skip_ws();
      if (pos_ == text_.size() || at(';') || at(')')) return e;
      e = PermExpr::comp(e, element());
    }
  }

  // element := 'id' | '(' nat nat ')' | '(' sequence ')'
  PermExpr element() {
    skip_ws();
    if (pos_ == text_.size()) throw parse_error(pos_, "'id' or '('");
    if (at('i')) {
      if (text_.substr(pos_, 2) != "id") throw parse_error(pos_, "'id'");
      pos_ += 2;
      return PermExpr::id();
    }
    if (!at('(')) throw parse_error(pos_, "'id' or '('");
    ++pos_;
    skip_ws();
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      Atom a = nat();
      skip_ws();
      Atom b = nat();
      skip_ws();
      expect(')');
      return PermExpr::swap(a, b);
    }
    PermExpr e = sequence();
    skip_ws();
    expect(')');
    return e;
  }

  Atom nat() {
    skip_ws();
    if (pos_ == text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw parse_error(pos_, "a number");
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

// The right operand of a composition is parenthesized when it is itself a
// composition; everything a left spine produces reparses by left
// associativity.
void print(const PermExpr& e, std::string& out) {
  switch (e.kind()) {
    case PermExpr::Kind::id:
      out += "id";
      return;
    case PermExpr::Kind::swap:
      out += '(';
      out += to_string(e.swap_first());
      out += ' ';
      out += to_string(e.swap_second());
      out += ')';
      return;
    case PermExpr::Kind::comp: {
      print(e.left(), out);
      out += ' ';
      PermExpr r = e.right();
      if (r.is_comp()) {
        out += '(';
        print(r, out);
        out += ')';
      } else {
        print(r, out);
      }
      return;
    }
  }
}

}  // namespace

PermExpr parse_expr(std::string_view text) { return ExprParser(text).parse(); }

std::string format_expr(const PermExpr& e) {
  std::string out;
  print(e, out);
  return out;
}

}  // namespace finperm
