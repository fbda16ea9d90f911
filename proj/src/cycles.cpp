#include "finperm/cycles.hpp"

#include <algorithm>
#include <cctype>

#include "finperm/errors.hpp"

namespace finperm {

Cycle::Cycle(Atom head, std::vector<Atom> tail)
    : head_(head), tail_(std::move(tail)) {}

Cycle Cycle::from_sequence(std::span<const Atom> atoms) {
  if (atoms.empty()) throw contract_error("cycle from an empty sequence");
  return Cycle(atoms.front(), std::vector<Atom>(atoms.begin() + 1, atoms.end()));
}

std::vector<Atom> Cycle::full() const {
  std::vector<Atom> out;
  out.reserve(length());
  out.push_back(head_);
  out.insert(out.end(), tail_.begin(), tail_.end());
  return out;
}

bool Cycle::contains(Atom a) const {
  return head_ == a || std::find(tail_.begin(), tail_.end(), a) != tail_.end();
}

bool Cycle::duplicate_free() const {
  std::vector<Atom> seq = full();
  std::sort(seq.begin(), seq.end());
  return std::adjacent_find(seq.begin(), seq.end()) == seq.end();
}

Cycle Cycle::rotated_min_first() const {
  std::vector<Atom> seq = full();
  auto min_it = std::min_element(seq.begin(), seq.end());
  std::rotate(seq.begin(), min_it, seq.end());
  return from_sequence(seq);
}

std::string to_string(const Cycle& c) {
  std::string out = "(";
  bool first = true;
  for (Atom a : c.full()) {
    if (!first) out += ' ';
    out += to_string(a);
    first = false;
  }
  out += ')';
  return out;
}

TranspositionList cycle_to_transpositions(const Cycle& c) {
  TranspositionList ts;
  ts.reserve(c.tail().size());
  Atom prev = c.head();
  for (Atom next : c.tail()) {
    ts.emplace_back(prev, next);
    prev = next;
  }
  return ts;
}

Permutation transpositions_to_perm(const TranspositionList& ts) {
  // Left fold of compose reassociates the definitional right fold; the last
  // pair still acts first.
  Permutation acc = identity();
  for (const auto& [a, b] : ts) acc = compose(acc, transposition(a, b));
  return acc;
}

bool is_prefix(const Permutation& f, const Cycle& c) {
  if (c.tail().empty()) return false;
  if (f.apply(c.head()) == c.head()) return false;  // head must be in supp(f)
  Atom prev = c.head();
  for (Atom next : c.tail()) {
    if (f.apply(prev) != next) return false;
    prev = next;
  }
  return std::find(c.tail().begin(), c.tail().end(), c.head()) == c.tail().end();
}

bool is_closed_prefix(const Permutation& f, const Cycle& c) {
  return is_prefix(f, c) && f.apply(c.tail().back()) == c.head();
}

Cycle compute_prefix(const Permutation& f, std::size_t fuel, Atom a) {
  if (f.apply(a) == a)
    throw contract_error("compute_prefix: atom " + to_string(a) +
                         " is not in the support");
  std::vector<Atom> tail{f.apply(a)};
  for (std::size_t step = 0; step < fuel; ++step) {
    Atom next = f.apply(tail.back());
    if (next == a) break;  // further fuel leaves the prefix unchanged
    tail.push_back(next);
  }
  return Cycle(a, std::move(tail));
}

CycleList compute_cycles(const Permutation& f, std::size_t fuel,
                         std::span<const Atom> atoms, CycleList acc) {
  for (Atom a : atoms) {
    if (f.apply(a) == a)
      throw contract_error("compute_cycles: atom " + to_string(a) +
                           " is not in the support");
    bool covered = std::any_of(acc.begin(), acc.end(),
                               [a](const Cycle& c) { return c.contains(a); });
    if (covered) continue;
    acc.insert(acc.begin(), compute_prefix(f, fuel, a));
  }
  return acc;
}

CycleList perm_to_cycles(const Permutation& f) {
  AtomSet supp = f.support();
  return compute_cycles(f, supp.size(), supp.atoms(), {});
}

PermExpr cycles_to_expr(const CycleList& cycles) {
  for (const Cycle& c : cycles) {
    if (c.length() < 2)
      throw validation_error("singleton cycle " + to_string(c));
    if (!c.duplicate_free())
      throw validation_error("cycle " + to_string(c) + " repeats an atom");
  }
  for (std::size_t i = 0; i < cycles.size(); ++i)
    for (std::size_t j = i + 1; j < cycles.size(); ++j)
      if (AtomSet(cycles[i].full()).intersects(AtomSet(cycles[j].full())))
        throw validation_error("cycles " + to_string(cycles[i]) + " and " +
                               to_string(cycles[j]) + " are not disjoint");

  if (cycles.empty()) return PermExpr::id();

  auto chain = [](const Cycle& c) {
    TranspositionList ts = cycle_to_transpositions(c);
    PermExpr e = PermExpr::swap(ts.back().first, ts.back().second);
    for (auto it = ts.rbegin() + 1; it != ts.rend(); ++it)
      e = PermExpr::comp(PermExpr::swap(it->first, it->second), e);
    return e;
  };

  PermExpr e = chain(cycles.back());
  for (auto it = cycles.rbegin() + 1; it != cycles.rend(); ++it)
    e = PermExpr::comp(chain(*it), e);
  return e;
}

CycleList canonical_cycles(const CycleList& cycles) {
  CycleList out;
  out.reserve(cycles.size());
  for (const Cycle& c : cycles) out.push_back(c.rotated_min_first());
  std::sort(out.begin(), out.end(),
            [](const Cycle& a, const Cycle& b) { return a.head() < b.head(); });
  return out;
}

PermExpr normalize(const PermExpr& e) {
  return cycles_to_expr(canonical_cycles(perm_to_cycles(eval(e))));
}

std::string format_cycles(const CycleList& cycles) {
  if (cycles.empty()) return "id";
  std::string out;
  for (const Cycle& c : canonical_cycles(cycles)) out += to_string(c);
  return out;
}

namespace {

class CycleParser {
public:
  explicit CycleParser(std::string_view text) : text_(text) {}

  CycleList parse() {
    skip_ws();
    if (text_.substr(pos_, 2) == "id") {
      pos_ += 2;
      skip_ws();
      if (pos_ != text_.size()) throw parse_error(pos_, "end of input");
      return {};
    }
    CycleList cycles;
    while (true) {
      skip_ws();
      if (pos_ == text_.size()) break;
      cycles.push_back(group());
    }
    if (cycles.empty()) throw parse_error(pos_, "'(' or 'id'");
    validate(cycles);
    return cycles;
  }

private:
  Cycle group() {
    expect('(');
    std::vector<Atom> atoms;
    while (true) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == ')') {
        ++pos_;
        break;
      }
      atoms.push_back(nat());
    }
    if (atoms.size() < 2) {
      std::string shown = atoms.empty() ? "()" : to_string(Cycle::from_sequence(atoms));
      throw validation_error("cycle " + shown + " needs at least two atoms");
    }
    return Cycle::from_sequence(atoms);
  }

  void validate(const CycleList& cycles) {
    for (const Cycle& c : cycles)
      if (!c.duplicate_free())
        throw validation_error("cycle " + to_string(c) + " repeats an atom");
    for (std::size_t i = 0; i < cycles.size(); ++i)
      for (std::size_t j = i + 1; j < cycles.size(); ++j)
        if (AtomSet(cycles[i].full()).intersects(AtomSet(cycles[j].full())))
          throw validation_error("cycles " + to_string(cycles[i]) + " and " +
                                 to_string(cycles[j]) + " are not disjoint");
  }

  Atom nat() {
    if (pos_ == text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw parse_error(pos_, "a number or ')'");
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

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

CycleList parse_cycles(std::string_view text) { return CycleParser(text).parse(); }

}  // namespace finperm
