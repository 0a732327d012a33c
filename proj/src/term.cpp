#include "unialg/term.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace unialg {

namespace {

constexpr std::size_t mix(std::size_t h) noexcept {
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdULL;
  h ^= h >> 33;
  h *= 0xc4ceb9fe1a85ec53ULL;
  h ^= h >> 33;
  return h;
}

}  // namespace

Term Term::variable(VarId id) {
  auto h = mix((std::size_t{1} << 40) ^ id);
  return Term(std::make_shared<const Node>(Node{TermKind::Variable, false, id, 1, h, Term(nullptr), Term(nullptr)}));
}

Term Term::constant(SymbolId id) {
  auto h = mix((std::size_t{2} << 40) ^ id);
  return Term(std::make_shared<const Node>(Node{TermKind::Constant, true, id, 1, h, Term(nullptr), Term(nullptr)}));
}

Term Term::pair(Term left, Term right) {
  const auto& l = *left.node_;
  const auto& r = *right.node_;
  auto h = mix(l.hash * 31 + mix(r.hash + 0x9e3779b97f4a7c15ULL));
  return Term(std::make_shared<const Node>(
      Node{TermKind::Pair, l.closed && r.closed, 0, l.size + r.size + 1, h, std::move(left), std::move(right)}));
}

bool operator==(const Term& a, const Term& b) noexcept {
  const Term::Node* x = a.node_.get();
  const Term::Node* y = b.node_.get();
  if (x == y) return true;
  if (x->hash != y->hash || x->kind != y->kind || x->size != y->size) return false;
  if (x->kind != TermKind::Pair) return x->id == y->id;
  return a.left() == b.left() && a.right() == b.right();
}

std::strong_ordering operator<=>(const Term& a, const Term& b) noexcept {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  if (!a.is_pair()) return a.id() <=> b.id();
  if (auto c = a.left() <=> b.left(); c != 0) return c;
  return a.right() <=> b.right();
}

Term chain(std::span<const Term> parts) {
  if (parts.empty()) throw std::invalid_argument("chain of zero terms");
  Term acc = parts.back();
  for (auto i = parts.size() - 1; i-- > 0;) acc = Term::pair(parts[i], std::move(acc));
  return acc;
}

Term chain(std::initializer_list<Term> parts) { return chain(std::span<const Term>(parts.begin(), parts.size())); }

namespace {

void collect_variables(const Term& t, std::vector<VarId>& out) {
  if (t.closed()) return;
  switch (t.kind()) {
    case TermKind::Variable:
      if (std::find(out.begin(), out.end(), t.id()) == out.end()) out.push_back(t.id());
      return;
    case TermKind::Constant:
      return;
    case TermKind::Pair:
      collect_variables(t.left(), out);
      collect_variables(t.right(), out);
      return;
  }
}

bool linear_rec(const Term& t, std::unordered_set<VarId>& seen) {
  if (t.closed()) return true;
  if (t.is_variable()) return seen.insert(t.id()).second;
  return linear_rec(t.left(), seen) && linear_rec(t.right(), seen);
}

}  // namespace

std::vector<VarId> variables_of(const Term& t) {
  std::vector<VarId> out;
  collect_variables(t, out);
  return out;
}

bool is_linear(const Term& t) {
  std::unordered_set<VarId> seen;
  return linear_rec(t, seen);
}

bool occurs(VarId v, const Term& t) {
  if (t.closed()) return false;
  if (t.is_variable()) return t.id() == v;
  return occurs(v, t.left()) || occurs(v, t.right());
}

VarId max_variable(const Term& t, VarId floor) {
  if (t.closed()) return floor;
  if (t.is_variable()) return std::max(floor, t.id());
  return max_variable(t.right(), max_variable(t.left(), floor));
}

}  // namespace unialg
