#include "unialg/unify.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace unialg {

Substitution::Substitution(std::initializer_list<Binding> bindings) {
  for (const auto& [v, t] : bindings) bind(v, t);
}

void Substitution::bind(VarId v, Term t) {
  auto it = std::lower_bound(bindings_.begin(), bindings_.end(), v,
                             [](const Binding& b, VarId key) { return b.first < key; });
  const bool identity = t.is_variable() && t.id() == v;
  if (it != bindings_.end() && it->first == v) {
    if (identity) {
      bindings_.erase(it);
    } else {
      it->second = std::move(t);
    }
    return;
  }
  if (!identity) bindings_.insert(it, {v, std::move(t)});
}

const Term* Substitution::find(VarId v) const noexcept {
  auto it = std::lower_bound(bindings_.begin(), bindings_.end(), v,
                             [](const Binding& b, VarId key) { return b.first < key; });
  if (it == bindings_.end() || it->first != v) return nullptr;
  return &it->second;
}

Term apply(const Term& t, const Substitution& theta) {
  if (t.closed() || theta.empty()) return t;
  if (t.is_variable()) {
    const Term* image = theta.find(t.id());
    return image ? *image : t;
  }
  Term l = apply(t.left(), theta);
  Term r = apply(t.right(), theta);
  if (l.same_node(t.left()) && r.same_node(t.right())) return t;
  return Term::pair(std::move(l), std::move(r));
}

Substitution compose(const Substitution& theta, const Substitution& psi) {
  Substitution out;
  for (const auto& [x, u] : theta) out.bind(x, apply(u, psi));
  for (const auto& [y, v] : psi) {
    if (!theta.contains(y)) out.bind(y, v);
  }
  return out;
}

std::optional<Substitution> mgu(const Term& t, const Term& u) {
  Substitution theta;
  std::vector<std::pair<Term, Term>> pending{{t, u}};
  while (!pending.empty()) {
    auto [a, b] = std::move(pending.back());
    pending.pop_back();
    a = apply(a, theta);
    b = apply(b, theta);
    if (a == b) continue;
    if (!a.is_variable() && b.is_variable()) std::swap(a, b);
    if (a.is_variable()) {
      if (occurs(a.id(), b)) return std::nullopt;
      theta = compose(theta, Substitution{{a.id(), b}});
      continue;
    }
    if (a.is_pair() && b.is_pair()) {
      pending.emplace_back(a.right(), b.right());
      pending.emplace_back(a.left(), b.left());
      continue;
    }
    return std::nullopt;  // constant clash, or constant against pair
  }
  return theta;
}

namespace {

bool match_into(const Term& pattern, const Term& t, Substitution& out) {
  switch (pattern.kind()) {
    case TermKind::Variable:
      out.bind(pattern.id(), t);
      return true;
    case TermKind::Constant:
      return t.is_constant() && t.id() == pattern.id();
    case TermKind::Pair:
      if (pattern.closed()) return pattern == t;
      return t.is_pair() && match_into(pattern.left(), t.left(), out) && match_into(pattern.right(), t.right(), out);
  }
  return false;
}

}  // namespace

std::optional<Substitution> match_linear_closed_unchecked(const Term& pattern, const Term& t) {
  Substitution out;
  if (!match_into(pattern, t, out)) return std::nullopt;
  return out;
}

bool match_linear_closed_into(const Term& pattern, const Term& t, Substitution& out) {
  out.clear();
  return match_into(pattern, t, out);
}

std::optional<Substitution> match_linear_closed(const Term& pattern, const Term& t) {
  if (!is_linear(pattern)) throw std::invalid_argument("match_linear_closed: pattern is not linear");
  if (!t.closed()) throw std::invalid_argument("match_linear_closed: subject is not closed");
  return match_linear_closed_unchecked(pattern, t);
}

void FreshVariables::avoid(const Term& t) {
  VarId top = max_variable(t, 0);
  if (!t.closed() && top >= next_) next_ = top + 1;
}

VarId FreshVariables::next() {
  if (next_ == std::numeric_limits<VarId>::max()) throw std::overflow_error("fresh variable supply exhausted");
  return next_++;
}

Term rename_apart(const Term& t, FreshVariables& fresh, Substitution* renaming) {
  Substitution local;
  Substitution& map = renaming ? *renaming : local;
  for (VarId v : variables_of(t)) {
    if (!map.contains(v)) map.bind(v, Term::variable(fresh.next()));
  }
  return apply(t, map);
}

bool disjoint(const Term& t, const Term& u) {
  FreshVariables fresh;
  fresh.avoid(t);
  fresh.avoid(u);
  Term renamed = rename_apart(u, fresh);
  return !mgu(t, renamed).has_value();
}

}  // namespace unialg
