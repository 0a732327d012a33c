#include "unialg/flow.hpp"

#include <algorithm>
#include <stdexcept>

#include "unialg/unify.hpp"

namespace unialg {
namespace {

/// Shifts canonical variables v<i> to the fresh range so that two canonical
/// flows can be combined without capture.
Term shift_to_fresh(const Term& t) {
  if (t.closed()) return t;
  if (t.is_variable()) {
    VarId v = t.id();
    return vars::is_canonical(v) ? Term::variable(vars::kFreshBase + vars::canonical_index(v)) : t;
  }
  return Term::pair(shift_to_fresh(t.left()), shift_to_fresh(t.right()));
}

}  // namespace

Flow::Flow(Term lhs, Term rhs) : lhs_(std::move(lhs)), rhs_(std::move(rhs)) {
  auto left_vars = variables_of(lhs_);
  auto right_vars = variables_of(rhs_);
  if (left_vars.size() != right_vars.size() ||
      !std::is_permutation(left_vars.begin(), left_vars.end(), right_vars.begin())) {
    throw std::invalid_argument("flow sides must have the same variables");
  }
  variable_count_ = static_cast<std::uint32_t>(left_vars.size());

  bool already_canonical = true;
  for (std::uint32_t i = 0; i < left_vars.size(); ++i) {
    if (left_vars[i] != vars::canonical(i + 1)) {
      already_canonical = false;
      break;
    }
  }
  if (!already_canonical) {
    // apply() is simultaneous, so a permutation of v<i> names cannot capture.
    Substitution renaming;
    for (std::uint32_t i = 0; i < left_vars.size(); ++i) {
      renaming.bind(left_vars[i], Term::variable(vars::canonical(i + 1)));
    }
    lhs_ = apply(lhs_, renaming);
    rhs_ = apply(rhs_, renaming);
  }
  rhs_linear_ = is_linear(rhs_);
}

Flow Flow::identity() {
  auto x = Term::variable(vars::canonical(1));
  return Flow(x, x);
}

std::optional<Flow> product(const Flow& l, const Flow& k) {
  // l uses v1…; k is moved into the fresh range.
  Term t = shift_to_fresh(k.lhs());
  Term w = shift_to_fresh(k.rhs());
  auto theta = mgu(l.rhs(), t);
  if (!theta) return std::nullopt;
  return Flow(apply(l.lhs(), *theta), apply(w, *theta));
}

Flow dagger(const Flow& f) { return Flow(f.rhs(), f.lhs()); }

std::optional<Term> apply(const Flow& f, const Term& t) {
  if (!t.closed()) throw std::invalid_argument("flow action needs a closed term");
  std::optional<Substitution> theta =
      f.rhs_linear() ? match_linear_closed_unchecked(f.rhs(), t) : mgu(f.rhs(), t);
  if (!theta) return std::nullopt;
  return apply(f.lhs(), *theta);
}

Flow tensor(const Flow& l, const Flow& k) {
  Term t = shift_to_fresh(k.lhs());
  Term w = shift_to_fresh(k.rhs());
  return Flow(Term::pair(l.lhs(), std::move(t)), Term::pair(l.rhs(), std::move(w)));
}

}  // namespace unialg
