#pragma once

#include <compare>
#include <optional>

#include "unialg/term.hpp"

namespace unialg {

/// Oriented pair lhs ↼ rhs with Var(lhs) = Var(rhs), kept in canonical
/// renaming form: variables are v1, v2, … in order of first occurrence in a
/// preorder walk of lhs. Two flows are equal up to renaming iff they compare
/// equal.
class Flow {
 public:
  /// Throws std::invalid_argument when the variable sets differ.
  Flow(Term lhs, Term rhs);

  /// I = ?x ↼ ?x
  static Flow identity();

  const Term& lhs() const noexcept { return lhs_; }
  const Term& rhs() const noexcept { return rhs_; }
  bool rhs_linear() const noexcept { return rhs_linear_; }
  /// Number of distinct variables; they are v1 … v<count>.
  std::uint32_t variable_count() const noexcept { return variable_count_; }

  friend bool operator==(const Flow& a, const Flow& b) noexcept { return a.lhs_ == b.lhs_ && a.rhs_ == b.rhs_; }
  friend std::strong_ordering operator<=>(const Flow& a, const Flow& b) noexcept {
    if (auto c = a.lhs_ <=> b.lhs_; c != 0) return c;
    return a.rhs_ <=> b.rhs_;
  }

 private:
  Term lhs_;
  Term rhs_;
  std::uint32_t variable_count_ = 0;
  bool rhs_linear_ = true;
};

/// (u ↼ v)(t ↼ w) = u.θ ↼ w.θ with θ = mgu(v, t) after renaming apart;
/// nullopt when v and t do not unify.
std::optional<Flow> product(const Flow& l, const Flow& k);

Flow dagger(const Flow& f);

/// (u ↼ v)(t) = u.θ where v.θ = t. Throws std::invalid_argument unless t is closed.
std::optional<Term> apply(const Flow& f, const Term& t);

/// u • t ↼ v • w for l = u ↼ v, k = t ↼ w (representatives renamed apart).
Flow tensor(const Flow& l, const Flow& k);

}  // namespace unialg
