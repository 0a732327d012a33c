#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "unialg/term.hpp"

namespace unialg {

/// Finite map from variables to terms. Identity bindings are never stored,
/// so the key set is exactly the domain.
class Substitution {
 public:
  using Binding = std::pair<VarId, Term>;

  Substitution() = default;
  Substitution(std::initializer_list<Binding> bindings);

  /// Sets v ↦ t, replacing any previous binding; v ↦ v erases it.
  void bind(VarId v, Term t);
  const Term* find(VarId v) const noexcept;
  void clear() noexcept { bindings_.clear(); }
  bool contains(VarId v) const noexcept { return find(v) != nullptr; }

  std::size_t size() const noexcept { return bindings_.size(); }
  bool empty() const noexcept { return bindings_.empty(); }
  auto begin() const noexcept { return bindings_.begin(); }
  auto end() const noexcept { return bindings_.end(); }

  friend bool operator==(const Substitution&, const Substitution&) = default;

 private:
  std::vector<Binding> bindings_;  // sorted by variable
};

/// t.θ
Term apply(const Term& t, const Substitution& theta);

/// θ;ψ, so that t.(θ;ψ) = (t.θ).ψ
Substitution compose(const Substitution& theta, const Substitution& psi);

/// Most general unifier with occurs-check; nullopt when t and u do not unify.
/// Shared variables between t and u are the same variable.
std::optional<Substitution> mgu(const Term& t, const Term& u);

/// One-pass match of a linear pattern against a closed term. The result,
/// when present, coincides with mgu(pattern, t).
/// Throws std::invalid_argument if the pattern is not linear or t not closed.
std::optional<Substitution> match_linear_closed(const Term& pattern, const Term& t);

/// Same as match_linear_closed without checking the preconditions.
std::optional<Substitution> match_linear_closed_unchecked(const Term& pattern, const Term& t);

/// Unchecked match into a caller-owned substitution, which is cleared first.
/// On failure `out` holds a partial match.
bool match_linear_closed_into(const Term& pattern, const Term& t, Substitution& out);

/// True iff t and u are not unifiable even after renaming them apart.
bool disjoint(const Term& t, const Term& u);

/// Supplies variables above every id seen so far. Lives for one operation.
class FreshVariables {
 public:
  explicit FreshVariables(VarId floor = vars::kFreshBase) : next_(std::max(floor, vars::kFreshBase)) {}
  /// Ensures subsequent ids are above every variable of t.
  void avoid(const Term& t);
  VarId next();

 private:
  VarId next_;
};

/// Renames every variable of t to a fresh one drawn from `fresh`.
Term rename_apart(const Term& t, FreshVariables& fresh, Substitution* renaming = nullptr);

}  // namespace unialg
