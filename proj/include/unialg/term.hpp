#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "unialg/symbol.hpp"

namespace unialg {

enum class TermKind : std::uint8_t { Variable, Constant, Pair };

/// Immutable first-order term over variables, constants and the binary
/// symbol `•`. Subterms are shared; copies are cheap.
///
/// Each node caches its hash, size and closedness, so equality on unequal
/// terms usually fails on the hash and `closed()` is O(1).
class Term {
 public:
  static Term variable(VarId id);
  static Term constant(SymbolId id);
  static Term pair(Term left, Term right);

  TermKind kind() const noexcept;
  bool is_variable() const noexcept { return kind() == TermKind::Variable; }
  bool is_constant() const noexcept { return kind() == TermKind::Constant; }
  bool is_pair() const noexcept { return kind() == TermKind::Pair; }

  /// Variable id or constant symbol; meaningless for pairs.
  std::uint32_t id() const noexcept;
  const Term& left() const noexcept;
  const Term& right() const noexcept;

  /// Number of symbol occurrences.
  std::size_t size() const noexcept;
  bool closed() const noexcept;
  std::size_t hash() const noexcept;

  bool same_node(const Term& other) const noexcept { return node_ == other.node_; }

  friend bool operator==(const Term& a, const Term& b) noexcept;
  /// Structural total order (by kind, then id, then children).
  friend std::strong_ordering operator<=>(const Term& a, const Term& b) noexcept;

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Term::Node {
  TermKind kind;
  bool closed;
  std::uint32_t id;
  std::size_t size;
  std::size_t hash;
  // Empty handles for leaves.
  Term left;
  Term right;
};

inline TermKind Term::kind() const noexcept { return node_->kind; }
inline std::uint32_t Term::id() const noexcept { return node_->id; }
inline const Term& Term::left() const noexcept { return node_->left; }
inline const Term& Term::right() const noexcept { return node_->right; }
inline std::size_t Term::size() const noexcept { return node_->size; }
inline bool Term::closed() const noexcept { return node_->closed; }
inline std::size_t Term::hash() const noexcept { return node_->hash; }

/// Right-associated chain t1 • (t2 • (… • tn)). Requires a non-empty span.
Term chain(std::span<const Term> parts);
Term chain(std::initializer_list<Term> parts);

/// Distinct variables in order of first occurrence (left-to-right preorder).
std::vector<VarId> variables_of(const Term& t);
bool is_linear(const Term& t);
bool occurs(VarId v, const Term& t);
/// max(floor, largest variable id occurring in t).
VarId max_variable(const Term& t, VarId floor);

struct TermHash {
  std::size_t operator()(const Term& t) const noexcept { return t.hash(); }
};

}  // namespace unialg

template <>
struct std::hash<unialg::Term> {
  std::size_t operator()(const unialg::Term& t) const noexcept { return t.hash(); }
};
