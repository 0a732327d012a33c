#pragma once

#include <cstdint>
#include <iterator>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "unialg/permutation.hpp"
#include "unialg/word.hpp"

namespace unialg {

enum class Direction : std::uint8_t { Left = 0, Right = 1 };

constexpr Direction flip(Direction d) { return d == Direction::Left ? Direction::Right : Direction::Left; }
constexpr SymbolId symbol_of(Direction d) { return d == Direction::Left ? reserved::kLeft : reserved::kRight; }
std::optional<Direction> direction_of(SymbolId c);

class ObservationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One flow (s'•c'•d'•π) ↼ (s•c•d•π') of an observation, read back as its
/// parts; π ↼ π' is the representation of `permutation`.
struct ObservationRule {
  Term target_state;
  SymbolId target_letter;
  Direction target_direction;
  Term source_state;
  SymbolId source_letter;
  Direction source_direction;
  Permutation permutation;
};

/// Builds s'•c'•d'•(x1•…•xn•y) ↼ s•c•d•(x_σ(1)•…•x_σ(n)•y).
Flow observation_flow(const ObservationRule& rule);

/// A validated concrete wiring of observation shape, with its minimal
/// state set S(φ) and pointer arity N(φ).
class Observation {
 public:
  const Wiring& wiring() const noexcept { return wiring_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  /// S(φ): occurring state terms, sorted structurally with constants and
  /// variables compared by name.
  const std::vector<Term>& states() const noexcept { return states_; }
  /// N(φ) ≥ 1.
  std::uint32_t arity() const noexcept { return arity_; }
  bool isometric() const noexcept { return isometric_; }
  /// One rule per flow, permutations at their written arity.
  const std::vector<ObservationRule>& rules() const noexcept { return rules_; }

 private:
  friend Observation validate_observation(const Wiring& f, const Alphabet& sigma);
  Wiring wiring_;
  Alphabet alphabet_;
  std::vector<Term> states_;
  std::uint32_t arity_ = 1;
  bool isometric_ = true;
  std::vector<ObservationRule> rules_;
};

/// Throws ObservationError when a flow is not of observation shape, a
/// coefficient differs from 1, or a letter lies outside Σ.
Observation validate_observation(const Wiring& f, const Alphabet& sigma);

/// Basis of Comp_φ(t0…tn): all s•c•d•(a1•…•aN•⋆), enumerated in
/// lexicographic order of (s, c, d, a1, …, aN) with s in states() order,
/// c in alphabet order, l before r and a_i in position order.
///
/// Terms are produced on demand; nothing is materialized unless asked.
class ComputationSpace {
 public:
  ComputationSpace(std::vector<Term> states, Alphabet alphabet, std::uint32_t arity, PositionTerms positions);

  std::size_t size() const noexcept { return size_; }
  std::uint32_t arity() const noexcept { return arity_; }
  const std::vector<Term>& states() const noexcept { return states_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const PositionTerms& positions() const noexcept { return positions_; }

  /// Basis term with the given index (< size()).
  Term term(std::size_t index) const;
  /// Inverse of term(); nullopt for terms outside the basis.
  std::optional<std::size_t> index_of(const Term& t) const;
  std::vector<Term> basis() const;

  /// Keeps every basis term in memory so that later term() calls are
  /// lookups. Worth it when one space serves many runs.
  void materialize();

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Term;
    using difference_type = std::ptrdiff_t;
    iterator(const ComputationSpace* space, std::size_t index) : space_(space), index_(index) {}
    Term operator*() const { return space_->term(index_); }
    iterator& operator++() {
      ++index_;
      return *this;
    }
    iterator operator++(int) {
      auto old = *this;
      ++index_;
      return old;
    }
    friend bool operator==(const iterator&, const iterator&) = default;

   private:
    const ComputationSpace* space_;
    std::size_t index_;
  };
  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, size_}; }

 private:
  std::vector<Term> states_;
  Alphabet alphabet_;
  std::uint32_t arity_;
  PositionTerms positions_;
  std::size_t size_;
  std::unordered_map<Term, std::size_t> state_index_;
  std::unordered_map<Term, std::size_t> position_index_;
  std::vector<Term> letter_terms_;
  std::vector<Term> materialized_;
  Term star_term_ = Term::constant(reserved::kStar);
  Term direction_terms_[2] = {Term::constant(reserved::kLeft), Term::constant(reserved::kRight)};
};

ComputationSpace computation_space(const Observation& phi, const PositionTerms& pos);

}  // namespace unialg
