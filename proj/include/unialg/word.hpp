#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "unialg/wiring.hpp"

namespace unialg {

/// Finite set of constants Σ. Always contains `star`, which comes first;
/// the other letters keep their insertion order. `l` and `r` are refused.
class Alphabet {
 public:
  Alphabet() : symbols_{reserved::kStar} {}
  explicit Alphabet(std::span<const SymbolId> letters);
  Alphabet(std::initializer_list<SymbolId> letters)
      : Alphabet(std::span<const SymbolId>(letters.begin(), letters.size())) {}

  const std::vector<SymbolId>& symbols() const noexcept { return symbols_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  bool contains(SymbolId c) const noexcept;
  /// Position of c in symbols(), if present.
  std::optional<std::size_t> index_of(SymbolId c) const noexcept;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<SymbolId> symbols_;
};

/// Cyclic word ⋆ c1 … cn over Σ; letters exclude `star`.
class Word {
 public:
  /// Throws std::invalid_argument if a letter is `star` or outside Σ.
  Word(Alphabet alphabet, std::vector<SymbolId> letters);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<SymbolId>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  /// Letter at cyclic position p ∈ {0..n}; position 0 holds `star`.
  SymbolId at(std::size_t p) const { return p == 0 ? reserved::kStar : letters_.at(p - 1); }

 private:
  Alphabet alphabet_;
  std::vector<SymbolId> letters_;
};

/// Distinct closed terms t0 … tn naming the positions of a word.
class PositionTerms {
 public:
  /// Throws std::invalid_argument on an open or repeated term.
  explicit PositionTerms(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  const Term& operator[](std::size_t i) const { return terms_.at(i); }

 private:
  std::vector<Term> terms_;
};

/// Constants p0 … pn.
PositionTerms default_positions(std::size_t n);
/// Unary numerals z, s•z, s•s•z, … (structured, nested pairs).
PositionTerms nested_positions(std::size_t n);
/// Constants q0 … qn assigned to positions in a random order.
PositionTerms shuffled_positions(std::size_t n, std::mt19937_64& rng);

/// Representation of a cyclic symbol sequence s0 s1 … sn with positions
/// t0 … tn: Σ_i  x•s_i•r•(t_i•y) ⇌ x•s_{i+1}•l•(t_{i+1}•y), indices mod n+1.
/// For a single symbol this is the self-loop x•s0•r•(t0•y) ⇌ x•s0•l•(t0•y).
Wiring encode_cycle(std::span<const SymbolId> symbols, std::span<const Term> positions);

/// encode_cycle(⋆ c1 … cn, pos). Throws std::invalid_argument when
/// |pos| ≠ n + 1.
Wiring encode_word(const Word& w, const PositionTerms& pos);

}  // namespace unialg
