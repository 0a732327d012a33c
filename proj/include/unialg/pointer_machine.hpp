#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "unialg/observation.hpp"

namespace unialg {

/// (s, c, d) → (s', c', d') × σ. States are indices into the machine's
/// state list.
struct Transition {
  std::uint32_t source_state;
  SymbolId source_letter;
  Direction source_direction;
  std::uint32_t target_state;
  SymbolId target_letter;
  Direction target_direction;
  Permutation permutation;

  friend bool operator==(const Transition&, const Transition&) = default;
  friend auto operator<=>(const Transition&, const Transition&) = default;
};

/// Read-only machine with N pointers on a cyclic tape. Only the first
/// (main) pointer moves; permutations reshuffle which pointer is main.
class PointerMachine {
 public:
  /// Deduplicates transitions and lifts permutations shorter than N.
  /// Throws std::invalid_argument on N = 0, an unknown state, a letter
  /// outside Σ, or a permutation longer than N.
  PointerMachine(std::uint32_t pointers, std::vector<std::string> states, Alphabet alphabet,
                 std::vector<Transition> transitions);

  std::uint32_t pointers() const noexcept { return pointers_; }
  const std::vector<std::string>& states() const noexcept { return states_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  /// Sorted, without duplicates.
  const std::vector<Transition>& transitions() const noexcept { return transitions_; }

 private:
  std::uint32_t pointers_;
  std::vector<std::string> states_;
  Alphabet alphabet_;
  std::vector<Transition> transitions_;
};

/// (state, letter under the main pointer, direction of the next move,
/// pointer positions in {0..n}).
struct Configuration {
  std::uint32_t state;
  SymbolId letter;
  Direction direction;
  std::vector<std::uint32_t> positions;

  friend bool operator==(const Configuration&, const Configuration&) = default;
  friend auto operator<=>(const Configuration&, const Configuration&) = default;
};

/// One MOVE then SWAP. MOVE shifts the main pointer one cell (right for
/// `r`, left for `l`, modulo n+1), reads the new letter and flips the
/// direction; SWAP fires every matching rule and sends pointer i to slot
/// σ(i), i.e. q_j = p'_σ⁻¹(j). The letter written by SWAP is not checked:
/// a configuration whose letter disagrees with the tape has no successor.
/// Result is sorted and duplicate-free.
std::vector<Configuration> step(const PointerMachine& m, const Word& w, const Configuration& c);

/// Every configuration of (M, n), in index order (see configuration_index).
std::vector<Configuration> all_configurations(const PointerMachine& m, std::size_t word_length);
std::size_t configuration_index(const PointerMachine& m, std::size_t word_length, const Configuration& c);

/// M accepts W iff no infinite transition sequence exists, from any
/// configuration. Decided by peeling sources off the configuration graph.
bool machine_accepts(const PointerMachine& m, const Word& w);

bool is_deterministic(const PointerMachine& m);
/// Deterministic and (s,c,d) ↦ (s',c',d') injective.
bool is_reversible(const PointerMachine& m);

/// Closed constant `st_<name>` standing for a state.
Term state_term(const PointerMachine& m, std::uint32_t state);

/// [M] = Σ_D ([s']↼[s]) ⊗̇ (c'↼c) ⊗̇ (d'↼d) ⊗̇ [σ], validated as an
/// observation over the machine's alphabet.
Observation compile(const PointerMachine& m);

/// [s]•c•d•(t_p1•…•t_pN•⋆)
Term config_term(const PointerMachine& m, const Configuration& c, const PositionTerms& pos);
/// Inverse of config_term. Throws std::invalid_argument on a term outside
/// the image.
Configuration term_config(const PointerMachine& m, const Term& t, const PositionTerms& pos);

}  // namespace unialg
