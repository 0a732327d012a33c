#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "unialg/flow.hpp"

namespace unialg {

/// Permutation σ of {1, …, n} stored as its image sequence σ(1) … σ(n).
/// Permutations of different arities are different values.
class Permutation {
 public:
  /// Throws std::invalid_argument unless `images` is a bijection of {1..n}.
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::uint32_t n);
  /// Exchanges i and j (1-based) in S_n.
  static Permutation transposition(std::uint32_t n, std::uint32_t i, std::uint32_t j);
  /// All n! permutations of S_n in lexicographic order of image sequences.
  static std::vector<Permutation> all(std::uint32_t n);

  std::uint32_t arity() const noexcept { return static_cast<std::uint32_t>(images_.size()); }
  /// σ(i), 1-based.
  std::uint32_t operator()(std::uint32_t i) const { return images_.at(i - 1); }
  const std::vector<std::uint32_t>& images() const noexcept { return images_; }
  bool is_identity() const noexcept;

  Permutation inverse() const;
  /// σ₊k ∈ S_{n+k}, fixing n+1 … n+k.
  Permutation lifted(std::uint32_t k) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

/// (σ∘τ)(i) = σ(τ(i)); both must have the same arity.
Permutation operator*(const Permutation& sigma, const Permutation& tau);

/// [σ] = x1•…•xn•y ↼ x_σ(1)•…•x_σ(n)•y.
///
/// Applied to a1•…•an•tail it yields the term whose slot i holds a_σ⁻¹(i).
/// Arity 0 gives the identity flow.
Flow representation(const Permutation& sigma);

}  // namespace unialg
