#pragma once

#include <random>
#include <string>
#include <vector>

#include "unialg/nilpotency.hpp"
#include "unialg/observation.hpp"
#include "unialg/pointer_machine.hpp"
#include "unialg/unify.hpp"
#include "unialg/wiring.hpp"

namespace unialg::testing {

inline Term var(const std::string& name) { return Term::variable(intern_variable(name)); }
inline Term cst(const std::string& name) { return Term::constant(intern_constant(name)); }

/// Random terms over a small signature. Depth counts pair nesting.
class TermGen {
 public:
  explicit TermGen(std::uint64_t seed, std::vector<std::string> constants = {"a", "b", "c"},
                   std::vector<std::string> variables = {"x", "y", "z"})
      : rng_(seed) {
    for (const auto& c : constants) constants_.push_back(cst(c));
    for (const auto& v : variables) variables_.push_back(var(v));
  }

  std::mt19937_64& rng() { return rng_; }

  Term term(int depth, bool allow_variables = true) {
    std::uniform_int_distribution<int> pick(0, 9);
    if (depth > 0 && pick(rng_) < 5) return Term::pair(term(depth - 1, allow_variables), term(depth - 1, allow_variables));
    if (allow_variables && !variables_.empty() && pick(rng_) < 5) return pick_from(variables_);
    return pick_from(constants_);
  }

  Term closed(int depth) { return term(depth, false); }

  /// Linear term: every variable leaf gets a new name.
  Term linear(int depth) {
    int counter = 0;
    return linear_rec(depth, counter);
  }

  /// A flow with equal variable sets, built by reshuffling a term's variables into a second shape.
  Flow flow(int depth) {
    Term lhs = term(depth);
    auto vs = variables_of(lhs);
    Term rhs = term(depth, false);
    for (auto v : vs) {
      // graft the variable somewhere so both sides share the variable set
      rhs = coin() ? Term::pair(Term::variable(v), rhs) : Term::pair(rhs, Term::variable(v));
    }
    return Flow(lhs, rhs);
  }

  Wiring wiring(int flows, int depth, bool concrete = false) {
    Wiring w;
    std::uniform_int_distribution<int> count(0, flows);
    std::uniform_int_distribution<int> coef(-3, 3);
    const int k = count(rng_);
    for (int i = 0; i < k; ++i) {
      Coefficient c = 1;
      if (!concrete) {
        c = Coefficient(Rational(coef(rng_)), Rational(coef(rng_) % 2));
        if (c.is_zero()) c = 1;
      }
      w.add(flow(depth), c);
    }
    return w;
  }

  Substitution substitution(int depth) {
    Substitution theta;
    for (const auto& v : variables_) {
      if (coin()) theta.bind(v.id(), term(depth));
    }
    return theta;
  }

  bool coin() { return std::bernoulli_distribution(0.5)(rng_); }

 private:
  Term pick_from(const std::vector<Term>& from) {
    return from[std::uniform_int_distribution<std::size_t>(0, from.size() - 1)(rng_)];
  }
  Term linear_rec(int depth, int& counter) {
    std::uniform_int_distribution<int> pick(0, 9);
    if (depth > 0 && pick(rng_) < 5) {
      Term l = linear_rec(depth - 1, counter);
      return Term::pair(l, linear_rec(depth - 1, counter));
    }
    if (pick(rng_) < 5) return var("lin" + std::to_string(counter++));
    return pick_from(constants_);
  }

  std::mt19937_64 rng_;
  std::vector<Term> constants_;
  std::vector<Term> variables_;
};

inline Permutation random_permutation(std::uint32_t n, std::mt19937_64& rng) {
  std::vector<std::uint32_t> images(n);
  for (std::uint32_t i = 0; i < n; ++i) images[i] = i + 1;
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(images);
}

/// Random observation over `sigma`: up to `rules` flows with state terms
/// drawn from `states` and permutation arities in 1..max_arity.
inline Wiring random_observation_wiring(std::mt19937_64& rng, const std::vector<Term>& states, const Alphabet& sigma,
                                        std::size_t rules, std::uint32_t max_arity) {
  std::uniform_int_distribution<std::size_t> state(0, states.size() - 1);
  std::uniform_int_distribution<std::size_t> letter(0, sigma.size() - 1);
  std::uniform_int_distribution<std::uint32_t> arity(1, max_arity);
  std::bernoulli_distribution coin(0.5);
  Wiring w;
  std::bernoulli_distribution keep_letter(0.75);
  for (std::size_t i = 0; i < rules; ++i) {
    // A written letter that differs from the one read kills the run at the
    // next move, so mostly keep it to give cycles a chance.
    const SymbolId read = sigma.symbols()[letter(rng)];
    const SymbolId written = keep_letter(rng) ? read : sigma.symbols()[letter(rng)];
    ObservationRule r{states[state(rng)],
                      written,
                      coin(rng) ? Direction::Left : Direction::Right,
                      states[state(rng)],
                      read,
                      coin(rng) ? Direction::Left : Direction::Right,
                      random_permutation(arity(rng), rng)};
    w.add(observation_flow(r), 1);
  }
  // A flow may repeat; keep the wiring concrete.
  Wiring concrete;
  for (const auto& [f, c] : w) concrete.add(f, 1);
  return concrete;
}

inline Word random_word(std::mt19937_64& rng, const Alphabet& sigma, std::size_t length) {
  std::vector<SymbolId> letters;
  std::uniform_int_distribution<std::size_t> pick(1, sigma.size() - 1);
  for (std::size_t i = 0; i < length; ++i) letters.push_back(sigma.symbols()[pick(rng)]);
  return Word(sigma, letters);
}

}  // namespace unialg::testing
