#include "unialg/word.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace unialg {

Alphabet::Alphabet(std::span<const SymbolId> letters) : symbols_{reserved::kStar} {
  for (auto c : letters) {
    if (c == reserved::kLeft || c == reserved::kRight) {
      throw std::invalid_argument("`l` and `r` are reserved and cannot be letters");
    }
    if (!contains(c)) symbols_.push_back(c);
  }
}

bool Alphabet::contains(SymbolId c) const noexcept { return index_of(c).has_value(); }

std::optional<std::size_t> Alphabet::index_of(SymbolId c) const noexcept {
  auto it = std::find(symbols_.begin(), symbols_.end(), c);
  if (it == symbols_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - symbols_.begin());
}

Word::Word(Alphabet alphabet, std::vector<SymbolId> letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
  for (auto c : letters_) {
    if (c == reserved::kStar) throw std::invalid_argument("`star` is the implicit marker, not a letter");
    if (!alphabet_.contains(c)) throw std::invalid_argument("letter `" + constant_name(c) + "` is not in the alphabet");
  }
}

PositionTerms::PositionTerms(std::vector<Term> terms) : terms_(std::move(terms)) {
  std::unordered_set<Term> seen;
  for (const auto& t : terms_) {
    if (!t.closed()) throw std::invalid_argument("position terms must be closed");
    if (!seen.insert(t).second) throw std::invalid_argument("position terms must be pairwise distinct");
  }
}

PositionTerms default_positions(std::size_t n) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i <= n; ++i) terms.push_back(Term::constant(intern_constant("p" + std::to_string(i))));
  return PositionTerms(std::move(terms));
}

PositionTerms nested_positions(std::size_t n) {
  const auto succ = Term::constant(intern_constant("s"));
  std::vector<Term> terms{Term::constant(intern_constant("z"))};
  for (std::size_t i = 1; i <= n; ++i) terms.push_back(Term::pair(succ, terms.back()));
  return PositionTerms(std::move(terms));
}

PositionTerms shuffled_positions(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> order(n + 1);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Term> terms;
  for (auto k : order) terms.push_back(Term::constant(intern_constant("q" + std::to_string(k))));
  return PositionTerms(std::move(terms));
}

Wiring encode_cycle(std::span<const SymbolId> symbols, std::span<const Term> positions) {
  if (symbols.empty()) throw std::invalid_argument("a cycle has at least one symbol");
  if (symbols.size() != positions.size()) throw std::invalid_argument("need one position term per symbol");
  const auto x = Term::variable(vars::canonical(1));
  const auto y = Term::variable(vars::canonical(2));
  const auto left = Term::constant(reserved::kLeft);
  const auto right = Term::constant(reserved::kRight);
  const auto cell = [&](std::size_t i, const Term& dir) {
    return chain({x, Term::constant(symbols[i]), dir, Term::pair(positions[i], y)});
  };
  Wiring out;
  const auto count = symbols.size();
  for (std::size_t i = 0; i < count; ++i) {
    out = out + exchange(cell(i, right), cell((i + 1) % count, left));
  }
  return out;
}

Wiring encode_word(const Word& w, const PositionTerms& pos) {
  if (pos.size() != w.length() + 1) {
    throw std::invalid_argument("word of length " + std::to_string(w.length()) + " needs " +
                                std::to_string(w.length() + 1) + " position terms, got " + std::to_string(pos.size()));
  }
  std::vector<SymbolId> cycle{reserved::kStar};
  cycle.insert(cycle.end(), w.letters().begin(), w.letters().end());
  return encode_cycle(cycle, pos.terms());
}

}  // namespace unialg
