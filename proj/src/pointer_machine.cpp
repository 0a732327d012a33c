#include "unialg/pointer_machine.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace unialg {

PointerMachine::PointerMachine(std::uint32_t pointers, std::vector<std::string> states, Alphabet alphabet,
                               std::vector<Transition> transitions)
    : pointers_(pointers), states_(std::move(states)), alphabet_(std::move(alphabet)) {
  if (pointers_ == 0) throw std::invalid_argument("a pointer machine needs at least one pointer");
  std::set<std::string> names(states_.begin(), states_.end());
  if (names.size() != states_.size()) throw std::invalid_argument("duplicate state name");
  for (auto& t : transitions) {
    if (t.source_state >= states_.size() || t.target_state >= states_.size()) {
      throw std::invalid_argument("transition refers to an unknown state");
    }
    if (!alphabet_.contains(t.source_letter) || !alphabet_.contains(t.target_letter)) {
      throw std::invalid_argument("transition letter outside the alphabet");
    }
    if (t.permutation.arity() > pointers_) throw std::invalid_argument("permutation acts on more than N pointers");
    if (t.permutation.arity() < pointers_) t.permutation = t.permutation.lifted(pointers_ - t.permutation.arity());
  }
  std::sort(transitions.begin(), transitions.end());
  transitions.erase(std::unique(transitions.begin(), transitions.end()), transitions.end());
  transitions_ = std::move(transitions);
}

namespace {

void check_word(const PointerMachine& m, const Word& w) {
  for (auto c : w.letters()) {
    if (!m.alphabet().contains(c)) throw std::invalid_argument("word letter outside the machine alphabet");
  }
}

std::size_t power(std::size_t base, std::uint32_t exp) {
  std::size_t out = 1;
  for (std::uint32_t i = 0; i < exp; ++i) out *= base;
  return out;
}

}  // namespace

std::vector<Configuration> step(const PointerMachine& m, const Word& w, const Configuration& c) {
  const std::size_t cells = w.length() + 1;
  if (c.positions.size() != m.pointers()) throw std::invalid_argument("configuration has the wrong number of pointers");
  const std::uint32_t p1 = c.positions[0];
  if (p1 >= cells || w.at(p1) != c.letter) return {};  // tape mismatch halts the branch

  // MOVE
  std::vector<std::uint32_t> moved = c.positions;
  moved[0] = static_cast<std::uint32_t>(c.direction == Direction::Right ? (p1 + 1) % cells : (p1 + cells - 1) % cells);
  const SymbolId read = w.at(moved[0]);
  const Direction turned = flip(c.direction);

  // SWAP
  std::vector<Configuration> out;
  for (const auto& t : m.transitions()) {
    if (t.source_state != c.state || t.source_letter != read || t.source_direction != turned) continue;
    std::vector<std::uint32_t> q(moved.size());
    for (std::uint32_t i = 1; i <= moved.size(); ++i) q[t.permutation(i) - 1] = moved[i - 1];
    out.push_back(Configuration{t.target_state, t.target_letter, t.target_direction, std::move(q)});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t configuration_index(const PointerMachine& m, std::size_t word_length, const Configuration& c) {
  const std::size_t cells = word_length + 1;
  auto letter = m.alphabet().index_of(c.letter);
  if (!letter || c.state >= m.states().size() || c.positions.size() != m.pointers()) {
    throw std::invalid_argument("configuration outside the machine's configuration set");
  }
  std::size_t index = (c.state * m.alphabet().size() + *letter) * 2 + static_cast<std::size_t>(c.direction);
  for (auto p : c.positions) {
    if (p >= cells) throw std::invalid_argument("pointer position outside the word");
    index = index * cells + p;
  }
  return index;
}

std::vector<Configuration> all_configurations(const PointerMachine& m, std::size_t word_length) {
  const std::size_t cells = word_length + 1;
  const std::size_t tails = power(cells, m.pointers());
  std::vector<Configuration> out;
  out.reserve(m.states().size() * m.alphabet().size() * 2 * tails);
  for (std::uint32_t s = 0; s < m.states().size(); ++s) {
    for (auto letter : m.alphabet().symbols()) {
      for (auto d : {Direction::Left, Direction::Right}) {
        for (std::size_t code = 0; code < tails; ++code) {
          std::vector<std::uint32_t> positions(m.pointers());
          std::size_t rest = code;
          for (std::uint32_t k = m.pointers(); k > 0; --k) {
            positions[k - 1] = static_cast<std::uint32_t>(rest % cells);
            rest /= cells;
          }
          out.push_back(Configuration{s, letter, d, std::move(positions)});
        }
      }
    }
  }
  return out;
}

bool machine_accepts(const PointerMachine& m, const Word& w) {
  check_word(m, w);
  const auto configs = all_configurations(m, w.length());
  std::vector<std::vector<std::size_t>> successors(configs.size());
  std::vector<std::size_t> in_degree(configs.size(), 0);
  for (std::size_t i = 0; i < configs.size(); ++i) {
    for (const auto& next : step(m, w, configs[i])) {
      auto j = configuration_index(m, w.length(), next);
      successors[i].push_back(j);
      ++in_degree[j];
    }
  }
  // Kahn: a cycle is exactly what survives repeated removal of sources.
  std::vector<std::size_t> sources;
  for (std::size_t i = 0; i < configs.size(); ++i) {
    if (in_degree[i] == 0) sources.push_back(i);
  }
  std::size_t removed = 0;
  while (!sources.empty()) {
    auto v = sources.back();
    sources.pop_back();
    ++removed;
    for (auto j : successors[v]) {
      if (--in_degree[j] == 0) sources.push_back(j);
    }
  }
  return removed == configs.size();
}

bool is_deterministic(const PointerMachine& m) {
  std::set<std::tuple<std::uint32_t, SymbolId, Direction>> sources;
  for (const auto& t : m.transitions()) {
    if (!sources.emplace(t.source_state, t.source_letter, t.source_direction).second) return false;
  }
  return true;
}

bool is_reversible(const PointerMachine& m) {
  if (!is_deterministic(m)) return false;
  std::set<std::tuple<std::uint32_t, SymbolId, Direction>> targets;
  for (const auto& t : m.transitions()) {
    if (!targets.emplace(t.target_state, t.target_letter, t.target_direction).second) return false;
  }
  return true;
}

Term state_term(const PointerMachine& m, std::uint32_t state) {
  return Term::constant(intern_constant("st_" + m.states().at(state)));
}

Observation compile(const PointerMachine& m) {
  std::vector<Term> states;
  for (std::uint32_t s = 0; s < m.states().size(); ++s) states.push_back(state_term(m, s));
  auto closed_flow = [](const Term& out, const Term& in) { return Flow(out, in); };
  Wiring sum;
  for (const auto& t : m.transitions()) {
    Flow state_part = closed_flow(states[t.target_state], states[t.source_state]);
    Flow letter_part = closed_flow(Term::constant(t.target_letter), Term::constant(t.source_letter));
    Flow direction_part = closed_flow(Term::constant(symbol_of(t.target_direction)),
                                      Term::constant(symbol_of(t.source_direction)));
    sum.add(tensor(state_part, tensor(letter_part, tensor(direction_part, representation(t.permutation)))), 1);
  }
  return validate_observation(sum, m.alphabet());
}

Term config_term(const PointerMachine& m, const Configuration& c, const PositionTerms& pos) {
  if (c.positions.size() != m.pointers()) throw std::invalid_argument("configuration has the wrong number of pointers");
  std::vector<Term> parts{state_term(m, c.state), Term::constant(c.letter), Term::constant(symbol_of(c.direction))};
  for (auto p : c.positions) parts.push_back(pos[p]);
  parts.push_back(Term::constant(reserved::kStar));
  return chain(parts);
}

Configuration term_config(const PointerMachine& m, const Term& t, const PositionTerms& pos) {
  auto fail = [] { return std::invalid_argument("term is not a configuration term"); };
  if (!t.is_pair() || !t.right().is_pair() || !t.right().right().is_pair()) throw fail();
  Configuration c{};
  bool found = false;
  for (std::uint32_t s = 0; s < m.states().size(); ++s) {
    if (state_term(m, s) == t.left()) {
      c.state = s;
      found = true;
      break;
    }
  }
  if (!found) throw fail();
  const Term& letter = t.right().left();
  if (!letter.is_constant() || !m.alphabet().contains(letter.id())) throw fail();
  c.letter = letter.id();
  const Term& dir = t.right().right().left();
  auto d = dir.is_constant() ? direction_of(dir.id()) : std::nullopt;
  if (!d) throw fail();
  c.direction = *d;
  const Term* rest = &t.right().right().right();
  for (std::uint32_t k = 0; k < m.pointers(); ++k) {
    if (!rest->is_pair()) throw fail();
    auto it = std::find(pos.terms().begin(), pos.terms().end(), rest->left());
    if (it == pos.terms().end()) throw fail();
    c.positions.push_back(static_cast<std::uint32_t>(it - pos.terms().begin()));
    rest = &rest->right();
  }
  if (!rest->is_constant() || rest->id() != reserved::kStar) throw fail();
  return c;
}

}  // namespace unialg
