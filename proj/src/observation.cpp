#include "unialg/observation.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

namespace unialg {

std::optional<Direction> direction_of(SymbolId c) {
  if (c == reserved::kLeft) return Direction::Left;
  if (c == reserved::kRight) return Direction::Right;
  return std::nullopt;
}

Flow observation_flow(const ObservationRule& rule) {
  const auto n = rule.permutation.arity();
  std::vector<Term> lhs{rule.target_state, Term::constant(rule.target_letter),
                        Term::constant(symbol_of(rule.target_direction))};
  std::vector<Term> rhs{rule.source_state, Term::constant(rule.source_letter),
                        Term::constant(symbol_of(rule.source_direction))};
  for (std::uint32_t i = 1; i <= n; ++i) {
    lhs.push_back(Term::variable(vars::canonical(i)));
    rhs.push_back(Term::variable(vars::canonical(rule.permutation(i))));
  }
  const auto tail = Term::variable(vars::canonical(n + 1));
  lhs.push_back(tail);
  rhs.push_back(tail);
  return Flow(chain(lhs), chain(rhs));
}

namespace {

struct Side {
  Term state;
  SymbolId letter;
  Direction direction;
  std::vector<VarId> spine;
  VarId tail;
};

Side decompose(const Term& t, const Alphabet& sigma, const char* which) {
  auto fail = [&](const std::string& why) -> ObservationError {
    return ObservationError(std::string(which) + " side is not state•letter•direction•(x1•…•xn•y): " + why);
  };
  if (!t.is_pair() || !t.right().is_pair() || !t.right().right().is_pair()) throw fail("too shallow");
  const Term& state = t.left();
  const Term& letter = t.right().left();
  const Term& dir = t.right().right().left();
  if (!state.closed()) throw fail("state term is not closed");
  if (!letter.is_constant()) throw fail("letter is not a constant");
  if (!sigma.contains(letter.id())) throw fail("letter `" + constant_name(letter.id()) + "` is outside the alphabet");
  auto direction = dir.is_constant() ? direction_of(dir.id()) : std::nullopt;
  if (!direction) throw fail("direction must be `l` or `r`");

  std::vector<VarId> spine;
  const Term* rest = &t.right().right().right();
  while (rest->is_pair()) {
    if (!rest->left().is_variable()) throw fail("pointer slots must be variables");
    spine.push_back(rest->left().id());
    rest = &rest->right();
  }
  if (!rest->is_variable()) throw fail("pointer tail must be a variable");
  std::vector<VarId> all = spine;
  all.push_back(rest->id());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) throw fail("pointer variables repeat");
  return Side{state, letter.id(), *direction, std::move(spine), rest->id()};
}

/// Structural order comparing symbols by name, so that it does not depend on
/// the order in which constants were interned.
struct NameOrder {
  bool operator()(const Term& a, const Term& b) const { return compare(a, b) < 0; }

  static int compare(const Term& a, const Term& b) {
    if (a.same_node(b)) return 0;
    if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
    switch (a.kind()) {
      case TermKind::Constant:
        return constant_name(a.id()).compare(constant_name(b.id()));
      case TermKind::Variable:
        return variable_name(a.id()).compare(variable_name(b.id()));
      case TermKind::Pair:
        if (int c = compare(a.left(), b.left()); c != 0) return c;
        return compare(a.right(), b.right());
    }
    return 0;
  }
};

}  // namespace

Observation validate_observation(const Wiring& f, const Alphabet& sigma) {
  Observation obs;
  obs.wiring_ = f;
  obs.alphabet_ = sigma;
  std::set<Term, NameOrder> states;
  std::uint32_t arity = 1;
  for (const auto& [flow, c] : f) {
    if (!c.is_one()) throw ObservationError("observation coefficients must all be 1, found " + to_string(c));
    Side out = decompose(flow.lhs(), sigma, "left");
    Side in = decompose(flow.rhs(), sigma, "right");
    if (out.tail != in.tail || out.spine.size() != in.spine.size()) {
      throw ObservationError("pointer parts of a flow are not a permutation representation");
    }
    std::vector<std::uint32_t> images;
    images.reserve(in.spine.size());
    for (VarId v : in.spine) {
      auto it = std::find(out.spine.begin(), out.spine.end(), v);
      if (it == out.spine.end()) throw ObservationError("pointer parts of a flow are not a permutation representation");
      images.push_back(static_cast<std::uint32_t>(it - out.spine.begin()) + 1);
    }
    Permutation sigma_perm(std::move(images));
    arity = std::max(arity, sigma_perm.arity());
    states.insert(out.state);
    states.insert(in.state);
    obs.rules_.push_back(ObservationRule{out.state, out.letter, out.direction, in.state, in.letter, in.direction,
                                         std::move(sigma_perm)});
  }
  obs.states_.assign(states.begin(), states.end());
  obs.arity_ = arity;
  obs.isometric_ = is_isometric(f);
  return obs;
}

ComputationSpace::ComputationSpace(std::vector<Term> states, Alphabet alphabet, std::uint32_t arity,
                                   PositionTerms positions)
    : states_(std::move(states)), alphabet_(std::move(alphabet)), arity_(arity), positions_(std::move(positions)) {
  for (std::size_t i = 0; i < states_.size(); ++i) {
    if (!states_[i].closed()) throw std::invalid_argument("state terms must be closed");
    if (!state_index_.emplace(states_[i], i).second) throw std::invalid_argument("state terms must be distinct");
  }
  for (std::size_t i = 0; i < positions_.size(); ++i) position_index_.emplace(positions_[i], i);
  for (auto c : alphabet_.symbols()) letter_terms_.push_back(Term::constant(c));

  constexpr auto kMax = std::numeric_limits<std::size_t>::max();
  auto checked_mul = [](std::size_t a, std::size_t b) {
    if (a != 0 && b > kMax / a) throw std::overflow_error("computation space too large");
    return a * b;
  };
  std::size_t size = checked_mul(checked_mul(states_.size(), alphabet_.size()), 2);
  for (std::uint32_t i = 0; i < arity_; ++i) size = checked_mul(size, positions_.size());
  size_ = size;
}

Term ComputationSpace::term(std::size_t index) const {
  if (index >= size_) throw std::out_of_range("basis index out of range");
  if (!materialized_.empty()) return materialized_[index];
  const auto base = positions_.size();
  Term acc = star_term_;
  for (std::uint32_t k = arity_; k > 0; --k) {
    acc = Term::pair(positions_[index % base], std::move(acc));
    index /= base;
  }
  acc = Term::pair(direction_terms_[index % 2], std::move(acc));
  index /= 2;
  acc = Term::pair(letter_terms_[index % alphabet_.size()], std::move(acc));
  index /= alphabet_.size();
  return Term::pair(states_[index], std::move(acc));
}

std::optional<std::size_t> ComputationSpace::index_of(const Term& t) const {
  if (!t.closed() || !t.is_pair() || !t.right().is_pair() || !t.right().right().is_pair()) return std::nullopt;
  auto s = state_index_.find(t.left());
  if (s == state_index_.end()) return std::nullopt;
  const Term& letter = t.right().left();
  if (!letter.is_constant()) return std::nullopt;
  auto c = alphabet_.index_of(letter.id());
  if (!c) return std::nullopt;
  const Term& dir = t.right().right().left();
  auto d = dir.is_constant() ? direction_of(dir.id()) : std::nullopt;
  if (!d) return std::nullopt;

  std::size_t index = (s->second * alphabet_.size() + *c) * 2 + static_cast<std::size_t>(*d);
  const Term* rest = &t.right().right().right();
  for (std::uint32_t k = 0; k < arity_; ++k) {
    if (!rest->is_pair()) return std::nullopt;
    auto a = position_index_.find(rest->left());
    if (a == position_index_.end()) return std::nullopt;
    index = index * positions_.size() + a->second;
    rest = &rest->right();
  }
  if (!rest->is_constant() || rest->id() != reserved::kStar) return std::nullopt;
  return index;
}

std::vector<Term> ComputationSpace::basis() const {
  std::vector<Term> out;
  out.reserve(size_);
  for (std::size_t i = 0; i < size_; ++i) out.push_back(term(i));
  return out;
}

void ComputationSpace::materialize() {
  if (materialized_.empty()) materialized_ = basis();
}

ComputationSpace computation_space(const Observation& phi, const PositionTerms& pos) {
  return ComputationSpace(phi.states(), phi.alphabet(), phi.arity(), pos);
}

}  // namespace unialg
