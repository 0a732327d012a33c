#include "unialg/nilpotency.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "unialg/unify.hpp"

namespace unialg {

std::size_t TransitionGraph::edge_count() const noexcept {
  std::size_t total = 0;
  for (const auto& out : adjacency_) total += out.size();
  return total;
}

std::size_t TransitionGraph::max_out_degree() const noexcept {
  std::size_t best = 0;
  for (const auto& out : adjacency_) best = std::max(best, out.size());
  return best;
}

namespace {

std::uint32_t basis_index(const ComputationSpace& space, const Term& t) {
  auto index = space.index_of(t);
  if (!index) throw SeparationViolation("φW left the computation space");
  return static_cast<std::uint32_t>(*index);
}

std::uint64_t multiplicity(const Coefficient& c) {
  if (!c.is_natural() || c.is_zero()) throw SeparationViolation("φW produced a coefficient " + to_string(c));
  const auto& num = boost::multiprecision::numerator(c.re());
  if (num > std::numeric_limits<std::uint64_t>::max()) throw SeparationViolation("edge multiplicity overflow");
  return static_cast<std::uint64_t>(num);
}

/// The action of a fixed step wiring on basis terms, as weighted basis
/// indices. Reuses one substitution across all matches.
class StepAction {
 public:
  StepAction(const Wiring& step, const ComputationSpace& space) : space_(space) {
    flows_.reserve(step.size());
    for (const auto& [flow, c] : step) {
      const bool valid = c.is_natural() && !c.is_zero() &&
                         boost::multiprecision::numerator(c.re()) <= std::numeric_limits<std::uint64_t>::max();
      flows_.push_back({&flow, &c, valid ? multiplicity(c) : 0});
    }
  }

  /// Successors of basis element v, merged by target.
  const std::vector<TransitionGraph::Edge>& successors(std::size_t v) {
    out_.clear();
    const Term t = space_.term(v);
    for (const auto& [flow, c, weight] : flows_) {
      std::optional<Term> image;
      if (flow->rhs_linear()) {
        if (!match_linear_closed_into(flow->rhs(), t, scratch_)) continue;
        image = apply(flow->lhs(), scratch_);
      } else {
        image = apply(*flow, t);
        if (!image) continue;
      }
      const std::uint32_t target = basis_index(space_, *image);
      // Invalid coefficients only matter once their flow fires.
      const std::uint64_t m = weight != 0 ? weight : multiplicity(*c);
      auto same = std::find_if(out_.begin(), out_.end(), [&](const auto& e) { return e.target == target; });
      if (same == out_.end()) {
        out_.push_back({target, m});
      } else {
        if (same->multiplicity > std::numeric_limits<std::uint64_t>::max() - m) {
          throw SeparationViolation("edge multiplicity overflow");
        }
        same->multiplicity += m;
      }
    }
    return out_;
  }

 private:
  const ComputationSpace& space_;
  struct Entry {
    const Flow* flow;
    const Coefficient* coefficient;
    std::uint64_t weight;  // 0 when the coefficient is not a valid multiplicity
  };
  std::vector<Entry> flows_;
  Substitution scratch_;
  std::vector<TransitionGraph::Edge> out_;
};

}  // namespace

TransitionGraph build_step_graph(const Wiring& step, const ComputationSpace& space) {
  StepAction action(step, space);
  TransitionGraph g(space.size());
  for (std::size_t v = 0; v < space.size(); ++v) {
    for (const auto& e : action.successors(v)) g.add_edge(static_cast<std::uint32_t>(v), e);
  }
  return g;
}

TransitionGraph build_graph(const Observation& phi, const Wiring& word, const ComputationSpace& space) {
  return build_step_graph(phi.wiring() * word, space);
}

bool is_nilpotent_on_space(const TransitionGraph& g) {
  enum class Colour : std::uint8_t { White, Grey, Black };
  std::vector<Colour> colour(g.node_count(), Colour::White);
  // (node, next edge to visit)
  std::vector<std::pair<std::size_t, std::size_t>> stack;
  for (std::size_t root = 0; root < g.node_count(); ++root) {
    if (colour[root] != Colour::White) continue;
    colour[root] = Colour::Grey;
    stack.emplace_back(root, 0);
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      const auto& out = g.edges(v);
      if (next == out.size()) {
        colour[v] = Colour::Black;
        stack.pop_back();
        continue;
      }
      const auto w = out[next++].target;
      if (colour[w] == Colour::Grey) return false;
      if (colour[w] == Colour::White) {
        colour[w] = Colour::Grey;
        stack.emplace_back(w, 0);
      }
    }
  }
  return true;
}

bool isometric_run(const Observation& phi, const Wiring& word, const ComputationSpace& space, OrbitStats* stats) {
  if (!phi.isometric()) throw std::invalid_argument("isometric_run needs an isometric observation");
  return isometric_step_run(phi.wiring() * word, space, stats);
}

bool isometric_step_run(const Wiring& step, const ComputationSpace& space, OrbitStats* stats) {
  StepAction action(step, space);
  const std::size_t bound = space.size();
  // Successor cache: -1 unknown, -2 none (image is 0), else basis index.
  std::vector<std::int64_t> successor(space.size(), -1);
  auto next_of = [&](std::size_t v) -> std::int64_t {
    if (successor[v] != -1) return successor[v];
    const auto& image = action.successors(v);
    if (image.size() > 1) throw SeparationViolation("isometric φW produced a superposition");
    std::int64_t result = -2;
    if (!image.empty()) {
      if (image.front().multiplicity != 1) {
        throw SeparationViolation("isometric φW produced a coefficient " + std::to_string(image.front().multiplicity));
      }
      result = image.front().target;
    }
    successor[v] = result;
    return result;
  };

  if (stats) stats->bound = bound;
  for (std::size_t start = 0; start < space.size(); ++start) {
    std::size_t v = start;
    std::size_t steps = 0;
    bool died = false;
    while (steps <= bound) {
      auto next = next_of(v);
      if (next == -2) {
        died = true;
        break;
      }
      v = static_cast<std::size_t>(next);
      ++steps;
    }
    if (!died) return false;
    if (stats) stats->longest_orbit = std::max(stats->longest_orbit, steps);
  }
  return true;
}

bool symbolic_nilpotent(const Wiring& f, std::size_t bound) {
  Wiring power = f;
  for (std::size_t k = 1; k <= bound; ++k) {
    if (power.is_zero()) return true;
    if (k < bound) power = power * f;
  }
  return false;
}

bool decide(const Observation& phi, const Wiring& word, const ComputationSpace& space) {
  if (phi.isometric()) return isometric_run(phi, word, space);
  return is_nilpotent_on_space(build_graph(phi, word, space));
}

bool accepts(const Observation& phi, const Word& w, const PositionTerms& pos) {
  for (auto c : w.letters()) {
    if (!phi.alphabet().contains(c)) {
      throw std::invalid_argument("word letter `" + constant_name(c) + "` is outside the observation alphabet");
    }
  }
  const Wiring word = encode_word(w, pos);
  return decide(phi, word, computation_space(phi, pos));
}

}  // namespace unialg
