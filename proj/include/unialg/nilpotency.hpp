#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "unialg/observation.hpp"

namespace unialg {

/// Raised when φW sends a basis term outside the computation space, or
/// produces a coefficient that is not a positive integer. Either means the
/// observation validator or the word encoder is broken.
class SeparationViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Support graph of φW on a computation space: edge v → v' with
/// multiplicity m iff v' has coefficient m in (φW)(v).
class TransitionGraph {
 public:
  struct Edge {
    std::uint32_t target;
    std::uint64_t multiplicity;
  };

  explicit TransitionGraph(std::size_t nodes) : adjacency_(nodes) {}

  void add_edge(std::uint32_t from, Edge e) { adjacency_.at(from).push_back(e); }
  std::size_t node_count() const noexcept { return adjacency_.size(); }
  const std::vector<Edge>& edges(std::size_t v) const { return adjacency_.at(v); }
  std::size_t edge_count() const noexcept;
  std::size_t max_out_degree() const noexcept;

 private:
  std::vector<std::vector<Edge>> adjacency_;
};

TransitionGraph build_graph(const Observation& phi, const Wiring& word, const ComputationSpace& space);

/// build_graph for a precomputed step wiring φW.
TransitionGraph build_step_graph(const Wiring& step, const ComputationSpace& space);

/// Acyclicity by three-colour depth-first search. With nonnegative
/// coefficients this is nilpotency of φW restricted to the space.
bool is_nilpotent_on_space(const TransitionGraph& g);

struct OrbitStats {
  std::size_t longest_orbit = 0;  // steps before reaching 0, over accepting starts
  std::size_t bound = 0;          // D, the dimension
};

/// Deterministic run for isometric φ: from every basis term follow the
/// unique orbit for at most D steps; true iff every orbit reaches 0.
/// Throws std::invalid_argument when φ is not isometric.
bool isometric_run(const Observation& phi, const Wiring& word, const ComputationSpace& space,
                   OrbitStats* stats = nullptr);

/// isometric_run for a precomputed step φW. The caller guarantees that φ is
/// isometric; a superposition raises SeparationViolation.
bool isometric_step_run(const Wiring& step, const ComputationSpace& space, OrbitStats* stats = nullptr);

/// True iff F^k = 0 for some 1 ≤ k ≤ bound (F^1 = F), by repeated products.
bool symbolic_nilpotent(const Wiring& f, std::size_t bound);

/// Decides nilpotency of φW on a prepared space: isometric_run when φ is
/// isometric, graph acyclicity otherwise.
bool decide(const Observation& phi, const Wiring& word, const ComputationSpace& space);

/// W ∈ L(φ). Throws std::invalid_argument on a length mismatch or a word
/// letter outside Σ(φ).
bool accepts(const Observation& phi, const Word& w, const PositionTerms& pos);

}  // namespace unialg
