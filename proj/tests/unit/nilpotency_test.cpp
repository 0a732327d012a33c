#include <gtest/gtest.h>

#include "support/generators.hpp"
#include "unialg/syntax.hpp"

namespace unialg {
namespace {

Term T(const char* text) { return parse_term(text); }
SymbolId C(const char* name) { return intern_constant(name); }

TEST(TransitionGraph, AcyclicityExamples) {
  TransitionGraph empty(5);
  EXPECT_TRUE(is_nilpotent_on_space(empty));
  TransitionGraph loop(3);
  loop.add_edge(1, {1, 1});
  EXPECT_FALSE(is_nilpotent_on_space(loop));
  TransitionGraph dag(4);
  dag.add_edge(0, {1, 1});
  dag.add_edge(0, {2, 1});
  dag.add_edge(1, {3, 2});
  dag.add_edge(2, {3, 1});
  EXPECT_TRUE(is_nilpotent_on_space(dag));
  EXPECT_EQ(dag.edge_count(), 4u);
  EXPECT_EQ(dag.max_out_degree(), 2u);
  dag.add_edge(3, {0, 1});
  EXPECT_FALSE(is_nilpotent_on_space(dag));
}

TEST(SymbolicNilpotent, Examples) {
  EXPECT_TRUE(symbolic_nilpotent(Wiring{}, 1));
  for (std::size_t k = 1; k <= 4; ++k) EXPECT_FALSE(symbolic_nilpotent(Wiring::identity(), k));
  EXPECT_TRUE(symbolic_nilpotent(parse_wiring("(c <- d)"), 2));
  EXPECT_FALSE(symbolic_nilpotent(parse_wiring("(c <- d)"), 1));
  // a -> b -> c -> 0 needs three factors
  Wiring chain3 = parse_wiring("(b <- a) + (c <- b)");
  EXPECT_FALSE(symbolic_nilpotent(chain3, 2));
  EXPECT_TRUE(symbolic_nilpotent(chain3, 3));
}

TEST(Engine, ZeroObservationAcceptsEverything) {
  Alphabet sigma{C("0")};
  Observation zero = validate_observation(Wiring{}, sigma);
  for (std::size_t n = 0; n < 4; ++n) {
    Word w(sigma, std::vector<SymbolId>(n, C("0")));
    PositionTerms pos = default_positions(n);
    ComputationSpace space = computation_space(zero, pos);
    TransitionGraph g = build_graph(zero, encode_word(w, pos), space);
    EXPECT_EQ(g.edge_count(), 0u);
    EXPECT_TRUE(isometric_run(zero, encode_word(w, pos), space));
    EXPECT_TRUE(accepts(zero, w, pos));
  }
}

TEST(Engine, IsometricRunRefusesNonIsometricObservations) {
  Alphabet sigma{C("0")};
  Wiring f = parse_wiring("(s . 0 . r . ?a . ?y <- s . 0 . l . ?a . ?y) + (t . 0 . r . ?a . ?y <- s . 0 . l . ?a . ?y)");
  Observation phi = validate_observation(f, sigma);
  ASSERT_FALSE(phi.isometric());
  Word w(sigma, {C("0")});
  PositionTerms pos = default_positions(1);
  EXPECT_THROW(isometric_run(phi, encode_word(w, pos), computation_space(phi, pos)), std::invalid_argument);
}

TEST(Engine, RejectsWordLettersOutsideTheAlphabet) {
  Observation phi = validate_observation(Wiring{}, Alphabet{C("0")});
  Word w(Alphabet{C("0"), C("1")}, {C("1")});
  EXPECT_THROW(accepts(phi, w, default_positions(1)), std::invalid_argument);
}

TEST(Engine, ExplicitBounceIsACycle) {
  // Reads 0 moving right, turns back: bounces between p0 and p1 forever.
  Alphabet sigma{C("0")};
  Wiring f = parse_wiring(
      "(s . 0 . r . ?a . ?y <- s . 0 . l . ?a . ?y) + (s . star . r . ?a . ?y <- s . star . l . ?a . ?y)");
  Observation phi = validate_observation(f, sigma);
  ASSERT_TRUE(phi.isometric());
  Word w(sigma, {C("0")});
  PositionTerms pos = default_positions(1);
  Wiring rep = encode_word(w, pos);
  ComputationSpace space = computation_space(phi, pos);
  EXPECT_FALSE(is_nilpotent_on_space(build_graph(phi, rep, space)));
  EXPECT_FALSE(isometric_run(phi, rep, space));
  EXPECT_FALSE(symbolic_nilpotent(phi.wiring() * rep, space.size()));
  // The star rule alone bounces on the single cell of the empty word.
  EXPECT_FALSE(accepts(phi, Word(sigma, {}), default_positions(0)));
  // Without it every run dies after turning at the 0.
  Observation half = validate_observation(parse_wiring("(s . 0 . r . ?a . ?y <- s . 0 . l . ?a . ?y)"), sigma);
  EXPECT_TRUE(accepts(half, w, pos));
}

struct Instance {
  Observation phi;
  Word word;
};

std::vector<Instance> sample_instances(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  Alphabet sigma{C("0"), C("1")};
  std::vector<Term> states{T("s"), T("h . 1")};
  std::vector<Instance> out;
  for (int i = 0; i < count; ++i) {
    const std::size_t rules = 2 + i % 9;
    const std::uint32_t max_arity = 1 + i % 2;
    Observation phi = validate_observation(testing::random_observation_wiring(rng, states, sigma, rules, max_arity), sigma);
    out.push_back({phi, testing::random_word(rng, sigma, i % 4)});
  }
  return out;
}

TEST(Engine, GraphSearchAgreesWithSymbolicPowers) {
  int accepted = 0;
  for (const auto& [phi, w] : sample_instances(71, 50)) {
    PositionTerms pos = default_positions(w.length());
    Wiring rep = encode_word(w, pos);
    ComputationSpace space = computation_space(phi, pos);
    const bool graph = is_nilpotent_on_space(build_graph(phi, rep, space));
    accepted += graph;
    EXPECT_EQ(graph, symbolic_nilpotent(phi.wiring() * rep, std::max<std::size_t>(space.size(), 1)))
        << render(phi.wiring()) << " on " << render(rep);
  }
  EXPECT_GT(accepted, 5);
  EXPECT_LT(accepted, 45);
}

TEST(Engine, IsometricRunAgreesWithGraphAndRespectsTheBound) {
  int isometric = 0;
  for (const auto& [phi, w] : sample_instances(72, 200)) {
    if (!phi.isometric()) continue;
    ++isometric;
    PositionTerms pos = default_positions(w.length());
    Wiring rep = encode_word(w, pos);
    ComputationSpace space = computation_space(phi, pos);
    TransitionGraph g = build_graph(phi, rep, space);
    EXPECT_LE(g.max_out_degree(), 1u);
    OrbitStats stats;
    EXPECT_EQ(isometric_run(phi, rep, space, &stats), is_nilpotent_on_space(g));
    EXPECT_LE(stats.longest_orbit, stats.bound);
  }
  EXPECT_GT(isometric, 30);
}

TEST(Engine, VerdictDoesNotDependOnPositionTerms) {
  std::mt19937_64 rng(73);
  for (const auto& [phi, w] : sample_instances(74, 50)) {
    const std::size_t n = w.length();
    const bool fresh = accepts(phi, w, default_positions(n));
    EXPECT_EQ(accepts(phi, w, nested_positions(n)), fresh);
    EXPECT_EQ(accepts(phi, w, shuffled_positions(n, rng)), fresh);
  }
}

TEST(Engine, VerdictIsInvariantUnderRotation) {
  for (const auto& [phi, w] : sample_instances(75, 40)) {
    const std::size_t n = w.length();
    std::vector<SymbolId> symbols{reserved::kStar};
    symbols.insert(symbols.end(), w.letters().begin(), w.letters().end());
    std::vector<Term> terms = default_positions(n).terms();
    const bool expected = accepts(phi, w, default_positions(n));
    for (std::size_t k = 0; k <= n; ++k) {
      std::rotate(symbols.begin(), symbols.begin() + 1, symbols.end());
      std::rotate(terms.begin(), terms.begin() + 1, terms.end());
      PositionTerms pos(terms);
      EXPECT_EQ(decide(phi, encode_cycle(symbols, terms), computation_space(phi, pos)), expected);
    }
  }
}

}  // namespace
}  // namespace unialg
