#include <gtest/gtest.h>

#include <set>

#include "support/generators.hpp"
#include "unialg/syntax.hpp"

namespace unialg {
namespace {

Term T(const char* text) { return parse_term(text); }
SymbolId C(const char* name) { return intern_constant(name); }

constexpr auto L = Direction::Left;
constexpr auto R = Direction::Right;

PointerMachine looping_machine(const Alphabet& sigma) {
  std::vector<Transition> rules;
  for (auto c : sigma.symbols()) {
    for (auto d : {L, R}) rules.push_back({0, c, d, 0, c, d, Permutation::identity(1)});
  }
  return PointerMachine(1, {"s"}, sigma, rules);
}

TEST(PointerMachine, ValidatesAndNormalises) {
  Alphabet sigma{C("0")};
  EXPECT_THROW(PointerMachine(0, {"s"}, sigma, {}), std::invalid_argument);
  EXPECT_THROW(PointerMachine(1, {"s", "s"}, sigma, {}), std::invalid_argument);
  EXPECT_THROW(PointerMachine(1, {"s"}, sigma, {{0, C("0"), L, 1, C("0"), L, Permutation::identity(1)}}),
               std::invalid_argument);
  EXPECT_THROW(PointerMachine(1, {"s"}, sigma, {{0, C("9"), L, 0, C("0"), L, Permutation::identity(1)}}),
               std::invalid_argument);
  EXPECT_THROW(PointerMachine(1, {"s"}, sigma, {{0, C("0"), L, 0, C("0"), L, Permutation({2, 1})}}),
               std::invalid_argument);
  PointerMachine m(3, {"s"}, sigma,
                   {{0, C("0"), L, 0, C("0"), L, Permutation({2, 1})}, {0, C("0"), L, 0, C("0"), L, Permutation({2, 1, 3})}});
  ASSERT_EQ(m.transitions().size(), 1u);
  EXPECT_EQ(m.transitions()[0].permutation, Permutation({2, 1, 3}));
}

TEST(Step, EmptyMachineHasNoSuccessors) {
  Alphabet sigma{C("0")};
  PointerMachine m(1, {"s"}, sigma, {});
  Word w(sigma, {C("0"), C("0")});
  for (const auto& c : all_configurations(m, w.length())) EXPECT_TRUE(step(m, w, c).empty());
  EXPECT_TRUE(machine_accepts(m, w));
  EXPECT_TRUE(is_deterministic(m));
  EXPECT_TRUE(is_reversible(m));
  EXPECT_TRUE(compile(m).wiring().is_zero());
}

TEST(Step, LoopingMachineAlwaysHasExactlyOneSuccessor) {
  Alphabet sigma{C("0"), C("1")};
  PointerMachine m = looping_machine(sigma);
  Word w(sigma, {C("0"), C("1"), C("1")});
  for (const auto& c : all_configurations(m, w.length())) {
    auto next = step(m, w, c);
    if (w.at(c.positions[0]) != c.letter) {
      EXPECT_TRUE(next.empty());
      continue;
    }
    ASSERT_EQ(next.size(), 1u);
    EXPECT_EQ(next[0].direction, flip(c.direction));
    const std::size_t cells = w.length() + 1;
    const std::size_t expected = c.direction == R ? (c.positions[0] + 1) % cells : (c.positions[0] + cells - 1) % cells;
    EXPECT_EQ(next[0].positions[0], expected);
    EXPECT_EQ(next[0].letter, w.at(expected));
  }
  EXPECT_TRUE(is_reversible(m));
}

TEST(Step, LoopingMachineRejectsEveryWord) {
  Alphabet sigma{C("0"), C("1")};
  PointerMachine m = looping_machine(sigma);
  std::mt19937_64 rng(81);
  for (std::size_t n = 0; n < 6; ++n) EXPECT_FALSE(machine_accepts(m, testing::random_word(rng, sigma, n)));
}

TEST(Step, SwapSendsPointerIToSlotSigmaI) {
  Alphabet sigma{C("0"), C("1")};
  Word w(sigma, {C("0"), C("0"), C("0"), C("1"), C("0")});
  // From (3,5) moving right, the main pointer reaches 4 which holds `1`.
  PointerMachine m(2, {"s"}, sigma, {{0, C("1"), L, 0, C("1"), R, Permutation({2, 1})}});
  auto next = step(m, w, Configuration{0, C("0"), R, {3, 5}});
  ASSERT_EQ(next.size(), 1u);
  EXPECT_EQ(next[0].positions, (std::vector<std::uint32_t>{5, 4}));
  EXPECT_EQ(next[0].direction, R);
}

TEST(Step, TapeMismatchHaltsTheBranch) {
  Alphabet sigma{C("0"), C("1")};
  Word w(sigma, {C("0")});
  PointerMachine m = looping_machine(sigma);
  EXPECT_TRUE(step(m, w, Configuration{0, C("1"), R, {1}}).empty());
}

TEST(Determinism, SharedSourceIsNondeterministic) {
  Alphabet sigma{C("0")};
  PointerMachine m(1, {"s", "t"}, sigma,
                   {{0, C("0"), L, 0, C("0"), R, Permutation::identity(1)},
                    {0, C("0"), L, 1, C("0"), R, Permutation::identity(1)}});
  EXPECT_FALSE(is_deterministic(m));
  EXPECT_FALSE(is_reversible(m));
  PointerMachine merge(1, {"s", "t"}, sigma,
                       {{0, C("0"), L, 1, C("0"), R, Permutation::identity(1)},
                        {1, C("0"), L, 1, C("0"), R, Permutation::identity(1)}});
  EXPECT_TRUE(is_deterministic(merge));
  EXPECT_FALSE(is_reversible(merge));
}

TEST(Compile, SingleRule) {
  Alphabet sigma{C("0"), C("1")};
  PointerMachine m(1, {"s", "t"}, sigma, {{0, C("0"), L, 1, C("1"), R, Permutation::identity(1)}});
  Observation phi = compile(m);
  EXPECT_EQ(phi.wiring(), parse_wiring("(st_t . 1 . r . ?x1 . ?y <- st_s . 0 . l . ?x1 . ?y)"));
  EXPECT_EQ(phi.states(), (std::vector<Term>{T("st_s"), T("st_t")}));
  EXPECT_EQ(phi.arity(), 1u);
}

TEST(Compile, ArityIsThePointerCount) {
  Alphabet sigma{C("0")};
  PointerMachine m(3, {"s"}, sigma, {{0, C("0"), L, 0, C("0"), R, Permutation::identity(1)}});
  Observation phi = compile(m);
  EXPECT_EQ(phi.arity(), 3u);
  EXPECT_EQ(phi.rules()[0].permutation, Permutation::identity(3));
}

TEST(ConfigTerm, ShapeAndRoundTrip) {
  Alphabet sigma{C("0")};
  PointerMachine m(2, {"s", "t"}, sigma, {});
  PositionTerms pos = default_positions(2);
  EXPECT_EQ(config_term(m, Configuration{0, reserved::kStar, R, {0, 0}}, pos), T("st_s . star . r . p0 . p0 . star"));
  for (const auto& c : all_configurations(m, 2)) {
    EXPECT_EQ(term_config(m, config_term(m, c, pos), pos), c);
  }
  EXPECT_THROW(term_config(m, T("st_s . star . r . p0 . star"), pos), std::invalid_argument);
  EXPECT_THROW(term_config(m, T("st_u . star . r . p0 . p0 . star"), pos), std::invalid_argument);
}

TEST(ConfigTerm, IndexMatchesEnumerationOrder) {
  Alphabet sigma{C("0"), C("1")};
  PointerMachine m(2, {"s", "t"}, sigma, {});
  auto all = all_configurations(m, 3);
  EXPECT_EQ(all.size(), 2u * 3 * 2 * 16);
  for (std::size_t i = 0; i < all.size(); ++i) EXPECT_EQ(configuration_index(m, 3, all[i]), i);
}

PointerMachine random_machine(std::mt19937_64& rng, const Alphabet& sigma) {
  std::uniform_int_distribution<std::uint32_t> pointers(1, 2), states(1, 3), rules(0, 5);
  const auto n = pointers(rng);
  const auto s = states(rng);
  std::vector<std::string> names;
  for (std::uint32_t i = 0; i < s; ++i) names.push_back("q" + std::to_string(i));
  std::uniform_int_distribution<std::uint32_t> state(0, s - 1);
  std::uniform_int_distribution<std::size_t> letter(0, sigma.size() - 1);
  std::bernoulli_distribution coin(0.5);
  std::vector<Transition> ts;
  const auto k = rules(rng);
  for (std::uint32_t i = 0; i < k; ++i) {
    ts.push_back({state(rng), sigma.symbols()[letter(rng)], coin(rng) ? L : R, state(rng), sigma.symbols()[letter(rng)],
                  coin(rng) ? L : R, testing::random_permutation(n, rng)});
  }
  return PointerMachine(n, names, sigma, ts);
}

TEST(Simulation, OneStepIsOneApplication) {
  std::mt19937_64 rng(82);
  Alphabet sigma{C("0"), C("1")};
  for (int i = 0; i < 60; ++i) {
    PointerMachine m = random_machine(rng, sigma);
    Observation phi = compile(m);
    EXPECT_EQ(phi.isometric(), is_reversible(m));
    Word w = testing::random_word(rng, sigma, i % 4);
    PositionTerms pos = i % 2 ? nested_positions(w.length()) : default_positions(w.length());
    Wiring product = phi.wiring() * encode_word(w, pos);
    for (const auto& c : all_configurations(m, w.length())) {
      std::set<Term> expected;
      for (const auto& next : step(m, w, c)) expected.insert(config_term(m, next, pos));
      std::set<Term> got;
      for (const auto& [t, coef] : apply(product, config_term(m, c, pos))) {
        EXPECT_TRUE(coef.is_natural());
        got.insert(t);
      }
      ASSERT_EQ(got, expected) << render_machine(m);
      if (is_deterministic(m)) EXPECT_LE(expected.size(), 1u);
    }
    EXPECT_EQ(machine_accepts(m, w), accepts(phi, w, pos));
  }
}

}  // namespace
}  // namespace unialg
