#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "unialg/pointer_machine.hpp"
#include "unialg/unify.hpp"

namespace unialg {

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& message, std::size_t line, std::size_t column);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Terms: `?x` variables, `c` constants, infix `.` associating to the right,
// parentheses to override. `?x . c . c` is `?x . (c . c)`.
Term parse_term(std::string_view text);
std::string render(const Term& t);

// Flows: `lhs <- rhs`. Rendered with canonical variable names.
Flow parse_flow(std::string_view text);
std::string render(const Flow& f);

// Wirings: `coef * (lhs <- rhs) + …`, coefficient `a/b`, `a/b i` or
// `a/b + c/d i` (parenthesised when complex), omitted means 1; `0` is the
// zero wiring. A lone unparenthesised flow is accepted too. Rendering sorts
// summands by their text.
Wiring parse_wiring(std::string_view text);
std::string render(const Wiring& f);

Coefficient parse_coefficient(std::string_view text);

/// `{?x -> d, ?y -> c}`, bindings sorted by variable name.
std::string render(const Substitution& theta);
std::string render(const TermVector& v);

// Permutations: `[i1 i2 … in]` meaning σ(k) = i_k.
Permutation parse_permutation(std::string_view text);
std::string render(const Permutation& sigma);

// Word files: `alphabet c1 c2 …` then `word c c …` (star implicit).
Word parse_word_file(std::string_view text);
std::string render_word_file(const Word& w);

// Observation files: an `alphabet …` header line followed by a wiring.
struct ObservationFile {
  Alphabet alphabet;
  Wiring wiring;
};
ObservationFile parse_observation_file(std::string_view text);
std::string render_observation_file(const Alphabet& sigma, const Wiring& f);

// Machine files: `pointers N`, `states s1 …`, `alphabet c1 …`, then one
// `trans s c d -> s' c' d' [perm]` per rule; `[perm]` defaults to identity.
PointerMachine parse_machine(std::string_view text);
std::string render_machine(const PointerMachine& m);

// Position files: one closed term per line.
PositionTerms parse_positions(std::string_view text);
std::string render_positions(const PositionTerms& pos);

/// Lines starting with `#` are comments in every file format.
std::string read_file(const std::string& path);

}  // namespace unialg
