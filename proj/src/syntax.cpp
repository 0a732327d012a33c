#include "unialg/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace unialg {

SyntaxError::SyntaxError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

/// Cursor over a piece of text that knows where the piece sits in its file.
class Reader {
 public:
  explicit Reader(std::string_view text, std::size_t first_line = 1) : text_(text), first_line_(first_line) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ == text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool consume(std::string_view token) {
    skip_ws();
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }
  void expect(std::string_view token) {
    if (!consume(token)) fail("expected `" + std::string(token) + "`");
  }
  void expect_end() {
    if (!at_end()) fail("unexpected trailing input");
  }
  std::string ident(const char* what) {
    skip_ws();
    auto start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    if (start == pos_) fail(std::string("expected ") + what);
    return std::string(text_.substr(start, pos_ - start));
  }
  std::string digits() {
    skip_ws();
    auto start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(text_.substr(start, pos_ - start));
  }
  /// True when the next token is the standalone letter `i`.
  bool at_imaginary_unit() {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == 'i' && (pos_ + 1 == text_.size() || !ident_char(text_[pos_ + 1]));
  }
  /// Next raw character (no whitespace skipping) can start an identifier.
  bool at_ident_char() const { return pos_ < text_.size() && ident_char(text_[pos_]); }
  bool at_digit() {
    skip_ws();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }
  /// Whether the parenthesised group starting at the cursor contains `<-`.
  bool group_holds_flow() {
    skip_ws();
    int depth = 0;
    for (auto i = pos_; i < text_.size(); ++i) {
      if (text_[i] == '(') ++depth;
      if (text_[i] == ')' && --depth == 0) return false;
      if (text_.substr(i, 2) == "<-") return true;
    }
    return false;
  }

  std::size_t mark() const { return pos_; }
  void reset(std::size_t mark) { pos_ = mark; }

  [[noreturn]] void fail(const std::string& message) const {
    std::size_t line = first_line_;
    std::size_t column = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw SyntaxError(message, line, column);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t first_line_;
};

Term read_term(Reader& r);

Term read_atom(Reader& r) {
  if (r.consume("?")) {
    if (!r.at_ident_char()) r.fail("expected a variable name right after `?`");
    return Term::variable(intern_variable(r.ident("a variable name")));
  }
  if (r.consume("(")) {
    Term t = read_term(r);
    r.expect(")");
    return t;
  }
  return Term::constant(intern_constant(r.ident("a term")));
}

Term read_term(Reader& r) {
  Term head = read_atom(r);
  if (r.consume(".")) return Term::pair(std::move(head), read_term(r));
  return head;
}

Flow read_flow(Reader& r) {
  Term lhs = read_term(r);
  r.expect("<-");
  Term rhs = read_term(r);
  try {
    return Flow(std::move(lhs), std::move(rhs));
  } catch (const std::invalid_argument& e) {
    r.fail(e.what());
  }
}

Rational read_rational(Reader& r) {
  using boost::multiprecision::cpp_int;
  cpp_int num(r.digits());
  cpp_int den = 1;
  if (r.consume("/")) {
    den = cpp_int(r.digits());
    if (den == 0) r.fail("zero denominator");
  }
  return Rational(num, den);
}

/// Optional rational followed by an optional `i`; at least one of them.
std::pair<Rational, bool> read_part(Reader& r) {
  Rational q = 1;
  if (r.at_digit()) {
    q = read_rational(r);
  } else if (!r.at_imaginary_unit()) {
    r.fail("expected a coefficient");
  }
  if (r.at_imaginary_unit()) {
    r.consume("i");
    return {q, true};
  }
  return {q, false};
}

Coefficient read_complex(Reader& r) {
  Rational sign = r.consume("-") ? -1 : 1;
  auto [q, imaginary] = read_part(r);
  if (imaginary) return Coefficient(0, sign * q);
  Coefficient c(sign * q, 0);
  // `a + b i`: only taken when an imaginary part really follows.
  auto mark = r.mark();
  Rational second_sign = 0;
  if (r.consume("+")) second_sign = 1;
  else if (r.consume("-")) second_sign = -1;
  if (second_sign != 0 && (r.at_digit() || r.at_imaginary_unit())) {
    auto [im, is_im] = read_part(r);
    if (is_im) return Coefficient(c.re(), second_sign * im);
  }
  r.reset(mark);
  return c;
}

Coefficient read_coefficient(Reader& r) {
  if (r.peek() == '(' && !r.group_holds_flow()) {
    r.expect("(");
    Coefficient c = read_complex(r);
    r.expect(")");
    return c;
  }
  return read_complex(r);
}

Wiring read_wiring(Reader& r) {
  Wiring out;
  auto mark = r.mark();
  if (r.consume("0") && r.at_end()) return out;
  r.reset(mark);
  Coefficient sign = 1;
  while (true) {
    Coefficient c = 1;
    const bool flow_next = r.peek() == '(' && r.group_holds_flow();
    if (!flow_next) {
      c = read_coefficient(r);
      r.expect("*");
    }
    r.expect("(");
    Flow f = read_flow(r);
    r.expect(")");
    out.add(f, sign * c);
    if (r.consume("+")) {
      sign = 1;
    } else if (r.consume("-")) {
      sign = -1;
    } else {
      break;
    }
  }
  r.expect_end();
  return out;
}

/// A wiring, or failing that a single bare flow. Reports the wiring error.
Wiring read_wiring_or_flow(std::string_view text, std::size_t first_line) {
  Reader r(text, first_line);
  try {
    return read_wiring(r);
  } catch (const SyntaxError&) {
    Reader bare(text, first_line);
    try {
      Flow f = read_flow(bare);
      bare.expect_end();
      return Wiring(f);
    } catch (const SyntaxError&) {
    }
    throw;
  }
}

std::vector<std::string> split_words(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

struct Line {
  std::size_t number;
  std::string text;
};

/// Non-blank, non-comment lines with their 1-based numbers.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string line(text.substr(start, end - start));
    auto first = line.find_first_not_of(" \t\r");
    if (first != std::string::npos && line[first] != '#') out.push_back({number, line});
    start = end + 1;
  }
  return out;
}

SymbolId letter_symbol(const std::string& name) { return name == "star" ? reserved::kStar : intern_constant(name); }

Alphabet alphabet_from(const std::vector<std::string>& words, const Line& line) {
  std::vector<SymbolId> letters;
  for (std::size_t i = 1; i < words.size(); ++i) {
    if (words[i] == "star") continue;
    letters.push_back(intern_constant(words[i]));
  }
  try {
    return Alphabet(letters);
  } catch (const std::invalid_argument& e) {
    throw SyntaxError(e.what(), line.number, 1);
  }
}

std::string letters_line(const char* keyword, const std::vector<SymbolId>& letters) {
  std::string out = keyword;
  for (auto c : letters) {
    if (c == reserved::kStar) continue;
    out += " " + constant_name(c);
  }
  return out;
}

Direction direction_token(const std::string& token, const Line& line) {
  if (token == "l") return Direction::Left;
  if (token == "r") return Direction::Right;
  throw SyntaxError("direction must be `l` or `r`, got `" + token + "`", line.number, 1);
}

}  // namespace

Term parse_term(std::string_view text) {
  Reader r(text);
  Term t = read_term(r);
  r.expect_end();
  return t;
}

std::string render(const Term& t) {
  switch (t.kind()) {
    case TermKind::Variable:
      return "?" + variable_name(t.id());
    case TermKind::Constant:
      return constant_name(t.id());
    case TermKind::Pair: {
      std::string left = render(t.left());
      if (t.left().is_pair()) left = "(" + left + ")";
      return left + " . " + render(t.right());
    }
  }
  return {};
}

Flow parse_flow(std::string_view text) {
  Reader r(text);
  Flow f = read_flow(r);
  r.expect_end();
  return f;
}

std::string render(const Flow& f) { return render(f.lhs()) + " <- " + render(f.rhs()); }

Wiring parse_wiring(std::string_view text) { return read_wiring_or_flow(text, 1); }

namespace {

std::string render_summands(const Wiring& f, std::string_view separator) {
  if (f.is_zero()) return "0";
  std::vector<std::pair<std::string, std::string>> summands;
  for (const auto& [flow, c] : f) {
    std::string coef;
    if (!c.is_one()) coef = c.is_real() ? to_string(c) + " * " : "(" + to_string(c) + ") * ";
    summands.emplace_back(render(flow), coef);
  }
  std::sort(summands.begin(), summands.end());
  std::string out;
  for (const auto& [flow, coef] : summands) {
    if (!out.empty()) out += separator;
    out += coef + "(" + flow + ")";
  }
  return out;
}

}  // namespace

std::string render(const Wiring& f) { return render_summands(f, " + "); }

Coefficient parse_coefficient(std::string_view text) {
  Reader r(text);
  Coefficient c = read_coefficient(r);
  r.expect_end();
  return c;
}

std::string render(const Substitution& theta) {
  std::vector<std::string> parts;
  for (const auto& [v, t] : theta) parts.push_back("?" + variable_name(v) + " -> " + render(t));
  std::sort(parts.begin(), parts.end());
  std::string out = "{";
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? ", " : "") + parts[i];
  return out + "}";
}

std::string render(const TermVector& v) {
  if (v.is_zero()) return "0";
  std::vector<std::string> parts;
  for (const auto& [t, c] : v) {
    if (c.is_one()) {
      parts.push_back(render(t));
    } else {
      parts.push_back((c.is_real() ? to_string(c) : "(" + to_string(c) + ")") + " * (" + render(t) + ")");
    }
  }
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " + " : "") + parts[i];
  return out;
}

Permutation parse_permutation(std::string_view text) {
  Reader r(text);
  r.expect("[");
  std::vector<std::uint32_t> images;
  while (r.at_digit()) {
    auto d = r.digits();
    if (d.size() > 9) r.fail("permutation entry too large");
    images.push_back(static_cast<std::uint32_t>(std::stoul(d)));
  }
  r.expect("]");
  r.expect_end();
  try {
    return Permutation(std::move(images));
  } catch (const std::invalid_argument& e) {
    r.fail(e.what());
  }
}

std::string render(const Permutation& sigma) {
  std::string out = "[";
  for (std::size_t i = 0; i < sigma.images().size(); ++i) {
    out += (i ? " " : "") + std::to_string(sigma.images()[i]);
  }
  return out + "]";
}

Word parse_word_file(std::string_view text) {
  std::optional<Alphabet> alphabet;
  std::optional<std::vector<SymbolId>> letters;
  Line word_line{0, {}};
  for (const auto& line : content_lines(text)) {
    auto words = split_words(line.text);
    if (words[0] == "alphabet") {
      alphabet = alphabet_from(words, line);
    } else if (words[0] == "word") {
      letters.emplace();
      word_line = line;
      for (std::size_t i = 1; i < words.size(); ++i) letters->push_back(intern_constant(words[i]));
    } else {
      throw SyntaxError("expected `alphabet` or `word`, got `" + words[0] + "`", line.number, 1);
    }
  }
  if (!alphabet) throw SyntaxError("missing `alphabet` line", 1, 1);
  if (!letters) throw SyntaxError("missing `word` line", 1, 1);
  try {
    return Word(*alphabet, *letters);
  } catch (const std::invalid_argument& e) {
    throw SyntaxError(e.what(), word_line.number, 1);
  }
}

std::string render_word_file(const Word& w) {
  return letters_line("alphabet", w.alphabet().symbols()) + "\n" + letters_line("word", w.letters()) + "\n";
}

ObservationFile parse_observation_file(std::string_view text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw SyntaxError("empty observation file", 1, 1);
  auto header = split_words(lines[0].text);
  if (header[0] != "alphabet") throw SyntaxError("observation files start with an `alphabet` line", lines[0].number, 1);
  Alphabet sigma = alphabet_from(header, lines[0]);
  std::string body;
  // Keep line numbers meaningful: pad with the newlines that were skipped.
  std::size_t first_body_line = lines.size() > 1 ? lines[1].number : lines[0].number + 1;
  std::size_t current = first_body_line;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    while (current < lines[i].number) {
      body += '\n';
      ++current;
    }
    body += lines[i].text;
  }
  if (lines.size() == 1) body = "0";
  Wiring f = read_wiring_or_flow(body, first_body_line);
  return {std::move(sigma), std::move(f)};
}

std::string render_observation_file(const Alphabet& sigma, const Wiring& f) {
  return letters_line("alphabet", sigma.symbols()) + "\n" + render_summands(f, "\n+ ") + "\n";
}

PointerMachine parse_machine(std::string_view text) {
  std::optional<std::uint32_t> pointers;
  std::optional<std::vector<std::string>> states;
  std::optional<Alphabet> alphabet;
  std::vector<Line> rules;
  for (const auto& line : content_lines(text)) {
    auto words = split_words(line.text);
    if (words[0] == "pointers") {
      if (words.size() != 2 || words[1].find_first_not_of("0123456789") != std::string::npos || words[1].size() > 6) {
        throw SyntaxError("`pointers` takes one small integer", line.number, 1);
      }
      pointers = static_cast<std::uint32_t>(std::stoul(words[1]));
    } else if (words[0] == "states") {
      states.emplace(words.begin() + 1, words.end());
    } else if (words[0] == "alphabet") {
      alphabet = alphabet_from(words, line);
    } else if (words[0] == "trans") {
      rules.push_back(line);
    } else {
      throw SyntaxError("unknown directive `" + words[0] + "`", line.number, 1);
    }
  }
  if (!pointers) throw SyntaxError("missing `pointers` line", 1, 1);
  if (!states) throw SyntaxError("missing `states` line", 1, 1);
  if (!alphabet) throw SyntaxError("missing `alphabet` line", 1, 1);

  std::map<std::string, std::uint32_t> state_index;
  for (std::uint32_t i = 0; i < states->size(); ++i) state_index.emplace((*states)[i], i);
  auto state_of = [&](const std::string& name, const Line& line) {
    auto it = state_index.find(name);
    if (it == state_index.end()) throw SyntaxError("unknown state `" + name + "`", line.number, 1);
    return it->second;
  };

  std::vector<Transition> transitions;
  for (const auto& line : rules) {
    auto words = split_words(line.text);
    if (words.size() < 8 || words[4] != "->") {
      throw SyntaxError("expected `trans s c d -> s' c' d' [perm]`", line.number, 1);
    }
    Permutation sigma = Permutation::identity(*pointers);
    if (words.size() > 8) {
      std::string perm;
      for (std::size_t i = 8; i < words.size(); ++i) perm += words[i] + " ";
      try {
        sigma = parse_permutation(perm);
      } catch (const SyntaxError& e) {
        throw SyntaxError(std::string("bad permutation: ") + e.what(), line.number, 1);
      }
    }
    transitions.push_back(Transition{state_of(words[1], line), letter_symbol(words[2]), direction_token(words[3], line),
                                     state_of(words[5], line), letter_symbol(words[6]), direction_token(words[7], line),
                                     std::move(sigma)});
  }
  try {
    return PointerMachine(*pointers, std::move(*states), std::move(*alphabet), std::move(transitions));
  } catch (const std::invalid_argument& e) {
    throw SyntaxError(e.what(), rules.empty() ? 1 : rules.front().number, 1);
  }
}

std::string render_machine(const PointerMachine& m) {
  std::string out = "pointers " + std::to_string(m.pointers()) + "\nstates";
  for (const auto& s : m.states()) out += " " + s;
  out += "\n" + letters_line("alphabet", m.alphabet().symbols()) + "\n";
  auto letter = [](SymbolId c) { return c == reserved::kStar ? std::string("star") : constant_name(c); };
  auto dir = [](Direction d) { return d == Direction::Left ? "l" : "r"; };
  for (const auto& t : m.transitions()) {
    out += "trans " + m.states()[t.source_state] + " " + letter(t.source_letter) + " " + dir(t.source_direction) +
           " -> " + m.states()[t.target_state] + " " + letter(t.target_letter) + " " + dir(t.target_direction) + " " +
           render(t.permutation) + "\n";
  }
  return out;
}

PositionTerms parse_positions(std::string_view text) {
  std::vector<Term> terms;
  for (const auto& line : content_lines(text)) {
    Reader r(line.text, line.number);
    Term t = read_term(r);
    r.expect_end();
    if (!t.closed()) throw SyntaxError("position terms must be closed", line.number, 1);
    terms.push_back(std::move(t));
  }
  try {
    return PositionTerms(std::move(terms));
  } catch (const std::invalid_argument& e) {
    throw SyntaxError(e.what(), 1, 1);
  }
}

std::string render_positions(const PositionTerms& pos) {
  std::string out;
  for (const auto& t : pos.terms()) out += render(t) + "\n";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open `" + path + "`");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace unialg
