#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "unialg/nilpotency.hpp"
#include "unialg/pointer_machine.hpp"
#include "unialg/syntax.hpp"

namespace {

using namespace unialg;

constexpr int kAccept = 0;
constexpr int kReject = 1;
constexpr int kError = 2;

/// Arguments of the form `@path` are read from that file.
std::string inline_or_file(const std::string& arg) {
  if (!arg.empty() && arg.front() == '@') return read_file(arg.substr(1));
  return arg;
}

PositionTerms choose_positions(const std::string& choice, std::size_t n) {
  if (choice == "fresh") return default_positions(n);
  if (choice == "nested") return nested_positions(n);
  if (choice.rfind("file:", 0) == 0) {
    PositionTerms pos = parse_positions(read_file(choice.substr(5)));
    if (pos.size() != n + 1) {
      throw std::invalid_argument("position file has " + std::to_string(pos.size()) + " terms, the word needs " +
                                  std::to_string(n + 1));
    }
    return pos;
  }
  throw std::invalid_argument("--positions must be fresh, nested or file:<path>");
}

const char* verdict(bool accepted) { return accepted ? "ACCEPT" : "REJECT"; }

int cmd_unify(const std::string& t_text, const std::string& u_text) {
  auto theta = mgu(parse_term(inline_or_file(t_text)), parse_term(inline_or_file(u_text)));
  if (!theta) {
    std::cout << "not unifiable\n";
    return kReject;
  }
  std::cout << render(*theta) << "\n";
  return kAccept;
}

int cmd_compose(const std::string& f_text, const std::string& g_text) {
  std::cout << render(parse_wiring(inline_or_file(f_text)) * parse_wiring(inline_or_file(g_text))) << "\n";
  return kAccept;
}

int cmd_apply(const std::string& f_text, const std::string& t_text) {
  Term t = parse_term(inline_or_file(t_text));
  if (!t.closed()) throw std::invalid_argument("apply needs a closed term");
  std::cout << render(apply(parse_wiring(inline_or_file(f_text)), t)) << "\n";
  return kAccept;
}

int cmd_dagger(const std::string& f_text) {
  std::cout << render(dagger(parse_wiring(inline_or_file(f_text)))) << "\n";
  return kAccept;
}

int cmd_isometric_check(const std::string& f_text) {
  Wiring f = parse_wiring(inline_or_file(f_text));
  const bool isometric = is_isometric(f);
  std::cout << "isometric: " << (isometric ? "true" : "false") << "\n";
  std::cout << "partial isometry: " << (is_partial_isometry(f) ? "true" : "false") << "\n";
  return isometric ? kAccept : kReject;
}

int cmd_encode_word(const std::string& path, const std::string& positions) {
  Word w = parse_word_file(read_file(path));
  std::cout << render(encode_word(w, choose_positions(positions, w.length()))) << "\n";
  return kAccept;
}

Observation load_observation(const std::string& path) {
  ObservationFile file = parse_observation_file(read_file(path));
  return validate_observation(file.wiring, file.alphabet);
}

int cmd_validate_observation(const std::string& path) {
  Observation phi = load_observation(path);
  std::cout << "N = " << phi.arity() << "\n";
  std::cout << "|S| = " << phi.states().size() << "\n";
  std::cout << "isometric = " << (phi.isometric() ? "true" : "false") << "\n";
  return kAccept;
}

void print_trace(const TransitionGraph& g, const ComputationSpace& space) {
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    for (const auto& e : g.edges(v)) {
      std::cout << render(space.term(v)) << "  =>  " << render(space.term(e.target));
      if (e.multiplicity != 1) std::cout << "  x" << e.multiplicity;
      std::cout << "\n";
    }
  }
}

int cmd_run_observation(const std::string& obs_path, const std::string& word_path, const std::string& positions,
                        bool oracle, bool trace) {
  Observation phi = load_observation(obs_path);
  Word w = parse_word_file(read_file(word_path));
  for (auto c : w.letters()) {
    if (!phi.alphabet().contains(c)) throw std::invalid_argument("word letter `" + constant_name(c) + "` is outside Σ(φ)");
  }
  PositionTerms pos = choose_positions(positions, w.length());
  Wiring word = encode_word(w, pos);
  ComputationSpace space = computation_space(phi, pos);
  const bool accepted = decide(phi, word, space);
  if (trace) print_trace(build_graph(phi, word, space), space);
  std::cout << "dimension " << space.size() << "\n";
  if (oracle) {
    const bool symbolic = symbolic_nilpotent(phi.wiring() * word, std::max<std::size_t>(space.size(), 1));
    std::cout << "oracle " << verdict(symbolic) << "\n";
    if (symbolic != accepted) {
      std::cerr << "error: oracle disagrees with the engine\n";
      return kError;
    }
  }
  std::cout << verdict(accepted) << "\n";
  return accepted ? kAccept : kReject;
}

int cmd_run_machine(const std::string& machine_path, const std::string& word_path) {
  PointerMachine m = parse_machine(read_file(machine_path));
  Word w = parse_word_file(read_file(word_path));
  const bool accepted = machine_accepts(m, w);
  std::cout << verdict(accepted) << "\n";
  return accepted ? kAccept : kReject;
}

int cmd_compile_machine(const std::string& machine_path, const std::string& out_path) {
  PointerMachine m = parse_machine(read_file(machine_path));
  Observation phi = compile(m);
  std::string text = render_observation_file(phi.alphabet(), phi.wiring());
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return kAccept;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!(out << text)) throw std::runtime_error("cannot write `" + out_path + "`");
  return kAccept;
}

int cmd_cross_check(const std::string& machine_path, const std::string& word_path, const std::string& positions) {
  PointerMachine m = parse_machine(read_file(machine_path));
  Word w = parse_word_file(read_file(word_path));
  const bool by_machine = machine_accepts(m, w);
  const bool by_observation = accepts(compile(m), w, choose_positions(positions, w.length()));
  std::cout << "machine " << verdict(by_machine) << "\n";
  std::cout << "observation " << verdict(by_observation) << "\n";
  if (by_machine != by_observation) {
    std::cout << "DISAGREE\n";
    return kReject;
  }
  std::cout << "AGREE\n";
  return kAccept;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unification algebra toolkit: wirings, observations and pointer machines"};
  app.require_subcommand(1);

  std::string a, b, obs, word, machine, out, positions = "fresh";
  bool oracle = false, trace = false;
  std::function<int()> run;

  auto* unify = app.add_subcommand("unify", "Most general unifier of two terms");
  unify->add_option("t", a, "first term (or @file)")->required();
  unify->add_option("u", b, "second term (or @file)")->required();
  unify->callback([&] { run = [&] { return cmd_unify(a, b); }; });

  auto* compose = app.add_subcommand("compose", "Product of two wirings");
  compose->add_option("f", a, "left wiring (or @file)")->required();
  compose->add_option("g", b, "right wiring (or @file)")->required();
  compose->callback([&] { run = [&] { return cmd_compose(a, b); }; });

  auto* apply_cmd = app.add_subcommand("apply", "Apply a wiring to a closed term");
  apply_cmd->add_option("f", a, "wiring (or @file)")->required();
  apply_cmd->add_option("t", b, "closed term (or @file)")->required();
  apply_cmd->callback([&] { run = [&] { return cmd_apply(a, b); }; });

  auto* dagger_cmd = app.add_subcommand("dagger", "Adjoint of a wiring");
  dagger_cmd->add_option("f", a, "wiring (or @file)")->required();
  dagger_cmd->callback([&] { run = [&] { return cmd_dagger(a); }; });

  auto* iso = app.add_subcommand("isometric-check", "Whether a wiring is isometric");
  iso->add_option("f", a, "wiring (or @file)")->required();
  iso->callback([&] { run = [&] { return cmd_isometric_check(a); }; });

  auto* encode = app.add_subcommand("encode-word", "Print the wiring representing a word");
  encode->add_option("file", word, "word file")->required();
  encode->add_option("--positions", positions, "fresh | nested | file:<path>");
  encode->callback([&] { run = [&] { return cmd_encode_word(word, positions); }; });

  auto* validate = app.add_subcommand("validate-observation", "Check an observation file");
  validate->add_option("file", obs, "observation file")->required();
  validate->callback([&] { run = [&] { return cmd_validate_observation(obs); }; });

  auto* run_obs = app.add_subcommand("run-observation", "Decide whether an observation accepts a word");
  run_obs->add_option("--obs", obs, "observation file")->required();
  run_obs->add_option("--word", word, "word file")->required();
  run_obs->add_option("--positions", positions, "fresh | nested | file:<path>");
  run_obs->add_flag("--oracle", oracle, "also check with symbolic powers");
  run_obs->add_flag("--trace", trace, "print the transition graph");
  run_obs->callback([&] { run = [&] { return cmd_run_observation(obs, word, positions, oracle, trace); }; });

  auto* run_m = app.add_subcommand("run-machine", "Decide acceptance by exploring machine configurations");
  run_m->add_option("--machine", machine, "machine file")->required();
  run_m->add_option("--word", word, "word file")->required();
  run_m->callback([&] { run = [&] { return cmd_run_machine(machine, word); }; });

  auto* compile_m = app.add_subcommand("compile-machine", "Translate a machine into an observation file");
  compile_m->add_option("--machine", machine, "machine file")->required();
  compile_m->add_option("-o,--output", out, "observation file to write (stdout if omitted)");
  compile_m->callback([&] { run = [&] { return cmd_compile_machine(machine, out); }; });

  auto* cross = app.add_subcommand("cross-check", "Run a machine and its compiled observation on a word");
  cross->add_option("--machine", machine, "machine file")->required();
  cross->add_option("--word", word, "word file")->required();
  cross->add_option("--positions", positions, "fresh | nested | file:<path>");
  cross->callback([&] { run = [&] { return cmd_cross_check(machine, word, positions); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  try {
    return run();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
}
