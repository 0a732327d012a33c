#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <variant>

#include "unialg/nilpotency.hpp"
#include "unialg/pointer_machine.hpp"
#include "unialg/syntax.hpp"
#include "unialg/unify.hpp"

namespace py = pybind11;
using namespace unialg;

namespace {

using PositionsArg = std::variant<std::string, std::vector<std::string>>;

Alphabet alphabet_of(const std::vector<std::string>& letters) {
  std::vector<SymbolId> ids;
  for (const auto& c : letters) {
    if (c != "star") ids.push_back(intern_constant(c));
  }
  return Alphabet(ids);
}

Word word_of(const Alphabet& sigma, const std::vector<std::string>& letters) {
  std::vector<SymbolId> ids;
  for (const auto& c : letters) ids.push_back(intern_constant(c));
  return Word(sigma, ids);
}

std::vector<std::string> names_of(const Alphabet& sigma) {
  std::vector<std::string> out;
  for (auto c : sigma.symbols()) out.push_back(constant_name(c));
  return out;
}

PositionTerms positions_for(const PositionsArg& arg, std::size_t n) {
  if (const auto* named = std::get_if<std::string>(&arg)) {
    if (*named == "fresh") return default_positions(n);
    if (*named == "nested") return nested_positions(n);
    throw std::invalid_argument("positions must be `fresh`, `nested` or a list of closed terms");
  }
  std::vector<Term> terms;
  for (const auto& text : std::get<std::vector<std::string>>(arg)) terms.push_back(parse_term(text));
  if (terms.size() != n + 1) throw std::invalid_argument("a word of length n needs n + 1 position terms");
  return PositionTerms(terms);
}

std::optional<std::map<std::string, Term>> unify_terms(const Term& t, const Term& u) {
  auto theta = mgu(t, u);
  if (!theta) return std::nullopt;
  std::map<std::string, Term> out;
  for (const auto& [v, image] : *theta) out.emplace(variable_name(v), image);
  return out;
}

py::list wiring_flows(const Wiring& f) {
  py::list out;
  for (const auto& [flow, c] : f) out.append(py::make_tuple(flow, to_string(c)));
  return out;
}

py::list apply_wiring(const Wiring& f, const Term& t) {
  py::list out;
  for (const auto& [image, c] : apply(f, t)) out.append(py::make_tuple(to_string(c), image));
  return out;
}

}  // namespace

PYBIND11_MODULE(unialg, m) {
  m.doc() = "Terms, flows and wirings of the unification algebra, with observations and pointer machines.";

  py::register_exception<SyntaxError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ObservationError>(m, "ObservationError", PyExc_ValueError);
  py::register_exception<SeparationViolation>(m, "SeparationViolation", PyExc_RuntimeError);

  py::class_<Term>(m, "Term")
      .def(py::init([](const std::string& text) { return parse_term(text); }), py::arg("text"))
      .def_property_readonly("closed", &Term::closed)
      .def_property_readonly("size", &Term::size)
      .def("__str__", [](const Term& t) { return render(t); })
      .def("__repr__", [](const Term& t) { return "Term('" + render(t) + "')"; })
      .def("__eq__", [](const Term& a, const Term& b) { return a == b; })
      .def("__hash__", [](const Term& t) { return t.hash(); });
  py::implicitly_convertible<py::str, Term>();

  py::class_<Flow>(m, "Flow")
      .def(py::init([](const std::string& text) { return parse_flow(text); }), py::arg("text"))
      .def_property_readonly("lhs", &Flow::lhs)
      .def_property_readonly("rhs", &Flow::rhs)
      .def("dagger", [](const Flow& f) { return dagger(f); })
      .def("__call__", [](const Flow& f, const Term& t) { return apply(f, t); }, py::arg("term"))
      .def("__str__", [](const Flow& f) { return render(f); })
      .def("__repr__", [](const Flow& f) { return "Flow('" + render(f) + "')"; })
      .def("__eq__", [](const Flow& a, const Flow& b) { return a == b; });
  py::implicitly_convertible<py::str, Flow>();

  py::class_<Wiring>(m, "Wiring")
      .def(py::init([](const std::string& text) { return parse_wiring(text); }), py::arg("text") = "0")
      .def_static("identity", &Wiring::identity)
      .def("__add__", [](const Wiring& a, const Wiring& b) { return a + b; })
      .def("__sub__", [](const Wiring& a, const Wiring& b) { return a - b; })
      .def("__mul__", [](const Wiring& a, const Wiring& b) { return a * b; })
      .def("__eq__", [](const Wiring& a, const Wiring& b) { return a == b; })
      .def("__len__", &Wiring::size)
      .def("__str__", [](const Wiring& f) { return render(f); })
      .def("__repr__", [](const Wiring& f) { return "Wiring('" + render(f) + "')"; })
      .def("dagger", [](const Wiring& f) { return dagger(f); })
      .def("tensor", [](const Wiring& f, const Wiring& g) { return tensor(f, g); }, py::arg("other"))
      .def("apply", &apply_wiring, py::arg("term"), "Image of a closed term as (coefficient, term) pairs.")
      .def("flows", &wiring_flows, "Summands as (flow, coefficient) pairs.")
      .def_property_readonly("is_zero", &Wiring::is_zero)
      .def_property_readonly("is_isometric", [](const Wiring& f) { return is_isometric(f); })
      .def_property_readonly("is_partial_isometry", [](const Wiring& f) { return is_partial_isometry(f); });
  py::implicitly_convertible<py::str, Wiring>();

  m.def("unify", &unify_terms, py::arg("t"), py::arg("u"),
        "Most general unifier as a dict from variable names to terms, or None.");
  m.def("product", [](const Flow& l, const Flow& k) { return product(l, k); }, py::arg("l"), py::arg("k"));
  m.def("encode_word",
        [](const std::vector<std::string>& alphabet, const std::vector<std::string>& letters,
           const PositionsArg& positions) {
          const Word w = word_of(alphabet_of(alphabet), letters);
          return encode_word(w, positions_for(positions, w.length()));
        },
        py::arg("alphabet"), py::arg("letters"), py::arg("positions") = "fresh");

  py::class_<Observation>(m, "Observation")
      .def(py::init([](const std::string& text) {
             auto file = parse_observation_file(text);
             return validate_observation(file.wiring, file.alphabet);
           }),
           py::arg("text"), "Parses an observation file: an `alphabet` line followed by a wiring.")
      .def_property_readonly("wiring", &Observation::wiring)
      .def_property_readonly("alphabet", [](const Observation& phi) { return names_of(phi.alphabet()); })
      .def_property_readonly("states", &Observation::states)
      .def_property_readonly("arity", &Observation::arity)
      .def_property_readonly("isometric", &Observation::isometric)
      .def("dimension",
           [](const Observation& phi, std::size_t word_length) {
             return computation_space(phi, default_positions(word_length)).size();
           },
           py::arg("word_length"))
      .def("accepts",
           [](const Observation& phi, const std::vector<std::string>& letters, const PositionsArg& positions) {
             const Word w = word_of(phi.alphabet(), letters);
             return accepts(phi, w, positions_for(positions, w.length()));
           },
           py::arg("letters"), py::arg("positions") = "fresh")
      .def("accepts_symbolically",
           [](const Observation& phi, const std::vector<std::string>& letters) {
             const Word w = word_of(phi.alphabet(), letters);
             const PositionTerms pos = default_positions(w.length());
             const std::size_t d = computation_space(phi, pos).size();
             return symbolic_nilpotent(phi.wiring() * encode_word(w, pos), std::max<std::size_t>(d, 1));
           },
           py::arg("letters"), "Nilpotency of φW by repeated products, bounded by the dimension.")
      .def("__str__", [](const Observation& phi) { return render_observation_file(phi.alphabet(), phi.wiring()); });

  py::class_<PointerMachine>(m, "Machine")
      .def(py::init([](const std::string& text) { return parse_machine(text); }), py::arg("text"))
      .def_property_readonly("pointers", &PointerMachine::pointers)
      .def_property_readonly("states", &PointerMachine::states)
      .def_property_readonly("alphabet", [](const PointerMachine& pm) { return names_of(pm.alphabet()); })
      .def_property_readonly("deterministic", [](const PointerMachine& pm) { return is_deterministic(pm); })
      .def_property_readonly("reversible", [](const PointerMachine& pm) { return is_reversible(pm); })
      .def("accepts",
           [](const PointerMachine& pm, const std::vector<std::string>& letters) {
             return machine_accepts(pm, word_of(pm.alphabet(), letters));
           },
           py::arg("letters"))
      .def("compile", [](const PointerMachine& pm) { return compile(pm); })
      .def("__str__", [](const PointerMachine& pm) { return render_machine(pm); });
}
