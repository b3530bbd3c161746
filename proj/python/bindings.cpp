#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mihailova/autf3.hpp"
#include "mihailova/errors.hpp"
#include "mihailova/identities.hpp"
#include "mihailova/presentation.hpp"
#include "mihailova/subgroup.hpp"
#include "mihailova/text.hpp"
#include "mihailova/word.hpp"

namespace py = pybind11;
using namespace mihailova;

namespace {

Word word_from_ints(int rank, const std::vector<int>& letters) {
  std::vector<Letter> ls;
  ls.reserve(letters.size());
  for (int v : letters) {
    if (v == 0) throw AlphabetError("letter 0 is not a generator");
    ls.push_back(Letter::from_signed(v));
  }
  return reduce(ls, rank);
}

std::vector<int> ints_of(const Word& w) {
  std::vector<int> out;
  for (Letter l : w.letters()) out.push_back(l.signed_value());
  return out;
}

MixedWord parse_mixed(const Presentation& p, const std::string& text) {
  return MixedWord(p.rank(), p.relator_count(), parse_word(text, Alphabet::mixed(p.rank(), p.relator_count())));
}

std::string format_mixed(const MixedWord& w) { return format_word(w.word(), Alphabet::mixed(w.n(), w.m())); }

SearchBudget search_budget(std::size_t max_steps, std::size_t max_conjugator_len, std::size_t max_word_len) {
  SearchBudget b;
  b.max_steps = max_steps;
  b.max_conjugator_len = max_conjugator_len;
  b.max_word_len = max_word_len;
  return b;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Free groups, Mihailova subgroups, Peiffer reductions and Aut(F_3) embeddings";

  auto base = py::register_exception<Error>(m, "MihailovaError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  py::class_<Word>(m, "Word")
      .def(py::init(&word_from_ints), py::arg("rank"), py::arg("letters") = std::vector<int>{},
           "Freely reduced word; letters are signed generator indices.")
      .def_static("parse", [](const std::string& text, int rank) { return parse_word(text, Alphabet::indexed(rank)); },
                  py::arg("text"), py::arg("rank"))
      .def_property_readonly("rank", &Word::rank)
      .def_property_readonly("letters", &ints_of)
      .def("inverse", &Word::inverse)
      .def("__len__", &Word::length)
      .def("__bool__", [](const Word& w) { return !w.empty(); })
      .def("__mul__", [](const Word& a, const Word& b) { return a * b; })
      .def("__pow__", [](const Word& a, long k) { return power(a, k); })
      .def("__eq__", [](const Word& a, const Word& b) { return a == b; })
      .def("__lt__", [](const Word& a, const Word& b) { return a < b; })
      .def("__hash__", [](const Word& w) { return WordHash{}(w); })
      .def("__str__", [](const Word& w) { return format_word(w, Alphabet::indexed(w.rank())); })
      .def("__repr__", [](const Word& w) { return "Word('" + format_word(w, Alphabet::indexed(w.rank())) + "')"; });

  m.def("conjugate", &conjugate, py::arg("a"), py::arg("by"), "by^-1 a by");
  m.def("commutator", &commutator, "a^-1 b^-1 a b");
  m.def("cyclic_reduce", [](const Word& w) {
    auto r = cyclic_reduce(w);
    return py::make_tuple(r.core, r.conjugator);
  });
  m.def("are_conjugate", &are_conjugate);
  m.def("root", [](const Word& w) {
    auto r = root(w);
    return py::make_tuple(r.root, r.exponent);
  });
  m.def("abelianize", &abelianize);

  py::class_<Presentation>(m, "Presentation")
      .def(py::init<int, std::vector<Word>>(), py::arg("rank"), py::arg("relators"))
      .def_static("parse", [](const std::string& text) { return parse_presentation(text); })
      .def_static("load", &load_presentation)
      .def_property_readonly("rank", &Presentation::rank)
      .def_property_readonly("relators", &Presentation::relators)
      .def("is_validated", &Presentation::is_validated)
      .def("__eq__", [](const Presentation& a, const Presentation& b) { return a == b; })
      .def("__str__", &format_presentation);

  m.def("is_concise", &is_concise);
  m.def("concise_refinement", &concise_refinement);
  m.def("check_strengthened_conciseness", [](const Presentation& p) {
    std::vector<std::pair<int, std::string>> out;
    for (const auto& w : check_strengthened_conciseness(p)) out.emplace_back(w.relator, w.message);
    return out;
  });

  py::class_<WpVerdict>(m, "Verdict")
      .def_property_readonly("outcome", [](const WpVerdict& v) { return std::string(to_string(v.outcome)); })
      .def_property_readonly("certificate",
                             [](const WpVerdict& v) {
                               std::vector<py::tuple> out;
                               for (const auto& f : v.certificate) out.push_back(py::make_tuple(f.conjugator, f.relator, f.sign));
                               return out;
                             })
      .def_readonly("obstruction", &WpVerdict::obstruction)
      .def_readonly("steps", &WpVerdict::steps)
      .def("__repr__", [](const WpVerdict& v) { return std::string("Verdict('") + to_string(v.outcome) + "')"; });

  static const SearchBudget defaults;
  m.def(
      "normal_closure_contains",
      [](const Presentation& p, const Word& w, std::size_t max_steps, std::size_t max_conjugator_len,
         std::size_t max_word_len) {
        return normal_closure_contains(p, w, search_budget(max_steps, max_conjugator_len, max_word_len));
      },
      py::arg("presentation"), py::arg("word"), py::arg("max_steps") = defaults.max_steps,
      py::arg("max_conjugator_len") = defaults.max_conjugator_len, py::arg("max_word_len") = defaults.max_word_len);
  m.def(
      "equal_in_H",
      [](const Presentation& p, const Word& a, const Word& b, std::size_t max_steps) {
        return equal_in_H(p, a, b, search_budget(max_steps, defaults.max_conjugator_len, defaults.max_word_len));
      },
      py::arg("presentation"), py::arg("w1"), py::arg("w2"), py::arg("max_steps") = defaults.max_steps);
  m.def(
      "in_M",
      [](const Presentation& p, const Word& a, const Word& b, std::size_t max_steps) {
        return in_M(p, PairWord(a, b), search_budget(max_steps, defaults.max_conjugator_len, defaults.max_word_len));
      },
      py::arg("presentation"), py::arg("w1"), py::arg("w2"), py::arg("max_steps") = defaults.max_steps);

  m.def("mihailova_generators", [](const Presentation& p) {
    std::vector<std::pair<Word, Word>> out;
    for (const auto& g : mihailova_generators(p)) out.emplace_back(g.left, g.right);
    return out;
  });
  m.def(
      "pi",
      [](const Presentation& p, const std::string& mixed) {
        PairWord image = pi(p, parse_mixed(p, mixed));
        return std::make_pair(image.left, image.right);
      },
      "Image of a word in d/t letters, e.g. 't1 d2'.");
  m.def("in_kernel_of_pi", [](const Presentation& p, const std::string& mixed) {
    return in_kernel_of_pi(p, parse_mixed(p, mixed));
  });
  m.def(
      "relator_family",
      [](const Presentation& p, std::size_t max_d_len) {
        std::vector<std::string> out;
        for (const auto& r : relator_family(p, max_d_len)) out.push_back(format_mixed(r));
        return out;
      },
      py::arg("presentation"), py::arg("max_d_len") = 2);

  const ReductionBudget rdefaults;
  m.def(
      "reduce_identity",
      [](const Presentation& p, const std::string& mixed, std::size_t max_moves, std::size_t max_insertions,
         std::size_t max_frontier) -> std::optional<std::string> {
        ReductionBudget b;
        b.max_moves = max_moves;
        b.max_insertions = max_insertions;
        b.max_frontier = max_frontier;
        auto result = reduce_to_empty(p, parse_mixed(p, mixed), b);
        if (!result.certificate) return std::nullopt;
        return format_certificate(p, *result.certificate);
      },
      py::arg("presentation"), py::arg("word"), py::arg("max_moves") = rdefaults.max_moves,
      py::arg("max_insertions") = rdefaults.max_insertions, py::arg("max_frontier") = rdefaults.max_frontier,
      "Certificate text reducing a kernel word to 1, or None when the budget runs out.");

  m.def(
      "fn_into_f2", [](int n) { return fn_into_f2(n).images(); }, "Images of x_1..x_n in F_2 = <a, b>.");
  m.def("orbit_undecidable_subgroup", [](const Presentation& p) {
    std::vector<std::string> out;
    for (const auto& e : orbit_undecidable_subgroup(p)) out.push_back(format_endomorphism(e));
    return out;
  });
}
