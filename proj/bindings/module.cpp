// Python bindings for the pattern unavoidability toolkit. The API is
// string-first: patterns travel as their text form, certificates as the
// line-oriented JSON form, so results stay directly scriptable.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <set>

#include "unavoid/analysis.hpp"
#include "unavoid/decider.hpp"
#include "unavoid/factor_graph.hpp"
#include "unavoid/reflect.hpp"
#include "unavoid/sat_reduction.hpp"

namespace py = pybind11;
using namespace unavoid;

namespace {

Pattern parse(const std::string& text) { return Pattern::parse(text); }

Letter letter_of(const Pattern& p, const std::string& token) {
  auto idx = p.index_of_token(token);
  if (!idx) throw Error(Errc::letter_absent, "letter " + token + " does not occur");
  return *idx;
}

std::set<Letter> letters_of(const Pattern& p, const std::vector<std::string>& tokens) {
  std::set<Letter> out;
  for (const auto& t : tokens) out.insert(letter_of(p, t));
  return out;
}

DecideOptions decide_options(std::uint64_t budget, bool paranoid, bool naive) {
  DecideOptions o;
  o.state_budget = budget;
  o.paranoid = paranoid;
  if (naive) {
    o.defer_unique = false;
    o.eager_cascade = false;
    o.square_shortcut = false;
  }
  return o;
}

py::dict verdict_dict(const Pattern& p, const Verdict& v, std::uint64_t states) {
  py::dict out;
  out["unavoidable"] = v.unavoidable();
  out["states"] = states;
  if (v.unavoidable()) out["certificate"] = v.certificate->to_json_lines(p);
  return out;
}

const char* class_name(LetterClass cls) {
  switch (cls) {
    case LetterClass::literal: return "X";
    case LetterClass::gadget: return "Y";
    case LetterClass::junction: return "e";
    case LetterClass::separator: return "Z";
  }
  return "?";
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "pattern unavoidability toolkit";

  // translators run most-recently-registered first: the budget subclass
  // must be registered after the base to keep its RuntimeError mapping
  py::register_exception<Error>(m, "ToolkitError", PyExc_ValueError);
  py::register_exception<BudgetError>(m, "BudgetExceeded", PyExc_RuntimeError);

  m.def("canonicalize",
        [](const std::string& text) {
          Pattern canon = parse(text).canonicalize();
          // surface the canonical indices through default tokens a, b, c, ...
          return Pattern(std::vector<Letter>(canon.letters().begin(), canon.letters().end()))
              .format();
        },
        py::arg("pattern"), "rename letters by first occurrence");

  m.def("delete_letters",
        [](const std::string& text, const std::vector<std::string>& letters) {
          Pattern p = parse(text);
          return p.delete_letters(letters_of(p, letters)).format();
        },
        py::arg("pattern"), py::arg("letters"));

  m.def("identify",
        [](const std::string& text, const std::string& from, const std::string& to) {
          Pattern p = parse(text);
          return p.identify(letter_of(p, from), letter_of(p, to)).format();
        },
        py::arg("pattern"), py::arg("from_letter"), py::arg("to_letter"));

  m.def("two_factors",
        [](const std::string& text) {
          Pattern p = parse(text);
          std::vector<std::pair<std::string, std::string>> out;
          for (const auto& [a, b] : p.two_factors()) out.emplace_back(p.token(a), p.token(b));
          return out;
        },
        py::arg("pattern"));

  m.def("is_free",
        [](const std::string& text, const std::string& letter) {
          Pattern p = parse(text);
          return is_free(p, letter_of(p, letter));
        },
        py::arg("pattern"), py::arg("letter"));

  m.def("is_free_set",
        [](const std::string& text, const std::vector<std::string>& letters) {
          Pattern p = parse(text);
          return is_free_set(p, letters_of(p, letters));
        },
        py::arg("pattern"), py::arg("letters"));

  m.def("free_letters",
        [](const std::string& text) {
          Pattern p = parse(text);
          std::vector<std::string> out;
          for (Letter x : free_letters(p)) out.push_back(p.token(x));
          return out;
        },
        py::arg("pattern"));

  m.def("free_sets",
        [](const std::string& text, std::size_t limit) {
          Pattern p = parse(text);
          std::vector<std::vector<std::string>> out;
          FreeSetStream stream(p);
          for (auto s = stream.next(); !s.empty(); s = stream.next()) {
            std::vector<std::string> tokens;
            for (Letter x : s) tokens.push_back(p.token(x));
            out.push_back(std::move(tokens));
            if (limit && out.size() >= limit) break;
          }
          return out;
        },
        py::arg("pattern"), py::arg("limit") = 0,
        "free sets by size then lexicographic order; limit 0 streams all");

  m.def("factor_graph_dot",
        [](const std::string& text) { return FactorGraph(parse(text)).to_dot(); },
        py::arg("pattern"));

  m.def("decide",
        [](const std::string& text, const std::string& strategy, std::uint64_t budget,
           bool paranoid, bool naive) {
          Pattern p = parse(text);
          Decider d(decide_options(budget, paranoid, naive));
          Verdict v = strategy == "bem" ? d.decide_bem(p) : d.decide(p);
          return verdict_dict(p, v, d.states_explored());
        },
        py::arg("pattern"), py::arg("strategy") = "free-sets",
        py::arg("budget") = std::uint64_t{10'000'000}, py::arg("paranoid") = false,
        py::arg("naive") = false);

  m.def("verify",
        [](const std::string& text, const std::string& certificate) {
          Pattern p = parse(text);
          VerifyResult r = verify_certificate(p, Certificate::from_json_lines(p, certificate));
          py::dict out;
          out["valid"] = r.ok;
          out["diagnostic"] = r.diagnostic;
          return out;
        },
        py::arg("pattern"), py::arg("certificate"));

  m.def("apply_morphism",
        [](const std::string& text, const std::map<std::string, std::string>& images) {
          Pattern p = parse(text);
          std::string out;
          for (Letter x : p.letters()) {
            auto it = images.find(p.token(x));
            if (it == images.end() || it->second.empty())
              throw Error(Errc::missing_image, "no image for letter " + p.token(x));
            out += it->second;
          }
          return out;
        },
        py::arg("pattern"), py::arg("images"));

  m.def("reflects",
        [](const std::string& word, const std::string& text,
           std::uint64_t budget) -> std::optional<std::map<std::string, std::string>> {
          Pattern w = parse(word);
          Pattern p = parse(text);
          ReflectOptions o;
          o.node_budget = budget;
          auto found = reflects(w, p, o);
          if (!found) return std::nullopt;
          std::map<std::string, std::string> out;
          for (Letter x = 0; x < p.alphabet_size(); ++x) {
            std::string image;
            for (Letter l : found->images[static_cast<std::size_t>(x)]) image += w.token(l);
            out[p.token(x)] = image;
          }
          return out;
        },
        py::arg("word"), py::arg("pattern"), py::arg("budget") = std::uint64_t{10'000'000});

  m.def("zimin", [](int k) { return zimin(k).format(); }, py::arg("k"));

  m.def("decide_via_zimin",
        [](const std::string& text, std::uint64_t budget) {
          ReflectOptions o;
          o.node_budget = budget;
          return decide_via_zimin(parse(text), o);
        },
        py::arg("pattern"), py::arg("budget") = std::uint64_t{10'000'000});

  m.def("build_word",
        [](const std::string& dimacs) {
          ReductionOutput out = build_word(normalize(parse_dimacs(dimacs)));
          py::dict d;
          d["pattern"] = out.word.format();
          d["letters"] = out.word.size();
          d["alphabet"] = out.word.alphabet_size();
          d["separators"] = out.separator_count;
          d["factors"] = out.factors;
          py::list legend;
          for (Letter l = 0; l < out.word.alphabet_size(); ++l) {
            const auto& info = out.classes[static_cast<std::size_t>(l)];
            py::dict entry;
            entry["token"] = out.word.token(l);
            entry["class"] = class_name(info.cls);
            entry["origin"] = info.origin;
            legend.append(entry);
          }
          d["legend"] = legend;
          return d;
        },
        py::arg("dimacs"));

  m.def("check_sat",
        [](const std::string& dimacs, std::uint64_t budget) {
          DecideOptions o;
          o.state_budget = budget;
          EquivalenceReport r = check_equivalence(normalize(parse_dimacs(dimacs)), o);
          py::dict d;
          d["satisfiable"] = r.satisfiable;
          d["verdict"] = r.verdict == SatDecision::unavoidable ? "unavoidable"
                         : r.verdict == SatDecision::avoidable ? "avoidable"
                                                               : "budget exceeded";
          d["agree"] = r.agree;
          d["schedule_checked"] = r.schedule_checked;
          d["schedule_valid"] = r.schedule_valid;
          d["states"] = r.states_explored;
          return d;
        },
        py::arg("dimacs"), py::arg("budget") = std::uint64_t{10'000'000});

  m.def("bound_n",
        [](std::uint32_t n, std::uint32_t r, std::size_t digit_cap) -> std::optional<std::string> {
          BoundValue v = bound_n(n, r, digit_cap);
          if (v.overflow()) return std::nullopt;
          return v.value->to_string();
        },
        py::arg("n"), py::arg("r"), py::arg("digit_cap") = std::size_t{1'000'000},
        "exact bound as a decimal string, or None past the digit cap");

  m.def("density_bound",
        [](std::uint32_t r, std::uint32_t n) {
          Rational d = density_bound(r, n);
          return std::make_pair(d.num.to_string(), d.den.to_string());
        },
        py::arg("r"), py::arg("n"));

  m.def("count_bound",
        [](std::uint32_t r, std::size_t digit_cap) -> std::optional<std::string> {
          BoundValue v = count_bound(r, digit_cap);
          if (v.overflow()) return std::nullopt;
          return v.value->to_string();
        },
        py::arg("r"), py::arg("digit_cap") = std::size_t{1'000'000});

  m.def("census",
        [](std::uint32_t r, std::uint32_t n, std::uint64_t budget, unsigned workers) {
          CensusOptions o;
          o.enumeration_budget = budget;
          o.workers = workers;
          CensusReport rep = census(r, n, o);
          py::dict d;
          d["r"] = rep.r;
          d["n"] = rep.n;
          d["total"] = rep.total;
          d["unavoidable"] = rep.unavoidable;
          d["fraction"] = std::make_pair(rep.fraction.num.to_string(), rep.fraction.den.to_string());
          d["bound"] = std::make_pair(rep.bound.num.to_string(), rep.bound.den.to_string());
          d["holds"] = rep.bound_holds;
          return d;
        },
        py::arg("r"), py::arg("n"), py::arg("budget") = std::uint64_t{10'000'000},
        py::arg("workers") = 1u);

  m.def("longest_avoiding",
        [](const std::string& text, int r, std::size_t cap, std::uint64_t budget) {
          ReflectOptions o;
          o.node_budget = budget;
          AvoidanceResult res = longest_avoiding(parse(text), r, cap, o);
          std::string witness;
          for (Letter l : res.witness) witness += default_token(l);
          py::dict d;
          d["cap_reached"] = res.cap_reached;
          d["max_length"] = res.max_length;
          d["witness"] = witness;
          return d;
        },
        py::arg("pattern"), py::arg("r"), py::arg("cap"),
        py::arg("budget") = std::uint64_t{10'000'000});
}
