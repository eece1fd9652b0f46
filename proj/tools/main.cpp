// unavoid: command-line front end for the pattern unavoidability toolkit.
// Exit codes: 0 success / positive verdict, 1 negative verdict (avoidable,
// not free, no reflection, empty result), 2 usage error, 3 budget exceeded.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "unavoid/analysis.hpp"
#include "unavoid/decider.hpp"
#include "unavoid/factor_graph.hpp"
#include "unavoid/reflect.hpp"
#include "unavoid/sat_reduction.hpp"

using json = nlohmann::json;
using namespace unavoid;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse_error, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Pattern load_pattern(const std::string& inline_text, const std::string& file) {
  if (!file.empty()) return Pattern::parse(slurp(file));
  if (inline_text.empty()) throw Error(Errc::empty_pattern, "no pattern given");
  return Pattern::parse(inline_text);
}

json rational_json(const Rational& r) {
  return json{{"num", r.num.to_string()}, {"den", r.den.to_string()}};
}

std::string render_set(const Pattern& p, const std::vector<Letter>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += p.token(xs[i]);
  }
  return out + "}";
}

std::string render_word(const Pattern& legend_source, const std::vector<Letter>& word) {
  bool single = true;
  for (Letter l : word) single = single && legend_source.token(l).size() == 1;
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!single && i) out += ' ';
    out += legend_source.token(word[i]);
  }
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

json legend_json(const ReductionOutput& out) {
  json legend = json::array();
  for (Letter l = 0; l < out.word.alphabet_size(); ++l) {
    const auto& info = out.classes[static_cast<std::size_t>(l)];
    json entry{{"token", out.word.token(l)}, {"class", class_name(info.cls)}};
    if (info.cls != LetterClass::junction) entry["origin"] = info.origin;
    if (info.cls == LetterClass::literal) entry["negated"] = info.negated;
    if (info.cls == LetterClass::gadget) entry["role"] = std::string(1, info.role);
    legend.push_back(entry);
  }
  return legend;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pattern unavoidability toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output, one JSON document per line");

  std::string pattern_text, pattern_file, letter_token, word_text, input_file, cert_file = "-";
  std::uint64_t budget = 10'000'000;
  std::size_t cap = 30, digit_cap = 1'000'000;
  unsigned workers = 1;
  int k_arg = 1, n_arg = 1, r_arg = 1;
  bool paranoid = false, naive = false, dot = false;
  std::string strategy = "free-sets";

  auto* free_cmd = app.add_subcommand("free", "is a letter free for a pattern");
  free_cmd->add_option("pattern", pattern_text);
  free_cmd->add_option("letter", letter_token);
  free_cmd->add_option("--file", pattern_file, "read the pattern from a file");
  free_cmd->add_flag("--dot", dot, "print the factor graph in dot format and exit");

  auto* freesets_cmd = app.add_subcommand("free-sets", "stream every free set of a pattern");
  freesets_cmd->add_option("pattern", pattern_text);
  freesets_cmd->add_option("--file", pattern_file);
  freesets_cmd->add_flag("--dot", dot);

  auto* decide_cmd = app.add_subcommand("decide", "decide unavoidability, print a certificate");
  decide_cmd->add_option("pattern", pattern_text);
  decide_cmd->add_option("--file", pattern_file);
  decide_cmd->add_option("--budget", budget, "state budget");
  decide_cmd->add_option("--strategy", strategy)->check(CLI::IsMember({"free-sets", "bem"}));
  decide_cmd->add_flag("--paranoid", paranoid, "run both strategies, fail on disagreement");
  decide_cmd->add_flag("--naive", naive, "disable search reductions");

  auto* verify_cmd = app.add_subcommand("verify", "replay a certificate against a pattern");
  verify_cmd->add_option("pattern", pattern_text);
  verify_cmd->add_option("certificate", cert_file, "certificate file, - for stdin");
  verify_cmd->add_option("--file", pattern_file);

  auto* reflect_cmd = app.add_subcommand("reflect", "find a morphism mapping a pattern into a word");
  reflect_cmd->add_option("word", word_text)->required();
  reflect_cmd->add_option("pattern", pattern_text);
  reflect_cmd->add_option("--file", pattern_file);
  reflect_cmd->add_option("--budget", budget, "assignment node budget");

  auto* zimin_cmd = app.add_subcommand("zimin", "print the k-th Zimin word");
  zimin_cmd->add_option("k", k_arg)->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "build the pattern of a 3-CNF formula");
  reduce_cmd->add_option("dimacs", input_file, "DIMACS CNF file, - for stdin")->required();

  auto* checksat_cmd =
      app.add_subcommand("check-sat", "cross-check satisfiability against unavoidability");
  checksat_cmd->add_option("dimacs", input_file)->required();
  checksat_cmd->add_option("--budget", budget);

  auto* bound_cmd = app.add_subcommand("bound", "length bound N(n, r)");
  bound_cmd->add_option("n", n_arg)->required();
  bound_cmd->add_option("r", r_arg)->required();
  bound_cmd->add_option("--digit-cap", digit_cap);

  auto* density_cmd = app.add_subcommand("density", "density bound ((r-1)/r)^(n-1)");
  density_cmd->add_option("r", r_arg)->required();
  density_cmd->add_option("n", n_arg)->required();

  auto* countbound_cmd =
      app.add_subcommand("count-bound", "bound on unavoidable patterns over [r]");
  countbound_cmd->add_option("r", r_arg)->required();
  countbound_cmd->add_option("--digit-cap", digit_cap);

  auto* census_cmd = app.add_subcommand("census", "decide every word of [r]^n");
  census_cmd->add_option("r", r_arg)->required();
  census_cmd->add_option("n", n_arg)->required();
  census_cmd->add_option("--budget", budget, "enumeration budget");
  census_cmd->add_option("--workers", workers);

  auto* avoid_cmd = app.add_subcommand("avoid", "longest word over [r] avoiding a pattern");
  avoid_cmd->add_option("pattern", pattern_text);
  avoid_cmd->add_option("r", r_arg)->required();
  avoid_cmd->add_option("--file", pattern_file);
  avoid_cmd->add_option("--cap", cap, "length cap");
  avoid_cmd->add_option("--budget", budget, "reflect node budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*free_cmd) {
      Pattern p = load_pattern(pattern_text, pattern_file);
      if (dot) {
        std::cout << FactorGraph(p).to_dot();
        return kOk;
      }
      if (letter_token.empty()) throw Error(Errc::parse_error, "free needs a letter argument");
      auto idx = p.index_of_token(letter_token);
      const bool free = idx && is_free(p, *idx);
      if (as_json) {
        std::cout << json{{"letter", letter_token}, {"free", free}, {"occurs", idx.has_value()}}
                  << "\n";
      } else {
        std::cout << (free         ? "free"
                      : idx ? "not free"
                            : "not free (letter absent)")
                  << "\n";
      }
      return free ? kOk : kNegative;
    }

    if (*freesets_cmd) {
      Pattern p = load_pattern(pattern_text, pattern_file);
      if (dot) {
        std::cout << FactorGraph(p).to_dot();
        return kOk;
      }
      FreeSetStream stream(p);
      bool any = false;
      for (auto s = stream.next(); !s.empty(); s = stream.next()) {
        any = true;
        if (as_json) {
          json letters = json::array();
          for (Letter x : s) letters.push_back(p.token(x));
          std::cout << json{{"letters", letters}} << "\n";
        } else {
          std::cout << render_set(p, s) << "\n";
        }
      }
      return any ? kOk : kNegative;
    }

    if (*decide_cmd) {
      Pattern p = load_pattern(pattern_text, pattern_file);
      DecideOptions o;
      o.state_budget = budget;
      o.paranoid = paranoid;
      if (naive) {
        o.defer_unique = false;
        o.eager_cascade = false;
        o.square_shortcut = false;
      }
      Decider decider(o);
      Verdict v = strategy == "bem" ? decider.decide_bem(p) : decider.decide(p);
      if (as_json) {
        std::cout << json{{"verdict", v.unavoidable() ? "unavoidable" : "avoidable"},
                          {"states", decider.states_explored()}}
                  << "\n";
      } else {
        std::cout << (v.unavoidable() ? "unavoidable" : "avoidable") << "\n";
      }
      if (v.unavoidable()) std::cout << v.certificate->to_json_lines(p);
      return v.unavoidable() ? kOk : kNegative;
    }

    if (*verify_cmd) {
      Pattern p = load_pattern(pattern_text, pattern_file);
      Certificate c = Certificate::from_json_lines(p, slurp(cert_file));
      VerifyResult r = verify_certificate(p, c);
      if (as_json) {
        std::cout << json{{"valid", r.ok}, {"diagnostic", r.diagnostic}} << "\n";
      } else {
        std::cout << (r.ok ? "valid certificate" : "invalid certificate: " + r.diagnostic) << "\n";
      }
      return r.ok ? kOk : kNegative;
    }

    if (*reflect_cmd) {
      Pattern w = Pattern::parse(word_text);
      Pattern p = load_pattern(pattern_text, pattern_file);
      ReflectOptions o;
      o.node_budget = budget;
      auto m = reflects(w, p, o);
      if (as_json) {
        json images = json::object();
        if (m) {
          for (Letter x = 0; x < p.alphabet_size(); ++x)
            images[p.token(x)] = render_word(w, m->images[static_cast<std::size_t>(x)]);
        }
        std::cout << json{{"reflects", m.has_value()}, {"images", images}} << "\n";
      } else if (m) {
        for (Letter x = 0; x < p.alphabet_size(); ++x)
          std::cout << p.token(x) << " -> " << render_word(w, m->images[static_cast<std::size_t>(x)])
                    << "\n";
      } else {
        std::cout << "no reflection\n";
      }
      return m ? kOk : kNegative;
    }

    if (*zimin_cmd) {
      Pattern z = zimin(k_arg);
      if (as_json) {
        std::cout << json{{"k", k_arg}, {"word", z.format()}, {"length", z.size()}} << "\n";
      } else {
        std::cout << z.format() << "\n";
      }
      return kOk;
    }

    if (*reduce_cmd) {
      CnfFormula f = normalize(parse_dimacs(slurp(input_file)));
      ReductionOutput out = build_word(f);
      if (as_json) {
        std::cout << json{{"pattern", out.word.format()},
                          {"letters", out.word.size()},
                          {"alphabet", out.word.alphabet_size()},
                          {"separators", out.separator_count},
                          {"factors", out.factors},
                          {"legend", legend_json(out)}}
                  << "\n";
      } else {
        std::cout << out.word.format() << "\n" << legend_json(out) << "\n";
      }
      return kOk;
    }

    if (*checksat_cmd) {
      CnfFormula f = normalize(parse_dimacs(slurp(input_file)));
      DecideOptions o;
      o.state_budget = budget;
      EquivalenceReport r = check_equivalence(f, o);
      const char* verdict = r.verdict == SatDecision::unavoidable ? "unavoidable"
                            : r.verdict == SatDecision::avoidable ? "avoidable"
                                                                  : "budget exceeded";
      if (as_json) {
        std::cout << json{{"satisfiable", r.satisfiable},
                          {"verdict", verdict},
                          {"agree", r.agree},
                          {"schedule_checked", r.schedule_checked},
                          {"schedule_valid", r.schedule_valid},
                          {"states", r.states_explored}}
                  << "\n";
      } else {
        std::cout << "satisfiable: " << (r.satisfiable ? "yes" : "no") << "\n"
                  << "word verdict: " << verdict << "\n"
                  << "agree: " << (r.agree ? "yes" : "no") << "\n";
        if (r.schedule_checked) {
          std::cout << "stage schedule: " << (r.schedule_valid ? "replays" : "does not replay")
                    << (r.schedule_diagnostic.empty() ? "" : " (" + r.schedule_diagnostic + ")")
                    << "\n";
        }
      }
      if (r.verdict == SatDecision::budget_exceeded) return kBudget;
      return r.agree ? kOk : kNegative;
    }

    if (*bound_cmd) {
      BoundValue v =
          bound_n(static_cast<std::uint32_t>(n_arg), static_cast<std::uint32_t>(r_arg), digit_cap);
      if (as_json) {
        std::cout << json{{"n", n_arg},
                          {"r", r_arg},
                          {"overflow", v.overflow()},
                          {"value", v.overflow() ? json() : json(v.value->to_string())}}
                  << "\n";
      } else {
        std::cout << v.to_string() << "\n";
      }
      return kOk;
    }

    if (*density_cmd) {
      Rational d =
          density_bound(static_cast<std::uint32_t>(r_arg), static_cast<std::uint32_t>(n_arg));
      if (as_json) {
        std::cout << json{{"r", r_arg}, {"n", n_arg}, {"bound", rational_json(d)}} << "\n";
      } else {
        std::cout << d.to_string() << "\n";
      }
      return kOk;
    }

    if (*countbound_cmd) {
      BoundValue v = count_bound(static_cast<std::uint32_t>(r_arg), digit_cap);
      if (as_json) {
        std::cout << json{{"r", r_arg},
                          {"overflow", v.overflow()},
                          {"value", v.overflow() ? json() : json(v.value->to_string())}}
                  << "\n";
      } else {
        std::cout << v.to_string() << "\n";
      }
      return kOk;
    }

    if (*census_cmd) {
      CensusOptions o;
      o.enumeration_budget = budget;
      o.workers = workers;
      CensusReport r =
          census(static_cast<std::uint32_t>(r_arg), static_cast<std::uint32_t>(n_arg), o);
      if (as_json) {
        std::cout << json{{"r", r.r},
                          {"n", r.n},
                          {"total", r.total},
                          {"unavoidable", r.unavoidable},
                          {"fraction", rational_json(r.fraction)},
                          {"bound", rational_json(r.bound)},
                          {"holds", r.bound_holds}}
                  << "\n";
      } else {
        std::printf("%3s %3s %12s %12s %12s %12s %6s\n", "r", "n", "total", "unavoidable",
                    "fraction", "bound", "holds");
        std::printf("%3u %3u %12llu %12llu %12s %12s %6s\n", r.r, r.n,
                    static_cast<unsigned long long>(r.total),
                    static_cast<unsigned long long>(r.unavoidable), r.fraction.to_string().c_str(),
                    r.bound.to_string().c_str(), r.bound_holds ? "yes" : "NO");
      }
      return kOk;
    }

    if (*avoid_cmd) {
      Pattern p = load_pattern(pattern_text, pattern_file);
      ReflectOptions o;
      o.node_budget = budget;
      AvoidanceResult r = longest_avoiding(p, r_arg, cap, o);
      std::string witness;
      for (Letter l : r.witness) witness += default_token(l);
      if (as_json) {
        std::cout << json{{"cap_reached", r.cap_reached},
                          {"max_length", r.max_length},
                          {"witness", witness}}
                  << "\n";
      } else if (r.cap_reached) {
        std::cout << "cap reached at length " << r.max_length << "\nwitness: " << witness << "\n";
      } else {
        std::cout << "longest avoiding word: " << r.max_length << "\nwitness: " << witness << "\n";
      }
      return kOk;
    }
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
