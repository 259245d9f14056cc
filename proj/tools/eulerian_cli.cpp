// Command-line front end for the eulerian library.
//
//   eulerian build EXPR [-o FILE]
//   eulerian flags|cd-index|l-vector|check-eulerian POSET
//   eulerian check-inequality POSET (--all | --T LIST --V LIST)
//   eulerian limit-l --n N --intervals SPEC
//   eulerian classify|certificate WORD
//   eulerian witness WORD --N K [-o FILE]
//   eulerian verify SUITE
//
// POSET is a JSON file path or an inline construction expression.
// Exit status: 0 success, 1 failed mathematical check, 2 usage error.

#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "eulerian/analysis.hpp"
#include "eulerian/constructions.hpp"
#include "eulerian/errors.hpp"
#include "eulerian/expr.hpp"
#include "eulerian/flag.hpp"
#include "eulerian/io.hpp"
#include "eulerian/verify.hpp"

namespace {

using namespace eulerian;

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string format = "json";
  std::size_t max_elements = kDefaultElementBudget;
  std::size_t max_intervals = kDefaultMaxLimitIntervals;
};

bool table(const Options& o) { return o.format == "table"; }

RankedPoset load_argument(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    RankedPoset p = load_poset(arg);
    require_valid(p);
    return p;
  }
  return evaluate(parse_expression(arg));
}

RankSubset parse_subset(int n, const std::string& text) {
  std::string cleaned;
  for (char ch : text) {
    if (ch == '[' || ch == ']') continue;
    cleaned += ch == ',' ? ' ' : ch;
  }
  std::istringstream in(cleaned);
  std::vector<int> members;
  std::string token;
  while (in >> token) {
    try {
      std::size_t used = 0;
      members.push_back(std::stoi(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::logic_error&) {
      throw InvalidArgument("malformed rank list '" + text + "'");
    }
  }
  return RankSubset::from_members(n, members);
}

IntervalSystem parse_intervals(int n, const std::string& spec) {
  Json doc;
  try {
    doc = Json::parse(spec);
  } catch (const Json::parse_error&) {
    throw InvalidArgument("intervals must be a JSON list like [[1,2],[3,4]]");
  }
  IntervalSystem sys{n, {}};
  if (!doc.is_array()) throw InvalidArgument("intervals must be a JSON list");
  for (const auto& iv : doc) {
    if (!iv.is_array() || iv.size() != 2 || !iv[0].is_number_integer() || !iv[1].is_number_integer()) {
      throw InvalidArgument("each interval must be [i,j]");
    }
    sys.intervals.push_back(RankInterval{iv[0].get<int>(), iv[1].get<int>()});
    const auto& last = sys.intervals.back();
    if (last.lo < 1 || last.hi > n || last.lo > last.hi) {
      throw InvalidArgument("interval [" + std::to_string(last.lo) + "," + std::to_string(last.hi) +
                            "] outside [1," + std::to_string(n) + "]");
    }
  }
  return sys;
}

void emit(const Json& doc) { std::cout << dump(doc) << '\n'; }

int cmd_build(const Options&, const std::string& expr, const std::string& out) {
  const RankedPoset p = evaluate(parse_expression(expr));
  if (out.empty()) {
    emit(to_json(p));
  } else {
    save_poset(p, out);
  }
  return 0;
}

int cmd_flags(const Options& o, const std::string& arg) {
  const FlagVector f = flag_vector(load_argument(arg));
  if (table(o)) {
    for (std::size_t m = 0; m < f.entries.size(); ++m) std::cout << RankSubset(f.n, m).to_string() << '\t' << f.entries[m] << '\n';
  } else {
    emit(to_json(f));
  }
  return 0;
}

int cmd_cd_index(const Options& o, const std::string& arg) {
  const CdPolynomial phi = cd_index(load_argument(arg));
  if (table(o)) {
    for (const auto& [w, k] : phi.terms()) std::cout << (w.letters().empty() ? "1" : w.letters()) << '\t' << k << '\n';
  } else {
    emit(to_json(phi));
  }
  return 0;
}

int cmd_l_vector(const Options& o, const std::string& arg) {
  const LVector l = l_vector(flag_vector(load_argument(arg)));
  if (table(o)) {
    for (std::size_t m = 0; m < l.entries.size(); ++m) {
      if (l.entries[m] != 0) std::cout << RankSubset(l.n, m).to_string() << '\t' << to_string(l.entries[m]) << '\n';
    }
  } else {
    emit(to_json(l));
  }
  return 0;
}

int cmd_check_eulerian(const Options& o, const std::string& arg) {
  const RankedPoset p = load_argument(arg);
  const EulerianReport report = is_eulerian(p);
  Json doc{{"eulerian", report.eulerian}};
  if (report.violation) {
    const auto& v = *report.violation;
    doc["violation"] = Json{{"lower", {v.lower_rank, v.lower_index}},
                            {"upper", {v.upper_rank, v.upper_index}},
                            {"even", v.even_count},
                            {"odd", v.odd_count}};
  }
  if (table(o)) {
    std::cout << (report.eulerian ? "eulerian" : "not eulerian");
    if (report.violation) {
      const auto& v = *report.violation;
      std::cout << ": interval [(" << v.lower_rank << "," << v.lower_index << "), (" << v.upper_rank << ","
                << v.upper_index << ")] has " << v.even_count << " even, " << v.odd_count << " odd";
    }
    std::cout << '\n';
  } else {
    emit(doc);
  }
  return report.eulerian ? 0 : kExitCheckFailed;
}

int cmd_check_inequality(const Options& o, const std::string& arg, bool all, const std::string& t_text,
                         const std::string& v_text) {
  const FlagVector f = flag_vector(load_argument(arg));
  const LVector l = l_vector(f);
  std::vector<std::pair<RankSubset, RankSubset>> pairs;
  if (all) {
    pairs = inequality_pairs(f.n);
  } else {
    if (t_text.empty() && v_text.empty()) throw InvalidArgument("check-inequality needs --all or --T/--V");
    pairs.emplace_back(parse_subset(f.n, t_text), parse_subset(f.n, v_text));
  }
  Json rows = Json::array();
  bool nonneg = true;
  for (const auto& [t, v] : pairs) {
    const BigInt ff = inequality_f_form(f, t, v);
    const Rational lf = inequality_l_form(l, t, v);
    const bool ok = ff >= 0 && lf >= 0;
    nonneg = nonneg && ok;
    if (table(o)) {
      std::cout << "T=" << t.to_string() << "\tV=" << v.to_string() << "\tf=" << ff << "\tL=" << to_string(lf)
                << (ok ? "" : "\tNEGATIVE") << '\n';
    } else if (!all || !ok) {
      rows.push_back(Json{{"T", to_json(t)}, {"V", to_json(v)}, {"f_form", ff.str()}, {"l_form", to_string(lf)}});
    }
  }
  if (!table(o)) {
    emit(Json{{"pairs_checked", pairs.size()}, {"nonnegative", nonneg}, {all ? "negative" : "results", rows}});
  }
  return nonneg ? 0 : kExitCheckFailed;
}

int cmd_limit_l(const Options& o, int n, const std::string& spec) {
  if (n < 1) throw InvalidArgument("--n must be at least 1");
  const LimitLVector l = limit_l_vector(parse_intervals(n, spec), o.max_intervals);
  if (table(o)) {
    for (const auto& [mask, v] : l.entries) std::cout << RankSubset(n, mask).to_string() << '\t' << v << '\n';
  } else {
    emit(to_json(l));
  }
  return 0;
}

int cmd_classify(const Options& o, const std::string& word) {
  const CdWord w(word);
  const WordClass wc = classify_word(w);
  const Json doc = classification_json(w, wc);
  if (table(o)) {
    std::cout << w.letters() << '\t' << to_string(wc.tag);
    if (wc.witness) std::cout << "\twitness " << wc.witness->subword.letters() << " at " << wc.witness->offset;
    std::cout << '\n';
  } else {
    emit(doc);
  }
  return 0;
}

int cmd_certificate(const Options& o, const std::string& word) {
  const CdWord w(word);
  const WordClass wc = classify_word(w);
  if (!wc.certificate) throw InvalidArgument("word " + word + " is " + to_string(wc.tag) + "; no certificate");
  if (table(o)) {
    const auto& c = *wc.certificate;
    std::cout << "S=" << c.s.to_string() << "\tT=" << c.t.to_string() << "\tV=" << c.v.to_string() << '\n';
  } else {
    emit(certificate_json(w, wc));
  }
  return 0;
}

int cmd_witness(const Options& o, const std::string& word, std::int64_t big_n, const std::string& out) {
  if (big_n < 1) throw InvalidArgument("--N must be at least 1");
  const NegativeWitness wit = negative_witness(CdWord(word), static_cast<std::uint64_t>(big_n));
  if (!out.empty()) save_poset(wit.poset, out);
  if (table(o)) {
    std::cout << word << "\tbase " << wit.base << "\tprefix " << wit.prefix_degree << "\tsuffix " << wit.suffix_degree
              << "\tcoefficient " << wit.coefficient << '\n';
  } else {
    emit(Json{{"word", word},
              {"witness", wit.bad.subword.letters()},
              {"witness_offset", wit.bad.offset},
              {"base", wit.base},
              {"prefix_degree", wit.prefix_degree},
              {"suffix_degree", wit.suffix_degree},
              {"N", big_n},
              {"elements", wit.poset.element_count()},
              {"coefficient", wit.coefficient.str()}});
  }
  return 0;
}

int cmd_verify(const Options& o, const std::string& suite) {
  std::vector<std::string> names;
  if (suite == "all") {
    names = suite_names();
  } else {
    names = {suite};
  }
  bool passed = true;
  Json docs = Json::array();
  for (const auto& name : names) {
    const SuiteResult res = run_suite(name);
    passed = passed && res.passed;
    if (table(o)) {
      std::cout << "== " << res.name << " (criterion " << res.criterion << "): " << res.title << '\n';
      for (const auto& row : res.rows) std::cout << "  " << row << '\n';
      for (const auto& note : res.notes) std::cout << "  note: " << note << '\n';
      std::cout << "  " << (res.passed ? "PASS" : "FAIL") << '\n';
    } else {
      docs.push_back(Json{{"suite", res.name}, {"criterion", res.criterion}, {"title", res.title},
                          {"passed", res.passed}, {"rows", res.rows}, {"notes", res.notes}});
    }
  }
  if (!table(o)) emit(names.size() == 1 ? docs.front() : docs);
  return passed ? 0 : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eulerian posets, flag vectors and cd-indices"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opts;
  app.add_option("--format", opts.format, "Output rendering")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--max-elements", opts.max_elements, "Element budget for constructions");
  app.add_option("--max-intervals", opts.max_intervals, "Interval budget for limit L-vectors");

  std::string expr, poset, out, word, suite, t_text, v_text, intervals;
  bool all = false;
  int n = 0;
  std::int64_t big_n = 1;
  std::function<int()> action;

  auto* build = app.add_subcommand("build", "Evaluate a construction expression to poset JSON");
  build->add_option("EXPR", expr)->required();
  build->add_option("-o,--output", out, "Write the poset to FILE");
  build->callback([&] { action = [&] { return cmd_build(opts, expr, out); }; });

  auto poset_cmd = [&](const std::string& name, const std::string& help, int (*fn)(const Options&, const std::string&)) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("POSET", poset, "Poset JSON file or construction expression")->required();
    sub->callback([&, fn] { action = [&, fn] { return fn(opts, poset); }; });
    return sub;
  };
  poset_cmd("flags", "Flag f-vector", cmd_flags);
  poset_cmd("cd-index", "cd-index", cmd_cd_index);
  poset_cmd("l-vector", "L-vector (ce-index coefficients)", cmd_l_vector);
  poset_cmd("check-eulerian", "Exhaustive Eulerian test", cmd_check_eulerian);

  auto* ineq = app.add_subcommand("check-inequality", "Evaluate both forms of the inequality lemma");
  ineq->add_option("POSET", poset)->required();
  auto* all_flag = ineq->add_flag("--all", all, "All valid (T, V) pairs");
  ineq->add_option("--T", t_text, "Rank list, e.g. 1,3")->excludes(all_flag);
  ineq->add_option("--V", v_text, "Rank list")->excludes(all_flag);
  ineq->callback([&] { action = [&] { return cmd_check_inequality(opts, poset, all, t_text, v_text); }; });

  auto* limit = app.add_subcommand("limit-l", "Limit L-vector of an interval system");
  limit->add_option("--n", n)->required();
  limit->add_option("--intervals", intervals, "JSON list, e.g. [[1,2],[3,4]]")->required();
  limit->callback([&] { action = [&] { return cmd_limit_l(opts, n, intervals); }; });

  auto* classify = app.add_subcommand("classify", "Sign class of a cd-word");
  classify->add_option("WORD", word)->required();
  classify->callback([&] { action = [&] { return cmd_classify(opts, word); }; });

  auto* cert = app.add_subcommand("certificate", "Nonnegativity certificate (S, T, V)");
  cert->add_option("WORD", word)->required();
  cert->callback([&] { action = [&] { return cmd_certificate(opts, word); }; });

  auto* wit = app.add_subcommand("witness", "Poset with a negative coefficient for a Part3 word");
  wit->add_option("WORD", word)->required();
  wit->add_option("--N", big_n, "Family parameter")->required();
  wit->add_option("-o,--output", out, "Write the witness poset to FILE");
  wit->callback([&] { action = [&] { return cmd_witness(opts, word, big_n, out); }; });

  auto* verify = app.add_subcommand("verify", "Run a reproduction suite");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify->add_option("SUITE", suite)->required()->check(CLI::IsMember(suites));
  verify->callback([&] { action = [&] { return cmd_verify(opts, suite); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  set_element_budget(opts.max_elements);
  try {
    return action();
  } catch (const NotCdExpressible& e) {
    std::cerr << "not cd-expressible: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const SyntaxError& e) {
    std::cerr << "syntax error " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
