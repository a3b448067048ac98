#include "cgt/cli.hpp"

#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cgt/constructions.hpp"
#include "cgt/group.hpp"
#include "cgt/report.hpp"
#include "cgt/verbal.hpp"
#include "cgt/verify.hpp"
#include "cgt/word.hpp"

namespace cgt {

namespace {

using nlohmann::ordered_json;

struct CommonOpts {
  std::string group_spec;
  std::string word_text;
  int m = 0;
  bool json = false;
  long long max_tuples = 100'000'000;
  long long max_order = FiniteGroup::kDefaultOrderCap;
  std::optional<long long> sample;
  std::uint64_t seed = 12345;
  int threads = 0;

  EnumerationBudget budget() const {
    EnumerationBudget b;
    b.max_tuples = max_tuples;
    b.sample = sample;
    b.seed = seed;
    b.threads = threads;
    return b;
  }
  BuildOptions build() const {
    BuildOptions o;
    o.max_order = max_order;
    return o;
  }
};

int parse_element(const FiniteGroup& g, const std::string& text) {
  if (!text.empty() && text[0] == '(') {
    if (g.backend() != Backend::Permutation)
      throw InvalidArgumentError("cycle notation needs a permutation group, " + g.name() +
                                 " uses a Cayley table");
    auto images = parse_cycle_notation(text, g.degree());
    auto id = g.find_permutation(images);
    if (!id) throw InvalidArgumentError("permutation " + text + " is not in " + g.name());
    return *id;
  }
  try {
    std::size_t used = 0;
    int id = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return g.element(id).id;
  } catch (const std::invalid_argument&) {
    throw InvalidArgumentError("cannot parse element '" + text + "' (use an id or cycle notation)");
  } catch (const std::out_of_range&) {
    throw InvalidArgumentError("element id out of range: " + text);
  }
}

ordered_json element_json(const FiniteGroup& g, int id) {
  ordered_json j;
  j["id"] = id;
  j["label"] = g.label(id);
  return j;
}

std::string describe_backend(Backend b) {
  return b == Backend::CayleyTable ? "cayley-table" : "permutation";
}

void print_report(const VerificationReport& rep, bool json, std::ostream& out) {
  if (json)
    out << rep.to_json().dump() << '\n';
  else
    out << rep.to_text() << '\n';
}

int cmd_describe(const CommonOpts& opts, std::ostream& out) {
  GroupPtr g = build_group(opts.group_spec, opts.build());
  Subgroup z = center(*g);
  if (opts.json) {
    ordered_json j;
    j["name"] = g->name();
    j["order"] = g->order();
    j["backend"] = describe_backend(g->backend());
    if (g->backend() == Backend::Permutation) j["degree"] = g->degree();
    j["identity"] = g->identity_id();
    j["abelian"] = g->is_abelian();
    j["center_order"] = z.order();
    if (g->order() <= 64) {
      ordered_json elems = ordered_json::array();
      for (int i = 0; i < g->order(); ++i) elems.push_back(element_json(*g, i));
      j["elements"] = elems;
    }
    out << j.dump() << '\n';
  } else {
    out << g->name() << ": order " << g->order() << ", " << describe_backend(g->backend());
    if (g->backend() == Backend::Permutation) out << " on " << g->degree() << " points";
    out << ", identity id " << g->identity_id() << (g->is_abelian() ? ", abelian" : "")
        << ", center of order " << z.order() << '\n';
    if (g->order() <= 64)
      for (int i = 0; i < g->order(); ++i) out << "  " << i << ": " << g->label(i) << '\n';
  }
  return 0;
}

int cmd_eval(const CommonOpts& opts, const std::vector<std::string>& assigns, std::ostream& out) {
  GroupPtr g = build_group(opts.group_spec, opts.build());
  Word w = Word::parse(opts.word_text);
  std::map<int, GroupElement> assignment;
  for (const auto& a : assigns) {
    auto eq = a.find('=');
    if (eq == std::string::npos || a.size() < 3 || a[0] != 'x')
      throw InvalidArgumentError("assignment must look like x1=<id or cycles>, got '" + a + "'");
    int var = 0;
    try {
      var = std::stoi(a.substr(1, eq - 1));
    } catch (const std::exception&) {
      throw InvalidArgumentError("bad variable in assignment '" + a + "'");
    }
    assignment[var] = GroupElement{g.get(), parse_element(*g, a.substr(eq + 1))};
  }
  GroupElement result = w.evaluate(*g, assignment);
  if (opts.json) {
    ordered_json j;
    j["group"] = g->name();
    j["word"] = w.str();
    j["value"] = element_json(*g, result.id);
    out << j.dump() << '\n';
  } else {
    out << result.id << "  (" << g->label(result.id) << ")\n";
  }
  return 0;
}

int cmd_values(const CommonOpts& opts, bool starred, std::ostream& out) {
  GroupPtr g = build_group(opts.group_spec, opts.build());
  Word w = Word::parse(opts.word_text);
  ValueSet vs = w_values(*g, w, opts.budget());
  if (starred) vs = star(vs);
  if (opts.json) {
    ordered_json j;
    j["group"] = g->name();
    j["word"] = w.str();
    j["starred"] = vs.starred;
    j["exact"] = vs.exact;
    j["count"] = vs.values.size();
    j["values"] = vs.values;
    out << j.dump() << '\n';
  } else {
    out << vs.values.size() << (starred ? " starred" : "") << " value(s)"
        << (vs.exact ? "" : " (sampled, inexact)") << ":";
    for (int v : vs.values) out << ' ' << v;
    out << '\n';
    for (int v : vs.values) out << "  " << v << ": " << g->label(v) << '\n';
  }
  return 0;
}

int cmd_verbal(const CommonOpts& opts, std::ostream& out) {
  GroupPtr g = build_group(opts.group_spec, opts.build());
  Word w = Word::parse(opts.word_text);
  Subgroup sub = verbal_subgroup(*g, w, opts.budget());
  if (opts.json) {
    ordered_json j;
    j["group"] = g->name();
    j["word"] = w.str();
    j["order"] = sub.order();
    j["elements"] = sub.elements();
    out << j.dump() << '\n';
  } else {
    out << "verbal subgroup of order " << sub.order() << " (index "
        << g->order() / sub.order() << "):";
    for (int v : sub.elements()) out << ' ' << v;
    out << '\n';
  }
  return 0;
}

int cmd_chain(const CommonOpts& opts, std::ostream& out) {
  GroupPtr g = build_group(opts.group_spec, opts.build());
  Word w = Word::parse(opts.word_text);
  VerbalChain chain = iterated_commutator_chain(*g, w, opts.m, opts.budget());
  if (opts.json) {
    ordered_json j;
    j["group"] = g->name();
    j["word"] = w.str();
    j["m"] = opts.m;
    ordered_json levels = ordered_json::array();
    for (const auto& sub : chain.chain) {
      ordered_json level;
      level["order"] = sub.order();
      level["elements"] = sub.elements();
      levels.push_back(level);
    }
    j["chain"] = levels;
    out << j.dump() << '\n';
  } else {
    for (std::size_t k = 0; k < chain.chain.size(); ++k)
      out << "V" << k << ": order " << chain.chain[k].order() << '\n';
  }
  return 0;
}

int cmd_width(const CommonOpts& opts, std::ostream& out) {
  GroupPtr g = build_group(opts.group_spec, opts.build());
  Word w = Word::parse(opts.word_text);
  int width = word_width(*g, w, opts.budget());
  if (opts.json) {
    ordered_json j;
    j["group"] = g->name();
    j["word"] = w.str();
    j["width"] = width;
    out << j.dump() << '\n';
  } else {
    out << width << '\n';
  }
  return 0;
}

int cmd_decompose(const CommonOpts& opts, const std::string& tuple_text, int random_count,
                  std::ostream& out) {
  GroupPtr g = build_group(opts.group_spec, opts.build());
  Word w = Word::parse(opts.word_text);
  const int len = w.arity() + opts.m;

  std::vector<std::vector<int>> tuples;
  if (!tuple_text.empty()) {
    std::vector<int> tuple;
    std::stringstream ss(tuple_text);
    std::string part;
    while (std::getline(ss, part, ',')) tuple.push_back(parse_element(*g, part));
    if (static_cast<int>(tuple.size()) != len)
      throw InvalidArgumentError("tuple needs " + std::to_string(len) + " elements");
    tuples.push_back(std::move(tuple));
  } else {
    std::mt19937_64 rng(opts.seed);
    for (int i = 0; i < random_count; ++i) {
      std::vector<int> tuple(static_cast<std::size_t>(len));
      for (int& id : tuple) id = static_cast<int>(rng() % g->order());
      tuples.push_back(std::move(tuple));
    }
  }

  bool all_ok = true;
  for (const auto& tuple : tuples) {
    Decomposition d = decompose_commutator_value(*g, w, tuple, opts.m);
    bool ok = verify_decomposition(*g, w, d);
    all_ok = all_ok && ok;
    if (opts.json) {
      ordered_json j;
      j["group"] = g->name();
      j["word"] = w.str();
      j["m"] = opts.m;
      j["tuple"] = tuple;
      j["target"] = element_json(*g, d.target);
      ordered_json factors = ordered_json::array();
      for (const auto& f : d.factors) {
        ordered_json fj;
        fj["element"] = element_json(*g, f.element);
        fj["sign"] = f.sign;
        fj["witness"] = f.witness;
        factors.push_back(fj);
      }
      j["factors"] = factors;
      j["verified"] = ok;
      out << j.dump() << '\n';
    } else {
      out << "target " << d.target << " (" << g->label(d.target) << ") = product of "
          << d.factors.size() << " starred value(s):\n";
      for (const auto& f : d.factors) {
        out << "  " << f.element << " (" << g->label(f.element) << ")  "
            << (f.sign > 0 ? "value at" : "inverse of value at");
        for (int t : f.witness) out << ' ' << t;
        out << '\n';
      }
      out << (ok ? "  verified\n" : "  VERIFICATION FAILED\n");
    }
  }
  return all_ok ? 0 : 1;
}

struct VerifyArgs {
  std::string check;
  int tuples = 200;
  int max_m = 4;
  int y_sample = 512;
  std::vector<int> t_values = {1, 3, 5, 7, 9};
  std::optional<int> y_id;
  std::optional<int> b_id;
};

int cmd_verify(const CommonOpts& opts, const VerifyArgs& args, std::ostream& out) {
  std::vector<VerificationReport> reports;

  if (args.check == "wreath-orbit") {
    std::vector<int> ms = {1, 2};
    if (opts.m > 0) ms = {opts.m};
    reports = check_wreath_orbit_growth(args.t_values, ms, opts.build());
  } else {
    GroupPtr g = build_group(opts.group_spec, opts.build());
    if (args.check == "axioms") {
      reports.push_back(check_group_axioms(*g, opts.group_spec, opts.seed));
    } else if (args.check == "commutator-identity") {
      if (args.y_id && args.b_id) {
        // single-instance mode; InapplicableError propagates to exit code 4
        bool ok = iterated_commutator_identity(*g, g->element(*args.y_id).id,
                                               g->element(*args.b_id).id, opts.m);
        VerificationReport rep;
        rep.check = "commutator-identity";
        rep.group = opts.group_spec;
        rep.m = opts.m;
        rep.set("pairs", 1);
        rep.bound = "closed form equals literal iteration";
        rep.observed = ok ? 0 : 1;
        rep.pass = ok;
        reports.push_back(rep);
      } else {
        reports.push_back(check_commutator_identity(*g, opts.group_spec, args.max_m));
      }
    } else {
      if (opts.word_text.empty()) throw InvalidArgumentError("--word is required for this check");
      Word w = Word::parse(opts.word_text);
      VerifySession session(g, opts.group_spec, opts.budget());
      if (args.check == "decomposition") {
        reports.push_back(check_decomposition(session, w, opts.m, args.tuples, opts.seed));
      } else if (args.check == "conjugacy-bound") {
        reports.push_back(check_conjugacy_bound(session, w, opts.m));
      } else if (args.check == "central-exponent") {
        reports.push_back(check_central_exponent(session, w, opts.m));
      } else if (args.check == "fc-embedding") {
        reports.push_back(check_fc_embedding(session, w, opts.m, args.y_sample));
      } else if (args.check == "bfc-embedding") {
        reports.push_back(check_bfc_embedding(session, w, opts.m));
      } else if (args.check == "width-order-bound") {
        reports.push_back(check_width_order_bound(session, w, opts.m));
      } else {
        throw InvalidArgumentError(
            "unknown check '" + args.check +
            "' (expected: axioms, decomposition, conjugacy-bound, central-exponent, "
            "fc-embedding, bfc-embedding, width-order-bound, commutator-identity, wreath-orbit)");
      }
    }
  }

  bool all = true;
  for (const auto& rep : reports) {
    print_report(rep, opts.json, out);
    all = all && rep.pass;
  }
  return all ? 0 : 1;
}

struct SuiteScope {
  std::vector<std::string> groups;
  std::vector<std::string> words;
  std::vector<int> m_values;
};

int cmd_suite(const CommonOpts& opts, const std::string& battery, const SuiteScope& scope,
              std::ostream& out) {
  if (battery != "default")
    throw InvalidArgumentError("unknown battery '" + battery + "' (only 'default' exists)");
  SuiteConfig config;
  config.budget = opts.budget();
  config.build = opts.build();
  if (!scope.groups.empty()) config.groups = scope.groups;
  if (!scope.words.empty()) config.words = scope.words;
  if (!scope.m_values.empty()) config.m_values = scope.m_values;

  SuiteResult result = run_suite(config, [&](const VerificationReport& rep) {
    print_report(rep, opts.json, out);
  });
  for (const auto& skip : result.skips) {
    if (opts.json) {
      ordered_json j;
      j["skipped"] = ordered_json{{"check", skip.check},
                                  {"group", skip.group},
                                  {"word", skip.word},
                                  {"m", skip.m},
                                  {"reason", skip.reason}};
      out << j.dump() << '\n';
    } else {
      out << "SKIP " << skip.check << " group=" << skip.group << " word=" << skip.word
          << " m=" << skip.m << " (" << skip.reason << ")\n";
    }
  }
  long long passed = 0;
  for (const auto& rep : result.reports) passed += rep.pass ? 1 : 0;
  if (opts.json) {
    ordered_json j;
    j["summary"] = ordered_json{{"reports", result.reports.size()},
                                {"passed", passed},
                                {"skipped", result.skips.size()},
                                {"all_pass", result.all_pass}};
    out << j.dump() << '\n';
  } else {
    out << (result.all_pass ? "OK" : "FAILED") << ": " << passed << "/" << result.reports.size()
        << " checks passed, " << result.skips.size() << " skipped\n";
  }
  return result.all_pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite-group word values, verbal subgroups and verification checks"};
  app.require_subcommand(1);

  CommonOpts opts;
  app.add_flag("--json", opts.json, "emit JSON instead of text");
  app.add_option("--max-tuples", opts.max_tuples, "exhaustive enumeration budget");
  app.add_option("--sample", opts.sample, "sample size for over-budget enumerations (inexact)");
  app.add_option("--max-order", opts.max_order, "group order cap for constructions");
  app.add_option("--seed", opts.seed, "seed for sampled tuples and checks");
  app.add_option("--threads", opts.threads, "enumeration worker threads (0 = auto)");

  auto add_group = [&](CLI::App* cmd, bool required = true) {
    auto* o = cmd->add_option("--group,-g", opts.group_spec,
                              "group spec (C12, D8, S4, A5, Q8, C3xC3, wr2(C3), @file.json)");
    if (required) o->required();
  };
  auto add_word = [&](CLI::App* cmd, bool required = true) {
    auto* o = cmd->add_option("--word,-w", opts.word_text, "word, e.g. \"[x1,x2]\"");
    if (required) o->required();
  };
  auto add_m = [&](CLI::App* cmd) {
    cmd->add_option("-m", opts.m, "number of appended commutator variables")
        ->check(CLI::NonNegativeNumber);
  };

  auto* group_cmd = app.add_subcommand("group", "group inspection");
  group_cmd->fallthrough();
  auto* describe = group_cmd->add_subcommand("describe", "print order, backend, center, elements");
  describe->fallthrough();
  add_group(describe);
  group_cmd->require_subcommand(1);

  std::vector<std::string> assigns;
  auto* eval = app.add_subcommand("eval", "evaluate a word at an assignment");
  eval->fallthrough();
  add_group(eval);
  add_word(eval);
  eval->add_option("--assign,-a", assigns, "binding x<i>=<id or cycles>, repeatable");

  auto* values = app.add_subcommand("values", "enumerate the word's value set");
  values->fallthrough();
  add_group(values);
  add_word(values);
  bool starred = false;
  values->add_flag("--star", starred, "adjoin inverses (G_w*)");

  auto* verbal = app.add_subcommand("verbal", "verbal subgroup generated by the values");
  verbal->fallthrough();
  add_group(verbal);
  add_word(verbal);

  auto* chain = app.add_subcommand("chain", "iterated commutator chain w(G), [w(G),G], ...");
  chain->fallthrough();
  add_group(chain);
  add_word(chain);
  add_m(chain);

  auto* width = app.add_subcommand("width", "width of the word in the group");
  width->fallthrough();
  add_group(width);
  add_word(width);

  std::string tuple_text;
  int random_count = 1;
  auto* decompose = app.add_subcommand("decompose", "decompose a v-value into starred w-values");
  decompose->fallthrough();
  add_group(decompose);
  add_word(decompose);
  add_m(decompose);
  decompose->add_option("--tuple", tuple_text, "comma-separated assignment ids");
  decompose->add_option("--random", random_count, "number of random tuples instead of --tuple");

  VerifyArgs vargs;
  auto* verify = app.add_subcommand("verify", "run one named check");
  verify->fallthrough();
  verify->add_option("check", vargs.check, "check name")->required();
  add_group(verify, false);
  add_word(verify, false);
  add_m(verify);
  verify->add_option("--tuples", vargs.tuples, "random tuples for decomposition");
  verify->add_option("--max-m", vargs.max_m, "largest m for commutator-identity");
  verify->add_option("--y-sample", vargs.y_sample, "y sample size for fc-embedding");
  verify->add_option("--t", vargs.t_values, "odd t values for wreath-orbit");
  int y_id = -1, b_id = -1;
  verify->add_option("--y", y_id, "element id for single commutator-identity instance");
  verify->add_option("--b", b_id, "involution id for single commutator-identity instance");

  std::string battery = "default";
  SuiteScope scope;
  auto* suite = app.add_subcommand("suite", "run the full verification battery");
  suite->fallthrough();
  suite->add_option("--battery", battery, "battery name (default)");
  suite->add_option("--groups", scope.groups, "restrict the battery to these group specs");
  suite->add_option("--words", scope.words, "restrict the battery to these words");
  suite->add_option("--m-values", scope.m_values, "restrict the battery to these m values");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (group_cmd->parsed() && describe->parsed()) return cmd_describe(opts, out);
    if (eval->parsed()) return cmd_eval(opts, assigns, out);
    if (values->parsed()) return cmd_values(opts, starred, out);
    if (verbal->parsed()) return cmd_verbal(opts, out);
    if (chain->parsed()) return cmd_chain(opts, out);
    if (width->parsed()) return cmd_width(opts, out);
    if (decompose->parsed()) return cmd_decompose(opts, tuple_text, random_count, out);
    if (verify->parsed()) {
      if (y_id >= 0) vargs.y_id = y_id;
      if (b_id >= 0) vargs.b_id = b_id;
      if (!vargs.check.empty() && vargs.check != "wreath-orbit" && opts.group_spec.empty())
        throw InvalidArgumentError("--group is required for check '" + vargs.check + "'");
      return cmd_verify(opts, vargs, out);
    }
    if (suite->parsed()) return cmd_suite(opts, battery, scope, out);
    err << "error: no subcommand\n";
    return 2;
  } catch (const WordParseError& e) {
    err << "word parse error: " << e.what() << '\n';
    if (!opts.word_text.empty() && e.position <= opts.word_text.size()) {
      err << "  " << opts.word_text << '\n' << "  " << std::string(e.position, ' ') << "^\n";
    }
    return 2;
  } catch (const BudgetError& e) {
    err << "budget error: " << e.what() << '\n';
    return 3;
  } catch (const OrderCapError& e) {
    err << "order cap error: " << e.what() << '\n';
    return 3;
  } catch (const InapplicableError& e) {
    err << e.what() << '\n';
    return 4;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, out, err);
}

}  // namespace cgt
