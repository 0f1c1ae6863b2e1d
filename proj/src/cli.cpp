#include "goedel/cli.hpp"

#include <algorithm>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "goedel/corpus.hpp"
#include "goedel/errors.hpp"
#include "goedel/generate.hpp"
#include "goedel/loeb.hpp"
#include "goedel/registry.hpp"
#include "goedel/report.hpp"
#include "goedel/rewriter.hpp"
#include "goedel/suites.hpp"
#include "goedel/syntax.hpp"

namespace goedel {

namespace {

struct Options {
  std::string numbering = "gamma";
  std::string from, to;
  std::string predicate;
  std::string corpus = std::string(GOEDEL_SOURCE_DIR) + "/corpus/base.txt";
  std::string out;
  std::string suite;
  std::string kind = "fragment";
  std::vector<std::string> positional;
  std::uint64_t budget = Budget{}.max_instances;
  std::uint64_t count = 100;
  std::uint64_t seed = 1;
  bool no_timestamp = false;
  bool trace = false;
};

Budget budget_of(const Options& o) {
  Budget b;
  b.max_instances = o.budget;
  return b;
}

// Registry for one-shot commands: split numberings order the given corpus
// first when the file exists.
Registry command_registry(const Options& o) {
  Corpus c;
  try {
    c = load_corpus(o.corpus);
  } catch (const IoError&) {
  } catch (const CorpusParseError&) {
    // a one-shot command still works, split codes just follow the plain order
  }
  return suite_registry(c, budget_of(o));
}

Nat parse_code(const std::string& s) {
  try {
    return parse_nat(s);
  } catch (const std::exception&) {
    throw SyntaxError("expected a natural number, got '" + s + "'", 0);
  }
}

int print_report(const Report& r, const Options& o, std::ostream& out) {
  Report copy = r;
  if (!o.no_timestamp) copy.timestamp = utc_timestamp();
  if (!o.out.empty()) emit_report(copy, o.out);
  Summary s = r.summary();
  out << r.suite << ": pass " << s.pass << ", fail " << s.fail << ", skipped " << s.skipped
      << ", oracle-incomplete " << s.oracle_incomplete << "\n";
  for (const auto& c : r.checks)
    if (c.status == Status::Fail) out << "FAIL " << c.id << "\n";
  return s.fail == 0 ? 0 : 1;
}

int verify(const Options& o, std::ostream& out) {
  Corpus corpus = load_corpus(o.corpus);
  Registry reg = suite_registry(corpus, budget_of(o));
  const std::string& s = o.suite;
  Report r;
  if (s == "simulation") {
    r = suite_simulation(corpus, reg);
  } else if (s == "equivalence") {
    if (o.positional.size() == 1 || o.positional.size() > 2)
      throw CLI::ValidationError("verify equivalence takes zero or two numbering names");
    if (o.positional.size() == 2)
      r = suite_equivalence(corpus, reg, o.positional[0], o.positional[1]);
    else
      r = suite_equivalence(corpus, reg);
  } else if (s == "loeb") {
    // --predicate selects one pair; without it every shipped pair runs
    r = o.predicate.empty() ? suite_loeb(corpus, reg) : suite_loeb(corpus, reg, o.numbering, o.predicate);
  } else if (s == "deviant") {
    r = suite_deviant(corpus, reg);
  } else if (s == "diag") {
    r = suite_diag(corpus, reg);
  } else {
    r = suite_all(corpus, reg);
  }
  return print_report(r, o, out);
}

int corpus_check(const Options& o, std::ostream& out) {
  Corpus c = load_corpus(o.corpus);
  std::map<std::string, std::size_t> tags;
  std::size_t sentences = 0;
  for (const auto& e : c.entries) {
    for (const auto& t : e.tags) ++tags[t];
    if (is_sentence(e.expr)) ++sentences;
  }
  out << c.entries.size() << " entries, " << sentences << " sentences\n";
  for (const auto& [t, n] : tags) out << t << ": " << n << "\n";
  return 0;
}

int corpus_generate(const Options& o, std::ostream& out) {
  Oracle oracle(budget_of(o));
  std::vector<Expr> items;
  if (o.kind == "fragment")
    items = fragment_sentences(o.count, o.seed, oracle);
  else if (o.kind == "closed")
    items = closed_items(o.count, o.seed, oracle);
  else if (o.kind == "mixed")
    items = mixed_expressions(o.count, o.seed, oracle);
  else
    throw CLI::ValidationError("--kind must be fragment, closed or mixed");
  for (const auto& e : items) out << to_string(e) << "\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Goedel numberings, semiring rewriting and Loeb-condition checks", "goedelsim"};
  app.require_subcommand(1);
  auto add_budget = [&](CLI::App* c) {
    c->add_option("--budget", o.budget, "instances per quantifier block for the oracle");
  };

  std::string text, text2;
  auto* encode = app.add_subcommand("encode", "code of an expression");
  encode->add_option("--numbering", o.numbering);
  encode->add_option("--corpus", o.corpus, "corpus listed first by split numberings");
  encode->add_option("expr", text)->required();
  add_budget(encode);

  auto* decode = app.add_subcommand("decode", "expression with a given code");
  decode->add_option("--numbering", o.numbering);
  decode->add_option("--corpus", o.corpus);
  decode->add_option("code", text)->required();
  add_budget(decode);

  auto* translate_cmd = app.add_subcommand("translate", "carry a code from one numbering to another");
  translate_cmd->add_option("--from", o.from)->required();
  translate_cmd->add_option("--to", o.to)->required();
  translate_cmd->add_option("--corpus", o.corpus);
  translate_cmd->add_option("code", text)->required();
  add_budget(translate_cmd);

  auto* normalize = app.add_subcommand("normalize", "semiring normal form of a term");
  normalize->add_option("term", text)->required();
  normalize->add_flag("--trace", o.trace, "print every rewrite step");

  auto* decide_eq = app.add_subcommand("decide-eq", "is s = t provable over commutative semirings");
  decide_eq->add_option("s", text)->required();
  decide_eq->add_option("t", text2)->required();

  auto* classify_cmd = app.add_subcommand("classify", "provable, refutable, independent or unknown");
  classify_cmd->add_option("expr", text)->required();
  add_budget(classify_cmd);

  auto* predicate = app.add_subcommand("predicate", "evaluate a code predicate");
  predicate->add_option("name", o.predicate)->required();
  predicate->add_option("code", text)->required();
  predicate->add_option("--numbering", o.numbering, "numbering for the pr predicate");
  predicate->add_option("--corpus", o.corpus);
  add_budget(predicate);

  auto* fixed = app.add_subcommand("fixed-point", "diagonal fixed point of a predicate");
  fixed->add_option("--numbering", o.numbering);
  fixed->add_option("--predicate", o.predicate)->required();
  add_budget(fixed);

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("suite", o.suite)
      ->required()
      ->check(CLI::IsMember({"simulation", "equivalence", "loeb", "deviant", "diag", "all"}));
  verify_cmd->add_option("numberings", o.positional, "two numberings for verify equivalence");
  verify_cmd->add_option("--corpus", o.corpus);
  verify_cmd->add_option("--out", o.out, "write the JSON report here");
  verify_cmd->add_flag("--no-timestamp", o.no_timestamp);
  verify_cmd->add_option("--numbering", o.numbering);
  verify_cmd->add_option("--predicate", o.predicate);
  add_budget(verify_cmd);

  auto* report_cmd = app.add_subcommand("report", "run every suite and write the JSON report");
  report_cmd->add_option("--out", o.out)->required();
  report_cmd->add_option("--corpus", o.corpus);
  report_cmd->add_flag("--no-timestamp", o.no_timestamp);
  add_budget(report_cmd);

  auto* corpus_cmd = app.add_subcommand("corpus", "corpus management");
  corpus_cmd->require_subcommand(1);
  auto* corpus_check_cmd = corpus_cmd->add_subcommand("check", "parse a corpus and count entries");
  corpus_check_cmd->add_option("file", o.corpus)->required();
  auto* corpus_gen = corpus_cmd->add_subcommand("generate", "print generated corpus lines");
  corpus_gen->add_option("--kind", o.kind, "fragment, closed or mixed");
  corpus_gen->add_option("--count", o.count);
  corpus_gen->add_option("--seed", o.seed);
  add_budget(corpus_gen);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);

    if (*encode) {
      Registry reg = command_registry(o);
      out << reg.numbering(o.numbering).encode(parse(text)) << "\n";
    } else if (*decode) {
      Registry reg = command_registry(o);
      out << to_string(reg.numbering(o.numbering).decode(parse_code(text))) << "\n";
    } else if (*translate_cmd) {
      Registry reg = command_registry(o);
      out << translate(reg.numbering(o.from), reg.numbering(o.to))(parse_code(text)) << "\n";
    } else if (*normalize) {
      auto nf = normal_form(parse(text));
      if (o.trace)
        for (const auto& s : nf.trace.steps) {
          std::string at = "root";
          for (std::size_t i = 0; i < s.position.size(); ++i)
            at = (i ? at + "." : std::string()) + std::to_string(s.position[i]);
          out << rule_name(s.rule) << " at " << at << ": " << to_string(s.before) << " -> "
              << to_string(s.after) << "  [" << s.weight_before << " -> " << s.weight_after
              << ", term " << s.term_weight_before << " -> " << s.term_weight_after << "]\n";
        }
      out << to_string(nf.term) << "\n";
    } else if (*decide_eq) {
      out << "provably-equal: " << (provably_equal(parse(text), parse(text2)) ? "true" : "false")
          << "\n";
    } else if (*classify_cmd) {
      auto c = Oracle(budget_of(o)).classify(parse(text));
      out << verdict_name(c.verdict) << "\n";
      if (c.witness) {
        out << "counterexample:";
        for (const auto& [x, v] : *c.witness) out << " " << to_string(x) << "=" << v;
        out << "\n";
      }
    } else if (*predicate) {
      Registry reg = command_registry(o);
      out << (reg.predicate(o.predicate, o.numbering).decide(parse_code(text)) ? "true" : "false")
          << "\n";
    } else if (*fixed) {
      Registry reg(Oracle(budget_of(o)));
      auto fp = fixed_point(reg.numbering(o.numbering), reg.predicate(o.predicate, o.numbering),
                            reg.oracle());
      out << "sentence: " << to_string(fp.sentence) << "\n"
          << "k: " << fp.k << "\n"
          << "code: " << fp.code << "\n"
          << "truth: " << (fp.truth ? "true" : "false") << "\n"
          << "predicate: " << (fp.predicate_value ? "true" : "false") << "\n";
      return fp.holds() ? 0 : 1;
    } else if (*verify_cmd) {
      return verify(o, out);
    } else if (*report_cmd) {
      o.suite = "all";
      return verify(o, out);
    } else if (*corpus_check_cmd) {
      return corpus_check(o, out);
    } else if (*corpus_gen) {
      return corpus_generate(o, out);
    }
    return 0;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const SyntaxError& e) {
    err << "syntax error: " << e.what() << "\n";
    return 2;
  } catch (const CorpusParseError& e) {
    err << "corpus error: " << e.what() << "\n";
    return 2;
  } catch (const UnknownName& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << e.kind() << ": " << e.what() << "\n";
    return 1;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace goedel
