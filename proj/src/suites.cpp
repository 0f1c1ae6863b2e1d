#include "goedel/suites.hpp"

#include <set>

#include "goedel/deviant.hpp"
#include "goedel/diag.hpp"
#include "goedel/errors.hpp"
#include "goedel/loeb.hpp"
#include "goedel/parallel.hpp"
#include "goedel/syntax.hpp"

namespace goedel {

using nlohmann::json;

namespace {

std::vector<Expr> sentences_of(const std::vector<Expr>& items) {
  std::vector<Expr> out;
  for (const auto& e : items)
    if (is_sentence(e)) out.push_back(e);
  return out;
}

const std::size_t kPairsPerSentence = 2;
const std::size_t kPsiChoices = 5;

std::vector<Expr> psi_choices(const std::vector<Expr>& sentences) {
  return {sentences.begin(), sentences.begin() + std::min(kPsiChoices, sentences.size())};
}

bool expected_incomplete(const std::exception_ptr& p) {
  try {
    std::rethrow_exception(p);
  } catch (const OracleIncomplete&) {
    return true;
  } catch (const CodeTooLarge&) {
    return true;
  } catch (const UnsupportedShape&) {
    return true;
  } catch (...) {
    return false;
  }
}

}  // namespace

std::vector<Expr> suite_order_prefix(const std::vector<Expr>& corpus) {
  std::vector<Expr> wanted;
  auto sentences = sentences_of(corpus);
  auto pairs = sentence_pairs(sentences, kPairsPerSentence);
  for (const auto& e : corpus) wanted.push_back(e);
  for (const auto& e : loeb_closure(pairs)) wanted.push_back(e);
  for (const auto& s : sentences) {
    wanted.push_back(Expr::neg(s));
    wanted.push_back(Expr::conj(s, Expr::neg(s)));
  }
  std::vector<Expr> out;
  std::set<Expr> seen;
  for (const auto& e : wanted)
    for (const auto& s : subexpressions(e, 8))
      if (seen.insert(s).second) out.push_back(s);
  return out;
}

Registry suite_registry(const Corpus& corpus, const Budget& budget) {
  auto declared = corpus.declared_independent();
  // Declared-independent sentences stop a split-true table from growing, so
  // they go last.
  std::vector<Expr> ordinary, held_back;
  for (const auto& e : suite_order_prefix(corpus.exprs()))
    (declared.count(e) ? held_back : ordinary).push_back(e);
  ordinary.insert(ordinary.end(), held_back.begin(), held_back.end());
  return Registry(Oracle(budget, declared), std::move(ordinary));
}

const std::vector<std::string>& simulation_numberings() { return Registry::numbering_names(); }

const std::vector<std::string>& equivalence_numberings() {
  static const std::vector<std::string> names = {"gamma", "diag", "twist", "split-provable"};
  return names;
}

// ---------------------------------------------------------------- simulation

Report suite_simulation(const Corpus& corpus, const Registry& reg) {
  Report r;
  r.suite = "simulation";
  auto items = corpus.exprs();
  for (const auto& name : simulation_numberings()) {
    std::string id = "simulation/" + name;
    if (items.empty()) {
      r.add(id, Status::Skipped, {{"reason", "empty corpus"}});
      continue;
    }
    Numbering n = reg.numbering(name);
    auto rep = verify_simulation(n, items);
    json missing = json::array();
    for (Op op : rep.missing_trackers) missing.push_back(keyword(op));
    json closed = json::array();
    for (Op op : n.closed_form_ops()) closed.push_back(keyword(op));
    json d = {{"corpus_size", rep.corpus_size},
              {"encoded", rep.encoded},
              {"injectivity_failures", rep.injectivity_failures},
              {"round_trip_failures", rep.round_trip_failures},
              {"in_image_failures", rep.in_image_failures},
              {"tracker_checks", rep.tracker_checks},
              {"tracker_failures", rep.tracker_failures},
              {"oracle_tracker_checks", rep.oracle_tracker_checks},
              {"oracle_tracker_failures", rep.oracle_tracker_failures},
              {"oracle_incomplete", rep.oracle_incomplete},
              {"closed_form_trackers", closed},
              {"missing_trackers", missing},
              {"failures", rep.failures}};
    Status s = !rep.passed() ? Status::Fail
               : rep.encoded == 0 ? Status::OracleIncomplete
                                  : Status::Pass;
    r.add(id, s, d);
  }
  // The one constructor each deviant numbering cannot track in closed form.
  for (auto [name, op] : {std::pair{"delta-neg", Op::Not}, std::pair{"delta-forall", Op::Forall}}) {
    auto closed = reg.numbering(name).closed_form_ops();
    bool absent = std::find(closed.begin(), closed.end(), op) == closed.end();
    bool rest = closed.size() == static_cast<std::size_t>(kOpCount - 1);
    r.add(std::string("simulation/") + name + "/closed-form-trackers",
          absent && rest ? Status::Pass : Status::Fail,
          {{"without_closed_form", keyword(op)}, {"closed_form_count", closed.size()}});
  }
  return r;
}

// ---------------------------------------------------------------- equivalence

namespace {

void add_equivalence(Report& r, const Numbering& a, const Numbering& b,
                     const std::vector<Expr>& items) {
  std::string id = "equivalence/" + a.name() + "~" + b.name();
  if (items.empty()) {
    r.add(id, Status::Skipped, {{"reason", "empty corpus"}});
    return;
  }
  auto rep = verify_equivalence(a, b, items);
  Status s = !rep.passed() ? Status::Fail
             : rep.oracle_incomplete == rep.corpus_size ? Status::OracleIncomplete
                                                        : Status::Pass;
  r.add(id, s,
        {{"corpus_size", rep.corpus_size},
         {"round_trip_failures", rep.round_trip_failures},
         {"oracle_incomplete", rep.oracle_incomplete},
         {"failures", rep.failures}});
}

}  // namespace

Report suite_equivalence(const Corpus& corpus, const Registry& reg, const std::string& a,
                         const std::string& b) {
  Report r;
  r.suite = "equivalence";
  auto items = corpus.exprs();
  if (!a.empty()) {
    add_equivalence(r, reg.numbering(a), reg.numbering(b), items);
    return r;
  }
  for (const auto& x : equivalence_numberings())
    for (const auto& y : equivalence_numberings())
      if (x != y) add_equivalence(r, reg.numbering(x), reg.numbering(y), items);
  return r;
}

// ---------------------------------------------------------------- loeb

namespace {

struct Shipped {
  std::string numbering, predicate;
};

const std::vector<Shipped>& shipped_loeb() {
  static const std::vector<Shipped> v = {
      {"delta-neg", "pr-neg"}, {"delta-forall", "tr-forall"}, {"delta-star", "pr-star"},
      {"gamma", "true"},       {"gamma", "pr"},               {"diag", "pr"},
      {"twist", "pr"},         {"split-provable", "pr"},
  };
  return v;
}

json loeb_details(const LoebReport& rep) {
  return {{"corpus_size", rep.corpus_size},
          {"loeb1", {{"checks", rep.loeb1_checks}, {"failures", rep.loeb1_failures}}},
          {"loeb2", {{"checks", rep.loeb2_checks}, {"failures", rep.loeb2_failures}}},
          {"loeb3",
           {{"checks", rep.loeb3_checks}, {"failures", rep.loeb3_failures}, {"skipped", rep.loeb3_skipped}}},
          {"form_agreement", {{"checks", rep.form_checks}, {"failures", rep.form_failures}}},
          {"oracle_incomplete", rep.oracle_incomplete},
          {"consistency_code_value", rep.consistency_code_value},
          {"notices", rep.notices},
          {"failures", rep.failures}};
}

Status loeb_status(const LoebReport& rep) {
  if (!rep.passed()) return Status::Fail;
  if (rep.loeb1_checks + rep.loeb2_checks == 0) return Status::OracleIncomplete;
  return Status::Pass;
}

void add_loeb(Report& r, const std::string& id, const Numbering& n, const CodePredicate& p,
              const std::vector<std::pair<Expr, Expr>>& pairs, const Oracle& oracle) {
  if (pairs.empty()) {
    r.add(id, Status::Skipped, {{"reason", "no sentences in corpus"}});
    return;
  }
  try {
    auto rep = loeb_check(n, p, pairs, oracle);
    r.add(id, loeb_status(rep), loeb_details(rep));
  } catch (...) {
    if (!expected_incomplete(std::current_exception())) throw;
    r.add(id, Status::OracleIncomplete, {{"reason", "encoding 0=S0 did not complete"}});
  }
}

// Sentences x for which p can be read on the codes of x, ¬x and x∧¬x. Forms
// (iv) and (v) range over these; a code too large to build cannot be
// examined either way.
std::vector<Expr> readable_sentences(const Numbering& n, const CodePredicate& p,
                                     const std::vector<Expr>& sentences) {
  std::vector<Expr> out;
  for (const auto& x : sentences) {
    bool ok = true;
    for (const auto& e : {x, Expr::neg(x), Expr::conj(x, Expr::neg(x))}) {
      try {
        ok = ok && holds_of(n, p, e).has_value();
      } catch (...) {
        if (!expected_incomplete(std::current_exception())) throw;
        ok = false;
      }
    }
    if (ok) out.push_back(x);
  }
  return out;
}

void add_consistency_forms(Report& r, const std::string& prefix, const Numbering& n,
                           const CodePredicate& p, const std::vector<Expr>& all_sentences,
                           const Oracle& oracle) {
  auto sentences = readable_sentences(n, p, all_sentences);
  auto psis = psi_choices(sentences);
  for (std::size_t i = 0; i < psis.size(); ++i) {
    std::string id = prefix + "/psi-" + std::to_string(i);
    try {
      auto rep = consistency_forms_check(n, p, psis[i], sentences, oracle);
      json values = json::object();
      for (int f = 0; f < 5; ++f) values[std::string(form_name(static_cast<Form>(f)))] = rep.values[f];
      r.add(id, rep.passed() ? Status::Pass : Status::Fail,
            {{"psi", rep.psi},
             {"domain", sentences.size()},
             {"unreadable", all_sentences.size() - sentences.size()},
             {"values", values},
             {"i_ii_iii_agree", rep.agree},
             {"iv_implies_ii", rep.iv_implies_ii},
             {"v_implies_iii", rep.v_implies_iii},
             {"form_mismatches", rep.form_mismatches}});
    } catch (...) {
      if (!expected_incomplete(std::current_exception())) throw;
      r.add(id, Status::OracleIncomplete, {{"psi", to_string(psis[i])}});
    }
  }
}

}  // namespace

Report suite_loeb(const Corpus& corpus, const Registry& reg, const std::string& numbering,
                  const std::string& predicate) {
  Report r;
  r.suite = "loeb";
  auto sentences = sentences_of(corpus.exprs());
  auto pairs = sentence_pairs(sentences, kPairsPerSentence);
  const Oracle& oracle = reg.oracle();

  if (!numbering.empty()) {
    Numbering n = reg.numbering(numbering);
    add_loeb(r, "loeb/" + numbering + "/" + predicate, n, reg.predicate(predicate, numbering), pairs,
             oracle);
    return r;
  }

  for (const auto& s : shipped_loeb()) {
    Numbering n = reg.numbering(s.numbering);
    CodePredicate p = reg.predicate(s.predicate, s.numbering);
    add_loeb(r, "loeb/" + s.numbering + "/" + s.predicate, n, p, pairs, oracle);
    add_consistency_forms(r, "consistency-forms/" + s.numbering + "/" + s.predicate, n, p, sentences, oracle);
  }
  add_consistency_forms(r, "consistency-forms/gamma/false", reg.numbering("gamma"), predicate_false(), sentences, oracle);

  // Transfers across equivalent numberings: Löb and the value of (i) carry over.
  if (sentences.empty()) {
    r.add("transfer", Status::Skipped, {{"reason", "no sentences in corpus"}});
    return r;
  }
  auto witness = loeb_closure(pairs);
  struct Source {
    std::string numbering, predicate;
    std::vector<std::string> targets;
  };
  const std::vector<Source> sources = {
      {"delta-neg", "pr-neg", {"gamma", "diag", "twist", "split-provable"}},
      {"gamma", "pr", {"diag", "twist", "split-provable", "delta-neg"}},
  };
  for (const auto& src : sources) {
    Numbering a = reg.numbering(src.numbering);
    CodePredicate p = reg.predicate(src.predicate, src.numbering);
    bool form_i_a = consistency_value(Form::I, a, p, std::nullopt, {}, oracle);
    for (const auto& target : src.targets) {
      Numbering b = reg.numbering(target);
      std::string id = "transfer/" + src.numbering + "/" + src.predicate + "->" + target;
      CodePredicate q;
      try {
        q = transfer_predicate(a, b, p, witness);
      } catch (const NotEquivalent& e) {
        r.add(id, Status::Fail, {{"error", e.what()}});
        continue;
      }
      auto rep = loeb_check(b, q, pairs, oracle);
      bool form_i_b = consistency_value(Form::I, b, q, std::nullopt, {}, oracle);
      json d = loeb_details(rep);
      d["form_i_source"] = form_i_a;
      d["form_i_target"] = form_i_b;
      Status s = loeb_status(rep);
      if (form_i_a != form_i_b) s = Status::Fail;
      r.add(id, s, d);
    }
  }
  return r;
}

// ---------------------------------------------------------------- deviant

namespace {

unsigned long mod_ui(const Code& c, unsigned long m) { return mpz_fdiv_ui(c.get_mpz_t(), m); }

void slot_partition(Report& r) {
  const unsigned long kRange = 100'000;
  for (Scheme s : {Scheme::Neg, Scheme::Forall}) {
    std::size_t overlaps = 0, wrong_residue = 0, covered = 0;
    for (unsigned long c = 0; c < kRange; ++c) {
      std::size_t hits = 0;
      for (const auto& slot : slot_table(s)) {
        if (c < slot.offset || (c - slot.offset) % slot.multiplier != 0) continue;
        if (!in_pair_image(Nat((c - slot.offset) / slot.multiplier))) continue;
        ++hits;
        unsigned long want = s == Scheme::Neg ? (slot.family == Family::Lambda ? 0 : 1)
                                              : static_cast<unsigned long>(slot.family);
        if (c % (s == Scheme::Neg ? 2 : 3) != want) ++wrong_residue;
      }
      if (hits > 1) ++overlaps;
      if (hits > 0) ++covered;
    }
    r.add(std::string("deviant/slot-partition/") + (s == Scheme::Neg ? "delta-neg" : "delta-forall"),
          overlaps + wrong_residue == 0 ? Status::Pass : Status::Fail,
          {{"range", kRange}, {"overlaps", overlaps}, {"wrong_residue", wrong_residue}, {"covered", covered}});
  }
}

struct LawTally {
  std::size_t checked = 0, failures = 0, incomplete = 0;
  std::vector<std::string> examples;
  void fail(const std::string& what) {
    ++failures;
    if (examples.size() < 8) examples.push_back(what);
  }
  json details() const {
    return {{"checked", checked}, {"failures", failures}, {"oracle_incomplete", incomplete},
            {"failures_sample", examples}};
  }
  Status status() const {
    if (failures) return Status::Fail;
    return checked ? Status::Pass : Status::Skipped;
  }
};

// 0 ok, 1 failure, 2 outside the domain or undecided
template <class F>
LawTally tally_law(const std::vector<Expr>& items, F f) {
  auto res = sweep(std::span<const Expr>(items), [&](const Expr& e) -> int {
    try {
      return f(e) ? 0 : 1;
    } catch (...) {
      if (!expected_incomplete(std::current_exception())) throw;
      return 2;
    }
  });
  LawTally t;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (res[i] == 2) {
      ++t.incomplete;
      continue;
    }
    ++t.checked;
    if (res[i] == 1) t.fail(to_string(items[i]));
  }
  return t;
}

unsigned long class_of(const Oracle& o, const Expr& e) {
  switch (o.classify(e).verdict) {
    case Verdict::Provable: return 0;
    case Verdict::Refutable: return 1;
    case Verdict::Unknown: throw OracleIncomplete("undecided");
    default: return 2;
  }
}

}  // namespace

Report suite_deviant(const Corpus& corpus, const Registry& reg) {
  Report r;
  r.suite = "deviant";
  const Oracle& o = reg.oracle();
  auto items = corpus.exprs();
  slot_partition(r);

  auto parity = tally_law(items, [&](const Expr& e) {
    Code c = delta_neg_encode(e, o);
    bool prov = o.fragment_provable(e);
    return (mod_ui(c, 2) == 0) == prov && pr_delta_neg(c) == prov;
  });
  r.add("deviant/delta-neg/parity-law", parity.status(), parity.details());

  auto tri = tally_law(items, [&](const Expr& e) {
    Code c = delta_forall_encode(e, o);
    unsigned long want = 2;
    if (is_sentence(e)) {
      Truth t = o.truth(e);
      if (t == Truth::Unknown) throw OracleIncomplete("undecided");
      want = t == Truth::True ? 0 : 1;
    }
    return mod_ui(c, 3) == want && tr_delta_forall(c) == (want == 0);
  });
  r.add("deviant/delta-forall/trisection-law", tri.status(), tri.details());

  // ¬^k of each base sentence, k ≤ 3; the class of ¬^k φ is read off the
  // oracle directly rather than from the flip rule.
  std::vector<Expr> bases;
  {
    std::set<Expr> seen;
    for (const auto& e : sentences_of(items))
      if (seen.insert(strip_negations(e)).second) bases.push_back(strip_negations(e));
  }
  auto layer = tally_law(bases, [&](const Expr& base) {
    Expr e = base;
    for (unsigned long k = 0; k <= 3; ++k, e = Expr::neg(e)) {
      Code c = delta_star_encode(e, o);
      auto [i, j] = unpair(c / 3);
      unsigned long cls = class_of(o, e);
      if (i != k || mod_ui(c, 3) != cls) return false;
      if (pr_delta_star(c) != (cls == 0)) return false;
    }
    return true;
  });
  r.add("deviant/delta-star/layering", layer.status(), layer.details());

  auto staging = tally_law(items, [&](const Expr& e) {
    for (Staged w : {Staged::Neg, Staged::Star, Staged::Forall}) {
      std::size_t s = stage_of(w, e);
      auto here = encode_at_stage(w, e, s, o);
      auto later = encode_at_stage(w, e, s + 3, o);
      if (!here || !later || *here != *later) return false;
      if (s > 0 && encode_at_stage(w, e, s - 1, o)) return false;
    }
    return true;
  });
  r.add("deviant/staging", staging.status(), staging.details());

  // Fixed values the constructions must reproduce.
  struct Example {
    std::string id;
    std::function<Code()> got;
    Code want;
  };
  Expr eq00 = Expr::eq(Expr::zero(), Expr::zero());
  Expr eq01 = Expr::eq(Expr::zero(), Expr::succ(Expr::zero()));
  const std::vector<Example> examples = {
      {"pair(0,6)", [] { return pair(0, 6); }, 34},
      {"term_code(S0)", [] { return term_code(Expr::succ(Expr::zero())); }, 6},
      {"term_code(+(0,1))", [] { return term_code(Expr::add(Expr::zero(), Expr::one())); }, 600},
      {"delta_neg(0=0)", [&] { return delta_neg_encode(eq00, o); }, 28216},
      {"delta_neg(0=S0)", [&] { return delta_neg_encode(eq01, o); },
       slot_code(Scheme::Neg, Family::Theta, Category::Eq, 41, 341)},
      {"delta_forall(0=0)", [&] { return delta_forall_encode(eq00, o); }, 95244},
      {"delta_forall(0=S0)", [&] { return delta_forall_encode(eq01, o); },
       slot_code(Scheme::Forall, Family::Theta, Category::Eq, 62, 512)},
      {"subformula_count(28216)", [&] { return Code(static_cast<unsigned long>(subformula_count(28216, o))); }, 1},
      {"pr_delta_neg(28216)", [] { return Code(pr_delta_neg(28216) ? 1 : 0); }, 1},
      {"pr_delta_neg(7)", [] { return Code(pr_delta_neg(7) ? 1 : 0); }, 0},
  };
  for (const auto& ex : examples) {
    Code got = ex.got();
    r.add("deviant/example/" + ex.id, got == ex.want ? Status::Pass : Status::Fail,
          {{"got", got.get_str()}, {"want", ex.want.get_str()}});
  }
  return r;
}

// ---------------------------------------------------------------- diag

Report suite_diag(const Corpus& corpus, const Registry& reg) {
  Report r;
  r.suite = "diag";
  const Oracle& o = reg.oracle();
  Numbering D = reg.numbering("diag");
  Numbering gamma = reg.numbering("gamma");

  std::vector<Expr> fixed_sentences;
  const std::vector<CodePredicate> preds = {
      predicate_true(),         predicate_false(),        residue_predicate(2, 0),
      residue_predicate(2, 1),  residue_predicate(3, 0),  residue_predicate(3, 2),
      residue_predicate(5, 1),  residue_predicate(7, 4),
  };
  for (const auto& name : {"diag", "twist-diag"}) {
    Numbering n = reg.numbering(name);
    for (const auto& p : preds) {
      std::string id = std::string("diag/fixed-point/") + name + "/" + p.name;
      try {
        auto fp = fixed_point(n, p, o);
        fixed_sentences.push_back(fp.sentence);
        r.add(id, fp.holds() ? Status::Pass : Status::Fail,
              {{"k", fp.k.get_str()},
               {"sentence", to_string(fp.sentence)},
               {"truth", fp.truth},
               {"predicate_value", fp.predicate_value}});
      } catch (const FixedPointOutsideFragment& e) {
        r.add(id, Status::Fail, {{"error", e.what()}});
      }
    }
  }

  // Liar-like: truth under δ∀ carried over to D-codes has no syntactic form,
  // so the construction has nothing to diagonalize and must refuse.
  auto sentences = sentences_of(corpus.exprs());
  auto witness = loeb_closure(sentence_pairs(sentences, 1));
  for (auto [from, pred, to] : {std::tuple{"delta-forall", "tr-forall", "diag"},
                                std::tuple{"delta-neg", "pr-neg", "gamma"}}) {
    std::string id = std::string("diag/fixed-point/refused/") + pred + "@" + to;
    auto q = transfer_predicate(reg.numbering(from), reg.numbering(to), reg.predicate(pred, from),
                                witness);
    try {
      fixed_point(reg.numbering(to), q, o);
      r.add(id, Status::Fail, {{"error", "construction did not report leaving the fragment"}});
    } catch (const FixedPointOutsideFragment& e) {
      r.add(id, Status::Pass, {{"reported", e.what()}});
    }
  }

  // Self-reference of the corpus' diagonal items.
  auto diag_items = corpus.tagged("diag-item");
  if (diag_items.empty()) {
    r.add("diag/self-reference", Status::Skipped, {{"reason", "no diag-item entries"}});
  } else {
    std::size_t bad = 0;
    std::vector<std::string> fails;
    for (const auto& e : diag_items) {
      auto src = diagonal_source(e);
      if (!src || D.encode(e) != src->second) {
        ++bad;
        fails.push_back(to_string(e));
      }
    }
    r.add("diag/self-reference", bad ? Status::Fail : Status::Pass,
          {{"items", diag_items.size()}, {"failures", fails}});
  }

  std::vector<Expr> mono = corpus.exprs();
  mono.insert(mono.end(), fixed_sentences.begin(), fixed_sentences.end());
  auto g = check_monotone(gamma, mono);
  r.add("diag/monotone/gamma", g.violations.empty() ? Status::Pass : Status::Fail,
        {{"pairs_checked", g.pairs_checked},
         {"violations", g.violations.size()},
         {"oracle_incomplete", g.oracle_incomplete}});
  auto d = check_monotone(D, mono);
  json witnessed = json::array();
  for (std::size_t i = 0; i < d.violations.size() && i < 3; ++i) {
    const auto& v = d.violations[i];
    witnessed.push_back({{"sub", to_string(v.sub)},
                         {"super", to_string(v.super)},
                         {"sub_code", v.sub_code.get_str()},
                         {"super_code", v.super_code.get_str()}});
  }
  r.add("diag/monotone/diag", d.violations.empty() ? Status::Fail : Status::Pass,
        {{"pairs_checked", d.pairs_checked}, {"violations", d.violations.size()}, {"witnessed", witnessed}});
  return r;
}

Report suite_all(const Corpus& corpus, const Registry& reg) {
  Report r;
  r.suite = "all";
  r.merge(suite_simulation(corpus, reg));
  r.merge(suite_equivalence(corpus, reg));
  r.merge(suite_loeb(corpus, reg));
  r.merge(suite_deviant(corpus, reg));
  r.merge(suite_diag(corpus, reg));
  return r;
}

}  // namespace goedel
