#include "goedel/loeb.hpp"

#include <algorithm>
#include <set>

#include "goedel/deviant.hpp"
#include "goedel/diag.hpp"
#include "goedel/errors.hpp"
#include "goedel/parallel.hpp"
#include "goedel/syntax.hpp"

namespace goedel {

Expr form_variable() { return Expr::variable(0); }

namespace {

// ∃y (v = m̄·y + r̄), y = (v 1)
Expr residue_form(const Nat& m, const Nat& r) {
  Expr y = Expr::variable(1);
  Expr rhs = Expr::mul(Expr::numeral(m), y);
  if (r != 0) rhs = Expr::add(rhs, Expr::numeral(r));
  return exists(y, Expr::eq(form_variable(), rhs));
}

bool residue_is(const Code& c, const Nat& m, const Nat& r) {
  Nat q;
  mpz_fdiv_r(q.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  return q == r;
}

CodePredicate modular(std::string name, std::function<bool(const Code&)> decide, const Nat& m) {
  CodePredicate p;
  p.name = std::move(name);
  p.decide = std::move(decide);
  p.syntactic_form = residue_form(m, 0);
  p.residue_modulus = m;
  p.decide_residue = [](const Nat& r) { return r == 0; };
  return p;
}

}  // namespace

CodePredicate predicate_true() {
  CodePredicate p;
  p.name = "true";
  p.decide = [](const Code&) { return true; };
  p.syntactic_form = Expr::eq(form_variable(), form_variable());
  p.residue_modulus = Nat(1);
  p.decide_residue = [](const Nat&) { return true; };
  return p;
}

CodePredicate predicate_false() {
  CodePredicate p;
  p.name = "false";
  p.decide = [](const Code&) { return false; };
  p.syntactic_form = Expr::neg(Expr::eq(form_variable(), form_variable()));
  p.residue_modulus = Nat(1);
  p.decide_residue = [](const Nat&) { return false; };
  return p;
}

CodePredicate residue_predicate(const Nat& m, const Nat& r) {
  if (m == 0 || r >= m) throw std::invalid_argument("residue_predicate needs 0 <= r < m");
  CodePredicate p;
  p.name = "mod-" + m.get_str() + "-is-" + r.get_str();
  p.decide = [m, r](const Code& c) { return residue_is(c, m, r); };
  p.syntactic_form = residue_form(m, r);
  p.residue_modulus = m;
  p.decide_residue = [r](const Nat& x) { return x == r; };
  return p;
}

CodePredicate pr_neg_predicate() { return modular("pr-neg", pr_delta_neg, 2); }
CodePredicate pr_star_predicate() { return modular("pr-star", pr_delta_star, 3); }
CodePredicate tr_forall_predicate() { return modular("tr-forall", tr_delta_forall, 3); }

CodePredicate construct_pr(const Numbering& n, const Oracle& oracle) {
  CodePredicate p;
  p.name = "pr-" + n.name();
  p.decide = [n, oracle](const Code& c) {
    auto e = n.try_decode(c);
    if (!e) return false;
    Verdict v = oracle.classify(*e).verdict;
    if (v == Verdict::Unknown) throw OracleIncomplete("cannot classify " + to_string(*e));
    return v == Verdict::Provable;
  };
  p.provenance = "classify composed with " + n.name() + " decoding";
  return p;
}

CodePredicate transfer_predicate(const Numbering& a, const Numbering& b, const CodePredicate& p,
                                 std::span<const Expr> witness) {
  auto report = verify_equivalence(a, b, witness);
  if (!report.passed())
    throw NotEquivalent(a.name() + " and " + b.name() + " disagree on the witness corpus");
  CodePredicate q;
  q.name = p.name + "@" + b.name();
  auto back = translate(b, a);
  auto decide = p.decide;
  q.decide = [b, back, decide](const Code& c) {
    if (!b.in_image(c)) return false;
    return decide(back(c));
  };
  // q(b(e)) = p(translate(b, a)(b(e))) = p(a(e))
  q.target = b.name();
  q.via_source = [a, p](const Expr& e) { return holds_of(a, p, e); };
  q.provenance = "transferred from " + a.name() + (p.provenance.empty() ? "" : " (" + p.provenance + ")");
  return q;
}

std::optional<bool> holds_of(const Numbering& n, const CodePredicate& p, const Expr& e) {
  if (p.residue_modulus) {
    if (*p.residue_modulus == 1) return p.decide_residue(Nat(0));
    if (auto r = n.code_residue(e, *p.residue_modulus)) return p.decide_residue(*r);
  }
  try {
    return p.decide(n.encode(e));
  } catch (const CodeTooLarge&) {
    if (p.via_source && p.target == n.name()) return p.via_source(e);
    return std::nullopt;
  }
}

Expr pr_sentence(const Numbering& n, const CodePredicate& p, const Expr& e) {
  if (!p.syntactic_form) throw MissingSyntacticForm(p.name + " has no syntactic form");
  return substitute_numeral(*p.syntactic_form, form_variable(), n.encode(e));
}

std::vector<std::pair<Expr, Expr>> sentence_pairs(std::span<const Expr> s, std::size_t per_item) {
  std::vector<std::pair<Expr, Expr>> out;
  if (s.empty()) return out;
  std::size_t w = std::min(per_item, s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < w; ++j) out.emplace_back(s[i], s[(i + j) % s.size()]);
  return out;
}

namespace {

Expr contradiction() { return Expr::eq(Expr::zero(), Expr::succ(Expr::zero())); }

}  // namespace

std::vector<Expr> loeb_closure(std::span<const std::pair<Expr, Expr>> pairs) {
  std::vector<Expr> out;
  std::set<Expr> seen;
  auto add = [&](const Expr& e) {
    if (seen.insert(e).second) out.push_back(e);
  };
  for (const auto& [a, b] : pairs) add(a);
  for (const auto& [a, b] : pairs) add(b);
  for (const auto& [a, b] : pairs) add(implies(a, b));
  add(contradiction());
  return out;
}

namespace {

enum class Outcome { Pass, Fail, Skip, Incomplete };

struct Instance {
  Outcome loeb1 = Outcome::Skip, loeb2 = Outcome::Skip, loeb3 = Outcome::Skip;
  Outcome form = Outcome::Skip;
  std::string detail;
};

Outcome implication(std::optional<bool> lhs, std::optional<bool> rhs) {
  if (!lhs) return Outcome::Incomplete;
  if (!*lhs) return Outcome::Pass;
  if (!rhs) return Outcome::Incomplete;
  return *rhs ? Outcome::Pass : Outcome::Fail;
}

template <class F>
std::optional<bool> guarded(F&& f) {
  try {
    return f();
  } catch (const OracleIncomplete&) {
    return std::nullopt;
  } catch (const CodeTooLarge&) {
    return std::nullopt;
  }
}

}  // namespace

LoebReport loeb_check(const Numbering& n, const CodePredicate& p,
                      std::span<const std::pair<Expr, Expr>> pairs, const Oracle& oracle) {
  LoebReport r;
  r.numbering = n.name();
  r.predicate = p.name;
  r.corpus_size = pairs.size();
  r.consistency_code_value = p.decide(n.encode(contradiction()));

  auto check = [&](const std::pair<Expr, Expr>& pr) {
    const auto& [phi, psi] = pr;
    Instance in;
    auto p_phi = guarded([&] { return holds_of(n, p, phi); });

    auto provable = guarded([&]() -> std::optional<bool> {
      Verdict v = oracle.classify(phi).verdict;
      if (v == Verdict::Unknown) return std::nullopt;
      return v == Verdict::Provable;
    });
    in.loeb1 = implication(provable, p_phi);

    auto p_imp = guarded([&] { return holds_of(n, p, implies(phi, psi)); });
    auto p_psi = guarded([&] { return holds_of(n, p, psi); });
    if (!p_phi || !p_imp)
      in.loeb2 = Outcome::Incomplete;
    else
      in.loeb2 = implication(*p_phi && *p_imp, p_psi);

    if (p.syntactic_form) {
      auto p_pr = guarded([&]() -> std::optional<bool> {
        if (!p_phi || !*p_phi) return false;
        return holds_of(n, p, pr_sentence(n, p, phi));
      });
      in.loeb3 = implication(p_phi, p_pr);

      auto agree = guarded([&]() -> std::optional<bool> {
        Code c = n.encode(phi);
        Truth t = oracle.truth(substitute_numeral(*p.syntactic_form, form_variable(), c));
        if (t == Truth::Unknown) return std::nullopt;
        return (t == Truth::True) == p.decide(c);
      });
      in.form = !agree ? Outcome::Incomplete : *agree ? Outcome::Pass : Outcome::Fail;
    }
    if (in.loeb1 == Outcome::Fail || in.loeb2 == Outcome::Fail || in.loeb3 == Outcome::Fail ||
        in.form == Outcome::Fail)
      in.detail = "phi=" + to_string(phi) + " psi=" + to_string(psi);
    return in;
  };
  auto results = sweep(pairs, check);

  auto tally = [&](Outcome o, std::size_t& checks, std::size_t& failures, const char* what,
                   const std::string& detail) {
    switch (o) {
      case Outcome::Pass: ++checks; break;
      case Outcome::Fail:
        ++checks;
        ++failures;
        if (r.failures.size() < 16) r.failures.push_back(std::string(what) + ": " + detail);
        break;
      case Outcome::Incomplete: ++r.oracle_incomplete; break;
      case Outcome::Skip: break;
    }
  };
  for (const auto& in : results) {
    tally(in.loeb1, r.loeb1_checks, r.loeb1_failures, "Loeb1", in.detail);
    tally(in.loeb2, r.loeb2_checks, r.loeb2_failures, "Loeb2", in.detail);
    tally(in.loeb3, r.loeb3_checks, r.loeb3_failures, "Loeb3", in.detail);
    tally(in.form, r.form_checks, r.form_failures, "form", in.detail);
    if (in.loeb3 == Outcome::Skip) ++r.loeb3_skipped;
  }
  if (!p.syntactic_form && !pairs.empty())
    r.notices.push_back("Loeb3 skipped for " + std::to_string(r.loeb3_skipped) +
                        " instances: " + p.name + " has no syntactic form");
  return r;
}

std::string_view form_name(Form f) {
  switch (f) {
    case Form::I: return "i";
    case Form::II: return "ii";
    case Form::III: return "iii";
    case Form::IV: return "iv";
    case Form::V: return "v";
  }
  return "?";
}

namespace {

bool holds_or_throw(const Numbering& n, const CodePredicate& p, const Expr& e) {
  auto v = holds_of(n, p, e);
  if (!v) throw CodeTooLarge("code of " + to_string(e) + " is too large for " + p.name);
  return *v;
}

// ¬Pr(⌜ψ⌝) ∨ ¬Pr(⌜¬ψ⌝) on the semantic side
bool not_both(const Numbering& n, const CodePredicate& p, const Expr& psi) {
  return !(holds_or_throw(n, p, psi) && holds_or_throw(n, p, Expr::neg(psi)));
}

}  // namespace

ConsistencyStatement consistency_sentence(Form f, const Numbering& n, const CodePredicate& p,
                                          const std::optional<Expr>& psi) {
  if ((f == Form::II || f == Form::III) && !psi)
    throw MissingPsi("form (" + std::string(form_name(f)) + ") needs a sentence psi");
  switch (f) {
    case Form::I: return Expr::neg(pr_sentence(n, p, contradiction()));
    case Form::II: return Expr::neg(pr_sentence(n, p, Expr::conj(*psi, Expr::neg(*psi))));
    case Form::III:
      return disj(Expr::neg(pr_sentence(n, p, *psi)),
                  Expr::neg(pr_sentence(n, p, Expr::neg(*psi))));
    case Form::IV:
      return SemanticCheck{f, [n, p](std::span<const Expr> s) {
                             for (const auto& x : s)
                               if (holds_or_throw(n, p, Expr::conj(x, Expr::neg(x)))) return false;
                             return true;
                           }};
    case Form::V:
      return SemanticCheck{f, [n, p](std::span<const Expr> s) {
                             for (const auto& x : s)
                               if (!not_both(n, p, x)) return false;
                             return true;
                           }};
  }
  throw std::invalid_argument("bad form");
}

namespace {

bool semantic_value(Form f, const Numbering& n, const CodePredicate& p, const Expr& psi) {
  switch (f) {
    case Form::I: return !holds_or_throw(n, p, contradiction());
    case Form::II: return !holds_or_throw(n, p, Expr::conj(psi, Expr::neg(psi)));
    default: return not_both(n, p, psi);
  }
}

bool sentence_value(const Expr& s, const Oracle& oracle) {
  Truth t = oracle.truth(s);
  if (t == Truth::Unknown) throw OracleIncomplete("cannot decide " + to_string(s));
  return t == Truth::True;
}

}  // namespace

bool consistency_value(Form f, const Numbering& n, const CodePredicate& p,
                       const std::optional<Expr>& psi, std::span<const Expr> sentences,
                       const Oracle& oracle) {
  if ((f == Form::II || f == Form::III) && !psi)
    throw MissingPsi("form (" + std::string(form_name(f)) + ") needs a sentence psi");
  if (f == Form::IV || f == Form::V) {
    auto check = std::get<SemanticCheck>(consistency_sentence(f, n, p, psi));
    std::vector<Expr> domain(sentences.begin(), sentences.end());
    if (psi) domain.push_back(*psi);
    return check.holds(domain);
  }
  if (p.syntactic_form) return sentence_value(std::get<Expr>(consistency_sentence(f, n, p, psi)), oracle);
  return semantic_value(f, n, p, psi.value_or(contradiction()));
}

ConsistencyFormsReport consistency_forms_check(const Numbering& n, const CodePredicate& p, const Expr& psi,
                            std::span<const Expr> sentences, const Oracle& oracle) {
  ConsistencyFormsReport r;
  r.numbering = n.name();
  r.predicate = p.name;
  r.psi = to_string(psi);
  for (Form f : {Form::I, Form::II, Form::III, Form::IV, Form::V})
    r.values[static_cast<int>(f)] = consistency_value(f, n, p, psi, sentences, oracle);
  if (p.syntactic_form)
    for (Form f : {Form::I, Form::II, Form::III})
      if (semantic_value(f, n, p, psi) != r.values[static_cast<int>(f)]) ++r.form_mismatches;
  r.agree = r.values[0] == r.values[1] && r.values[1] == r.values[2];
  r.iv_implies_ii = !r.values[3] || r.values[1];
  r.v_implies_iii = !r.values[4] || r.values[2];
  return r;
}

FixedPoint fixed_point(const Numbering& n, const CodePredicate& phi, const Oracle& oracle) {
  if (!phi.syntactic_form)
    throw FixedPointOutsideFragment(phi.name + " has no syntactic form to diagonalize");
  if (!n.has_term_over_diagonal())
    throw FixedPointOutsideFragment(n.name() + " codes are not given by a term over D-codes");
  Expr v = form_variable();
  Expr tau = n.term_over_diagonal(v);
  FixedPoint fp{substitute(*phi.syntactic_form, v, tau), 0, Expr::zero(), 0};
  fp.k = diag_index(fp.psi);
  fp.sentence = substitute_numeral(fp.psi, v, fp.k);
  Code d = diag_numbering().encode(fp.sentence);
  if (d != fp.k) throw FixedPointOutsideFragment("D does not assign the diagonal code");
  fp.code = n.encode(fp.sentence);
  if (fp.code != eval_closed_term(substitute_numeral(tau, v, fp.k)))
    throw FixedPointOutsideFragment("the term over D-codes does not give " + n.name() +
                                    " of the fixed point");
  Truth t;
  try {
    t = oracle.truth(fp.sentence);
  } catch (const OracleIncomplete&) {
    t = Truth::Unknown;
  }
  if (t == Truth::Unknown)
    throw FixedPointOutsideFragment("truth of " + to_string(fp.sentence) + " is undecided");
  fp.truth = t == Truth::True;
  fp.predicate_value = phi.decide(fp.code);
  return fp;
}

}  // namespace goedel
