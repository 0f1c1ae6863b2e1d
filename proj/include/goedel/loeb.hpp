#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "goedel/numbering.hpp"
#include "goedel/truth.hpp"

namespace goedel {

// The designated free variable of syntactic forms: (v 0).
Expr form_variable();

struct CodePredicate {
  std::string name;
  std::function<bool(const Code&)> decide;
  // φ(v) with truth(φ(c̄)) = decide(c) on the codes it is used with.
  std::optional<Expr> syntactic_form;
  // When decide(c) on image codes depends only on c mod m: the modulus and
  // the decision on the residue. Lets the harness avoid building codes that
  // are too large, through Numbering::code_residue.
  std::optional<Nat> residue_modulus;
  std::function<bool(const Nat&)> decide_residue;
  // Set by transfer_predicate: the value on the code of e under `target`,
  // read on the source side. Used when that code is too large to build.
  std::string target;
  std::function<std::optional<bool>(const Expr&)> via_source;
  std::string provenance;
};

CodePredicate predicate_true();
CodePredicate predicate_false();
// c ≡ r (mod m), form ∃y (v = m̄·y + r̄).
CodePredicate residue_predicate(const Nat& m, const Nat& r);
CodePredicate pr_neg_predicate();
CodePredicate pr_star_predicate();
CodePredicate tr_forall_predicate();

// c in the image and decode(c) classified Provable. No syntactic form.
CodePredicate construct_pr(const Numbering& n, const Oracle& oracle = Oracle());

// decide_b(c) = p(translate(b, a)(c)) on the b-image, false elsewhere.
// Throws NotEquivalent if a and b disagree on `witness`.
CodePredicate transfer_predicate(const Numbering& a, const Numbering& b, const CodePredicate& p,
                                 std::span<const Expr> witness);

// p holds of n(e), through the residue path or, for a transferred p, the
// source numbering when the code itself is too large. nullopt if no path
// works.
std::optional<bool> holds_of(const Numbering& n, const CodePredicate& p, const Expr& e);

// Pr(⌜e⌝): the form with the numeral of n(e) substituted.
Expr pr_sentence(const Numbering& n, const CodePredicate& p, const Expr& e);

struct LoebReport {
  std::string numbering;
  std::string predicate;
  std::size_t corpus_size = 0;
  std::size_t loeb1_checks = 0, loeb2_checks = 0, loeb3_checks = 0;
  std::size_t loeb1_failures = 0, loeb2_failures = 0, loeb3_failures = 0;
  std::size_t loeb3_skipped = 0;
  // truth(φ(c̄)) = decide(c) on corpus codes
  std::size_t form_checks = 0, form_failures = 0;
  std::size_t oracle_incomplete = 0;
  bool consistency_code_value = false;
  std::vector<std::string> notices;
  std::vector<std::string> failures;
  bool passed() const { return loeb1_failures + loeb2_failures + loeb3_failures + form_failures == 0; }
};

// Ordered pairs (s[i], s[j]) for j = i, i+1, …, i+per_item-1 (cyclic).
std::vector<std::pair<Expr, Expr>> sentence_pairs(std::span<const Expr> sentences,
                                                  std::size_t per_item = 3);
// Everything loeb_check encodes apart from Pr-sentences: the pair members,
// the implications and 0=S0.
std::vector<Expr> loeb_closure(std::span<const std::pair<Expr, Expr>> pairs);

LoebReport loeb_check(const Numbering& n, const CodePredicate& p,
                      std::span<const std::pair<Expr, Expr>> pairs,
                      const Oracle& oracle = Oracle());

enum class Form { I, II, III, IV, V };
std::string_view form_name(Form f);

// (iv) and (v) quantify over codes of sentences; they are checked against
// the sentences passed in.
struct SemanticCheck {
  Form form;
  std::function<bool(std::span<const Expr>)> holds;
};
using ConsistencyStatement = std::variant<Expr, SemanticCheck>;

// Throws MissingPsi, and MissingSyntacticForm for (i)-(iii).
ConsistencyStatement consistency_sentence(Form f, const Numbering& n, const CodePredicate& p,
                                          const std::optional<Expr>& psi = std::nullopt);

// Truth value of a form. (i)-(iii) use the sentence when p has a form and
// ¬p on the relevant codes otherwise.
bool consistency_value(Form f, const Numbering& n, const CodePredicate& p,
                       const std::optional<Expr>& psi, std::span<const Expr> sentences,
                       const Oracle& oracle = Oracle());

struct ConsistencyFormsReport {
  std::string numbering, predicate;
  std::string psi;
  bool values[5] = {};
  bool agree = false;           // (i) = (ii) = (iii)
  bool iv_implies_ii = false;
  bool v_implies_iii = false;
  // syntactic and semantic readings of (i)-(iii) differ
  std::size_t form_mismatches = 0;
  bool passed() const { return agree && iv_implies_ii && v_implies_iii && form_mismatches == 0; }
};

ConsistencyFormsReport consistency_forms_check(const Numbering& n, const CodePredicate& p, const Expr& psi,
                            std::span<const Expr> sentences, const Oracle& oracle = Oracle());

struct FixedPoint {
  Expr psi;        // ψ(y) = φ(τ(y))
  Code k;          // D(ψ(k̄)) = k
  Expr sentence;   // ψ(k̄)
  Code code;       // n(sentence)
  bool truth = false;
  bool predicate_value = false;
  bool holds() const { return truth == predicate_value; }
};

// Diagonal construction through D. n must supply term_over_diagonal and φ a
// syntactic form; the resulting sentence must be decidable by the oracle.
// Throws FixedPointOutsideFragment otherwise.
FixedPoint fixed_point(const Numbering& n, const CodePredicate& phi,
                       const Oracle& oracle = Oracle());

}  // namespace goedel
