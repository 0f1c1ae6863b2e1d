#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "goedel/expr.hpp"
#include "goedel/polynomial.hpp"

namespace goedel {

// Semiring rules, applied modulo associativity and commutativity of + and ·.
//   1  t·(u+v) -> t·u + t·v
//   2  S t     -> t + 1
//   3  1·t     -> t
//   4  0·t     -> 0
//   5  t+0     -> t
enum class Rule : int { Distribute = 1, SuccPlusOne = 2, OneTimes = 3, ZeroTimes = 4, PlusZero = 5 };

std::string_view rule_name(Rule r);

struct RewriteStep {
  Rule rule;
  // Argument path to the redex. Ancestors keep the argument order they had
  // when the walk entered them.
  std::vector<std::size_t> position;
  Expr before;  // the redex
  Expr after;   // what replaced it
  Nat weight_before;  // of before/after, every variable at 2
  Nat weight_after;
  Nat term_weight_before;  // of the whole term, every variable at 2
  Nat term_weight_after;
};

struct RewriteTrace {
  std::vector<RewriteStep> steps;
  bool weights_decrease() const;
};

struct Strategy {
  enum class Kind { LeftmostInnermost, Random };
  Kind kind = Kind::LeftmostInnermost;
  std::uint64_t seed = 0;
  static Strategy random(std::uint64_t seed) { return {Kind::Random, seed}; }
};

struct NormalForm {
  Expr term;
  RewriteTrace trace;
};

// AC-canonical representative: + and · flattened, arguments sorted by their
// canonical text, then rebuilt left-nested. Throws NotATerm.
Expr ac_canonical(const Expr& t);
std::string ac_key(const Expr& t);
bool ac_equal(const Expr& a, const Expr& b);

// One step under the leftmost-innermost strategy, or nullopt at a normal form.
std::optional<std::pair<Expr, Rule>> rewrite_step(const Expr& t);
// The default strategy normalizes innermost-first: arguments in canonical
// order, then the node itself with the lowest rule id that applies. Throws
// NotATerm, OracleIncomplete past the step limit.
NormalForm normal_form(const Expr& t, Strategy strategy = {});

// Polynomial interpretation 0,1 -> 2, S -> X+4, + -> X+Y+1, · -> XY, with
// variable (v i) read as x_i.
Polynomial weight(const Expr& t);
Nat weight_at_two(const Expr& t);

// Direct expansion into the canonical polynomial, independent of the rules.
Polynomial to_polynomial(const Expr& t);

// T ⊢ a = b for terms, decided by comparing normal forms. Throws NotATerm.
bool provably_equal(const Expr& a, const Expr& b);

// weight(lhs) - weight(rhs) for rules 1..5, metavariables t,u,v as x0,x1,x2.
std::vector<Polynomial> rule_weight_deltas();
// Strict decrease on A = {n >= 2}: all non-constant coefficients are
// non-negative and the value at the all-2s corner is positive.
bool decreases_on_domain(const Polynomial& delta);

// The three critical pairs of the system, over metavariables x0, x1, x2.
std::vector<std::pair<Expr, Expr>> critical_pairs();

}  // namespace goedel
