#pragma once

#include <cstdint>
#include <vector>

#include "goedel/expr.hpp"

namespace goedel {

bool is_variable(const Expr& e);
// Built from 0, 1, variables, S, + and ·. A prime over a non-variable is
// an expression but not a term.
bool is_term(const Expr& e);
bool is_formula(const Expr& e);
bool is_closed(const Expr& e);
bool is_sentence(const Expr& e);

// Free variables ordered by index. A maximal stack of primes over v is one
// variable occurrence; ∀ binds only when its first argument is a variable.
std::vector<Expr> free_variables(const Expr& e);
bool occurs(const Expr& x, const Expr& e);
Expr fresh_variable(const Expr& e);

// All distinct subexpressions of e, e included. Long S or prime stacks
// contribute only their top and bottom `run_window` levels.
std::vector<Expr> subexpressions(const Expr& e, unsigned run_window = 64);
bool is_proper_subexpression(const Expr& s, const Expr& t);

// ψ[x := n̄] on free occurrences of x. Throws NotAVariable.
Expr substitute_numeral(const Expr& psi, const Expr& x, const Nat& n);
// ψ[x := t]. Throws UnsupportedShape if a free variable of t would be captured.
Expr substitute(const Expr& psi, const Expr& x, const Expr& t);

// ∀ over the free variables, fewest primes outermost. Throws NotAFormula.
Expr universal_closure(const Expr& phi);

Expr implies(const Expr& a, const Expr& b);  // ¬(a ∧ ¬b)
Expr disj(const Expr& a, const Expr& b);     // ¬(¬a ∧ ¬b)
Expr exists(const Expr& x, const Expr& body);  // ¬∀x¬body

// Number of leading ¬.
std::size_t neg_height(const Expr& e);
Expr strip_negations(const Expr& e);

}  // namespace goedel
