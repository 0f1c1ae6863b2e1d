#include "goedel/syntax.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "goedel/errors.hpp"

namespace goedel {

bool is_variable(const Expr& e) { return e.is_variable(); }

bool is_term(const Expr& e) {
  switch (e.op()) {
    case Op::Zero:
    case Op::One:
    case Op::Var: return true;
    case Op::Prime: return e.is_variable();
    case Op::Succ: return is_term(e.base());
    case Op::Add:
    case Op::Mul: return is_term(e.child(0)) && is_term(e.child(1));
    default: return false;
  }
}

bool is_formula(const Expr& e) {
  switch (e.op()) {
    case Op::Eq: return is_term(e.child(0)) && is_term(e.child(1));
    case Op::Not: return is_formula(e.child(0));
    case Op::And: return is_formula(e.child(0)) && is_formula(e.child(1));
    case Op::Forall: return e.child(0).is_variable() && is_formula(e.child(1));
    default: return false;
  }
}

namespace {

void collect_free(const Expr& e, std::vector<Expr>& bound, std::set<Expr>& out) {
  if (e.is_variable()) {
    if (std::find(bound.begin(), bound.end(), e) == bound.end()) out.insert(e);
    return;
  }
  switch (e.op()) {
    case Op::Zero:
    case Op::One: return;
    case Op::Succ:
    case Op::Prime: collect_free(e.base(), bound, out); return;
    case Op::Forall:
      if (e.child(0).is_variable()) {
        bound.push_back(e.child(0));
        collect_free(e.child(1), bound, out);
        bound.pop_back();
        return;
      }
      [[fallthrough]];
    default:
      for (int i = 0; i < e.arity(); ++i) collect_free(e.child(i), bound, out);
  }
}

bool variable_less(const Expr& a, const Expr& b) {
  return *a.variable_index() < *b.variable_index();
}

}  // namespace

std::vector<Expr> free_variables(const Expr& e) {
  std::vector<Expr> bound;
  std::set<Expr> found;
  collect_free(e, bound, found);
  std::vector<Expr> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), variable_less);
  return out;
}

bool is_closed(const Expr& e) { return free_variables(e).empty(); }
bool is_sentence(const Expr& e) { return is_formula(e) && is_closed(e); }

bool occurs(const Expr& x, const Expr& e) {
  if (e == x) return true;
  if (e.is_variable() || e.arity() == 0) return false;
  if (e.op() == Op::Succ || e.op() == Op::Prime) return occurs(x, e.base());
  for (int i = 0; i < e.arity(); ++i)
    if (occurs(x, e.child(i))) return true;
  return false;
}

namespace {

void max_variable(const Expr& e, std::uint64_t& best, bool& any) {
  if (e.is_variable()) {
    best = any ? std::max(best, *e.variable_index()) : *e.variable_index();
    any = true;
    return;
  }
  if (e.op() == Op::Succ || e.op() == Op::Prime) return max_variable(e.base(), best, any);
  for (int i = 0; i < e.arity(); ++i) max_variable(e.child(i), best, any);
}

}  // namespace

Expr fresh_variable(const Expr& e) {
  std::uint64_t best = 0;
  bool any = false;
  max_variable(e, best, any);
  return Expr::variable(any ? best + 1 : 0);
}

namespace {

void collect_subs(const Expr& e, unsigned window, std::unordered_set<Expr, ExprHash>& seen,
                  std::vector<Expr>& out) {
  if (!seen.insert(e).second) return;
  out.push_back(e);
  if (e.op() == Op::Succ || e.op() == Op::Prime) {
    const Nat& r = e.run();
    const Expr& b = e.base();
    auto level = [&](const Nat& k) {
      Expr s = e.op() == Op::Succ ? Expr::succ(b, k) : Expr::prime(b, k);
      if (seen.insert(s).second) out.push_back(s);
    };
    if (r <= 2 * window) {
      for (Nat k = r - 1; k >= 1; --k) level(k);
    } else {
      for (unsigned i = 1; i <= window; ++i) level(r - i);
      for (unsigned i = 1; i <= window; ++i) level(Nat(i));
    }
    collect_subs(b, window, seen, out);
    return;
  }
  for (int i = 0; i < e.arity(); ++i) collect_subs(e.child(i), window, seen, out);
}

}  // namespace

std::vector<Expr> subexpressions(const Expr& e, unsigned run_window) {
  std::unordered_set<Expr, ExprHash> seen;
  std::vector<Expr> out;
  collect_subs(e, run_window, seen, out);
  return out;
}

bool is_proper_subexpression(const Expr& s, const Expr& t) {
  if (t.arity() == 0) return false;
  if (t.op() == Op::Succ || t.op() == Op::Prime) {
    if (s.op() == t.op() && s.base() == t.base() && s.run() < t.run()) return true;
    if (s == t.base()) return true;
    return is_proper_subexpression(s, t.base());
  }
  for (int i = 0; i < t.arity(); ++i) {
    Expr c = t.child(i);
    if (s == c || is_proper_subexpression(s, c)) return true;
  }
  return false;
}

namespace {

Expr subst(const Expr& e, const Expr& x, const Expr& t, const std::vector<Expr>& t_free) {
  if (e.is_variable()) return e == x ? t : e;
  switch (e.op()) {
    case Op::Zero:
    case Op::One: return e;
    case Op::Succ: return Expr::succ(subst(e.base(), x, t, t_free), e.run());
    case Op::Prime: return Expr::prime(subst(e.base(), x, t, t_free), e.run());
    case Op::Forall: {
      Expr y = e.child(0);
      if (y.is_variable()) {
        if (y == x) return e;
        Expr body = e.child(1);
        if (std::find(t_free.begin(), t_free.end(), y) != t_free.end() && occurs(x, body))
          throw UnsupportedShape("substitution would capture " + to_string(y));
        return Expr::forall(y, subst(body, x, t, t_free));
      }
      break;
    }
    default: break;
  }
  std::vector<Expr> kids;
  for (int i = 0; i < e.arity(); ++i) kids.push_back(subst(e.child(i), x, t, t_free));
  return Expr::make(e.op(), kids);
}

}  // namespace

Expr substitute_numeral(const Expr& psi, const Expr& x, const Nat& n) {
  if (!x.is_variable()) throw NotAVariable(to_string(x) + " is not a variable");
  return subst(psi, x, Expr::numeral(n), {});
}

Expr substitute(const Expr& psi, const Expr& x, const Expr& t) {
  if (!x.is_variable()) throw NotAVariable(to_string(x) + " is not a variable");
  return subst(psi, x, t, free_variables(t));
}

Expr universal_closure(const Expr& phi) {
  if (!is_formula(phi)) throw NotAFormula(to_string(phi) + " is not a formula");
  auto vars = free_variables(phi);
  Expr out = phi;
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) out = Expr::forall(*it, out);
  return out;
}

Expr implies(const Expr& a, const Expr& b) { return Expr::neg(Expr::conj(a, Expr::neg(b))); }
Expr disj(const Expr& a, const Expr& b) {
  return Expr::neg(Expr::conj(Expr::neg(a), Expr::neg(b)));
}
Expr exists(const Expr& x, const Expr& body) { return Expr::neg(Expr::forall(x, Expr::neg(body))); }

std::size_t neg_height(const Expr& e) {
  std::size_t h = 0;
  Expr cur = e;
  while (cur.op() == Op::Not) {
    ++h;
    cur = cur.child(0);
  }
  return h;
}

Expr strip_negations(const Expr& e) {
  Expr cur = e;
  while (cur.op() == Op::Not) cur = cur.child(0);
  return cur;
}

}  // namespace goedel
