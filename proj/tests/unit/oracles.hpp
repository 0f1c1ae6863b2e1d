#pragma once

// Reference computations written independently of the library code they
// check. They use only the Expr accessors and GMP.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

#include "goedel/expr.hpp"

namespace oracle {

using goedel::Expr;
using goedel::Op;

// Cantor pairing by walking the diagonals one code at a time. The first
// code is 1 and one code is skipped after every diagonal.
inline std::map<std::pair<unsigned, unsigned>, unsigned> pairing_table(unsigned diagonals) {
  std::map<std::pair<unsigned, unsigned>, unsigned> t;
  unsigned cur = 1;
  for (unsigned d = 0; d < diagonals; ++d) {
    for (unsigned y = 0; y <= d; ++y) t[{d - y, y}] = cur++;
    ++cur;
  }
  return t;
}

inline mpz_class cantor(const mpz_class& x, const mpz_class& y) {
  mpz_class s = x + y;
  return (s + 1) * (s + 2) / 2 + y;
}

// Value of a term with every variable (v i) read as at[i], missing ones 0.
inline mpz_class eval(const Expr& t, const std::map<std::uint64_t, mpz_class>& at = {}) {
  switch (t.op()) {
    case Op::Zero: return 0;
    case Op::One: return 1;
    case Op::Succ: return oracle::eval(t.base(), at) + t.run();
    case Op::Add: return oracle::eval(t.child(0), at) + oracle::eval(t.child(1), at);
    case Op::Mul: return oracle::eval(t.child(0), at) * oracle::eval(t.child(1), at);
    default: {
      auto i = t.variable_index();
      if (!i) throw std::invalid_argument("not a term");
      auto it = at.find(*i);
      return it == at.end() ? mpz_class(0) : it->second;
    }
  }
}

// Plain tree recursion for the standard numbering.
inline mpz_class gamma(const Expr& e) {
  mpz_class t = static_cast<int>(e.op());
  switch (e.arity()) {
    case 0: return cantor(t, 0);
    case 1: return cantor(t, oracle::gamma(e.child(0)));
    default: return cantor(t, cantor(oracle::gamma(e.child(0)), oracle::gamma(e.child(1))));
  }
}

inline mpz_class pow(unsigned long b, const mpz_class& e) {
  if (e > (1UL << 22)) throw std::range_error("exponent too large");
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), b, e.get_ui());
  return r;
}

// δtm by its defining table.
inline mpz_class term_code(const Expr& e) {
  switch (e.op()) {
    case Op::Zero: return 1;
    case Op::One: return 2;
    case Op::Var: return 3;
    case Op::Succ: return 2 * oracle::pow(3, oracle::term_code(e.child(0)));
    case Op::Prime: return 4 * oracle::pow(3, oracle::term_code(e.child(0)));
    case Op::Add:
      return 8 * oracle::pow(3, oracle::term_code(e.child(0))) *
             oracle::pow(5, oracle::term_code(e.child(1)));
    case Op::Mul:
      return 16 * oracle::pow(3, oracle::term_code(e.child(0))) *
             oracle::pow(5, oracle::term_code(e.child(1)));
    default: throw std::invalid_argument("not in the term layer");
  }
}

}  // namespace oracle
