#include "goedel/generate.hpp"

#include <set>

#include "goedel/deviant.hpp"
#include "goedel/errors.hpp"
#include "goedel/syntax.hpp"

namespace goedel {

std::uint64_t below(Rng& rng, std::uint64_t n) { return n == 0 ? 0 : rng() % n; }

namespace {

bool coin(Rng& rng) { return rng() & 1; }

Expr leaf(Rng& rng, unsigned vars, unsigned max_numeral) {
  std::uint64_t pick = below(rng, vars == 0 ? 3 : 5);
  switch (pick) {
    case 0: return Expr::zero();
    case 1: return Expr::one();
    case 2: return Expr::numeral(static_cast<unsigned long>(below(rng, max_numeral + 1)));
    default: return Expr::variable(below(rng, vars));
  }
}

}  // namespace

Expr random_term(Rng& rng, unsigned depth, unsigned vars, unsigned max_numeral) {
  if (depth == 0 || below(rng, 4) == 0) return leaf(rng, vars, max_numeral);
  switch (below(rng, 3)) {
    case 0: return Expr::succ(random_term(rng, depth - 1, vars, max_numeral));
    case 1:
      return Expr::add(random_term(rng, depth - 1, vars, max_numeral),
                       random_term(rng, depth - 1, vars, max_numeral));
    default:
      return Expr::mul(random_term(rng, depth - 1, vars, max_numeral),
                       random_term(rng, depth - 1, vars, max_numeral));
  }
}

Expr semiring_variant(const Expr& t, Rng& rng) {
  switch (t.op()) {
    case Op::Succ: {
      Expr inner = semiring_variant(t.run() == 1 ? t.base() : Expr::succ(t.base(), t.run() - 1), rng);
      if (coin(rng)) return Expr::add(inner, Expr::one());
      return Expr::succ(inner);
    }
    case Op::Add:
    case Op::Mul: {
      bool add = t.op() == Op::Add;
      Expr a = semiring_variant(t.child(0), rng), b = semiring_variant(t.child(1), rng);
      switch (below(rng, 5)) {
        case 0: std::swap(a, b); break;
        case 1:
          // reassociate a∘(b0∘b1) → (a∘b0)∘b1
          if (b.op() == t.op()) {
            Expr l = add ? Expr::add(a, b.child(0)) : Expr::mul(a, b.child(0));
            return add ? Expr::add(l, b.child(1)) : Expr::mul(l, b.child(1));
          }
          break;
        case 2:
          // a·(b0+b1) → a·b0 + a·b1
          if (!add && b.op() == Op::Add)
            return Expr::add(Expr::mul(a, b.child(0)), Expr::mul(a, b.child(1)));
          break;
        case 3: return add ? Expr::add(Expr::add(a, b), Expr::zero()) : Expr::mul(Expr::one(), Expr::mul(a, b));
        default: break;
      }
      return add ? Expr::add(a, b) : Expr::mul(a, b);
    }
    default:
      if (below(rng, 4) == 0) return Expr::add(Expr::zero(), t);
      return t;
  }
}

std::vector<std::pair<Expr, Expr>> random_term_pairs(std::size_t n, std::uint64_t seed,
                                                     unsigned depth, unsigned vars) {
  Rng rng(seed);
  std::vector<std::pair<Expr, Expr>> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Expr a = random_term(rng, depth, vars);
    if (i % 2 == 0)
      out.emplace_back(a, semiring_variant(a, rng));
    else
      out.emplace_back(a, random_term(rng, depth, vars));
  }
  return out;
}

namespace {

Expr random_equation(Rng& rng, unsigned vars) {
  Expr a = random_term(rng, 2, vars);
  // Identities are rare among independent draws; make a third of them.
  Expr b = below(rng, 3) == 0 ? semiring_variant(a, rng) : random_term(rng, 2, vars);
  return Expr::eq(a, b);
}

}  // namespace

Expr random_formula(Rng& rng, unsigned depth, unsigned vars) {
  if (depth == 0 || below(rng, 3) == 0) return random_equation(rng, vars);
  switch (below(rng, 3)) {
    case 0: return Expr::neg(random_formula(rng, depth - 1, vars));
    case 1: return Expr::conj(random_formula(rng, depth - 1, vars), random_formula(rng, depth - 1, vars));
    default: return Expr::forall(Expr::variable(below(rng, vars)), random_formula(rng, depth - 1, vars));
  }
}

namespace {

// Every maximal term-layer part has a δtm code of at most 4096 bits. Each
// formula level above squares the code, so this keeps whole δ codes well
// under the cap.
bool term_codes_fit(const Expr& e) {
  if (in_term_layer(e)) {
    try {
      return bit_length(term_code(e)) <= 4096;
    } catch (const CodeTooLarge&) {
      return false;
    }
  }
  for (int i = 0; i < e.arity(); ++i)
    if (!term_codes_fit(e.child(i))) return false;
  return true;
}

bool definite(const Expr& s, const Oracle& oracle) {
  Verdict v = oracle.classify(s).verdict;
  return v == Verdict::Provable || v == Verdict::Refutable;
}

template <class Draw, class Keep>
std::vector<Expr> distinct(std::size_t n, Draw draw, Keep keep) {
  std::vector<Expr> out;
  std::set<Expr> seen;
  // Generous attempt cap so a bad generator cannot loop forever.
  for (std::size_t attempts = 0; out.size() < n && attempts < 200 * n + 1000; ++attempts) {
    Expr e = draw();
    if (seen.count(e) || !keep(e)) continue;
    seen.insert(e);
    out.push_back(e);
  }
  return out;
}

}  // namespace

std::vector<Expr> fragment_sentences(std::size_t n, std::uint64_t seed, const Oracle& oracle) {
  Rng rng(seed);
  return distinct(
      n,
      [&] {
        Expr f = random_formula(rng, 3, 2);
        return is_sentence(f) ? f : universal_closure(f);
      },
      [&](const Expr& e) { return term_codes_fit(e) && definite(e, oracle); });
}

std::vector<Expr> closed_items(std::size_t n, std::uint64_t seed, const Oracle& oracle) {
  Rng rng(seed);
  return distinct(
      n,
      [&] {
        switch (below(rng, 6)) {
          case 0: return random_term(rng, 2, 2);
          case 1: return random_formula(rng, 2, 2);
          default: {
            Expr f = random_formula(rng, 3, 2);
            return is_sentence(f) ? f : universal_closure(f);
          }
        }
      },
      [&](const Expr& e) { return term_codes_fit(e) && (!is_sentence(e) || definite(e, oracle)); });
}

namespace {

Expr random_expression(Rng& rng, unsigned depth) {
  if (depth == 0 || below(rng, 4) == 0) return leaf(rng, 2, 3);
  Op op = op_from_tag(static_cast<int>(3 + below(rng, 8)));
  std::vector<Expr> kids;
  for (int i = 0; i < arity(op); ++i) kids.push_back(random_expression(rng, depth - 1));
  return Expr::make(op, kids);
}

}  // namespace

std::vector<Expr> mixed_expressions(std::size_t n, std::uint64_t seed, const Oracle& oracle) {
  Rng rng(seed);
  return distinct(
      n,
      [&] {
        switch (below(rng, 4)) {
          case 0: return random_expression(rng, 3);
          case 1: return random_term(rng, 3, 2);
          case 2: return random_formula(rng, 2, 2);
          default: {
            Expr f = random_formula(rng, 2, 2);
            return is_sentence(f) ? f : universal_closure(f);
          }
        }
      },
      [&](const Expr& e) { return !is_sentence(e) || definite(e, oracle); });
}

}  // namespace goedel
