#include "goedel/truth.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "goedel/errors.hpp"
#include "goedel/rewriter.hpp"
#include "goedel/roots.hpp"
#include "goedel/syntax.hpp"

namespace goedel {

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Provable: return "provable";
    case Verdict::Refutable: return "refutable";
    case Verdict::Independent: return "independent";
    case Verdict::NotASentence: return "not-a-sentence";
    case Verdict::Unknown: return "unknown";
  }
  return "?";
}

std::string_view truth_name(Truth t) {
  switch (t) {
    case Truth::True: return "true";
    case Truth::False: return "false";
    case Truth::Unknown: return "unknown";
  }
  return "?";
}

Nat eval_closed_term(const Expr& t) {
  if (t.is_variable()) throw NotClosed(to_string(t) + " contains a variable");
  switch (t.op()) {
    case Op::Zero: return 0;
    case Op::One: return 1;
    case Op::Succ: return eval_closed_term(t.base()) + t.run();
    case Op::Add: return eval_closed_term(t.child(0)) + eval_closed_term(t.child(1));
    case Op::Mul: {
      Nat r = eval_closed_term(t.child(0)) * eval_closed_term(t.child(1));
      check_code_size(r, "eval_closed_term");
      return r;
    }
    default: throw NotATerm(to_string(t) + " is not a term");
  }
}

namespace {

using Tuple = std::vector<Nat>;

// Calls f on every tuple in ℕ^n ordered by sum, then lexicographically,
// until f returns true or `limit` tuples have been tried. Each search has
// its own limit so a verdict never depends on what was searched before.
void dovetail(std::size_t n, std::uint64_t limit, std::uint64_t& used,
              const std::function<bool(const Tuple&)>& f) {
  Tuple t(n);
  std::uint64_t mine = 0;
  std::function<bool(std::size_t, unsigned long)> fill = [&](std::size_t i, unsigned long rest) {
    if (i + 1 == n) {
      t[i] = rest;
      if (mine >= limit) return true;
      ++mine;
      ++used;
      return f(t);
    }
    for (unsigned long k = 0; k <= rest; ++k) {
      t[i] = k;
      if (fill(i + 1, rest - k)) return true;
    }
    return false;
  };
  for (unsigned long s = 0;; ++s)
    if (fill(0, s)) return;
}

Verdict swap(Verdict v) {
  if (v == Verdict::Provable) return Verdict::Refutable;
  if (v == Verdict::Refutable) return Verdict::Provable;
  return v;
}

Verdict meet(Verdict a, Verdict b) {
  if (a == Verdict::Refutable || b == Verdict::Refutable) return Verdict::Refutable;
  if (a == Verdict::Unknown || b == Verdict::Unknown) return Verdict::Unknown;
  if (a == Verdict::Provable && b == Verdict::Provable) return Verdict::Provable;
  if (a == Verdict::Provable || b == Verdict::Provable) return Verdict::Independent;
  return Verdict::Unknown;
}

bool has_quantifier(const Expr& e) {
  switch (e.op()) {
    case Op::Forall: return true;
    case Op::Not: return has_quantifier(e.child(0));
    case Op::And: return has_quantifier(e.child(0)) || has_quantifier(e.child(1));
    default: return false;
  }
}

class Decider {
 public:
  Decider(const Budget& b, const std::set<Expr>& declared) : budget_(b), declared_(declared) {}

  std::uint64_t used = 0;
  std::optional<std::vector<std::pair<Expr, Nat>>> witness;

  Verdict sentence(const Expr& phi, unsigned depth) {
    Verdict v = Verdict::Unknown;
    switch (phi.op()) {
      case Op::Eq:
        v = eval_closed_term(phi.child(0)) == eval_closed_term(phi.child(1)) ? Verdict::Provable
                                                                               : Verdict::Refutable;
        break;
      case Op::Not: v = swap(sentence(phi.child(0), depth)); break;
      case Op::And: v = meet(sentence(phi.child(0), depth), sentence(phi.child(1), depth)); break;
      case Op::Forall: v = universal({phi.child(0)}, phi.child(1), depth); break;
      default: throw NotASentence(to_string(phi));
    }
    if (v == Verdict::Unknown && declared_.count(phi)) v = Verdict::Independent;
    return v;
  }

 private:
  Verdict universal(std::vector<Expr> vars, Expr body, unsigned depth) {
    auto fv = free_variables(body);
    std::vector<Expr> w;
    for (const auto& x : fv)
      if (std::find(vars.begin(), vars.end(), x) != vars.end()) w.push_back(x);
    if (w.empty()) return sentence(body, depth);
    while (body.op() == Op::Not && body.child(0).op() == Op::Not) body = body.child(0).child(0);
    switch (body.op()) {
      case Op::And:
        return meet(universal(w, body.child(0), depth), universal(w, body.child(1), depth));
      case Op::Forall: {
        w.push_back(body.child(0));
        return universal(w, body.child(1), depth);
      }
      case Op::Eq: return equation(w, body);
      default: break;
    }
    if (!has_quantifier(body)) {
      if (w.size() == 1) return univariate(w[0], body);
      Verdict v = sign_definite(w, body);
      if (v != Verdict::Unknown) return v;
    }
    return search(w, body, depth);
  }

  Verdict equation(const std::vector<Expr>& w, const Expr& body) {
    Polynomial d = to_polynomial(body.child(0)) - to_polynomial(body.child(1));
    if (d.is_zero()) return Verdict::Provable;
    std::optional<Tuple> hit;
    dovetail(w.size(), budget_.max_instances, used, [&](const Tuple& t) {
      std::map<std::uint64_t, mpz_class> at;
      for (std::size_t i = 0; i < w.size(); ++i) at[*w[i].variable_index()] = t[i];
      if (d.evaluate(at) != 0) {
        hit = t;
        return true;
      }
      return false;
    });
    if (!hit) return Verdict::Unknown;
    record(w, *hit);
    return Verdict::Refutable;
  }

  Verdict univariate(const Expr& x, const Expr& body) {
    std::unordered_map<Expr, std::vector<mpz_class>, ExprHash> atoms;
    std::set<Nat> candidates;
    std::function<void(const Expr&)> collect = [&](const Expr& e) {
      if (e.op() == Op::Eq) {
        if (atoms.count(e)) return;
        Polynomial d = to_polynomial(e.child(0)) - to_polynomial(e.child(1));
        auto c = d.is_zero() ? std::vector<mpz_class>{} : d.univariate(*x.variable_index());
        if (!c.empty())
          for (const auto& r : natural_roots(c)) candidates.insert(r);
        atoms.emplace(e, std::move(c));
        return;
      }
      for (int i = 0; i < e.arity(); ++i) collect(e.child(i));
    };
    collect(body);
    Nat generic = 0;
    while (candidates.count(generic)) ++generic;
    candidates.insert(generic);
    std::function<bool(const Expr&, const Nat&)> holds = [&](const Expr& e, const Nat& at) {
      switch (e.op()) {
        case Op::Eq: {
          const auto& c = atoms.at(e);
          return c.empty() || eval_univariate(c, at) == 0;
        }
        case Op::Not: return !holds(e.child(0), at);
        case Op::And: return holds(e.child(0), at) && holds(e.child(1), at);
        default: throw NotAFormula(to_string(e));
      }
    };
    for (const auto& c : candidates) {
      ++used;
      if (!holds(body, c)) {
        record({x}, {c});
        return Verdict::Refutable;
      }
    }
    return Verdict::Provable;
  }

  // Atoms whose difference polynomial is identically zero are always true;
  // atoms whose difference has one strict sign on ℕ^n are always false.
  // Settles the body when no other atom matters.
  Verdict sign_definite(const std::vector<Expr>& w, const Expr& body) {
    std::function<int(const Expr&)> eval = [&](const Expr& e) -> int {  // 1 true, 0 false, -1 open
      switch (e.op()) {
        case Op::Eq: {
          Polynomial d = to_polynomial(e.child(0)) - to_polynomial(e.child(1));
          if (d.is_zero()) return 1;
          bool pos = true, neg = true;
          for (const auto& [m, c] : d.terms()) {
            if (c < 0) pos = false;
            if (c > 0) neg = false;
          }
          mpz_class c0 = d.constant_term();
          if ((pos && c0 > 0) || (neg && c0 < 0)) return 0;
          return -1;
        }
        case Op::Not: {
          int v = eval(e.child(0));
          return v < 0 ? -1 : 1 - v;
        }
        case Op::And: {
          int a = eval(e.child(0)), b = eval(e.child(1));
          if (a == 0 || b == 0) return 0;
          if (a == 1 && b == 1) return 1;
          return -1;
        }
        default: return -1;
      }
    };
    int v = eval(body);
    if (v == 1) return Verdict::Provable;
    if (v == 0) {
      record(w, Tuple(w.size(), 0));
      ++used;
      return Verdict::Refutable;
    }
    return Verdict::Unknown;
  }

  Verdict search(const std::vector<Expr>& w, const Expr& body, unsigned depth) {
    if (depth >= budget_.max_depth) return Verdict::Unknown;
    std::optional<Tuple> hit;
    dovetail(w.size(), budget_.max_instances, used, [&](const Tuple& t) {
      Expr inst = body;
      for (std::size_t i = 0; i < w.size(); ++i) inst = substitute_numeral(inst, w[i], t[i]);
      if (sentence(inst, depth + 1) == Verdict::Refutable) {
        hit = t;
        return true;
      }
      return false;
    });
    if (!hit) return Verdict::Unknown;
    record(w, *hit);
    return Verdict::Refutable;
  }

  void record(const std::vector<Expr>& w, const Tuple& t) {
    if (witness) return;
    witness.emplace();
    for (std::size_t i = 0; i < w.size(); ++i) witness->emplace_back(w[i], t[i]);
  }

  const Budget& budget_;
  const std::set<Expr>& declared_;
};

}  // namespace

Oracle::Oracle(Budget budget, std::set<Expr> declared_independent)
    : budget_(budget), declared_(std::move(declared_independent)) {}

Classification Oracle::classify(const Expr& e) const {
  Classification out;
  if (!is_sentence(e)) {
    out.verdict = Verdict::NotASentence;
    return out;
  }
  Decider d(budget_, declared_);
  out.verdict = d.sentence(e, 0);
  out.budget_used = d.used;
  if (out.verdict == Verdict::Refutable) out.witness = d.witness;
  return out;
}

Truth Oracle::truth(const Expr& e) const {
  if (!is_sentence(e)) throw NotASentence(to_string(e) + " is not a sentence");
  Decider d(budget_, {});
  switch (d.sentence(e, 0)) {
    case Verdict::Provable: return Truth::True;
    case Verdict::Refutable: return Truth::False;
    default: return Truth::Unknown;
  }
}

bool Oracle::fragment_provable(const Expr& e) const {
  if (!is_formula(e)) return false;
  Verdict v = classify(universal_closure(e)).verdict;
  if (v == Verdict::Unknown)
    throw OracleIncomplete("cannot classify " + to_string(universal_closure(e)));
  return v == Verdict::Provable;
}

Classification classify(const Expr& e, const Budget& budget) { return Oracle(budget).classify(e); }
Truth truth(const Expr& e, const Budget& budget) { return Oracle(budget).truth(e); }

}  // namespace goedel
