#include "goedel/rewriter.hpp"

#include <algorithm>
#include <memory>
#include <random>

#include "goedel/errors.hpp"
#include "goedel/syntax.hpp"

namespace goedel {

std::string_view rule_name(Rule r) {
  switch (r) {
    case Rule::Distribute: return "distribute";
    case Rule::SuccPlusOne: return "succ-plus-one";
    case Rule::OneTimes: return "one-times";
    case Rule::ZeroTimes: return "zero-times";
    case Rule::PlusZero: return "plus-zero";
  }
  return "?";
}

bool RewriteTrace::weights_decrease() const {
  return std::all_of(steps.begin(), steps.end(),
                     [](const RewriteStep& s) {
                       return s.weight_after < s.weight_before && s.term_weight_after < s.term_weight_before;
                     });
}

namespace {

constexpr unsigned long kMaxUnfoldedRun = 100'000;
constexpr std::size_t kMaxSteps = 2'000'000;

// Flattened term. Add and Mul hold >= 2 arguments sorted by key.
struct Ac;
using AcP = std::shared_ptr<const Ac>;

struct Ac {
  Op kind;  // Zero, One, Var, Succ, Add, Mul
  std::uint64_t var = 0;
  std::vector<AcP> kids;
  std::string key;
  Nat w2;
  mutable bool normal = false;
  mutable std::optional<Expr> expr;  // memo for to_expr, shares unchanged subtrees
};

AcP leaf(Op kind, std::uint64_t var = 0) {
  auto n = std::make_shared<Ac>();
  n->kind = kind;
  n->var = var;
  n->w2 = 2;
  n->normal = true;
  if (kind == Op::Zero) n->key = "0";
  else if (kind == Op::One) n->key = "1";
  else n->key = "(v " + std::to_string(var) + ")";
  return n;
}

AcP mk_succ(AcP k) {
  auto n = std::make_shared<Ac>();
  n->kind = Op::Succ;
  n->key = "(S " + k->key + ")";
  n->w2 = k->w2 + 4;
  n->kids = {std::move(k)};
  return n;
}

AcP mk_assoc(Op kind, std::vector<AcP> in) {
  std::vector<AcP> flat;
  for (auto& k : in) {
    if (k->kind == kind) flat.insert(flat.end(), k->kids.begin(), k->kids.end());
    else flat.push_back(std::move(k));
  }
  if (flat.size() == 1) return flat[0];
  std::stable_sort(flat.begin(), flat.end(), [](const AcP& a, const AcP& b) { return a->key < b->key; });
  auto n = std::make_shared<Ac>();
  n->kind = kind;
  n->key = kind == Op::Add ? "(+" : "(*";
  n->w2 = kind == Op::Add ? Nat(flat.size() - 1) : Nat(1);
  for (const auto& k : flat) {
    n->key += ' ';
    n->key += k->key;
    if (kind == Op::Add) n->w2 += k->w2;
    else n->w2 *= k->w2;
  }
  n->key += ')';
  n->kids = std::move(flat);
  return n;
}

AcP from_expr(const Expr& e) {
  if (e.is_variable()) return leaf(Op::Var, *e.variable_index());
  switch (e.op()) {
    case Op::Zero: return leaf(Op::Zero);
    case Op::One: return leaf(Op::One);
    case Op::Succ: {
      if (!e.run().fits_ulong_p() || e.run().get_ui() > kMaxUnfoldedRun)
        throw CodeTooLarge("numeral too large for the rewriter");
      AcP r = from_expr(e.base());
      for (unsigned long i = 0; i < e.run().get_ui(); ++i) r = mk_succ(r);
      return r;
    }
    case Op::Add:
    case Op::Mul: return mk_assoc(e.op(), {from_expr(e.child(0)), from_expr(e.child(1))});
    default: throw NotATerm(to_string(e) + " is not a term");
  }
}

Expr build_expr(const AcP& n);

Expr to_expr(const AcP& n) {
  if (!n->expr) n->expr = build_expr(n);
  return *n->expr;
}

Expr build_expr(const AcP& n) {
  switch (n->kind) {
    case Op::Zero: return Expr::zero();
    case Op::One: return Expr::one();
    case Op::Var: return Expr::variable(n->var);
    case Op::Succ: return Expr::succ(to_expr(n->kids[0]));
    default: {
      Expr acc = to_expr(n->kids[0]);
      for (std::size_t i = 1; i < n->kids.size(); ++i)
        acc = n->kind == Op::Add ? Expr::add(acc, to_expr(n->kids[i])) : Expr::mul(acc, to_expr(n->kids[i]));
      return acc;
    }
  }
}

std::vector<AcP> without(const std::vector<AcP>& v, std::size_t i) {
  std::vector<AcP> out;
  for (std::size_t j = 0; j < v.size(); ++j)
    if (j != i) out.push_back(v[j]);
  return out;
}

std::size_t find_kind(const Ac& n, Op kind) {
  for (std::size_t i = 0; i < n.kids.size(); ++i)
    if (n.kids[i]->kind == kind) return i;
  return n.kids.size();
}

bool applies(const Ac& n, Rule r) {
  switch (r) {
    case Rule::Distribute: return n.kind == Op::Mul && find_kind(n, Op::Add) < n.kids.size();
    case Rule::SuccPlusOne: return n.kind == Op::Succ;
    case Rule::OneTimes: return n.kind == Op::Mul && find_kind(n, Op::One) < n.kids.size();
    case Rule::ZeroTimes: return n.kind == Op::Mul && find_kind(n, Op::Zero) < n.kids.size();
    case Rule::PlusZero: return n.kind == Op::Add && find_kind(n, Op::Zero) < n.kids.size();
  }
  return false;
}

// `choice` picks which sum (rule 1) and which summand to split off; the
// leftmost-innermost strategy always passes 0.
AcP apply(const Ac& n, Rule r, std::uint64_t choice) {
  switch (r) {
    case Rule::Distribute: {
      std::vector<std::size_t> sums;
      for (std::size_t i = 0; i < n.kids.size(); ++i)
        if (n.kids[i]->kind == Op::Add) sums.push_back(i);
      std::size_t si = sums[choice % sums.size()];
      const Ac& sum = *n.kids[si];
      std::size_t ui = (choice / sums.size()) % sum.kids.size();
      std::vector<AcP> rest = without(n.kids, si);
      AcP t = mk_assoc(Op::Mul, rest);
      AcP u = sum.kids[ui];
      AcP v = mk_assoc(Op::Add, without(sum.kids, ui));
      return mk_assoc(Op::Add, {mk_assoc(Op::Mul, {t, u}), mk_assoc(Op::Mul, {t, v})});
    }
    case Rule::SuccPlusOne: return mk_assoc(Op::Add, {n.kids[0], leaf(Op::One)});
    case Rule::OneTimes: return mk_assoc(Op::Mul, without(n.kids, find_kind(n, Op::One)));
    case Rule::ZeroTimes: return leaf(Op::Zero);
    case Rule::PlusZero: return mk_assoc(Op::Add, without(n.kids, find_kind(n, Op::Zero)));
  }
  throw std::logic_error("unknown rule");
}

constexpr Rule kRules[] = {Rule::Distribute, Rule::SuccPlusOne, Rule::OneTimes, Rule::ZeroTimes,
                           Rule::PlusZero};

struct Redex {
  std::vector<std::size_t> path;
  Rule rule;
};

bool leftmost_innermost(const AcP& n, std::vector<std::size_t>& path, Redex& out) {
  for (std::size_t i = 0; i < n->kids.size(); ++i) {
    path.push_back(i);
    if (leftmost_innermost(n->kids[i], path, out)) return true;
    path.pop_back();
  }
  for (Rule r : kRules)
    if (applies(*n, r)) {
      out = {path, r};
      return true;
    }
  return false;
}

void all_redexes(const AcP& n, std::vector<std::size_t>& path, std::vector<Redex>& out) {
  for (std::size_t i = 0; i < n->kids.size(); ++i) {
    path.push_back(i);
    all_redexes(n->kids[i], path, out);
    path.pop_back();
  }
  for (Rule r : kRules)
    if (applies(*n, r)) out.push_back({path, r});
}

AcP subterm_at(const AcP& n, const std::vector<std::size_t>& path) {
  AcP cur = n;
  for (std::size_t i : path) cur = cur->kids[i];
  return cur;
}

AcP replace_at(const AcP& n, const std::vector<std::size_t>& path, std::size_t depth, const AcP& with) {
  if (depth == path.size()) return with;
  std::vector<AcP> kids = n->kids;
  kids[path[depth]] = replace_at(kids[path[depth]], path, depth + 1, with);
  if (n->kind == Op::Succ) return mk_succ(kids[0]);
  return mk_assoc(n->kind, std::move(kids));
}

// Weight of the whole term as a function of the weight at the current
// position: a*w + b. Every weight operation is affine in each argument with
// a positive factor, so a local decrease is a global one.
struct Context {
  Nat a = 1, b = 0;
  Nat at(const Nat& w) const { return a * w + b; }
};

// Innermost normalization: children first, in canonical order, then the
// node itself with the lowest applicable rule. Rule 1 splits the sum into
// two halves, which keeps the recursion depth logarithmic in its length.
// Without a trace the context arithmetic is skipped.
class Normalizer {
 public:
  explicit Normalizer(RewriteTrace* trace) : trace_(trace) {}

  AcP normalize(const AcP& n, const Context& ctx) {
    if (n->normal) return n;
    AcP r = visit(n, ctx);
    r->normal = true;
    return r;
  }

 private:
  RewriteTrace* trace_;
  std::vector<std::size_t> path_;
  std::size_t steps_ = 0;

  void record(Rule r, const AcP& before, const AcP& after, const Context& ctx) {
    if (++steps_ > kMaxSteps) throw OracleIncomplete("rewrite step limit reached");
    if (!trace_) return;
    trace_->steps.push_back({r, path_, to_expr(before), to_expr(after), before->w2, after->w2,
                             ctx.at(before->w2), ctx.at(after->w2)});
  }

  AcP visit(const AcP& n, const Context& ctx) {
    switch (n->kind) {
      case Op::Succ: return succ_chain(n, ctx);
      case Op::Add: return plus_zero(mk_assoc(Op::Add, kids_normalized(*n, ctx)), ctx);
      case Op::Mul: return times(mk_assoc(Op::Mul, kids_normalized(*n, ctx)), ctx);
      default: return n;
    }
  }

  std::vector<AcP> kids_normalized(const Ac& n, const Context& ctx) {
    std::vector<AcP> kids = n.kids;
    const bool add = n.kind == Op::Add;
    Nat total = add ? Nat(kids.size() - 1) : Nat(1);
    if (trace_)
      for (const auto& k : kids) add ? total += k->w2 : total *= k->w2;
    for (std::size_t i = 0; i < kids.size(); ++i) {
      if (kids[i]->normal) continue;
      Context inner;
      if (trace_) {
        if (add) {
          inner = {ctx.a, ctx.a * (total - kids[i]->w2) + ctx.b};
        } else {
          Nat rest;
          mpz_divexact(rest.get_mpz_t(), total.get_mpz_t(), kids[i]->w2.get_mpz_t());
          inner = {ctx.a * rest, ctx.b};
        }
      }
      path_.push_back(i);
      AcP k = normalize(kids[i], inner);
      path_.pop_back();
      if (trace_) {
        if (add) {
          total += k->w2;
          total -= kids[i]->w2;
        } else {
          total *= k->w2;
          mpz_divexact(total.get_mpz_t(), total.get_mpz_t(), kids[i]->w2.get_mpz_t());
        }
      }
      kids[i] = std::move(k);
    }
    return kids;
  }

  // S^d b: normalize b, then rule 2 from the innermost S outwards.
  AcP succ_chain(const AcP& n, const Context& ctx) {
    std::size_t d = 0;
    AcP base = n;
    while (base->kind == Op::Succ) {
      base = base->kids[0];
      ++d;
    }
    auto level = [&](std::size_t i) { return Context{ctx.a, ctx.b + 4 * Nat(i) * ctx.a}; };
    path_.insert(path_.end(), d, 0);
    AcP cur = normalize(base, trace_ ? level(d) : Context{});
    for (std::size_t i = d; i-- > 0;) {
      path_.pop_back();
      Context c = trace_ ? level(i) : Context{};
      AcP before = mk_succ(cur);
      AcP after = mk_assoc(Op::Add, {cur, leaf(Op::One)});
      record(Rule::SuccPlusOne, before, after, c);
      cur = plus_zero(after, c);
      cur->normal = true;
    }
    return cur;
  }

  AcP plus_zero(AcP n, const Context& ctx) {
    while (n->kind == Op::Add && find_kind(*n, Op::Zero) < n->kids.size()) {
      AcP after = mk_assoc(Op::Add, without(n->kids, find_kind(*n, Op::Zero)));
      record(Rule::PlusZero, n, after, ctx);
      n = std::move(after);
    }
    return n;
  }

  AcP times(AcP n, const Context& ctx) {
    while (n->kind == Op::Mul) {
      std::size_t si = find_kind(*n, Op::Add);
      if (si < n->kids.size()) {
        const auto& summands = n->kids[si]->kids;
        auto mid = summands.begin() + static_cast<std::ptrdiff_t>(summands.size() / 2);
        AcP t = mk_assoc(Op::Mul, without(n->kids, si));
        AcP u = mk_assoc(Op::Add, {summands.begin(), mid});
        AcP v = mk_assoc(Op::Add, {mid, summands.end()});
        AcP after = mk_assoc(Op::Add, {mk_assoc(Op::Mul, {t, u}), mk_assoc(Op::Mul, {t, v})});
        record(Rule::Distribute, n, after, ctx);
        return normalize(after, ctx);
      }
      std::size_t oi = find_kind(*n, Op::One);
      if (oi < n->kids.size()) {
        AcP after = mk_assoc(Op::Mul, without(n->kids, oi));
        record(Rule::OneTimes, n, after, ctx);
        n = std::move(after);
        continue;
      }
      if (find_kind(*n, Op::Zero) < n->kids.size()) {
        AcP after = leaf(Op::Zero);
        record(Rule::ZeroTimes, n, after, ctx);
        return after;
      }
      break;
    }
    return n;
  }
};

}  // namespace

Expr ac_canonical(const Expr& t) { return to_expr(from_expr(t)); }
std::string ac_key(const Expr& t) { return from_expr(t)->key; }
bool ac_equal(const Expr& a, const Expr& b) { return ac_key(a) == ac_key(b); }

std::optional<std::pair<Expr, Rule>> rewrite_step(const Expr& t) {
  AcP n = from_expr(t);
  std::vector<std::size_t> path;
  Redex rx;
  if (!leftmost_innermost(n, path, rx)) return std::nullopt;
  return std::make_pair(to_expr(replace_at(n, rx.path, 0, apply(*subterm_at(n, rx.path), rx.rule, 0))),
                        rx.rule);
}

NormalForm normal_form(const Expr& t, Strategy strategy) {
  NormalForm out;
  if (strategy.kind == Strategy::Kind::LeftmostInnermost) {
    out.term = to_expr(Normalizer(&out.trace).normalize(from_expr(t), {}));
    return out;
  }
  // Random redex and random AC split at every step, searched from the root.
  AcP cur = from_expr(t);
  std::mt19937_64 rng(strategy.seed);
  for (std::size_t steps = 0;; ++steps) {
    if (steps >= kMaxSteps) throw OracleIncomplete("rewrite step limit reached");
    std::vector<Redex> all;
    std::vector<std::size_t> path;
    all_redexes(cur, path, all);
    if (all.empty()) break;
    Redex rx = all[rng() % all.size()];
    AcP before = subterm_at(cur, rx.path);
    AcP after = apply(*before, rx.rule, rng());
    AcP next = replace_at(cur, rx.path, 0, after);
    out.trace.steps.push_back({rx.rule, rx.path, to_expr(before), to_expr(after), before->w2, after->w2,
                               cur->w2, next->w2});
    cur = next;
  }
  out.term = to_expr(cur);
  return out;
}

Polynomial weight(const Expr& t) {
  if (t.is_variable()) return Polynomial::variable(*t.variable_index());
  switch (t.op()) {
    case Op::Zero:
    case Op::One: return Polynomial::constant(2);
    case Op::Succ: return weight(t.base()) + Polynomial::constant(4 * t.run());
    case Op::Add: return weight(t.child(0)) + weight(t.child(1)) + Polynomial::constant(1);
    case Op::Mul: return weight(t.child(0)) * weight(t.child(1));
    default: throw NotATerm(to_string(t) + " is not a term");
  }
}

Nat weight_at_two(const Expr& t) { return from_expr(t)->w2; }

Polynomial to_polynomial(const Expr& t) {
  if (t.is_variable()) return Polynomial::variable(*t.variable_index());
  switch (t.op()) {
    case Op::Zero: return {};
    case Op::One: return Polynomial::constant(1);
    case Op::Succ: return to_polynomial(t.base()) + Polynomial::constant(t.run());
    case Op::Add: return to_polynomial(t.child(0)) + to_polynomial(t.child(1));
    case Op::Mul: return to_polynomial(t.child(0)) * to_polynomial(t.child(1));
    default: throw NotATerm(to_string(t) + " is not a term");
  }
}

bool provably_equal(const Expr& a, const Expr& b) {
  if (!is_term(a)) throw NotATerm(to_string(a) + " is not a term");
  if (!is_term(b)) throw NotATerm(to_string(b) + " is not a term");
  Normalizer n(nullptr);
  return n.normalize(from_expr(a), {})->key == n.normalize(from_expr(b), {})->key;
}

std::vector<Polynomial> rule_weight_deltas() {
  const Expr t = Expr::variable(0), u = Expr::variable(1), v = Expr::variable(2);
  const Expr z = Expr::zero(), o = Expr::one();
  std::vector<std::pair<Expr, Expr>> rules = {
      {Expr::mul(t, Expr::add(u, v)), Expr::add(Expr::mul(t, u), Expr::mul(t, v))},
      {Expr::succ(t), Expr::add(t, o)},
      {Expr::mul(o, t), t},
      {Expr::mul(z, t), z},
      {Expr::add(t, z), t},
  };
  std::vector<Polynomial> out;
  for (const auto& [l, r] : rules) out.push_back(weight(l) - weight(r));
  return out;
}

bool decreases_on_domain(const Polynomial& delta) {
  for (const auto& [m, c] : delta.terms())
    if (!m.empty() && c < 0) return false;
  return delta.evaluate_all(2) > 0;
}

std::vector<std::pair<Expr, Expr>> critical_pairs() {
  const Expr t = Expr::variable(0), u = Expr::variable(1), v = Expr::variable(2);
  const Expr z = Expr::zero(), o = Expr::one();
  return {
      {Expr::add(u, v), Expr::add(Expr::mul(o, u), Expr::mul(o, v))},
      {z, Expr::add(Expr::mul(z, u), Expr::mul(z, v))},
      {Expr::mul(t, u), Expr::add(Expr::mul(t, u), Expr::mul(t, z))},
  };
}

}  // namespace goedel
