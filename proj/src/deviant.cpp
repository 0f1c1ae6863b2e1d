#include "goedel/deviant.hpp"

#include <set>
#include <stdexcept>

#include "goedel/errors.hpp"
#include "goedel/rewriter.hpp"
#include "goedel/standard.hpp"
#include "goedel/syntax.hpp"

namespace goedel {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Lambda: return "Lambda";
    case Family::Theta: return "Theta";
    case Family::Upsilon: return "Upsilon";
  }
  return "?";
}

std::string_view category_name(Category c) {
  switch (c) {
    case Category::Term: return "term";
    case Category::Eq: return "eq";
    case Category::Not: return "not";
    case Category::And: return "and";
    case Category::Forall: return "forall";
  }
  return "?";
}

const std::vector<Slot>& slot_table(Scheme s) {
  using F = Family;
  using C = Category;
  static const std::vector<Slot> neg = {
      {F::Theta, C::Term, 10, 1},  {F::Lambda, C::Eq, 8, 0},     {F::Theta, C::Eq, 10, 3},
      {F::Lambda, C::Not, 8, 2},   {F::Theta, C::Not, 10, 5},    {F::Lambda, C::And, 8, 4},
      {F::Theta, C::And, 10, 7},   {F::Lambda, C::Forall, 8, 6}, {F::Theta, C::Forall, 10, 9},
  };
  static const std::vector<Slot> all = {
      {F::Upsilon, C::Term, 15, 2},    {F::Lambda, C::Eq, 12, 0},      {F::Theta, C::Eq, 12, 1},
      {F::Upsilon, C::Eq, 15, 5},      {F::Lambda, C::Not, 12, 3},     {F::Theta, C::Not, 12, 4},
      {F::Upsilon, C::Not, 15, 8},     {F::Lambda, C::And, 12, 6},     {F::Theta, C::And, 12, 7},
      {F::Upsilon, C::And, 15, 11},    {F::Lambda, C::Forall, 12, 9},  {F::Theta, C::Forall, 12, 10},
      {F::Upsilon, C::Forall, 15, 14},
  };
  return s == Scheme::Neg ? neg : all;
}

Code slot_code(Scheme s, Family f, Category c, const Nat& x, const Nat& y) {
  for (const auto& slot : slot_table(s))
    if (slot.family == f && slot.category == c) {
      Code out = slot.multiplier * pair(x, y) + slot.offset;
      check_code_size(out, "slot_code");
      return out;
    }
  throw std::invalid_argument("no such slot");
}

std::optional<SlotHit> slot_of(Scheme s, const Code& c) {
  for (const auto& slot : slot_table(s)) {
    if (c < slot.offset) continue;
    Nat rest = c - slot.offset;
    if (mpz_divisible_ui_p(rest.get_mpz_t(), slot.multiplier) == 0) continue;
    Nat q = rest / slot.multiplier;
    if (!in_pair_image(q)) return std::nullopt;
    auto [x, y] = unpair(q);
    return SlotHit{slot.family, slot.category, x, y};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- δtm

bool in_term_layer(const Expr& e) {
  if (!is_term_op(e.op())) return false;
  if (e.op() == Op::Succ || e.op() == Op::Prime) return in_term_layer(e.base());
  for (int i = 0; i < e.arity(); ++i)
    if (!in_term_layer(e.child(i))) return false;
  return true;
}

namespace {

constexpr unsigned long kMaxExponent = 1ul << 21;

Nat power(unsigned long base, const Nat& exp) {
  if (exp > kMaxExponent) throw CodeTooLarge("term code exponent too large");
  Nat r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp.get_ui());
  return r;
}

}  // namespace

Code term_code(const Expr& e) {
  switch (e.op()) {
    case Op::Zero: return 1;
    case Op::One: return 2;
    case Op::Var: return 3;
    case Op::Succ:
    case Op::Prime: {
      Code c = term_code(e.base());
      unsigned long f = e.op() == Op::Succ ? 2 : 4;
      for (Nat i = 0; i < e.run(); ++i) c = f * power(3, c);
      return c;
    }
    case Op::Add:
    case Op::Mul: {
      Code a = term_code(e.child(0));
      Code b = term_code(e.child(1));
      Code c = (e.op() == Op::Add ? 8 : 16) * power(3, a);
      c *= power(5, b);
      check_code_size(c, "term_code");
      return c;
    }
    default: throw NotTermLayer(to_string(e) + " is outside the term layer");
  }
}

std::optional<Expr> term_decode(const Code& c) {
  if (c <= 0) return std::nullopt;
  if (c == 1) return Expr::zero();
  if (c == 2) return Expr::one();
  if (c == 3) return Expr::var();
  mp_bitcnt_t twos = mpz_scan1(c.get_mpz_t(), 0);
  if (twos < 1 || twos > 4) return std::nullopt;
  Nat rest = c >> twos;
  Nat tmp;
  Nat n = static_cast<unsigned long>(mpz_remove(tmp.get_mpz_t(), rest.get_mpz_t(), Nat(3).get_mpz_t()));
  rest = tmp;
  Nat m = static_cast<unsigned long>(mpz_remove(tmp.get_mpz_t(), rest.get_mpz_t(), Nat(5).get_mpz_t()));
  if (tmp != 1 || n == 0) return std::nullopt;
  auto a = term_decode(n);
  if (!a) return std::nullopt;
  switch (twos) {
    case 1:
      if (m != 0) return std::nullopt;
      return Expr::succ(*a);
    case 2:
      if (m != 0) return std::nullopt;
      return Expr::prime(*a);
    default: {
      if (m == 0) return std::nullopt;
      auto b = term_decode(m);
      if (!b) return std::nullopt;
      return twos == 3 ? Expr::add(*a, *b) : Expr::mul(*a, *b);
    }
  }
}

namespace {

bool even(const Code& c) { return mpz_even_p(c.get_mpz_t()) != 0; }
unsigned long mod3(const Code& c) { return mpz_fdiv_ui(c.get_mpz_t(), 3); }

Family lambda_if(bool b) { return b ? Family::Lambda : Family::Theta; }

Code neg_slot(Family f, Category c, const Nat& x, const Nat& y) {
  return slot_code(Scheme::Neg, f, c, x, y);
}
Code all_slot(Family f, Category c, const Nat& x, const Nat& y) {
  return slot_code(Scheme::Forall, f, c, x, y);
}

bool provable_equation(const Expr& a, const Expr& b) {
  return is_term(a) && is_term(b) && provably_equal(a, b);
}

// Decoded term of a Θtm(0, q) code, if c is one.
std::optional<Expr> neg_term(const Code& c) {
  auto h = slot_of(Scheme::Neg, c);
  if (!h || h->category != Category::Term || h->x != 0) return std::nullopt;
  return term_decode(h->y);
}

std::optional<Expr> all_term(const Code& c) {
  auto h = slot_of(Scheme::Forall, c);
  if (!h || h->category != Category::Term || h->x != 0) return std::nullopt;
  return term_decode(h->y);
}

// ---------------------------------------------------------------- δ¬

Code neg_enc(const Expr& e, const Oracle& o) {
  if (in_term_layer(e)) return neg_slot(Family::Theta, Category::Term, 0, term_code(e));
  switch (e.op()) {
    case Op::Eq: {
      Expr a = e.child(0), b = e.child(1);
      Code ca = neg_enc(a, o), cb = neg_enc(b, o);
      return neg_slot(lambda_if(provable_equation(a, b)), Category::Eq, ca, cb);
    }
    case Op::Not:
      return neg_slot(lambda_if(o.fragment_provable(e)), Category::Not, 0, compact_encode(e));
    case Op::And: {
      Code ca = neg_enc(e.child(0), o), cb = neg_enc(e.child(1), o);
      return neg_slot(lambda_if(even(ca) && even(cb)), Category::And, ca, cb);
    }
    case Op::Forall: {
      Expr x = e.child(0);
      Code cx = neg_enc(x, o), cb = neg_enc(e.child(1), o);
      return neg_slot(lambda_if(x.is_variable() && even(cb)), Category::Forall, cx, cb);
    }
    default: throw UnsupportedShape(to_string(e) + " is outside the domain of the ¬-numbering");
  }
}

bool neg_domain(const Expr& e) {
  if (in_term_layer(e) || e.op() == Op::Not) return true;
  switch (e.op()) {
    case Op::Eq:
    case Op::And:
    case Op::Forall: return neg_domain(e.child(0)) && neg_domain(e.child(1));
    default: return false;
  }
}

std::optional<Expr> neg_dec(const Code& c, const Oracle& o) {
  auto h = slot_of(Scheme::Neg, c);
  if (!h) return std::nullopt;
  switch (h->category) {
    case Category::Term:
      if (h->x != 0) return std::nullopt;
      return term_decode(h->y);
    case Category::Not: {
      if (h->x != 0) return std::nullopt;
      auto e = compact_decode(h->y);
      if (!e || e->op() != Op::Not) return std::nullopt;
      if (lambda_if(o.fragment_provable(*e)) != h->family) return std::nullopt;
      return e;
    }
    default: break;
  }
  auto a = neg_dec(h->x, o);
  if (!a) return std::nullopt;
  auto b = neg_dec(h->y, o);
  if (!b) return std::nullopt;
  switch (h->category) {
    case Category::Eq:
      if (lambda_if(provable_equation(*a, *b)) != h->family) return std::nullopt;
      return Expr::eq(*a, *b);
    case Category::And:
      if (lambda_if(even(h->x) && even(h->y)) != h->family) return std::nullopt;
      return Expr::conj(*a, *b);
    default:
      if (lambda_if(a->is_variable() && even(h->y)) != h->family) return std::nullopt;
      return Expr::forall(*a, *b);
  }
}

// ---------------------------------------------------------------- δ∀

// 0 true, 1 false, 2 not a sentence
unsigned long truth_class(const Expr& e, const Oracle& o) {
  if (!is_sentence(e)) return 2;
  switch (o.truth(e)) {
    case Truth::True: return 0;
    case Truth::False: return 1;
    default: throw OracleIncomplete("cannot decide " + to_string(e));
  }
}

Family class_family(unsigned long r) {
  return r == 0 ? Family::Lambda : r == 1 ? Family::Theta : Family::Upsilon;
}

Family eq_family(const Expr& a, const Expr& b) {
  if (!(is_term(a) && is_term(b) && is_closed(a) && is_closed(b))) return Family::Upsilon;
  return eval_closed_term(a) == eval_closed_term(b) ? Family::Lambda : Family::Theta;
}

Family and_family(const Code& a, const Code& b) {
  unsigned long ra = mod3(a), rb = mod3(b);
  if (ra == 2 || rb == 2) return Family::Upsilon;
  return ra == 0 && rb == 0 ? Family::Lambda : Family::Theta;
}

// ¬φ is true when φ is false and vice versa.
Family not_family(const Code& c) {
  unsigned long r = mod3(c);
  return r == 0 ? Family::Theta : r == 1 ? Family::Lambda : Family::Upsilon;
}

Code all_enc(const Expr& e, const Oracle& o) {
  if (in_term_layer(e)) return all_slot(Family::Upsilon, Category::Term, 0, term_code(e));
  switch (e.op()) {
    case Op::Eq: {
      Expr a = e.child(0), b = e.child(1);
      Code ca = all_enc(a, o), cb = all_enc(b, o);
      return all_slot(eq_family(a, b), Category::Eq, ca, cb);
    }
    case Op::Not: {
      Code c = all_enc(e.child(0), o);
      return all_slot(not_family(c), Category::Not, 0, c);
    }
    case Op::And: {
      Code ca = all_enc(e.child(0), o), cb = all_enc(e.child(1), o);
      return all_slot(and_family(ca, cb), Category::And, ca, cb);
    }
    case Op::Forall:
      return all_slot(class_family(truth_class(e, o)), Category::Forall, 0, compact_encode(e));
    default: throw UnsupportedShape(to_string(e) + " is outside the domain of the ∀-numbering");
  }
}

bool all_domain(const Expr& e) {
  if (in_term_layer(e) || e.op() == Op::Forall) return true;
  switch (e.op()) {
    case Op::Not: return all_domain(e.child(0));
    case Op::Eq:
    case Op::And: return all_domain(e.child(0)) && all_domain(e.child(1));
    default: return false;
  }
}

std::optional<Expr> all_dec(const Code& c, const Oracle& o) {
  auto h = slot_of(Scheme::Forall, c);
  if (!h) return std::nullopt;
  switch (h->category) {
    case Category::Term:
      if (h->x != 0) return std::nullopt;
      return term_decode(h->y);
    case Category::Forall: {
      if (h->x != 0) return std::nullopt;
      auto e = compact_decode(h->y);
      if (!e || e->op() != Op::Forall) return std::nullopt;
      if (class_family(truth_class(*e, o)) != h->family) return std::nullopt;
      return e;
    }
    case Category::Not: {
      if (h->x != 0) return std::nullopt;
      auto a = all_dec(h->y, o);
      if (!a || not_family(h->y) != h->family) return std::nullopt;
      return Expr::neg(*a);
    }
    default: break;
  }
  auto a = all_dec(h->x, o);
  if (!a) return std::nullopt;
  auto b = all_dec(h->y, o);
  if (!b) return std::nullopt;
  if (h->category == Category::Eq) {
    if (eq_family(*a, *b) != h->family) return std::nullopt;
    return Expr::eq(*a, *b);
  }
  if (and_family(h->x, h->y) != h->family) return std::nullopt;
  return Expr::conj(*a, *b);
}

// ---------------------------------------------------------------- δ*

unsigned long base_class(const Expr& e, const Oracle& o) {
  switch (o.classify(e).verdict) {
    case Verdict::Provable: return 0;
    case Verdict::Refutable: return 1;
    case Verdict::Unknown: throw OracleIncomplete("cannot classify " + to_string(e));
    default: return 2;
  }
}

unsigned long layered(unsigned long r0, const Nat& height) {
  if (r0 == 2 || mpz_even_p(height.get_mpz_t())) return r0;
  return 1 - r0;
}

Expr negate_times(Expr e, const Nat& k) {
  for (Nat i = 0; i < k; ++i) e = Expr::neg(e);
  return e;
}

Code star_enc(const Expr& e, const Oracle& o) {
  Nat k = static_cast<unsigned long>(neg_height(e));
  Expr base = strip_negations(e);
  return 3 * pair(k, compact_encode(base)) + layered(base_class(base, o), k);
}

// Structure only: trusts that c is in the image.
std::optional<std::pair<Expr, Nat>> star_parts(const Code& c) {
  if (c < 3) return std::nullopt;
  Nat q = c / 3;
  if (!in_pair_image(q)) return std::nullopt;
  auto [k, j] = unpair(q);
  if (k > 1'000'000) return std::nullopt;
  auto base = compact_decode(j);
  if (!base || base->op() == Op::Not) return std::nullopt;
  return std::make_pair(*base, k);
}

std::optional<Expr> star_dec(const Code& c, const Oracle& o) {
  auto parts = star_parts(c);
  if (!parts) return std::nullopt;
  auto& [base, k] = *parts;
  if (layered(base_class(base, o), k) != mod3(c)) return std::nullopt;
  return negate_times(base, k);
}

// Class of a compound built by S, ', +, · or =: only closed equations are
// sentences, and those are evaluated directly.
unsigned long structural_class(const Expr& e) {
  if (e.op() != Op::Eq) return 2;
  Expr a = e.child(0), b = e.child(1);
  if (!(is_term(a) && is_term(b) && is_closed(a) && is_closed(b))) return 2;
  return eval_closed_term(a) == eval_closed_term(b) ? 0 : 1;
}

Expr raw_star(const Code& c) {
  auto parts = star_parts(c);
  if (!parts) throw NotInImage(c.get_str() + " is not a δ* code");
  return negate_times(parts->first, parts->second);
}

}  // namespace

Code delta_neg_encode(const Expr& e, const Oracle& oracle) { return neg_enc(e, oracle); }

Numbering delta_neg(const Oracle& oracle) {
  Numbering::Parts p;
  p.name = "delta-neg";
  p.encode = [oracle](const Expr& e) { return neg_enc(e, oracle); };
  p.decode = [oracle](const Code& c) { return neg_dec(c, oracle); };
  auto term_tracker = [](Op op) -> Tracker {
    return [op](std::span<const Code> a) -> Code {
      std::vector<Expr> kids;
      for (const auto& c : a) {
        auto t = neg_term(c);
        if (!t) throw NotTermLayer("argument is not a term-layer code");
        kids.push_back(*t);
      }
      return neg_slot(Family::Theta, Category::Term, 0, term_code(Expr::make(op, kids)));
    };
  };
  for (Op op : {Op::Zero, Op::One, Op::Var, Op::Succ, Op::Prime, Op::Add, Op::Mul})
    p.trackers[tag(op)] = term_tracker(op);
  p.trackers[tag(Op::Eq)] = [](std::span<const Code> a) -> Code {
    auto s = neg_term(a[0]), t = neg_term(a[1]);
    bool lam = s && t && provable_equation(*s, *t);
    return neg_slot(lambda_if(lam), Category::Eq, a[0], a[1]);
  };
  p.trackers[tag(Op::And)] = [](std::span<const Code> a) -> Code {
    return neg_slot(lambda_if(even(a[0]) && even(a[1])), Category::And, a[0], a[1]);
  };
  p.trackers[tag(Op::Forall)] = [](std::span<const Code> a) -> Code {
    auto x = neg_term(a[0]);
    bool lam = x && x->is_variable() && even(a[1]);
    return neg_slot(lambda_if(lam), Category::Forall, a[0], a[1]);
  };
  p.oracle_trackers[tag(Op::Not)] = tracker_by_decoding(p.encode, p.decode, Op::Not);
  p.residue = [oracle](const Expr& e, const Nat& m) -> std::optional<Nat> {
    if ((m != 1 && m != 2) || !neg_domain(e)) return std::nullopt;
    if (m == 1) return Nat(0);
    return Nat(oracle.fragment_provable(e) ? 0 : 1);
  };
  return Numbering(std::move(p));
}

namespace {

bool is_term_code(const Code& c) {
  auto t = neg_term(c);
  return t && is_term(*t);
}

bool is_var_code(const Code& c) {
  auto t = neg_term(c);
  return t && t->is_variable();
}

bool pr_equ(const Code& p, const Code& q) {
  auto s = neg_term(p), t = neg_term(q);
  return s && t && is_term(*s) && is_term(*t) && provably_equal(*s, *t);
}

bool justify(const Code& c, std::set<Code>& out) {
  auto h = slot_of(Scheme::Neg, c);
  if (!h || h->family != Family::Lambda) return false;
  bool ok = false;
  switch (h->category) {
    case Category::Not: ok = h->x == 0; break;
    case Category::Eq: ok = is_term_code(h->x) && is_term_code(h->y) && pr_equ(h->x, h->y); break;
    case Category::And: ok = justify(h->x, out) && justify(h->y, out); break;
    case Category::Forall: ok = is_var_code(h->x) && justify(h->y, out); break;
    default: ok = false;
  }
  if (ok) out.insert(c);
  return ok;
}

}  // namespace

std::vector<Code> pr_delta_neg_witness(const Code& c) {
  std::set<Code> s;
  if (!justify(c, s)) return {};
  return {s.begin(), s.end()};
}

bool check_pr_sequence(const std::vector<Code>& seq) {
  if (seq.empty()) return false;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    auto earlier = [&](const Code& x) {
      for (std::size_t j = 0; j < i; ++j)
        if (seq[j] == x) return true;
      return false;
    };
    auto h = slot_of(Scheme::Neg, seq[i]);
    if (!h || h->family != Family::Lambda) return false;
    bool ok = false;
    switch (h->category) {
      case Category::Not: ok = h->x == 0; break;
      case Category::Eq: ok = is_term_code(h->x) && is_term_code(h->y) && pr_equ(h->x, h->y); break;
      case Category::And: ok = earlier(h->x) && earlier(h->y); break;
      case Category::Forall: ok = is_var_code(h->x) && earlier(h->y); break;
      default: ok = false;
    }
    if (!ok) return false;
  }
  return true;
}

bool pr_delta_neg(const Code& c) {
  auto seq = pr_delta_neg_witness(c);
  return !seq.empty() && seq.back() == c && check_pr_sequence(seq);
}

namespace {

void collect_subformulas(const Code& c, const Oracle& o, std::set<Code>& out) {
  auto h = slot_of(Scheme::Neg, c);
  if (!h || h->category == Category::Term) return;
  if (!out.insert(c).second) return;
  switch (h->category) {
    case Category::Eq: return;
    case Category::And:
      collect_subformulas(h->x, o, out);
      collect_subformulas(h->y, o, out);
      return;
    case Category::Forall: collect_subformulas(h->y, o, out); return;
    case Category::Not: {
      auto e = compact_decode(h->y);
      if (!e) return;
      Expr inner = e->child(0);
      if (!neg_domain(inner)) return;
      collect_subformulas(neg_enc(inner, o), o, out);
      return;
    }
    default: return;
  }
}

}  // namespace

std::size_t subformula_count(const Code& c, const Oracle& oracle) {
  if (!neg_dec(c, oracle)) throw NotInImage(c.get_str() + " is not a δ¬ code");
  std::set<Code> s;
  collect_subformulas(c, oracle, s);
  return s.size();
}

Code delta_star_encode(const Expr& e, const Oracle& oracle) { return star_enc(e, oracle); }

Numbering delta_star(const Oracle& oracle) {
  Numbering::Parts p;
  p.name = "delta-star";
  p.encode = [oracle](const Expr& e) { return star_enc(e, oracle); };
  p.decode = [oracle](const Code& c) { return star_dec(c, oracle); };
  for (Op op : {Op::Zero, Op::One, Op::Var, Op::Succ, Op::Prime, Op::Add, Op::Mul, Op::Eq})
    p.trackers[tag(op)] = [op](std::span<const Code> a) -> Code {
      std::vector<Expr> kids;
      for (const auto& c : a) kids.push_back(raw_star(c));
      Expr e = Expr::make(op, kids);
      return 3 * pair(0, compact_encode(e)) + structural_class(e);
    };
  p.trackers[tag(Op::Not)] = [](std::span<const Code> a) -> Code {
    Nat q = a[0] / 3;
    if (!in_pair_image(q)) throw NotInImage("not a δ* code");
    auto [k, j] = unpair(q);
    unsigned long r = mod3(a[0]);
    return 3 * pair(k + 1, j) + (r == 2 ? 2 : 1 - r);
  };
  for (Op op : {Op::And, Op::Forall})
    p.oracle_trackers[tag(op)] = tracker_by_decoding(p.encode, p.decode, op);
  p.residue = [oracle](const Expr& e, const Nat& m) -> std::optional<Nat> {
    if (m != 1 && m != 3) return std::nullopt;
    if (m == 1) return Nat(0);
    Nat k = static_cast<unsigned long>(neg_height(e));
    return Nat(layered(base_class(strip_negations(e), oracle), k));
  };
  return Numbering(std::move(p));
}

bool pr_delta_star(const Code& c) { return mod3(c) == 0; }

Code delta_forall_encode(const Expr& e, const Oracle& oracle) { return all_enc(e, oracle); }

Numbering delta_forall(const Oracle& oracle) {
  Numbering::Parts p;
  p.name = "delta-forall";
  p.encode = [oracle](const Expr& e) { return all_enc(e, oracle); };
  p.decode = [oracle](const Code& c) { return all_dec(c, oracle); };
  auto term_tracker = [](Op op) -> Tracker {
    return [op](std::span<const Code> a) -> Code {
      std::vector<Expr> kids;
      for (const auto& c : a) {
        auto t = all_term(c);
        if (!t) throw NotTermLayer("argument is not a term-layer code");
        kids.push_back(*t);
      }
      return all_slot(Family::Upsilon, Category::Term, 0, term_code(Expr::make(op, kids)));
    };
  };
  for (Op op : {Op::Zero, Op::One, Op::Var, Op::Succ, Op::Prime, Op::Add, Op::Mul})
    p.trackers[tag(op)] = term_tracker(op);
  p.trackers[tag(Op::Eq)] = [](std::span<const Code> a) -> Code {
    auto s = all_term(a[0]), t = all_term(a[1]);
    Family f = Family::Upsilon;
    if (s && t) f = eq_family(*s, *t);
    return all_slot(f, Category::Eq, a[0], a[1]);
  };
  p.trackers[tag(Op::Not)] = [](std::span<const Code> a) -> Code {
    return all_slot(not_family(a[0]), Category::Not, 0, a[0]);
  };
  p.trackers[tag(Op::And)] = [](std::span<const Code> a) -> Code {
    return all_slot(and_family(a[0], a[1]), Category::And, a[0], a[1]);
  };
  p.oracle_trackers[tag(Op::Forall)] = tracker_by_decoding(p.encode, p.decode, Op::Forall);
  p.residue = [oracle](const Expr& e, const Nat& m) -> std::optional<Nat> {
    if ((m != 1 && m != 3) || !all_domain(e)) return std::nullopt;
    if (m == 1) return Nat(0);
    return Nat(truth_class(e, oracle));
  };
  return Numbering(std::move(p));
}

bool tr_delta_forall(const Code& c) { return mod3(c) == 0; }

std::size_t stage_of(Staged which, const Expr& e) {
  switch (which) {
    case Staged::Star: return neg_height(e);
    case Staged::Neg:
      if (in_term_layer(e) || e.op() == Op::Not) return 0;
      break;
    case Staged::Forall:
      if (in_term_layer(e) || e.op() == Op::Forall) return 0;
      break;
  }
  std::size_t s = 0;
  for (int i = 0; i < e.arity(); ++i) s = std::max(s, stage_of(which, e.child(i)));
  return s + 1;
}

std::optional<Code> encode_at_stage(Staged which, const Expr& e, std::size_t stage,
                                    const Oracle& oracle) {
  if (stage_of(which, e) > stage) return std::nullopt;
  switch (which) {
    case Staged::Neg: return neg_enc(e, oracle);
    case Staged::Star: return star_enc(e, oracle);
    case Staged::Forall: return all_enc(e, oracle);
  }
  return std::nullopt;
}

}  // namespace goedel
