#include "goedel/representation.hpp"

#include "goedel/errors.hpp"

namespace goedel {

namespace {

constexpr std::size_t kMaxSequence = 10'000'000;

void flatten(const Expr& e, std::vector<Op>& out) {
  if ((e.op() == Op::Succ || e.op() == Op::Prime)) {
    if (!e.run().fits_ulong_p() || out.size() + e.run().get_ui() > kMaxSequence)
      throw CodeTooLarge("sequence representation too long");
    out.insert(out.end(), e.run().get_ui(), e.op());
    flatten(e.base(), out);
    return;
  }
  out.push_back(e.op());
  for (int i = 0; i < e.arity(); ++i) flatten(e.child(i), out);
}

Expr unflatten(const std::vector<Op>& seq, std::size_t& pos) {
  if (pos >= seq.size()) throw IllFormedPayload("sequence ends inside an expression");
  Op op = seq[pos++];
  if (op == Op::Succ || op == Op::Prime) {
    std::size_t start = pos - 1;
    while (pos < seq.size() && seq[pos] == op) ++pos;
    Nat run = static_cast<unsigned long>(pos - start);
    Expr b = unflatten(seq, pos);
    return op == Op::Succ ? Expr::succ(b, run) : Expr::prime(b, run);
  }
  std::vector<Expr> kids;
  for (int i = 0; i < arity(op); ++i) kids.push_back(unflatten(seq, pos));
  return Expr::make(op, kids);
}

SExprPtr to_s(const Expr& e) {
  if (e.arity() == 0) return s_atom(e.op());
  if (e.op() == Op::Succ || e.op() == Op::Prime) {
    if (!e.run().fits_ulong_p() || e.run().get_ui() > kMaxSequence)
      throw CodeTooLarge("s-expression representation too deep");
    SExprPtr r = to_s(e.base());
    for (unsigned long i = 0; i < e.run().get_ui(); ++i) r = s_pair(s_atom(e.op()), r);
    return r;
  }
  if (e.arity() == 1) return s_pair(s_atom(e.op()), to_s(e.child(0)));
  return s_pair(s_atom(e.op()), s_pair(to_s(e.child(0)), to_s(e.child(1))));
}

Expr from_s(const SExprPtr& s) {
  if (!s) throw IllFormedPayload("null s-expression");
  if (s->atom) {
    if (arity(*s->atom) != 0) throw IllFormedPayload("bare non-leaf atom");
    return Expr::make(*s->atom, {});
  }
  if (!s->head || !s->head->atom) throw IllFormedPayload("pair without a constructor head");
  Op op = *s->head->atom;
  switch (arity(op)) {
    case 0: throw IllFormedPayload("leaf atom used as a constructor");
    case 1: {
      Expr k = from_s(s->tail);
      return Expr::make(op, std::vector<Expr>{k});
    }
    default: {
      const SExprPtr& t = s->tail;
      if (!t || t->atom) throw IllFormedPayload("binary constructor needs a pair of arguments");
      Expr a = from_s(t->head);
      Expr b = from_s(t->tail);
      return Expr::make(op, std::vector<Expr>{a, b});
    }
  }
}

}  // namespace

SExprPtr s_atom(Op op) {
  auto n = std::make_shared<SNode>();
  n->atom = op;
  return n;
}

SExprPtr s_pair(SExprPtr head, SExprPtr tail) {
  auto n = std::make_shared<SNode>();
  n->head = std::move(head);
  n->tail = std::move(tail);
  return n;
}

bool s_equal(const SExprPtr& a, const SExprPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->atom || b->atom) return a->atom == b->atom;
  return s_equal(a->head, b->head) && s_equal(a->tail, b->tail);
}

bool operator==(const Representation& a, const Representation& b) {
  if (a.style != b.style) return false;
  switch (a.style) {
    case ReprStyle::Tree: return a.tree == b.tree;
    case ReprStyle::Sequence:
    case ReprStyle::SequenceWithEmpty: return a.sequence == b.sequence;
    case ReprStyle::SExpr: return s_equal(a.sexpr, b.sexpr);
  }
  return false;
}

Representation to_representation(const Expr& e, ReprStyle style) {
  Representation r;
  r.style = style;
  switch (style) {
    case ReprStyle::Tree: r.tree = e; break;
    case ReprStyle::Sequence:
    case ReprStyle::SequenceWithEmpty: flatten(e, r.sequence); break;
    case ReprStyle::SExpr: r.sexpr = to_s(e); break;
  }
  return r;
}

Expr from_representation(const Representation& r) {
  switch (r.style) {
    case ReprStyle::Tree:
      if (!r.tree) throw IllFormedPayload("empty tree payload");
      return *r.tree;
    case ReprStyle::Sequence:
    case ReprStyle::SequenceWithEmpty: {
      if (r.sequence.empty()) throw IllFormedPayload("the empty sequence is not an expression");
      std::size_t pos = 0;
      Expr e = unflatten(r.sequence, pos);
      if (pos != r.sequence.size()) throw IllFormedPayload("trailing symbols after expression");
      return e;
    }
    case ReprStyle::SExpr: return from_s(r.sexpr);
  }
  throw IllFormedPayload("unknown representation style");
}

Representation simulate(ReprStyle style, Op op, std::span<const Representation> args) {
  if (static_cast<int>(args.size()) != arity(op)) throw ArityMismatch("simulate: wrong arity");
  for (const auto& a : args)
    if (a.style != style) throw IllFormedPayload("simulate: mixed representation styles");
  Representation r;
  r.style = style;
  switch (style) {
    case ReprStyle::Tree: {
      std::vector<Expr> kids;
      for (const auto& a : args) kids.push_back(from_representation(a));
      r.tree = Expr::make(op, kids);
      break;
    }
    case ReprStyle::Sequence:
      // σ r1 ... rk, starting from the one-symbol word
      r.sequence = {op};
      for (const auto& a : args) r.sequence.insert(r.sequence.end(), a.sequence.begin(), a.sequence.end());
      break;
    case ReprStyle::SequenceWithEmpty:
      // concatenation folded from the monoid unit
      r.sequence = {};
      r.sequence.push_back(op);
      for (const auto& a : args) {
        std::vector<Op> acc = r.sequence;
        acc.insert(acc.end(), a.sequence.begin(), a.sequence.end());
        r.sequence = std::move(acc);
      }
      break;
    case ReprStyle::SExpr:
      if (args.empty()) r.sexpr = s_atom(op);
      else if (args.size() == 1) r.sexpr = s_pair(s_atom(op), args[0].sexpr);
      else r.sexpr = s_pair(s_atom(op), s_pair(args[0].sexpr, args[1].sexpr));
      break;
  }
  return r;
}

}  // namespace goedel
