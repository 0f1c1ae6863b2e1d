#include "goedel/standard.hpp"

#include "goedel/errors.hpp"

namespace goedel {

namespace {

Code chain(Op op, Code c, const Nat& times) {
  for (Nat i = 0; i < times; ++i) {
    c = pair(tag(op), c);
    check_code_size(c, "chain");
  }
  return c;
}

Code node(Op op, const std::vector<Code>& kids) {
  Code c;
  switch (kids.size()) {
    case 0: c = pair(tag(op), 0); break;
    case 1: c = pair(tag(op), kids[0]); break;
    default: c = pair(tag(op), pair(kids[0], kids[1])); break;
  }
  check_code_size(c, "node");
  return c;
}

struct Split {
  Op op;
  Code rest;
};

std::optional<Split> split(const Code& c) {
  if (!in_pair_image(c)) return std::nullopt;
  auto [t, rest] = unpair(c);
  if (t >= kOpCount) return std::nullopt;
  return Split{op_from_tag(static_cast<int>(t.get_ui())), rest};
}

std::optional<std::pair<Code, Code>> split_args(const Code& c) {
  if (!in_pair_image(c)) return std::nullopt;
  return unpair(c);
}

}  // namespace

Code gamma_encode(const Expr& e) {
  if (e.op() == Op::Succ || e.op() == Op::Prime) return chain(e.op(), gamma_encode(e.base()), e.run());
  std::vector<Code> kids;
  for (int i = 0; i < e.arity(); ++i) kids.push_back(gamma_encode(e.child(i)));
  return node(e.op(), kids);
}

std::optional<Expr> gamma_decode(const Code& c) {
  auto s = split(c);
  if (!s) return std::nullopt;
  switch (arity(s->op)) {
    case 0:
      if (s->rest != 0) return std::nullopt;
      return Expr::make(s->op, {});
    case 1: {
      auto k = gamma_decode(s->rest);
      if (!k) return std::nullopt;
      return Expr::make(s->op, std::vector<Expr>{*k});
    }
    default: {
      auto args = split_args(s->rest);
      if (!args) return std::nullopt;
      auto a = gamma_decode(args->first);
      if (!a) return std::nullopt;
      auto b = gamma_decode(args->second);
      if (!b) return std::nullopt;
      return Expr::make(s->op, std::vector<Expr>{*a, *b});
    }
  }
}

Numbering standard_gamma() {
  Numbering::Parts p;
  p.name = "gamma";
  p.encode = gamma_encode;
  p.decode = gamma_decode;
  for (int i = 0; i < kOpCount; ++i) {
    Op op = op_from_tag(i);
    p.trackers[i] = [op](std::span<const Code> a) -> Code { return node(op, {a.begin(), a.end()}); };
  }
  return Numbering(std::move(p));
}

Code compact_encode(const Expr& e) {
  if (e.is_numeral()) return pair(0, *e.numeral_value());
  if (e.is_variable()) return pair(2, e.op() == Op::Var ? Nat(0) : e.run());
  if (e.op() == Op::Succ || e.op() == Op::Prime) return chain(e.op(), compact_encode(e.base()), e.run());
  std::vector<Code> kids;
  for (int i = 0; i < e.arity(); ++i) kids.push_back(compact_encode(e.child(i)));
  return node(e.op(), kids);
}

std::optional<Expr> compact_decode(const Code& c) {
  auto s = split(c);
  if (!s) return std::nullopt;
  switch (s->op) {
    case Op::Zero: return Expr::numeral(s->rest);
    case Op::One:
      if (s->rest != 0) return std::nullopt;
      return Expr::one();
    case Op::Var:
      if (!s->rest.fits_ulong_p()) throw CodeTooLarge("variable index beyond 64 bits");
      return Expr::variable(s->rest.get_ui());
    case Op::Succ: {
      auto k = compact_decode(s->rest);
      if (!k || k->is_numeral()) return std::nullopt;
      return Expr::succ(*k);
    }
    case Op::Prime: {
      auto k = compact_decode(s->rest);
      if (!k || k->is_variable()) return std::nullopt;
      return Expr::prime(*k);
    }
    case Op::Not: {
      auto k = compact_decode(s->rest);
      if (!k) return std::nullopt;
      return Expr::neg(*k);
    }
    default: {
      auto args = split_args(s->rest);
      if (!args) return std::nullopt;
      auto a = compact_decode(args->first);
      if (!a) return std::nullopt;
      auto b = compact_decode(args->second);
      if (!b) return std::nullopt;
      return Expr::make(s->op, std::vector<Expr>{*a, *b});
    }
  }
}

Numbering compact_gamma() {
  Numbering::Parts p;
  p.name = "gamma-compact";
  p.encode = compact_encode;
  p.decode = compact_decode;
  for (int i = 0; i < kOpCount; ++i) {
    Op op = op_from_tag(i);
    p.trackers[i] = [op](std::span<const Code> a) -> Code { return node(op, {a.begin(), a.end()}); };
  }
  p.trackers[tag(Op::Zero)] = [](std::span<const Code>) { return pair(0, 0); };
  p.trackers[tag(Op::Var)] = [](std::span<const Code>) { return pair(2, 0); };
  p.trackers[tag(Op::Succ)] = [](std::span<const Code> a) -> Code {
    auto [t, n] = unpair(a[0]);
    return t == 0 ? pair(0, n + 1) : node(Op::Succ, {a[0]});
  };
  p.trackers[tag(Op::Prime)] = [](std::span<const Code> a) -> Code {
    auto [t, n] = unpair(a[0]);
    return t == 2 ? pair(2, n + 1) : node(Op::Prime, {a[0]});
  };
  return Numbering(std::move(p));
}

}  // namespace goedel
