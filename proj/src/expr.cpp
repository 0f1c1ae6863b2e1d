#include "goedel/expr.hpp"

#include <array>
#include <ostream>

#include "goedel/errors.hpp"

namespace goedel {

namespace {

struct OpInfo {
  std::string_view symbol;
  std::string_view keyword;
  int arity;
};

constexpr std::array<OpInfo, kOpCount> kInfo{{
    {"0", "0", 0},
    {"1", "1", 0},
    {"v", "v", 0},
    {"S", "S", 1},
    {"'", "p", 1},
    {"+", "+", 2},
    {"·", "*", 2},
    {"=", "=", 2},
    {"¬", "not", 1},
    {"∧", "and", 2},
    {"∀", "forall", 2},
}};

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace

int arity(Op op) { return kInfo[tag(op)].arity; }
std::string_view symbol(Op op) { return kInfo[tag(op)].symbol; }
std::string_view keyword(Op op) { return kInfo[tag(op)].keyword; }

Op op_from_tag(int t) {
  if (t < 0 || t >= kOpCount) throw IllFormedPayload("no constructor with tag " + std::to_string(t));
  return static_cast<Op>(t);
}

struct Expr::Node {
  Op op;
  Nat run;  // repeat count for S and '; 1 otherwise
  std::vector<Expr> kids;
  std::size_t hash;
  bool numeral;
  bool variable;
};

namespace {

std::shared_ptr<const Expr::Node> make_node(Op op, Nat run, std::vector<Expr> kids) {
  auto n = std::make_shared<Expr::Node>();
  n->op = op;
  std::size_t h = mix(0, static_cast<std::size_t>(op));
  h = mix(h, mpz_get_ui(run.get_mpz_t()));
  h = mix(h, mpz_sizeinbase(run.get_mpz_t(), 2));
  for (const auto& k : kids) h = mix(h, k.hash());
  n->hash = h;
  n->numeral = op == Op::Zero || (op == Op::Succ && kids[0].op() == Op::Zero);
  n->variable = op == Op::Var || (op == Op::Prime && kids[0].op() == Op::Var);
  n->run = std::move(run);
  n->kids = std::move(kids);
  return n;
}

}  // namespace

Expr::Expr() : Expr(zero()) {}

Expr Expr::zero() {
  static const Expr z(make_node(Op::Zero, 1, {}));
  return z;
}

Expr Expr::one() {
  static const Expr o(make_node(Op::One, 1, {}));
  return o;
}

Expr Expr::var() {
  static const Expr v(make_node(Op::Var, 1, {}));
  return v;
}

Expr Expr::succ(const Expr& e, const Nat& times) {
  if (times <= 0) return e;
  if (e.op() == Op::Succ) return Expr(make_node(Op::Succ, e.run() + times, {e.base()}));
  return Expr(make_node(Op::Succ, times, {e}));
}

Expr Expr::prime(const Expr& e, const Nat& times) {
  if (times <= 0) return e;
  if (e.op() == Op::Prime) return Expr(make_node(Op::Prime, e.run() + times, {e.base()}));
  return Expr(make_node(Op::Prime, times, {e}));
}

Expr Expr::add(const Expr& a, const Expr& b) { return Expr(make_node(Op::Add, 1, {a, b})); }
Expr Expr::mul(const Expr& a, const Expr& b) { return Expr(make_node(Op::Mul, 1, {a, b})); }
Expr Expr::eq(const Expr& a, const Expr& b) { return Expr(make_node(Op::Eq, 1, {a, b})); }
Expr Expr::neg(const Expr& a) { return Expr(make_node(Op::Not, 1, {a})); }
Expr Expr::conj(const Expr& a, const Expr& b) { return Expr(make_node(Op::And, 1, {a, b})); }
Expr Expr::forall(const Expr& x, const Expr& body) {
  return Expr(make_node(Op::Forall, 1, {x, body}));
}

Expr Expr::make(Op op, std::span<const Expr> kids) {
  if (static_cast<int>(kids.size()) != goedel::arity(op))
    throw ArityMismatch(std::string(keyword(op)) + " takes " + std::to_string(goedel::arity(op)) +
                        " arguments, got " + std::to_string(kids.size()));
  switch (op) {
    case Op::Zero: return zero();
    case Op::One: return one();
    case Op::Var: return var();
    case Op::Succ: return succ(kids[0]);
    case Op::Prime: return prime(kids[0]);
    case Op::Not: return neg(kids[0]);
    default: return Expr(make_node(op, 1, {kids[0], kids[1]}));
  }
}

Expr Expr::numeral(const Nat& n) { return succ(zero(), n); }
Expr Expr::variable(std::uint64_t index) { return prime(var(), index); }

Op Expr::op() const { return node_->op; }

Expr Expr::child(int i) const {
  if (i < 0 || i >= arity()) throw std::out_of_range("child index");
  const Node& n = *node_;
  if ((n.op == Op::Succ || n.op == Op::Prime) && n.run > 1)
    return Expr(make_node(n.op, n.run - 1, {n.kids[0]}));
  return n.kids[i];
}

std::vector<Expr> Expr::children() const {
  std::vector<Expr> out;
  for (int i = 0; i < arity(); ++i) out.push_back(child(i));
  return out;
}

const Nat& Expr::run() const { return node_->run; }

const Expr& Expr::base() const {
  if (node_->kids.empty()) throw std::logic_error("leaf has no base");
  return node_->kids[0];
}

bool Expr::is_numeral() const { return node_->numeral; }

std::optional<Nat> Expr::numeral_value() const {
  if (!node_->numeral) return std::nullopt;
  if (node_->op == Op::Zero) return Nat(0);
  return node_->run;
}

bool Expr::is_variable() const { return node_->variable; }

std::optional<std::uint64_t> Expr::variable_index() const {
  if (!node_->variable) return std::nullopt;
  if (node_->op == Op::Var) return 0;
  return to_u64(node_->run, "variable index");
}

std::size_t Expr::hash() const { return node_->hash; }

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.hash != y.hash || x.op != y.op || x.run != y.run) return false;
  for (std::size_t i = 0; i < x.kids.size(); ++i)
    if (!(x.kids[i] == y.kids[i])) return false;
  return true;
}

std::strong_ordering operator<=>(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.op != y.op) return x.op <=> y.op;
  int c = cmp(x.run, y.run);
  if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  for (std::size_t i = 0; i < x.kids.size(); ++i) {
    auto r = x.kids[i] <=> y.kids[i];
    if (r != 0) return r;
  }
  return std::strong_ordering::equal;
}

namespace {

constexpr unsigned long kMaxExpandedRun = 1u << 20;

void print(const Expr& e, std::string& out) {
  switch (e.op()) {
    case Op::Zero: out += '0'; return;
    case Op::One: out += '1'; return;
    case Op::Var: out += "(v 0)"; return;
    case Op::Succ:
    case Op::Prime: {
      if (e.is_numeral() && e.run() > 32) {
        out += "(num " + e.run().get_str() + ")";
        return;
      }
      if (e.is_variable()) {
        out += "(v " + e.run().get_str() + ")";
        return;
      }
      if (!e.run().fits_ulong_p() || e.run().get_ui() > kMaxExpandedRun)
        throw CodeTooLarge("run too long to print");
      unsigned long r = e.run().get_ui();
      std::string head = e.op() == Op::Succ ? "(S " : "(p ";
      for (unsigned long i = 0; i < r; ++i) out += head;
      print(e.base(), out);
      out.append(r, ')');
      return;
    }
    default: {
      out += '(';
      out += keyword(e.op());
      for (int i = 0; i < e.arity(); ++i) {
        out += ' ';
        print(e.child(i), out);
      }
      out += ')';
    }
  }
}

}  // namespace

std::string to_string(const Expr& e) {
  std::string out;
  print(e, out);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Expr& e) { return os << to_string(e); }

}  // namespace goedel
