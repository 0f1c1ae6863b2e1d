#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "goedel/nat.hpp"

namespace goedel {

// The signature. The numeric value of each Op is its tag.
enum class Op : std::uint8_t {
  Zero = 0,
  One,
  Var,
  Succ,
  Prime,
  Add,
  Mul,
  Eq,
  Not,
  And,
  Forall,
};

inline constexpr int kOpCount = 11;

int arity(Op op);
inline int tag(Op op) { return static_cast<int>(op); }
Op op_from_tag(int t);
std::string_view symbol(Op op);   // 0 1 v S ' + · = ¬ ∧ ∀
std::string_view keyword(Op op);  // the s-expression head
inline bool is_term_op(Op op) { return tag(op) <= tag(Op::Mul); }

// Immutable, shared expression tree.
//
// Stacks of S and of ' are stored as one node with a repeat count, so
// numerals and variables are O(1) in size however large the index. The
// accessors op()/child() present the plain tree: child(0) of S^m(b) is
// S^(m-1)(b).
class Expr {
 public:
  Expr();  // 0

  static Expr zero();
  static Expr one();
  static Expr var();
  static Expr succ(const Expr& e, const Nat& times = 1);
  static Expr prime(const Expr& e, const Nat& times = 1);
  static Expr add(const Expr& a, const Expr& b);
  static Expr mul(const Expr& a, const Expr& b);
  static Expr eq(const Expr& a, const Expr& b);
  static Expr neg(const Expr& a);
  static Expr conj(const Expr& a, const Expr& b);
  static Expr forall(const Expr& x, const Expr& body);
  // Throws ArityMismatch.
  static Expr make(Op op, std::span<const Expr> kids);

  static Expr numeral(const Nat& n);
  static Expr variable(std::uint64_t index);

  Op op() const;
  int arity() const { return goedel::arity(op()); }
  Expr child(int i) const;
  std::vector<Expr> children() const;

  // Run view, meaningful for S and ': run() copies of op() over base(),
  // where base().op() != op(). For other nodes run() is 1.
  const Nat& run() const;
  const Expr& base() const;

  bool is_numeral() const;
  std::optional<Nat> numeral_value() const;
  bool is_variable() const;
  std::optional<std::uint64_t> variable_index() const;

  std::size_t hash() const;
  const void* identity() const { return node_.get(); }

  friend bool operator==(const Expr& a, const Expr& b);
  friend std::strong_ordering operator<=>(const Expr& a, const Expr& b);

  struct Node;

 private:
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct ExprHash {
  std::size_t operator()(const Expr& e) const { return e.hash(); }
};

// Canonical text. Numerals up to 32 are spelled out with S, larger ones
// print as (num n). Parsing the output gives the same Expr back.
std::string to_string(const Expr& e);
std::ostream& operator<<(std::ostream& os, const Expr& e);

// Inverse of to_string. Also accepts (num n), (imp a b) and (or a b).
Expr parse(std::string_view text);

}  // namespace goedel
