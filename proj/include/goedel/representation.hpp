#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "goedel/expr.hpp"

namespace goedel {

// Concrete carriers for the same abstract syntax.
//   Tree               the Expr itself
//   Sequence           Polish (prefix) symbol list, never empty
//   SequenceWithEmpty  same lists inside a monoid that also has []; [] is
//                      a carrier element but never the image of an Expr
//   SExpr              nested pairs over atoms: leaf -> a, σ(x) -> (σ . x),
//                      σ(x, y) -> (σ . (x . y))
enum class ReprStyle { Tree, Sequence, SequenceWithEmpty, SExpr };

struct SNode;
using SExprPtr = std::shared_ptr<const SNode>;

struct SNode {
  std::optional<Op> atom;  // set for atoms, empty for pairs
  SExprPtr head;
  SExprPtr tail;
};

SExprPtr s_atom(Op op);
SExprPtr s_pair(SExprPtr head, SExprPtr tail);
bool s_equal(const SExprPtr& a, const SExprPtr& b);

struct Representation {
  ReprStyle style = ReprStyle::Tree;
  std::optional<Expr> tree;
  std::vector<Op> sequence;
  SExprPtr sexpr;
};

bool operator==(const Representation& a, const Representation& b);

Representation to_representation(const Expr& e, ReprStyle style);
// Throws IllFormedPayload.
Expr from_representation(const Representation& r);

// The constructor σ interpreted directly on the carrier. The homomorphism
// law is to_representation(σ(e...)) == simulate(σ, to_representation(e)...).
Representation simulate(ReprStyle style, Op op, std::span<const Representation> args);

}  // namespace goedel
