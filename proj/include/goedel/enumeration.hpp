#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "goedel/expr.hpp"

namespace goedel {

// A fixed enumeration of all expressions.
class ExprOrder {
 public:
  virtual ~ExprOrder() = default;
  // Throws OracleIncomplete once the enumeration budget is spent.
  virtual Expr at(std::uint64_t i) const = 0;
  virtual std::uint64_t index_of(const Expr& e) const = 0;
};

// Listed expressions first (duplicates dropped), then every other
// expression by length of its canonical text and then by the text itself.
// Generation is memoized and thread-safe; `budget` caps how many
// expressions may be materialized.
std::shared_ptr<ExprOrder> canonical_order(std::vector<Expr> prefix = {},
                                           std::uint64_t budget = 2'000'000);

// All expressions whose canonical text has exactly `length` characters, sorted.
std::vector<Expr> expressions_of_length(std::size_t length);

}  // namespace goedel
