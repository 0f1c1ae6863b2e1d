#pragma once

#include <functional>
#include <memory>
#include <string>

#include "goedel/enumeration.hpp"
#include "goedel/numbering.hpp"
#include "goedel/truth.hpp"

namespace goedel {

// The k-th member of S (in `order`) gets 2k, the k-th non-member 2k+1.
// The numbering is onto ℕ; code parity is membership. `member` may throw
// OracleIncomplete, which then propagates out of encode/decode.
Numbering split_numbering(std::string name, std::function<bool(const Expr&)> member,
                          std::shared_ptr<ExprOrder> order);

// S = sentences the oracle classifies as provable.
Numbering split_provable(const Oracle& oracle, std::shared_ptr<ExprOrder> order);
// S = true sentences.
Numbering split_true(const Oracle& oracle, std::shared_ptr<ExprOrder> order);

}  // namespace goedel
