#pragma once

#include <functional>
#include <optional>
#include <string>

#include "goedel/numbering.hpp"

namespace goedel {

// Strictly increasing h: ℕ → ℕ with a partial inverse.
struct MonotoneFn {
  std::string name;
  std::function<Nat(const Nat&)> apply;
  std::function<std::optional<Nat>(const Nat&)> inverse;
};

MonotoneFn power_of_two();
// Inverse by exponential then binary search; works for any increasing h.
MonotoneFn with_search_inverse(std::string name, std::function<Nat(const Nat&)> h);

// φ ≡ χ → (0=0), written ¬(χ ∧ ¬(0=0)).
bool is_trigger(const Expr& e);
Expr trigger_of(const Expr& chi);

// β(χ → (0=0)) = 2·h(β(χ)); β(e) = 2·base(e)+1 otherwise.
// Throws NotMonotoneH if h fails to increase on 0..64.
Numbering twist_numbering(const Numbering& base, MonotoneFn h = power_of_two(),
                          std::string name = "");

}  // namespace goedel
