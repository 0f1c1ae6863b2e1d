#pragma once

#include <optional>
#include <utility>

#include "goedel/numbering.hpp"

namespace goedel {

// Index of a formula with exactly one free variable: k_ψ = 2·γ′(ψ).
// Throws NotAFormula otherwise.
Code diag_index(const Expr& psi);

// If e = ψ(k̄_ψ) for some ψ, the pair (ψ, k_ψ) with the least k.
std::optional<std::pair<Expr, Code>> diagonal_source(const Expr& e);

// D: ψ(k̄_ψ) ↦ k_ψ, every other expression e ↦ 2·γ′(e)+1. Each diagonal
// sentence gets a code smaller than the numeral inside it, so D is not
// monotone.
Numbering diag_numbering();

}  // namespace goedel
