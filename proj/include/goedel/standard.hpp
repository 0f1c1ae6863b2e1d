#pragma once

#include <optional>

#include "goedel/numbering.hpp"

namespace goedel {

// γ: leaf ↦ <tag,0>, σ(c) ↦ <tag,c>, σ(c1,c2) ↦ <tag,<c1,c2>>.
// γ(0) = 1, γ(S0) = 16. Doubly exponential along chains of S and '.
Code gamma_encode(const Expr& e);
std::optional<Expr> gamma_decode(const Code& c);
Numbering standard_gamma();

// γ′: γ with numerals and variables as leaves, n̄ ↦ <0,n> and v^(n) ↦ <2,n>.
// S over a non-numeral and ' over a non-variable keep tags 3 and 4.
// Agrees with γ on 0 and grows polynomially in the numeral and variable
// indices, which makes it usable inside diagonal sentences.
Code compact_encode(const Expr& e);
std::optional<Expr> compact_decode(const Code& c);
Numbering compact_gamma();

}  // namespace goedel
