#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "goedel/expr.hpp"
#include "goedel/truth.hpp"

namespace goedel {

// Deterministic generators for test and suite corpora. Same seed, same
// output on every platform: only mt19937_64 draws are used, never the
// standard distributions.

using Rng = std::mt19937_64;

// Below(n): uniform in [0, n).
std::uint64_t below(Rng& rng, std::uint64_t n);

// Terms over 0, 1, numerals up to max_numeral, variables (v 0)..(v vars-1),
// S, + and ·.
Expr random_term(Rng& rng, unsigned depth, unsigned vars, unsigned max_numeral = 3);

// A term provably equal to t, obtained by random semiring identities
// (commuting, reassociating, distributing, adding 0, multiplying by 1).
Expr semiring_variant(const Expr& t, Rng& rng);

// Half the pairs are semiring variants, half independent draws.
std::vector<std::pair<Expr, Expr>> random_term_pairs(std::size_t n, std::uint64_t seed,
                                                     unsigned depth = 6, unsigned vars = 3);

// Formulas built from equations, ¬, ∧ and ∀; may be open.
Expr random_formula(Rng& rng, unsigned depth, unsigned vars);

// Sentences of the fragment the oracle classifies definitely, with small
// numerals and shallow terms whose δtm codes have at most 4096 bits. Distinct, in
// generation order.
std::vector<Expr> fragment_sentences(std::size_t n, std::uint64_t seed,
                                     const Oracle& oracle = Oracle());

// Sentences, open formulas and terms, with truth definite for every
// sentence and δtm codes of at most 4096 bits.
std::vector<Expr> closed_items(std::size_t n, std::uint64_t seed, const Oracle& oracle = Oracle());

// Arbitrary expressions, including ill-formed ones such as (S (= 0 0)).
// Every sentence among them is classified definitely.
std::vector<Expr> mixed_expressions(std::size_t n, std::uint64_t seed,
                                    const Oracle& oracle = Oracle());

}  // namespace goedel
