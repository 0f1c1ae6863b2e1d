#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "goedel/numbering.hpp"
#include "goedel/truth.hpp"

namespace goedel {

// Deviant numberings. Each one reserves residue classes (slots) for
// syntactic category plus provability or truth status, so parity or the
// residue mod 3 decides what is normally undecidable.

enum class Family { Lambda, Theta, Upsilon };
enum class Category { Term, Eq, Not, And, Forall };
enum class Scheme {
  Neg,     // δ¬: Λ = 8<x,y>+{0,2,4,6}, Θ = 10<x,y>+{1,3,5,7,9}
  Forall,  // δ∀: Λ = 12<x,y>+{0,3,6,9}, Θ = 12<x,y>+{1,4,7,10}, Υ = 15<x,y>+{2,5,8,11,14}
};

std::string_view family_name(Family f);
std::string_view category_name(Category c);

struct Slot {
  Family family;
  Category category;
  unsigned multiplier;
  unsigned offset;
};

const std::vector<Slot>& slot_table(Scheme s);
// Throws std::invalid_argument if the scheme has no such slot.
Code slot_code(Scheme s, Family f, Category c, const Nat& x, const Nat& y);

struct SlotHit {
  Family family;
  Category category;
  Nat x, y;
};
std::optional<SlotHit> slot_of(Scheme s, const Code& c);

// Term layer: 0, 1, v and S, ', +, · applied to term-layer expressions.
bool in_term_layer(const Expr& e);
// δtm: 0→1, 1→2, v→3, S t→2·3^n, 't→4·3^n, t+u→8·3^n·5^m, t·u→16·3^n·5^m.
// Throws NotTermLayer or CodeTooLarge.
Code term_code(const Expr& e);
std::optional<Expr> term_decode(const Code& c);

// δ¬ codes are even exactly for fragment-provable expressions (a formula
// whose universal closure is provable). The ¬ tracker needs the oracle.
Code delta_neg_encode(const Expr& e, const Oracle& oracle);
Numbering delta_neg(const Oracle& oracle = Oracle());
// The decidable predicate: c is the last entry of a justification
// sequence built from the four Λ clauses.
bool pr_delta_neg(const Code& c);
// The sequence itself, ascending; empty if there is none.
std::vector<Code> pr_delta_neg_witness(const Code& c);
// Re-checks a witness clause by clause against earlier entries.
bool check_pr_sequence(const std::vector<Code>& seq);
// Distinct subformulas of the expression coded by c, from the slot
// structure. Throws NotInImage.
std::size_t subformula_count(const Code& c, const Oracle& oracle = Oracle());

// δ*: 3<i,j>+r with i the number of leading ¬, j = γ′ of the rest and
// r = 0 provable, 1 refutable, 2 otherwise. The ¬ tracker is closed-form.
Code delta_star_encode(const Expr& e, const Oracle& oracle);
Numbering delta_star(const Oracle& oracle = Oracle());
bool pr_delta_star(const Code& c);

// δ∀ codes are ≡ 0, 1, 2 mod 3 for true sentences, false sentences and
// everything else. The ∀ tracker needs the oracle.
Code delta_forall_encode(const Expr& e, const Oracle& oracle);
Numbering delta_forall(const Oracle& oracle = Oracle());
bool tr_delta_forall(const Code& c);

// Stage at which the staged construction first assigns e a code.
enum class Staged { Neg, Star, Forall };
std::size_t stage_of(Staged which, const Expr& e);
std::optional<Code> encode_at_stage(Staged which, const Expr& e, std::size_t stage,
                                    const Oracle& oracle);

}  // namespace goedel
