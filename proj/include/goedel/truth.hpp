#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string_view>
#include <utility>
#include <vector>

#include "goedel/expr.hpp"

namespace goedel {

struct Budget {
  std::uint64_t max_instances = 10'000;  // per quantifier block
  std::uint32_t max_depth = 12;
};

enum class Verdict { Provable, Refutable, Independent, NotASentence, Unknown };
enum class Truth { True, False, Unknown };

std::string_view verdict_name(Verdict v);
std::string_view truth_name(Truth t);

struct Classification {
  Verdict verdict = Verdict::Unknown;
  std::uint64_t budget_used = 0;
  // For refutations of universal sentences: the instance that fails.
  std::optional<std::vector<std::pair<Expr, Nat>>> witness;
};

// Value of a closed term. Throws NotATerm / NotClosed.
Nat eval_closed_term(const Expr& t);

// Decision procedure for the fragment built from equations with ¬, ∧ and
// ∀. Inside the fragment provability coincides with truth in ℕ:
//  - closed equations are evaluated;
//  - a universal equation holds iff both sides expand to the same
//    polynomial, and otherwise fails somewhere on a small grid;
//  - a quantifier-free body in one variable is decided exactly from the
//    natural roots of its atoms;
//  - anything else falls back to a dovetailed instance search, which can
//    refute but never confirm, and reports Unknown when the budget runs out.
// Sentences named in `declared_independent` are reported Independent when
// the procedure itself can only say Unknown.
class Oracle {
 public:
  explicit Oracle(Budget budget = {}, std::set<Expr> declared_independent = {});

  Classification classify(const Expr& e) const;
  // Throws NotASentence for non-sentences.
  Truth truth(const Expr& e) const;
  // classify(universal_closure(e)) == Provable for formulas, false for
  // anything else. Throws OracleIncomplete when the verdict is Unknown.
  bool fragment_provable(const Expr& e) const;

  const Budget& budget() const { return budget_; }
  const std::set<Expr>& declared_independent() const { return declared_; }

 private:
  Budget budget_;
  std::set<Expr> declared_;
};

Classification classify(const Expr& e, const Budget& budget = {});
Truth truth(const Expr& e, const Budget& budget = {});

}  // namespace goedel
