#include <gtest/gtest.h>

#include "goedel/errors.hpp"
#include "goedel/generate.hpp"
#include "goedel/syntax.hpp"
#include "goedel/truth.hpp"
#include "oracles.hpp"

using namespace goedel;

namespace {

// Truth of a sentence by brute force, quantifiers bounded by `bound`.
// Only used on sentences where the bound is decisive (see below).
bool bounded_truth(const Expr& e, std::map<std::uint64_t, mpz_class>& at, unsigned bound) {
  switch (e.op()) {
    case Op::Eq: return oracle::eval(e.child(0), at) == oracle::eval(e.child(1), at);
    case Op::Not: return !bounded_truth(e.child(0), at, bound);
    case Op::And: return bounded_truth(e.child(0), at, bound) && bounded_truth(e.child(1), at, bound);
    case Op::Forall: {
      auto x = *e.child(0).variable_index();
      auto saved = at.count(x) ? std::optional<mpz_class>(at[x]) : std::nullopt;
      bool all = true;
      for (unsigned v = 0; v < bound && all; ++v) {
        at[x] = v;
        all = bounded_truth(e.child(1), at, bound);
      }
      if (saved) at[x] = *saved; else at.erase(x);
      return all;
    }
    default: throw std::invalid_argument("not a formula");
  }
}

}  // namespace

TEST(Truth, ClosedEquations) {
  EXPECT_EQ(classify(parse("(= (* (S (S 0)) (S (S 0))) (+ (S (S (S 0))) 1))")).verdict,
            Verdict::Provable);
  EXPECT_EQ(classify(parse("(= 0 (S 0))")).verdict, Verdict::Refutable);
  EXPECT_EQ(eval_closed_term(parse("(* (num 1000) (num 1000))")), 1'000'000);
  EXPECT_THROW(eval_closed_term(parse("(+ (v 0) 0)")), NotClosed);
}

TEST(Truth, RefutationCarriesAWitness) {
  auto c = classify(parse("(forall (v 0) (= (* (v 0) (v 0)) (v 0)))"));
  ASSERT_EQ(c.verdict, Verdict::Refutable);
  ASSERT_TRUE(c.witness);
  std::map<std::uint64_t, mpz_class> at;
  for (const auto& [x, v] : *c.witness) at[*x.variable_index()] = v;
  EXPECT_NE(oracle::eval(parse("(* (v 0) (v 0))"), at), oracle::eval(parse("(v 0)"), at));
}

TEST(Truth, NonSentences) {
  EXPECT_EQ(classify(parse("(= (v 0) 0)")).verdict, Verdict::NotASentence);
  EXPECT_EQ(classify(parse("(+ 0 0)")).verdict, Verdict::NotASentence);
  EXPECT_THROW(truth(parse("(= (v 0) 0)")), NotASentence);
}

TEST(Truth, FragmentProvableUsesTheClosure) {
  Oracle o;
  EXPECT_TRUE(o.fragment_provable(parse("(= (+ (v 0) 0) (v 0))")));
  EXPECT_FALSE(o.fragment_provable(parse("(= (v 0) 0)")));
  EXPECT_FALSE(o.fragment_provable(parse("(+ 0 0)")));
}

TEST(Truth, DeclaredIndependent) {
  Expr s = parse("(forall (v 0) (forall (v 1) (not (= (* (S (v 0)) (S (v 0))) (* (S (S 0)) (* (S (v 1)) (S (v 1))))))))");
  Oracle plain(Budget{200, 12});
  EXPECT_EQ(plain.classify(s).verdict, Verdict::Unknown);
  Oracle declared(Budget{200, 12}, {s});
  EXPECT_EQ(declared.classify(s).verdict, Verdict::Independent);
  EXPECT_THROW(plain.fragment_provable(s), OracleIncomplete);
}

// Single-variable quantifier-free bodies are decided exactly, so the
// verdict must agree with a search large enough to pass every root of the
// atoms involved (terms of depth 2 over numerals ≤ 3 have roots < 64).
TEST(Truth, AgreesWithBoundedSearchOnOneVariable) {
  Rng rng(77);
  int checked = 0;
  for (int i = 0; i < 400; ++i) {
    Expr body = random_formula(rng, 2, 1);
    if (free_variables(body).size() != 1) continue;
    bool qf = true;
    for (const auto& s : subexpressions(body)) qf = qf && s.op() != Op::Forall;
    if (!qf) continue;
    Expr s = Expr::forall(Expr::variable(0), body);
    auto v = classify(s).verdict;
    ASSERT_NE(v, Verdict::Unknown) << to_string(s);
    std::map<std::uint64_t, mpz_class> at;
    EXPECT_EQ(v == Verdict::Provable, bounded_truth(s, at, 200)) << to_string(s);
    ++checked;
  }
  EXPECT_GT(checked, 50);
}

TEST(Truth, ClassifyMatchesTruthOnTheFragment) {
  Oracle o;
  for (const auto& s : fragment_sentences(150, 4, o)) {
    auto v = o.classify(s).verdict;
    auto t = o.truth(s);
    EXPECT_EQ(v == Verdict::Provable, t == Truth::True) << to_string(s);
    EXPECT_EQ(v == Verdict::Refutable, t == Truth::False) << to_string(s);
  }
}
