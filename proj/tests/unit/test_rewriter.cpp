#include <gtest/gtest.h>

#include "goedel/errors.hpp"
#include "goedel/generate.hpp"
#include "goedel/rewriter.hpp"
#include "oracles.hpp"

using namespace goedel;

namespace {

// Equal as functions on a grid of small points. Two distinct polynomials
// of degree < 2^6 cannot agree on all of these, which makes this an
// independent check of polynomial identity for the terms drawn here.
bool equal_on_grid(const Expr& a, const Expr& b, Rng& rng) {
  for (int trial = 0; trial < 40; ++trial) {
    std::map<std::uint64_t, mpz_class> at;
    for (std::uint64_t v = 0; v < 3; ++v) at[v] = static_cast<unsigned long>(below(rng, 1'000'003));
    if (oracle::eval(a, at) != oracle::eval(b, at)) return false;
  }
  return true;
}

}  // namespace

TEST(Rewriter, NormalFormsAreRuleFree) {
  Rng rng(1);
  for (int i = 0; i < 200; ++i) {
    Expr t = random_term(rng, 5, 3);
    auto nf = normal_form(t);
    EXPECT_FALSE(rewrite_step(nf.term).has_value()) << to_string(t);
    EXPECT_EQ(to_polynomial(nf.term), to_polynomial(t));
  }
}

TEST(Rewriter, ProvablyEqualAgreesWithEvaluation) {
  auto pairs = random_term_pairs(400, 99);
  Rng rng(4);
  std::size_t equal = 0;
  for (const auto& [a, b] : pairs) {
    bool want = equal_on_grid(a, b, rng);
    equal += want;
    EXPECT_EQ(provably_equal(a, b), want) << to_string(a) << " vs " << to_string(b);
  }
  EXPECT_GE(equal, 150u);  // the variants make roughly half of them identities
}

TEST(Rewriter, StrategyDoesNotChangeTheNormalForm) {
  Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    Expr t = random_term(rng, 5, 3);
    auto a = normal_form(t);
    auto b = normal_form(t, Strategy::random(i));
    EXPECT_TRUE(ac_equal(a.term, b.term)) << to_string(t);
    EXPECT_TRUE(b.trace.weights_decrease());
  }
}

TEST(Rewriter, EveryStepDecreasesTheWeightAtTwo) {
  Rng rng(2);
  for (int i = 0; i < 200; ++i) {
    Expr t = random_term(rng, 6, 3);
    auto nf = normal_form(t);
    if (!nf.trace.steps.empty()) EXPECT_EQ(nf.trace.steps.front().term_weight_before, weight_at_two(t));
    for (const auto& s : nf.trace.steps) {
      EXPECT_EQ(weight_at_two(s.before), s.weight_before);
      EXPECT_EQ(weight_at_two(s.after), s.weight_after);
      EXPECT_LT(s.weight_after, s.weight_before) << rule_name(s.rule);
      EXPECT_LT(s.term_weight_after, s.term_weight_before) << rule_name(s.rule);
    }
    if (!nf.trace.steps.empty()) {
      // consecutive steps chain through the whole term
      for (std::size_t k = 1; k < nf.trace.steps.size(); ++k)
        EXPECT_EQ(nf.trace.steps[k].term_weight_before, nf.trace.steps[k - 1].term_weight_after);
      EXPECT_EQ(nf.trace.steps.back().term_weight_after, weight_at_two(nf.term));
    }
  }
}

TEST(Rewriter, RuleDeltas) {
  const std::vector<std::string> want = {"x0 - 1", "1", "x0", "2*x0 - 2", "3"};
  auto got = rule_weight_deltas();
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    EXPECT_EQ(got[i], Polynomial::parse(want[i])) << got[i].to_string();
    EXPECT_TRUE(decreases_on_domain(got[i]));
  }
  EXPECT_FALSE(decreases_on_domain(Polynomial::parse("x0 - 2")));
  EXPECT_FALSE(decreases_on_domain(Polynomial::parse("3 - x0")));
}

TEST(Rewriter, WeightInterpretation) {
  // S → X+4, + → X+Y+1, · → XY, 0 and 1 → 2
  EXPECT_EQ(weight(parse("(S (v 0))")), Polynomial::parse("x0 + 4"));
  EXPECT_EQ(weight(parse("(+ (v 0) (v 1))")), Polynomial::parse("x0 + x1 + 1"));
  EXPECT_EQ(weight(parse("(* (v 0) 1)")), Polynomial::parse("2*x0"));
}

TEST(Rewriter, CriticalPairsJoin) {
  auto cps = critical_pairs();
  ASSERT_EQ(cps.size(), 3u);
  for (const auto& [a, b] : cps)
    EXPECT_TRUE(ac_equal(normal_form(a).term, normal_form(b).term))
        << to_string(a) << " / " << to_string(b);
}

TEST(Rewriter, AcCanonicalIgnoresOrderAndGrouping) {
  EXPECT_TRUE(ac_equal(parse("(+ (+ (v 0) (v 1)) (v 2))"), parse("(+ (v 2) (+ (v 1) (v 0)))")));
  EXPECT_FALSE(ac_equal(parse("(+ (v 0) (v 1))"), parse("(* (v 0) (v 1))")));
  EXPECT_THROW(ac_canonical(parse("(= 0 0)")), NotATerm);
}

TEST(Rewriter, Examples) {
  EXPECT_TRUE(provably_equal(parse("(+ (S 0) (v 0))"), parse("(+ (v 0) (S 0))")));
  EXPECT_TRUE(provably_equal(parse("(* (S (S 0)) (v 0))"), parse("(+ (v 0) (v 0))")));
  EXPECT_FALSE(provably_equal(parse("(* (v 0) (v 0))"), parse("(v 0)")));
  EXPECT_THROW(provably_equal(parse("(= 0 0)"), parse("0")), NotATerm);
}

TEST(Polynomial, ParsePrintRoundTrip) {
  Rng rng(8);
  for (int i = 0; i < 100; ++i) {
    Polynomial p = to_polynomial(random_term(rng, 5, 3)) - to_polynomial(random_term(rng, 3, 3));
    EXPECT_EQ(Polynomial::parse(p.to_string()), p) << p.to_string();
  }
}

TEST(Polynomial, EvaluationMatchesTermValue) {
  Rng rng(6);
  for (int i = 0; i < 100; ++i) {
    Expr t = random_term(rng, 5, 3);
    std::map<std::uint64_t, mpz_class> at{{0, 3}, {1, 7}, {2, 11}};
    EXPECT_EQ(to_polynomial(t).evaluate(at), oracle::eval(t, at));
  }
}
