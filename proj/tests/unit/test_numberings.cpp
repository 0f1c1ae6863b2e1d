#include <gtest/gtest.h>

#include "goedel/diag.hpp"
#include "goedel/enumeration.hpp"
#include "goedel/errors.hpp"
#include "goedel/generate.hpp"
#include "goedel/split.hpp"
#include "goedel/standard.hpp"
#include "goedel/syntax.hpp"
#include "goedel/twist.hpp"
#include "oracles.hpp"

using namespace goedel;

namespace {

std::vector<Expr> small_corpus() {
  Rng rng(41);
  std::vector<Expr> out;
  for (int i = 0; i < 40; ++i) out.push_back(random_formula(rng, 2, 2));
  for (int i = 0; i < 40; ++i) out.push_back(random_term(rng, 3, 2));
  out.push_back(parse("(S (= 0 0))"));
  out.push_back(parse("(p (+ 0 1))"));
  out.push_back(trigger_of(parse("(= 0 (S 0))")));
  return out;
}

}  // namespace

TEST(Gamma, MatchesTreeRecursion) {
  EXPECT_EQ(gamma_encode(Expr::zero()), 1);
  EXPECT_EQ(gamma_encode(parse("(S 0)")), 16);
  for (const auto& e : small_corpus()) {
    EXPECT_EQ(gamma_encode(e), oracle::gamma(e)) << to_string(e);
    EXPECT_EQ(*gamma_decode(gamma_encode(e)), e);
  }
  EXPECT_FALSE(gamma_decode(0).has_value());
}

TEST(Gamma, GrowthIsGuarded) {
  EXPECT_THROW(gamma_encode(Expr::numeral(64)), CodeTooLarge);
}

TEST(Compact, NumeralsAndVariablesAreLeaves) {
  EXPECT_EQ(compact_encode(Expr::numeral(5)), oracle::cantor(0, 5));
  EXPECT_EQ(compact_encode(Expr::variable(3)), oracle::cantor(2, 3));
  EXPECT_EQ(compact_encode(Expr::zero()), gamma_encode(Expr::zero()));
  mpz_class big("1000000000000000000000");
  EXPECT_EQ(compact_encode(Expr::numeral(big)), oracle::cantor(0, big));
  for (const auto& e : small_corpus()) EXPECT_EQ(*compact_decode(compact_encode(e)), e);
}

TEST(Diag, DiagonalSentencesGetTheirIndex) {
  Expr psi = parse("(= (v 0) (v 0))");
  Code k = diag_index(psi);
  EXPECT_EQ(k, 2 * compact_encode(psi));
  Expr s = substitute_numeral(psi, Expr::variable(0), k);
  Numbering D = diag_numbering();
  EXPECT_EQ(D.encode(s), k);
  EXPECT_EQ(D.decode(k), s);
  auto src = diagonal_source(s);
  ASSERT_TRUE(src);
  EXPECT_EQ(src->first, psi);
  // code below the numeral inside: D is not monotone
  EXPECT_LT(D.encode(s), D.encode(Expr::numeral(k)));
  EXPECT_EQ(D.encode(Expr::zero()), 3);
  EXPECT_THROW(diag_index(parse("(= 0 0)")), NotAFormula);
}

TEST(Diag, OtherExpressionsAreOdd) {
  Numbering D = diag_numbering();
  for (const auto& e : small_corpus()) {
    if (diagonal_source(e)) continue;
    EXPECT_EQ(D.encode(e), 2 * compact_encode(e) + 1);
  }
}

TEST(Twist, TriggersUseH) {
  Numbering g = standard_gamma(), t = twist_numbering(g);
  Expr chi = parse("(= 0 (S 0))");
  EXPECT_EQ(t.encode(trigger_of(chi)), 2 * oracle::pow(2, t.encode(chi)));
  EXPECT_EQ(t.encode(chi), 2 * g.encode(chi) + 1);
  EXPECT_TRUE(is_trigger(trigger_of(chi)));
  EXPECT_FALSE(is_trigger(Expr::neg(chi)));
}

TEST(Twist, RejectsNonMonotoneH) {
  auto flat = with_search_inverse("flat", [](const Nat&) { return Nat(1); });
  EXPECT_THROW(twist_numbering(standard_gamma(), flat), NotMonotoneH);
  auto cube = with_search_inverse("n^3", [](const Nat& n) { return Nat(n * n * n); });
  EXPECT_EQ(*cube.inverse(27), 3);
  EXPECT_FALSE(cube.inverse(28).has_value());
  Numbering t = twist_numbering(standard_gamma(), cube);
  for (const auto& e : small_corpus()) EXPECT_EQ(t.decode(t.encode(e)), e);
}

TEST(Split, ParityIsMembership) {
  Oracle o;
  auto corpus = small_corpus();
  // Enough provable items that the even codes below 40 stay in the listed
  // prefix; past it the plain enumeration outgrows its budget at length 11.
  for (unsigned long k = 0; k < 20; ++k)
    corpus.push_back(Expr::eq(Expr::numeral(k), Expr::numeral(k)));
  std::vector<Expr> prefix = corpus;
  Numbering s = split_provable(o, canonical_order(prefix));
  for (const auto& e : corpus) {
    Code c = s.encode(e);
    bool member = is_sentence(e) && o.classify(e).verdict == Verdict::Provable;
    EXPECT_EQ(mpz_even_p(c.get_mpz_t()) != 0, member) << to_string(e);
    EXPECT_EQ(s.decode(c), e);
  }
  // onto: every small code decodes
  for (unsigned c = 0; c < 40; ++c) EXPECT_TRUE(s.in_image(c)) << c;
}

TEST(Enumeration, CanonicalOrderIsABijection) {
  auto order = canonical_order({parse("(= 0 0)")}, 100'000);
  EXPECT_EQ(order->at(0), parse("(= 0 0)"));
  for (std::uint64_t i = 0; i < 300; ++i) EXPECT_EQ(order->index_of(order->at(i)), i);
  for (std::size_t len = 1; len < 8; ++len)
    for (const auto& e : expressions_of_length(len)) EXPECT_EQ(to_string(e).size(), len);
}

TEST(Simulation, StandardNumberingsPass) {
  auto corpus = small_corpus();
  for (const auto& n : {standard_gamma(), compact_gamma(), diag_numbering(),
                        twist_numbering(standard_gamma()), twist_numbering(diag_numbering())}) {
    auto r = verify_simulation(n, corpus);
    EXPECT_TRUE(r.passed()) << n.name() << ": " << (r.failures.empty() ? "" : r.failures[0]);
    EXPECT_GT(r.tracker_checks, 0u);
    EXPECT_TRUE(r.missing_trackers.empty()) << n.name();
  }
}

// A numbering whose successor tracker is off by one must be caught.
TEST(Simulation, DetectsABrokenTracker) {
  Numbering::Parts p;
  p.name = "broken";
  p.encode = gamma_encode;
  p.decode = gamma_decode;
  fill_trackers_by_decoding(p);
  auto good = p.trackers[tag(Op::Succ)];
  p.trackers[tag(Op::Succ)] = [good](std::span<const Code> a) -> Code { return good(a) + 1; };
  auto r = verify_simulation(Numbering(p), small_corpus());
  EXPECT_GT(r.tracker_failures, 0u);
  EXPECT_FALSE(r.passed());
}

TEST(Translation, RoundTrips) {
  auto corpus = small_corpus();
  Numbering g = standard_gamma(), d = diag_numbering(), t = twist_numbering(g);
  for (const auto& [a, b] : {std::pair{g, d}, std::pair{d, g}, std::pair{g, t}, std::pair{t, d}}) {
    auto r = verify_equivalence(a, b, corpus);
    EXPECT_TRUE(r.passed()) << a.name() << "->" << b.name();
  }
  auto gd = translate(g, d), dg = translate(d, g);
  for (const auto& e : corpus) EXPECT_EQ(dg(gd(g.encode(e))), g.encode(e));
  EXPECT_THROW(translate(g, d)(0), NotInImage);
}

TEST(Translation, TransferSetAgreesWithDecoding) {
  Numbering g = standard_gamma(), d = diag_numbering();
  auto is_term_code = [g](const Code& c) {
    auto e = g.try_decode(c);
    return e && is_term(*e);
  };
  auto q = transfer_set(g, d, is_term_code);
  for (const auto& e : small_corpus()) EXPECT_EQ(q(d.encode(e)), is_term(e));
  auto back = transfer_set(d, g, q);
  for (const auto& e : small_corpus()) EXPECT_EQ(back(g.encode(e)), is_term_code(g.encode(e)));
}

TEST(Monotone, GammaHasNoViolationsDiagHas) {
  auto corpus = small_corpus();
  corpus.push_back(substitute_numeral(parse("(= (v 0) (v 0))"), Expr::variable(0),
                                      diag_index(parse("(= (v 0) (v 0))"))));
  auto g = check_monotone(standard_gamma(), corpus);
  EXPECT_TRUE(g.violations.empty());
  EXPECT_GT(g.pairs_checked, 100u);
  auto d = check_monotone(diag_numbering(), corpus);
  ASSERT_FALSE(d.violations.empty());
  for (const auto& v : d.violations) {
    EXPECT_TRUE(is_proper_subexpression(v.sub, v.super));
    EXPECT_GE(v.sub_code, v.super_code);
  }
  auto rel = tracking_relation(standard_gamma());
  EXPECT_TRUE(rel(gamma_encode(Expr::zero()), gamma_encode(parse("(S 0)"))));
  EXPECT_FALSE(rel(gamma_encode(parse("(S 0)")), gamma_encode(Expr::zero())));
}
