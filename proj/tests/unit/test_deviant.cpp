#include <gtest/gtest.h>

#include "goedel/deviant.hpp"
#include "goedel/errors.hpp"
#include "goedel/generate.hpp"
#include "goedel/standard.hpp"
#include "goedel/syntax.hpp"
#include "oracles.hpp"

using namespace goedel;

namespace {

const Expr eq00 = parse("(= 0 0)");
const Expr eq01 = parse("(= 0 (S 0))");

std::set<unsigned> pair_image(unsigned below_code) {
  std::set<unsigned> out;
  for (const auto& kv : oracle::pairing_table(200))
    if (kv.second < below_code) out.insert(kv.second);
  return out;
}

unsigned long mod(const Code& c, unsigned long m) { return mpz_fdiv_ui(c.get_mpz_t(), m); }

}  // namespace

TEST(Slots, TablesAreAsPublished) {
  auto neg = slot_table(Scheme::Neg);
  auto all = slot_table(Scheme::Forall);
  EXPECT_EQ(neg.size(), 9u);
  EXPECT_EQ(all.size(), 13u);
  for (const auto& s : neg) {
    if (s.family == Family::Lambda) EXPECT_EQ(s.multiplier, 8u);
    if (s.family == Family::Theta) EXPECT_EQ(s.multiplier, 10u);
    EXPECT_EQ(s.offset % 2, s.family == Family::Lambda ? 0u : 1u);
  }
  for (const auto& s : all) {
    unsigned want = s.family == Family::Lambda ? 0 : s.family == Family::Theta ? 1 : 2;
    EXPECT_EQ(s.offset % 3, want);
  }
  EXPECT_EQ(slot_code(Scheme::Neg, Family::Theta, Category::Eq, 41, 341), 10 * oracle::cantor(41, 341) + 3);
  EXPECT_THROW(slot_code(Scheme::Neg, Family::Upsilon, Category::Eq, 0, 0), std::invalid_argument);
}

// Slot images never overlap and slot_of finds the unique owner.
TEST(Slots, ImagesAreDisjoint) {
  const unsigned N = 20000;
  auto image = pair_image(N);
  for (Scheme s : {Scheme::Neg, Scheme::Forall}) {
    const auto& table = slot_table(s);
    for (unsigned c = 0; c < N; ++c) {
      int owners = 0;
      const Slot* owner = nullptr;
      for (const auto& sl : table)
        if (c >= sl.offset && (c - sl.offset) % sl.multiplier == 0 &&
            image.count((c - sl.offset) / sl.multiplier)) {
          ++owners;
          owner = &sl;
        }
      ASSERT_LE(owners, 1) << c;
      auto hit = slot_of(s, c);
      ASSERT_EQ(hit.has_value(), owners == 1) << c;
      if (hit) {
        EXPECT_EQ(hit->family, owner->family);
        EXPECT_EQ(hit->category, owner->category);
        EXPECT_EQ(slot_code(s, hit->family, hit->category, hit->x, hit->y), c);
      }
    }
  }
}

TEST(TermCode, MatchesDefiningTable) {
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    Expr t = random_term(rng, 2, 2, 2);
    Code want;
    try {
      want = oracle::term_code(t);
    } catch (...) {
      continue;
    }
    if (bit_length(want) > 100000) continue;
    EXPECT_EQ(term_code(t), want) << to_string(t);
    EXPECT_EQ(*term_decode(want), t);
  }
  EXPECT_EQ(term_code(parse("(S 0)")), 6);
  EXPECT_EQ(term_code(parse("(+ 0 1)")), 600);
  EXPECT_THROW(term_code(eq00), NotTermLayer);
  EXPECT_THROW(term_code(Expr::numeral(40)), CodeTooLarge);
  EXPECT_FALSE(term_decode(7).has_value());
}

TEST(DeltaNeg, FrozenValues) {
  Oracle o;
  EXPECT_EQ(delta_neg_encode(eq00, o), 28216);
  EXPECT_EQ(delta_neg_encode(eq01, o), slot_code(Scheme::Neg, Family::Theta, Category::Eq, 41, 341));
  EXPECT_EQ(delta_neg_encode(eq01, o), 738773);
  EXPECT_TRUE(pr_delta_neg(28216));
  EXPECT_FALSE(pr_delta_neg(7));
  EXPECT_FALSE(pr_delta_neg(738773));
  EXPECT_EQ(subformula_count(28216, o), 1u);
}

TEST(DeltaNeg, ParityIsFragmentProvability) {
  Oracle o;
  Numbering n = delta_neg(o);
  for (const auto& e : closed_items(150, 8, o)) {
    Code c = n.encode(e);
    bool prov = o.fragment_provable(e);
    EXPECT_EQ(mod(c, 2) == 0, prov) << to_string(e);
    EXPECT_EQ(pr_delta_neg(c), prov) << to_string(e);
    EXPECT_EQ(n.decode(c), e);
  }
}

TEST(DeltaNeg, WitnessSequencesCheck) {
  Oracle o;
  for (const auto& s : fragment_sentences(60, 2, o)) {
    Code c = delta_neg_encode(s, o);
    auto w = pr_delta_neg_witness(c);
    if (o.fragment_provable(s)) {
      ASSERT_FALSE(w.empty()) << to_string(s);
      EXPECT_EQ(w.back(), c);
      EXPECT_TRUE(check_pr_sequence(w));
      EXPECT_LE(w.size(), subformula_count(c, o));
      EXPECT_TRUE(std::is_sorted(w.begin(), w.end()));
    } else {
      EXPECT_TRUE(w.empty()) << to_string(s);
    }
  }
  EXPECT_FALSE(check_pr_sequence({7}));
}

TEST(DeltaNeg, NotTrackerHasNoClosedForm) {
  auto missing = delta_neg().missing_trackers();
  EXPECT_EQ(missing, std::vector<Op>{Op::Not});
  EXPECT_NE(delta_neg().oracle_tracker(Op::Not), nullptr);
}

TEST(DeltaForall, Trisection) {
  Oracle o;
  Numbering n = delta_forall(o);
  EXPECT_EQ(n.encode(eq00), 95244);
  EXPECT_EQ(n.encode(eq01), slot_code(Scheme::Forall, Family::Theta, Category::Eq, 62, 512));
  for (const auto& e : closed_items(150, 9, o)) {
    Code c = n.encode(e);
    unsigned long want = 2;
    if (is_sentence(e)) want = o.truth(e) == Truth::True ? 0 : 1;
    EXPECT_EQ(mod(c, 3), want) << to_string(e);
    EXPECT_EQ(tr_delta_forall(c), want == 0);
    EXPECT_EQ(n.decode(c), e);
  }
  EXPECT_EQ(delta_forall().missing_trackers(), std::vector<Op>{Op::Forall});
}

// Three cases: provable 0, refutable 1, anything else 2; each ¬ swaps the
// first two.
TEST(DeltaStar, Layering) {
  Oracle o;
  for (const auto& s : fragment_sentences(60, 5, o)) {
    Expr base = strip_negations(s);
    auto v = o.classify(base).verdict;
    unsigned long r0 = v == Verdict::Provable ? 0 : v == Verdict::Refutable ? 1 : 2;
    Expr e = base;
    for (unsigned long k = 0; k <= 3; ++k, e = Expr::neg(e)) {
      Code c = delta_star_encode(e, o);
      unsigned long want = r0 == 2 ? 2 : (k % 2 ? 1 - r0 : r0);
      EXPECT_EQ(mod(c, 3), want);
      auto [i, j] = unpair(c / 3);
      EXPECT_EQ(i, k);
      EXPECT_EQ(j, compact_encode(base));
      EXPECT_EQ(pr_delta_star(c), o.classify(e).verdict == Verdict::Provable);
    }
  }
}

TEST(DeltaStar, NotTrackerIsClosedForm) {
  auto n = delta_star();
  const Tracker* t = n.tracker(Op::Not);
  ASSERT_NE(t, nullptr);
  Code c = n.encode(eq01);
  Code args[] = {c};
  EXPECT_EQ((*t)(args), n.encode(Expr::neg(eq01)));
}

TEST(Staging, StageIsWhenTheCodeAppears) {
  Oracle o;
  Expr e = parse("(and (not (= 0 0)) (forall (v 0) (= (v 0) (v 0))))");
  for (Staged w : {Staged::Neg, Staged::Star, Staged::Forall}) {
    std::size_t s = stage_of(w, e);
    EXPECT_TRUE(encode_at_stage(w, e, s, o).has_value());
    if (s > 0) EXPECT_FALSE(encode_at_stage(w, e, s - 1, o).has_value());
  }
  EXPECT_EQ(stage_of(Staged::Star, Expr::neg(Expr::neg(eq00))), 2u);
}
