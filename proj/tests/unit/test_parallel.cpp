#include <gtest/gtest.h>

#include "goedel/deviant.hpp"
#include "goedel/generate.hpp"
#include "goedel/parallel.hpp"
#include "goedel/standard.hpp"

using namespace goedel;

TEST(Parallel, ClassifyAgreesWithSerial) {
  Oracle o;
  auto items = closed_items(120, 5, o);
  EXPECT_EQ(classify_all(o, items, Exec::Serial), classify_all(o, items, Exec::Parallel));
}

TEST(Parallel, NormalizeAgreesWithSerial) {
  Rng rng(5);
  std::vector<Expr> terms;
  for (int i = 0; i < 150; ++i) terms.push_back(random_term(rng, 5, 3));
  EXPECT_EQ(normalize_all(terms, Exec::Serial), normalize_all(terms, Exec::Parallel));
}

TEST(Parallel, EncodeAgreesWithSerial) {
  Oracle o;
  auto items = mixed_expressions(120, 6, o);
  for (const auto& n : {standard_gamma(), delta_neg(o), delta_forall(o)})
    EXPECT_EQ(encode_all(n, items, Exec::Serial), encode_all(n, items, Exec::Parallel)) << n.name();
}

TEST(Parallel, SweepKeepsOrderAndRethrowsLowestIndex) {
  std::vector<int> xs(100);
  for (int i = 0; i < 100; ++i) xs[i] = i;
  auto sq = sweep(std::span<const int>(xs), [](int x) { return x * x; });
  for (int i = 0; i < 100; ++i) EXPECT_EQ(sq[i], i * i);
  try {
    sweep(std::span<const int>(xs), [](int x) -> int {
      if (x % 30 == 17) throw std::runtime_error(std::to_string(x));
      return x;
    });
    FAIL();
  } catch (const std::runtime_error& e) {
    EXPECT_STREQ(e.what(), "17");
  }
  EXPECT_GE(worker_count(), 1);
}
