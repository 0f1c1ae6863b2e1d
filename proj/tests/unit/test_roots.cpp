#include <gtest/gtest.h>

#include "goedel/generate.hpp"
#include "goedel/roots.hpp"

using namespace goedel;

namespace {

std::vector<mpz_class> times_linear(const std::vector<mpz_class>& p, const mpz_class& r) {
  // p(x)·(x - r)
  std::vector<mpz_class> out(p.size() + 1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i + 1] += p[i];
    out[i] -= r * p[i];
  }
  return out;
}

}  // namespace

TEST(Roots, FindsPlantedRoots) {
  Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<mpz_class> p{static_cast<long>(below(rng, 5)) + 1};
    std::set<mpz_class> roots;
    for (std::uint64_t k = below(rng, 4); k-- > 0;) {
      mpz_class r = static_cast<unsigned long>(below(rng, 60));
      roots.insert(r);
      p = times_linear(p, r);
    }
    // a factor without natural roots
    if (below(rng, 2)) {
      std::vector<mpz_class> q(p.size() + 2);
      for (std::size_t i = 0; i < p.size(); ++i) {
        q[i] += 3 * p[i];
        q[i + 2] += p[i];
      }
      p = q;
    }
    auto got = natural_roots(p);
    std::vector<mpz_class> want(roots.begin(), roots.end());
    EXPECT_EQ(got, want);
    // brute force over the range the roots are drawn from
    for (long x = 0; x < 80; ++x)
      EXPECT_EQ(eval_univariate(p, x) == 0, roots.count(x) == 1) << x;
  }
}

TEST(Roots, HugeLinearRoot) {
  mpz_class r("123456789012345678901234567890123456789");
  std::vector<mpz_class> p{-3 * r, 3};
  auto got = natural_roots(p);
  ASSERT_EQ(got.size(), 1u);
  EXPECT_EQ(got[0], r);
  EXPECT_TRUE(natural_roots({-3 * r - 1, 3}).empty());
}

TEST(Roots, Constants) {
  EXPECT_TRUE(natural_roots({5}).empty());
  EXPECT_EQ(natural_roots({0, 1}), std::vector<mpz_class>{0});
}
