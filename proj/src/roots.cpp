#include "goedel/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace goedel {

mpz_class eval_univariate(const std::vector<mpz_class>& c, const mpz_class& x) {
  mpz_class acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

namespace {

void taylor_shift(std::vector<mpz_class>& a, const mpz_class& s) {
  const std::size_t d = a.size() - 1;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = d - 1;; --j) {
      a[j] += s * a[j + 1];
      if (j == i) break;
    }
}

int sign_variations(const std::vector<mpz_class>& a) {
  int v = 0, last = 0;
  for (const auto& x : a) {
    int s = sgn(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

// Upper bound on the number of roots of p in the open interval (lo, hi).
int descartes_bound(const std::vector<mpz_class>& p, const mpz_class& lo, const mpz_class& hi) {
  std::vector<mpz_class> a = p;
  taylor_shift(a, lo);
  mpz_class w = hi - lo, pw = 1;
  for (auto& x : a) {
    x *= pw;
    pw *= w;
  }
  std::reverse(a.begin(), a.end());
  taylor_shift(a, 1);
  return sign_variations(a);
}

// Roots in the open interval (lo, hi), ascending. Explicit stack: the
// bound can have as many bits as the coefficients.
void isolate(const std::vector<mpz_class>& p, const mpz_class& lo, const mpz_class& hi,
             std::vector<Nat>& out) {
  struct Item {
    mpz_class lo, hi;
    bool emit_lo;
  };
  std::vector<Item> stack{{lo, hi, false}};
  while (!stack.empty()) {
    Item it = std::move(stack.back());
    stack.pop_back();
    if (it.emit_lo) {
      out.push_back(it.lo);
      continue;
    }
    if (it.hi - it.lo <= 1 || descartes_bound(p, it.lo, it.hi) == 0) continue;
    mpz_class mid = (it.lo + it.hi) / 2;
    // pushed in reverse so the left half is handled first
    stack.push_back({mid, it.hi, false});
    if (eval_univariate(p, mid) == 0) stack.push_back({mid, mid, true});
    stack.push_back({it.lo, mid, false});
  }
}

}  // namespace

std::vector<Nat> natural_roots(const std::vector<mpz_class>& c) {
  std::vector<mpz_class> p = c;
  while (!p.empty() && p.back() == 0) p.pop_back();
  if (p.empty()) throw std::invalid_argument("natural_roots of the zero polynomial");
  std::vector<Nat> out;
  if (p[0] == 0) {
    out.push_back(0);
    while (p[0] == 0) p.erase(p.begin());
  }
  if (p.size() == 1) return out;
  if (p.size() == 2) {
    // a + b·x
    if (sgn(p[0]) != sgn(p[1]) && mpz_divisible_p(p[0].get_mpz_t(), p[1].get_mpz_t()))
      out.push_back(abs(p[0] / p[1]));
    return out;
  }
  // Cauchy: every root satisfies |r| < 1 + max|a_i| / |a_d|.
  mpz_class m = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) m = std::max(m, mpz_class(abs(p[i])));
  mpz_class bound = 1 + m / abs(p.back()) + 1;
  if (eval_univariate(p, 1) == 0) out.push_back(1);
  isolate(p, 1, bound, out);
  if (eval_univariate(p, bound) == 0) out.push_back(bound);
  return out;
}

}  // namespace goedel
