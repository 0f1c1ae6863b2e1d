#pragma once

#include <vector>

#include "goedel/nat.hpp"

namespace goedel {

// p(x) with coefficients c[0..d], evaluated exactly.
mpz_class eval_univariate(const std::vector<mpz_class>& c, const mpz_class& x);

// Every natural number r with p(r) = 0, ascending. p must not be the zero
// polynomial. Exact: Descartes sign-variation bisection over [0, Cauchy bound].
std::vector<Nat> natural_roots(const std::vector<mpz_class>& c);

}  // namespace goedel
