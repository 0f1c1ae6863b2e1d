#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "goedel/nat.hpp"

namespace goedel {

// Sorted (variable, exponent) list with positive exponents.
using Monomial = std::vector<std::pair<std::uint64_t, std::uint32_t>>;

// Graded lexicographic: total degree first, then the exponent lists.
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Multivariate polynomial with integer coefficients in canonical form.
// Zero coefficients are never stored, so structural equality is
// polynomial equality.
class Polynomial {
 public:
  Polynomial() = default;
  static Polynomial constant(const mpz_class& c);
  static Polynomial variable(std::uint64_t index);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, mpz_class, MonomialLess>& terms() const { return terms_; }
  std::vector<std::uint64_t> variables() const;
  std::uint32_t degree() const;
  mpz_class constant_term() const;

  // Missing variables evaluate to `fill`.
  mpz_class evaluate(const std::map<std::uint64_t, mpz_class>& at, const mpz_class& fill = 0) const;
  mpz_class evaluate_all(const mpz_class& value) const;

  // Coefficients c0..cd in the single variable x; throws if others occur.
  std::vector<mpz_class> univariate(std::uint64_t x) const;

  // Reads the same syntax to_string writes, e.g. "2*x0^2 + x1 - 3".
  static Polynomial parse(const std::string& text);
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const mpz_class& c);
  std::map<Monomial, mpz_class, MonomialLess> terms_;
};

}  // namespace goedel
