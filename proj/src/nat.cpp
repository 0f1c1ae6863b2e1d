#include "goedel/nat.hpp"

#include "goedel/errors.hpp"

namespace goedel {

Nat pair(const Nat& x, const Nat& y) {
  Nat s = x + y;
  Nat t = (s + 1) * (s + 2);
  t /= 2;
  return t + y;
}

namespace {

// w = largest integer with w(w+1)/2 <= z.
Nat triangular_root(const Nat& z) {
  Nat d = 8 * z + 1;
  Nat r;
  mpz_sqrt(r.get_mpz_t(), d.get_mpz_t());
  return (r - 1) / 2;
}

}  // namespace

std::pair<Nat, Nat> unpair(const Nat& z) {
  if (z < 1) throw NotInPairImage("0 is not a pair code");
  Nat w = triangular_root(z);
  Nat s = w - 1;
  Nat y = z - w * (w + 1) / 2;
  if (y > s) throw NotInPairImage(z.get_str() + " is not a pair code");
  return {s - y, y};
}

bool in_pair_image(const Nat& z) {
  if (z < 1) return false;
  Nat w = triangular_root(z);
  return z - w * (w + 1) / 2 <= w - 1;
}

std::size_t bit_length(const Nat& n) {
  if (n == 0) return 0;
  return mpz_sizeinbase(n.get_mpz_t(), 2);
}

void check_code_size(const Nat& n, const char* where) {
  if (bit_length(n) > kMaxCodeBits)
    throw CodeTooLarge(std::string(where) + ": code exceeds " +
                       std::to_string(kMaxCodeBits) + " bits");
}

std::uint64_t to_u64(const Nat& n, const char* where) {
  if (n < 0 || !n.fits_ulong_p())
    throw CodeTooLarge(std::string(where) + ": value does not fit 64 bits");
  return n.get_ui();
}

Nat parse_nat(const std::string& s) {
  if (s.empty()) throw SyntaxError("empty number", 0);
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') throw SyntaxError("not a natural number", i);
  return Nat(s, 10);
}

}  // namespace goedel
