#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>

namespace goedel {

using Nat = mpz_class;
using Code = mpz_class;

// Codes beyond this many bits are refused with CodeTooLarge. Several
// numberings grow doubly exponentially, so the guard is hit on purpose.
inline constexpr std::size_t kMaxCodeBits = std::size_t{1} << 22;

// <x,y> = (x+y+1)(x+y+2)/2 + y. The image starts at 1 and misses
// every T(k)-1 (0, 2, 5, 9, 14, ...).
Nat pair(const Nat& x, const Nat& y);

// Inverse of pair. Throws NotInPairImage.
std::pair<Nat, Nat> unpair(const Nat& z);
bool in_pair_image(const Nat& z);

std::size_t bit_length(const Nat& n);
void check_code_size(const Nat& n, const char* where);

// Throws CodeTooLarge when n does not fit.
std::uint64_t to_u64(const Nat& n, const char* where);

Nat parse_nat(const std::string& s);

}  // namespace goedel
