#include "goedel/diag.hpp"

#include <set>

#include "goedel/errors.hpp"
#include "goedel/standard.hpp"
#include "goedel/syntax.hpp"

namespace goedel {

Code diag_index(const Expr& psi) {
  if (!is_formula(psi) || free_variables(psi).size() != 1)
    throw NotAFormula(to_string(psi) + " is not a formula with one free variable");
  return 2 * compact_encode(psi);
}

namespace {

void numeral_values(const Expr& e, std::set<Nat>& out) {
  if (e.is_numeral()) {
    out.insert(*e.numeral_value());
    return;
  }
  if (e.op() == Op::Succ || e.op() == Op::Prime) return numeral_values(e.base(), out);
  for (int i = 0; i < e.arity(); ++i) numeral_values(e.child(i), out);
}

}  // namespace

// k̄ sits in e either as a whole numeral or as the bottom of S^j(k̄).
// k_ψ >= 2·γ′(S^j x) > 2^(2^j), and k <= the numeral's value m, so only
// j < log2(bits(m)) + 1 has to be tried.
std::optional<std::pair<Expr, Code>> diagonal_source(const Expr& e) {
  if (!is_sentence(e)) return std::nullopt;
  std::set<Nat> values;
  numeral_values(e, values);
  std::set<Nat> candidates;
  for (const Nat& m : values) {
    std::size_t reach = bit_length(Nat(static_cast<unsigned long>(bit_length(m)))) + 1;
    for (std::size_t j = 0; j <= reach && m >= j; ++j) {
      Nat k = m - j;
      if (k >= 2 && mpz_even_p(k.get_mpz_t())) candidates.insert(k);
    }
  }
  for (const Nat& k : candidates) {
    std::optional<Expr> psi;
    try {
      psi = compact_decode(k / 2);
    } catch (const CodeTooLarge&) {
      continue;
    }
    if (!psi || !is_formula(*psi)) continue;
    auto fv = free_variables(*psi);
    if (fv.size() != 1) continue;
    if (substitute_numeral(*psi, fv[0], k) == e) return std::make_pair(*psi, k);
  }
  return std::nullopt;
}

namespace {

Code diag_encode(const Expr& e) {
  if (auto d = diagonal_source(e)) return d->second;
  return 2 * compact_encode(e) + 1;
}

std::optional<Expr> diag_decode(const Code& c) {
  if (c < 2) return std::nullopt;
  if (mpz_odd_p(c.get_mpz_t())) {
    auto e = compact_decode((c - 1) / 2);
    if (!e || diagonal_source(*e)) return std::nullopt;
    return e;
  }
  auto psi = compact_decode(c / 2);
  if (!psi || !is_formula(*psi)) return std::nullopt;
  auto fv = free_variables(*psi);
  if (fv.size() != 1) return std::nullopt;
  Expr e = substitute_numeral(*psi, fv[0], c);
  auto d = diagonal_source(e);
  if (!d || d->second != c) return std::nullopt;
  return e;
}

}  // namespace

Numbering diag_numbering() {
  Numbering::Parts p;
  p.name = "diag";
  p.encode = diag_encode;
  p.decode = diag_decode;
  fill_trackers_by_decoding(p);
  p.term_over_diagonal = [](const Expr& y) { return y; };
  return Numbering(std::move(p));
}

}  // namespace goedel
