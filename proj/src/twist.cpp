#include "goedel/twist.hpp"

#include <memory>

#include "goedel/errors.hpp"

namespace goedel {

MonotoneFn power_of_two() {
  MonotoneFn h;
  h.name = "2^n";
  h.apply = [](const Nat& n) {
    if (n > kMaxCodeBits) throw CodeTooLarge("2^n with n beyond the code limit");
    Nat r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, n.get_ui());
    return r;
  };
  h.inverse = [](const Nat& m) -> std::optional<Nat> {
    if (m < 1 || mpz_popcount(m.get_mpz_t()) != 1) return std::nullopt;
    return Nat(static_cast<unsigned long>(bit_length(m) - 1));
  };
  return h;
}

MonotoneFn with_search_inverse(std::string name, std::function<Nat(const Nat&)> h) {
  MonotoneFn out;
  out.name = std::move(name);
  out.apply = h;
  out.inverse = [h](const Nat& m) -> std::optional<Nat> {
    Nat hi = 1;
    while (h(hi) < m) hi *= 2;
    Nat lo = 0;
    while (lo < hi) {
      Nat mid = (lo + hi) / 2;
      if (h(mid) < m) lo = mid + 1;
      else hi = mid;
    }
    if (h(lo) == m) return lo;
    return std::nullopt;
  };
  return out;
}

namespace {

const Expr& zero_eq_zero() {
  static const Expr e = Expr::eq(Expr::zero(), Expr::zero());
  return e;
}

}  // namespace

bool is_trigger(const Expr& e) {
  if (e.op() != Op::Not) return false;
  Expr c = e.child(0);
  if (c.op() != Op::And) return false;
  Expr r = c.child(1);
  return r.op() == Op::Not && r.child(0) == zero_eq_zero();
}

Expr trigger_of(const Expr& chi) {
  return Expr::neg(Expr::conj(chi, Expr::neg(zero_eq_zero())));
}

Numbering twist_numbering(const Numbering& base, MonotoneFn h, std::string name) {
  for (unsigned long i = 0; i < 64; ++i)
    if (!(h.apply(i) < h.apply(i + 1))) throw NotMonotoneH(h.name + " is not increasing at " + std::to_string(i));
  if (name.empty()) name = "twist-" + base.name();
  auto hp = std::make_shared<MonotoneFn>(std::move(h));

  Numbering::Parts p;
  p.name = name;
  auto encode = std::make_shared<std::function<Code(const Expr&)>>();
  auto decode = std::make_shared<std::function<std::optional<Expr>(const Code&)>>();
  std::weak_ptr<std::function<Code(const Expr&)>> enc_self = encode;
  std::weak_ptr<std::function<std::optional<Expr>(const Code&)>> dec_self = decode;

  *encode = [base, hp, enc_self](const Expr& e) -> Code {
    if (is_trigger(e)) return 2 * hp->apply((*enc_self.lock())(e.child(0).child(0)));
    return 2 * base.encode(e) + 1;
  };
  *decode = [base, hp, dec_self](const Code& c) -> std::optional<Expr> {
    if (c < 1) return std::nullopt;
    if (mpz_odd_p(c.get_mpz_t())) {
      auto e = base.try_decode((c - 1) / 2);
      if (!e || is_trigger(*e)) return std::nullopt;
      return e;
    }
    auto n = hp->inverse(c / 2);
    if (!n) return std::nullopt;
    auto chi = (*dec_self.lock())(*n);
    if (!chi) return std::nullopt;
    return trigger_of(*chi);
  };
  // The lambdas reach each other through weak pointers; the Parts copies
  // below hold the strong references.
  p.encode = [encode](const Expr& e) { return (*encode)(e); };
  p.decode = [decode](const Code& c) { return (*decode)(c); };
  fill_trackers_by_decoding(p);
  if (base.has_term_over_diagonal())
    p.term_over_diagonal = [base](const Expr& y) {
      Expr t = base.term_over_diagonal(y);
      return Expr::succ(Expr::add(t, t));
    };
  return Numbering(std::move(p));
}

}  // namespace goedel
