#include "goedel/enumeration.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

#include "goedel/errors.hpp"

namespace goedel {

namespace {

struct Entry {
  std::string text;
  Expr expr;
};

std::string pow10_str(std::size_t d) { return "1" + std::string(d, '0'); }

// Numbers written with exactly d digits (d = 1 includes 0).
std::pair<Nat, Nat> digit_range(std::size_t d) {
  Nat lo = d == 1 ? Nat(0) : Nat(pow10_str(d - 1));
  Nat hi = Nat(pow10_str(d));
  return {lo, hi};
}

struct Binary {
  Op op;
  std::size_t overhead;
};
constexpr Binary kBinary[] = {{Op::Add, 5}, {Op::Mul, 5}, {Op::Eq, 5}, {Op::And, 7}, {Op::Forall, 10}};

class Generator {
 public:
  // Number of expressions of each length, saturating.
  std::uint64_t count(std::size_t len) {
    while (counts_.size() <= len) counts_.push_back(compute_count(counts_.size()));
    return counts_[len];
  }

  const std::vector<Entry>& of_length(std::size_t len) {
    while (lists_.size() <= len) lists_.push_back(generate(lists_.size()));
    return lists_[len];
  }

 private:
  static std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    return a > UINT64_MAX - b ? UINT64_MAX : a + b;
  }
  static std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    return a > UINT64_MAX / b ? UINT64_MAX : a * b;
  }
  static std::uint64_t span_count(const std::pair<Nat, Nat>& r) {
    Nat n = r.second - r.first;
    return n.fits_ulong_p() ? n.get_ui() : UINT64_MAX;
  }

  std::uint64_t compute_count(std::size_t len) {
    if (len == 0) return 0;
    if (len == 1) return 2;
    std::uint64_t c = 0;
    if (len >= 5) c = sat_add(c, span_count(digit_range(len - 4)));  // (v n)
    if (len >= 8) {
      auto r = digit_range(len - 6);
      if (len == 8) r.first = 33;
      c = sat_add(c, span_count(r));  // (num n)
    }
    if (len >= 5) {
      std::size_t inner = len - 4;
      // S over a numeral of value >= 32 prints as (num n) instead
      std::uint64_t s = count(inner);
      if (inner == 1 + 4 * 32) s -= 1;
      if (inner >= 8) {
        auto r = digit_range(inner - 6);
        if (inner == 8) r.first = 33;
        s -= std::min(s, span_count(r));
      }
      c = sat_add(c, s);
      std::uint64_t p = count(inner);
      if (inner >= 5) p -= span_count(digit_range(inner - 4));
      c = sat_add(c, p);
    }
    if (len >= 7) c = sat_add(c, count(len - 6));
    for (const auto& b : kBinary) {
      if (len < b.overhead + 2) continue;
      std::size_t rest = len - b.overhead;
      for (std::size_t a = 1; a < rest; ++a) c = sat_add(c, sat_mul(count(a), count(rest - a)));
    }
    return c;
  }

  std::vector<Entry> generate(std::size_t len) {
    std::vector<Entry> out;
    if (len == 0) return out;
    if (len == 1) return {{"0", Expr::zero()}, {"1", Expr::one()}};
    auto add = [&](const Expr& e) { out.push_back({to_string(e), e}); };
    if (len >= 5) {
      auto [lo, hi] = digit_range(len - 4);
      for (Nat n = lo; n < hi; ++n) add(Expr::variable(n.get_ui()));
    }
    if (len >= 8) {
      auto [lo, hi] = digit_range(len - 6);
      if (len == 8) lo = 33;
      for (Nat n = lo; n < hi; ++n) add(Expr::numeral(n));
    }
    if (len >= 5) {
      for (const auto& x : of_length(len - 4)) {
        auto v = x.expr.numeral_value();
        if (!(v && *v >= 32)) add(Expr::succ(x.expr));
        if (!x.expr.is_variable()) add(Expr::prime(x.expr));
      }
    }
    if (len >= 7)
      for (const auto& x : of_length(len - 6)) add(Expr::neg(x.expr));
    for (const auto& b : kBinary) {
      if (len < b.overhead + 2) continue;
      std::size_t rest = len - b.overhead;
      for (std::size_t a = 1; a < rest; ++a)
        for (const auto& x : of_length(a))
          for (const auto& y : of_length(rest - a)) add(Expr::make(b.op, std::vector<Expr>{x.expr, y.expr}));
    }
    std::sort(out.begin(), out.end(), [](const Entry& a, const Entry& b) { return a.text < b.text; });
    return out;
  }

  std::vector<std::uint64_t> counts_;
  std::vector<std::vector<Entry>> lists_;
};

class Canonical : public ExprOrder {
 public:
  Canonical(std::vector<Expr> prefix, std::uint64_t budget) : budget_(budget) {
    for (auto& e : prefix)
      if (index_.emplace(e, prefix_.size()).second) prefix_.push_back(e);
    before_.push_back(0);
  }

  Expr at(std::uint64_t i) const override {
    if (i < prefix_.size()) return prefix_[i];
    std::uint64_t r = i - prefix_.size();
    std::lock_guard lock(mu_);
    for (std::size_t len = 1;; ++len) {
      const auto& list = tail(len);
      if (r < list.size()) return list[r].expr;
      r -= list.size();
    }
  }

  std::uint64_t index_of(const Expr& e) const override {
    if (auto it = index_.find(e); it != index_.end()) return it->second;
    std::string s = to_string(e);
    std::lock_guard lock(mu_);
    const auto& list = tail(s.size());
    auto pos = std::lower_bound(list.begin(), list.end(), s,
                                [](const Entry& a, const std::string& k) { return a.text < k; });
    return prefix_.size() + before_[s.size()] + static_cast<std::uint64_t>(pos - list.begin());
  }

 private:
  // Expressions of this length outside the prefix; fills every shorter
  // length first so before_ stays cumulative.
  const std::vector<Entry>& tail(std::size_t len) const {
    while (tails_.size() <= len) {
      std::size_t l = tails_.size();
      std::uint64_t c = gen_.count(l);
      if (c > budget_ || materialized_ + c > budget_)
        throw OracleIncomplete("enumeration budget exhausted at length " + std::to_string(l));
      materialized_ += c;
      std::vector<Entry> keep;
      for (const auto& x : gen_.of_length(l))
        if (!index_.count(x.expr)) keep.push_back(x);
      before_.push_back(before_.back() + keep.size());
      tails_.push_back(std::move(keep));
    }
    return tails_[len];
  }

  std::vector<Expr> prefix_;
  std::unordered_map<Expr, std::uint64_t, ExprHash> index_;
  std::uint64_t budget_;
  mutable std::mutex mu_;
  mutable Generator gen_;
  mutable std::uint64_t materialized_ = 0;
  mutable std::vector<std::vector<Entry>> tails_;
  mutable std::vector<std::uint64_t> before_;  // before_[l]: tail items shorter than l
};

}  // namespace

std::shared_ptr<ExprOrder> canonical_order(std::vector<Expr> prefix, std::uint64_t budget) {
  return std::make_shared<Canonical>(std::move(prefix), budget);
}

std::vector<Expr> expressions_of_length(std::size_t length) {
  Generator g;
  std::vector<Expr> out;
  for (const auto& x : g.of_length(length)) out.push_back(x.expr);
  return out;
}

}  // namespace goedel
