#include "goedel/split.hpp"

#include <algorithm>
#include <mutex>

#include "goedel/errors.hpp"
#include "goedel/syntax.hpp"

namespace goedel {

namespace {

// Membership of order positions 0..n-1, grown on demand.
class Table {
 public:
  Table(std::function<bool(const Expr&)> member, std::shared_ptr<ExprOrder> order)
      : member_(std::move(member)), order_(std::move(order)) {}

  Code encode(const Expr& e) {
    std::uint64_t i = order_->index_of(e);
    std::lock_guard lock(mu_);
    grow_to(i + 1);
    bool in = flags_[i];
    const auto& pos = positions_[in ? 0 : 1];
    auto k = static_cast<std::uint64_t>(std::lower_bound(pos.begin(), pos.end(), i) - pos.begin());
    return 2 * Code(static_cast<unsigned long>(k)) + (in ? 0 : 1);
  }

  std::optional<Expr> decode(const Code& c) {
    int cls = mpz_odd_p(c.get_mpz_t()) ? 1 : 0;
    Nat k = c / 2;
    if (!k.fits_ulong_p()) throw OracleIncomplete("split code beyond the enumerated range");
    std::uint64_t want = k.get_ui();
    std::uint64_t i;
    {
      std::lock_guard lock(mu_);
      while (positions_[cls].size() <= want) grow_to(flags_.size() + 1);
      i = positions_[cls][want];
    }
    return order_->at(i);
  }

 private:
  void grow_to(std::uint64_t n) {
    while (flags_.size() < n) {
      std::uint64_t i = flags_.size();
      bool in = member_(order_->at(i));
      flags_.push_back(in);
      positions_[in ? 0 : 1].push_back(i);
    }
  }

  std::function<bool(const Expr&)> member_;
  std::shared_ptr<ExprOrder> order_;
  std::mutex mu_;
  std::vector<bool> flags_;
  std::vector<std::uint64_t> positions_[2];
};

}  // namespace

Numbering split_numbering(std::string name, std::function<bool(const Expr&)> member,
                          std::shared_ptr<ExprOrder> order) {
  auto table = std::make_shared<Table>(member, std::move(order));
  Numbering::Parts p;
  p.name = std::move(name);
  p.encode = [table](const Expr& e) { return table->encode(e); };
  p.decode = [table](const Code& c) { return table->decode(c); };
  fill_trackers_by_decoding(p);
  p.residue = [member](const Expr& e, const Nat& m) -> std::optional<Nat> {
    if (m != 2 && m != 1) return std::nullopt;
    if (m == 1) return Nat(0);
    return Nat(member(e) ? 0 : 1);
  };
  return Numbering(std::move(p));
}

Numbering split_provable(const Oracle& oracle, std::shared_ptr<ExprOrder> order) {
  return split_numbering(
      "split-provable",
      [oracle](const Expr& e) {
        Verdict v = oracle.classify(e).verdict;
        if (v == Verdict::Unknown) throw OracleIncomplete("cannot classify " + to_string(e));
        return v == Verdict::Provable;
      },
      std::move(order));
}

Numbering split_true(const Oracle& oracle, std::shared_ptr<ExprOrder> order) {
  return split_numbering(
      "split-true",
      [oracle](const Expr& e) {
        if (!is_sentence(e)) return false;
        Truth t = oracle.truth(e);
        if (t == Truth::Unknown) throw OracleIncomplete("cannot decide " + to_string(e));
        return t == Truth::True;
      },
      std::move(order));
}

}  // namespace goedel
