#include "goedel/registry.hpp"

#include <regex>

#include "goedel/deviant.hpp"
#include "goedel/diag.hpp"
#include "goedel/enumeration.hpp"
#include "goedel/errors.hpp"
#include "goedel/split.hpp"
#include "goedel/standard.hpp"
#include "goedel/twist.hpp"

namespace goedel {

Registry::Registry(Oracle oracle, std::vector<Expr> order_prefix)
    : oracle_(std::move(oracle)), prefix_(std::move(order_prefix)) {}

const std::vector<std::string>& Registry::numbering_names() {
  static const std::vector<std::string> names = {
      "gamma",          "gamma-compact", "diag",      "twist",      "twist-diag",
      "split-provable", "split-true",    "delta-neg", "delta-star", "delta-forall"};
  return names;
}

const std::vector<std::string>& Registry::predicate_names() {
  static const std::vector<std::string> names = {"true", "false", "pr-neg", "pr-star",
                                                 "tr-forall", "pr", "mod-M-R"};
  return names;
}

Numbering Registry::numbering(const std::string& name) const {
  std::lock_guard lock(mu_);
  if (auto it = cache_.find(name); it != cache_.end()) return *it->second;
  auto build = [&]() -> Numbering {
    if (name == "gamma") return standard_gamma();
    if (name == "gamma-compact") return compact_gamma();
    if (name == "diag") return diag_numbering();
    if (name == "twist") return twist_numbering(standard_gamma());
    if (name == "twist-diag") return twist_numbering(diag_numbering());
    if (name == "split-provable") return split_provable(oracle_, canonical_order(prefix_));
    if (name == "split-true") return split_true(oracle_, canonical_order(prefix_));
    if (name == "delta-neg") return delta_neg(oracle_);
    if (name == "delta-star") return delta_star(oracle_);
    if (name == "delta-forall") return delta_forall(oracle_);
    throw UnknownName("unknown numbering '" + name + "'");
  };
  auto n = std::make_shared<Numbering>(build());
  cache_.emplace(name, n);
  return *n;
}

CodePredicate Registry::predicate(const std::string& name, const std::string& for_numbering) const {
  if (name == "true") return predicate_true();
  if (name == "false") return predicate_false();
  if (name == "pr-neg") return pr_neg_predicate();
  if (name == "pr-star") return pr_star_predicate();
  if (name == "tr-forall") return tr_forall_predicate();
  if (name == "pr") return construct_pr(numbering(for_numbering), oracle_);
  static const std::regex mod(R"(mod-([0-9]+)-is-([0-9]+)|mod-([0-9]+)-([0-9]+))");
  std::smatch m;
  if (std::regex_match(name, m, mod)) {
    Nat a(m[1].matched ? m[1].str() : m[3].str());
    Nat b(m[2].matched ? m[2].str() : m[4].str());
    if (a > 0 && b < a) return residue_predicate(a, b);
  }
  throw UnknownName("unknown predicate '" + name + "'");
}

}  // namespace goedel
