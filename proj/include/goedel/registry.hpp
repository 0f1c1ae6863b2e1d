#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "goedel/loeb.hpp"
#include "goedel/numbering.hpp"
#include "goedel/truth.hpp"

namespace goedel {

// Numberings and predicates by name. Instances are built once and shared,
// so split numberings keep one memo table per registry. The split order
// lists `order_prefix` first.
class Registry {
 public:
  explicit Registry(Oracle oracle = Oracle(), std::vector<Expr> order_prefix = {});

  // gamma, gamma-compact, diag, twist, twist-diag, split-provable, split-true,
  // delta-neg, delta-star, delta-forall. Throws UnknownName.
  Numbering numbering(const std::string& name) const;
  // true, false, pr-neg, pr-star, tr-forall, mod-M-R, and pr (construct_pr
  // of `for_numbering`). Throws UnknownName.
  CodePredicate predicate(const std::string& name, const std::string& for_numbering = "gamma") const;

  const Oracle& oracle() const { return oracle_; }
  static const std::vector<std::string>& numbering_names();
  static const std::vector<std::string>& predicate_names();

 private:
  Oracle oracle_;
  std::vector<Expr> prefix_;
  mutable std::mutex mu_;
  mutable std::map<std::string, std::shared_ptr<Numbering>> cache_;
};

}  // namespace goedel
