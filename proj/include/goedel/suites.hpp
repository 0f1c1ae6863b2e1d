#pragma once

#include <string>
#include <vector>

#include "goedel/corpus.hpp"
#include "goedel/registry.hpp"
#include "goedel/report.hpp"

namespace goedel {

// Everything the suites will encode under a split numbering: the corpus,
// its subexpressions and the sentences the Löb and consistency-form checks build
// from it. Split numberings list these first so that no index lookup has
// to enumerate long expressions.
std::vector<Expr> suite_order_prefix(const std::vector<Expr>& corpus);

// Oracle with the corpus' `independent` entries declared, and a registry
// over the prefix above.
Registry suite_registry(const Corpus& corpus, const Budget& budget = {});

// Numberings the shipped checks run over.
const std::vector<std::string>& simulation_numberings();
const std::vector<std::string>& equivalence_numberings();

Report suite_simulation(const Corpus& corpus, const Registry& reg);
// All ordered pairs of equivalence_numberings(), or just (a, b) when given.
Report suite_equivalence(const Corpus& corpus, const Registry& reg, const std::string& a = "",
                         const std::string& b = "");
// Shipped (numbering, predicate) pairs, or just the one given.
Report suite_loeb(const Corpus& corpus, const Registry& reg, const std::string& numbering = "",
                  const std::string& predicate = "");
Report suite_deviant(const Corpus& corpus, const Registry& reg);
Report suite_diag(const Corpus& corpus, const Registry& reg);
Report suite_all(const Corpus& corpus, const Registry& reg);

}  // namespace goedel
