#include "goedel/parallel.hpp"

#include <omp.h>

#include "goedel/errors.hpp"

namespace goedel {

std::vector<Verdict> classify_all(const Oracle& oracle, std::span<const Expr> corpus, Exec exec) {
  return sweep(corpus, [&](const Expr& e) { return oracle.classify(e).verdict; }, exec);
}

std::vector<Expr> normalize_all(std::span<const Expr> terms, Exec exec) {
  return sweep(terms, [](const Expr& t) { return normal_form(t).term; }, exec);
}

std::vector<std::optional<Code>> encode_all(const Numbering& n, std::span<const Expr> corpus,
                                            Exec exec) {
  return sweep(
      corpus,
      [&](const Expr& e) -> std::optional<Code> {
        try {
          return n.encode(e);
        } catch (const CodeTooLarge&) {
          return std::nullopt;
        } catch (const UnsupportedShape&) {
          return std::nullopt;
        } catch (const OracleIncomplete&) {
          return std::nullopt;  // a deviant code needs a verdict the oracle cannot give
        }
      },
      exec);
}

int worker_count() { return omp_get_max_threads(); }

}  // namespace goedel
