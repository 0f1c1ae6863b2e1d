#pragma once

#include <exception>
#include <optional>
#include <span>
#include <type_traits>
#include <vector>

#include "goedel/expr.hpp"
#include "goedel/numbering.hpp"
#include "goedel/rewriter.hpp"
#include "goedel/truth.hpp"

namespace goedel {

// Serial is the reference; Parallel must agree with it item for item.
enum class Exec { Serial, Parallel };

// f applied to every item. Results keep input order. If any call throws,
// the exception of the lowest index is rethrown after the sweep.
template <class T, class F>
auto sweep(std::span<const T> items, F&& f, Exec exec = Exec::Parallel)
    -> std::vector<std::invoke_result_t<F&, const T&>> {
  using R = std::invoke_result_t<F&, const T&>;
  const long n = static_cast<long>(items.size());
  std::vector<std::optional<R>> slots(items.size());
  std::vector<std::exception_ptr> errors(items.size());
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (long i = 0; i < n; ++i) {
      try {
        slots[i].emplace(f(items[i]));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  } else {
    for (long i = 0; i < n; ++i) {
      try {
        slots[i].emplace(f(items[i]));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<R> out;
  out.reserve(items.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

// Corpus-level kernels used by the verification suites and the benchmark.
std::vector<Verdict> classify_all(const Oracle& oracle, std::span<const Expr> corpus, Exec exec);
std::vector<Expr> normalize_all(std::span<const Expr> terms, Exec exec);
// nullopt where the code is too large, the expression is outside the domain
// or the code depends on a verdict the oracle cannot reach.
std::vector<std::optional<Code>> encode_all(const Numbering& n, std::span<const Expr> corpus,
                                            Exec exec);

int worker_count();

}  // namespace goedel
