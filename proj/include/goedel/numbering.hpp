#pragma once

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "goedel/expr.hpp"

namespace goedel {

// Numeric simulation of one constructor: codes of the arguments in, code
// of the compound out.
using Tracker = std::function<Code(std::span<const Code>)>;

class Numbering {
 public:
  struct Parts {
    std::string name;
    std::function<Code(const Expr&)> encode;
    // nullopt outside the image
    std::function<std::optional<Expr>(const Code&)> decode;
    // Closed-form trackers; empty entries are constructors with no
    // recursive simulation.
    std::array<Tracker, kOpCount> trackers;
    // decode, apply, encode; only for constructors missing above
    std::array<Tracker, kOpCount> oracle_trackers;
    // code(e) mod m without building the code, when the numbering can.
    std::function<std::optional<Nat>(const Expr&, const Nat&)> residue;
    // τ(y) with value(τ(c̄)) = this(D⁻¹(c)), if one exists.
    std::function<Expr(const Expr&)> term_over_diagonal;
  };

  explicit Numbering(Parts parts);

  const std::string& name() const { return p_->name; }
  Code encode(const Expr& e) const { return p_->encode(e); }
  // Throws NotInImage.
  Expr decode(const Code& c) const;
  std::optional<Expr> try_decode(const Code& c) const { return p_->decode(c); }
  bool in_image(const Code& c) const { return p_->decode(c).has_value(); }

  const Tracker* tracker(Op op) const;
  const Tracker* oracle_tracker(Op op) const;
  std::vector<Op> closed_form_ops() const;
  std::vector<Op> missing_trackers() const;

  std::optional<Nat> code_residue(const Expr& e, const Nat& modulus) const;
  bool has_term_over_diagonal() const { return static_cast<bool>(p_->term_over_diagonal); }
  Expr term_over_diagonal(const Expr& y) const { return p_->term_over_diagonal(y); }

 private:
  std::shared_ptr<const Parts> p_;
};

// Tracker that decodes its arguments, applies op and re-encodes.
Tracker tracker_by_decoding(std::function<Code(const Expr&)> encode,
                            std::function<std::optional<Expr>(const Code&)> decode, Op op);
void fill_trackers_by_decoding(Numbering::Parts& p);

// c ↦ b(a⁻¹(c)). Throws NotInImage for codes outside a's image.
std::function<Code(const Code&)> translate(const Numbering& a, const Numbering& b);

// The b-image of a set of a-codes.
std::function<bool(const Code&)> transfer_set(const Numbering& a, const Numbering& b,
                                              std::function<bool(const Code&)> p);

struct SimulationReport {
  std::string numbering;
  std::size_t corpus_size = 0;
  std::size_t encoded = 0;
  std::size_t injectivity_failures = 0;
  std::size_t round_trip_failures = 0;
  std::size_t in_image_failures = 0;
  std::size_t tracker_checks = 0;
  std::size_t tracker_failures = 0;
  std::size_t oracle_tracker_checks = 0;
  std::size_t oracle_tracker_failures = 0;
  std::size_t oracle_incomplete = 0;
  std::vector<Op> missing_trackers;
  std::vector<std::string> failures;  // first few, for the report
  bool passed() const {
    return injectivity_failures + round_trip_failures + in_image_failures + tracker_failures +
               oracle_tracker_failures == 0;
  }
};

// Injectivity, decode∘encode, image membership and the tracker diagram
// α(σ(e…)) = σ_G(α(e)…) on every compound subexpression of the corpus.
// `image_probe` small codes are also checked for in_image ⇔ decodable.
SimulationReport verify_simulation(const Numbering& n, std::span<const Expr> corpus,
                                   unsigned image_probe = 256);

struct TranslationReport {
  std::string from, to;
  std::size_t corpus_size = 0;
  std::size_t round_trip_failures = 0;
  std::size_t oracle_incomplete = 0;
  std::vector<std::string> failures;
  bool passed() const { return round_trip_failures == 0; }
};

// For every e: a→b sends a(e) to b(e), and b→a brings it back.
TranslationReport verify_equivalence(const Numbering& a, const Numbering& b,
                                     std::span<const Expr> corpus);

struct MonotoneViolation {
  Expr sub;
  Expr super;
  Code sub_code;
  Code super_code;
};

struct MonotoneReport {
  std::string numbering;
  std::size_t pairs_checked = 0;
  std::size_t oracle_incomplete = 0;
  std::vector<MonotoneViolation> violations;
};

// Forward direction only: s a proper subexpression of t implies n(s) < n(t).
MonotoneReport check_monotone(const Numbering& n, std::span<const Expr> corpus);

// (c1, c2) ↦ decode(c1) is a proper subexpression of decode(c2).
std::function<bool(const Code&, const Code&)> tracking_relation(const Numbering& n);

}  // namespace goedel
