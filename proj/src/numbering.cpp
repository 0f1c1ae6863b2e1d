#include "goedel/numbering.hpp"

#include <map>
#include <sstream>

#include "goedel/errors.hpp"
#include "goedel/parallel.hpp"
#include "goedel/syntax.hpp"

namespace goedel {

Numbering::Numbering(Parts parts) : p_(std::make_shared<const Parts>(std::move(parts))) {}

Expr Numbering::decode(const Code& c) const {
  auto e = p_->decode(c);
  if (!e) throw NotInImage(c.get_str() + " is not a " + p_->name + " code");
  return *e;
}

const Tracker* Numbering::tracker(Op op) const {
  const auto& t = p_->trackers[tag(op)];
  return t ? &t : nullptr;
}

const Tracker* Numbering::oracle_tracker(Op op) const {
  const auto& t = p_->oracle_trackers[tag(op)];
  return t ? &t : nullptr;
}

std::vector<Op> Numbering::closed_form_ops() const {
  std::vector<Op> out;
  for (int i = 0; i < kOpCount; ++i)
    if (p_->trackers[i]) out.push_back(op_from_tag(i));
  return out;
}

std::vector<Op> Numbering::missing_trackers() const {
  std::vector<Op> out;
  for (int i = 0; i < kOpCount; ++i)
    if (!p_->trackers[i]) out.push_back(op_from_tag(i));
  return out;
}

std::optional<Nat> Numbering::code_residue(const Expr& e, const Nat& modulus) const {
  if (!p_->residue) return std::nullopt;
  return p_->residue(e, modulus);
}

Tracker tracker_by_decoding(std::function<Code(const Expr&)> encode,
                            std::function<std::optional<Expr>(const Code&)> decode, Op op) {
  return [encode = std::move(encode), decode = std::move(decode), op](std::span<const Code> args) {
    std::vector<Expr> kids;
    for (const auto& c : args) {
      auto e = decode(c);
      if (!e) throw NotInImage(c.get_str() + " is not in the image");
      kids.push_back(*e);
    }
    return encode(Expr::make(op, kids));
  };
}

void fill_trackers_by_decoding(Numbering::Parts& p) {
  for (int i = 0; i < kOpCount; ++i)
    if (!p.trackers[i]) p.trackers[i] = tracker_by_decoding(p.encode, p.decode, op_from_tag(i));
}

std::function<Code(const Code&)> translate(const Numbering& a, const Numbering& b) {
  return [a, b](const Code& c) { return b.encode(a.decode(c)); };
}

std::function<bool(const Code&)> transfer_set(const Numbering& a, const Numbering& b,
                                              std::function<bool(const Code&)> p) {
  return [a, b, p = std::move(p)](const Code& c) {
    auto e = b.try_decode(c);
    return e && p(a.encode(*e));
  };
}

namespace {

struct ItemResult {
  std::optional<Code> code;
  SimulationReport part;
};

void note(SimulationReport& r, const std::string& msg) {
  if (r.failures.size() < 8) r.failures.push_back(msg);
}

bool is_incomplete(const std::exception_ptr& p) {
  try {
    std::rethrow_exception(p);
  } catch (const CodeTooLarge&) {
    return true;
  } catch (const OracleIncomplete&) {
    return true;
  } catch (const UnsupportedShape&) {
    return true;
  } catch (...) {
    return false;
  }
}

ItemResult check_item(const Numbering& n, const Expr& e) {
  ItemResult out;
  auto& r = out.part;
  try {
    out.code = n.encode(e);
  } catch (...) {
    if (!is_incomplete(std::current_exception())) throw;
    ++r.oracle_incomplete;
    return out;
  }
  ++r.encoded;
  try {
    auto back = n.try_decode(*out.code);
    if (!back) {
      ++r.in_image_failures;
      note(r, "not in image: " + to_string(e));
    } else if (!(*back == e)) {
      ++r.round_trip_failures;
      note(r, "round trip: " + to_string(e) + " -> " + to_string(*back));
    }
  } catch (...) {
    if (!is_incomplete(std::current_exception())) throw;
    ++r.oracle_incomplete;
  }
  for (const Expr& s : subexpressions(e, 4)) {
    if (s.arity() == 0) continue;
    const Tracker* t = n.tracker(s.op());
    bool oracle = false;
    if (!t) {
      t = n.oracle_tracker(s.op());
      oracle = true;
    }
    if (!t) continue;
    try {
      std::vector<Code> args;
      for (int i = 0; i < s.arity(); ++i) args.push_back(n.encode(s.child(i)));
      Code want = n.encode(s);
      Code got = (*t)(args);
      ++(oracle ? r.oracle_tracker_checks : r.tracker_checks);
      if (got != want) {
        ++(oracle ? r.oracle_tracker_failures : r.tracker_failures);
        note(r, std::string("tracker ") + std::string(keyword(s.op())) + " at " + to_string(s));
      }
    } catch (...) {
      if (!is_incomplete(std::current_exception())) throw;
      ++r.oracle_incomplete;
    }
  }
  return out;
}

}  // namespace

SimulationReport verify_simulation(const Numbering& n, std::span<const Expr> corpus,
                                   unsigned image_probe) {
  SimulationReport rep;
  rep.numbering = n.name();
  rep.corpus_size = corpus.size();
  rep.missing_trackers = n.missing_trackers();
  auto items = sweep(corpus, [&](const Expr& e) { return check_item(n, e); });
  std::map<Code, Expr> seen;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const auto& p = items[i].part;
    rep.encoded += p.encoded;
    rep.round_trip_failures += p.round_trip_failures;
    rep.in_image_failures += p.in_image_failures;
    rep.tracker_checks += p.tracker_checks;
    rep.tracker_failures += p.tracker_failures;
    rep.oracle_tracker_checks += p.oracle_tracker_checks;
    rep.oracle_tracker_failures += p.oracle_tracker_failures;
    rep.oracle_incomplete += p.oracle_incomplete;
    for (const auto& f : p.failures) note(rep, f);
    if (!items[i].code) continue;
    auto [it, fresh] = seen.emplace(*items[i].code, corpus[i]);
    if (!fresh && !(it->second == corpus[i])) {
      ++rep.injectivity_failures;
      note(rep, "collision: " + to_string(it->second) + " / " + to_string(corpus[i]));
    }
  }
  for (unsigned c = 0; c < image_probe; ++c) {
    try {
      auto d = n.try_decode(c);
      if (d && n.encode(*d) != c) {
        ++rep.in_image_failures;
        note(rep, "code " + std::to_string(c) + " decodes but does not re-encode");
      }
    } catch (...) {
      if (!is_incomplete(std::current_exception())) throw;
      ++rep.oracle_incomplete;
    }
  }
  return rep;
}

TranslationReport verify_equivalence(const Numbering& a, const Numbering& b,
                                     std::span<const Expr> corpus) {
  TranslationReport rep;
  rep.from = a.name();
  rep.to = b.name();
  rep.corpus_size = corpus.size();
  auto ab = translate(a, b);
  auto ba = translate(b, a);
  // 0 ok, 1 failure, 2 incomplete
  auto status = sweep(corpus, [&](const Expr& e) -> int {
    try {
      Code ca = a.encode(e);
      Code cb = b.encode(e);
      Code there = ab(ca);
      if (there != cb) return 1;
      return ba(there) == ca ? 0 : 1;
    } catch (const CodeTooLarge&) {
      return 2;
    } catch (const OracleIncomplete&) {
      return 2;
    }
  });
  for (std::size_t i = 0; i < status.size(); ++i) {
    if (status[i] == 1) {
      ++rep.round_trip_failures;
      if (rep.failures.size() < 8) rep.failures.push_back(to_string(corpus[i]));
    } else if (status[i] == 2) {
      ++rep.oracle_incomplete;
    }
  }
  return rep;
}

MonotoneReport check_monotone(const Numbering& n, std::span<const Expr> corpus) {
  MonotoneReport rep;
  rep.numbering = n.name();
  struct Part {
    std::size_t checked = 0, incomplete = 0;
    std::vector<MonotoneViolation> bad;
  };
  auto parts = sweep(corpus, [&](const Expr& t) {
    Part p;
    Code ct;
    try {
      ct = n.encode(t);
    } catch (const CodeTooLarge&) {
      ++p.incomplete;
      return p;
    } catch (const OracleIncomplete&) {
      ++p.incomplete;
      return p;
    }
    for (const Expr& s : subexpressions(t, 8)) {
      if (s == t) continue;
      try {
        Code cs = n.encode(s);
        ++p.checked;
        if (!(cs < ct)) p.bad.push_back({s, t, cs, ct});
      } catch (const CodeTooLarge&) {
        ++p.incomplete;
      } catch (const OracleIncomplete&) {
        ++p.incomplete;
      }
    }
    return p;
  });
  for (auto& p : parts) {
    rep.pairs_checked += p.checked;
    rep.oracle_incomplete += p.incomplete;
    for (auto& v : p.bad) rep.violations.push_back(std::move(v));
  }
  return rep;
}

std::function<bool(const Code&, const Code&)> tracking_relation(const Numbering& n) {
  return [n](const Code& a, const Code& b) {
    auto s = n.try_decode(a);
    auto t = n.try_decode(b);
    return s && t && is_proper_subexpression(*s, *t);
  };
}

}  // namespace goedel
