#pragma once

#include <set>
#include <string>
#include <vector>

#include "goedel/expr.hpp"

namespace goedel {

struct CorpusEntry {
  Expr expr;
  std::vector<std::string> tags;
  std::size_t line = 0;
  bool has_tag(const std::string& t) const;
};

struct Corpus {
  std::string source;
  std::vector<CorpusEntry> entries;

  std::vector<Expr> exprs() const;
  std::vector<Expr> tagged(const std::string& tag) const;
  std::set<Expr> declared_independent() const;
};

// independent, diag-item, refutable-demo, provable-demo, open, term, junk
const std::set<std::string>& corpus_tags();

// One expression per line, optional `# tag,tag` suffix. Blank lines and
// lines starting with `#` are skipped. Throws CorpusParseError.
Corpus parse_corpus(const std::string& text, std::string source = "<string>");
// Throws IoError or CorpusParseError.
Corpus load_corpus(const std::string& path);

}  // namespace goedel
