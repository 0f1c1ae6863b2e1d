#include "goedel/corpus.hpp"

#include <fstream>
#include <sstream>

#include "goedel/errors.hpp"

namespace goedel {

bool CorpusEntry::has_tag(const std::string& t) const {
  for (const auto& x : tags)
    if (x == t) return true;
  return false;
}

std::vector<Expr> Corpus::exprs() const {
  std::vector<Expr> out;
  for (const auto& e : entries) out.push_back(e.expr);
  return out;
}

std::vector<Expr> Corpus::tagged(const std::string& tag) const {
  std::vector<Expr> out;
  for (const auto& e : entries)
    if (e.has_tag(tag)) out.push_back(e.expr);
  return out;
}

std::set<Expr> Corpus::declared_independent() const {
  auto v = tagged("independent");
  return {v.begin(), v.end()};
}

const std::set<std::string>& corpus_tags() {
  static const std::set<std::string> tags = {"independent", "diag-item", "refutable-demo",
                                             "provable-demo", "open", "term", "junk"};
  return tags;
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

Corpus parse_corpus(const std::string& text, std::string source) {
  Corpus c;
  c.source = std::move(source);
  std::istringstream in(text);
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = trim(raw);
    if (s.empty() || s[0] == '#') continue;
    CorpusEntry entry;
    entry.line = line;
    auto hash = s.find('#');
    if (hash != std::string::npos) {
      std::stringstream tags(s.substr(hash + 1));
      std::string t;
      while (std::getline(tags, t, ',')) {
        t = trim(t);
        if (t.empty()) continue;
        if (!corpus_tags().count(t)) throw CorpusParseError("unknown tag '" + t + "'", line);
        entry.tags.push_back(t);
      }
      s = trim(s.substr(0, hash));
    }
    try {
      entry.expr = parse(s);
    } catch (const SyntaxError& e) {
      throw CorpusParseError(e.what(), line);
    }
    c.entries.push_back(std::move(entry));
  }
  return c;
}

Corpus load_corpus(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_corpus(ss.str(), path);
}

}  // namespace goedel
