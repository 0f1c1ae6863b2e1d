#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "goedel/corpus.hpp"
#include "goedel/errors.hpp"
#include "goedel/report.hpp"

using namespace goedel;

TEST(Corpus, LinesAndTags) {
  auto c = parse_corpus(
      "# a comment\n"
      "\n"
      "(= 0 0)\n"
      "(forall (v 0) (= (v 0) 0)) # refutable-demo\n"
      "(S 0) # term,junk\n");
  ASSERT_EQ(c.entries.size(), 3u);
  EXPECT_TRUE(c.entries[0].tags.empty());
  EXPECT_EQ(c.entries[0].line, 3u);
  EXPECT_TRUE(c.entries[1].has_tag("refutable-demo"));
  EXPECT_EQ(c.entries[2].tags, (std::vector<std::string>{"term", "junk"}));
  EXPECT_EQ(c.tagged("term").size(), 1u);
}

TEST(Corpus, ErrorsNameTheLine) {
  try {
    parse_corpus("(= 0 0)\n(= 0\n");
    FAIL();
  } catch (const CorpusParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(parse_corpus("(= 0 0) # nonsense-tag\n"), CorpusParseError);
  EXPECT_TRUE(parse_corpus("").entries.empty());
  EXPECT_THROW(load_corpus("/nonexistent/base.txt"), IoError);
}

TEST(Corpus, DeclaredIndependent) {
  auto c = parse_corpus("(= 0 0)\n(= 1 1) # independent\n");
  EXPECT_EQ(c.declared_independent(), (std::set<Expr>{parse("(= 1 1)")}));
}

TEST(Report, SummaryTalliesRecords) {
  Report r;
  r.suite = "t";
  r.add("b", Status::Pass);
  r.add("a", Status::Fail, {{"why", 1}});
  r.add("c", Status::Skipped);
  r.add("d", Status::OracleIncomplete);
  r.add("e", Status::Pass);
  auto s = r.summary();
  EXPECT_EQ(s.pass, 2u);
  EXPECT_EQ(s.fail, 1u);
  EXPECT_EQ(s.skipped, 1u);
  EXPECT_EQ(s.oracle_incomplete, 1u);
  EXPECT_FALSE(r.ok());
  auto j = to_json(r);
  EXPECT_EQ(j["checks"][0]["id"], "a");
  EXPECT_EQ(j["checks"][0]["status"], "fail");
  EXPECT_EQ(j["summary"]["oracle_incomplete"], 1);
  EXPECT_FALSE(j.contains("timestamp"));
}

TEST(Report, RenderIsByteStable) {
  Report a, b;
  a.suite = b.suite = "t";
  a.add("x", Status::Pass, {{"z", 1}, {"a", 2}});
  a.add("w", Status::Skipped);
  b.add("w", Status::Skipped);
  b.add("x", Status::Pass, {{"a", 2}, {"z", 1}});
  EXPECT_EQ(render(a), render(b));
  auto path = std::filesystem::temp_directory_path() / "goedel_report_test.json";
  emit_report(a, path.string());
  std::ifstream in(path);
  std::string text((std::istreambuf_iterator<char>(in)), {});
  EXPECT_EQ(text, render(a));
  std::filesystem::remove(path);
  EXPECT_THROW(emit_report(a, "/nonexistent/dir/r.json"), IoError);
}

TEST(Report, MergeKeepsRecords) {
  Report a, b;
  a.add("x", Status::Pass);
  b.add("y", Status::Fail);
  a.merge(b);
  EXPECT_EQ(a.checks.size(), 2u);
  EXPECT_EQ(a.summary().fail, 1u);
}
