#include <gtest/gtest.h>

#include <sstream>

#include "polyclique/harness.hpp"
#include "test_support.hpp"

namespace polyclique {
namespace {

using testing::desk_graph;
using testing::triangle;

TEST(VerifyGraphTest, Examples) {
  VerificationRecord tri = verify_graph(triangle(), 3);
  EXPECT_TRUE(tri.claimed);
  EXPECT_TRUE(tri.oracle);
  EXPECT_TRUE(tri.agree);

  VerificationRecord four = verify_graph(desk_graph(), 4);
  EXPECT_FALSE(four.claimed);
  EXPECT_TRUE(four.short_circuited);
  EXPECT_FALSE(four.oracle);
  EXPECT_TRUE(four.agree);

  VerificationRecord three = verify_graph(desk_graph(), 3);
  EXPECT_TRUE(three.claimed);
  EXPECT_TRUE(three.oracle);
  EXPECT_TRUE(three.agree);
}

TEST(VerifyGraphTest, LargeGraphsAreNotEmbedded) {
  EXPECT_TRUE(verify_graph(gen_gnp(10, 0.5, 1), 3).graph.has_value());
  EXPECT_FALSE(verify_graph(gen_gnp(11, 0.5, 1), 3).graph.has_value());
}

TEST(HuntTest, ExhaustiveCounts) {
  EXPECT_EQ(hunt(ExhaustiveMode{3}).records.size(), 16U);
  VerificationReport four = hunt(ExhaustiveMode{4});
  EXPECT_EQ(four.records.size(), 192U);
  EXPECT_EQ(four.summary.overall.total, 192U);
  EXPECT_EQ(four.records[0].k, 2);
  EXPECT_EQ(four.records[0].graph->edge_count(), 0);
  EXPECT_EQ(four.records[2].k, 4);
  EXPECT_EQ(four.records[3].graph->edge_count(), 1);
}

TEST(HuntTest, Guards) {
  try {
    hunt(ExhaustiveMode{7});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TooLarge);
  }
  try {
    hunt(RandomMode{5, 2.0, 3, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidProbability);
  }
}

TEST(HuntTest, RandomModeUsesConsecutiveSeeds) {
  VerificationReport r = hunt(RandomMode{12, 0.4, 3, 100});
  ASSERT_EQ(r.records.size(), 33U);
  ASSERT_TRUE(r.records[11].ref.has_value());
  EXPECT_EQ(r.records[11].ref->seed, 101U);
  EXPECT_EQ(r.records[11].k, 2);
}

TEST(HuntPropertyTest, SummaryIsConsistent) {
  for (const HuntMode& mode : {HuntMode{ExhaustiveMode{5}}, HuntMode{RandomMode{9, 0.5, 40, 7}}}) {
    for (auto variant : {BudgetVariant::Prose, BudgetVariant::Literal}) {
      VerificationReport r = hunt(mode, variant);
      EXPECT_EQ(r.summary.overall.agreements + r.summary.overall.disagreements, r.summary.overall.total);
      EXPECT_EQ(r.summary, summarize(r.records));
      for (const auto& rec : r.records) EXPECT_EQ(rec.agree, rec.claimed == rec.oracle);
      if (r.summary.first_disagreement) {
        EXPECT_FALSE(r.records[*r.summary.first_disagreement].agree);
      }
    }
  }
}

TEST(EmitReportTest, EmptyJson) {
  VerificationReport r = hunt(ExhaustiveMode{1});
  ASSERT_TRUE(r.records.empty());
  auto j = nlohmann::json::parse(emit_report(r, ReportFormat::Json));
  EXPECT_TRUE(j["records"].empty());
  EXPECT_EQ(j["summary"]["total"], 0);
  EXPECT_EQ(j["summary"]["agreements"], 0);
  EXPECT_EQ(j["summary"]["disagreements"], 0);
  EXPECT_TRUE(j["summary"]["first_disagreement"].is_null());
  EXPECT_EQ(j["meta"]["mode"], "exhaustive");
}

TEST(EmitReportTest, CsvOneRecord) {
  VerificationReport r;
  r.mode = ExhaustiveMode{3};
  r.records.push_back(verify_graph(triangle(), 3));
  r.summary = summarize(r.records);
  EXPECT_EQ(emit_report(r, ReportFormat::Csv),
            "index,n,k,claimed,oracle,agree,short_circuited,variant,edges\n"
            "0,3,3,yes,yes,true,false,prose,1-2 2-3 1-3\n");
}

TEST(EmitReportTest, ExhaustiveThreeJson) {
  std::string text = emit_report(hunt(ExhaustiveMode{3}), ReportFormat::Json);
  auto j = nlohmann::json::parse(text);
  EXPECT_EQ(j["records"].size(), 16U);
  EXPECT_EQ(j["summary"]["total"], 16);
  const auto& rec = j["records"][15];
  EXPECT_EQ(rec["n"], 3);
  EXPECT_EQ(rec["k"], 3);
  EXPECT_EQ(rec["edges"].size(), 3U);
  for (const char* key : {"claimed", "oracle", "agree", "short_circuited"}) EXPECT_TRUE(rec.contains(key)) << key;
  std::istringstream csv(emit_report(hunt(ExhaustiveMode{3}), ReportFormat::Csv));
  std::string line;
  int lines = 0;
  while (std::getline(csv, line)) ++lines;
  EXPECT_EQ(lines, 17);
}

TEST(EmitReportTest, Deterministic) {
  EXPECT_EQ(emit_report(hunt(ExhaustiveMode{4}), ReportFormat::Json),
            emit_report(hunt(ExhaustiveMode{4}), ReportFormat::Json));
  EXPECT_EQ(emit_report(hunt(RandomMode{14, 0.3, 5, 9}), ReportFormat::Csv),
            emit_report(hunt(RandomMode{14, 0.3, 5, 9}), ReportFormat::Csv));
}

}  // namespace
}  // namespace polyclique
