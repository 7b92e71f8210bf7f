#include <gtest/gtest.h>

#include <map>

#include "centra/catalog_io.hpp"
#include "centra/constructors.hpp"
#include "centra/errors.hpp"
#include "centra/harness.hpp"

using namespace centra;

namespace {

std::vector<CorpusEntry> corpus_of(const std::string& manifest) { return load_corpus(parse_manifest(manifest, ".")); }

Status status_of(const RunReport& r, const std::string& id, const std::string& group) {
  for (const auto& o : r.outcomes)
    if (o.theorem_id == id && o.group == group) return o.status;
  ADD_FAILURE() << "no outcome " << id << " for " << group;
  return Status::Error;
}

std::map<std::string, std::string> as_map(const Record& r) { return {r.begin(), r.end()}; }

}  // namespace

TEST(Selection, Parse) {
  EXPECT_EQ(parse_theorem_selection("T1,T4-T6,ASSERT"),
            (std::vector<std::string>{"T1", "T4", "T5", "T6", "ASSERT"}));
  EXPECT_EQ(parse_theorem_selection("T6, T1"), (std::vector<std::string>{"T1", "T6"}));
  EXPECT_EQ(parse_theorem_selection("T1-T18").size(), 18u);
  EXPECT_THROW(parse_theorem_selection("T19"), OutOfRange);
  EXPECT_THROW(parse_theorem_selection("T5-T3"), OutOfRange);
  EXPECT_THROW(parse_theorem_selection("X1"), OutOfRange);
  EXPECT_EQ(theorem_ids().front(), "T1");
  EXPECT_EQ(theorem_ids().size(), 18u);
}

TEST(Harness, StatusNames) {
  EXPECT_EQ(to_string(Status::Holds), "HOLDS");
  EXPECT_EQ(to_string(Status::HypothesisNotMet), "HYPOTHESIS_NOT_MET");
  EXPECT_EQ(to_string(Status::SkippedBudget), "SKIPPED(budget)");
}

TEST(Harness, SmallCorpusOutcomes) {
  const auto corpus = corpus_of("construct dihedral:n=8\nconstruct symmetric:k=3\nconstruct quaternion8\n");
  const RunReport r = run(corpus);
  EXPECT_EQ(r.count(Status::Violation), 0u) << format_table(r);
  EXPECT_EQ(r.count(Status::Error), 0u) << format_table(r);
  EXPECT_EQ(status_of(r, "T4", "D8"), Status::Holds);
  EXPECT_EQ(status_of(r, "T7", "S3"), Status::HypothesisNotMet);
  EXPECT_EQ(status_of(r, "T2", "D8"), Status::Holds);  // partner Q8
  EXPECT_EQ(status_of(r, "T3", "S3"), Status::Holds);
  EXPECT_EQ(status_of(r, "T16", "S3"), Status::Holds);
  EXPECT_EQ(status_of(r, "T11", "Q8"), Status::Holds);
  EXPECT_EQ(r.exit_code(), 0);
  // 18 checks per group, no assertions in this manifest
  EXPECT_EQ(r.outcomes.size(), 54u);
}

TEST(Harness, SelectionRestrictsChecks) {
  const auto corpus = corpus_of("construct dihedral:n=8\n  assert cent_count 4\n");
  HarnessOptions opts;
  opts.theorems = {"T4", "ASSERT"};
  const RunReport r = run(corpus, opts);
  ASSERT_EQ(r.outcomes.size(), 2u);
  EXPECT_EQ(r.outcomes[0].theorem_id, "T4");
  EXPECT_EQ(r.outcomes[1].theorem_id, "ASSERT");
  EXPECT_EQ(r.outcomes[1].status, Status::Holds);
}

TEST(Harness, AssertMismatchIsViolation) {
  const auto corpus = corpus_of("construct dihedral:n=8\n  assert cent_count 5\n  assert no_such_key 1\n");
  HarnessOptions opts;
  opts.theorems = {"ASSERT"};
  const RunReport r = run(corpus, opts);
  ASSERT_EQ(r.outcomes.size(), 1u);
  EXPECT_EQ(r.outcomes[0].status, Status::Violation);
  EXPECT_NE(r.outcomes[0].detail.find("cent_count=4 expected 5"), std::string::npos);
  EXPECT_NE(r.outcomes[0].detail.find("unknown key no_such_key"), std::string::npos);
  EXPECT_EQ(r.exit_code(), 2);
}

TEST(Harness, LoadErrorExitCode) {
  const auto corpus = corpus_of("construct cyclic:n=3\nconstruct nonsense\n");
  HarnessOptions opts;
  opts.theorems = {"T1"};
  const RunReport r = run(corpus, opts);
  ASSERT_EQ(r.outcomes.size(), 2u);
  EXPECT_EQ(r.outcomes[1].theorem_id, "LOAD");
  EXPECT_EQ(r.outcomes[1].status, Status::Error);
  EXPECT_EQ(r.exit_code(), 3);
}

TEST(Harness, ExitCodePrecedence) {
  RunReport r;
  r.outcomes.push_back({"LOAD", "x", Status::Error, ""});
  EXPECT_EQ(r.exit_code(), 3);
  r.outcomes.push_back({"T1", "y", Status::Violation, ""});
  EXPECT_EQ(r.exit_code(), 2);
  RunReport e;
  e.outcomes.push_back({"T1", "y", Status::Error, "boom"});
  EXPECT_EQ(e.exit_code(), 2);
  RunReport ok;
  ok.outcomes.push_back({"T1", "y", Status::SkippedBudget, ""});
  ok.outcomes.push_back({"T2", "y", Status::HypothesisNotMet, ""});
  EXPECT_EQ(ok.exit_code(), 0);
}

TEST(Harness, TinyBudgetSkipsInsteadOfFailing) {
  const auto corpus = corpus_of(
      "construct extraspecial:p=2,a=2,variant=+\nconstruct extraspecial:p=2,a=2,variant=-\n");
  HarnessOptions opts;
  opts.theorems = {"T2"};
  opts.budget = 1;
  const RunReport r = run(corpus, opts);
  EXPECT_EQ(r.count(Status::SkippedBudget), 2u) << format_table(r);
  EXPECT_EQ(r.exit_code(), 0);
}

TEST(Harness, Deterministic) {
  const auto corpus = load_corpus(read_manifest(builtin_manifest_path()));
  const std::string a = format_records(run(corpus));
  const std::string b = format_records(run(corpus));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.find("\"VIOLATION\""), std::string::npos);
}

TEST(Harness, Formats) {
  RunReport r;
  r.outcomes.push_back({"T4", "D8", Status::Holds, "cent=4"});
  EXPECT_EQ(format_records(r), "{\"theorem\":\"T4\",\"group\":\"D8\",\"status\":\"HOLDS\",\"detail\":\"cent=4\"}\n");
  const std::string t = format_table(r);
  EXPECT_EQ(t.rfind("THEOREM", 0), 0u);
  EXPECT_NE(t.find("holds=1 unmet=0 violations=0 skipped=0 errors=0"), std::string::npos);
}

TEST(Record, D8) {
  const auto m = as_map(analysis_record(construct_from_spec("dihedral:n=8")));
  EXPECT_EQ(m.at("name"), "D8");
  EXPECT_EQ(m.at("cent_count"), "4");
  EXPECT_EQ(m.at("zclass_count"), "4");
  EXPECT_EQ(m.at("conjugate_type"), "(2,1)");
  EXPECT_EQ(m.at("extraspecial"), "true");
  EXPECT_EQ(m.at("nilpotency_class"), "2");
  EXPECT_EQ(m.at("chain_violations"), "0");
}

TEST(Record, DetailedLines) {
  const Record r = analysis_record(construct_from_spec("symmetric:k=3"), true);
  const auto m = as_map(r);
  EXPECT_EQ(m.at("p"), "-");
  EXPECT_TRUE(m.count("centralizer.3"));
  EXPECT_FALSE(m.count("centralizer.4"));
  EXPECT_EQ(m.at("zclass.2"), "rep=3 size=2 normalizer_index=1 fprime=2");
  EXPECT_EQ(format_record_lines({{"a", "1"}}), "a 1\n");
  EXPECT_EQ(format_record_table({{"a", "1"}, {"abc", "2"}}), "a    1\nabc  2\n");
}
