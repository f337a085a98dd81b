#include "treelike/verify.hpp"

#include <gtest/gtest.h>

#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace treelike {
namespace {

const std::vector<AuditRecord>& default_records() {
  static const std::vector<AuditRecord> records = run_audit(AuditGrid{});
  return records;
}

AuditGrid small_grid() {
  AuditGrid g;
  g.step_seed_vertices = 5;
  g.closed_seed_vertices = 4;
  g.m_max = 2;
  g.w_max = 2;
  g.t_max = 2;
  g.cayley_n_min = 3;
  g.cayley_n_max = 4;
  g.cayley_t_max = 2;
  g.vertex_cap = 2000;
  return g;
}

const AuditRecord* find_record(const std::vector<AuditRecord>& records, FormulaId formula,
                               const AuditParams& params) {
  for (const AuditRecord& r : records)
    if (r.formula == formula && r.params == params) return &r;
  return nullptr;
}

const FormulaSummary* find_row(const std::vector<FormulaSummary>& rows, FormulaId formula) {
  for (const FormulaSummary& row : rows)
    if (row.formula == formula) return &row;
  return nullptr;
}

TEST(VerifyTest, EveryFormulaAppearsInTheDefaultLedger) {
  std::set<FormulaId> seen;
  for (const AuditRecord& r : default_records()) seen.insert(r.formula);
  EXPECT_EQ(seen.size(), kAllFormulas.size());
  for (FormulaId f : kAllFormulas) EXPECT_EQ(seen.count(f), 1u) << formula_name(f);
}

TEST(VerifyTest, CanonicalFormulasMatchEverywhereOnTheDefaultGrid) {
  for (const AuditRecord& r : default_records()) {
    if (r.tier != Tier::Canonical) continue;
    ASSERT_EQ(r.verdict, Verdict::Match)
        << formula_name(r.formula) << " at " << render_params(r.params) << ": oracle "
        << to_string(r.oracle) << " vs " << (r.value ? to_string(*r.value) : "undefined");
  }
  EXPECT_TRUE(canonical_all_match(default_records()));
  for (const FormulaSummary& row : summarize(default_records())) {
    if (row.tier != Tier::Canonical) continue;
    EXPECT_DOUBLE_EQ(row.pass_rate(), 1.0) << formula_name(row.formula);
    EXPECT_TRUE(row.first_mismatch.empty()) << formula_name(row.formula);
    EXPECT_EQ(row.undefined, 0u) << formula_name(row.formula);
  }
}

TEST(VerifyTest, RecordInvariantsHold) {
  for (const AuditRecord& r : default_records()) {
    EXPECT_EQ(r.tier, formula_tier(r.formula));
    EXPECT_EQ(r.value.has_value(), r.verdict != Verdict::Undefined);
    EXPECT_EQ(r.abs_diff.has_value(), r.value.has_value());
    if (!r.value) continue;
    ExactRatio diff = *r.value >= r.oracle ? *r.value - r.oracle : r.oracle - *r.value;
    EXPECT_EQ(*r.abs_diff, diff);
    EXPECT_EQ(r.verdict == Verdict::Match, *r.abs_diff == 0);
  }
}

TEST(VerifyTest, RecordsAreSortedAndUnique) {
  const auto& records = default_records();
  for (std::size_t i = 1; i < records.size(); ++i) {
    auto a = std::tie(records[i - 1].formula, records[i - 1].params);
    auto b = std::tie(records[i].formula, records[i].params);
    ASSERT_TRUE(a < b) << formula_name(records[i].formula) << " at "
                       << render_params(records[i].params);
  }
}

TEST(VerifyTest, SummaryCountsAddUp) {
  std::size_t total = 0;
  for (const FormulaSummary& row : summarize(default_records())) {
    EXPECT_EQ(row.matches + row.mismatches + row.undefined, row.points)
        << formula_name(row.formula);
    total += row.points;
  }
  EXPECT_EQ(total, default_records().size());
}

TEST(VerifyTest, OneStepGridHasExhaustiveSeedCoverage) {
  // 987 tree shapes with at most 12 vertices feed every one-step audit.
  auto rows = summarize(default_records());
  const FormulaSummary* sub1 = find_row(rows, FormulaId::Subdivision1Step);
  ASSERT_NE(sub1, nullptr);
  EXPECT_EQ(sub1->points, 987u);
  EXPECT_EQ(sub1->matches, 987u);

  const FormulaSummary* step = find_row(rows, FormulaId::StarFractalStep);
  ASSERT_NE(step, nullptr);
  EXPECT_EQ(step->points, 987u * 16u);
  EXPECT_EQ(step->matches, step->points);

  const FormulaSummary* cayley = find_row(rows, FormulaId::CayleyGeneralStep);
  ASSERT_NE(cayley, nullptr);
  EXPECT_EQ(cayley->points, 987u * 4u);
  EXPECT_EQ(cayley->matches, cayley->points);
}

TEST(VerifyTest, CompactStepFormFailsAtTheSmallestPoint) {
  const AuditRecord* r = find_record(default_records(), FormulaId::StarFractalStepCompact,
                                     {{"seed_n", 2}, {"seed_i", 0}, {"w", 1}, {"m", 1}});
  ASSERT_NE(r, nullptr);
  EXPECT_EQ(r->verdict, Verdict::Mismatch);
  EXPECT_EQ(r->oracle, ExactRatio(9));
  ASSERT_TRUE(r->value.has_value());
  EXPECT_EQ(*r->value, ExactRatio(23) / 3);
  EXPECT_EQ(*r->abs_diff, ExactRatio(4) / 3);

  // The missing linear term makes the compact form wrong at every grid point,
  // while the expanded form is exact precisely when w = 1.
  auto rows = summarize(default_records());
  const FormulaSummary* compact = find_row(rows, FormulaId::StarFractalStepCompact);
  ASSERT_NE(compact, nullptr);
  EXPECT_EQ(compact->mismatches, compact->points);
  EXPECT_EQ(compact->first_mismatch, "seed_n=1 seed_i=0 w=1 m=1");

  const FormulaSummary* expanded = find_row(rows, FormulaId::StarFractalStepExpanded);
  ASSERT_NE(expanded, nullptr);
  EXPECT_EQ(expanded->matches, 987u * 4u);
  EXPECT_EQ(expanded->mismatches, 987u * 12u);
  for (const AuditRecord& rec : default_records()) {
    if (rec.formula != FormulaId::StarFractalStepExpanded) continue;
    long long w = rec.params[2].second;
    EXPECT_EQ(rec.verdict, w == 1 ? Verdict::Match : Verdict::Mismatch)
        << render_params(rec.params);
  }
}

TEST(VerifyTest, DistanceLemmaIsLowByAFactorOfTwo) {
  const AuditRecord* lemma = find_record(default_records(), FormulaId::MfptDistanceLemma,
                                         {{"seed_n", 3}, {"seed_i", 0}});
  ASSERT_NE(lemma, nullptr);
  EXPECT_EQ(lemma->verdict, Verdict::Mismatch);
  EXPECT_EQ(lemma->oracle, ExactRatio(8) / 3);
  ASSERT_TRUE(lemma->value.has_value());
  EXPECT_EQ(*lemma->value, ExactRatio(4) / 3);
  EXPECT_EQ(*lemma->abs_diff, ExactRatio(4) / 3);

  const AuditRecord* commute = find_record(default_records(), FormulaId::MfptCommute,
                                           {{"seed_n", 3}, {"seed_i", 0}});
  ASSERT_NE(commute, nullptr);
  EXPECT_EQ(commute->verdict, Verdict::Match);
  EXPECT_EQ(commute->oracle, ExactRatio(8) / 3);

  auto rows = summarize(default_records());
  const FormulaSummary* row = find_row(rows, FormulaId::MfptDistanceLemma);
  ASSERT_NE(row, nullptr);
  EXPECT_EQ(row->points, 47u);  // every shape with 2..8 vertices
  EXPECT_EQ(row->mismatches, row->points);
  for (const AuditRecord& r : default_records()) {
    if (r.formula != FormulaId::MfptDistanceLemma) continue;
    ASSERT_TRUE(r.value.has_value());
    EXPECT_EQ(*r.value * 2, r.oracle) << render_params(r.params);
  }
}

TEST(VerifyTest, ClosedFormLedgerAnchors) {
  auto rows = summarize(default_records());

  const FormulaSummary* star1m = find_row(rows, FormulaId::Star1MClosed);
  ASSERT_NE(star1m, nullptr);
  EXPECT_LT(star1m->pass_rate(), 1.0);
  EXPECT_EQ(star1m->first_mismatch, "seed_n=2 seed_i=0 m=1 t=1");

  const FormulaSummary* subm = find_row(rows, FormulaId::SubdivisionMClosed);
  ASSERT_NE(subm, nullptr);
  EXPECT_GT(subm->mismatches, 0u);

  // The transcriptions that happen to be correct keep a perfect score.
  const FormulaSummary* sub1 = find_row(rows, FormulaId::Subdivision1Closed);
  ASSERT_NE(sub1, nullptr);
  EXPECT_EQ(sub1->tier, Tier::AsPrinted);
  EXPECT_DOUBLE_EQ(sub1->pass_rate(), 1.0);
  const FormulaSummary* path = find_row(rows, FormulaId::Subdivision1PathClosed);
  ASSERT_NE(path, nullptr);
  EXPECT_DOUBLE_EQ(path->pass_rate(), 1.0);

  const AuditRecord* unrolled = find_record(default_records(), FormulaId::CayleyGeneralUnrolled,
                                            {{"n", 3}, {"t", 2}});
  ASSERT_NE(unrolled, nullptr);
  EXPECT_EQ(unrolled->oracle, ExactRatio(117));
  ASSERT_TRUE(unrolled->value.has_value());
  EXPECT_EQ(*unrolled->value, ExactRatio(93));
  const FormulaSummary* unrolled_row = find_row(rows, FormulaId::CayleyGeneralUnrolled);
  ASSERT_NE(unrolled_row, nullptr);
  EXPECT_EQ(unrolled_row->mismatches, unrolled_row->points);
}

TEST(VerifyTest, SingularDenominatorPointsAreUndefined) {
  std::size_t undefined = 0;
  for (const AuditRecord& r : default_records()) {
    if (r.formula != FormulaId::StarFractalClosed) continue;
    long long w = r.params[2].second;
    long long m = r.params[3].second;
    if (w == 1 && m == 1) {
      EXPECT_EQ(r.verdict, Verdict::Undefined) << render_params(r.params);
      EXPECT_FALSE(r.value.has_value());
      ++undefined;
    } else {
      EXPECT_NE(r.verdict, Verdict::Undefined) << render_params(r.params);
    }
  }
  EXPECT_EQ(undefined, 47u * 4u);  // every 2..8-vertex seed at t = 0..3
  auto rows = summarize(default_records());
  const FormulaSummary* row = find_row(rows, FormulaId::StarFractalClosed);
  ASSERT_NE(row, nullptr);
  EXPECT_EQ(row->undefined, undefined);
  EXPECT_GT(row->mismatches, 0u);
}

TEST(VerifyTest, PrintedSizeFormulaMatchesOnlyOnTheDiagonal) {
  for (const AuditRecord& r : default_records()) {
    if (r.formula != FormulaId::CountsStarFractalPrinted) continue;
    long long w = r.params[2].second;
    long long m = r.params[3].second;
    long long t = r.params[4].second;
    bool expect_match = w == m || t == 0;
    EXPECT_EQ(r.verdict, expect_match ? Verdict::Match : Verdict::Mismatch)
        << render_params(r.params);
  }
  auto rows = summarize(default_records());
  const FormulaSummary* corrected = find_row(rows, FormulaId::CountsStarFractal);
  ASSERT_NE(corrected, nullptr);
  EXPECT_EQ(corrected->mismatches, 0u);
}

TEST(VerifyTest, LedgersAreByteStableAcrossRunsAndThreadCounts) {
  AuditGrid grid = small_grid();
  auto first = run_audit(grid);
  auto second = run_audit(grid);
  AuditGrid threaded = small_grid();
  threaded.threads = 3;
  auto third = run_audit(threaded);

  auto render = [](const std::vector<AuditRecord>& records) {
    std::ostringstream jsonl, csv, text;
    write_ledger_jsonl(records, jsonl);
    write_ledger_csv(records, csv);
    write_ledger_text(summarize(records), text);
    return jsonl.str() + "\n---\n" + csv.str() + "\n---\n" + text.str();
  };
  std::string a = render(first);
  EXPECT_EQ(a, render(second));
  EXPECT_EQ(a, render(third));
  EXPECT_EQ(first.size(), second.size());
}

TEST(VerifyTest, SerializedFormsHaveTheExpectedShape) {
  auto records = run_audit(small_grid());
  std::ostringstream jsonl, csv, text;
  write_ledger_jsonl(records, jsonl);
  write_ledger_csv(records, csv);
  auto rows = summarize(records);
  write_ledger_text(rows, text);

  std::istringstream lines(jsonl.str());
  std::string line;
  std::size_t count = 0;
  while (std::getline(lines, line)) {
    ASSERT_FALSE(line.empty());
    EXPECT_EQ(line.front(), '{');
    EXPECT_EQ(line.back(), '}');
    EXPECT_NE(line.find("\"formula\":"), std::string::npos);
    EXPECT_NE(line.find("\"verdict\":"), std::string::npos);
    ++count;
  }
  EXPECT_EQ(count, records.size());
  EXPECT_NE(jsonl.str().find("{\"formula\":\"path_closed_form\",\"tier\":\"canonical\","
                             "\"params\":{\"a\":1},\"oracle\":\"0\",\"value\":\"0\","
                             "\"verdict\":\"match\",\"abs_diff\":\"0\"}\n"),
            std::string::npos);

  std::istringstream csv_lines(csv.str());
  std::getline(csv_lines, line);
  EXPECT_EQ(line, "formula,tier,params,oracle,value,verdict,abs_diff");
  std::size_t csv_count = 0;
  while (std::getline(csv_lines, line)) ++csv_count;
  EXPECT_EQ(csv_count, records.size());

  std::istringstream text_lines(text.str());
  std::getline(text_lines, line);
  EXPECT_NE(line.find("formula"), std::string::npos);
  EXPECT_NE(line.find("first_mismatch"), std::string::npos);
  std::size_t text_count = 0;
  while (std::getline(text_lines, line)) ++text_count;
  EXPECT_EQ(text_count, rows.size());
}

TEST(VerifyTest, RejectsDegenerateGrids) {
  AuditGrid grid = small_grid();
  grid.closed_seed_vertices = 1;
  EXPECT_THROW(run_audit(grid), Error);
  grid = small_grid();
  grid.cayley_n_min = 2;
  EXPECT_THROW(run_audit(grid), Error);
  grid = small_grid();
  grid.m_max = 0;
  EXPECT_THROW(run_audit(grid), Error);
}

}  // namespace
}  // namespace treelike
