#include "support.hpp"

using namespace fusion;
using namespace fusion::test;

namespace {

std::string failures(const EntryReport &r)
{
  std::string out;
  for (auto &c : r.checks)
    if (!c.passed)
      out += c.id + " [" + c.subject + "] " + c.counterexample + "\n";
  return out;
}

std::vector<std::pair<GroupFile, std::size_t>> mutation_entries()
{
  std::vector<std::pair<GroupFile, std::size_t>> out;
  for (auto name : {"S4", "D8", "Q8", "A4", "C3:C4", "S3xS3", "SL(2,3)", "Q8oC4", "D8xC2", "S4xC2", "GL(2,3)"})
    for (auto p : group(name).primes)
      out.push_back({group(name), p});
  return out;
}

} // namespace

class CorpusSuite : public testing::TestWithParam<std::pair<std::string, std::size_t>> {};

TEST_P(CorpusSuite, AllChecksPass)
{
  auto [name, p] = GetParam();
  auto r = run_suite(group(name), p);
  EXPECT_TRUE(r.passed()) << failures(r);
  EXPECT_FALSE(r.checks.empty());
  // every check that applies to an entry at all shows up
  std::set<std::string> ids;
  for (auto &c : r.checks)
    ids.insert(c.id);
  for (auto id : {"Saturation", "Oracle.focal", "Finvariant.equiv", "MainCSE.a", "Oracle.CSE", "FocProp", "MainCFE",
                  "Coincide", "RadicalIntersect"})
    EXPECT_TRUE(ids.count(id)) << name << "@" << p << " has no " << id;
}

INSTANTIATE_TEST_SUITE_P(Corpus, CorpusSuite, testing::ValuesIn([] {
                           std::vector<std::pair<std::string, std::size_t>> v;
                           for (auto &g : corpus())
                             for (auto p : g.primes)
                               v.push_back({g.name, p});
                           return v;
                         }()),
                         [](const auto &info) {
                           std::string s = info.param.first + "_p" + std::to_string(info.param.second);
                           for (auto &c : s)
                             if (!std::isalnum(static_cast<unsigned char>(c)))
                               c = '_';
                           return s;
                         });

TEST(Verify, AbelianEntriesPass)
{
  for (auto name : {"C2", "C4", "C2xC2", "C3xC3"})
    for (auto p : group(name).primes)
      EXPECT_TRUE(run_suite(group(name), p).passed()) << name;
}

TEST(Verify, SelectedChecksOnly)
{
  SuiteOptions o;
  o.checks = {"MainCSE.a", "Saturation"};
  auto r = run_suite(group("S4"), 2, o);
  ASSERT_FALSE(r.checks.empty());
  for (auto &c : r.checks)
    EXPECT_TRUE(c.id == "MainCSE.a" || c.id == "Saturation");
  EXPECT_EQ(r.checks.front().id, "Saturation"); // canonical id order, not request order
}

TEST(Verify, ReportsAreDeterministic)
{
  for (auto name : {"S4", "D8xC2", "S3xS3"})
    for (auto p : group(name).primes) {
      auto a = to_json(run_suite(group(name), p)).dump();
      auto b = to_json(run_suite(group(name), p)).dump();
      EXPECT_EQ(a, b) << name;
    }
  SuiteOptions timed;
  timed.timings = true;
  auto r = run_suite(group("S4"), 2, timed);
  double total = 0;
  for (auto &c : r.checks)
    total += c.millis;
  EXPECT_GT(total, 0.0);
}

TEST(Verify, JsonShape)
{
  auto j = to_json(run_suite(group("S4"), 2));
  EXPECT_EQ(j["entry"], "S4@2");
  EXPECT_EQ(j["prime"], 2);
  ASSERT_TRUE(j["checks"].is_array());
  for (auto &c : j["checks"]) {
    EXPECT_TRUE(c.contains("id"));
    EXPECT_TRUE(c.contains("subject"));
    EXPECT_EQ(c["status"], "pass");
    EXPECT_FALSE(c.contains("counterexample"));
  }
}

TEST(Verify, LoadedSystemMatchesBuilt)
{
  auto j = save_system(group("S4"), realized("S4", 2));
  auto ls = load_system(j);
  auto a = to_json(run_suite(ls.group, ls.system));
  auto b = to_json(run_suite(group("S4"), 2));
  EXPECT_EQ(a.dump(), b.dump());
}

TEST(Verify, CoverageManifest)
{
  const auto &ids = check_ids();
  std::set<std::string> unique(ids.begin(), ids.end());
  EXPECT_EQ(unique.size(), ids.size());
  for (auto &label : result_labels()) {
    bool hit = false;
    for (auto &id : ids)
      hit = hit || id == label || id.rfind(label + ".", 0) == 0;
    EXPECT_TRUE(hit) << label << " has no check";
  }
  for (auto label : {"FfEf", "Wellknown", "LocalNormalSubsystems", "EasyCentralizer", "FrattiniCons", "XInvariant",
                     "WeaklyClosedCentralized", "GN", "CFCG0", "PropHelp", "ZCentralize", "L:F1F2Centralize",
                     "P:F1F2Centralize", "MainCSE", "FirstCharacterization", "FocProp", "ShowWeaklyNormal",
                     "CFENormal", "MainCFE", "Coincide", "RadicalIntersect", "MainCentralProduct",
                     "NormalCentralizeEachOther", "Finvariant", "Model1"})
    EXPECT_TRUE(std::find(result_labels().begin(), result_labels().end(), label) != result_labels().end()) << label;
  EXPECT_THROW(check_scope("NoSuchCheck"), Error);
}

TEST(Verify, HarnessCatchesCorruptedSystem)
{
  // delete one hom from F_{D8}(S4); MainCSE.a then fails on the pair (F, F_{V4}(A4))
  auto w = find_failing_mutation("MainCSE.a", {{group("S4"), 2}}, 64, kDeleteOne);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->entry, "S4@2");
  EXPECT_FALSE(w->counterexample.empty());
  EXPECT_EQ(w->mutation.rfind("F:", 0), 0u) << w->mutation;
}

TEST(Verify, MutantsAreNotFusionSystemsOfTheGroup)
{
  const auto &F = realized("S4", 2);
  auto ms = mutants(F, 8);
  ASSERT_FALSE(ms.empty());
  for (auto &m : ms) {
    EXPECT_FALSE(subsystem_equal(m.system, F)) << m.description;
    EXPECT_TRUE(subsystem_contains(F, m.system)) << m.description;
    EXPECT_FALSE(m.system.realizer());
  }
}

class LemmaMutation : public testing::TestWithParam<std::string> {};

TEST_P(LemmaMutation, CheckIsNotVacuous)
{
  const auto &label = GetParam();
  std::vector<std::string> ids;
  for (auto &id : check_ids())
    if (id == label || id.rfind(label + ".", 0) == 0)
      ids.push_back(id);
  ASSERT_FALSE(ids.empty());
  bool any = false;
  for (auto &id : ids) {
    auto w = find_failing_mutation(id, mutation_entries());
    if (w) {
      any = true;
      EXPECT_FALSE(w->counterexample.empty());
      // the unmutated instance passes, so the failure is due to the mutation
      auto r = run_suite(group(w->entry.substr(0, w->entry.find('@'))), std::stoul(w->entry.substr(w->entry.find('@') + 1)),
                         SuiteOptions{{id}, false, {}});
      EXPECT_TRUE(r.passed()) << failures(r);
    }
  }
  EXPECT_TRUE(any) << label << ": no mutation makes it fail";
}

INSTANTIATE_TEST_SUITE_P(Lemmas, LemmaMutation,
                         testing::Values("FfEf", "Wellknown", "LocalNormalSubsystems", "EasyCentralizer",
                                         "FrattiniCons", "XInvariant", "WeaklyClosedCentralized", "GN", "CFCG0",
                                         "PropHelp", "ZCentralize", "L:F1F2Centralize", "MainCSE",
                                         "FirstCharacterization", "ShowWeaklyNormal", "CFENormal", "MainCFE",
                                         "RadicalIntersect", "MainCentralProduct", "NormalCentralizeEachOther",
                                         "P:F1F2Centralize", "FocProp", "Finvariant", "Saturation", "Oracle.CSE"),
                         [](const auto &info) {
                           std::string s = info.param;
                           for (auto &c : s)
                             if (!std::isalnum(static_cast<unsigned char>(c)))
                               c = '_';
                           return s;
                         });
