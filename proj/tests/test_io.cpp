#include <filesystem>
#include <fstream>

#include "support.hpp"

using namespace fusion;
using namespace fusion::test;

namespace {

ErrorCode code_of(const std::function<void()> &f)
{
  try {
    f();
  } catch (const Error &e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::InvalidArgument;
}

} // namespace

TEST(Io, IngestExamples)
{
  nlohmann::json s4{{"kind", "permutation"}, {"degree", 4}, {"generators", {"(1,2)", "(1,2,3,4)"}}};
  EXPECT_EQ(parse_group(s4).group->order(), 24u);
  // Q8 from its multiplication table
  const auto &q8 = *group("Q8").group;
  std::vector<std::vector<std::size_t>> rows(q8.order());
  for (std::size_t a = 0; a < q8.order(); ++a)
    for (std::size_t b = 0; b < q8.order(); ++b)
      rows[a].push_back(q8.mul(Elem(a), Elem(b)));
  auto tq = parse_group(nlohmann::json{{"kind", "table"}, {"table", rows}});
  EXPECT_EQ(tq.group->order(), 8u);
  EXPECT_FALSE(tq.group->has_permutations());
  EXPECT_EQ(group("Q8oC4").kind, "table");

  nlohmann::json bad{{"kind", "table"}, {"table", {{0, 1}, {1, 1}}}};
  EXPECT_EQ(code_of([&] { parse_group(bad); }), ErrorCode::NotAGroup);
  EXPECT_EQ(code_of([&] { parse_group(nlohmann::json{{"kind", "matrix"}}); }), ErrorCode::ParseError);
  nlohmann::json big{{"kind", "permutation"}, {"degree", 6}, {"generators", {"(1,2)", "(1,2,3,4,5,6)"}}};
  EXPECT_EQ(code_of([&] { parse_group(big); }), ErrorCode::CapExceeded);
  EXPECT_EQ(parse_group(big, Limits{720, 20000}).group->order(), 720u);
}

TEST(Io, Elements)
{
  auto &s4 = group("S4");
  Elem t = el(s4, "(1,2)");
  EXPECT_EQ(s4.group->element_order(t), 2u);
  EXPECT_EQ(el(s4, "a"), t);
  EXPECT_EQ(el(s4, "aA"), s4.group->identity());
  EXPECT_EQ(el(s4, "e"), s4.group->identity());
  EXPECT_EQ(el(s4, "b^4"), s4.group->identity());
  EXPECT_EQ(el(s4, "#0"), s4.group->identity());
  EXPECT_EQ(code_of([&] { el(s4, "(1,9)"); }), ErrorCode::ParseError);
}

TEST(Io, SubgroupSpecs)
{
  auto &s4 = group("S4");
  EXPECT_EQ(parse_subgroup(s4, "A4", 2).order(), 12u);
  EXPECT_EQ(parse_subgroup(s4, "order:12", 2).order(), 12u);
  EXPECT_EQ(parse_subgroup(s4, "derived", 2), parse_subgroup(s4, "A4", 2));
  EXPECT_EQ(parse_subgroup(s4, "O_p", 2), parse_subgroup(s4, "V4", 2));
  EXPECT_EQ(parse_subgroup(s4, "O^p", 2), parse_subgroup(s4, "A4", 2));
  EXPECT_EQ(parse_subgroup(s4, "O_p'", 2).order(), 1u);
  EXPECT_EQ(parse_subgroup(s4, "whole", 2).order(), 24u);
  EXPECT_EQ(parse_subgroup(s4, "trivial", 2).order(), 1u);
  EXPECT_EQ(code_of([&] { parse_subgroup(s4, "order:5", 2); }), ErrorCode::NotFound);
  EXPECT_EQ(code_of([&] { parse_subgroup(s4, "nonsense", 2); }), ErrorCode::ParseError);

  auto &sxs = group("S3xS3");
  EXPECT_EQ(code_of([&] { parse_subgroup(sxs, "order:6", 3); }), ErrorCode::NotUnique);
  auto a = parse_subgroup(sxs, "order:6#0", 3);
  auto b = parse_subgroup(sxs, "order:6#1", 3);
  EXPECT_NE(a, b);
}

TEST(Io, Morphisms)
{
  auto &s4 = group("S4");
  const auto &F = realized("S4", 2);
  auto m = parse_morphism(s4, F.universe(), "V4^(1,2,3)");
  EXPECT_EQ(m.dom, sub(F, s4, "V4"));
  EXPECT_TRUE(F.contains(m));
  EXPECT_EQ(automorphism_order(F.universe(), m), 3u);
  EXPECT_THROW(parse_morphism(s4, F.universe(), "gens:(1,2)^(1,3)"), Error);
}

TEST(Io, PersistenceRoundTrip)
{
  for (auto &[name, p] : small_entries()) {
    const auto &F = realized(name, p);
    auto j = save_system(group(name), F);
    auto text = j.dump();
    auto back = load_system(nlohmann::json::parse(text));
    EXPECT_EQ(back.group.name, name);
    EXPECT_EQ(back.system.prime(), p);
    EXPECT_EQ(back.system.universe().sylow(), F.universe().sylow());
    // same element indices, so the systems compare on a shared universe
    auto moved = make_system(F.universe_ptr(), back.system.support(), [&] {
      std::vector<std::vector<Morphism>> isos(F.universe().size());
      for (auto P : back.system.objects())
        isos[P] = back.system.isos(P);
      return isos;
    }());
    EXPECT_TRUE(subsystem_equal(moved, F)) << name << "@" << p;
    EXPECT_TRUE(back.system.realizer());
  }
}

TEST(Io, LoadAnyAndCorruption)
{
  auto dir = std::filesystem::temp_directory_path() / "fusion_io_test";
  std::filesystem::create_directories(dir);
  auto j = save_system(group("S4"), realized("S4", 2));
  std::ofstream(dir / "s4.fsk") << j.dump(2);
  auto ls = load_any(dir / "s4.fsk", 0);
  EXPECT_TRUE(subsystem_equal(ls.system, fusion_of_group(ls.system.universe_ptr())));

  auto lg = load_any(std::filesystem::path(FUSION_CORPUS_DIR) / "s4.json", 3);
  EXPECT_EQ(lg.system.prime(), 3u);

  auto broken = j;
  broken["morphism_count"] = 1;
  EXPECT_EQ(code_of([&] { load_system(broken); }), ErrorCode::ParseError);
  auto wrong = j;
  wrong["version"] = 999;
  EXPECT_EQ(code_of([&] { load_system(wrong); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([&] { load_any(dir / "missing.json", 2); }), ErrorCode::ParseError);
  std::filesystem::remove_all(dir);
}
