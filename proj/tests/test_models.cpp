#include "support.hpp"

using namespace fusion;
using namespace fusion::test;

TEST(Models, ConstrainedExamples)
{
  auto &s4 = group("S4");
  const auto &F = realized("S4", 2);
  auto c = is_constrained(F);
  EXPECT_TRUE(c.constrained);
  EXPECT_EQ(c.witness, sub(F, s4, "V4"));

  const auto &D = realized("D8", 2);
  auto inner = inner_system(D.universe_ptr(), D.support());
  auto ci = is_constrained(inner);
  EXPECT_TRUE(ci.constrained);
  EXPECT_EQ(ci.witness, D.support());

  EXPECT_FALSE(is_constrained(realized("A6", 2)).constrained);
  // A5 at 2 is controlled by N(V4) = A4, so V4 is normal centric
  EXPECT_TRUE(is_constrained(realized("A5", 2)).constrained);
}

TEST(Models, ModelExamples)
{
  const auto &F = realized("S4", 2);
  auto M = model_of(F);
  EXPECT_EQ(M.group->order(), 24u);
  EXPECT_FALSE(verify_model(F, M));
  EXPECT_TRUE(find_isomorphism(*M.group, *group("S4").group));

  const auto &D = realized("D8", 2);
  auto MD = model_of(D);
  EXPECT_EQ(MD.group->order(), 8u);

  const auto &Q = realized("SL(2,3)", 2);
  auto MQ = model_of(Q);
  EXPECT_EQ(MQ.group->order(), 24u);
  EXPECT_TRUE(find_isomorphism(*MQ.group, *group("SL(2,3)").group));

  // C3:C4 at 2: O_2' = C3 is divided out
  auto MC = model_of(realized("C3:C4", 2));
  EXPECT_EQ(MC.group->order(), 4u);
}

TEST(Models, ModelsVerifyOnConstrainedCorpus)
{
  for (auto &g : corpus())
    for (auto p : g.primes) {
      const auto &F = realized(g.name, p);
      auto c = is_constrained(F);
      if (!c)
        continue;
      auto M = model_of(F);
      auto err = verify_model(F, M);
      EXPECT_FALSE(err) << g.name << "@" << p << ": " << err.value_or("");
      // every normal centric subgroup gives an isomorphic model
      for (auto Q : normal_centric_subgroups(F))
        EXPECT_TRUE(models_isomorphic_over_support(M, model_from(F, Q))) << g.name << "@" << p;
    }
}

TEST(Models, ModelFromRejectsNonCentric)
{
  auto &s4 = group("S4");
  const auto &F = realized("S4", 2);
  try {
    model_from(F, sub(F, s4, "gens:(1,2)(3,4)"));
    ADD_FAILURE();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::NotConstrained);
  }
  auto &c2 = group("C2xC2");
  auto U = Universe::create(c2.group, 2);
  auto bare = inner_system(U, U->top());
  auto stripped = make_system(U, U->top(), [&] {
    std::vector<std::vector<Morphism>> isos(U->size());
    for (auto P : bare.objects())
      isos[P] = bare.isos(P);
    return isos;
  }());
  try {
    model_of(stripped);
    ADD_FAILURE();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::NotRealized);
  }
}

TEST(Models, NormalModelExamples)
{
  auto &s4 = group("S4");
  const auto &F = realized("S4", 2);
  auto M = model_of(F);
  auto E = normal_subsystem_from_group(F, parse_subgroup(s4, "A4", 2));
  auto N = normal_model(M, E);
  EXPECT_EQ(N.order(), 12u);
  EXPECT_EQ(normal_model(M, F), whole_group(*M.group));

  // F_S(S) with T central of order 2 and trivial fusion
  auto &c = group("C2xC2");
  auto U = Universe::create(c.group, 2);
  auto FS = fusion_of_group(U);
  auto MS = model_of(FS);
  SubId T = 1;
  ASSERT_EQ(U->order(T), 2u);
  auto NT = normal_model(MS, inner_system(U, T));
  EXPECT_EQ(NT, MS.image(U->at(T)));
}

TEST(Models, NormalModelIsUniqueOnCorpus)
{
  for (auto &[name, p] : small_entries()) {
    const auto &F = realized(name, p);
    if (!is_constrained(F))
      continue;
    auto M = model_of(F);
    for (auto &np : normal_pairs(F)) {
      auto N = normal_model(M, np.E);
      EXPECT_TRUE(is_normal(*M.group, N, whole_group(*M.group)));
      EXPECT_EQ(meet(*M.group, M.image(F.universe().sylow()), N), M.image(F.universe().at(np.E.support())))
          << name << " " << np.name;
    }
  }
}

TEST(Models, ScriptGExample)
{
  auto &s4 = group("S4");
  const auto &F = realized("S4", 2);
  auto E = normal_subsystem_from_group(F, parse_subgroup(s4, "A4", 2));
  auto G = script_g(F, E);
  EXPECT_TRUE(subsystem_equal(G, F));
  EXPECT_TRUE(is_constrained(G));
}

TEST(Models, ScriptGIsConstrainedOnCorpus)
{
  // G = N_{N_F(T)}(T C_S(T)) has T C_S(T) normal centric
  for (auto &[name, p] : small_entries()) {
    const auto &F = realized(name, p);
    for (auto &np : normal_pairs(F)) {
      auto G = script_g(F, np.E);
      EXPECT_TRUE(is_constrained(G)) << name << " " << np.name;
      EXPECT_TRUE(is_saturated(G)) << name << " " << np.name;
    }
  }
}
