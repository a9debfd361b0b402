#include "support.hpp"

using namespace fusion;
using namespace fusion::test;

namespace {

bool strongly_closed_oracle(const FiniteGroup &G, const oracle::Set &S, const oracle::Set &T)
{
  for (Elem t : T)
    for (std::size_t g = 0; g < G.order(); ++g) {
      Elem y = oracle::conj(G, t, Elem(g));
      if (std::binary_search(S.begin(), S.end(), y) && !std::binary_search(T.begin(), T.end(), y))
        return false;
    }
  return true;
}

bool weakly_closed_oracle(const FiniteGroup &G, const oracle::Set &S, const oracle::Set &T)
{
  for (std::size_t g = 0; g < G.order(); ++g) {
    auto Tg = oracle::image(G, T, Elem(g));
    if (oracle::subset(Tg, S) && Tg != T)
      return false;
  }
  return true;
}

} // namespace

TEST(Subsystems, ClosureAgainstGroupOracle)
{
  for (auto &[name, p] : small_entries()) {
    const auto &F = realized(name, p);
    const auto &U = F.universe();
    if (U.group().order() > 48)
      continue;
    const auto &S = U.sylow().members();
    for (auto T : F.objects()) {
      EXPECT_EQ(is_strongly_closed(F, T), strongly_closed_oracle(U.group(), S, U.at(T).members()))
          << name << " " << U.describe(T);
      EXPECT_EQ(is_weakly_closed(F, T), weakly_closed_oracle(U.group(), S, U.at(T).members()))
          << name << " " << U.describe(T);
    }
  }
}

TEST(Subsystems, LocalSubsystemsOfRealizedSystems)
{
  // C_F(X) = F_{C_S(X)}(C_G(X)) for X fully centralized and
  // N_F(Q) = F_{N_S(Q)}(N_G(Q)) for Q fully normalized
  for (auto &[name, p] : small_entries()) {
    const auto &F = realized(name, p);
    const auto &U = F.universe();
    const auto &G = U.group();
    auto cls = classify(F);
    for (auto X : F.objects()) {
      if (cls[X].fully_centralized) {
        auto C = centralizer_subsystem(F, X);
        EXPECT_EQ(C.support(), U.centralizer(X));
        EXPECT_TRUE(subsystem_equal(C, realized_subsystem(F.universe_ptr(), centralizer(G, U.at(X)))))
            << name << " C_F(" << U.describe(X) << ")";
      }
      if (cls[X].fully_normalized) {
        auto N = normalizer_subsystem(F, X);
        EXPECT_EQ(N.support(), U.normalizer(X));
        EXPECT_TRUE(subsystem_equal(N, realized_subsystem(F.universe_ptr(), normalizer(G, U.at(X)))))
            << name << " N_F(" << U.describe(X) << ")";
        EXPECT_TRUE(is_saturated(N));
      }
    }
  }
}

TEST(Subsystems, NormalityExamples)
{
  auto &s4 = group("S4");
  const auto &F = realized("S4", 2);
  auto E = normal_subsystem_from_group(F, parse_subgroup(s4, "A4", 2));
  EXPECT_EQ(E.support(), sub(F, s4, "V4"));
  EXPECT_TRUE(subsystem_equal(E, realized_subsystem(F.universe_ptr(), parse_subgroup(s4, "A4", 2))));
  auto rep = normality(F, E, true);
  EXPECT_TRUE(rep.normal());
  EXPECT_TRUE(rep.conditions_agree());
  EXPECT_TRUE(rep.extension_support);
  EXPECT_TRUE(rep.frattini);

  auto t = sub(F, s4, "gens:(1,2)");
  auto I = inner_system(F.universe_ptr(), t);
  auto bad = normality(F, I);
  EXPECT_FALSE(bad.strongly_closed);
  EXPECT_FALSE(bad.normal());
  EXPECT_FALSE(bad.counterexample.empty());
  EXPECT_TRUE(strong_closure_violation(F, t));

  EXPECT_TRUE(is_normal_subsystem(F, F));
}

TEST(Subsystems, NormalSubsystemFromGroupExtremes)
{
  for (auto &[name, p] : small_entries()) {
    const auto &F = realized(name, p);
    const auto &G = F.universe().group();
    EXPECT_TRUE(subsystem_equal(normal_subsystem_from_group(F, whole_group(G)), F)) << name;
    auto triv = normal_subsystem_from_group(F, trivial_subgroup(G));
    EXPECT_EQ(triv.support(), F.universe().bottom());
    EXPECT_EQ(triv.morphism_count(), 1u);
  }
}

TEST(Subsystems, InvarianceConditionsAgreeOnNormalPairs)
{
  for (auto &[name, p] : small_entries()) {
    const auto &F = realized(name, p);
    for (auto &np : normal_pairs(F)) {
      auto rep = normality(F, np.E, true);
      EXPECT_TRUE(rep.normal()) << name << " " << np.name << ": " << rep.counterexample;
      EXPECT_TRUE(rep.conditions_agree()) << name << " " << np.name;
      EXPECT_EQ(rep.extension_center, rep.extension_support) << name << " " << np.name;
    }
  }
}

TEST(Subsystems, InvarianceConditionsAgreeOnStronglyClosedInnerSystems)
{
  // F_T(T) for T strongly closed: invariant or not, the six conditions agree
  for (auto &[name, p] : small_entries()) {
    const auto &F = realized(name, p);
    for (auto T : F.objects()) {
      if (!is_strongly_closed(F, T))
        continue;
      auto I = inner_system(F.universe_ptr(), T);
      std::array<bool, 6> v{};
      for (std::size_t i = 0; i < 6; ++i)
        v[i] = invariance_condition(F, I, kAllInvariance[i]).holds;
      for (std::size_t i = 1; i < 6; ++i)
        EXPECT_EQ(v[i], v[0]) << name << " " << F.universe().describe(T) << " condition "
                              << invariance_name(kAllInvariance[i]);
    }
  }
}

TEST(Subsystems, InvarianceNeedsStrongClosure)
{
  auto &s4 = group("S4");
  const auto &F = realized("S4", 2);
  auto I = inner_system(F.universe_ptr(), sub(F, s4, "gens:(1,2)"));
  try {
    invariance_condition(F, I, Invariance::f);
    ADD_FAILURE();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::NotStronglyClosed);
  }
}

TEST(Subsystems, NormalSubgroupsOfSystem)
{
  auto &s4 = group("S4");
  const auto &F = realized("S4", 2);
  EXPECT_EQ(largest_normal_subgroup(F), sub(F, s4, "V4"));
  EXPECT_TRUE(is_normal_subgroup(F, sub(F, s4, "V4")));
  EXPECT_FALSE(is_normal_subgroup(F, F.support()));
  for (auto &[name, p] : small_entries()) {
    const auto &G = realized(name, p);
    // O_p(F_S(G)) contains O_p(G)
    auto opg = G.universe().id_of(o_p(G.universe().group(), p));
    EXPECT_TRUE(G.universe().le(opg, largest_normal_subgroup(G))) << name;
  }
}
