#include "support.hpp"

using namespace fusion;
using namespace fusion::test;

namespace {

// the normal V4 of S4 and an order-3 automorphism of it induced by (1,2,3)
struct S4Data {
  const GroupFile &g = group("S4");
  const FusionSystem &F = realized("S4", 2);
  const Universe &U = F.universe();
  SubId V = sub(F, g, "V4");
  Morphism phi = *conjugation(U, V, el(g, "(1,2,3)"));
};

} // namespace

TEST(FusionRep, AutomizerOrders)
{
  S4Data d;
  EXPECT_EQ(d.F.automorphism_count(d.V), 6u);

  auto &a4 = group("A4");
  const auto &F = realized("A4", 2);
  EXPECT_EQ(F.automorphism_count(F.support()), 3u);
  EXPECT_EQ(F.automorphism_count(sub(F, a4, "gens:(1,2)(3,4)")), 1u);
}

TEST(FusionRep, AbelianInnerSystemIsTrivial)
{
  for (auto name : {"C2", "C4", "C2xC2", "C3xC3"}) {
    auto &g = group(name);
    for (auto p : g.primes) {
      auto U = Universe::create(g.group, p);
      auto F = inner_system(U, U->top());
      for (auto P : F.objects()) {
        ASSERT_EQ(F.isos(P).size(), 1u) << name;
        EXPECT_TRUE(is_identity(F.isos(P).front(), *U));
      }
    }
  }
}

TEST(FusionRep, HomSetsAgainstConjugationOracle)
{
  for (auto &[name, p] : small_entries()) {
    const auto &F = realized(name, p);
    const auto &U = F.universe();
    const auto &G = U.group();
    if (G.order() > 48)
      continue;
    for (auto P : F.objects())
      for (auto Q : F.objects()) {
        if (U.order(P) > U.order(Q))
          continue;
        std::set<std::vector<Elem>> mine;
        for (auto &m : F.hom_set(P, Q))
          mine.insert(m.map);
        EXPECT_EQ(mine, oracle::conjugation_maps(G, U.at(P).members(), U.at(Q).members()))
            << name << "@" << p << " " << U.describe(P) << " -> " << U.describe(Q);
      }
  }
}

TEST(FusionRep, AxiomsOnCorpus)
{
  for (auto &g : corpus())
    for (auto p : g.primes) {
      const auto &F = realized(g.name, p);
      EXPECT_FALSE(check_axioms(F)) << g.name << "@" << p << ": " << check_axioms(F).value_or("");
    }
}

TEST(FusionRep, GeneratedSubsystems)
{
  S4Data d;
  auto U = d.F.universe_ptr();
  auto R = d.U.top();
  EXPECT_TRUE(subsystem_equal(generate(U, R, {}), inner_system(U, R)));

  auto A4 = parse_subgroup(d.g, "A4", 2);
  auto EA4 = realized_subsystem(U, A4);
  auto autA4 = EA4.automorphisms(d.V);
  EXPECT_EQ(autA4.size(), 3u);
  EXPECT_TRUE(subsystem_equal(generated_subsystem(d.F, d.V, autA4), EA4));

  std::vector<Morphism> one{d.phi};
  EXPECT_TRUE(subsystem_equal(generated_subsystem(d.F, R, one), d.F));
}

TEST(FusionRep, GenerateRejectsOutsideMorphism)
{
  S4Data d;
  auto Z = d.U.center(d.U.top());
  std::vector<Morphism> gens{d.phi};
  try {
    generate(d.F.universe_ptr(), Z, gens);
    ADD_FAILURE();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::MorphismOutsideR);
  }
}

TEST(FusionRep, ConjugateMorphism)
{
  S4Data d;
  // conjugating by an involution of S outside V4 inverts the order-3 automorphism
  std::optional<Morphism> alpha;
  for (auto t : d.U.sylow().members())
    if (d.U.group().element_order(t) == 2 && !d.U.at(d.V).contains(t))
      alpha = conjugation(d.U, d.V, t);
  ASSERT_TRUE(alpha);
  auto c = conjugate_morphism(d.U, d.phi, *alpha);
  EXPECT_EQ(c, inverse(d.U, d.phi));
  EXPECT_TRUE(d.F.contains(c));
  // pointwise: x^(alpha^-1 phi alpha)
  auto ai = inverse(d.U, *alpha);
  for (auto x : d.U.at(d.V).members())
    EXPECT_EQ(apply(d.U, c, x), apply(d.U, *alpha, apply(d.U, d.phi, apply(d.U, ai, x))));
}

TEST(FusionRep, ConjugateSubsystem)
{
  S4Data d;
  auto E = realized_subsystem(d.F.universe_ptr(), parse_subgroup(d.g, "A4", 2));
  for (auto &alpha : d.F.automorphisms(d.V))
    EXPECT_TRUE(subsystem_equal(conjugate_subsystem(E, alpha), E));
  // the inner system of a non-normal subgroup moves
  auto t = sub(d.F, d.g, "gens:(1,2)");
  auto I = inner_system(d.F.universe_ptr(), t);
  auto s = *conjugation(d.U, t, el(d.g, "(1,3)(2,4)"));
  auto J = conjugate_subsystem(I, s);
  EXPECT_NE(J.support(), I.support());
}

TEST(FusionRep, ContainmentAndEquality)
{
  S4Data d;
  auto E = realized_subsystem(d.F.universe_ptr(), parse_subgroup(d.g, "A4", 2));
  EXPECT_TRUE(subsystem_contains(d.F, E));
  EXPECT_FALSE(subsystem_contains(E, d.F));
  EXPECT_TRUE(subsystem_equal(d.F, d.F));
  EXPECT_FALSE(subsystem_equal(d.F, inner_system(d.F.universe_ptr(), d.U.top())));
}

TEST(FusionRep, FactorThroughImage)
{
  // a morphism P -> Q is stored as its corestriction onto P^phi
  for (auto &[name, p] : small_entries()) {
    const auto &F = realized(name, p);
    const auto &U = F.universe();
    for (auto P : F.objects())
      for (auto &m : F.isos(P)) {
        EXPECT_EQ(image_of(U, m, P), m.img);
        EXPECT_TRUE(F.contains(inverse(U, m)));
      }
  }
}

TEST(FusionRep, GeneratorRecordRoundTrip)
{
  for (auto &[name, p] : small_entries()) {
    const auto &F = realized(name, p);
    auto rec = generator_record(F);
    auto G = from_generator_record(F.universe_ptr(), rec);
    EXPECT_TRUE(subsystem_equal(F, G)) << name << "@" << p;
    EXPECT_EQ(F.morphism_count(), G.morphism_count());
  }
}

TEST(FusionRep, RealizedSubsystemNeedsSylowIntersection)
{
  S4Data d;
  // (1,3) is not in S, so S n <(1,3)> = 1 is not Sylow in <(1,3)>
  auto H = parse_subgroup(d.g, "gens:(1,3)", 2);
  if (!d.U.sylow().contains(el(d.g, "(1,3)"))) {
    try {
      realized_subsystem(d.F.universe_ptr(), H);
      ADD_FAILURE();
    } catch (const Error &e) {
      EXPECT_EQ(e.code(), ErrorCode::NotSylow);
    }
  }
}

TEST(FusionRep, TransportAlongIsomorphism)
{
  // F_{D8}(S4) moved to another Sylow 2-subgroup by conjugation
  S4Data d;
  const auto &G = d.U.group();
  Elem g = el(d.g, "(1,2,3)");
  auto S2 = conjugate(G, d.U.sylow(), g);
  ASSERT_NE(S2, d.U.sylow());
  auto U2 = Universe::create(d.g.group, 2, S2);
  GroupHom sigma{d.U.sylow(), std::vector<Elem>(G.order(), kNoElem)};
  for (auto x : d.U.sylow().members())
    sigma.image[x] = G.conj(x, g);
  auto moved = transport(d.F, U2, sigma);
  EXPECT_TRUE(subsystem_equal(moved, fusion_of_group(U2)));
}
