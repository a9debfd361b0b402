#include "support.hpp"

using namespace fusion;
using namespace fusion::test;

namespace {

/// F_{S1 x S2}(G1 x G2) on the concrete product group, with the Sylow
/// subgroup taken as the image of D's support.
FusionSystem product_group_system(const DirectProduct &D, const FusionSystem &F1, const FusionSystem &F2,
                                  GroupHom &sigma)
{
  const auto &G1 = F1.universe().group();
  const auto &G2 = F2.universe().group();
  auto pg = direct_product(G1, G2);
  const auto &Pg = D.universe->group();
  sigma = GroupHom{D.universe->sylow(), std::vector<Elem>(Pg.order(), kNoElem)};
  std::vector<Elem> syl;
  for (auto z : D.universe->sylow().members()) {
    sigma.image[z] = pg.pair(D.left[z], D.right[z]);
    syl.push_back(sigma.image[z]);
  }
  std::sort(syl.begin(), syl.end());
  auto U = Universe::create(pg.group, F1.prime(), Subgroup(syl, pg.group->order()));
  return fusion_of_group(U);
}

void expect_product_matches_group(const std::string &a, const std::string &b, std::size_t p)
{
  const auto &F1 = realized(a, p);
  const auto &F2 = realized(b, p);
  auto D = direct_product(F1, F2);
  GroupHom sigma;
  auto FG = product_group_system(D, F1, F2, sigma);
  EXPECT_TRUE(subsystem_equal(transport(D.system, FG.universe_ptr(), sigma), FG)) << a << " x " << b;
  EXPECT_TRUE(is_saturated(D.system));
  EXPECT_TRUE(is_central_product(D.system, D.hat1, D.hat2));
  EXPECT_TRUE(centralize_each_other(D.system, D.hat1, D.hat2));
}

} // namespace

TEST(Products, AbelianFactors)
{
  const auto &F1 = realized("C2", 2);
  const auto &F2 = realized("C4", 2);
  auto D = direct_product(F1, F2);
  EXPECT_EQ(D.universe->sylow().order(), 8u);
  EXPECT_TRUE(subsystem_equal(D.system, inner_system(D.universe, D.universe->top())));
}

TEST(Products, DirectProductMatchesGroupProduct)
{
  expect_product_matches_group("A4", "C2", 2);
  expect_product_matches_group("S4", "C2", 2);
  expect_product_matches_group("D8", "C2", 2);
  expect_product_matches_group("S3xS3", "C3xC3", 3);
  expect_product_matches_group("A4", "A4", 2);
}

TEST(Products, CorpusProductsAgainstFactors)
{
  // isomorphism invariants of F_S(G1 x G2) against F1 x F2
  for (auto [prod, a, b] : {std::tuple{"S4xC2", "S4", "C2"}, std::tuple{"D8xC2", "D8", "C2"},
                            std::tuple{"A4xA4", "A4", "A4"}}) {
    const auto &F = realized(prod, 2);
    auto D = direct_product(realized(a, 2), realized(b, 2));
    auto syl = as_group(F.universe().group(), F.universe().sylow());
    auto iso = find_isomorphism(D.universe->group(), *syl.group);
    ASSERT_TRUE(iso) << prod;
    EXPECT_EQ(F.morphism_count(), D.system.morphism_count()) << prod;
    EXPECT_EQ(generator_record(F).classes.size(), generator_record(D.system).classes.size()) << prod;
  }
}

TEST(Products, Projections)
{
  const auto &F1 = realized("S4", 2);
  const auto &F2 = realized("C2", 2);
  auto D = direct_product(F1, F2);
  const auto &Pg = D.universe->group();
  GroupHom left{D.universe->sylow(), std::vector<Elem>(Pg.order(), kNoElem)};
  GroupHom right = left;
  for (auto z : D.universe->sylow().members()) {
    left.image[z] = D.left[z];
    right.image[z] = D.right[z];
  }
  EXPECT_TRUE(induces_epimorphism(D.system, F1, left));
  EXPECT_TRUE(induces_epimorphism(D.system, F2, right));

  GroupHom id{F1.universe().sylow(), std::vector<Elem>(F1.universe().group().order(), kNoElem)};
  for (auto x : F1.universe().sylow().members())
    id.image[x] = x;
  auto fun = induces_morphism(F1, F1, id);
  ASSERT_TRUE(fun);
  EXPECT_TRUE(is_epimorphism(*fun, F1));
  EXPECT_EQ(fun->kernel, F1.universe().bottom());
}

TEST(Products, KernelMustBeStronglyClosed)
{
  // D8 -> D8/<(1,2),(3,4)>: the kernel is not strongly closed in F_{D8}(S4)
  auto &s4 = group("S4");
  const auto &F = realized("S4", 2);
  const auto &U = F.universe();
  const auto &G = U.group();
  auto K = parse_subgroup(s4, "gens:(1,2);(3,4)", 2);
  ASSERT_FALSE(is_strongly_closed(F, U.id_of(K)));
  auto emb = as_group(G, U.sylow());
  std::vector<Elem> loc;
  for (auto x : K.members())
    loc.push_back(emb.from_parent[x]);
  std::sort(loc.begin(), loc.end());
  auto q = quotient(*emb.group, Subgroup(loc, emb.group->order()));
  auto Uq = Universe::create(q.quotient, 2);
  auto Fq = inner_system(Uq, Uq->top());
  GroupHom alpha{U.sylow(), std::vector<Elem>(G.order(), kNoElem)};
  for (auto x : U.sylow().members())
    alpha.image[x] = q.projection(emb.from_parent[x]);
  EXPECT_FALSE(induces_morphism(F, Fq, alpha));
  // on the inner system the same map is fine
  auto I = inner_system(F.universe_ptr(), U.top());
  auto fun = induces_morphism(I, Fq, alpha);
  ASSERT_TRUE(fun);
  EXPECT_EQ(fun->kernel, U.id_of(K));
}

TEST(Products, CentralizeEachOtherExamples)
{
  auto &s4 = group("S4");
  const auto &F = realized("S4", 2);
  auto E = normal_subsystem_from_group(F, parse_subgroup(s4, "A4", 2));
  EXPECT_FALSE(centralize_each_other(F, E, E));
  EXPECT_FALSE(is_central_product(central_product_candidate(F, E, E), E, E));

  auto &q = group("Q8oC4");
  const auto &FQ = realized("Q8oC4", 2);
  auto I = inner_system(FQ.universe_ptr(), FQ.support());
  EXPECT_TRUE(subsystem_equal(FQ, I));
  auto F1 = inner_system(FQ.universe_ptr(), sub(FQ, q, "Q8"));
  auto F2 = inner_system(FQ.universe_ptr(), sub(FQ, q, "C4"));
  EXPECT_TRUE(centralize_each_other(FQ, F1, F2));
  auto P = central_product_subsystem(FQ, F1, F2);
  EXPECT_TRUE(subsystem_equal(P, I));
  auto cp = is_central_product(P, F1, F2);
  EXPECT_TRUE(cp) << cp.counterexample;
  // S1 n S2 = Z(Q8) has order 2
  EXPECT_EQ(FQ.universe().order(FQ.universe().meet(F1.support(), F2.support())), 2u);
}

TEST(Products, TrivialFactor)
{
  for (auto &[name, p] : small_entries()) {
    const auto &F = realized(name, p);
    for (auto &np : normal_pairs(F)) {
      auto triv = inner_system(F.universe_ptr(), F.universe().bottom());
      auto P = central_product_subsystem(F, triv, np.E);
      EXPECT_TRUE(subsystem_equal(P, np.E)) << name << " " << np.name;
    }
  }
}

TEST(Products, InnerSystemIsNotCentralProductOfFusedFactors)
{
  auto &g = group("S4xC2");
  const auto &F = realized("S4xC2", 2);
  auto F1 = normal_subsystem_from_group(F, parse_subgroup(g, "S4", 2));
  auto F2 = normal_subsystem_from_group(F, parse_subgroup(g, "C2", 2));
  auto inner = inner_system(F.universe_ptr(), F.support());
  EXPECT_FALSE(is_central_product(inner, F1, F2));
  auto P = central_product_subsystem(F, F1, F2);
  EXPECT_TRUE(subsystem_equal(P, F));
}

TEST(Products, CentralProductOfNormalFactorsOnCorpus)
{
  // P:F1F2Centralize and MainCentralProduct on every commuting pair of normal pairs
  for (auto name : {"Q8oC4", "A4xA4", "D8xC2", "S4xC2", "S3xS3", "C3xC3"}) {
    auto &g = group(name);
    for (auto p : g.primes) {
      const auto &F = realized(name, p);
      const auto &U = F.universe();
      auto pairs = normal_pairs(F);
      for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t j = i + 1; j < pairs.size(); ++j) {
          auto &E1 = pairs[i].E;
          auto &E2 = pairs[j].E;
          if (U.commutator(E1.support(), E2.support()) != U.bottom())
            continue;
          bool ce = centralize_each_other(F, E1, E2);
          auto D = central_product_candidate(F, E1, E2);
          EXPECT_EQ(ce, is_central_product(D, E1, E2).holds) << name << " " << pairs[i].name << "," << pairs[j].name;
          if (ce) {
            EXPECT_TRUE(is_saturated(D));
            EXPECT_TRUE(is_normal_subsystem(F, D)) << name << " " << pairs[i].name << "," << pairs[j].name;
          }
        }
    }
  }
}
