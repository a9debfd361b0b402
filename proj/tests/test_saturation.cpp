#include "support.hpp"

using namespace fusion;
using namespace fusion::test;

namespace {

struct S4Data {
  const GroupFile &g = group("S4");
  const FusionSystem &F = realized("S4", 2);
  const Universe &U = F.universe();
  SubId V = sub(F, g, "V4");
  Morphism phi = *conjugation(U, V, el(g, "(1,2,3)"));
};

/// <a -> b> over C2 x C2: one cross map between two subgroups of order 2.
FusionSystem cross_map_system(SubId *a_out = nullptr)
{
  auto &g = group("C2xC2");
  auto U = Universe::create(g.group, 2);
  std::vector<SubId> twos;
  for (SubId P = 0; P < U->size(); ++P)
    if (U->order(P) == 2)
      twos.push_back(P);
  Elem b = U->at(twos[1]).members()[1];
  auto m = make_morphism(*U, twos[0], {0, b});
  if (a_out)
    *a_out = twos[0];
  std::vector<Morphism> gens{m};
  return generate(U, U->top(), gens);
}

} // namespace

TEST(Saturation, RealizedSystemsAreSaturated)
{
  for (auto &g : corpus())
    for (auto p : g.primes) {
      auto r = check_saturation(realized(g.name, p));
      EXPECT_TRUE(r.saturated) << g.name << "@" << p << ": " << r.reason;
    }
}

TEST(Saturation, SmallExamples)
{
  auto &s4 = group("S4");
  const auto &F = realized("S4", 2);
  auto EA4 = realized_subsystem(F.universe_ptr(), parse_subgroup(s4, "A4", 2));
  EXPECT_TRUE(is_saturated(EA4));

  auto X = cross_map_system();
  auto r = check_saturation(X);
  EXPECT_FALSE(r.saturated);
  EXPECT_FALSE(r.reason.empty());
}

TEST(Saturation, ExtensionGroup)
{
  S4Data d;
  for (auto P : d.F.objects()) {
    auto id = identity_morphism(d.U, P);
    EXPECT_EQ(extension_group(d.F, id), d.U.normalizer(P));
    for (auto s : d.U.at(d.U.normalizer(P)).members())
      EXPECT_EQ(extension_group(d.F, *conjugation(d.U, P, s)), d.U.normalizer(P));
  }
  EXPECT_EQ(extension_group(d.F, d.phi), d.V);
}

TEST(Saturation, ExtendMorphism)
{
  S4Data d;
  for (auto P : d.F.objects()) {
    auto id = identity_morphism(d.U, P);
    auto e = extend_morphism(d.F, id, d.U.top());
    ASSERT_TRUE(e);
    EXPECT_TRUE(extends(d.U, *e, id));
  }

  // psi from a non-central involution of V4 onto Z(S)
  auto Q = d.U.center(d.U.top());
  auto P = sub(d.F, d.g, "gens:(1,3)(2,4)");
  ASSERT_NE(P, Q);
  std::optional<Morphism> psi;
  for (auto &m : d.F.isos(P))
    if (m.img == Q)
      psi = m;
  ASSERT_TRUE(psi);
  EXPECT_EQ(extension_group(d.F, *psi), d.V);
  auto e = extend_morphism(d.F, *psi, d.V);
  ASSERT_TRUE(e);
  EXPECT_EQ(e->dom, d.V);
  EXPECT_EQ(automorphism_order(d.U, *e), 3u);
  EXPECT_TRUE(extends(d.U, *e, *psi));

  SubId a;
  auto X = cross_map_system(&a);
  const auto &UX = X.universe();
  auto m = X.isos(a);
  ASSERT_EQ(m.size(), 2u);
  const auto &cross = m[0].img == a ? m[1] : m[0];
  EXPECT_EQ(extension_group(X, cross), UX.top());
  EXPECT_FALSE(extend_morphism(X, cross, UX.top()));
}

TEST(Saturation, ClassificationAgainstGroupOracle)
{
  for (auto &[name, p] : small_entries()) {
    const auto &F = realized(name, p);
    const auto &U = F.universe();
    const auto &G = U.group();
    auto cls = classify(F);
    for (auto P : F.objects()) {
      auto cl = F.conjugacy_class(P);
      std::size_t best = 0;
      bool centric = true;
      for (auto Q : cl) {
        best = std::max(best, U.order(U.normalizer(Q)));
        centric = centric && U.le(U.centralizer(Q), Q);
      }
      EXPECT_EQ(cls[P].fully_normalized, U.order(U.normalizer(P)) == best) << name << " " << U.describe(P);
      EXPECT_EQ(cls[P].centric, centric) << name << " " << U.describe(P);

      // Aut_F(P) = N_G(P)/C_G(P); radical iff O_p of it has the order of Inn(P)
      auto NG = normalizer(G, U.at(P));
      auto CG = centralizer(G, U.at(P));
      auto emb = as_group(G, NG);
      std::vector<Elem> loc;
      for (auto x : CG.members())
        loc.push_back(emb.from_parent[x]);
      std::sort(loc.begin(), loc.end());
      auto Q = quotient(*emb.group, Subgroup(loc, NG.order()));
      std::size_t inn = U.order(P) / U.order(U.center(P));
      EXPECT_EQ(F.automorphism_count(P), NG.order() / CG.order());
      EXPECT_EQ(cls[P].radical, o_p(*Q.quotient, p).order() == inn) << name << " " << U.describe(P);
    }
  }
}

TEST(Saturation, FlagsAreClassConsistent)
{
  for (auto &[name, p] : small_entries()) {
    const auto &F = realized(name, p);
    auto cls = classify(F);
    for (auto P : F.objects())
      for (auto Q : F.conjugacy_class(P)) {
        EXPECT_EQ(cls[P].centric, cls[Q].centric);
        EXPECT_EQ(cls[P].radical, cls[Q].radical);
        EXPECT_EQ(cls[P].centric_radical, cls[Q].centric_radical);
      }
    auto rep = [&](SubId P) { return fully_normalized_representative(F, P); };
    for (auto P : F.objects())
      EXPECT_TRUE(cls[rep(P)].fully_normalized);
  }
}

TEST(Saturation, ConjugationFamilies)
{
  S4Data d;
  auto all = d.F.objects();
  EXPECT_TRUE(is_conjugation_family(d.F, all));
  auto cls = classify(d.F);
  EXPECT_TRUE(is_conjugation_family(d.F, alperin_family(d.F, cls)));
  std::vector<SubId> zs{d.U.center(d.U.top())};
  EXPECT_FALSE(is_conjugation_family(d.F, zs));
}

TEST(Saturation, AlperinExamples)
{
  S4Data d;
  auto s = *conjugation(d.U, d.U.top(), el(d.g, "(1,2)"));
  auto inner = alperin_decompose(d.F, s);
  ASSERT_EQ(inner.size(), 1u);
  EXPECT_EQ(inner[0].R, d.U.top());

  auto P = sub(d.F, d.g, "gens:(1,2)(3,4)");
  auto Q = sub(d.F, d.g, "gens:(1,3)(2,4)");
  for (auto &m : d.F.isos(P))
    if (m.img == Q) {
      auto steps = alperin_decompose(d.F, m);
      ASSERT_EQ(steps.size(), 1u);
      EXPECT_EQ(steps[0].R, d.V);
      EXPECT_EQ(recompose(d.U, P, steps), m);
    }

  // a V4 map followed by an S-conjugation
  auto t = d.U.center(d.U.top());
  auto a = *conjugation(d.U, t, el(d.g, "(1,2,3)"));
  auto b = *conjugation(d.U, a.img, el(d.g, "(1,2)"));
  auto mixed = compose(d.U, a, b);
  auto steps = alperin_decompose(d.F, mixed);
  EXPECT_GE(steps.size(), 1u);
  EXPECT_EQ(recompose(d.U, t, steps), mixed);
}

TEST(Saturation, AlperinOnCorpus)
{
  for (auto &[name, p] : small_entries()) {
    const auto &F = realized(name, p);
    const auto &U = F.universe();
    auto cls = classify(F);
    auto fam = alperin_family(F, cls);
    for (auto R : fam)
      EXPECT_TRUE(cls[R].centric_radical && cls[R].fully_normalized);
    for (auto P : F.objects())
      for (auto &m : F.isos(P)) {
        auto steps = alperin_decompose(F, m);
        EXPECT_EQ(recompose(U, P, steps), m) << name;
        for (auto &st : steps)
          EXPECT_TRUE(std::find(fam.begin(), fam.end(), st.R) != fam.end());
      }
  }
}

TEST(Saturation, AlperinRefusesUnsaturated)
{
  SubId a;
  auto X = cross_map_system(&a);
  try {
    alperin_decompose(X, X.isos(a).back());
    ADD_FAILURE();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSaturated);
  }
}
