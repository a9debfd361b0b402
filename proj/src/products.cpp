#include "fusion/products.hpp"

#include <algorithm>
#include <set>

#include "fusion/autgroup.hpp"
#include "fusion/group_ops.hpp"

namespace fusion {

namespace {

std::vector<Morphism> record_generators(const FusionSystem &F)
{
  std::vector<Morphism> out;
  for (auto &c : generator_record(F).classes) {
    out.insert(out.end(), c.aut_generators.begin(), c.aut_generators.end());
    out.insert(out.end(), c.bridges.begin(), c.bridges.end());
  }
  return out;
}

ElementSet image_mask(const Universe &target, const GroupHom &alpha, const Subgroup &P)
{
  ElementSet mask(target.group().order());
  for (auto x : P.members())
    mask.set(alpha(x));
  return mask;
}

} // namespace

DirectProduct direct_product(const FusionSystem &F1, const FusionSystem &F2)
{
  const auto &U1 = F1.universe();
  const auto &U2 = F2.universe();
  if (U1.prime() != U2.prime())
    throw Error(ErrorCode::InvalidArgument, "factors over different primes");
  auto A1 = as_group(U1.group(), U1.at(F1.support()));
  auto A2 = as_group(U2.group(), U2.at(F2.support()));
  auto pg = direct_product(*A1.group, *A2.group, U1.limits());
  const auto &G = *pg.group;

  DirectProduct D;
  D.universe = Universe::create(pg.group, U1.prime(), whole_group(G), U1.limits());
  const auto &U = *D.universe;
  for (std::size_t z = 0; z < G.order(); ++z) {
    D.left.push_back(A1.to_parent[pg.left(Elem(z))]);
    D.right.push_back(A2.to_parent[pg.right(Elem(z))]);
  }

  // phi x id on P x S2 (side 0) or id x phi on S1 x P (side 1)
  auto lift = [&](const Morphism &phi, int side) {
    const auto &Uf = side == 0 ? U1 : U2;
    const auto &from = side == 0 ? A1.from_parent : A2.from_parent;
    const auto &P = Uf.at(phi.dom);
    ElementSet mask(G.order());
    for (std::size_t z = 0; z < G.order(); ++z) {
      Elem x = side == 0 ? D.left[z] : D.right[z];
      if (P.contains(x))
        mask.set(Elem(z));
    }
    SubId dom = U.id_of(mask);
    std::vector<Elem> map;
    for (auto z : U.at(dom).members()) {
      if (side == 0)
        map.push_back(pg.pair(from[apply(Uf, phi, D.left[z])], pg.right(z)));
      else
        map.push_back(pg.pair(pg.left(z), from[apply(Uf, phi, D.right[z])]));
    }
    return make_morphism(U, dom, std::move(map));
  };
  std::vector<Morphism> gens;
  for (auto &m : record_generators(F1))
    gens.push_back(lift(m, 0));
  for (auto &m : record_generators(F2))
    gens.push_back(lift(m, 1));
  D.system = generate(D.universe, U.top(), gens);

  auto embed = [&](const Universe &Uf, const Subgroup &S, const std::vector<Elem> &from, int side) {
    GroupHom h{S, std::vector<Elem>(Uf.group().order(), kNoElem)};
    for (auto x : S.members())
      h.image[x] = side == 0 ? pg.pair(from[x], G.identity()) : pg.pair(G.identity(), from[x]);
    return h;
  };
  D.iota1 = embed(U1, U1.at(F1.support()), A1.from_parent, 0);
  D.iota2 = embed(U2, U2.at(F2.support()), A2.from_parent, 1);
  D.s1 = U.id_of(image_mask(U, D.iota1, D.iota1.domain));
  D.s2 = U.id_of(image_mask(U, D.iota2, D.iota2.domain));
  D.hat1 = transport(F1, D.universe, D.iota1);
  D.hat2 = transport(F2, D.universe, D.iota2);
  return D;
}

std::optional<InducedFunctor> induces_morphism(const FusionSystem &F, const FusionSystem &Fp,
                                               const GroupHom &alpha)
{
  const auto &Us = F.universe();
  const auto &Ut = Fp.universe();
  const auto &H = Ut.group();
  InducedFunctor fun;
  fun.alpha = alpha;
  fun.images.resize(Ut.size());
  {
    ElementSet k(Us.group().order());
    for (auto s : Us.at(F.support()).members())
      if (alpha(s) == H.identity())
        k.set(s);
    fun.kernel = Us.id_of(k);
  }
  const auto &K = Us.at(fun.kernel);
  std::vector<Elem> pre(H.order(), kNoElem);
  for (auto P : F.objects()) {
    const auto &Pm = Us.at(P).members();
    auto found = Ut.find(image_mask(Ut, alpha, Us.at(P)));
    if (!found || !Ut.le(*found, Fp.support()))
      return std::nullopt;
    SubId AP = *found;
    if (P == F.support())
      fun.image = AP;
    for (auto x : Pm)
      pre[alpha(x)] = x;
    for (auto &phi : F.isos(P)) {
      bool ok = true;
      for (std::size_t i = 0; i < Pm.size() && ok; ++i)
        if (K.contains(Pm[i]))
          ok = K.contains(phi.map[i]);
      if (!ok)
        return std::nullopt;
      std::vector<Elem> map;
      ElementSet hit(H.order());
      for (auto y : Ut.at(AP).members()) {
        Elem v = alpha(apply(Us, phi, pre[y]));
        if (hit.test(v))
          return std::nullopt; // psi not injective
        hit.set(v);
        map.push_back(v);
      }
      auto psi = make_morphism(Ut, AP, std::move(map));
      if (!Fp.contains(psi))
        return std::nullopt;
      fun.images[AP].push_back(std::move(psi));
    }
  }
  for (auto &v : fun.images)
    v = normalized(std::move(v));
  return fun;
}

bool is_epimorphism(const InducedFunctor &fun, const FusionSystem &Fp)
{
  if (fun.image != Fp.support())
    return false;
  for (auto Q : Fp.objects())
    if (fun.images[Q] != Fp.isos(Q))
      return false;
  return true;
}

bool induces_epimorphism(const FusionSystem &F, const FusionSystem &Fp, const GroupHom &alpha)
{
  auto fun = induces_morphism(F, Fp, alpha);
  return fun && is_epimorphism(*fun, Fp);
}

bool centralize_each_other(const FusionSystem &F, const FusionSystem &F1, const FusionSystem &F2)
{
  return subsystem_contains(centralizer_subsystem(F, F2.support()), F1) &&
         subsystem_contains(centralizer_subsystem(F, F1.support()), F2);
}

FusionSystem central_product_candidate(const FusionSystem &F, const FusionSystem &F1,
                                       const FusionSystem &F2)
{
  const auto &U = F.universe();
  const SubId S1 = F1.support(), S2 = F2.support();
  const SubId T = U.join(S1, S2);
  std::set<Morphism> gens;
  for (auto P1 : U.below(S1))
    for (auto P2 : U.below(S2)) {
      SubId R = U.join(P1, P2);
      for (auto &psi : F.isos(R))
        if (U.le(psi.img, T) && F1.contains(restrict(U, psi, P1)) &&
            F2.contains(restrict(U, psi, P2)))
          gens.insert(psi);
    }
  std::vector<Morphism> list(gens.begin(), gens.end());
  return generated_subsystem(F, T, list);
}

FusionSystem central_product_subsystem(const FusionSystem &F, const FusionSystem &F1,
                                       const FusionSystem &F2)
{
  if (!centralize_each_other(F, F1, F2))
    throw Error(ErrorCode::NotCentralizing, "the factors do not centralize each other");
  auto D = central_product_candidate(F, F1, F2);
  if (auto sat = check_saturation(D); !sat)
    throw Error(ErrorCode::TheoremViolation, "F1*F2 is not saturated: " + sat.reason);
  if (auto c = is_central_product(D, F1, F2); !c)
    throw Error(ErrorCode::TheoremViolation, "F1*F2 is not a central product: " + c.counterexample);
  return D;
}

GroupHom multiplication_map(const DirectProduct &P, const Universe &U)
{
  const auto &G = U.group();
  const auto &Pg = P.universe->group();
  GroupHom h{whole_group(Pg), std::vector<Elem>(Pg.order())};
  for (std::size_t z = 0; z < Pg.order(); ++z)
    h.image[z] = G.mul(P.left[z], P.right[z]);
  return h;
}

ConditionResult is_central_product(const FusionSystem &D, const FusionSystem &F1,
                                   const FusionSystem &F2)
{
  const auto &U = D.universe();
  const SubId S1 = F1.support(), S2 = F2.support();
  if (U.commutator(S1, S2) != U.bottom())
    return {false, "[S1,S2] != 1"};
  if (D.support() != U.join(S1, S2))
    return {false, "support is not S1 S2"};
  SubId I = U.meet(S1, S2);
  if (!in_center(F1, I))
    return {false, "S1 n S2 is not in Z(F1)"};
  if (!in_center(F2, I))
    return {false, "S1 n S2 is not in Z(F2)"};
  auto P = direct_product(F1, F2);
  auto alpha = multiplication_map(P, U);
  auto fun = induces_morphism(P.system, D, alpha);
  if (!fun)
    return {false, "multiplication does not induce a morphism F1 x F2 -> D"};
  if (!is_epimorphism(*fun, D))
    return {false, "multiplication does not induce an epimorphism F1 x F2 -> D"};
  if (!induces_epimorphism(P.hat1, F1, alpha))
    return {false, "image of the first canonical factor is not F1"};
  if (!induces_epimorphism(P.hat2, F2, alpha))
    return {false, "image of the second canonical factor is not F2"};
  return {};
}

} // namespace fusion
