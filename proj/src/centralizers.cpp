#include "fusion/centralizers.hpp"

#include <algorithm>

#include "fusion/autgroup.hpp"
#include "fusion/group_ops.hpp"

namespace fusion {

bool centralized_by(const FusionSystem &F, const FusionSystem &E, SubId X)
{
  return subsystem_contains(centralizer_subsystem(F, X), E);
}

std::vector<SubId> centralized_set(const FusionSystem &F, const FusionSystem &E)
{
  const auto &U = F.universe();
  std::vector<SubId> out;
  for (auto X : U.below(U.centralizer_in(E.support(), F.support())))
    if (centralized_by(F, E, X))
      out.push_back(X);
  return out;
}

std::vector<SubId> centralized_set_by_generators(const FusionSystem &F, const FusionSystem &E)
{
  const auto &U = F.universe();
  auto rec = generator_record(E);
  std::vector<Morphism> gens;
  for (auto &c : rec.classes) {
    gens.insert(gens.end(), c.aut_generators.begin(), c.aut_generators.end());
    gens.insert(gens.end(), c.bridges.begin(), c.bridges.end());
  }
  std::vector<SubId> out;
  for (auto X : U.below(U.centralizer_in(E.support(), F.support())))
    if (std::all_of(gens.begin(), gens.end(), [&](const Morphism &g) { return centralizes(F, g, X); }))
      out.push_back(X);
  return out;
}

SubId c_s_of(const FusionSystem &F, const FusionSystem &E, const std::vector<SubId> &xset)
{
  const auto &U = F.universe();
  SubId J = U.bottom();
  for (auto X : xset)
    J = U.join(J, X);
  if (!U.le(J, U.centralizer_in(E.support(), F.support())))
    throw Error(ErrorCode::InvalidArgument, "X contains a subgroup outside C_S(T)");
  if (std::find(xset.begin(), xset.end(), J) == xset.end())
    throw Error(ErrorCode::TheoremViolation, "join of X is not in X: " + U.describe(J));
  if (auto v = strong_closure_violation(F, J))
    throw Error(ErrorCode::TheoremViolation,
                "C_S(E) is not strongly closed: " + format_morphism(U, *v));
  return J;
}

SubId c_s_of(const FusionSystem &F, const FusionSystem &E)
{
  return c_s_of(F, E, centralized_set(F, E));
}

SubId center_of_system(const FusionSystem &F)
{
  const auto &U = F.universe();
  SubId J = U.bottom();
  bool any = false;
  for (auto X : U.below(U.center(F.support())))
    if (centralized_by(F, F, X)) {
      J = U.join(J, X);
      any = true;
    }
  if (!any || !centralized_by(F, F, J))
    throw Error(ErrorCode::TheoremViolation, "subgroups centralizing F have no largest member");
  return J;
}

bool in_center(const FusionSystem &F, SubId X)
{
  const auto &U = F.universe();
  return U.le(X, U.center(F.support())) && centralized_by(F, F, X);
}

std::vector<Morphism> a_circle(const FusionSystem &F, const FusionSystem &E, SubId P)
{
  const auto &U = F.universe();
  const auto &G = U.group();
  const SubId PT = U.meet(P, E.support());
  const auto &PTset = U.at(PT);
  const auto &mem = U.at(P).members();
  std::vector<Morphism> out;
  for (auto &phi : F.automorphisms(P)) {
    bool ok = true;
    for (std::size_t i = 0; i < mem.size() && ok; ++i)
      ok = PTset.contains(G.mul(G.inv(mem[i]), phi.map[i]));
    if (ok && E.contains(restrict(U, phi, PT)))
      out.push_back(phi);
  }
  return out;
}

std::vector<Morphism> h_group(const FusionSystem &F, const FusionSystem &E, SubId P)
{
  const auto &U = F.universe();
  SubId R = U.join(P, U.normalizer_in(P, E.support()));
  std::vector<Morphism> out;
  for (auto &psi : F.automorphisms(R))
    if (image_of(U, psi, P) == P)
      out.push_back(restrict(U, psi, P));
  return normalized(std::move(out));
}

FrattiniFactors frattini_factorize(const FusionSystem &F, const FusionSystem &E, SubId P,
                                   const Morphism &phi)
{
  const auto &U = F.universe();
  if (U.order(U.normalizer_in(P, F.support())) !=
      U.order(U.normalizer_in(fully_normalized_representative(F, P), F.support())))
    throw Error(ErrorCode::InvalidArgument, U.describe(P) + " is not fully normalized");
  if (phi.dom != P || phi.img != P || !F.contains(phi))
    throw Error(ErrorCode::InvalidArgument, "not an F-automorphism of " + U.describe(P));
  auto A = a_circle(F, E, P);
  for (auto &gamma : h_group(F, E, P)) {
    auto beta = compose(U, inverse(U, gamma), phi);
    if (std::binary_search(A.begin(), A.end(), beta))
      return {gamma, beta};
  }
  throw Error(ErrorCode::FactorizationMissing,
              "no factorization of " + format_morphism(U, phi) + " through H(P)A(P)");
}

std::vector<SubId> normal_centric_subgroups(const FusionSystem &F)
{
  const auto &U = F.universe();
  std::vector<SubId> out;
  for (auto Q : F.objects())
    if (U.le(U.centralizer_in(Q, F.support()), Q) && is_normal_subgroup(F, Q))
      out.push_back(Q);
  return out;
}

RStarData r_star(const FusionSystem &F, const FusionSystem &E, std::optional<SubId> Q)
{
  const auto &U = F.universe();
  const SubId T = E.support();
  RStarData d;
  d.script_g = script_g(F, E);
  d.model = Q ? model_from(d.script_g, *Q) : model_of(d.script_g);
  d.normal_model = normal_model(d.model, normalizer_subsystem(E, T));
  const auto &M = *d.model.group;
  ElementSet mask(U.group().order());
  for (auto s : U.at(d.script_g.support()).members()) {
    Elem x = d.model.sigma(s);
    bool central = true;
    for (auto n : d.normal_model.members())
      if (M.mul(x, n) != M.mul(n, x)) {
        central = false;
        break;
      }
    if (central)
      mask.set(s);
  }
  d.r_star = U.id_of(mask);
  return d;
}

SubId r_star_by_definition(const FusionSystem &F, const FusionSystem &E)
{
  const auto &U = F.universe();
  auto NE = normalizer_subsystem(E, E.support());
  SubId J = U.bottom();
  for (auto X : U.below(U.centralizer_in(E.support(), F.support())))
    if (centralized_by(F, NE, X))
      J = U.join(J, X);
  return J;
}

namespace {

SubId commutator_join(const FusionSystem &F, bool hyper)
{
  const auto &U = F.universe();
  const auto &G = U.group();
  ElementSet seen(G.order());
  std::vector<Elem> gens;
  for (auto P : F.objects()) {
    const auto &mem = U.at(P).members();
    auto auts = F.automorphisms(P);
    if (hyper)
      auts = o_upper_p_of(U, P, auts);
    for (auto &phi : auts)
      for (std::size_t i = 0; i < mem.size(); ++i) {
        Elem c = G.mul(G.inv(mem[i]), phi.map[i]);
        if (!seen.test(c)) {
          seen.set(c);
          gens.push_back(c);
        }
      }
  }
  return U.generated(gens);
}

} // namespace

SubId focal(const FusionSystem &F) { return commutator_join(F, false); }
SubId hyperfocal(const FusionSystem &F) { return commutator_join(F, true); }

FusionSystem c_F_of(const FusionSystem &F, const FusionSystem &E, SubId cse, bool verify)
{
  const auto &U = F.universe();
  auto CT = centralizer_subsystem(F, E.support());
  SubId foc = focal(CT);
  if (!U.le(foc, cse))
    throw Error(ErrorCode::TheoremViolation,
                "foc(C_F(T)) = " + U.describe(foc) + " is not contained in C_S(E)");
  std::vector<Morphism> gens;
  for (auto P : U.below(cse)) {
    auto op = o_upper_p_of(U, P, CT.automorphisms(P));
    gens.insert(gens.end(), op.begin(), op.end());
  }
  auto C = generated_subsystem(F, cse, gens);
  if (verify) {
    auto rep = normality(F, C);
    if (!rep.normal())
      throw Error(ErrorCode::TheoremViolation, "C_F(E) is not normal in F: " + rep.counterexample);
  }
  return C;
}

FusionSystem c_F_of(const FusionSystem &F, const FusionSystem &E, bool verify)
{
  return c_F_of(F, E, c_s_of(F, E), verify);
}

ConditionResult coincide_check(const FusionSystem &F, const FusionSystem &E, const FusionSystem &C)
{
  const auto &U = F.universe();
  const SubId cse = C.support();
  auto CT = centralizer_subsystem(F, E.support());
  auto cls = classify(C);
  for (auto P : C.objects()) {
    if (!cls[P].fully_normalized || !cls[P].centric)
      continue;
    auto rhs = normalized(product_set(U, o_upper_p_of(U, P, CT.automorphisms(P)),
                                      automorphisms_from(U, P, cse)));
    if (C.automorphisms(P) != rhs)
      return {false, "Aut_C(" + U.describe(P) + ") has " + std::to_string(C.automorphism_count(P)) +
                         " elements, O^p(Aut_{C_F(T)}) Aut_{C_S(E)} has " +
                         std::to_string(rhs.size())};
  }
  return {};
}

CentralizerData centralizer_data(const FusionSystem &F, const FusionSystem &E)
{
  CentralizerData d;
  d.E = E;
  d.xset = centralized_set(F, E);
  d.c_s_e = c_s_of(F, E, d.xset);
  if (F.realizer())
    d.r_star = r_star(F, E);
  d.c_f_e = c_F_of(F, E, d.c_s_e, true);
  return d;
}

} // namespace fusion
