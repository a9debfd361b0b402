#include "fusion/models.hpp"

#include <algorithm>

#include "fusion/group_ops.hpp"

namespace fusion {

ConstrainedResult is_constrained(const FusionSystem &F)
{
  const auto &U = F.universe();
  SubId Q = largest_normal_subgroup(F);
  return {U.le(U.centralizer_in(Q, F.support()), Q), Q};
}

Subgroup Model::image(const Subgroup &P) const
{
  std::vector<Elem> out;
  for (auto x : P.members())
    out.push_back(sigma(x));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return Subgroup(std::move(out), group->order());
}

Model model_from(const FusionSystem &F, SubId Q)
{
  const auto &U = F.universe();
  const auto &G = U.group();
  if (!F.realizer())
    throw Error(ErrorCode::NotRealized, "fusion system has no realizing group");
  const SubId T = F.support();
  if (!is_normal_subgroup(F, Q) || !U.le(U.centralizer_in(Q, T), Q))
    throw Error(ErrorCode::NotConstrained, U.describe(Q) + " is not normal centric");

  Subgroup H = meet(G, *F.realizer(), normalizer(G, U.at(Q)));
  auto emb = as_group(G, H);
  auto K = o_p_prime(*emb.group, U.prime());
  auto q = quotient(*emb.group, K);

  Model m;
  m.group = q.quotient;
  m.sigma.domain = U.at(T);
  m.sigma.image.assign(G.order(), kNoElem);
  for (auto s : U.at(T).members())
    m.sigma.image[s] = q.projection(emb.from_parent[s]);
  m.provenance = "N_H(" + U.describe(Q) + ")/O_p'";

  auto S = m.image(U.at(T));
  if (S.order() != U.order(T))
    throw Error(ErrorCode::VerificationFailed, "support does not embed in the model");
  try {
    m.universe = Universe::create(m.group, U.prime(), S, U.limits());
  } catch (const Error &e) {
    if (e.code() != ErrorCode::NotSylow)
      throw;
    throw Error(ErrorCode::VerificationFailed, std::string("model: ") + e.what());
  }
  if (auto bad = verify_model(F, m))
    throw Error(ErrorCode::VerificationFailed, "model: " + *bad);
  return m;
}

Model model_of(const FusionSystem &F) { return model_from(F, largest_normal_subgroup(F)); }

std::optional<std::string> verify_model(const FusionSystem &F, const Model &m)
{
  const auto &U = F.universe();
  const auto &M = *m.group;
  const auto &T = U.at(F.support());
  auto S = m.image(T);
  if (S.order() != T.order())
    return "sigma is not injective";
  if (!(m.universe->sylow() == S) || p_part(M.order(), U.prime()) != S.order())
    return "sigma(T) is not a Sylow subgroup of M";
  if (!subsystem_equal(transport(F, m.universe, m.sigma), fusion_of_group(m.universe)))
    return "F_{sigma T}(M) differs from the image of F";
  auto Op = o_p(M, U.prime());
  if (!centralizer(M, Op).is_subset_of(Op))
    return "C_M(O_p(M)) is not contained in O_p(M)";
  return std::nullopt;
}

Subgroup normal_model(const Model &m, const FusionSystem &E)
{
  const auto &U = E.universe();
  const auto &M = *m.group;
  const auto &S = m.universe->sylow();
  auto TE = m.image(U.at(E.support()));
  auto target = transport(E, m.universe, m.sigma);
  std::optional<Subgroup> found;
  for (auto &N : normal_subgroups(M)) {
    if (p_part(N.order(), U.prime()) != TE.order() || !(meet(M, N, S) == TE))
      continue;
    if (!subsystem_equal(realized_subsystem(m.universe, N), target))
      continue;
    if (found)
      throw Error(ErrorCode::NotUnique, "several normal subgroups of the model realize E");
    found = N;
  }
  if (!found)
    throw Error(ErrorCode::NotFound, "no normal subgroup of the model realizes E");
  return *found;
}

FusionSystem script_g(const FusionSystem &F, const FusionSystem &E)
{
  const auto &U = F.universe();
  const SubId T = E.support();
  auto NT = normalizer_subsystem(F, T);
  SubId TC = U.join(T, U.centralizer_in(T, F.support()));
  return normalizer_subsystem(NT, TC);
}

bool models_isomorphic_over_support(const Model &m1, const Model &m2)
{
  if (m1.group->order() != m2.group->order() || !(m1.sigma.domain == m2.sigma.domain))
    return false;
  std::vector<std::pair<Elem, Elem>> fixed;
  for (auto s : m1.sigma.domain.members())
    fixed.emplace_back(m1.sigma(s), m2.sigma(s));
  return find_isomorphism(*m1.group, *m2.group, fixed).has_value();
}

} // namespace fusion
