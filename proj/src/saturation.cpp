#include "fusion/saturation.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "fusion/autgroup.hpp"
#include "fusion/group_ops.hpp"

namespace fusion {

std::vector<Morphism> inner_automorphisms(const FusionSystem &F, SubId P)
{
  return automorphisms_from(F.universe(), P, F.support());
}

Classification classify(const FusionSystem &F)
{
  const auto &U = F.universe();
  const SubId T = F.support();
  Classification out;
  out.flags.resize(U.size());
  std::vector<bool> done(U.size(), false);
  for (auto P : F.objects()) {
    if (done[P])
      continue;
    auto cls = F.conjugacy_class(P);
    std::size_t best_n = 0, best_c = 0;
    bool centric = true;
    for (auto Q : cls) {
      done[Q] = true;
      best_n = std::max(best_n, U.order(U.normalizer_in(Q, T)));
      best_c = std::max(best_c, U.order(U.centralizer_in(Q, T)));
      if (!U.le(U.centralizer_in(Q, T), Q))
        centric = false;
    }
    for (auto Q : cls) {
      auto &f = out.flags[Q];
      std::size_t n = U.order(U.normalizer_in(Q, T));
      std::size_t c = U.order(U.centralizer_in(Q, T));
      auto auts = F.automorphisms(Q);
      f.fully_normalized = n == best_n;
      f.fully_centralized = c == best_c;
      f.fully_automized = p_part(auts.size(), U.prime()) == n / c;
      f.centric = centric;
      AutGroup A(U, Q, auts);
      auto op = A.morphisms(o_p(A.group(), U.prime()));
      f.radical = op == automorphisms_from(U, Q, Q);
      f.centric_radical = f.centric && f.radical;
    }
  }
  return out;
}

SubId fully_normalized_representative(const FusionSystem &F, SubId P)
{
  const auto &U = F.universe();
  SubId best = kNoSub;
  std::size_t best_n = 0;
  for (auto Q : F.conjugacy_class(P)) {
    std::size_t n = U.order(U.normalizer_in(Q, F.support()));
    if (best == kNoSub || n > best_n) {
      best = Q;
      best_n = n;
    }
  }
  return best;
}

SubId extension_group(const FusionSystem &F, const Morphism &phi)
{
  const auto &U = F.universe();
  const SubId T = F.support();
  auto target = automorphisms_from(U, phi.img, T);
  ElementSet mask(U.group().order());
  for (auto g : U.at(U.normalizer_in(phi.dom, T)).members()) {
    auto c = conjugation(U, phi.dom, g);
    auto twisted = conjugate_morphism(U, *c, phi);
    if (std::binary_search(target.begin(), target.end(), twisted))
      mask.set(g);
  }
  return U.id_of(mask);
}

bool extends(const Universe &U, const Morphism &psi, const Morphism &phi)
{
  const auto &mem = U.at(phi.dom).members();
  for (std::size_t i = 0; i < mem.size(); ++i)
    if (apply(U, psi, mem[i]) != phi.map[i])
      return false;
  return true;
}

std::optional<Morphism> extend_morphism(const FusionSystem &F, const Morphism &phi, SubId U)
{
  const auto &u = F.universe();
  if (!u.le(phi.dom, U) || !F.is_object(U))
    return std::nullopt;
  for (auto &psi : F.isos(U))
    if (extends(u, psi, phi))
      return psi;
  return std::nullopt;
}

SaturationResult check_saturation(const FusionSystem &F)
{
  const auto &U = F.universe();
  auto cls = classify(F);
  SaturationResult r;
  for (auto P : F.objects()) {
    const auto &f = cls[P];
    if (f.fully_normalized && !(f.fully_automized && f.fully_centralized)) {
      r.saturated = false;
      r.subgroup = P;
      r.reason = std::string("Sylow axiom fails: fully normalized ") + U.describe(P) + " is not " +
                 (f.fully_automized ? "fully centralized" : "fully automized");
      return r;
    }
  }
  for (auto P : F.objects())
    for (auto &phi : F.isos(P)) {
      if (!cls[phi.img].fully_centralized)
        continue;
      SubId N = extension_group(F, phi);
      if (!extend_morphism(F, phi, N)) {
        r.saturated = false;
        r.subgroup = N;
        r.morphism = phi;
        r.reason = "extension axiom fails: " + format_morphism(U, phi) + " does not extend to " +
                   U.describe(N);
        return r;
      }
    }
  return r;
}

bool is_saturated(const FusionSystem &F) { return check_saturation(F).saturated; }

Morphism recompose(const Universe &U, SubId P, const Factorization &steps)
{
  Morphism acc = identity_morphism(U, P);
  for (auto &s : steps)
    acc = compose(U, acc, restrict(U, s.automorphism, acc.img));
  return acc;
}

namespace {

struct Move {
  Morphism map; // restriction of the automorphism to the current subgroup
  SubId R;
  const Morphism *automorphism;
};

// Distinct restrictions to Q of automorphisms of family members containing Q.
const std::vector<Move> &moves_from(const FusionSystem &F, std::span<const SubId> family, SubId Q,
                                    std::map<SubId, std::vector<Move>> &cache,
                                    std::map<SubId, std::vector<Morphism>> &auts)
{
  auto it = cache.find(Q);
  if (it != cache.end())
    return it->second;
  const auto &U = F.universe();
  std::vector<Move> out;
  std::set<Morphism> seen;
  for (auto R : family) {
    if (!U.le(Q, R))
      continue;
    auto ait = auts.find(R);
    if (ait == auts.end())
      ait = auts.emplace(R, F.automorphisms(R)).first;
    for (auto &a : ait->second) {
      auto m = restrict(U, a, Q);
      if (seen.insert(m).second)
        out.push_back({std::move(m), R, &a});
    }
  }
  return cache.emplace(Q, std::move(out)).first->second;
}

struct Node {
  Morphism acc;
  std::size_t parent;
  FactorStep step;
};

} // namespace

std::optional<Factorization> factorize(const FusionSystem &F, std::span<const SubId> family,
                                       const Morphism &phi)
{
  const auto &U = F.universe();
  std::map<SubId, std::vector<Move>> cache;
  std::map<SubId, std::vector<Morphism>> auts;
  std::vector<Node> nodes;
  std::set<Morphism> seen;
  nodes.push_back({identity_morphism(U, phi.dom), 0, {}});
  seen.insert(nodes[0].acc);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].acc == phi) {
      Factorization out;
      for (std::size_t j = i; j != 0; j = nodes[j].parent)
        out.push_back(nodes[j].step);
      std::reverse(out.begin(), out.end());
      return out;
    }
    SubId cur = nodes[i].acc.img;
    for (auto &mv : moves_from(F, family, cur, cache, auts)) {
      auto next = compose(U, nodes[i].acc, mv.map);
      if (!seen.insert(next).second)
        continue;
      FactorStep step{mv.R, *mv.automorphism, cur, mv.map.img};
      nodes.push_back({std::move(next), i, std::move(step)});
    }
  }
  return std::nullopt;
}

bool is_conjugation_family(const FusionSystem &F, std::span<const SubId> family)
{
  const auto &U = F.universe();
  std::map<SubId, std::vector<Move>> cache;
  std::map<SubId, std::vector<Morphism>> auts;
  for (auto P : F.objects()) {
    std::set<Morphism> seen{identity_morphism(U, P)};
    std::deque<Morphism> work{identity_morphism(U, P)};
    while (!work.empty()) {
      auto acc = std::move(work.front());
      work.pop_front();
      for (auto &mv : moves_from(F, family, acc.img, cache, auts)) {
        auto next = compose(U, acc, mv.map);
        if (seen.insert(next).second)
          work.push_back(std::move(next));
      }
    }
    if (seen.size() != F.isos(P).size())
      return false;
  }
  return true;
}

std::vector<SubId> alperin_family(const FusionSystem &F, const Classification &cls)
{
  std::vector<SubId> out;
  for (auto P : F.objects())
    if (cls[P].centric_radical && cls[P].fully_normalized)
      out.push_back(P);
  return out;
}

Factorization alperin_decompose(const FusionSystem &F, const Morphism &phi)
{
  if (!F.contains(phi))
    throw Error(ErrorCode::InvalidArgument, "morphism is not in the fusion system");
  auto sat = check_saturation(F);
  if (!sat)
    throw Error(ErrorCode::NotSaturated, sat.reason);
  auto family = alperin_family(F, classify(F));
  auto f = factorize(F, family, phi);
  if (!f)
    throw Error(ErrorCode::TheoremViolation,
                "no factorization through centric radical fully normalized subgroups");
  return *f;
}

} // namespace fusion
