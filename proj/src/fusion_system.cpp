#include "fusion/fusion_system.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "fusion/autgroup.hpp"
#include "fusion/group_ops.hpp"

namespace fusion {

// --- FusionSystem -------------------------------------------------------------

std::vector<Morphism> FusionSystem::hom_set(SubId P, SubId Q) const
{
  std::vector<Morphism> out;
  if (!is_object(P))
    return out;
  for (auto &m : isos(P))
    if (universe().le(m.img, Q))
      out.push_back(m);
  return out;
}

std::vector<Morphism> FusionSystem::automorphisms(SubId P) const
{
  std::vector<Morphism> out;
  if (!is_object(P))
    return out;
  // isos are sorted by image first, so automorphisms form one block
  auto &v = isos(P);
  auto lo = std::lower_bound(v.begin(), v.end(), P, [](const Morphism &m, SubId x) { return m.img < x; });
  for (auto it = lo; it != v.end() && it->img == P; ++it)
    out.push_back(*it);
  return out;
}

std::size_t FusionSystem::automorphism_count(SubId P) const
{
  if (!is_object(P))
    return 0;
  auto &v = isos(P);
  auto lo = std::lower_bound(v.begin(), v.end(), P, [](const Morphism &m, SubId x) { return m.img < x; });
  auto hi = std::upper_bound(v.begin(), v.end(), P, [](SubId x, const Morphism &m) { return x < m.img; });
  return std::size_t(hi - lo);
}

bool FusionSystem::contains(const Morphism &m) const
{
  if (m.dom >= data_->isos.size())
    return false;
  auto &v = data_->isos[m.dom];
  return std::binary_search(v.begin(), v.end(), m);
}

bool FusionSystem::maps_into(SubId P, SubId Q) const
{
  if (!is_object(P))
    return false;
  for (auto &m : isos(P))
    if (universe().le(m.img, Q))
      return true;
  return false;
}

std::vector<SubId> FusionSystem::conjugacy_class(SubId P) const
{
  std::vector<SubId> out;
  if (!is_object(P))
    return out;
  for (auto &m : isos(P))
    if (out.empty() || out.back() != m.img)
      out.push_back(m.img);
  return out;
}

std::size_t FusionSystem::morphism_count() const
{
  std::size_t n = 0;
  for (auto &v : data_->isos)
    n += v.size();
  return n;
}

std::optional<Elem> FusionSystem::witness(const Morphism &m) const
{
  if (!data_->realizer)
    return std::nullopt;
  const auto &U = universe();
  const auto &G = U.group();
  const auto &gens = U.generators(m.dom);
  for (auto g : data_->realizer->members()) {
    bool ok = true;
    for (auto x : gens)
      if (G.conj(x, g) != apply(U, m, x)) {
        ok = false;
        break;
      }
    if (ok)
      return g;
  }
  return std::nullopt;
}

FusionSystem FusionSystem::with_realizer(Subgroup H) const
{
  auto d = std::make_shared<Data>(*data_);
  d->realizer = std::move(H);
  FusionSystem F;
  F.data_ = std::move(d);
  return F;
}

FusionSystem make_system(UniversePtr U, SubId support, std::vector<std::vector<Morphism>> isos,
                         std::optional<Subgroup> realizer)
{
  auto d = std::make_shared<FusionSystem::Data>();
  isos.resize(U->size());
  for (std::size_t P = 0; P < isos.size(); ++P) {
    if (!U->le(SubId(P), support)) {
      if (!isos[P].empty())
        throw Error(ErrorCode::MorphismOutsideR, "morphism outside the support");
      continue;
    }
    isos[P] = normalized(std::move(isos[P]));
  }
  d->universe = std::move(U);
  d->support = support;
  d->isos = std::move(isos);
  d->realizer = std::move(realizer);
  FusionSystem F;
  F.data_ = std::move(d);
  return F;
}

// --- constructions -------------------------------------------------------------

namespace {

std::vector<std::vector<Morphism>> conjugation_maps(const Universe &U, SubId T,
                                                    const Subgroup &H)
{
  std::vector<std::vector<Morphism>> isos(U.size());
  const auto &G = U.group();
  const auto &Tm = U.at(T);
  for (auto P : U.below(T)) {
    const auto &mem = U.at(P).members();
    std::set<Morphism> found;
    for (auto g : H.members()) {
      std::vector<Elem> map;
      map.reserve(mem.size());
      ElementSet image(G.order());
      bool inside = true;
      for (auto x : mem) {
        Elem y = G.conj(x, g);
        if (!Tm.contains(y)) {
          inside = false;
          break;
        }
        map.push_back(y);
        image.set(y);
      }
      if (inside)
        found.insert(Morphism{P, U.id_of(image), std::move(map)});
    }
    isos[P].assign(found.begin(), found.end());
  }
  return isos;
}

} // namespace

FusionSystem fusion_of_group(UniversePtr U)
{
  auto all = whole_group(U->group());
  auto isos = conjugation_maps(*U, U->top(), all);
  return make_system(U, U->top(), std::move(isos), std::move(all));
}

FusionSystem realized_subsystem(UniversePtr U, const Subgroup &H)
{
  const auto &G = U->group();
  if (!is_subgroup(G, H.members()))
    throw Error(ErrorCode::NotAGroup, "realizing set is not a subgroup");
  auto T = meet(G, H, U->sylow());
  if (T.order() != p_part(H.order(), U->prime()))
    throw Error(ErrorCode::NotSylow, "S n H is not a Sylow subgroup of H");
  SubId t = U->id_of(T);
  auto isos = conjugation_maps(*U, t, H);
  return make_system(U, t, std::move(isos), H);
}

FusionSystem inner_system(UniversePtr U, SubId R)
{
  return generate(std::move(U), R, {});
}

FusionSystem generate(UniversePtr U, SubId R, std::span<const Morphism> gens)
{
  const Universe &u = *U;
  std::vector<std::set<Morphism>> out(u.size());
  std::vector<std::vector<const Morphism *>> into(u.size());
  std::deque<const Morphism *> work;

  auto add = [&](Morphism m) {
    auto [it, inserted] = out[m.dom].insert(std::move(m));
    if (inserted) {
      into[it->img].push_back(&*it);
      work.push_back(&*it);
    }
  };

  add(identity_morphism(u, R));
  for (auto r : u.generators(R))
    add(*conjugation(u, R, r));
  for (auto &g : gens) {
    if (g.dom >= u.size() || !u.le(g.dom, R) || !u.le(g.img, R))
      throw Error(ErrorCode::MorphismOutsideR, "generator " + format_morphism(u, g) +
                                                   " is not between subgroups of " + u.describe(R));
    add(g);
  }

  std::vector<const Morphism *> snapshot;
  while (!work.empty()) {
    const Morphism &phi = *work.front();
    work.pop_front();
    add(inverse(u, phi));
    for (auto M : u.maximal_below(phi.dom))
      add(restrict(u, phi, M));
    snapshot.clear();
    for (auto &psi : out[phi.img])
      snapshot.push_back(&psi);
    for (auto psi : snapshot)
      add(compose(u, phi, *psi));
    snapshot.assign(into[phi.dom].begin(), into[phi.dom].end());
    for (auto chi : snapshot)
      add(compose(u, *chi, phi));
  }

  std::vector<std::vector<Morphism>> isos(u.size());
  for (std::size_t P = 0; P < u.size(); ++P)
    isos[P].assign(out[P].begin(), out[P].end());
  return make_system(std::move(U), R, std::move(isos));
}

FusionSystem generated_subsystem(const FusionSystem &F, SubId R, std::span<const Morphism> gens)
{
  for (auto &g : gens) {
    if (!F.universe().le(g.dom, R) || !F.universe().le(g.img, R))
      throw Error(ErrorCode::MorphismOutsideR, "generator leaves " + F.universe().describe(R));
    if (!F.contains(g))
      throw Error(ErrorCode::InvalidArgument, "generator is not a morphism of the ambient system");
  }
  return generate(F.universe_ptr(), R, gens);
}

FusionSystem conjugate_subsystem(const FusionSystem &E, const Morphism &alpha)
{
  const auto &U = E.universe();
  if (alpha.dom != E.support())
    throw Error(ErrorCode::DomainMismatch, "conjugating map must be defined on the support");
  std::vector<std::vector<Morphism>> isos(U.size());
  for (auto P : E.objects())
    for (auto &phi : E.isos(P)) {
      auto m = conjugate_morphism(U, phi, alpha);
      isos[m.dom].push_back(std::move(m));
    }
  return make_system(E.universe_ptr(), alpha.img, std::move(isos));
}

bool subsystem_contains(const FusionSystem &outer, const FusionSystem &inner)
{
  if (outer.universe_ptr() != inner.universe_ptr())
    throw Error(ErrorCode::DomainMismatch, "systems live in different universes");
  if (!outer.universe().le(inner.support(), outer.support()))
    return false;
  for (auto P : inner.objects())
    if (!sorted_subset(inner.isos(P), outer.isos(P)))
      return false;
  return true;
}

bool subsystem_equal(const FusionSystem &a, const FusionSystem &b)
{
  if (a.universe_ptr() != b.universe_ptr())
    throw Error(ErrorCode::DomainMismatch, "systems live in different universes");
  if (a.support() != b.support())
    return false;
  for (auto P : a.objects())
    if (a.isos(P) != b.isos(P))
      return false;
  return true;
}

FusionSystem transport(const FusionSystem &F, UniversePtr target, const GroupHom &sigma)
{
  const auto &U = F.universe();
  const auto &V = *target;
  auto image_sub = [&](SubId P) {
    ElementSet m(V.group().order());
    for (auto x : U.at(P).members())
      m.set(sigma(x));
    return V.id_of(m);
  };
  std::vector<std::vector<Morphism>> isos(V.size());
  for (auto P : F.objects()) {
    SubId P2 = image_sub(P);
    const auto &D = V.at(P2);
    for (auto &phi : F.isos(P)) {
      Morphism m{P2, image_sub(phi.img), std::vector<Elem>(D.order())};
      const auto &mem = U.at(P).members();
      for (std::size_t i = 0; i < mem.size(); ++i)
        m.map[D.position(sigma(mem[i]))] = sigma(phi.map[i]);
      isos[P2].push_back(std::move(m));
    }
  }
  return make_system(std::move(target), image_sub(F.support()), std::move(isos));
}

std::optional<std::string> check_axioms(const FusionSystem &F)
{
  const auto &U = F.universe();
  const SubId T = F.support();
  for (std::size_t P = 0; P < U.size(); ++P)
    if (!U.le(SubId(P), T) && !F.isos(SubId(P)).empty())
      return "morphism on a subgroup outside the support: " + U.describe(SubId(P));
  for (auto P : F.objects()) {
    for (auto s : U.at(T).members()) {
      auto c = conjugation(U, P, s);
      if (!c || !F.contains(*c))
        return "missing inner map on " + U.describe(P);
    }
    for (auto &phi : F.isos(P)) {
      if (!U.le(phi.img, T))
        return "image outside the support: " + format_morphism(U, phi);
      if (!F.contains(inverse(U, phi)))
        return "missing inverse of " + format_morphism(U, phi);
      for (auto M : U.maximal_below(P))
        if (!F.contains(restrict(U, phi, M)))
          return "missing restriction of " + format_morphism(U, phi);
      for (auto &psi : F.isos(phi.img))
        if (!F.contains(compose(U, phi, psi)))
          return "missing composite of " + format_morphism(U, phi) + " and " +
                 format_morphism(U, psi);
    }
  }
  return std::nullopt;
}

GeneratorRecord generator_record(const FusionSystem &F)
{
  const auto &U = F.universe();
  GeneratorRecord rec;
  rec.support = F.support();
  std::vector<bool> done(U.size(), false);
  for (auto P : F.objects()) {
    if (done[P])
      continue;
    auto cls = F.conjugacy_class(P);
    // representative: largest normalizer in the support, then canonical order
    SubId rep = cls.front();
    for (auto Q : cls) {
      done[Q] = true;
      if (U.order(U.normalizer_in(Q, F.support())) > U.order(U.normalizer_in(rep, F.support())))
        rep = Q;
    }
    GeneratorRecord::ClassEntry entry;
    entry.representative = rep;
    auto auts = F.automorphisms(rep);
    AutGroup A(U, rep, auts);
    for (auto g : generating_set(A.group(), whole_group(A.group())))
      entry.aut_generators.push_back(A.morphism(g));
    std::sort(entry.aut_generators.begin(), entry.aut_generators.end());
    for (auto Q : cls) {
      if (Q == rep)
        continue;
      for (auto &m : F.isos(rep))
        if (m.img == Q) {
          entry.bridges.push_back(m);
          break;
        }
    }
    rec.classes.push_back(std::move(entry));
  }
  return rec;
}

FusionSystem from_generator_record(UniversePtr U, const GeneratorRecord &record)
{
  std::vector<Morphism> gens;
  for (auto &c : record.classes) {
    gens.insert(gens.end(), c.aut_generators.begin(), c.aut_generators.end());
    gens.insert(gens.end(), c.bridges.begin(), c.bridges.end());
  }
  return generate(std::move(U), record.support, gens);
}

FusionSystem attach_realizer_if_equal(const FusionSystem &D, const Subgroup &H)
{
  try {
    auto R = realized_subsystem(D.universe_ptr(), H);
    if (subsystem_equal(R, D))
      return D.with_realizer(H);
  } catch (const Error &e) {
    if (e.code() != ErrorCode::NotSylow)
      throw;
  }
  return D;
}

} // namespace fusion
