#include "fusion/autgroup.hpp"

#include <algorithm>

#include "fusion/group_ops.hpp"

namespace fusion {

namespace {

Permutation as_permutation(const Universe &U, const Morphism &m)
{
  const auto &P = U.at(m.dom);
  Permutation perm(m.map.size());
  for (std::size_t i = 0; i < m.map.size(); ++i)
    perm[i] = std::uint16_t(P.position(m.map[i]));
  return perm;
}

// Automorphism groups of p-subgroups at desk scale stay far below this.
constexpr std::size_t kAutGroupCap = 5000;

} // namespace

AutGroup::AutGroup(const Universe &U, SubId P, std::span<const Morphism> autos)
: U_(&U), P_(P)
{
  std::vector<Permutation> gens;
  for (auto &a : autos) {
    if (a.dom != P || a.img != P)
      throw Error(ErrorCode::DomainMismatch, "automorphism group element is not an automorphism of P");
    gens.push_back(as_permutation(U, a));
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (gens.empty()) {
    Permutation id(U.order(P));
    for (std::size_t i = 0; i < id.size(); ++i)
      id[i] = std::uint16_t(i);
    gens.push_back(id);
  }
  Limits lim;
  lim.group_order_cap = kAutGroupCap;
  group_ = std::make_shared<FiniteGroup>(FiniteGroup::from_permutations(gens, lim));
}

Morphism AutGroup::morphism(Elem x) const
{
  const auto &perm = group_->permutation(x);
  const auto &P = U_->at(P_);
  Morphism m{P_, P_, {}};
  m.map.reserve(perm.size());
  for (auto i : perm)
    m.map.push_back(P.members()[i]);
  return m;
}

std::vector<Morphism> AutGroup::morphisms(const Subgroup &H) const
{
  std::vector<Morphism> out;
  for (auto x : H.members())
    out.push_back(morphism(x));
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Elem> AutGroup::find(const Morphism &m) const
{
  if (m.dom != P_ || m.img != P_)
    return std::nullopt;
  return group_->find_permutation(as_permutation(*U_, m));
}

Subgroup AutGroup::subgroup(std::span<const Morphism> autos) const
{
  std::vector<Elem> gens;
  for (auto &a : autos) {
    auto x = find(a);
    if (!x)
      throw Error(ErrorCode::DomainMismatch, "automorphism outside the ambient automorphism group");
    gens.push_back(*x);
  }
  return generate(*group_, gens);
}

std::vector<Morphism> automorphisms_from(const Universe &U, SubId P, SubId R)
{
  std::vector<Morphism> out;
  SubId N = U.normalizer_in(P, R);
  for (auto s : U.at(N).members())
    out.push_back(*conjugation(U, P, s));
  return normalized(std::move(out));
}

std::vector<Morphism> o_upper_p_of(const Universe &U, SubId P, std::span<const Morphism> autos)
{
  AutGroup A(U, P, autos);
  return A.morphisms(o_upper_p(A.group(), U.prime()));
}

std::vector<Morphism> product_set(const Universe &U, std::span<const Morphism> A,
                                  std::span<const Morphism> B)
{
  std::vector<Morphism> out;
  for (auto &a : A)
    for (auto &b : B)
      out.push_back(compose(U, a, b));
  return normalized(std::move(out));
}

std::vector<Morphism> normalized(std::vector<Morphism> v)
{
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool sorted_subset(std::span<const Morphism> small, std::span<const Morphism> big)
{
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

} // namespace fusion
