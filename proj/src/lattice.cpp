#include "fusion/lattice.hpp"

#include <algorithm>
#include <sstream>

#include "fusion/group_ops.hpp"

namespace fusion {

UniversePtr Universe::create(GroupPtr G, std::size_t p, const Limits &limits)
{
  auto S = sylow_subgroup(*G, p);
  return create(std::move(G), p, std::move(S), limits);
}

UniversePtr Universe::create(GroupPtr G, std::size_t p, Subgroup S, const Limits &limits)
{
  if (!is_prime(p))
    throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not a prime");
  if (G->order() > limits.group_order_cap)
    throw Error(ErrorCode::CapExceeded, "group order " + std::to_string(G->order()) +
                                            " exceeds cap " + std::to_string(limits.group_order_cap));
  if (!is_sylow(*G, S, p))
    throw Error(ErrorCode::NotSylow, "subgroup is not a Sylow " + std::to_string(p) + "-subgroup");

  std::shared_ptr<Universe> U(new Universe());
  U->group_ = G;
  U->prime_ = p;
  U->limits_ = limits;
  U->subs_ = subgroup_lattice(*G, S, limits);
  const std::size_t n = U->subs_.size();
  for (std::size_t i = 0; i < n; ++i)
    U->index_.emplace(U->subs_[i].mask(), SubId(i));

  U->below_.resize(n);
  U->maximal_.resize(n);
  U->gens_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      if (U->subs_[b].is_subset_of(U->subs_[a]))
        U->below_[a].push_back(SubId(b));
    U->gens_[a] = generating_set(*G, U->subs_[a]);
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (auto b : U->below_[a]) {
      if (b == a)
        continue;
      bool maximal = true;
      for (auto c : U->below_[a])
        if (c != a && c != b && U->order(c) > U->order(b) && U->le(b, c)) {
          maximal = false;
          break;
        }
      if (maximal)
        U->maximal_[a].push_back(b);
    }
  }

  const Subgroup &Sg = U->subs_.front();
  U->normalizer_.resize(n);
  U->centralizer_.resize(n);
  U->center_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    auto &gens = U->gens_[a];
    std::vector<Elem> nor, cen;
    for (auto s : Sg.members()) {
      bool normalizes = true, centralizes = true;
      for (auto x : gens) {
        Elem y = G->conj(x, s);
        if (y != x)
          centralizes = false;
        if (!U->subs_[a].contains(y)) {
          normalizes = false;
          break;
        }
      }
      if (normalizes)
        nor.push_back(s);
      if (normalizes && centralizes)
        cen.push_back(s);
    }
    U->normalizer_[a] = U->id_of(Subgroup(std::move(nor), G->order()));
    U->centralizer_[a] = U->id_of(Subgroup(std::move(cen), G->order()));
  }
  for (std::size_t a = 0; a < n; ++a)
    U->center_[a] = U->meet(SubId(a), U->centralizer_[a]);
  return U;
}

std::optional<SubId> Universe::find(const ElementSet &mask) const
{
  auto it = index_.find(mask);
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

SubId Universe::id_of(const ElementSet &mask) const
{
  auto id = find(mask);
  if (!id)
    throw Error(ErrorCode::DomainMismatch, "set is not a subgroup of the Sylow subgroup");
  return *id;
}

SubId Universe::generated(std::span<const Elem> gens) const
{
  return id_of(generate(*group_, gens));
}

SubId Universe::meet(SubId a, SubId b) const
{
  if (le(a, b))
    return a;
  if (le(b, a))
    return b;
  ElementSet m = subs_[a].mask();
  m &= subs_[b].mask();
  return id_of(m);
}

SubId Universe::join(SubId a, SubId b) const
{
  if (le(a, b))
    return b;
  if (le(b, a))
    return a;
  std::vector<Elem> gens = gens_[a];
  gens.insert(gens.end(), gens_[b].begin(), gens_[b].end());
  return generated(gens);
}

std::optional<SubId> Universe::conjugate(SubId a, Elem g) const
{
  ElementSet m(group_->order());
  for (auto x : subs_[a].members()) {
    Elem y = group_->conj(x, g);
    if (!sylow().contains(y))
      return std::nullopt;
    m.set(y);
  }
  return find(m);
}

SubId Universe::commutator(SubId a, SubId b) const
{
  std::vector<Elem> gens;
  for (auto x : subs_[a].members())
    for (auto y : subs_[b].members())
      gens.push_back(group_->comm(x, y));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return generated(gens);
}

std::string Universe::describe(SubId a) const
{
  std::ostringstream out;
  out << "#" << a << " order " << order(a) << " <";
  bool first = true;
  for (auto g : gens_[a]) {
    if (!first)
      out << ", ";
    out << group_->label(g);
    first = false;
  }
  out << ">";
  return out.str();
}

} // namespace fusion
