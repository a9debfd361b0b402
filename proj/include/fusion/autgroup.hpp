#pragma once

#include <span>
#include <vector>

#include "fusion/morphism.hpp"

namespace fusion {

/// A group of automorphisms of a subgroup P of S, realised as a permutation
/// group on the members of P so the group_ops toolkit applies to it.
class AutGroup {
public:
  /// Group generated by `autos` (all with dom == img == P).
  AutGroup(const Universe &U, SubId P, std::span<const Morphism> autos);

  const FiniteGroup &group() const { return *group_; }
  SubId object() const { return P_; }
  std::size_t order() const { return group_->order(); }

  Morphism morphism(Elem x) const;
  std::vector<Morphism> morphisms(const Subgroup &H) const;
  std::optional<Elem> find(const Morphism &m) const;
  /// Subgroup generated by the given automorphisms (all must lie in the group).
  Subgroup subgroup(std::span<const Morphism> autos) const;

private:
  const Universe *U_;
  SubId P_;
  std::shared_ptr<FiniteGroup> group_;
};

/// Inn-style automorphisms c_s|_P for s in N_R(P).
std::vector<Morphism> automorphisms_from(const Universe &U, SubId P, SubId R);

/// O^p of the group generated by autos (subgroup generated by p'-elements).
std::vector<Morphism> o_upper_p_of(const Universe &U, SubId P, std::span<const Morphism> autos);

/// Elementwise product A*B = {a o b}; both sets must be automorphism sets of P.
std::vector<Morphism> product_set(const Universe &U, std::span<const Morphism> A,
                                  std::span<const Morphism> B);

/// Sorted, deduplicated copy.
std::vector<Morphism> normalized(std::vector<Morphism> v);

/// Sub-multiset test on sorted vectors.
bool sorted_subset(std::span<const Morphism> small, std::span<const Morphism> big);

} // namespace fusion
