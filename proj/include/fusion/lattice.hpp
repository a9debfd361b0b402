#pragma once

#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "fusion/group.hpp"

namespace fusion {

/// Index of a subgroup of S inside a Universe (canonical lattice order, so
/// 0 is S itself and the last index is the trivial subgroup).
using SubId = std::uint32_t;
inline constexpr SubId kNoSub = ~SubId{0};

/// The ambient data every fusion system lives on: a finite group G, a prime
/// p, a Sylow p-subgroup S of G and the full lattice of subgroups of S with
/// precomputed normalizers and centralizers in S.
class Universe {
public:
  static std::shared_ptr<const Universe> create(GroupPtr G, std::size_t p,
                                                const Limits &limits = {});
  /// Throws NotSylow unless S is a Sylow p-subgroup of G.
  static std::shared_ptr<const Universe> create(GroupPtr G, std::size_t p, Subgroup S,
                                                const Limits &limits = {});

  const FiniteGroup &group() const noexcept { return *group_; }
  const GroupPtr &group_ptr() const noexcept { return group_; }
  std::size_t prime() const noexcept { return prime_; }
  const Limits &limits() const noexcept { return limits_; }

  std::size_t size() const noexcept { return subs_.size(); }
  const Subgroup &at(SubId id) const { return subs_.at(id); }
  const Subgroup &sylow() const { return subs_.front(); }
  SubId top() const noexcept { return 0; }
  SubId bottom() const noexcept { return SubId(subs_.size() - 1); }

  std::optional<SubId> find(const ElementSet &mask) const;
  /// Throws DomainMismatch when the set is not a subgroup of S.
  SubId id_of(const ElementSet &mask) const;
  SubId id_of(const Subgroup &H) const { return id_of(H.mask()); }
  SubId generated(std::span<const Elem> gens) const;

  bool le(SubId a, SubId b) const { return subs_[a].is_subset_of(subs_[b]); }
  std::size_t order(SubId a) const { return subs_[a].order(); }
  /// All subgroups of a (including a), canonical order.
  const std::vector<SubId> &below(SubId a) const { return below_[a]; }
  const std::vector<SubId> &maximal_below(SubId a) const { return maximal_[a]; }
  const std::vector<Elem> &generators(SubId a) const { return gens_[a]; }

  SubId normalizer(SubId a) const { return normalizer_[a]; }   // N_S(a)
  SubId centralizer(SubId a) const { return centralizer_[a]; } // C_S(a)
  SubId center(SubId a) const { return center_[a]; }           // Z(a)

  SubId meet(SubId a, SubId b) const;
  SubId join(SubId a, SubId b) const;
  /// P^g for g in G; empty when the conjugate leaves S.
  std::optional<SubId> conjugate(SubId a, Elem g) const;
  /// N_b(a) and C_b(a) for subgroups a, b of S.
  SubId normalizer_in(SubId a, SubId b) const { return meet(normalizer_[a], b); }
  SubId centralizer_in(SubId a, SubId b) const { return meet(centralizer_[a], b); }
  bool normalizes(SubId b, SubId a) const { return le(b, normalizer_[a]); } // b <= N(a)
  bool is_normal_in(SubId a, SubId b) const { return le(a, b) && normalizes(b, a); }

  /// [a,b] as a subgroup of S.
  SubId commutator(SubId a, SubId b) const;

  std::string describe(SubId a) const;

private:
  Universe() = default;

  GroupPtr group_;
  std::size_t prime_ = 0;
  Limits limits_;
  std::vector<Subgroup> subs_;
  std::unordered_map<ElementSet, SubId, ElementSetHash> index_;
  std::vector<std::vector<SubId>> below_, maximal_;
  std::vector<std::vector<Elem>> gens_;
  std::vector<SubId> normalizer_, centralizer_, center_;
};

using UniversePtr = std::shared_ptr<const Universe>;

} // namespace fusion
