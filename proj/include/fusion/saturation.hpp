#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fusion/fusion_system.hpp"

namespace fusion {

struct SubgroupFlags {
  bool fully_normalized = false;
  bool fully_centralized = false;
  bool fully_automized = false;
  bool centric = false;
  bool radical = false;
  bool centric_radical = false;
};

/// Flags for every subgroup of the support (indexed by SubId; entries for
/// subgroups outside the support stay all-false).
struct Classification {
  std::vector<SubgroupFlags> flags;
  const SubgroupFlags &operator[](SubId P) const { return flags.at(P); }
};

Classification classify(const FusionSystem &F);

/// Member of the class of P with the largest normalizer in the support,
/// ties broken by canonical order.
SubId fully_normalized_representative(const FusionSystem &F, SubId P);

/// Aut_T(P) for T the support of F.
std::vector<Morphism> inner_automorphisms(const FusionSystem &F, SubId P);

/// N_phi = {g in N_T(P) : phi^-1 c_g phi in Aut_T(P^phi)}.
SubId extension_group(const FusionSystem &F, const Morphism &phi);

/// Some psi in F defined on U with psi|_P = phi.
std::optional<Morphism> extend_morphism(const FusionSystem &F, const Morphism &phi, SubId U);

/// psi restricted to phi.dom equals phi (psi.dom must contain phi.dom).
bool extends(const Universe &U, const Morphism &psi, const Morphism &phi);

struct SaturationResult {
  bool saturated = true;
  std::string reason;
  SubId subgroup = kNoSub;
  std::optional<Morphism> morphism;
  explicit operator bool() const { return saturated; }
};

/// Sylow axiom on every fully normalized subgroup and extension axiom on every
/// isomorphism onto a fully centralized subgroup.
SaturationResult check_saturation(const FusionSystem &F);
bool is_saturated(const FusionSystem &F);

struct FactorStep {
  SubId R = kNoSub;
  Morphism automorphism; // in Aut_F(R)
  SubId from = kNoSub;   // P_{i-1}
  SubId to = kNoSub;     // P_i
};
using Factorization = std::vector<FactorStep>;

/// phi_1|_{P_0} o ... o phi_k|_{P_{k-1}} as a map on P_0.
Morphism recompose(const Universe &U, SubId P, const Factorization &steps);

/// Breadth-first search for a shortest factorization of phi through
/// automorphisms of family members; family is searched in the given order.
std::optional<Factorization> factorize(const FusionSystem &F, std::span<const SubId> family,
                                       const Morphism &phi);

/// Every morphism of F factors through the family.
bool is_conjugation_family(const FusionSystem &F, std::span<const SubId> family);

/// F^cr n F^f in canonical order.
std::vector<SubId> alperin_family(const FusionSystem &F, const Classification &cls);

/// Factorization through F^cr n F^f. Throws NotSaturated unless F is
/// saturated.
Factorization alperin_decompose(const FusionSystem &F, const Morphism &phi);

} // namespace fusion
