#pragma once

#include <optional>
#include <vector>

#include "fusion/centralizers.hpp"

namespace fusion {

/// F1 x F2 over S1 x S2, built on the concrete product of the supports.
struct DirectProduct {
  UniversePtr universe;
  FusionSystem system;
  FusionSystem hat1, hat2; // canonical images of F1 and F2
  SubId s1 = kNoSub, s2 = kNoSub;
  GroupHom iota1, iota2; // S_i -> S1 x S2, indexed by elements of the factor's ambient group
  std::vector<Elem> left, right; // product element -> element of the ambient group of F_i
};
/// Generated by phi1 x id and id x phi2 over the generator records.
DirectProduct direct_product(const FusionSystem &F1, const FusionSystem &F2);

/// The functor of a group homomorphism alpha: S -> S' (alpha indexed by
/// elements of the source ambient group, values in the target's).
struct InducedFunctor {
  GroupHom alpha;
  SubId kernel = kNoSub;  // ker(alpha) as a subgroup of the source Sylow
  SubId image = kNoSub;   // alpha(support of the source system)
  std::vector<std::vector<Morphism>> images; // the psi, indexed by target SubId, sorted
};

/// Present iff every phi of F admits psi in F' with (alpha|_P) psi = phi (alpha|_Q).
std::optional<InducedFunctor> induces_morphism(const FusionSystem &F, const FusionSystem &Fp,
                                               const GroupHom &alpha);
/// F^alpha = F': alpha maps the support of F onto that of F' and the
/// morphisms of F' are exactly the induced ones.
bool is_epimorphism(const InducedFunctor &fun, const FusionSystem &Fp);
bool induces_epimorphism(const FusionSystem &F, const FusionSystem &Fp, const GroupHom &alpha);

/// F_i contained in C_F(S_{3-i}) for i = 1, 2.
bool centralize_each_other(const FusionSystem &F, const FusionSystem &F1, const FusionSystem &F2);

/// Subsystem over S1S2 generated by the psi in Hom_F(P1P2, S1S2) whose
/// restrictions to P_i lie in F_i. No precondition.
FusionSystem central_product_candidate(const FusionSystem &F, const FusionSystem &F1,
                                       const FusionSystem &F2);
/// F1*F2; throws NotCentralizing unless the factors centralize each other and
/// TheoremViolation if the result is not a saturated central product.
FusionSystem central_product_subsystem(const FusionSystem &F, const FusionSystem &F1,
                                       const FusionSystem &F2);

/// x1 x2 on S1 x S2, for commuting S1, S2 of the universe of D.
GroupHom multiplication_map(const DirectProduct &P, const Universe &U);

/// D is the central product of F1 and F2: S1 n S2 <= Z(F_i), and the
/// multiplication map induces an epimorphism F1 x F2 -> D with each canonical
/// image mapped onto F_i.
ConditionResult is_central_product(const FusionSystem &D, const FusionSystem &F1,
                                   const FusionSystem &F2);

} // namespace fusion
