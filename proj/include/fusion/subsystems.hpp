#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fusion/saturation.hpp"

namespace fusion {

/// A morphism of F on a subgroup of T whose image leaves T.
std::optional<Morphism> strong_closure_violation(const FusionSystem &F, SubId T);
bool is_strongly_closed(const FusionSystem &F, SubId T);
bool is_weakly_closed(const FusionSystem &F, SubId T);

/// C_F(X): restrictions to P <= C_T(X) of the isomorphisms of F on PX that fix
/// X pointwise (T the support of F).
FusionSystem centralizer_subsystem(const FusionSystem &F, SubId X);
/// N_F(Q) over N_T(Q): restrictions of isomorphisms on PQ mapping Q onto Q.
/// When F has a realizer H, N_H(Q) is attached if it realizes the result.
FusionSystem normalizer_subsystem(const FusionSystem &F, SubId Q);

/// phi lies in C_F(X): some F-isomorphism on phi.dom X extends phi and is
/// the identity on X.
bool centralizes(const FusionSystem &F, const Morphism &phi, SubId X);

/// Aut_small(P) normal in Aut_big(P) (both sorted automorphism lists).
bool normal_in(const Universe &U, std::span<const Morphism> small, std::span<const Morphism> big);

enum class Invariance { a, b, c, d, e, f };
inline constexpr std::array<Invariance, 6> kAllInvariance{Invariance::a, Invariance::b, Invariance::c,
                                                          Invariance::d, Invariance::e, Invariance::f};
char invariance_name(Invariance which);

struct ConditionResult {
  bool holds = true;
  std::string counterexample;
  explicit operator bool() const { return holds; }
};

/// E^alpha = E for every alpha in Aut_F(T).
ConditionResult aut_t_invariance(const FusionSystem &F, const FusionSystem &E);
/// Every phi in Hom_F(P,T), P <= T, factors as phi0 o alpha with phi0 in E and
/// alpha in Aut_F(T).
ConditionResult frattini_property(const FusionSystem &F, const FusionSystem &E);
/// Condition (f): phi^psi in E for phi in Hom_E(P,Q), psi in Hom_F(Q,T).
ConditionResult strong_invariance(const FusionSystem &F, const FusionSystem &E);

/// One of the six equivalent invariance conditions, evaluated literally.
/// Throws NotStronglyClosed when the support of E is not strongly closed.
ConditionResult invariance_condition(const FusionSystem &F, const FusionSystem &E, Invariance which);

enum class ExtensionVariant { center, support };
/// Every alpha in Aut_E(T) extends to alpha^ in Aut_F(T C_S(T)) with
/// [C_S(T), alpha^] <= Z(T) (center) or <= T (support).
ConditionResult extension_property(const FusionSystem &F, const FusionSystem &E,
                                   ExtensionVariant variant);

struct NormalityReport {
  bool strongly_closed = false;
  std::array<bool, 6> invariant{}; // conditions a..f
  bool conditions_evaluated = false;
  bool frattini = false;
  bool saturated = false;
  bool extension_center = false;
  bool extension_support = false;
  std::string counterexample;

  bool normal() const { return strongly_closed && invariant[0] && saturated && extension_center; }
  bool weakly_normal() const { return strongly_closed && invariant[0] && saturated; }
  bool conditions_agree() const;
};

/// Full report. With all_conditions false only (a) among the invariance
/// conditions is evaluated (enough for normal()).
NormalityReport normality(const FusionSystem &F, const FusionSystem &E, bool all_conditions = false);
bool is_normal_subsystem(const FusionSystem &F, const FusionSystem &E);

/// F_{S n N}(N) for N normal in the realizer of F, verified normal in F.
/// Throws VerificationFailed when the report is negative.
FusionSystem normal_subsystem_from_group(const FusionSystem &F, const Subgroup &N);

/// Q normal in F, i.e. N_F(Q) = F.
bool is_normal_subgroup(const FusionSystem &F, SubId Q);
/// O_p(F): the largest subgroup normal in F.
SubId largest_normal_subgroup(const FusionSystem &F);

} // namespace fusion
