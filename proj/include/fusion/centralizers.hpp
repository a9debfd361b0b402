#pragma once

#include <optional>
#include <vector>

#include "fusion/models.hpp"

namespace fusion {

/// The set X = {X <= C_S(T) : E is contained in C_F(X)}, canonical order,
/// decided on full hom-sets.
std::vector<SubId> centralized_set(const FusionSystem &F, const FusionSystem &E);
/// Same set, decided on the generator record of E (automorphisms of class
/// representatives plus bridges).
std::vector<SubId> centralized_set_by_generators(const FusionSystem &F, const FusionSystem &E);
/// E is contained in C_F(X), on full hom-sets.
bool centralized_by(const FusionSystem &F, const FusionSystem &E, SubId X);

/// C_S(E), the join of X. Throws TheoremViolation if the join is not in X or
/// is not strongly closed.
SubId c_s_of(const FusionSystem &F, const FusionSystem &E);
SubId c_s_of(const FusionSystem &F, const FusionSystem &E, const std::vector<SubId> &xset);

/// Z(F) computed with F as its own ambient system: the largest X <= Z(T)
/// with F contained in C_F(X).
SubId center_of_system(const FusionSystem &F);
/// X <= Z(T) and F is contained in C_F(X), i.e. X <= Z(F) for saturated F.
bool in_center(const FusionSystem &F, SubId X);

/// A(P) = {phi in Aut_F(P) : [P,phi] <= P n T, phi|_{P n T} in Aut_E(P n T)}.
std::vector<Morphism> a_circle(const FusionSystem &F, const FusionSystem &E, SubId P);
/// H(P): restrictions to P of the psi in Aut_F(P N_T(P)) with P^psi = P.
std::vector<Morphism> h_group(const FusionSystem &F, const FusionSystem &E, SubId P);

struct FrattiniFactors {
  Morphism gamma; // in H(P)
  Morphism beta;  // in A(P)
};
/// phi = gamma then beta. P must be fully normalized (InvalidArgument);
/// throws FactorizationMissing if no factorization exists.
FrattiniFactors frattini_factorize(const FusionSystem &F, const FusionSystem &E, SubId P,
                                   const Morphism &phi);

struct RStarData {
  FusionSystem script_g; // N_{N_F(T)}(T C_S(T))
  Model model;           // model of script_g
  Subgroup normal_model; // model of N_E(T) inside model.group
  SubId r_star = kNoSub;
};
/// R* = C_S(N) with N the model of N_E(T) in a model of G. The model is
/// built from the normal centric subgroup Q of G (default O_p(G)). Requires a
/// realizer of F.
RStarData r_star(const FusionSystem &F, const FusionSystem &E, std::optional<SubId> Q = {});
/// Normal centric subgroups of the system (candidates for model_from).
std::vector<SubId> normal_centric_subgroups(const FusionSystem &F);
/// Join of all X <= C_S(T) with N_E(T) contained in C_F(X).
SubId r_star_by_definition(const FusionSystem &F, const FusionSystem &E);

/// <[P, Aut(P)] : P <= support> and the same with O^p(Aut(P)).
SubId focal(const FusionSystem &F);
SubId hyperfocal(const FusionSystem &F);

/// C_F(E) = <O^p(Aut_{C_F(T)}(P)) : P <= C_S(E)> over C_S(E). The focal
/// containment foc(C_F(T)) <= C_S(E) is checked first; with verify set the
/// result is checked normal in F. Both failures throw TheoremViolation.
FusionSystem c_F_of(const FusionSystem &F, const FusionSystem &E, bool verify = true);
FusionSystem c_F_of(const FusionSystem &F, const FusionSystem &E, SubId cse, bool verify);

/// Aut_{C}(P) = O^p(Aut_{C_F(T)}(P)) Aut_{C_S(E)}(P) for P fully normalized
/// and centric in C = C_F(E).
ConditionResult coincide_check(const FusionSystem &F, const FusionSystem &E, const FusionSystem &C);

struct CentralizerData {
  FusionSystem E;
  std::vector<SubId> xset;
  SubId c_s_e = kNoSub;
  std::optional<RStarData> r_star; // present when F has a realizer
  FusionSystem c_f_e;
};
CentralizerData centralizer_data(const FusionSystem &F, const FusionSystem &E);

} // namespace fusion
