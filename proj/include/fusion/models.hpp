#pragma once

#include <optional>
#include <string>

#include "fusion/subsystems.hpp"

namespace fusion {

/// Constrained test: O_p(F) is centric. The witness is O_p(F).
struct ConstrainedResult {
  bool constrained = false;
  SubId witness = kNoSub;
  explicit operator bool() const { return constrained; }
};
ConstrainedResult is_constrained(const FusionSystem &F);

/// A finite group M with an embedding sigma of the support T of a fusion
/// system into M, sigma(T) Sylow in M.
struct Model {
  GroupPtr group;
  UniversePtr universe; // M with Sylow subgroup sigma(T)
  GroupHom sigma;       // defined on T, values in M
  std::string provenance;

  Subgroup image(const Subgroup &P) const;
};

/// M = N_H(Q) / O_p'(N_H(Q)) for H the realizer of F and Q normal centric in
/// F; verified before it is returned. Throws NotRealized, NotConstrained
/// (Q not normal centric) or VerificationFailed.
Model model_from(const FusionSystem &F, SubId Q);
/// model_from with Q = O_p(F).
Model model_of(const FusionSystem &F);

/// sigma injective, sigma(T) Sylow in M, F_{sigma T}(M) = F^sigma and
/// C_M(O_p(M)) <= O_p(M). Returns the first failure.
std::optional<std::string> verify_model(const FusionSystem &F, const Model &m);

/// The unique normal subgroup N of M with sigma(T) n N = sigma(T_E) Sylow in
/// N and F_{sigma T_E}(N) = E^sigma. Throws NotFound / NotUnique.
Subgroup normal_model(const Model &m, const FusionSystem &E);

/// G = N_{N_F(T)}(T C_S(T)) for T the support of E.
FusionSystem script_g(const FusionSystem &F, const FusionSystem &E);

/// Isomorphism M1 -> M2 that is the identity on T (sigma_2 o sigma_1^-1 on
/// the Sylow images).
bool models_isomorphic_over_support(const Model &m1, const Model &m2);

} // namespace fusion
