#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fusion/morphism.hpp"

namespace fusion {

/// A fusion system over a subgroup (the support) of the Sylow subgroup of a
/// Universe. All morphisms are kept: isos(P) lists every isomorphism of the
/// system with domain P, sorted; Hom(P,Q) is the subset with image inside Q.
/// Subsystems share the ambient Universe, so containment and equality are
/// plain per-subgroup set comparisons.
///
/// Copies are cheap and share the immutable morphism tables.
class FusionSystem {
public:
  FusionSystem() = default;

  const Universe &universe() const { return *data_->universe; }
  const UniversePtr &universe_ptr() const { return data_->universe; }
  std::size_t prime() const { return data_->universe->prime(); }
  SubId support() const { return data_->support; }
  const std::vector<SubId> &objects() const { return universe().below(support()); }
  bool is_object(SubId P) const { return universe().le(P, support()); }

  const std::vector<Morphism> &isos(SubId P) const { return data_->isos.at(P); }
  std::vector<Morphism> hom_set(SubId P, SubId Q) const;
  std::vector<Morphism> automorphisms(SubId P) const;
  std::size_t automorphism_count(SubId P) const;
  bool contains(const Morphism &m) const;
  /// Some morphism P -> Q exists.
  bool maps_into(SubId P, SubId Q) const;
  /// Distinct images of P, canonical order.
  std::vector<SubId> conjugacy_class(SubId P) const;
  std::size_t morphism_count() const;

  /// Subgroup H of the ambient group with this system equal to F_T(H), when
  /// known (verified at attachment time by the constructing code).
  const std::optional<Subgroup> &realizer() const { return data_->realizer; }
  /// Element g of the realizer with c_g|_P = m.
  std::optional<Elem> witness(const Morphism &m) const;

  /// Same system with a realizer attached; the caller guarantees F = F_T(H).
  FusionSystem with_realizer(Subgroup H) const;

  explicit operator bool() const { return data_ != nullptr; }

private:
  struct Data {
    UniversePtr universe;
    SubId support = kNoSub;
    std::vector<std::vector<Morphism>> isos; // indexed by SubId
    std::optional<Subgroup> realizer;
  };
  std::shared_ptr<const Data> data_;

  friend FusionSystem make_system(UniversePtr, SubId, std::vector<std::vector<Morphism>>,
                                  std::optional<Subgroup>);
};

/// Trusted construction from complete per-subgroup isomorphism lists (sorted
/// and deduplicated here). Used by constructions whose output is closed by
/// design; tests re-check the axioms.
FusionSystem make_system(UniversePtr U, SubId support, std::vector<std::vector<Morphism>> isos,
                         std::optional<Subgroup> realizer = std::nullopt);

/// F_S(G) for the Universe's Sylow subgroup.
FusionSystem fusion_of_group(UniversePtr U);
/// F_T(H) for a subgroup H of the ambient group with T = S n H Sylow in H.
/// Throws NotSylow otherwise.
FusionSystem realized_subsystem(UniversePtr U, const Subgroup &H);
/// F_R(R).
FusionSystem inner_system(UniversePtr U, SubId R);

/// Smallest fusion system over R containing the given morphisms: closure of
/// the morphisms and Inn(R) under restriction, composition and inverses.
/// Throws MorphismOutsideR when a morphism leaves R.
FusionSystem generate(UniversePtr U, SubId R, std::span<const Morphism> gens);
/// As above, additionally checking that every generator is a morphism of F.
FusionSystem generated_subsystem(const FusionSystem &F, SubId R, std::span<const Morphism> gens);

/// E^alpha for alpha an isomorphism defined on the support of E.
FusionSystem conjugate_subsystem(const FusionSystem &E, const Morphism &alpha);

/// inner is contained in outer (same Universe).
bool subsystem_contains(const FusionSystem &outer, const FusionSystem &inner);
bool subsystem_equal(const FusionSystem &a, const FusionSystem &b);

/// Image of F under an injective homomorphism sigma of its support into the
/// Sylow subgroup of `target` (sigma.image indexed by source elements).
FusionSystem transport(const FusionSystem &F, UniversePtr target, const GroupHom &sigma);

/// Fusion-system axioms (inner maps, restriction, composition, inverses);
/// returns a description of the first violation.
std::optional<std::string> check_axioms(const FusionSystem &F);

/// Compact description: per class of subgroups a representative, generators
/// of its automorphism group, and one isomorphism from it onto every other
/// member of the class.
struct GeneratorRecord {
  struct ClassEntry {
    SubId representative = kNoSub;
    std::vector<Morphism> aut_generators;
    std::vector<Morphism> bridges;
  };
  SubId support = kNoSub;
  std::vector<ClassEntry> classes;
};

GeneratorRecord generator_record(const FusionSystem &F);
FusionSystem from_generator_record(UniversePtr U, const GeneratorRecord &record);

/// Attaches H as realizer when F_T(H) is defined and equals D; otherwise
/// returns D unchanged.
FusionSystem attach_realizer_if_equal(const FusionSystem &D, const Subgroup &H);

} // namespace fusion
