#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "fusion/group.hpp"

namespace fusion {

Subgroup whole_group(const FiniteGroup &G);
Subgroup trivial_subgroup(const FiniteGroup &G);

/// Closure of a generating set (worklist over right multiplication).
Subgroup generate(const FiniteGroup &G, std::span<const Elem> gens);
Subgroup join(const FiniteGroup &G, const Subgroup &A, const Subgroup &B);
Subgroup meet(const FiniteGroup &G, const Subgroup &A, const Subgroup &B);
Subgroup conjugate(const FiniteGroup &G, const Subgroup &H, Elem g);
/// Minimal generating list (greedy in member order).
std::vector<Elem> generating_set(const FiniteGroup &G, const Subgroup &H);

bool is_subgroup(const FiniteGroup &G, std::span<const Elem> elements);
bool is_normal(const FiniteGroup &G, const Subgroup &H, const Subgroup &K); // H normal in K
bool commute(const FiniteGroup &G, const Subgroup &A, const Subgroup &B);   // [A,B] = 1

Subgroup normalizer(const FiniteGroup &G, const Subgroup &H);
Subgroup centralizer(const FiniteGroup &G, const Subgroup &H);
Subgroup center(const FiniteGroup &G);
Subgroup center(const FiniteGroup &G, const Subgroup &H);

/// [A,B] = <a^-1 b^-1 a b>
Subgroup commutator_subgroup(const FiniteGroup &G, const Subgroup &A, const Subgroup &B);

/// <x^-1 x^phi : x in A, phi in maps>; each map is an image array over the
/// members of A (same order as A.members()).
Subgroup commutator_span(const FiniteGroup &G, const Subgroup &A,
                         std::span<const std::vector<Elem>> maps);

bool is_prime(std::size_t n);
std::size_t p_part(std::size_t n, std::size_t p);
bool is_p_power(std::size_t n, std::size_t p);
bool is_p_group(const Subgroup &H, std::size_t p);

/// A Sylow p-subgroup found greedily: grow a p-subgroup by the smallest
/// element of its normalizer that has p-power order modulo it.
Subgroup sylow_subgroup(const FiniteGroup &G, std::size_t p);
bool is_sylow(const FiniteGroup &G, const Subgroup &S, std::size_t p);

struct CoreSubgroups {
  Subgroup o_p;        // largest normal p-subgroup
  Subgroup o_p_prime;  // largest normal p'-subgroup
  Subgroup o_upper_p;  // O^p: generated by the p'-elements
};

CoreSubgroups core_operators(const FiniteGroup &G, std::size_t p);
Subgroup o_p(const FiniteGroup &G, std::size_t p);
Subgroup o_p_prime(const FiniteGroup &G, std::size_t p);
Subgroup o_upper_p(const FiniteGroup &G, std::size_t p);

std::vector<std::vector<Elem>> conjugacy_classes(const FiniteGroup &G);

/// All normal subgroups, canonical order.
std::vector<Subgroup> normal_subgroups(const FiniteGroup &G);

/// All subgroups of K (default: all of G), canonical order.
/// Throws CapExceeded when |K| or the lattice size exceeds the limits.
std::vector<Subgroup> subgroup_lattice(const FiniteGroup &G, const Limits &limits = {});
std::vector<Subgroup> subgroup_lattice(const FiniteGroup &G, const Subgroup &K,
                                       const Limits &limits = {});

/// Coset group G/N. Cosets are labelled in order of their smallest member, so
/// the identity coset is 0. Throws NotNormal.
QuotientGroup quotient(const FiniteGroup &G, const Subgroup &N);

Embedding as_group(const FiniteGroup &G, const Subgroup &H);

struct ProductGroup {
  GroupPtr group;
  // (g1, g2) -> g1 * |G2| + g2
  std::size_t right_order = 0;
  Elem pair(Elem g1, Elem g2) const { return Elem(std::size_t(g1) * right_order + g2); }
  Elem left(Elem x) const { return Elem(std::size_t(x) / right_order); }
  Elem right(Elem x) const { return Elem(std::size_t(x) % right_order); }
};

ProductGroup direct_product(const FiniteGroup &G1, const FiniteGroup &G2,
                            const Limits &limits = {});

bool is_homomorphism(const FiniteGroup &G, const FiniteGroup &H, const GroupHom &hom);

/// Backtracking search for an isomorphism G -> H extending the prescribed
/// images (pairs (x in G, y in H)).
std::optional<GroupHom> find_isomorphism(const FiniteGroup &G, const FiniteGroup &H,
                                         std::span<const std::pair<Elem, Elem>> fixed = {});

} // namespace fusion
