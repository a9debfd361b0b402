#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "fusion/lattice.hpp"

namespace fusion {

/// Injective homomorphism between subgroups of S. `img` is the exact image,
/// so a morphism P -> Q of a fusion system is stored as its isomorphism onto
/// P^phi and membership in Hom(P,Q) is the test img <= Q.
/// map[i] is the image of the i-th member (sorted order) of the domain.
struct Morphism {
  SubId dom = kNoSub;
  SubId img = kNoSub;
  std::vector<Elem> map;

  friend auto operator<=>(const Morphism &, const Morphism &) = default;
  friend bool operator==(const Morphism &, const Morphism &) = default;
};

/// Validates multiplicativity and injectivity; image must lie in S.
Morphism make_morphism(const Universe &U, SubId dom, std::vector<Elem> map);

Elem apply(const Universe &U, const Morphism &m, Elem x);
Morphism identity_morphism(const Universe &U, SubId P);
/// c_g restricted to P (x -> g^-1 x g); empty when P^g is not inside S.
std::optional<Morphism> conjugation(const Universe &U, SubId P, Elem g);
/// first then second; needs first.img <= second.dom.
Morphism compose(const Universe &U, const Morphism &first, const Morphism &second);
Morphism restrict(const Universe &U, const Morphism &m, SubId Q);
Morphism inverse(const Universe &U, const Morphism &m);
/// Q^m for Q <= m.dom.
SubId image_of(const Universe &U, const Morphism &m, SubId Q);
/// phi^alpha = (alpha|_P)^-1 o phi o alpha, alpha defined on <P, P^phi>.
Morphism conjugate_morphism(const Universe &U, const Morphism &phi, const Morphism &alpha);
bool fixes_pointwise(const Universe &U, const Morphism &m, SubId X);
bool is_identity(const Morphism &m, const Universe &U);
/// Order of an automorphism (dom == img).
std::size_t automorphism_order(const Universe &U, const Morphism &m);
Morphism power(const Universe &U, const Morphism &m, std::size_t k);

std::string format_morphism(const Universe &U, const Morphism &m);

} // namespace fusion
