#include "fusion/morphism.hpp"

#include <sstream>

namespace fusion {

Morphism make_morphism(const Universe &U, SubId dom, std::vector<Elem> map)
{
  const auto &G = U.group();
  const auto &P = U.at(dom);
  if (map.size() != P.order())
    throw Error(ErrorCode::DomainMismatch, "map size does not match domain order");
  ElementSet image(G.order());
  for (auto y : map) {
    if (y >= G.order() || !U.sylow().contains(y))
      throw Error(ErrorCode::DomainMismatch, "image leaves the Sylow subgroup");
    if (image.test(y))
      throw Error(ErrorCode::DomainMismatch, "map is not injective");
    image.set(y);
  }
  const auto &mem = P.members();
  for (std::size_t i = 0; i < mem.size(); ++i)
    for (std::size_t j = 0; j < mem.size(); ++j)
      if (map[P.position(G.mul(mem[i], mem[j]))] != G.mul(map[i], map[j]))
        throw Error(ErrorCode::DomainMismatch, "map is not a homomorphism");
  auto img = U.find(image);
  if (!img)
    throw Error(ErrorCode::DomainMismatch, "image is not a subgroup");
  return {dom, *img, std::move(map)};
}

Elem apply(const Universe &U, const Morphism &m, Elem x)
{
  return m.map[U.at(m.dom).position(x)];
}

Morphism identity_morphism(const Universe &U, SubId P)
{
  return {P, P, U.at(P).members()};
}

std::optional<Morphism> conjugation(const Universe &U, SubId P, Elem g)
{
  const auto &G = U.group();
  std::vector<Elem> map;
  ElementSet image(G.order());
  for (auto x : U.at(P).members()) {
    Elem y = G.conj(x, g);
    if (!U.sylow().contains(y))
      return std::nullopt;
    map.push_back(y);
    image.set(y);
  }
  return Morphism{P, U.id_of(image), std::move(map)};
}

Morphism compose(const Universe &U, const Morphism &first, const Morphism &second)
{
  if (!U.le(first.img, second.dom))
    throw Error(ErrorCode::DomainMismatch, "composition: image not inside next domain");
  Morphism r;
  r.dom = first.dom;
  r.map.reserve(first.map.size());
  if (first.img == second.dom) {
    // common case: position of y in the next domain is its position in img
    const auto &D = U.at(second.dom);
    for (auto y : first.map)
      r.map.push_back(second.map[D.position(y)]);
    r.img = second.img;
  } else {
    for (auto y : first.map)
      r.map.push_back(apply(U, second, y));
    r.img = image_of(U, second, first.img);
  }
  return r;
}

Morphism restrict(const Universe &U, const Morphism &m, SubId Q)
{
  if (!U.le(Q, m.dom))
    throw Error(ErrorCode::DomainMismatch, "restriction to a subgroup outside the domain");
  if (Q == m.dom)
    return m;
  Morphism r;
  r.dom = Q;
  ElementSet image(U.group().order());
  for (auto x : U.at(Q).members()) {
    Elem y = apply(U, m, x);
    r.map.push_back(y);
    image.set(y);
  }
  r.img = U.id_of(image);
  return r;
}

Morphism inverse(const Universe &U, const Morphism &m)
{
  const auto &P = U.at(m.dom);
  const auto &Q = U.at(m.img);
  Morphism r;
  r.dom = m.img;
  r.img = m.dom;
  r.map.resize(Q.order());
  for (std::size_t i = 0; i < m.map.size(); ++i)
    r.map[Q.position(m.map[i])] = P.members()[i];
  return r;
}

SubId image_of(const Universe &U, const Morphism &m, SubId Q)
{
  if (Q == m.dom)
    return m.img;
  ElementSet image(U.group().order());
  for (auto x : U.at(Q).members())
    image.set(apply(U, m, x));
  return U.id_of(image);
}

Morphism conjugate_morphism(const Universe &U, const Morphism &phi, const Morphism &alpha)
{
  if (!U.le(phi.dom, alpha.dom) || !U.le(phi.img, alpha.dom))
    throw Error(ErrorCode::DomainMismatch, "conjugating morphism not defined on <P, Q>");
  SubId newdom = image_of(U, alpha, phi.dom);
  Morphism r;
  r.dom = newdom;
  r.img = image_of(U, alpha, phi.img);
  // y in P^alpha: y = x^alpha, so y -> (x^phi)^alpha
  const auto &D = U.at(newdom);
  r.map.assign(D.order(), kNoElem);
  const auto &P = U.at(phi.dom);
  for (std::size_t i = 0; i < P.order(); ++i) {
    Elem y = apply(U, alpha, P.members()[i]);
    r.map[D.position(y)] = apply(U, alpha, phi.map[i]);
  }
  return r;
}

bool fixes_pointwise(const Universe &U, const Morphism &m, SubId X)
{
  for (auto x : U.at(X).members())
    if (apply(U, m, x) != x)
      return false;
  return true;
}

bool is_identity(const Morphism &m, const Universe &U)
{
  return m.dom == m.img && m.map == U.at(m.dom).members();
}

std::size_t automorphism_order(const Universe &U, const Morphism &m)
{
  if (m.dom != m.img)
    throw Error(ErrorCode::DomainMismatch, "order of a non-automorphism");
  Morphism cur = m;
  std::size_t k = 1;
  while (!is_identity(cur, U)) {
    cur = compose(U, cur, m);
    ++k;
  }
  return k;
}

Morphism power(const Universe &U, const Morphism &m, std::size_t k)
{
  Morphism r = identity_morphism(U, m.dom);
  for (std::size_t i = 0; i < k; ++i)
    r = compose(U, r, m);
  return r;
}

std::string format_morphism(const Universe &U, const Morphism &m)
{
  std::ostringstream out;
  const auto &G = U.group();
  out << "{";
  bool first = true;
  for (auto g : U.generators(m.dom)) {
    if (!first)
      out << ", ";
    out << G.label(g) << " -> " << G.label(apply(U, m, g));
    first = false;
  }
  out << "} on " << U.describe(m.dom);
  return out.str();
}

} // namespace fusion
