#include "fusion/group_ops.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <unordered_set>

namespace fusion {

Subgroup whole_group(const FiniteGroup &G)
{
  std::vector<Elem> all(G.order());
  std::iota(all.begin(), all.end(), Elem{0});
  return Subgroup(std::move(all), G.order());
}

Subgroup trivial_subgroup(const FiniteGroup &G) { return Subgroup({0}, G.order()); }

namespace {

// Closure of `seed` (assumed closed or not) under right multiplication by gens.
std::vector<Elem> close_under(const FiniteGroup &G, ElementSet &in, std::vector<Elem> list,
                              std::span<const Elem> gens)
{
  for (std::size_t head = 0; head < list.size(); ++head) {
    for (auto g : gens) {
      Elem y = G.mul(list[head], g);
      if (!in.test(y)) {
        in.set(y);
        list.push_back(y);
      }
    }
  }
  return list;
}

} // namespace

Subgroup generate(const FiniteGroup &G, std::span<const Elem> gens)
{
  ElementSet in(G.order());
  in.set(0);
  auto list = close_under(G, in, {0}, gens);
  return Subgroup(std::move(list), G.order());
}

std::vector<Elem> generating_set(const FiniteGroup &G, const Subgroup &H)
{
  std::vector<Elem> gens;
  ElementSet in(G.order());
  in.set(0);
  std::vector<Elem> current{0};
  for (auto x : H.members()) {
    if (in.test(x))
      continue;
    gens.push_back(x);
    // every element already present is multiplied by every generator again
    current = close_under(G, in, std::move(current), gens);
  }
  return gens;
}

Subgroup join(const FiniteGroup &G, const Subgroup &A, const Subgroup &B)
{
  if (A.is_subset_of(B))
    return B;
  if (B.is_subset_of(A))
    return A;
  auto gens = generating_set(G, A);
  auto gb = generating_set(G, B);
  gens.insert(gens.end(), gb.begin(), gb.end());
  return generate(G, gens);
}

Subgroup meet(const FiniteGroup &G, const Subgroup &A, const Subgroup &B)
{
  std::vector<Elem> out;
  for (auto x : A.members())
    if (B.contains(x))
      out.push_back(x);
  return Subgroup(std::move(out), G.order());
}

Subgroup conjugate(const FiniteGroup &G, const Subgroup &H, Elem g)
{
  std::vector<Elem> out;
  out.reserve(H.order());
  for (auto x : H.members())
    out.push_back(G.conj(x, g));
  return Subgroup(std::move(out), G.order());
}

bool is_subgroup(const FiniteGroup &G, std::span<const Elem> elements)
{
  ElementSet in(G.order());
  for (auto x : elements)
    in.set(x);
  if (!in.test(0))
    return false;
  for (auto x : elements)
    for (auto y : elements)
      if (!in.test(G.mul(x, y)))
        return false;
  return true;
}

bool is_normal(const FiniteGroup &G, const Subgroup &H, const Subgroup &K)
{
  if (!H.is_subset_of(K))
    return false;
  auto hg = generating_set(G, H);
  auto kg = generating_set(G, K);
  for (auto k : kg)
    for (auto h : hg)
      if (!H.contains(G.conj(h, k)))
        return false;
  return true;
}

bool commute(const FiniteGroup &G, const Subgroup &A, const Subgroup &B)
{
  auto ag = generating_set(G, A);
  auto bg = generating_set(G, B);
  for (auto a : ag)
    for (auto b : bg)
      if (G.mul(a, b) != G.mul(b, a))
        return false;
  return true;
}

Subgroup normalizer(const FiniteGroup &G, const Subgroup &H)
{
  auto hg = generating_set(G, H);
  std::vector<Elem> out;
  for (std::size_t g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (auto h : hg)
      if (!H.contains(G.conj(h, Elem(g)))) {
        ok = false;
        break;
      }
    if (ok)
      out.push_back(Elem(g));
  }
  return Subgroup(std::move(out), G.order());
}

Subgroup centralizer(const FiniteGroup &G, const Subgroup &H)
{
  auto hg = generating_set(G, H);
  std::vector<Elem> out;
  for (std::size_t g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (auto h : hg)
      if (G.mul(h, Elem(g)) != G.mul(Elem(g), h)) {
        ok = false;
        break;
      }
    if (ok)
      out.push_back(Elem(g));
  }
  return Subgroup(std::move(out), G.order());
}

Subgroup center(const FiniteGroup &G) { return centralizer(G, whole_group(G)); }

Subgroup center(const FiniteGroup &G, const Subgroup &H)
{
  return meet(G, H, centralizer(G, H));
}

Subgroup commutator_subgroup(const FiniteGroup &G, const Subgroup &A, const Subgroup &B)
{
  ElementSet seen(G.order());
  std::vector<Elem> gens;
  for (auto a : A.members())
    for (auto b : B.members()) {
      Elem c = G.comm(a, b);
      if (!seen.test(c)) {
        seen.set(c);
        gens.push_back(c);
      }
    }
  return generate(G, gens);
}

Subgroup commutator_span(const FiniteGroup &G, const Subgroup &A,
                         std::span<const std::vector<Elem>> maps)
{
  ElementSet seen(G.order());
  std::vector<Elem> gens;
  for (auto &m : maps) {
    if (m.size() != A.order())
      throw Error(ErrorCode::DomainMismatch, "map does not match the subgroup it acts on");
    for (std::size_t i = 0; i < m.size(); ++i) {
      Elem c = G.mul(G.inv(A.members()[i]), m[i]);
      if (!seen.test(c)) {
        seen.set(c);
        gens.push_back(c);
      }
    }
  }
  return generate(G, gens);
}

bool is_prime(std::size_t n)
{
  if (n < 2)
    return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

std::size_t p_part(std::size_t n, std::size_t p)
{
  std::size_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

bool is_p_power(std::size_t n, std::size_t p) { return p_part(n, p) == n; }

bool is_p_group(const Subgroup &H, std::size_t p) { return is_p_power(H.order(), p); }

Subgroup sylow_subgroup(const FiniteGroup &G, std::size_t p)
{
  const std::size_t target = p_part(G.order(), p);
  Subgroup P = trivial_subgroup(G);
  while (P.order() < target) {
    auto N = normalizer(G, P);
    bool grown = false;
    for (auto x : N.members()) {
      if (P.contains(x))
        continue;
      // order of xP in N/P must be a power of p
      Elem y = x;
      std::size_t k = 1;
      while (!P.contains(y)) {
        y = G.mul(y, x);
        ++k;
      }
      if (!is_p_power(k, p))
        continue;
      auto gens = generating_set(G, P);
      gens.push_back(x);
      P = generate(G, gens);
      grown = true;
      break;
    }
    if (!grown)
      throw Error(ErrorCode::VerificationFailed, "Sylow search stalled");
  }
  return P;
}

bool is_sylow(const FiniteGroup &G, const Subgroup &S, std::size_t p)
{
  return is_p_group(S, p) && S.order() == p_part(G.order(), p) &&
         is_subgroup(G, S.members());
}

std::vector<std::vector<Elem>> conjugacy_classes(const FiniteGroup &G)
{
  std::vector<bool> done(G.order(), false);
  std::vector<std::vector<Elem>> classes;
  for (std::size_t x = 0; x < G.order(); ++x) {
    if (done[x])
      continue;
    std::vector<Elem> cls;
    for (std::size_t g = 0; g < G.order(); ++g) {
      Elem y = G.conj(Elem(x), Elem(g));
      if (!done[y]) {
        done[y] = true;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

Subgroup o_p(const FiniteGroup &G, std::size_t p)
{
  auto S = sylow_subgroup(G, p);
  ElementSet core = S.mask();
  for (std::size_t g = 0; g < G.order(); ++g)
    core &= conjugate(G, S, Elem(g)).mask();
  return Subgroup(core.elements(), G.order());
}

Subgroup o_p_prime(const FiniteGroup &G, std::size_t p)
{
  // x lies in O_{p'}(G) iff its normal closure is a p'-group.
  std::vector<Elem> members;
  for (auto &cls : conjugacy_classes(G)) {
    auto K = generate(G, cls);
    if (K.order() % p != 0)
      members.insert(members.end(), cls.begin(), cls.end());
  }
  return Subgroup(std::move(members), G.order());
}

Subgroup o_upper_p(const FiniteGroup &G, std::size_t p)
{
  std::vector<Elem> gens;
  for (std::size_t x = 0; x < G.order(); ++x)
    if (G.element_order(Elem(x)) % p != 0)
      gens.push_back(Elem(x));
  return generate(G, gens);
}

CoreSubgroups core_operators(const FiniteGroup &G, std::size_t p)
{
  return {o_p(G, p), o_p_prime(G, p), o_upper_p(G, p)};
}

std::vector<Subgroup> normal_subgroups(const FiniteGroup &G)
{
  std::vector<Subgroup> closures;
  for (auto &cls : conjugacy_classes(G))
    closures.push_back(generate(G, cls));
  std::vector<Subgroup> found{trivial_subgroup(G)};
  std::unordered_set<ElementSet, ElementSetHash> seen{found[0].mask()};
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (auto &K : closures) {
      if (K.is_subset_of(found[head]))
        continue;
      auto M = join(G, found[head], K);
      if (seen.insert(M.mask()).second)
        found.push_back(std::move(M));
    }
  }
  std::sort(found.begin(), found.end(), canonical_less);
  return found;
}

std::vector<Subgroup> subgroup_lattice(const FiniteGroup &G, const Limits &limits)
{
  return subgroup_lattice(G, whole_group(G), limits);
}

std::vector<Subgroup> subgroup_lattice(const FiniteGroup &G, const Subgroup &K,
                                       const Limits &limits)
{
  if (K.order() > limits.group_order_cap)
    throw Error(ErrorCode::CapExceeded, "group order exceeds cap");

  struct Node {
    Subgroup H;
    std::vector<Elem> gens;
  };
  std::vector<Node> nodes;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<Elem> cyclic_gens;

  auto add = [&](Subgroup H, std::vector<Elem> gens) {
    if (!seen.insert(H.mask()).second)
      return false;
    if (nodes.size() >= limits.lattice_cap)
      throw Error(ErrorCode::CapExceeded,
                  "subgroup lattice exceeds cap " + std::to_string(limits.lattice_cap));
    nodes.push_back({std::move(H), std::move(gens)});
    return true;
  };

  add(trivial_subgroup(G), {});
  for (auto x : K.members()) {
    if (x == 0)
      continue;
    std::array<Elem, 1> g{x};
    if (add(generate(G, g), {x}))
      cyclic_gens.push_back(x);
  }
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    for (auto c : cyclic_gens) {
      if (nodes[head].H.contains(c))
        continue;
      auto gens = nodes[head].gens;
      gens.push_back(c);
      ElementSet in = nodes[head].H.mask();
      auto list = close_under(G, in, nodes[head].H.members(), gens);
      Subgroup J(std::move(list), G.order());
      if (!seen.count(J.mask()))
        add(std::move(J), std::move(gens));
    }
  }
  std::vector<Subgroup> out;
  out.reserve(nodes.size());
  for (auto &n : nodes)
    out.push_back(std::move(n.H));
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

QuotientGroup quotient(const FiniteGroup &G, const Subgroup &N)
{
  if (!is_normal(G, N, whole_group(G)))
    throw Error(ErrorCode::NotNormal, "quotient by a subgroup that is not normal");
  const std::size_t n = G.order();
  std::vector<Elem> label(n, kNoElem);
  std::vector<Elem> reps;
  for (std::size_t x = 0; x < n; ++x) {
    if (label[x] != kNoElem)
      continue;
    Elem id = Elem(reps.size());
    reps.push_back(Elem(x));
    for (auto k : N.members())
      label[G.mul(Elem(x), k)] = id;
  }
  const std::size_t m = reps.size();
  std::vector<Elem> table(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      table[a * m + b] = label[G.mul(reps[a], reps[b])];
  auto Q = std::make_shared<FiniteGroup>(FiniteGroup::from_trusted_table(std::move(table), m));
  std::vector<std::string> labels;
  for (auto r : reps)
    labels.push_back(G.label(r) + "N");
  Q->set_labels(std::move(labels));
  std::vector<Elem> qgens;
  for (auto g : G.generators())
    qgens.push_back(label[g]);
  Q->set_generators(std::move(qgens));
  return {Q, GroupHom{whole_group(G), std::move(label)}, N};
}

Embedding as_group(const FiniteGroup &G, const Subgroup &H)
{
  const std::size_t m = H.order();
  std::vector<Elem> from(G.order(), kNoElem);
  for (std::size_t i = 0; i < m; ++i)
    from[H.members()[i]] = Elem(i);
  std::vector<Elem> table(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      Elem c = from[G.mul(H.members()[a], H.members()[b])];
      if (c == kNoElem)
        throw Error(ErrorCode::NotAGroup, "subset is not closed under multiplication");
      table[a * m + b] = c;
    }
  auto K = std::make_shared<FiniteGroup>(FiniteGroup::from_trusted_table(std::move(table), m));
  std::vector<std::string> labels;
  for (auto x : H.members())
    labels.push_back(G.label(x));
  K->set_labels(std::move(labels));
  std::vector<Elem> gens;
  for (auto g : generating_set(G, H))
    gens.push_back(from[g]);
  K->set_generators(std::move(gens));
  return {K, H.members(), std::move(from)};
}

ProductGroup direct_product(const FiniteGroup &G1, const FiniteGroup &G2, const Limits &limits)
{
  const std::size_t n1 = G1.order(), n2 = G2.order(), n = n1 * n2;
  if (n > limits.group_order_cap)
    throw Error(ErrorCode::CapExceeded, "direct product order " + std::to_string(n) + " exceeds cap");
  std::vector<Elem> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      table[a * n + b] = Elem(std::size_t(G1.mul(Elem(a / n2), Elem(b / n2))) * n2 +
                              G2.mul(Elem(a % n2), Elem(b % n2)));
  auto P = std::make_shared<FiniteGroup>(FiniteGroup::from_trusted_table(std::move(table), n));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a)
    labels.push_back("[" + G1.label(Elem(a / n2)) + "," + G2.label(Elem(a % n2)) + "]");
  P->set_labels(std::move(labels));
  std::vector<Elem> gens;
  for (auto g : G1.generators())
    gens.push_back(Elem(std::size_t(g) * n2));
  for (auto g : G2.generators())
    gens.push_back(g);
  P->set_generators(std::move(gens));
  return {P, n2};
}

bool is_homomorphism(const FiniteGroup &G, const FiniteGroup &H, const GroupHom &hom)
{
  for (auto x : hom.domain.members()) {
    if (hom.image[x] == kNoElem || hom.image[x] >= H.order())
      return false;
    for (auto y : hom.domain.members())
      if (hom.image[G.mul(x, y)] != H.mul(hom.image[x], hom.image[y]))
        return false;
  }
  return true;
}

namespace {

// Extend generator images to a map on <gens>; empty optional on conflict.
std::optional<std::vector<Elem>> extend_images(const FiniteGroup &G, const FiniteGroup &H,
                                               std::span<const Elem> gens,
                                               std::span<const Elem> images)
{
  std::vector<Elem> map(G.order(), kNoElem);
  map[0] = 0;
  std::vector<Elem> list{0};
  for (std::size_t head = 0; head < list.size(); ++head) {
    Elem x = list[head];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Elem y = G.mul(x, gens[i]);
      Elem v = H.mul(map[x], images[i]);
      if (map[y] == kNoElem) {
        map[y] = v;
        list.push_back(y);
      } else if (map[y] != v) {
        return std::nullopt;
      }
    }
  }
  return map;
}

} // namespace

std::optional<GroupHom> find_isomorphism(const FiniteGroup &G, const FiniteGroup &H,
                                         std::span<const std::pair<Elem, Elem>> fixed)
{
  if (G.order() != H.order())
    return std::nullopt;
  std::vector<Elem> gens, images;
  for (auto [x, y] : fixed) {
    if (G.element_order(x) != H.element_order(y))
      return std::nullopt;
    gens.push_back(x);
    images.push_back(y);
  }
  if (!extend_images(G, H, gens, images))
    return std::nullopt;
  // additional generators to reach all of G
  std::vector<Elem> extra;
  {
    auto cur = generate(G, gens);
    auto all = gens;
    for (std::size_t x = 0; x < G.order() && cur.order() < G.order(); ++x) {
      if (cur.contains(Elem(x)))
        continue;
      // prefer a generator of large order
      Elem best = Elem(x);
      for (std::size_t y = x; y < G.order(); ++y)
        if (!cur.contains(Elem(y)) && G.element_order(Elem(y)) > G.element_order(best))
          best = Elem(y);
      extra.push_back(best);
      all.push_back(best);
      cur = generate(G, all);
    }
  }
  std::vector<std::vector<Elem>> by_order(G.order() + 1);
  for (std::size_t y = 0; y < H.order(); ++y)
    by_order[H.element_order(Elem(y))].push_back(Elem(y));

  std::optional<GroupHom> result;
  std::function<void(std::size_t)> search = [&](std::size_t k) {
    if (result)
      return;
    if (k == extra.size()) {
      auto map = extend_images(G, H, gens, images);
      if (!map)
        return;
      std::vector<bool> hit(H.order(), false);
      for (auto v : *map) {
        if (v == kNoElem || hit[v])
          return;
        hit[v] = true;
      }
      result = GroupHom{whole_group(G), std::move(*map)};
      return;
    }
    for (auto y : by_order[G.element_order(extra[k])]) {
      gens.push_back(extra[k]);
      images.push_back(y);
      if (extend_images(G, H, gens, images))
        search(k + 1);
      gens.pop_back();
      images.pop_back();
      if (result)
        return;
    }
  };
  search(0);
  return result;
}

} // namespace fusion
