#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "fusion/fusion.hpp"

namespace fusion::test {

inline const std::vector<GroupFile> &corpus()
{
  static const auto all = load_corpus(FUSION_CORPUS_DIR);
  return all;
}

inline const GroupFile &group(const std::string &name)
{
  for (auto &g : corpus())
    if (g.name == name)
      return g;
  throw std::runtime_error("not in corpus: " + name);
}

inline GroupFile perm_group(std::size_t degree, std::vector<std::string> gens)
{
  nlohmann::json j{{"name", "adhoc"}, {"kind", "permutation"}, {"degree", degree}, {"generators", gens}};
  return parse_group(j);
}

/// F_S(G) for a corpus group, built once per process.
inline const FusionSystem &realized(const std::string &name, std::size_t p)
{
  static std::map<std::pair<std::string, std::size_t>, FusionSystem> cache;
  auto key = std::make_pair(name, p);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, fusion_of_group(Universe::create(group(name).group, p))).first;
  return it->second;
}

inline SubId sub(const FusionSystem &F, const GroupFile &g, const std::string &spec)
{
  return F.universe().id_of(parse_subgroup(g, spec, F.prime()));
}

inline Elem el(const GroupFile &g, const std::string &text) { return parse_element(g, text); }

/// Normal pairs (N, E) of a corpus entry, as the suite builds them.
struct NormalPair {
  std::string name;
  FusionSystem E;
};
inline std::vector<NormalPair> normal_pairs(const FusionSystem &F)
{
  std::vector<NormalPair> out;
  std::set<std::pair<SubId, std::size_t>> seen;
  for (auto &N : normal_subgroups(F.universe().group())) {
    auto E = normal_subsystem_from_group(F, N);
    if (!seen.insert({E.support(), E.morphism_count()}).second)
      continue;
    out.push_back({"order " + std::to_string(N.order()), E});
  }
  return out;
}

/// Entries small enough for exhaustive per-morphism property tests.
inline std::vector<std::pair<std::string, std::size_t>> small_entries()
{
  return {{"C2", 2},   {"C4", 2},      {"C2xC2", 2}, {"C3xC3", 3},   {"D8", 2},     {"Q8", 2},
          {"A4", 2},   {"A4", 3},      {"S4", 2},    {"S4", 3},      {"C3:C4", 2},  {"C3:C4", 3},
          {"SL(2,3)", 2}, {"SL(2,3)", 3}, {"S3xS3", 2}, {"S3xS3", 3}, {"A5", 2},     {"A5", 3},
          {"A5", 5},   {"D8xC2", 2},   {"Q8oC4", 2}, {"GL(2,3)", 2}, {"GL(2,3)", 3}, {"S4xC2", 2}};
}

} // namespace fusion::test

namespace oracle {

using fusion::Elem;
using fusion::FiniteGroup;
using Set = std::vector<Elem>; // sorted

/// Brute-force group theory on the raw multiplication table only.
inline Set closure(const FiniteGroup &G, const std::vector<Elem> &gens)
{
  std::set<Elem> s{0};
  std::vector<Elem> todo{0};
  while (!todo.empty()) {
    Elem x = todo.back();
    todo.pop_back();
    for (Elem g : gens) {
      Elem y = G.mul(x, g);
      if (s.insert(y).second)
        todo.push_back(y);
    }
  }
  return {s.begin(), s.end()};
}

inline Elem conj(const FiniteGroup &G, Elem x, Elem g)
{
  Elem gi = 0;
  for (std::size_t h = 0; h < G.order(); ++h)
    if (G.mul(g, Elem(h)) == 0)
      gi = Elem(h);
  return G.mul(G.mul(gi, x), g);
}

inline Set image(const FiniteGroup &G, const Set &H, Elem g)
{
  Set out;
  for (Elem x : H)
    out.push_back(conj(G, x, g));
  std::sort(out.begin(), out.end());
  return out;
}

inline bool subset(const Set &a, const Set &b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

inline Set derived_subgroup(const FiniteGroup &G)
{
  std::vector<Elem> gens;
  for (std::size_t x = 0; x < G.order(); ++x)
    for (std::size_t y = 0; y < G.order(); ++y) {
      Elem xy = G.mul(Elem(x), Elem(y)), yx = G.mul(Elem(y), Elem(x));
      // [x,y] = x^-1 y^-1 x y is the element c with yx c = xy
      for (std::size_t c = 0; c < G.order(); ++c)
        if (G.mul(yx, Elem(c)) == xy) {
          gens.push_back(Elem(c));
          break;
        }
    }
  return closure(G, gens);
}

inline Set centralizer(const FiniteGroup &G, const Set &H)
{
  Set out;
  for (std::size_t g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (Elem x : H)
      ok = ok && G.mul(x, Elem(g)) == G.mul(Elem(g), x);
    if (ok)
      out.push_back(Elem(g));
  }
  return out;
}

inline Set normalizer(const FiniteGroup &G, const Set &H)
{
  Set out;
  for (std::size_t g = 0; g < G.order(); ++g)
    if (image(G, H, Elem(g)) == H)
      out.push_back(Elem(g));
  return out;
}

/// Every subgroup is the join of its cyclic subgroups.
inline std::set<Set> all_subgroups(const FiniteGroup &G)
{
  std::set<Set> cyclic;
  for (std::size_t x = 0; x < G.order(); ++x)
    cyclic.insert(closure(G, {Elem(x)}));
  std::set<Set> all = cyclic;
  std::vector<Set> frontier(all.begin(), all.end());
  while (!frontier.empty()) {
    std::vector<Set> next;
    for (auto &A : frontier)
      for (auto &C : cyclic) {
        if (subset(C, A))
          continue;
        std::vector<Elem> gens(A.begin(), A.end());
        gens.insert(gens.end(), C.begin(), C.end());
        auto J = closure(G, gens);
        if (all.insert(J).second)
          next.push_back(J);
      }
    frontier = std::move(next);
  }
  return all;
}

/// Hom_{F_S(G)}(P, Q) as image lists over the sorted members of P.
inline std::set<std::vector<Elem>> conjugation_maps(const FiniteGroup &G, const Set &P, const Set &Q)
{
  std::set<std::vector<Elem>> out;
  for (std::size_t g = 0; g < G.order(); ++g) {
    std::vector<Elem> m;
    for (Elem x : P)
      m.push_back(conj(G, x, Elem(g)));
    Set img = m;
    std::sort(img.begin(), img.end());
    if (subset(img, Q))
      out.insert(m);
  }
  return out;
}

} // namespace oracle
