#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fusion/error.hpp"

namespace fusion {

/// Element index inside a FiniteGroup. Index 0 is always the identity.
using Elem = std::uint16_t;
inline constexpr Elem kNoElem = 0xFFFF;

struct Limits {
  std::size_t group_order_cap = 500;
  std::size_t lattice_cap = 20000;
};

/// Fixed-universe bitset over element indices.
class ElementSet {
public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
  : words_((universe + 63) / 64, 0), size_(universe)
  {}

  std::size_t universe_size() const noexcept { return size_; }

  bool test(std::size_t x) const noexcept
  { return (words_[x >> 6] >> (x & 63)) & 1u; }
  void set(std::size_t x) noexcept { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
  void reset(std::size_t x) noexcept { words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63)); }

  std::size_t count() const noexcept;
  bool is_subset_of(const ElementSet &other) const noexcept;
  bool intersects(const ElementSet &other) const noexcept;
  std::vector<Elem> elements() const;

  ElementSet &operator&=(const ElementSet &other) noexcept;
  ElementSet &operator|=(const ElementSet &other) noexcept;

  std::size_t hash() const noexcept;
  friend bool operator==(const ElementSet &, const ElementSet &) = default;

private:
  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet &s) const noexcept { return s.hash(); }
};

/// Permutation on {0,..,n-1} stored as an image array.
using Permutation = std::vector<std::uint16_t>;

std::string format_cycles(const Permutation &perm);           // 1-based cycle notation
Permutation parse_cycles(std::string_view text, std::size_t degree); // "(1,2)(3,4)" or "(1 2 3)"

/// A finite group given by its full multiplication table.
///
/// Element indices are stable for the lifetime of the object; every Subgroup,
/// morphism and cache refers to them.
class FiniteGroup {
public:
  /// Validated construction: square table, entries in range, identity row and
  /// column 0, Latin square, associativity (exhaustive).
  static FiniteGroup from_table(const std::vector<std::vector<std::size_t>> &table,
                                const Limits &limits = {});

  /// Closure of the generators under composition; elements are discovered
  /// breadth-first from the identity so indices are deterministic.
  static FiniteGroup from_permutations(const std::vector<Permutation> &generators,
                                       const Limits &limits = {});

  /// Table assumed to come from a construction that is a group by design
  /// (quotients, products, automorphism groups). Only cheap checks run.
  static FiniteGroup from_trusted_table(std::vector<Elem> table, std::size_t order);

  std::size_t order() const noexcept { return order_; }
  Elem identity() const noexcept { return 0; }

  Elem mul(Elem a, Elem b) const noexcept { return table_[std::size_t(a) * order_ + b]; }
  Elem inv(Elem a) const noexcept { return inverse_[a]; }
  /// x^g = g^-1 x g (right action).
  Elem conj(Elem x, Elem g) const noexcept { return mul(mul(inverse_[g], x), g); }
  /// [x, y] = x^-1 y^-1 x y
  Elem comm(Elem x, Elem y) const noexcept
  { return mul(mul(inverse_[x], inverse_[y]), mul(x, y)); }
  Elem pow(Elem x, long long k) const;
  std::size_t element_order(Elem x) const;

  bool has_permutations() const noexcept { return !perms_.empty(); }
  std::size_t degree() const noexcept { return degree_; }
  const Permutation &permutation(Elem x) const { return perms_.at(x); }
  std::optional<Elem> find_permutation(const Permutation &perm) const;

  const std::vector<Elem> &generators() const noexcept { return generators_; }
  void set_generators(std::vector<Elem> gens) { generators_ = std::move(gens); }

  std::string label(Elem x) const;
  void set_labels(std::vector<std::string> labels) { labels_ = std::move(labels); }

  const std::vector<Elem> &table() const noexcept { return table_; }

private:
  FiniteGroup() = default;
  void finish();

  std::size_t order_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::vector<Permutation> perms_;
  std::size_t degree_ = 0;
  std::vector<Elem> generators_;
  std::vector<std::string> labels_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A subgroup as a sorted list of element indices. The sorted list is the
/// canonical identity: two subgroups are equal iff the lists are equal.
class Subgroup {
public:
  Subgroup() = default;
  Subgroup(std::vector<Elem> members, std::size_t group_order);

  const std::vector<Elem> &members() const noexcept { return members_; }
  std::size_t order() const noexcept { return members_.size(); }
  bool contains(Elem x) const noexcept { return mask_.test(x); }
  bool is_subset_of(const Subgroup &other) const noexcept
  { return mask_.is_subset_of(other.mask_); }
  const ElementSet &mask() const noexcept { return mask_; }
  std::size_t position(Elem x) const; // index of x in members()

  friend bool operator==(const Subgroup &a, const Subgroup &b)
  { return a.members_ == b.members_; }

private:
  std::vector<Elem> members_;
  ElementSet mask_;
};

/// Canonical order: descending order, then lexicographic member list.
bool canonical_less(const Subgroup &a, const Subgroup &b);

/// Homomorphism from a subgroup of one group into another group.
struct GroupHom {
  Subgroup domain;
  std::vector<Elem> image; // indexed by source element; kNoElem outside domain

  Elem operator()(Elem x) const { return image.at(x); }
};

/// A subgroup realised as a group in its own right.
struct Embedding {
  GroupPtr group;
  std::vector<Elem> to_parent;   // local index -> parent index
  std::vector<Elem> from_parent; // parent index -> local index (kNoElem outside)
};

struct QuotientGroup {
  GroupPtr quotient;
  GroupHom projection; // total on the parent group
  Subgroup kernel;
};

} // namespace fusion
