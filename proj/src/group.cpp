#include "fusion/group.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <deque>
#include <numeric>
#include <sstream>

namespace fusion {

std::size_t ElementSet::count() const noexcept
{
  std::size_t n = 0;
  for (auto w : words_)
    n += std::popcount(w);
  return n;
}

bool ElementSet::is_subset_of(const ElementSet &other) const noexcept
{
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i])
      return false;
  return true;
}

bool ElementSet::intersects(const ElementSet &other) const noexcept
{
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & other.words_[i])
      return true;
  return false;
}

std::vector<Elem> ElementSet::elements() const
{
  std::vector<Elem> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    auto w = words_[i];
    while (w) {
      int b = std::countr_zero(w);
      out.push_back(Elem(i * 64 + b));
      w &= w - 1;
    }
  }
  return out;
}

ElementSet &ElementSet::operator&=(const ElementSet &other) noexcept
{
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] &= other.words_[i];
  return *this;
}

ElementSet &ElementSet::operator|=(const ElementSet &other) noexcept
{
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] |= other.words_[i];
  return *this;
}

std::size_t ElementSet::hash() const noexcept
{
  std::size_t h = 1469598103934665603ull;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

// --- permutations ----------------------------------------------------------

std::string format_cycles(const Permutation &perm)
{
  std::vector<bool> seen(perm.size(), false);
  std::ostringstream out;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == i)
      continue;
    out << '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first)
        out << ',';
      out << j + 1;
      first = false;
      j = perm[j];
    }
    out << ')';
  }
  auto s = out.str();
  return s.empty() ? "()" : s;
}

Permutation parse_cycles(std::string_view text, std::size_t degree)
{
  Permutation perm(degree);
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t i = 0;
  auto fail = [&](const std::string &why) {
    throw Error(ErrorCode::ParseError, "bad cycle notation '" + std::string(text) + "': " + why);
  };
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(')
      fail("expected '('");
    ++i;
    std::vector<std::size_t> cycle;
    while (true) {
      while (i < text.size() && (text[i] == ',' || std::isspace(static_cast<unsigned char>(text[i]))))
        ++i;
      if (i >= text.size())
        fail("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        fail("expected a point");
      std::size_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + std::size_t(text[i++] - '0');
      if (v == 0 || v > degree)
        fail("point out of range");
      cycle.push_back(v - 1);
    }
    // compose on the right: apply existing perm, then this cycle
    Permutation c(degree);
    std::iota(c.begin(), c.end(), 0);
    for (std::size_t k = 0; k < cycle.size(); ++k)
      c[cycle[k]] = std::uint16_t(cycle[(k + 1) % cycle.size()]);
    std::vector<bool> used(degree, false);
    for (auto v : cycle) {
      if (used[v])
        fail("repeated point in cycle");
      used[v] = true;
    }
    for (auto &x : perm)
      x = c[x];
  }
  return perm;
}

// --- FiniteGroup -------------------------------------------------------------

void FiniteGroup::finish()
{
  inverse_.assign(order_, kNoElem);
  for (std::size_t a = 0; a < order_; ++a) {
    if (inverse_[a] != kNoElem)
      continue;
    for (std::size_t b = 0; b < order_; ++b) {
      if (table_[a * order_ + b] == 0) {
        inverse_[a] = Elem(b);
        inverse_[b] = Elem(a);
        break;
      }
    }
    if (inverse_[a] == kNoElem)
      throw Error(ErrorCode::NotAGroup, "element without inverse");
  }
}

FiniteGroup FiniteGroup::from_trusted_table(std::vector<Elem> table, std::size_t order)
{
  if (table.size() != order * order || order == 0)
    throw Error(ErrorCode::NotAGroup, "table has wrong size");
  FiniteGroup G;
  G.order_ = order;
  G.table_ = std::move(table);
  G.finish();
  return G;
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<std::size_t>> &table,
                                    const Limits &limits)
{
  const std::size_t n = table.size();
  if (n == 0)
    throw Error(ErrorCode::NotAGroup, "empty table");
  if (n > limits.group_order_cap)
    throw Error(ErrorCode::CapExceeded, "group order " + std::to_string(n) + " exceeds cap");
  if (n >= kNoElem)
    throw Error(ErrorCode::CapExceeded, "group order too large for element indices");
  std::vector<Elem> flat(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n)
      throw Error(ErrorCode::NotAGroup, "table is not square");
    std::vector<bool> seen(n, false);
    for (std::size_t b = 0; b < n; ++b) {
      auto v = table[a][b];
      if (v >= n)
        throw Error(ErrorCode::NotAGroup, "entry out of range");
      if (seen[v])
        throw Error(ErrorCode::NotAGroup, "row " + std::to_string(a) + " repeats an entry");
      seen[v] = true;
      flat[a * n + b] = Elem(v);
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    std::vector<bool> seen(n, false);
    for (std::size_t a = 0; a < n; ++a) {
      if (seen[flat[a * n + b]])
        throw Error(ErrorCode::NotAGroup, "column " + std::to_string(b) + " repeats an entry");
      seen[flat[a * n + b]] = true;
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    if (flat[a] != a || flat[a * n] != a)
      throw Error(ErrorCode::NotAGroup, "row/column 0 is not the identity");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto ab = flat[a * n + b];
      for (std::size_t c = 0; c < n; ++c)
        if (flat[ab * n + c] != flat[a * n + flat[b * n + c]])
          throw Error(ErrorCode::NotAGroup, "multiplication is not associative");
    }
  FiniteGroup G;
  G.order_ = n;
  G.table_ = std::move(flat);
  G.finish();
  return G;
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<Permutation> &generators,
                                           const Limits &limits)
{
  std::size_t degree = 0;
  for (auto &g : generators)
    degree = std::max(degree, g.size());
  std::vector<Permutation> gens;
  for (auto g : generators) {
    std::size_t old = g.size();
    g.resize(degree);
    for (std::size_t i = old; i < degree; ++i)
      g[i] = std::uint16_t(i);
    std::vector<bool> hit(degree, false);
    for (auto v : g) {
      if (v >= degree || hit[v])
        throw Error(ErrorCode::NotAGroup, "generator is not a permutation");
      hit[v] = true;
    }
    gens.push_back(std::move(g));
  }

  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Permutation> elems{id};
  std::map<Permutation, Elem> index{{id, 0}};
  // right multiplication x*g means "apply x, then g"
  auto compose = [](const Permutation &x, const Permutation &g) {
    Permutation r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
      r[i] = g[x[i]];
    return r;
  };
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (auto &g : gens) {
      auto y = compose(elems[head], g);
      if (!index.count(y)) {
        if (elems.size() >= limits.group_order_cap)
          throw Error(ErrorCode::CapExceeded,
                      "generated group exceeds order cap " + std::to_string(limits.group_order_cap));
        index.emplace(y, Elem(elems.size()));
        elems.push_back(std::move(y));
      }
    }
  }
  const std::size_t n = elems.size();
  FiniteGroup G;
  G.order_ = n;
  G.table_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      G.table_[a * n + b] = index.at(compose(elems[a], elems[b]));
  G.perms_ = std::move(elems);
  G.degree_ = degree;
  for (auto &g : gens)
    G.generators_.push_back(index.at(g));
  G.finish();
  return G;
}

Elem FiniteGroup::pow(Elem x, long long k) const
{
  if (k < 0) {
    x = inv(x);
    k = -k;
  }
  Elem r = 0;
  Elem base = x;
  while (k > 0) {
    if (k & 1)
      r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

std::size_t FiniteGroup::element_order(Elem x) const
{
  std::size_t k = 1;
  Elem y = x;
  while (y != 0) {
    y = mul(y, x);
    ++k;
  }
  return k;
}

std::optional<Elem> FiniteGroup::find_permutation(const Permutation &perm) const
{
  for (std::size_t i = 0; i < perms_.size(); ++i)
    if (perms_[i] == perm)
      return Elem(i);
  return std::nullopt;
}

std::string FiniteGroup::label(Elem x) const
{
  if (x < labels_.size())
    return labels_[x];
  if (!perms_.empty())
    return format_cycles(perms_[x]);
  return "e" + std::to_string(x);
}

// --- Subgroup ----------------------------------------------------------------

Subgroup::Subgroup(std::vector<Elem> members, std::size_t group_order)
: members_(std::move(members)), mask_(group_order)
{
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (auto x : members_)
    mask_.set(x);
}

std::size_t Subgroup::position(Elem x) const
{
  auto it = std::lower_bound(members_.begin(), members_.end(), x);
  if (it == members_.end() || *it != x)
    throw Error(ErrorCode::DomainMismatch, "element not in subgroup");
  return std::size_t(it - members_.begin());
}

bool canonical_less(const Subgroup &a, const Subgroup &b)
{
  if (a.order() != b.order())
    return a.order() > b.order();
  return a.members() < b.members();
}

} // namespace fusion
