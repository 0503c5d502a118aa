#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mcs {

/// Index of a group element, valid relative to one FiniteGroup.
using Element = int;

/**
 * Immutable finite group with elements indexed 0..order-1.
 *
 * Groups up to order 4096 hold the full multiplication table; larger groups
 * evaluate the operation on demand from their structural definition.  Copies
 * share state, so passing a FiniteGroup by value is cheap and concurrent
 * readers need no synchronization.
 *
 * Construction validates the group axioms: a two-sided identity, two-sided
 * inverses, and associativity (exhaustively for order <= 256, on a fixed
 * sample of random triples above that).
 */
class FiniteGroup {
 public:
  static constexpr int kTableThreshold = 4096;

  /// Build from a full multiplication table (row-major, table[a*order+b] = ab).
  /// Pass identity = -1 to have it located by scan.
  static FiniteGroup from_table(int order, std::vector<std::uint16_t> table,
                                std::vector<std::string> names,
                                std::string spec = "", Element identity = -1);

  /// Build from an operation callback.  Orders <= kTableThreshold are
  /// materialized into a table; larger groups keep the callback.  `inverse`
  /// may be null, in which case inverses are found by scanning.
  static FiniteGroup from_op(int order,
                             std::function<Element(Element, Element)> op,
                             std::function<Element(Element)> inverse,
                             Element identity, std::vector<std::string> names,
                             std::string spec = "");

  int order() const noexcept;
  Element op(Element a, Element b) const;
  Element identity() const noexcept;
  Element inverse(Element a) const;
  const std::string& name(Element a) const;
  const std::vector<std::string>& names() const noexcept;

  /// Element with the given display name; throws std::invalid_argument if absent.
  Element element(std::string_view name) const;
  std::optional<Element> find_element(std::string_view name) const noexcept;

  /// The group-spec string that built this group ("" for ad hoc groups).
  const std::string& spec() const noexcept;

  bool has_table() const noexcept;

  /// True when both handles share the same underlying state.
  bool same_as(const FiniteGroup& other) const noexcept;

  /// Shared immutable representation; defined in the implementation file.
  struct State;

 private:
  explicit FiniteGroup(std::shared_ptr<const State> state);
  std::shared_ptr<const State> state_;
};

/**
 * A verified subgroup, stored as a strictly increasing element-index list
 * inside a parent group.  create() checks closure under the operation and
 * inverses, membership of the identity, and Lagrange divisibility.
 */
class SubgroupHandle {
 public:
  static SubgroupHandle create(FiniteGroup parent, std::vector<Element> elements);

  const FiniteGroup& parent() const noexcept { return parent_; }
  const std::vector<Element>& elements() const noexcept { return elements_; }
  int size() const noexcept { return static_cast<int>(elements_.size()); }
  bool contains(Element x) const noexcept;

 private:
  SubgroupHandle(FiniteGroup parent, std::vector<Element> elements);
  FiniteGroup parent_;
  std::vector<Element> elements_;  // sorted ascending
};

enum class CosetSide { kLeft, kRight };

/**
 * An ordered complete set of coset representatives: exactly one element from
 * each left (right) coset of `subgroup` in `parent`.
 */
class RepList {
 public:
  static RepList create(FiniteGroup parent, SubgroupHandle subgroup,
                        std::vector<Element> reps, CosetSide side);

  const FiniteGroup& parent() const noexcept { return parent_; }
  const SubgroupHandle& subgroup() const noexcept { return subgroup_; }
  const std::vector<Element>& reps() const noexcept { return reps_; }
  int size() const noexcept { return static_cast<int>(reps_.size()); }
  CosetSide side() const noexcept { return side_; }

 private:
  RepList(FiniteGroup parent, SubgroupHandle subgroup, std::vector<Element> reps,
          CosetSide side);
  FiniteGroup parent_;
  SubgroupHandle subgroup_;
  std::vector<Element> reps_;
  CosetSide side_;
};

// ---------------------------------------------------------------------------
// Builders
// ---------------------------------------------------------------------------

/// Z_n under addition mod n.  Identity 0, names "0".."n-1", spec "C<n>".
FiniteGroup make_cyclic(int n);

/// A x B with componentwise operation.  Element (a,b) sits at index a*|B|+b.
/// Names are juxtaposed when every component name is a single character
/// (so Z3 x Z3 elements read "01", "12", ...), otherwise "(a,b)".
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

/// Symmetric group on n letters, 1 <= n <= 5.  Elements enumerate the
/// permutations in lexicographic one-line order; names are one-line words
/// over "1".."n"; op(p,q) applies q first, then p.
FiniteGroup make_symmetric(int n);

/// Extra-special group of order p^3 and exponent p (p an odd prime),
/// realized as triples (x,y,z) mod p with
///   (x,y,z)(x',y',z') = (x+x', y+y', z+z'+x*y').
/// Index of (x,y,z) is x*p^2 + y*p + z, so the generators sit at
/// a = (1,0,0) = p^2, b = (0,1,0) = p, c = (0,0,1) = 1, and satisfy
/// ab = bac, ac = ca, bc = cb.  The relations are verified after building.
FiniteGroup make_heisenberg(int p);

/// Extra-special group of order p^3 and exponent p^2 (p an odd prime),
/// realized as pairs (i mod p^2, j mod p) with
///   (i,j)(i',j') = (i*(1+p)^{j'} + i' mod p^2, j+j').
/// Index of (i,j) is i*p + j; the generators a = (1,0) = p and b = (0,1) = 1
/// satisfy ab = ba^{1+p}, and the center is <a^p>.
FiniteGroup make_modular_extraspecial(int p);

// ---------------------------------------------------------------------------
// Queries
// ---------------------------------------------------------------------------

/// x^k for k >= 0 (k = 0 gives the identity).
Element power(const FiniteGroup& g, Element x, long long k);

/// Least n >= 1 with x^n = identity.
int element_order(const FiniteGroup& g, Element x);

/// Least n >= 1 with x^n = identity for every x (lcm of element orders).
int exponent(const FiniteGroup& g);

bool is_abelian(const FiniteGroup& g);

/// Elements commuting with all of g, as a verified subgroup.
SubgroupHandle center(const FiniteGroup& g);

/// Smallest subgroup containing `gens` (which must be nonempty).
SubgroupHandle subgroup_generated(const FiniteGroup& g, std::span<const Element> gens);

inline SubgroupHandle subgroup_generated(const FiniteGroup& g,
                                         std::initializer_list<Element> gens) {
  return subgroup_generated(g, std::span<const Element>(gens.begin(), gens.size()));
}

/// Canonical representatives: each coset is represented by its minimal
/// element index, and cosets are ordered by that minimum.
RepList coset_reps(const FiniteGroup& g, const SubgroupHandle& n, CosetSide side);

/// Left-to-right fold of the operation; the empty product is the identity.
Element product_of(const FiniteGroup& g, std::span<const Element> xs);

inline Element product_of(const FiniteGroup& g, std::initializer_list<Element> xs) {
  return product_of(g, std::span<const Element>(xs.begin(), xs.size()));
}

/// Whether the product of all elements of the abelian group `a`, taken in
/// index order, is the identity.  Throws std::invalid_argument when `a` is
/// not abelian.
bool product_of_all_trivial(const FiniteGroup& a);

/// Number of elements of order exactly 2 in the abelian group `a`.
/// Throws std::invalid_argument when `a` is not abelian.
int involution_count(const FiniteGroup& a);

}  // namespace mcs
