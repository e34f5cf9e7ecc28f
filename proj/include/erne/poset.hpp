#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "erne/errors.hpp"

namespace erne {

/// Element ids are positions in a label table: dense, 0-based.
using Id = int;

inline constexpr int kMaxElements = 16;

/// Set of element ids, one bit per id.
class ElementSet {
 public:
  using Bits = std::uint16_t;

  class iterator {
   public:
    using value_type = Id;
    using difference_type = std::ptrdiff_t;

    constexpr iterator() = default;
    constexpr explicit iterator(Bits rest) : rest_(rest) {}
    constexpr Id operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= static_cast<Bits>(rest_ - 1);
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    Bits rest_ = 0;
  };

  constexpr ElementSet() = default;
  constexpr explicit ElementSet(Bits bits) : bits_(bits) {}
  ElementSet(std::initializer_list<Id> ids);

  static constexpr ElementSet single(Id id) { return ElementSet(static_cast<Bits>(1u << id)); }
  /// Ids 0..n-1.
  static constexpr ElementSet first(int n) {
    return ElementSet(static_cast<Bits>(n >= 16 ? 0xFFFFu : (1u << n) - 1u));
  }

  constexpr Bits bits() const { return bits_; }
  constexpr bool contains(Id id) const { return (bits_ >> id) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(ElementSet other) const { return (bits_ & other.bits_) != 0; }
  /// Largest id; undefined on the empty set.
  constexpr Id max_id() const { return 15 - std::countl_zero(bits_); }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  constexpr ElementSet& operator|=(ElementSet o) { bits_ |= o.bits_; return *this; }
  constexpr ElementSet& operator&=(ElementSet o) { bits_ &= o.bits_; return *this; }
  constexpr ElementSet& operator-=(ElementSet o) { bits_ &= static_cast<Bits>(~o.bits_); return *this; }

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) { return a |= b; }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) { return a &= b; }
  /// Set difference.
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) { return a -= b; }

  constexpr auto operator<=>(const ElementSet&) const = default;

 private:
  Bits bits_ = 0;
};

/// A raw set of ordered pairs over a carrier. No order axioms are implied;
/// this is the input side of `validate` and `transitive_hull`.
class Relation {
 public:
  Relation() = default;
  explicit Relation(ElementSet carrier) : carrier_(carrier) {}
  Relation(ElementSet carrier, std::initializer_list<std::pair<Id, Id>> pairs);

  ElementSet carrier() const { return carrier_; }
  /// Adds (a, b). Throws ForeignElement if either end is outside the carrier.
  void add(Id a, Id b);
  bool contains(Id a, Id b) const { return carrier_.contains(a) && rows_[a].contains(b); }
  ElementSet successors(Id a) const { return rows_[a]; }
  std::size_t pair_count() const;

  auto operator<=>(const Relation&) const = default;

 private:
  ElementSet carrier_;
  std::array<ElementSet, kMaxElements> rows_{};
};

/// A reflexive, antisymmetric, transitive relation on a finite carrier.
///
/// Row i of the up-matrix is the up-set of element i (including i itself),
/// row i of the down-matrix the down-set. Rows of ids outside the carrier are
/// empty. Instances are immutable; every operation returns a new value.
class PartialOrder {
 public:
  /// The empty relation on the empty carrier.
  PartialOrder() = default;

  /// Builds from up-rows that already satisfy the order axioms. The rows must
  /// include the diagonal. Asserts validity in debug builds; use `validate`
  /// for untrusted input.
  static PartialOrder from_up_rows(ElementSet carrier, const std::array<ElementSet, kMaxElements>& up);

  ElementSet carrier() const { return carrier_; }
  int size() const { return carrier_.size(); }
  bool less_equal(Id a, Id b) const { return carrier_.contains(a) && up_[a].contains(b); }
  bool less(Id a, Id b) const { return a != b && less_equal(a, b); }
  bool comparable(Id a, Id b) const { return less_equal(a, b) || less_equal(b, a); }
  /// ↑x, including x.
  ElementSet up(Id x) const { return up_[x]; }
  /// ↓x, including x.
  ElementSet down(Id x) const { return down_[x]; }
  const std::array<ElementSet, kMaxElements>& up_rows() const { return up_; }

  /// Strict pairs (a, b), a < b, in (a, b) id order.
  std::vector<std::pair<Id, Id>> strict_pairs() const;
  Relation as_relation() const;

  auto operator<=>(const PartialOrder& other) const {
    if (auto c = carrier_ <=> other.carrier_; c != 0) return c;
    return up_ <=> other.up_;
  }
  bool operator==(const PartialOrder& other) const {
    return carrier_ == other.carrier_ && up_ == other.up_;
  }

  std::size_t hash() const;

 private:
  ElementSet carrier_;
  std::array<ElementSet, kMaxElements> up_{};
  std::array<ElementSet, kMaxElements> down_{};
};

struct PartialOrderHash {
  std::size_t operator()(const PartialOrder& r) const { return r.hash(); }
};

/// Carrier partition used by the split maps and the relation families: the
/// lower part (X), the upper part (Y resp. Z), and an optional apex point y.
struct SplitContext {
  ElementSet lower;
  ElementSet upper;
  std::optional<Id> apex;

  /// Throws OverlappingCarriers when the parts or the apex collide.
  void check() const;
  /// lower ∪ upper ∪ {apex}.
  ElementSet all() const;
  /// upper ∪ {apex}.
  ElementSet upper_with_apex() const;
};

// ---- construction --------------------------------------------------------

/// Checks `strict_pairs` and adds the diagonal. The input must already be
/// transitively closed; nothing is closed silently.
PartialOrder validate(ElementSet carrier, const Relation& strict_pairs);
PartialOrder validate(ElementSet carrier, std::initializer_list<std::pair<Id, Id>> strict_pairs);

/// True iff `r` (diagonal included) is reflexive, antisymmetric and transitive.
bool is_partial_order(const Relation& r);

PartialOrder antichain(ElementSet carrier);
/// The chain on `carrier` following id order.
PartialOrder chain(ElementSet carrier);
/// The chain visiting `ids` from bottom to top.
PartialOrder chain(std::initializer_list<Id> ids);
/// Λ: `left` and `right` below `top`.
PartialOrder lambda(Id left, Id top, Id right);
/// V = Λ^d: `bottom` below `left` and `right`.
PartialOrder vee(Id left, Id bottom, Id right);

// ---- relational algebra --------------------------------------------------

/// R ∩ (M × M). Throws ForeignElement if M ⊄ c(R).
PartialOrder induced(const PartialOrder& r, ElementSet m);
PartialOrder dual(const PartialOrder& r);
/// R1 ∪ R2 on disjoint carriers.
PartialOrder direct_sum(const PartialOrder& r1, const PartialOrder& r2);
/// R1 ∪ R2 ∪ (c(R1) × c(R2)) on disjoint carriers.
PartialOrder ordinal_sum(const PartialOrder& r1, const PartialOrder& r2);

/// Smallest transitive relation containing both inputs, diagonal of the
/// union carrier included. Throws AntisymmetryViolation if the closure
/// contains a cycle.
PartialOrder transitive_hull(const Relation& p, const Relation& q);

// ---- ends, extremal points, convexity ------------------------------------

ElementSet down_set(const PartialOrder& r, ElementSet m);
ElementSet up_set(const PartialOrder& r, ElementSet m);

bool is_lower_end(const PartialOrder& r, ElementSet m);
bool is_upper_end(const PartialOrder& r, ElementSet m);

/// 𝓛(R), ascending by bit pattern. Includes ∅ and the carrier.
std::vector<ElementSet> lower_ends(const PartialOrder& r);

ElementSet maximal_points(const PartialOrder& r);
ElementSet minimal_points(const PartialOrder& r);
/// max R|_M.
ElementSet maximal_points_of(const PartialOrder& r, ElementSet m);
ElementSet minimal_points_of(const PartialOrder& r, ElementSet m);

bool is_antichain(const PartialOrder& r);

bool is_convex(const PartialOrder& r, ElementSet m);
/// If M is not convex, a triple (a, x, b) with a ≤ x ≤ b, a, b ∈ M, x ∉ M.
std::optional<std::array<Id, 3>> convexity_witness(const PartialOrder& r, ElementSet m);

/// γ_R(M) = ⋃_{m,n ∈ M} ↑m ∩ ↓n, the smallest convex superset of M.
ElementSet convex_hull(const PartialOrder& r, ElementSet m);

}  // namespace erne

template <>
struct std::hash<erne::PartialOrder> {
  std::size_t operator()(const erne::PartialOrder& r) const { return r.hash(); }
};
