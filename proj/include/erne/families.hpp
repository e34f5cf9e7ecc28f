#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "erne/enumeration.hpp"
#include "erne/poset.hpp"

namespace erne {

class ElementTable;

/// The relation families over a split carrier X ∪ Y with anchor Q on Y:
///   U      Y is an upper end
///   C      R|_Y = Q and Y is convex
///   M      U and C
///   Mstar  C and max Q = max R
///   F      monotone lower-end maps (a map family, see MonotoneLowerEndMap)
///   Fstar  F with the images covering X
///   I      R|_Y = Q
///   Nstar  I and max Q = max R
///   G      relations on M ∪ Y, M ⊆ X, with R|_Y = Q and γ_R(Y) = M ∪ Y
enum class FamilyKind { U, C, M, Mstar, F, Fstar, I, Nstar, G };

std::string_view to_string(FamilyKind kind);
std::optional<FamilyKind> parse_family_kind(std::string_view name);
bool is_map_family(FamilyKind kind);

/// Selects one family. With an apex y the upper part becomes Y ∪ {y} and the
/// anchor becomes Q + A_y, so `{Nstar, {X, Z, y}, Q}` denotes 𝔑*_{Q+A_y}(X, Z ∪ {y}).
struct FamilySpec {
  FamilyKind kind = FamilyKind::U;
  SplitContext context;
  std::optional<PartialOrder> anchor;

  /// Throws CarrierMismatch / OverlappingCarriers on malformed specs.
  void check() const;
  ElementSet effective_upper() const { return context.upper_with_apex(); }
  /// Q, or Q + A_y with an apex. Throws CarrierMismatch if the kind needs an
  /// anchor and none is set.
  PartialOrder effective_anchor() const;
};

bool is_member(const PartialOrder& r, const FamilySpec& spec);

/// Generate-then-filter over every partial order on the family's carrier.
/// For G the carriers M ∪ Y are visited for M ⊆ X in ascending bit order.
std::vector<PartialOrder> enumerate_family(const FamilySpec& spec, int max_size = kDefaultMaxSize);

/// f : Y → 𝓛(P) for a base relation P = S(f) on X.
class MonotoneLowerEndMap {
 public:
  /// `assignment[y]` for y ∈ domain must be a lower end of `base`; throws
  /// InvalidMap otherwise.
  MonotoneLowerEndMap(PartialOrder base, ElementSet domain, const std::array<ElementSet, kMaxElements>& assignment);

  const PartialOrder& base() const { return base_; }
  ElementSet domain() const { return domain_; }
  ElementSet operator()(Id y) const { return assignment_.at(static_cast<std::size_t>(y)); }
  /// ⋃ f[domain].
  ElementSet image_union() const;
  /// The H_Q condition: (a, b) ∈ Q implies f(a) ⊆ f(b).
  bool is_monotone_for(const PartialOrder& q) const;
  /// X = ⋃ f[domain].
  bool is_starred() const { return image_union() == base_.carrier(); }

  auto operator<=>(const MonotoneLowerEndMap&) const = default;

 private:
  PartialOrder base_;
  ElementSet domain_;
  std::array<ElementSet, kMaxElements> assignment_{};
};

/// Membership for the map families F and Fstar.
bool is_member(const MonotoneLowerEndMap& f, const FamilySpec& spec);

/// 𝔉_Q(X, Y) (or 𝔉*_Q when `starred`): every base P on X, then every
/// monotone assignment Y → 𝓛(P) in ascending order.
std::vector<MonotoneLowerEndMap> enumerate_monotone_maps(const PartialOrder& q, ElementSet x, bool starred,
                                                         int max_size = kDefaultMaxSize);

/// 𝔊_Q(X) = ⋃_{M ⊆ X} 𝒢_Q(M).
std::vector<PartialOrder> enumerate_G(const PartialOrder& q, ElementSet x, int max_size = kDefaultMaxSize);

/// The block of R in the Lemma-4 style decomposition: R|_{γ_R(Y)}.
PartialOrder block_index(const PartialOrder& r, ElementSet y);

enum class PartitionSystem { Convex, MaxStar };

std::string_view to_string(PartitionSystem system);

struct PartitionBlock {
  PartialOrder index;
  std::uint64_t size = 0;
};

struct PartitionReport {
  PartitionSystem system = PartitionSystem::Convex;
  std::uint64_t target_size = 0;
  std::vector<PartitionBlock> blocks;

  std::uint64_t block_total() const;
  /// One JSON object; blocks carry G in single-line text form.
  std::string to_json(const ElementTable& table) const;
  std::string to_text(const ElementTable& table) const;
};

class PartitionViolation : public OrderError {
 public:
  PartitionViolation(const std::string& message, PartialOrder witness);
  const PartialOrder& witness() const noexcept { return witness_; }

 private:
  PartialOrder witness_;
};

/// Checks that the families ℭ_G(X∖c(G), c(G)) (resp. 𝔐*_G) for G ∈ 𝔊_Q(X)
/// are pairwise disjoint and cover 𝔍_Q(X, Y) (resp. 𝔑*_Q). Throws
/// PartitionViolation with a relation found in zero or several blocks.
PartitionReport verify_partition(const PartialOrder& q, ElementSet x, PartitionSystem system,
                                 int max_size = kDefaultMaxSize);

}  // namespace erne
