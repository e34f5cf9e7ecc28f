#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "erne/poset.hpp"

namespace erne {

inline constexpr int kDefaultMaxSize = 7;

/// Throws LimitExceeded if `carrier` has more than `max_size` elements.
void check_limit(ElementSet carrier, int max_size);

struct GeneratorConfig {
  ElementSet carrier;
  int max_size = kDefaultMaxSize;
  /// Insertion order of the carrier's elements; empty means ascending ids.
  std::vector<Id> insertion_order;
  /// Optional membership filter applied to every generated relation.
  std::function<bool(const PartialOrder&)> filter;
};

/// Streams every partial order on `config.carrier` exactly once.
///
/// Elements are inserted one at a time. For a new element the generator picks
/// a strict down-set D (a lower end of the relation built so far) and a
/// strict up-set U (an upper end disjoint from D) with D × U already in the
/// relation, so transitivity holds at every step and no candidate is ever
/// rejected. D and U are enumerated in ascending bit order, which makes the
/// stream deterministic.
void for_each_poset(const GeneratorConfig& config, const std::function<void(const PartialOrder&)>& visit);

std::vector<PartialOrder> all_posets(ElementSet carrier, int max_size = kDefaultMaxSize);
std::vector<PartialOrder> all_posets(const GeneratorConfig& config);
std::uint64_t count_posets(ElementSet carrier, int max_size = kDefaultMaxSize);

/// Byte encoding of a relation up to role-preserving isomorphism.
using CanonicalForm = std::vector<std::uint8_t>;

/// Lexicographically minimal encoding over all relabelings that permute
/// elements only inside their role class. Classes are listed in a fixed order
/// (e.g. X, Z, apex); carrier elements outside every class form one trailing
/// class. Empty classes are allowed and recorded, so forms computed with
/// different class layouts never collide.
CanonicalForm canonical_form(const PartialOrder& r, std::span<const ElementSet> role_classes,
                             int max_size = kDefaultMaxSize);
/// Free isomorphism: all carrier permutations allowed.
CanonicalForm canonical_form(const PartialOrder& r, int max_size = kDefaultMaxSize);

std::string to_hex(const CanonicalForm& form);

/// Transitive reduction: strict pairs (a, b) with nothing strictly between.
std::vector<std::pair<Id, Id>> hasse_cover(const PartialOrder& r);

struct ClassCount {
  CanonicalForm form;
  std::uint64_t multiplicity = 0;
  /// First member of the class in input order.
  PartialOrder representative;
};

/// Groups relations into role-preserving isomorphism classes, ordered by form.
std::vector<ClassCount> classify(std::span<const PartialOrder> relations, std::span<const ElementSet> role_classes,
                                 int max_size = kDefaultMaxSize);

struct BlockCount {
  /// The block index G, a relation on M ∪ Z for some M ⊆ X.
  PartialOrder index;
  std::uint64_t lhs = 0;
  std::uint64_t rhs = 0;
};

/// Both sides of one counting-theorem instance.
struct CountReport {
  std::uint64_t lhs_count = 0;
  std::uint64_t rhs_count = 0;
  std::vector<ClassCount> lhs_classes;
  std::vector<ClassCount> rhs_classes;
  std::vector<BlockCount> block_table;

  bool equal() const { return lhs_count == rhs_count; }
  bool blocks_equal() const;
  /// Sorted class multiplicities, e.g. {1, 1, 1, 2, 2}.
  static std::vector<std::uint64_t> multiplicities(const std::vector<ClassCount>& classes);
};

}  // namespace erne
