#include "erne/poset.hpp"

#include <cassert>
#include <string>

namespace erne {

namespace {

using Rows = std::array<ElementSet, kMaxElements>;

std::string id_text(Id id) { return std::to_string(id); }

void require_subset(ElementSet m, ElementSet carrier, const char* what) {
  if (!m.subset_of(carrier)) {
    throw OrderError(ErrorKind::ForeignElement,
                     std::string(what) + ": element " + id_text((m - carrier).max_id()) +
                         " is not in the carrier");
  }
}

Rows transpose(ElementSet carrier, const Rows& rows) {
  Rows out{};
  for (Id a : carrier) {
    for (Id b : rows[a]) out[b] |= ElementSet::single(a);
  }
  return out;
}

// Warshall over bit rows.
Rows close_transitively(ElementSet carrier, Rows rows) {
  for (Id k : carrier) {
    for (Id i : carrier) {
      if (rows[i].contains(k)) rows[i] |= rows[k];
    }
  }
  return rows;
}

bool rows_antisymmetric(ElementSet carrier, const Rows& rows) {
  for (Id a : carrier) {
    for (Id b : rows[a] - ElementSet::single(a)) {
      if (rows[b].contains(a)) return false;
    }
  }
  return true;
}

bool rows_transitive(ElementSet carrier, const Rows& rows) {
  for (Id a : carrier) {
    for (Id b : rows[a]) {
      if (!rows[b].subset_of(rows[a])) return false;
    }
  }
  return true;
}

}  // namespace

// ---- ElementSet / Relation -----------------------------------------------

ElementSet::ElementSet(std::initializer_list<Id> ids) {
  for (Id id : ids) *this |= single(id);
}

Relation::Relation(ElementSet carrier, std::initializer_list<std::pair<Id, Id>> pairs)
    : carrier_(carrier) {
  for (auto [a, b] : pairs) add(a, b);
}

void Relation::add(Id a, Id b) {
  if (a < 0 || b < 0 || a >= kMaxElements || b >= kMaxElements || !carrier_.contains(a) ||
      !carrier_.contains(b)) {
    throw OrderError(ErrorKind::ForeignElement,
                     "pair (" + id_text(a) + "," + id_text(b) + ") leaves the carrier");
  }
  rows_[a] |= ElementSet::single(b);
}

std::size_t Relation::pair_count() const {
  std::size_t n = 0;
  for (Id a : carrier_) n += static_cast<std::size_t>(rows_[a].size());
  return n;
}

// ---- PartialOrder --------------------------------------------------------

PartialOrder PartialOrder::from_up_rows(ElementSet carrier, const Rows& up) {
  PartialOrder r;
  r.carrier_ = carrier;
  for (Id a : carrier) r.up_[a] = up[a];
  r.down_ = transpose(carrier, r.up_);
#ifndef NDEBUG
  for (Id a : carrier) assert(r.up_[a].contains(a) && r.up_[a].subset_of(carrier));
  assert(rows_antisymmetric(carrier, r.up_));
  assert(rows_transitive(carrier, r.up_));
#endif
  return r;
}

std::vector<std::pair<Id, Id>> PartialOrder::strict_pairs() const {
  std::vector<std::pair<Id, Id>> out;
  for (Id a : carrier_) {
    for (Id b : up_[a] - ElementSet::single(a)) out.emplace_back(a, b);
  }
  return out;
}

Relation PartialOrder::as_relation() const {
  Relation rel(carrier_);
  for (Id a : carrier_) {
    for (Id b : up_[a]) rel.add(a, b);
  }
  return rel;
}

std::size_t PartialOrder::hash() const {
  // FNV-1a over carrier and rows.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(carrier_.bits());
  for (Id a : carrier_) mix(up_[a].bits() | (static_cast<std::uint64_t>(a) << 16));
  return static_cast<std::size_t>(h);
}

// ---- SplitContext --------------------------------------------------------

void SplitContext::check() const {
  if (lower.intersects(upper)) {
    throw OrderError(ErrorKind::OverlappingCarriers, "lower and upper part share elements");
  }
  if (apex && (lower.contains(*apex) || upper.contains(*apex))) {
    throw OrderError(ErrorKind::OverlappingCarriers, "apex lies in the lower or upper part");
  }
}

ElementSet SplitContext::all() const { return lower | upper_with_apex(); }

ElementSet SplitContext::upper_with_apex() const {
  return apex ? upper | ElementSet::single(*apex) : upper;
}

// ---- construction --------------------------------------------------------

bool is_partial_order(const Relation& r) {
  Rows rows{};
  for (Id a : r.carrier()) {
    rows[a] = r.successors(a);
    if (!rows[a].contains(a)) return false;
  }
  return rows_antisymmetric(r.carrier(), rows) && rows_transitive(r.carrier(), rows);
}

PartialOrder validate(ElementSet carrier, const Relation& strict_pairs) {
  require_subset(strict_pairs.carrier(), carrier, "validate");
  Rows rows{};
  for (Id a : carrier) {
    rows[a] = strict_pairs.carrier().contains(a) ? strict_pairs.successors(a) : ElementSet{};
    rows[a] |= ElementSet::single(a);
  }
  if (!rows_antisymmetric(carrier, rows)) {
    throw OrderError(ErrorKind::AntisymmetryViolation, "relation contains a 2-cycle");
  }
  const Rows closed = close_transitively(carrier, rows);
  if (!rows_antisymmetric(carrier, closed)) {
    throw OrderError(ErrorKind::AntisymmetryViolation, "relation contains a cycle");
  }
  for (Id a : carrier) {
    if (closed[a] != rows[a]) {
      const Id b = (closed[a] - rows[a]).max_id();
      throw OrderError(ErrorKind::NotTransitivelyClosed,
                       "missing composite pair (" + id_text(a) + "," + id_text(b) + ")");
    }
  }
  return PartialOrder::from_up_rows(carrier, rows);
}

PartialOrder validate(ElementSet carrier, std::initializer_list<std::pair<Id, Id>> strict_pairs) {
  Relation rel(carrier);
  for (auto [a, b] : strict_pairs) rel.add(a, b);
  return validate(carrier, rel);
}

PartialOrder antichain(ElementSet carrier) {
  Rows rows{};
  for (Id a : carrier) rows[a] = ElementSet::single(a);
  return PartialOrder::from_up_rows(carrier, rows);
}

PartialOrder chain(ElementSet carrier) {
  Rows rows{};
  for (Id a : carrier) rows[a] = carrier - ElementSet::first(a);
  return PartialOrder::from_up_rows(carrier, rows);
}

PartialOrder chain(std::initializer_list<Id> ids) {
  ElementSet carrier(ids);
  if (carrier.size() != static_cast<int>(ids.size())) {
    throw OrderError(ErrorKind::OverlappingCarriers, "chain lists an element twice");
  }
  Rows rows{};
  ElementSet above = carrier;
  for (Id a : ids) {
    rows[a] = above;
    above -= ElementSet::single(a);
  }
  return PartialOrder::from_up_rows(carrier, rows);
}

PartialOrder lambda(Id left, Id top, Id right) {
  return validate(ElementSet{left, top, right}, {{left, top}, {right, top}});
}

PartialOrder vee(Id left, Id bottom, Id right) {
  return validate(ElementSet{left, bottom, right}, {{bottom, left}, {bottom, right}});
}

// ---- relational algebra --------------------------------------------------

PartialOrder induced(const PartialOrder& r, ElementSet m) {
  require_subset(m, r.carrier(), "induced");
  Rows rows{};
  for (Id a : m) rows[a] = r.up(a) & m;
  return PartialOrder::from_up_rows(m, rows);
}

PartialOrder dual(const PartialOrder& r) {
  Rows rows{};
  for (Id a : r.carrier()) rows[a] = r.down(a);
  return PartialOrder::from_up_rows(r.carrier(), rows);
}

PartialOrder direct_sum(const PartialOrder& r1, const PartialOrder& r2) {
  if (r1.carrier().intersects(r2.carrier())) {
    throw OrderError(ErrorKind::OverlappingCarriers, "direct sum of overlapping carriers");
  }
  Rows rows{};
  for (Id a : r1.carrier()) rows[a] = r1.up(a);
  for (Id a : r2.carrier()) rows[a] = r2.up(a);
  return PartialOrder::from_up_rows(r1.carrier() | r2.carrier(), rows);
}

PartialOrder ordinal_sum(const PartialOrder& r1, const PartialOrder& r2) {
  if (r1.carrier().intersects(r2.carrier())) {
    throw OrderError(ErrorKind::OverlappingCarriers, "ordinal sum of overlapping carriers");
  }
  Rows rows{};
  for (Id a : r1.carrier()) rows[a] = r1.up(a) | r2.carrier();
  for (Id a : r2.carrier()) rows[a] = r2.up(a);
  return PartialOrder::from_up_rows(r1.carrier() | r2.carrier(), rows);
}

PartialOrder transitive_hull(const Relation& p, const Relation& q) {
  const ElementSet carrier = p.carrier() | q.carrier();
  Rows rows{};
  for (Id a : carrier) {
    rows[a] = ElementSet::single(a);
    if (p.carrier().contains(a)) rows[a] |= p.successors(a);
    if (q.carrier().contains(a)) rows[a] |= q.successors(a);
  }
  rows = close_transitively(carrier, rows);
  if (!rows_antisymmetric(carrier, rows)) {
    throw OrderError(ErrorKind::AntisymmetryViolation, "transitive hull contains a cycle");
  }
  return PartialOrder::from_up_rows(carrier, rows);
}

// ---- ends, extremal points, convexity ------------------------------------

ElementSet down_set(const PartialOrder& r, ElementSet m) {
  require_subset(m, r.carrier(), "down_set");
  ElementSet out;
  for (Id a : m) out |= r.down(a);
  return out;
}

ElementSet up_set(const PartialOrder& r, ElementSet m) {
  require_subset(m, r.carrier(), "up_set");
  ElementSet out;
  for (Id a : m) out |= r.up(a);
  return out;
}

bool is_lower_end(const PartialOrder& r, ElementSet m) {
  require_subset(m, r.carrier(), "is_lower_end");
  for (Id a : m) {
    if (!r.down(a).subset_of(m)) return false;
  }
  return true;
}

bool is_upper_end(const PartialOrder& r, ElementSet m) {
  require_subset(m, r.carrier(), "is_upper_end");
  for (Id a : m) {
    if (!r.up(a).subset_of(m)) return false;
  }
  return true;
}

std::vector<ElementSet> lower_ends(const PartialOrder& r) {
  // Walk the subsets of the carrier in ascending bit order.
  std::vector<ElementSet> out;
  const ElementSet::Bits full = r.carrier().bits();
  ElementSet::Bits sub = 0;
  while (true) {
    const ElementSet m(sub);
    bool closed = true;
    for (Id a : m) {
      if (!r.down(a).subset_of(m)) {
        closed = false;
        break;
      }
    }
    if (closed) out.push_back(m);
    if (sub == full) break;
    sub = static_cast<ElementSet::Bits>((sub - full) & full);
  }
  return out;
}

ElementSet maximal_points(const PartialOrder& r) { return maximal_points_of(r, r.carrier()); }

ElementSet minimal_points(const PartialOrder& r) { return minimal_points_of(r, r.carrier()); }

ElementSet maximal_points_of(const PartialOrder& r, ElementSet m) {
  require_subset(m, r.carrier(), "maximal_points_of");
  ElementSet out;
  for (Id a : m) {
    if ((r.up(a) & m) == ElementSet::single(a)) out |= ElementSet::single(a);
  }
  return out;
}

ElementSet minimal_points_of(const PartialOrder& r, ElementSet m) {
  require_subset(m, r.carrier(), "minimal_points_of");
  ElementSet out;
  for (Id a : m) {
    if ((r.down(a) & m) == ElementSet::single(a)) out |= ElementSet::single(a);
  }
  return out;
}

bool is_antichain(const PartialOrder& r) {
  for (Id a : r.carrier()) {
    if (r.up(a) != ElementSet::single(a)) return false;
  }
  return true;
}

std::optional<std::array<Id, 3>> convexity_witness(const PartialOrder& r, ElementSet m) {
  require_subset(m, r.carrier(), "is_convex");
  for (Id a : m) {
    for (Id b : m & r.up(a)) {
      const ElementSet between = r.up(a) & r.down(b);
      if (!between.subset_of(m)) return std::array<Id, 3>{a, (between - m).max_id(), b};
    }
  }
  return std::nullopt;
}

bool is_convex(const PartialOrder& r, ElementSet m) { return !convexity_witness(r, m).has_value(); }

ElementSet convex_hull(const PartialOrder& r, ElementSet m) {
  require_subset(m, r.carrier(), "convex_hull");
  ElementSet hull;
  for (Id a : m) {
    for (Id b : m & r.up(a)) hull |= r.up(a) & r.down(b);
  }
  return hull;
}

}  // namespace erne
