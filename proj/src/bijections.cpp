#include "erne/bijections.hpp"

#include <map>
#include <stdexcept>

namespace erne {

namespace {

using Rows = std::array<ElementSet, kMaxElements>;

void require_carrier(const PartialOrder& r, ElementSet expected, const char* what) {
  if (r.carrier() != expected) {
    throw OrderError(ErrorKind::CarrierMismatch, std::string(what) + ": carrier differs from the split");
  }
}

void require_upper_end(const PartialOrder& r, ElementSet y) {
  for (Id a : y) {
    const ElementSet escape = r.up(a) - y;
    if (!escape.empty()) {
      throw NotInFamilyError("upper part is not an upper end", {a, escape.max_id()});
    }
  }
}

void require_convex(const PartialOrder& r, ElementSet m, const char* what) {
  if (auto triple = convexity_witness(r, m)) {
    throw NotInFamilyError(std::string(what) + " is not convex", {(*triple)[0], (*triple)[1], (*triple)[2]});
  }
}

SplitContext require_apex(const SplitContext& context) {
  context.check();
  if (!context.apex) throw OrderError(ErrorKind::CarrierMismatch, "sigma needs an apex");
  return context;
}

// Unchecked core of tau; the caller guarantees Y is an upper end.
PartialOrder tau_unchecked(const PartialOrder& r, ElementSet x, ElementSet y) {
  Rows rows{};
  for (Id a : x) rows[a] = (r.down(a) & x) | (y - r.up(a));
  for (Id a : y) rows[a] = r.down(a) & y;
  return PartialOrder::from_up_rows(x | y, rows);
}

}  // namespace

PartialOrder phi(const MonotoneLowerEndMap& f, const PartialOrder& q) {
  if (q.carrier() != f.domain()) throw OrderError(ErrorKind::CarrierMismatch, "phi: c(Q) differs from the map domain");
  for (auto [a, b] : q.strict_pairs()) {
    if (!f(a).subset_of(f(b))) {
      throw OrderError(ErrorKind::NotMonotone, "f(" + std::to_string(a) + ") is not contained in f(" +
                                                   std::to_string(b) + ")");
    }
  }
  const PartialOrder& base = f.base();
  Rows rows{};
  for (Id a : base.carrier()) rows[a] = base.up(a);
  for (Id y : q.carrier()) {
    rows[y] = q.up(y);
    for (Id a : f(y)) rows[a] |= ElementSet::single(y);
  }
  return PartialOrder::from_up_rows(base.carrier() | q.carrier(), rows);
}

MonotoneLowerEndMap phi_inverse(const PartialOrder& r, const SplitContext& context) {
  context.check();
  require_carrier(r, context.lower | context.upper, "phi_inverse");
  require_upper_end(r, context.upper);
  std::array<ElementSet, kMaxElements> assignment{};
  for (Id y : context.upper) assignment[y] = r.down(y) - context.upper;
  return MonotoneLowerEndMap(induced(r, context.lower), context.upper, assignment);
}

PartialOrder tau(const PartialOrder& r, const SplitContext& context) {
  context.check();
  require_carrier(r, context.lower | context.upper, "tau");
  require_upper_end(r, context.upper);
  return tau_unchecked(r, context.lower, context.upper);
}

PartialOrder sigma(const PartialOrder& r, const SplitContext& context, Postcheck postcheck) {
  require_apex(context);
  const Id y = *context.apex;
  const ElementSet x = context.lower;
  const ElementSet z = context.upper;
  const ElementSet zy = context.upper_with_apex();
  require_carrier(r, context.all(), "sigma");

  // R|_{Z∪{y}} = Q + A_y: the apex is incomparable with Z.
  for (Id a : z) {
    if (r.comparable(a, y)) throw NotInFamilyError("apex is comparable with a point of Z", {a, y});
  }
  require_convex(r, zy, "Z ∪ {y}");
  const ElementSet expected_max = maximal_points_of(r, z) | ElementSet::single(y);
  const ElementSet actual_max = maximal_points(r);
  if (actual_max != expected_max) {
    const ElementSet diff = (actual_max - expected_max) | (expected_max - actual_max);
    throw NotInFamilyError("max R differs from max(Q + A_y)", {diff.max_id()});
  }

  const ElementSet w = x | z;
  const ElementSet below_apex = r.down(y) & w;
  const PartialOrder image = tau_unchecked(induced(r, w), below_apex, w - below_apex);

  if (postcheck == Postcheck::On) {
    const FamilySpec codomain{FamilyKind::C, SplitContext{x, z, std::nullopt}, dual(induced(r, z))};
    if (!is_member(image, codomain)) throw std::logic_error("sigma image left the convex family");
  }
  return image;
}

PartialOrder sigma_inverse(const PartialOrder& r_prime, const SplitContext& context, Postcheck postcheck) {
  require_apex(context);
  const Id y = *context.apex;
  const ElementSet x = context.lower;
  const ElementSet z = context.upper;
  require_carrier(r_prime, x | z, "sigma_inverse");
  require_convex(r_prime, z, "Z");

  const ElementSet upper = up_set(r_prime, z);
  const ElementSet lower = x - upper;
  const PartialOrder flipped = tau_unchecked(r_prime, lower, upper);
  Rows rows = flipped.up_rows();
  const ElementSet apex = ElementSet::single(y);
  rows[y] = apex;
  for (Id a : lower) rows[a] |= apex;
  const PartialOrder image = PartialOrder::from_up_rows(flipped.carrier() | apex, rows);

  if (postcheck == Postcheck::On) {
    const FamilySpec codomain{FamilyKind::Mstar, context, dual(induced(r_prime, z))};
    if (!is_member(image, codomain)) throw std::logic_error("sigma_inverse image left the max-star family");
  }
  return image;
}

CountReport theorem_count_check(const PartialOrder& q, ElementSet x, Id apex, int max_size) {
  const ElementSet z = q.carrier();
  const SplitContext with_apex{x, z, apex};
  with_apex.check();
  check_limit(with_apex.all(), max_size);

  const std::vector<PartialOrder> lhs = enumerate_family(FamilySpec{FamilyKind::Nstar, with_apex, q}, max_size);
  const std::vector<PartialOrder> rhs =
      enumerate_family(FamilySpec{FamilyKind::I, SplitContext{x, z, std::nullopt}, dual(q)}, max_size);

  CountReport report;
  report.lhs_count = lhs.size();
  report.rhs_count = rhs.size();
  const std::array<ElementSet, 3> roles{x, z, ElementSet::single(apex)};
  report.lhs_classes = classify(lhs, roles, max_size);
  report.rhs_classes = classify(rhs, roles, max_size);

  std::map<PartialOrder, std::size_t> row_of;
  for (const PartialOrder& g : enumerate_G(q, x, max_size)) {
    row_of.emplace(g, report.block_table.size());
    report.block_table.push_back({g, 0, 0});
  }
  auto row_for = [&](const PartialOrder& g, const PartialOrder& member) -> BlockCount& {
    const auto it = row_of.find(g);
    if (it == row_of.end()) throw PartitionViolation("block index is not in the G family", member);
    return report.block_table[it->second];
  };
  const ElementSet zy = z | ElementSet::single(apex);
  for (const auto& r : lhs) {
    const PartialOrder g_apex = block_index(r, zy);
    ++row_for(induced(g_apex, g_apex.carrier() - ElementSet::single(apex)), r).lhs;
  }
  for (const auto& r : rhs) ++row_for(dual(block_index(r, z)), r).rhs;
  return report;
}

}  // namespace erne
