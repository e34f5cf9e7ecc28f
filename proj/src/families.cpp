#include "erne/families.hpp"

#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "erne/text_format.hpp"

namespace erne {

namespace {

bool max_condition(const PartialOrder& r, const PartialOrder& q) { return maximal_points(q) == maximal_points(r); }

// Evaluates the defining predicate; carrier checks are done by the caller.
bool satisfies(const PartialOrder& r, FamilyKind kind, ElementSet upper, const std::optional<PartialOrder>& q) {
  switch (kind) {
    case FamilyKind::U:
      return is_upper_end(r, upper);
    case FamilyKind::C:
      return induced(r, upper) == *q && is_convex(r, upper);
    case FamilyKind::M:
      return is_upper_end(r, upper) && satisfies(r, FamilyKind::C, upper, q);
    case FamilyKind::Mstar:
      return satisfies(r, FamilyKind::C, upper, q) && max_condition(r, *q);
    case FamilyKind::I:
      return induced(r, upper) == *q;
    case FamilyKind::Nstar:
      return induced(r, upper) == *q && max_condition(r, *q);
    case FamilyKind::G:
      return induced(r, upper) == *q && convex_hull(r, upper) == r.carrier();
    case FamilyKind::F:
    case FamilyKind::Fstar:
      break;
  }
  throw OrderError(ErrorKind::InvalidMap, std::string(to_string(kind)) + " is a family of maps, not relations");
}

void check_relation_carrier(const PartialOrder& r, const FamilySpec& spec) {
  const ElementSet upper = spec.effective_upper();
  if (spec.kind == FamilyKind::G) {
    if (!upper.subset_of(r.carrier()) || !r.carrier().subset_of(spec.context.all())) {
      throw OrderError(ErrorKind::CarrierMismatch, "carrier must be M ∪ Y for some M ⊆ X");
    }
  } else if (r.carrier() != spec.context.all()) {
    throw OrderError(ErrorKind::CarrierMismatch, "carrier differs from X ∪ Y");
  }
}

}  // namespace

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::U: return "u";
    case FamilyKind::C: return "c";
    case FamilyKind::M: return "m";
    case FamilyKind::Mstar: return "mstar";
    case FamilyKind::F: return "f";
    case FamilyKind::Fstar: return "fstar";
    case FamilyKind::I: return "i";
    case FamilyKind::Nstar: return "nstar";
    case FamilyKind::G: return "g";
  }
  return "?";
}

std::optional<FamilyKind> parse_family_kind(std::string_view name) {
  for (auto kind : {FamilyKind::U, FamilyKind::C, FamilyKind::M, FamilyKind::Mstar, FamilyKind::F, FamilyKind::Fstar,
                    FamilyKind::I, FamilyKind::Nstar, FamilyKind::G}) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

bool is_map_family(FamilyKind kind) { return kind == FamilyKind::F || kind == FamilyKind::Fstar; }

void FamilySpec::check() const {
  context.check();
  if (kind == FamilyKind::U) return;
  if (!anchor) throw OrderError(ErrorKind::CarrierMismatch, "family needs an anchor relation Q");
  if (anchor->carrier() != context.upper) {
    throw OrderError(ErrorKind::CarrierMismatch, "anchor carrier differs from the upper part");
  }
}

PartialOrder FamilySpec::effective_anchor() const {
  check();
  if (!anchor) throw OrderError(ErrorKind::CarrierMismatch, "family needs an anchor relation Q");
  return context.apex ? direct_sum(*anchor, antichain(ElementSet::single(*context.apex))) : *anchor;
}

bool is_member(const PartialOrder& r, const FamilySpec& spec) {
  spec.check();
  if (is_map_family(spec.kind)) {
    throw OrderError(ErrorKind::InvalidMap, std::string(to_string(spec.kind)) + " is a family of maps, not relations");
  }
  check_relation_carrier(r, spec);
  std::optional<PartialOrder> q;
  if (spec.kind != FamilyKind::U) q = spec.effective_anchor();
  return satisfies(r, spec.kind, spec.effective_upper(), q);
}

std::vector<PartialOrder> enumerate_family(const FamilySpec& spec, int max_size) {
  spec.check();
  if (is_map_family(spec.kind)) {
    throw OrderError(ErrorKind::InvalidMap, "use enumerate_monotone_maps for map families");
  }
  check_limit(spec.context.all(), max_size);
  std::optional<PartialOrder> q;
  if (spec.kind != FamilyKind::U) q = spec.effective_anchor();
  const ElementSet upper = spec.effective_upper();
  auto keep = [&](const PartialOrder& r) { return satisfies(r, spec.kind, upper, q); };

  std::vector<PartialOrder> out;
  auto collect = [&out](const PartialOrder& r) { out.push_back(r); };
  if (spec.kind != FamilyKind::G) {
    for_each_poset(GeneratorConfig{spec.context.all(), max_size, {}, keep}, collect);
    return out;
  }
  const ElementSet lower = spec.context.lower;
  ElementSet::Bits m = 0;
  while (true) {
    for_each_poset(GeneratorConfig{upper | ElementSet(m), max_size, {}, keep}, collect);
    if (m == lower.bits()) break;
    m = static_cast<ElementSet::Bits>((m - lower.bits()) & lower.bits());
  }
  return out;
}

// ---- monotone maps -------------------------------------------------------

MonotoneLowerEndMap::MonotoneLowerEndMap(PartialOrder base, ElementSet domain,
                                         const std::array<ElementSet, kMaxElements>& assignment)
    : base_(std::move(base)), domain_(domain) {
  if (domain_.intersects(base_.carrier())) {
    throw OrderError(ErrorKind::OverlappingCarriers, "map domain overlaps the base carrier");
  }
  for (Id y : domain_) {
    const ElementSet image = assignment[static_cast<std::size_t>(y)];
    if (!image.subset_of(base_.carrier()) || !is_lower_end(base_, image)) {
      throw OrderError(ErrorKind::InvalidMap, "image of " + std::to_string(y) + " is not a lower end of the base");
    }
    assignment_[static_cast<std::size_t>(y)] = image;
  }
}

ElementSet MonotoneLowerEndMap::image_union() const {
  ElementSet out;
  for (Id y : domain_) out |= assignment_[static_cast<std::size_t>(y)];
  return out;
}

bool MonotoneLowerEndMap::is_monotone_for(const PartialOrder& q) const {
  if (q.carrier() != domain_) return false;
  for (auto [a, b] : q.strict_pairs()) {
    if (!(*this)(a).subset_of((*this)(b))) return false;
  }
  return true;
}

bool is_member(const MonotoneLowerEndMap& f, const FamilySpec& spec) {
  spec.check();
  if (!is_map_family(spec.kind)) {
    throw OrderError(ErrorKind::InvalidMap, std::string(to_string(spec.kind)) + " is a family of relations, not maps");
  }
  if (f.base().carrier() != spec.context.lower || f.domain() != spec.effective_upper()) {
    throw OrderError(ErrorKind::CarrierMismatch, "map carriers differ from the split");
  }
  if (!f.is_monotone_for(spec.effective_anchor())) return false;
  return spec.kind == FamilyKind::F || f.is_starred();
}

std::vector<MonotoneLowerEndMap> enumerate_monotone_maps(const PartialOrder& q, ElementSet x, bool starred,
                                                         int max_size) {
  const ElementSet y = q.carrier();
  if (x.intersects(y)) throw OrderError(ErrorKind::OverlappingCarriers, "X and Y share elements");
  check_limit(x | y, max_size);

  const std::vector<Id> domain(y.begin(), y.end());
  std::vector<MonotoneLowerEndMap> out;
  for (const PartialOrder& base : all_posets(x, max_size)) {
    const std::vector<ElementSet> ends = lower_ends(base);
    std::array<ElementSet, kMaxElements> assignment{};

    // Depth-first over the domain in id order; monotonicity is checked
    // against every already-assigned point.
    auto assign = [&](auto&& self, std::size_t depth) -> void {
      if (depth == domain.size()) {
        MonotoneLowerEndMap f(base, y, assignment);
        if (!starred || f.is_starred()) out.push_back(std::move(f));
        return;
      }
      const Id current = domain[depth];
      for (ElementSet image : ends) {
        bool ok = true;
        for (std::size_t i = 0; i < depth && ok; ++i) {
          const Id prior = domain[i];
          if (q.less(prior, current) && !assignment[prior].subset_of(image)) ok = false;
          if (q.less(current, prior) && !image.subset_of(assignment[prior])) ok = false;
        }
        if (!ok) continue;
        assignment[current] = image;
        self(self, depth + 1);
      }
      assignment[current] = ElementSet{};
    };
    assign(assign, 0);
  }
  return out;
}

// ---- the G family and the partition check --------------------------------

std::vector<PartialOrder> enumerate_G(const PartialOrder& q, ElementSet x, int max_size) {
  return enumerate_family(FamilySpec{FamilyKind::G, SplitContext{x, q.carrier(), std::nullopt}, q}, max_size);
}

PartialOrder block_index(const PartialOrder& r, ElementSet y) { return induced(r, convex_hull(r, y)); }

std::string_view to_string(PartitionSystem system) {
  return system == PartitionSystem::Convex ? "convex" : "maxstar";
}

std::uint64_t PartitionReport::block_total() const {
  std::uint64_t total = 0;
  for (const auto& b : blocks) total += b.size;
  return total;
}

std::string PartitionReport::to_json(const ElementTable& table) const {
  nlohmann::ordered_json j;
  j["system"] = to_string(system);
  j["target"] = target_size;
  j["block_total"] = block_total();
  j["blocks"] = nlohmann::ordered_json::array();
  for (const auto& b : blocks) {
    j["blocks"].push_back({{"G", format_order_inline(b.index, table)}, {"size", b.size}});
  }
  return j.dump();
}

std::string PartitionReport::to_text(const ElementTable& table) const {
  std::ostringstream os;
  os << "partition " << to_string(system) << ": " << blocks.size() << " blocks, " << block_total()
     << " relations, target " << target_size << '\n';
  for (const auto& b : blocks) os << "  " << b.size << "\t" << format_order_inline(b.index, table) << '\n';
  return os.str();
}

PartitionViolation::PartitionViolation(const std::string& message, PartialOrder witness)
    : OrderError(ErrorKind::PartitionViolation, message), witness_(std::move(witness)) {}

PartitionReport verify_partition(const PartialOrder& q, ElementSet x, PartitionSystem system, int max_size) {
  const ElementSet y = q.carrier();
  const bool convex = system == PartitionSystem::Convex;
  const FamilySpec target_spec{convex ? FamilyKind::I : FamilyKind::Nstar, SplitContext{x, y, std::nullopt}, q};
  const std::vector<PartialOrder> target = enumerate_family(target_spec, max_size);

  std::unordered_map<PartialOrder, int, PartialOrderHash> hits;
  for (const auto& r : target) hits.emplace(r, 0);

  PartitionReport report;
  report.system = system;
  report.target_size = target.size();
  for (const PartialOrder& g : enumerate_G(q, x, max_size)) {
    const FamilySpec block_spec{convex ? FamilyKind::C : FamilyKind::Mstar,
                                SplitContext{x - g.carrier(), g.carrier(), std::nullopt}, g};
    const std::vector<PartialOrder> block = enumerate_family(block_spec, max_size);
    for (const auto& r : block) {
      auto it = hits.find(r);
      if (it == hits.end()) throw PartitionViolation("block member lies outside the target family", r);
      if (++it->second > 1) throw PartitionViolation("relation lies in two blocks", r);
    }
    report.blocks.push_back({g, block.size()});
  }
  for (const auto& r : target) {
    if (hits.at(r) == 0) throw PartitionViolation("relation lies in no block", r);
  }
  return report;
}

}  // namespace erne
