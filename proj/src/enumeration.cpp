#include "erne/enumeration.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace erne {

namespace {

using Rows = std::array<ElementSet, kMaxElements>;
using Bits = ElementSet::Bits;

// Ascending submasks of `full` starting after `sub`; returns false past the end.
bool next_submask(Bits& sub, Bits full) {
  if (sub == full) return false;
  sub = static_cast<Bits>((sub - full) & full);
  return true;
}

class Generator {
 public:
  Generator(std::vector<Id> order, const std::function<void(const PartialOrder&)>& visit,
            const std::function<bool(const PartialOrder&)>& filter)
      : order_(std::move(order)), visit_(visit), filter_(filter) {}

  void run() { extend(0, ElementSet{}); }

 private:
  void extend(std::size_t depth, ElementSet inserted) {
    if (depth == order_.size()) {
      const PartialOrder r = PartialOrder::from_up_rows(inserted, up_);
      if (!filter_ || filter_(r)) visit_(r);
      return;
    }
    const Id e = order_[depth];
    const ElementSet with_e = inserted | ElementSet::single(e);
    Bits down_bits = 0;
    do {
      const ElementSet below(down_bits);
      if (!closed_downward(below)) continue;
      ElementSet pool = inserted - below;
      for (Id d : below) pool &= up_[d];
      Bits up_bits = 0;
      do {
        const ElementSet above(up_bits);
        if (!closed_upward(above)) continue;
        place(e, below, above);
        extend(depth + 1, with_e);
        unplace(e, below, above);
      } while (next_submask(up_bits, pool.bits()));
    } while (next_submask(down_bits, inserted.bits()));
  }

  bool closed_downward(ElementSet m) const {
    for (Id a : m) {
      if (!down_[a].subset_of(m)) return false;
    }
    return true;
  }

  bool closed_upward(ElementSet m) const {
    for (Id a : m) {
      if (!up_[a].subset_of(m)) return false;
    }
    return true;
  }

  void place(Id e, ElementSet below, ElementSet above) {
    const ElementSet self = ElementSet::single(e);
    up_[e] = above | self;
    down_[e] = below | self;
    for (Id d : below) up_[d] |= self;
    for (Id u : above) down_[u] |= self;
  }

  void unplace(Id e, ElementSet below, ElementSet above) {
    const ElementSet self = ElementSet::single(e);
    up_[e] = ElementSet{};
    down_[e] = ElementSet{};
    for (Id d : below) up_[d] -= self;
    for (Id u : above) down_[u] -= self;
  }

  std::vector<Id> order_;
  const std::function<void(const PartialOrder&)>& visit_;
  const std::function<bool(const PartialOrder&)>& filter_;
  Rows up_{};
  Rows down_{};
};

// Up to 16 x 16 relation bits.
using Matrix = std::array<std::uint64_t, 4>;

Matrix encode(const PartialOrder& r, const std::vector<Id>& position_to_id) {
  Matrix m{};
  const std::size_t k = position_to_id.size();
  std::size_t bit = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const ElementSet row = r.up(position_to_id[i]);
    for (std::size_t j = 0; j < k; ++j, ++bit) {
      if (row.contains(position_to_id[j])) m[bit / 64] |= std::uint64_t{1} << (63 - bit % 64);
    }
  }
  return m;
}

void minimize(const PartialOrder& r, std::vector<Id>& positions, const std::vector<std::size_t>& class_starts,
              std::size_t class_index, Matrix& best, bool& have_best) {
  if (class_index + 1 == class_starts.size()) {
    const Matrix m = encode(r, positions);
    if (!have_best || m < best) {
      best = m;
      have_best = true;
    }
    return;
  }
  const auto first = positions.begin() + static_cast<std::ptrdiff_t>(class_starts[class_index]);
  const auto last = positions.begin() + static_cast<std::ptrdiff_t>(class_starts[class_index + 1]);
  std::sort(first, last);
  do {
    minimize(r, positions, class_starts, class_index + 1, best, have_best);
  } while (std::next_permutation(first, last));
}

}  // namespace

void check_limit(ElementSet carrier, int max_size) {
  if (carrier.size() > max_size) {
    throw OrderError(ErrorKind::LimitExceeded, "carrier has " + std::to_string(carrier.size()) +
                                                   " elements, limit is " + std::to_string(max_size));
  }
}

void for_each_poset(const GeneratorConfig& config, const std::function<void(const PartialOrder&)>& visit) {
  check_limit(config.carrier, config.max_size);
  std::vector<Id> order = config.insertion_order;
  if (order.empty()) {
    order.assign(config.carrier.begin(), config.carrier.end());
  } else {
    ElementSet listed;
    for (Id id : order) listed |= ElementSet::single(id);
    if (listed != config.carrier || order.size() != static_cast<std::size_t>(config.carrier.size())) {
      throw OrderError(ErrorKind::CarrierMismatch, "insertion order is not a permutation of the carrier");
    }
  }
  Generator(std::move(order), visit, config.filter).run();
}

std::vector<PartialOrder> all_posets(const GeneratorConfig& config) {
  std::vector<PartialOrder> out;
  for_each_poset(config, [&out](const PartialOrder& r) { out.push_back(r); });
  return out;
}

std::vector<PartialOrder> all_posets(ElementSet carrier, int max_size) {
  return all_posets(GeneratorConfig{carrier, max_size, {}, {}});
}

std::uint64_t count_posets(ElementSet carrier, int max_size) {
  std::uint64_t n = 0;
  for_each_poset(GeneratorConfig{carrier, max_size, {}, {}}, [&n](const PartialOrder&) { ++n; });
  return n;
}

CanonicalForm canonical_form(const PartialOrder& r, std::span<const ElementSet> role_classes, int max_size) {
  check_limit(r.carrier(), max_size);
  std::vector<Id> positions;
  std::vector<std::size_t> class_starts{0};
  CanonicalForm form;
  ElementSet covered;
  auto push_class = [&](ElementSet cls) {
    positions.insert(positions.end(), cls.begin(), cls.end());
    class_starts.push_back(positions.size());
    form.push_back(static_cast<std::uint8_t>(cls.size()));
  };
  form.push_back(static_cast<std::uint8_t>(role_classes.size()));
  for (ElementSet cls : role_classes) {
    const ElementSet part = (cls & r.carrier()) - covered;
    covered |= part;
    push_class(part);
  }
  push_class(r.carrier() - covered);

  Matrix best{};
  bool have_best = false;
  minimize(r, positions, class_starts, 0, best, have_best);

  const std::size_t k = positions.size();
  const std::size_t bytes = (k * k + 7) / 8;
  for (std::size_t i = 0; i < bytes; ++i) {
    form.push_back(static_cast<std::uint8_t>(best[i / 8] >> (56 - 8 * (i % 8))));
  }
  return form;
}

CanonicalForm canonical_form(const PartialOrder& r, int max_size) {
  return canonical_form(r, std::span<const ElementSet>{}, max_size);
}

std::string to_hex(const CanonicalForm& form) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(form.size() * 2);
  for (std::uint8_t byte : form) {
    out += kDigits[byte >> 4];
    out += kDigits[byte & 0xF];
  }
  return out;
}

std::vector<std::pair<Id, Id>> hasse_cover(const PartialOrder& r) {
  std::vector<std::pair<Id, Id>> out;
  for (Id a : r.carrier()) {
    const ElementSet above = r.up(a) - ElementSet::single(a);
    for (Id b : above) {
      const ElementSet between = above & (r.down(b) - ElementSet::single(b));
      if (between.empty()) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<ClassCount> classify(std::span<const PartialOrder> relations, std::span<const ElementSet> role_classes,
                                 int max_size) {
  std::map<CanonicalForm, ClassCount> classes;
  for (const auto& r : relations) {
    auto form = canonical_form(r, role_classes, max_size);
    auto [it, inserted] = classes.try_emplace(form, ClassCount{form, 0, r});
    ++it->second.multiplicity;
  }
  std::vector<ClassCount> out;
  out.reserve(classes.size());
  for (auto& [form, cls] : classes) out.push_back(std::move(cls));
  return out;
}

bool CountReport::blocks_equal() const {
  return std::all_of(block_table.begin(), block_table.end(),
                     [](const BlockCount& b) { return b.lhs == b.rhs; });
}

std::vector<std::uint64_t> CountReport::multiplicities(const std::vector<ClassCount>& classes) {
  std::vector<std::uint64_t> out;
  for (const auto& c : classes) out.push_back(c.multiplicity);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace erne
