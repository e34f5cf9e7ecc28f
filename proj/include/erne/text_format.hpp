#pragma once

// Plain-text poset format, one relation per stanza:
//
//   # comment
//   carrier: a b c
//   a < b
//   a < c
//
// The carrier line fixes element ids in order of appearance. Each following
// line names one strict pair. The pair set must already be transitively
// closed; the reader does not close it. A new `carrier:` line starts the next
// stanza. Labels are non-empty runs of characters other than whitespace, `<`,
// `,`, `#` and `:`.

#include <string>
#include <string_view>
#include <vector>

#include "erne/poset.hpp"

namespace erne {

/// Display labels for element ids. Ids are positions in the table.
class ElementTable {
 public:
  ElementTable() = default;
  explicit ElementTable(std::vector<std::string> labels);

  /// Labels "<prefix>1" .. "<prefix>n".
  static ElementTable numbered(std::string_view prefix, int n);

  int size() const { return static_cast<int>(labels_.size()); }
  ElementSet all() const { return ElementSet::first(size()); }
  const std::string& label(Id id) const { return labels_.at(static_cast<std::size_t>(id)); }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Appends a label and returns its id. Throws Parse on duplicates or
  /// invalid labels, LimitExceeded past kMaxElements.
  Id add(std::string label);
  /// Throws Parse if unknown.
  Id id_of(std::string_view label) const;
  bool has(std::string_view label) const;

  /// Parses "a,b,c" (empty string is the empty set).
  ElementSet parse_set(std::string_view list) const;
  /// "{a, b}" in id order.
  std::string format_set(ElementSet set) const;

 private:
  std::vector<std::string> labels_;
};

struct LabeledOrder {
  ElementTable table;
  PartialOrder order;
};

bool is_valid_label(std::string_view label);

/// Parses exactly one stanza. Errors carry 1-based line numbers.
LabeledOrder parse_order(std::string_view text);
std::vector<LabeledOrder> parse_orders(std::string_view text);

/// Carrier in id order, then strict pairs sorted by (id, id).
std::string format_order(const PartialOrder& order, const ElementTable& table);

/// Single-line form `a b c | a<b a<c`, used inside reports.
std::string format_order_inline(const PartialOrder& order, const ElementTable& table);

}  // namespace erne
