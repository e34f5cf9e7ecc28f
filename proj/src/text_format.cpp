#include "erne/text_format.hpp"

#include <algorithm>
#include <sstream>

namespace erne {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

[[noreturn]] void parse_fail(int line, const std::string& what) {
  throw OrderError(ErrorKind::Parse, "line " + std::to_string(line) + ": " + what);
}

struct Stanza {
  int first_line = 0;
  ElementTable table;
  std::vector<std::pair<Id, Id>> pairs;
};

std::vector<Stanza> split_stanzas(std::string_view text) {
  std::vector<Stanza> stanzas;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.starts_with("carrier:")) {
      Stanza stanza;
      stanza.first_line = line_no;
      for (auto token : split_ws(line.substr(8))) {
        const std::string label(token);
        if (!is_valid_label(label)) parse_fail(line_no, "invalid label '" + label + "'");
        if (stanza.table.has(label)) parse_fail(line_no, "duplicate label '" + label + "'");
        if (stanza.table.size() >= kMaxElements) {
          parse_fail(line_no, "more than " + std::to_string(kMaxElements) + " elements");
        }
        stanza.table.add(label);
      }
      stanzas.push_back(std::move(stanza));
      continue;
    }

    if (stanzas.empty()) parse_fail(line_no, "expected 'carrier:' line");
    Stanza& stanza = stanzas.back();
    const auto lt = line.find('<');
    if (lt == std::string_view::npos || line.find('<', lt + 1) != std::string_view::npos) {
      parse_fail(line_no, "expected a pair 'a < b'");
    }
    const std::string_view lhs = trim(line.substr(0, lt));
    const std::string_view rhs = trim(line.substr(lt + 1));
    if (!is_valid_label(lhs) || !is_valid_label(rhs)) parse_fail(line_no, "expected a pair 'a < b'");
    if (!stanza.table.has(lhs)) parse_fail(line_no, "unknown element '" + std::string(lhs) + "'");
    if (!stanza.table.has(rhs)) parse_fail(line_no, "unknown element '" + std::string(rhs) + "'");
    const Id a = stanza.table.id_of(lhs);
    const Id b = stanza.table.id_of(rhs);
    if (a == b) parse_fail(line_no, "strict pair '" + std::string(lhs) + " < " + std::string(rhs) + "' is reflexive");
    stanza.pairs.emplace_back(a, b);
  }
  return stanzas;
}

LabeledOrder finish(const Stanza& stanza) {
  Relation rel(stanza.table.all());
  for (auto [a, b] : stanza.pairs) rel.add(a, b);
  try {
    return {stanza.table, validate(stanza.table.all(), rel)};
  } catch (const OrderError& e) {
    throw OrderError(e.kind(), "stanza at line " + std::to_string(stanza.first_line) + ": " + e.what());
  }
}

}  // namespace

// ---- ElementTable --------------------------------------------------------

ElementTable::ElementTable(std::vector<std::string> labels) {
  for (auto& label : labels) add(std::move(label));
}

ElementTable ElementTable::numbered(std::string_view prefix, int n) {
  ElementTable table;
  for (int i = 1; i <= n; ++i) table.add(std::string(prefix) + std::to_string(i));
  return table;
}

Id ElementTable::add(std::string label) {
  if (!is_valid_label(label)) throw OrderError(ErrorKind::Parse, "invalid label '" + label + "'");
  if (has(label)) throw OrderError(ErrorKind::Parse, "duplicate label '" + label + "'");
  if (size() >= kMaxElements) {
    throw OrderError(ErrorKind::LimitExceeded, "more than " + std::to_string(kMaxElements) + " elements");
  }
  labels_.push_back(std::move(label));
  return size() - 1;
}

bool ElementTable::has(std::string_view label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

Id ElementTable::id_of(std::string_view label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw OrderError(ErrorKind::Parse, "unknown element '" + std::string(label) + "'");
  return static_cast<Id>(it - labels_.begin());
}

ElementSet ElementTable::parse_set(std::string_view list) const {
  ElementSet out;
  std::size_t pos = 0;
  list = trim(list);
  if (list.empty()) return out;
  while (pos <= list.size()) {
    const auto comma = list.find(',', pos);
    const auto item = trim(list.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    out |= ElementSet::single(id_of(item));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string ElementTable::format_set(ElementSet set) const {
  std::string out = "{";
  bool first = true;
  for (Id id : set) {
    if (!first) out += ", ";
    out += label(id);
    first = false;
  }
  return out + "}";
}

// ---- parsing / formatting ------------------------------------------------

bool is_valid_label(std::string_view label) {
  if (label.empty()) return false;
  return std::none_of(label.begin(), label.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '<' || c == ',' || c == '#' || c == ':';
  });
}

LabeledOrder parse_order(std::string_view text) {
  const auto stanzas = split_stanzas(text);
  if (stanzas.empty()) throw OrderError(ErrorKind::Parse, "line 1: no 'carrier:' line");
  if (stanzas.size() > 1) {
    throw OrderError(ErrorKind::Parse,
                     "line " + std::to_string(stanzas[1].first_line) + ": expected a single relation");
  }
  return finish(stanzas.front());
}

std::vector<LabeledOrder> parse_orders(std::string_view text) {
  std::vector<LabeledOrder> out;
  for (const auto& stanza : split_stanzas(text)) out.push_back(finish(stanza));
  return out;
}

std::string format_order(const PartialOrder& order, const ElementTable& table) {
  std::ostringstream os;
  os << "carrier:";
  for (Id id : order.carrier()) os << ' ' << table.label(id);
  os << '\n';
  for (auto [a, b] : order.strict_pairs()) os << table.label(a) << " < " << table.label(b) << '\n';
  return os.str();
}

std::string format_order_inline(const PartialOrder& order, const ElementTable& table) {
  std::string out;
  for (Id id : order.carrier()) {
    if (!out.empty()) out += ' ';
    out += table.label(id);
  }
  out += " |";
  for (auto [a, b] : order.strict_pairs()) out += ' ' + table.label(a) + '<' + table.label(b);
  return out;
}

}  // namespace erne
