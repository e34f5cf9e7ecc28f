#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "erne/bijections.hpp"
#include "erne/enumeration.hpp"
#include "erne/families.hpp"

namespace erne::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buffer;
  if (path.empty() || path == "-") {
    buffer << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw UsageError("cannot open '" + path + "'");
    buffer << file.rdbuf();
  }
  return buffer.str();
}

/// Preset name, file path, or `-` for `in`.
LabeledOrder load_anchor(const std::string& spec, std::istream& in) {
  LabeledOrder result;
  if (make_preset(spec, result)) return result;
  if (spec == "-") return parse_order(read_input(spec, in));
  std::ifstream file(spec);
  if (!file) throw UsageError("'" + spec + "' is neither a preset nor a readable file");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse_order(buffer.str());
}

/// `--X 2` adds x1, x2; `--X a,b` adds the listed labels.
ElementSet add_points(ElementTable& table, const std::string& spec) {
  ElementSet added;
  if (all_digits(spec)) {
    const int n = std::stoi(spec);
    for (int i = 1; i <= n; ++i) added |= ElementSet::single(table.add("x" + std::to_string(i)));
    return added;
  }
  std::stringstream items(spec);
  std::string item;
  while (std::getline(items, item, ',')) {
    if (!item.empty()) added |= ElementSet::single(table.add(item));
  }
  return added;
}

std::string render_witness(const NotInFamilyError& e, const ElementTable& table) {
  std::string out = e.reason();
  if (!e.witness().empty()) {
    out += " (witness:";
    for (int id : e.witness()) out += ' ' + (id < table.size() ? table.label(id) : std::to_string(id));
    out += ')';
  }
  return out;
}

json classes_json(const std::vector<ClassCount>& classes, const ElementTable& table) {
  json arr = json::array();
  for (const auto& c : classes) {
    arr.push_back({{"form", to_hex(c.form)},
                   {"multiplicity", c.multiplicity},
                   {"representative", format_order_inline(c.representative, table)}});
  }
  return arr;
}

std::string multiplicity_list(const std::vector<ClassCount>& classes) {
  std::string out;
  for (auto m : CountReport::multiplicities(classes)) out += (out.empty() ? "" : " ") + std::to_string(m);
  return out;
}

void print_count_report(std::ostream& out, const CountReport& report, const ElementTable& table,
                        const PartialOrder& q, ElementSet x, Id apex) {
  out << "lhs=" << report.lhs_count << " rhs=" << report.rhs_count << ' '
      << (report.equal() ? "equal" : "DIFFERENT") << '\n';
  out << "Q: " << format_order_inline(q, table) << '\n';
  out << "X: " << table.format_set(x) << "  apex: " << table.label(apex) << '\n';
  out << "lhs = #N*_{Q+A_y}(X, Z+y), rhs = #I_{Q^d}(X, Z)\n";
  out << "classes (role-preserving): lhs " << report.lhs_classes.size() << ", rhs " << report.rhs_classes.size()
      << '\n';
  out << "  lhs multiplicities: " << multiplicity_list(report.lhs_classes) << '\n';
  out << "  rhs multiplicities: " << multiplicity_list(report.rhs_classes) << '\n';
  for (const auto& [name, classes] : {std::pair{"lhs", &report.lhs_classes}, std::pair{"rhs", &report.rhs_classes}}) {
    out << name << " classes:\n";
    for (const auto& c : *classes) {
      out << "  " << c.multiplicity << "x  " << format_order_inline(c.representative, table) << '\n';
    }
  }
  out << "blocks (G in G_Q(X)): " << report.block_table.size() << '\n';
  out << "  lhs\trhs\tG\n";
  for (const auto& b : report.block_table) {
    out << "  " << b.lhs << '\t' << b.rhs << '\t' << format_order_inline(b.index, table) << '\n';
  }
}

json count_json(const CountReport& report, const ElementTable& table, const PartialOrder& q, ElementSet x,
                Id apex, const std::string& command) {
  json params;
  params["Q"] = format_order_inline(q, table);
  params["X"] = json::array();
  for (Id id : x) params["X"].push_back(table.label(id));
  params["apex"] = table.label(apex);
  json blocks = json::array();
  for (const auto& b : report.block_table) {
    blocks.push_back({{"G", format_order_inline(b.index, table)}, {"lhs", b.lhs}, {"rhs", b.rhs}});
  }
  return json{{"command", command},
              {"params", params},
              {"lhs", report.lhs_count},
              {"rhs", report.rhs_count},
              {"equal", report.equal()},
              {"classes", {{"lhs", classes_json(report.lhs_classes, table)},
                           {"rhs", classes_json(report.rhs_classes, table)}}},
              {"blocks", blocks}};
}

// ---- verbs ---------------------------------------------------------------

struct CountArgs {
  std::string q = "empty";
  std::string x = "0";
  std::string apex = "y";
  int max_size = kDefaultMaxSize;
  bool json = false;
};

int cmd_count(const CountArgs& args, std::istream& in, std::ostream& out) {
  LabeledOrder anchor = load_anchor(args.q, in);
  ElementTable table = anchor.table;
  const ElementSet x = add_points(table, args.x);
  const Id apex = table.add(args.apex);
  const CountReport report = theorem_count_check(anchor.order, x, apex, args.max_size);
  if (args.json) {
    out << count_json(report, table, anchor.order, x, apex, "count").dump() << '\n';
  } else {
    print_count_report(out, report, table, anchor.order, x, apex);
  }
  return report.equal() ? kExitOk : kExitFailed;
}

struct MapArgs {
  std::string verb;
  std::string in = "-";
  std::string x;
  std::string apex;
  bool check = false;
};

int cmd_map(const MapArgs& args, std::istream& in, std::ostream& out, std::ostream& err) {
  LabeledOrder input = parse_order(read_input(args.in, in));
  ElementTable table = input.table;
  const PartialOrder& r = input.order;
  const ElementSet x = table.parse_set(args.x);
  try {
    if (args.verb == "tau") {
      const SplitContext split{x, r.carrier() - x, std::nullopt};
      const PartialOrder image = tau(r, split);
      if (args.check && !is_member(image, FamilySpec{FamilyKind::U, split, std::nullopt})) {
        err << "error: tau image is not in U(X, Y)\n";
        return kExitFailed;
      }
      out << format_order(image, table);
      return kExitOk;
    }
    if (args.verb == "phi-inverse") {
      const SplitContext split{x, r.carrier() - x, std::nullopt};
      const MonotoneLowerEndMap f = phi_inverse(r, split);
      if (args.check && phi(f, induced(r, split.upper)) != r) {
        err << "error: phi(phi_inverse(R)) differs from R\n";
        return kExitFailed;
      }
      out << format_order(f.base(), table) << "map:\n";
      for (Id y : f.domain()) {
        out << table.label(y) << " ->";
        for (Id a : f(y)) out << ' ' << table.label(a);
        out << '\n';
      }
      return kExitOk;
    }
    if (args.verb == "sigma") {
      if (args.apex.empty()) throw UsageError("map sigma needs --apex");
      const Id apex = table.id_of(args.apex);
      const SplitContext split{x, r.carrier() - x - ElementSet::single(apex), apex};
      const PartialOrder image = sigma(r, split, args.check ? Postcheck::On : Postcheck::Off);
      out << format_order(image, table);
      return kExitOk;
    }
    if (args.verb == "sigma-inverse") {
      const Id apex = table.add(args.apex.empty() ? "y" : args.apex);
      const SplitContext split{x, r.carrier() - x, apex};
      const PartialOrder image = sigma_inverse(r, split, args.check ? Postcheck::On : Postcheck::Off);
      out << format_order(image, table);
      return kExitOk;
    }
  } catch (const NotInFamilyError& e) {
    err << "error: NotInFamily: " << render_witness(e, table) << '\n';
    return kExitFailed;
  }
  throw UsageError("unknown map verb '" + args.verb + "'");
}

struct VerifyTheoremArgs {
  int max_z = 3;
  int max_x = 2;
  int max_size = kDefaultMaxSize;
  bool json = false;
};

int cmd_verify_theorem(const VerifyTheoremArgs& args, std::ostream& out) {
  if (args.max_z < 0 || args.max_x < 0) throw UsageError("--maxZ and --maxX must be non-negative");
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  if (!args.json) out << "|Z|\t|X|\tlhs\trhs\tblocks\tresult\tQ\n";
  for (int zs = 0; zs <= args.max_z; ++zs) {
    ElementTable base = ElementTable::numbered("z", zs);
    const ElementSet z = base.all();
    check_limit(z, args.max_size);
    for (const PartialOrder& q : all_posets(z, args.max_size)) {
      for (int xs = 0; xs <= args.max_x; ++xs) {
        ElementTable table = base;
        const ElementSet x = add_points(table, std::to_string(xs));
        const Id apex = table.add("y");
        const CountReport report = theorem_count_check(q, x, apex, args.max_size);
        const bool ok = report.equal() && report.blocks_equal();
        ++instances;
        if (!ok) ++failures;
        if (args.json) {
          json line = count_json(report, table, q, x, apex, "verify theorem");
          line["blocks_equal"] = report.blocks_equal();
          out << line.dump() << '\n';
        } else {
          out << zs << '\t' << xs << '\t' << report.lhs_count << '\t' << report.rhs_count << '\t'
              << report.block_table.size() << '\t' << (ok ? "ok" : "FAIL") << '\t' << format_order_inline(q, table)
              << '\n';
        }
      }
    }
  }
  if (!args.json) out << instances << " instances, " << failures << " failures\n";
  return failures == 0 ? kExitOk : kExitFailed;
}

struct VerifyPartitionArgs {
  std::string q = "empty";
  std::string x = "0";
  std::string system = "both";
  int max_size = kDefaultMaxSize;
  bool json = false;
};

int cmd_verify_partition(const VerifyPartitionArgs& args, std::istream& in, std::ostream& out, std::ostream& err) {
  LabeledOrder anchor = load_anchor(args.q, in);
  ElementTable table = anchor.table;
  const ElementSet x = add_points(table, args.x);
  std::vector<PartitionSystem> systems;
  if (args.system == "convex" || args.system == "both") systems.push_back(PartitionSystem::Convex);
  if (args.system == "maxstar" || args.system == "both") systems.push_back(PartitionSystem::MaxStar);
  if (systems.empty()) throw UsageError("--system must be convex, maxstar or both");
  for (auto system : systems) {
    try {
      const PartitionReport report = verify_partition(anchor.order, x, system, args.max_size);
      out << (args.json ? report.to_json(table) + "\n" : report.to_text(table));
    } catch (const PartitionViolation& e) {
      err << "error: " << e.what() << ": " << format_order_inline(e.witness(), table) << '\n';
      return kExitFailed;
    }
  }
  return kExitOk;
}

struct EnumerateArgs {
  int n = -1;
  std::string family;
  std::string q = "empty";
  std::string x = "0";
  std::string apex;
  int max_size = kDefaultMaxSize;
  bool count_only = false;
};

int cmd_enumerate(const EnumerateArgs& args, std::istream& in, std::ostream& out) {
  if (args.family.empty()) {
    if (args.n < 0) throw UsageError("enumerate needs --n or --family");
    const ElementTable table = ElementTable::numbered("e", args.n);
    std::uint64_t count = 0;
    for_each_poset(GeneratorConfig{table.all(), args.max_size, {}, {}}, [&](const PartialOrder& r) {
      if (!args.count_only) out << (count ? "\n" : "") << format_order(r, table);
      ++count;
    });
    if (args.count_only) out << count << '\n';
    return kExitOk;
  }

  const auto kind = parse_family_kind(args.family);
  if (!kind) throw UsageError("unknown family '" + args.family + "'");
  LabeledOrder anchor = load_anchor(args.q, in);
  ElementTable table = anchor.table;
  const ElementSet x = add_points(table, args.x);
  std::optional<Id> apex;
  if (!args.apex.empty()) apex = table.add(args.apex);
  const FamilySpec spec{*kind, SplitContext{x, anchor.order.carrier(), apex}, anchor.order};

  if (is_map_family(*kind)) {
    const auto maps = enumerate_monotone_maps(spec.effective_anchor(), x, *kind == FamilyKind::Fstar, args.max_size);
    if (args.count_only) {
      out << maps.size() << '\n';
      return kExitOk;
    }
    bool first = true;
    for (const auto& f : maps) {
      out << (first ? "" : "\n") << format_order(f.base(), table) << "map:\n";
      for (Id y : f.domain()) {
        out << table.label(y) << " ->";
        for (Id a : f(y)) out << ' ' << table.label(a);
        out << '\n';
      }
      first = false;
    }
    return kExitOk;
  }

  const auto members = enumerate_family(spec, args.max_size);
  if (args.count_only) {
    out << members.size() << '\n';
    return kExitOk;
  }
  for (std::size_t i = 0; i < members.size(); ++i) out << (i ? "\n" : "") << format_order(members[i], table);
  return kExitOk;
}

struct DotArgs {
  std::string in = "-";
  std::string x;
  std::string z;
  std::string apex;
};

int cmd_export_dot(const DotArgs& args, std::istream& in, std::ostream& out) {
  const LabeledOrder input = parse_order(read_input(args.in, in));
  const ElementSet x = input.table.parse_set(args.x);
  const ElementSet z = input.table.parse_set(args.z);
  const ElementSet apex = args.apex.empty() ? ElementSet{} : ElementSet::single(input.table.id_of(args.apex));
  out << to_dot(input.order, input.table, x, z, apex);
  return kExitOk;
}

}  // namespace

bool make_preset(const std::string& name, LabeledOrder& result) {
  auto sized = [&name](const std::string& prefix, int& k) {
    if (!name.starts_with(prefix)) return false;
    const std::string rest = name.substr(prefix.size());
    if (!all_digits(rest)) return false;
    k = std::stoi(rest);
    return k <= kMaxElements;
  };
  int k = 0;
  if (name == "empty") {
    result = {ElementTable{}, PartialOrder{}};
  } else if (sized("antichain", k)) {
    result.table = ElementTable::numbered("z", k);
    result.order = antichain(result.table.all());
  } else if (sized("chain", k)) {
    result.table = ElementTable::numbered("z", k);
    result.order = chain(result.table.all());
  } else if (name == "lambda") {
    result.table = ElementTable::numbered("z", 3);
    result.order = lambda(0, 1, 2);
  } else if (name == "vee") {
    result.table = ElementTable::numbered("z", 3);
    result.order = vee(0, 1, 2);
  } else {
    return false;
  }
  return true;
}

std::string to_dot(const PartialOrder& order, const ElementTable& table, ElementSet x_role, ElementSet z_role,
                   ElementSet apex_role) {
  // Height = length of the longest chain ending in the element.
  std::array<int, kMaxElements> height{};
  for (Id a : order.carrier()) height[a] = -1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Id a : order.carrier()) {
      if (height[a] >= 0) continue;
      int h = 0;
      bool ready = true;
      for (Id b : order.down(a) - ElementSet::single(a)) {
        if (height[b] < 0) {
          ready = false;
          break;
        }
        h = std::max(h, height[b] + 1);
      }
      if (ready) {
        height[a] = h;
        changed = true;
      }
    }
  }

  auto quoted = [&table](Id id) { return "\"" + table.label(id) + "\""; };
  std::ostringstream os;
  os << "digraph poset {\n";
  os << "  rankdir=BT;\n";
  for (Id a : order.carrier()) {
    os << "  " << quoted(a);
    if (z_role.contains(a)) {
      os << " [shape=circle, style=filled, fillcolor=black, fontcolor=white, label=" << quoted(a) << "]";
    } else if (apex_role.contains(a)) {
      os << " [shape=diamond, style=solid, label=" << quoted(a) << "]";
    } else if (x_role.contains(a)) {
      os << " [shape=circle, width=0.2, label=" << quoted(a) << "]";
    }
    os << ";\n";
  }
  int top = -1;
  for (Id a : order.carrier()) top = std::max(top, height[a]);
  for (int level = 0; level <= top; ++level) {
    os << "  { rank=same;";
    for (Id a : order.carrier()) {
      if (height[a] == level) os << ' ' << quoted(a) << ';';
    }
    os << " }\n";
  }
  for (auto [a, b] : hasse_cover(order)) os << "  " << quoted(a) << " -> " << quoted(b) << ";\n";
  os << "}\n";
  return os.str();
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite partial orders: relation families, the tau/phi/sigma maps, and counting checks", "erne"};
  app.require_subcommand(1);

  CountArgs count;
  auto* count_cmd = app.add_subcommand("count", "Count both sides of the theorem for one anchor Q");
  count_cmd->add_option("--Q", count.q, "Anchor: preset (empty, antichain<k>, chain<k>, lambda, vee), file, or - for stdin")
      ->capture_default_str();
  count_cmd->add_option("--X", count.x, "Size of X, or comma-separated labels")->capture_default_str();
  count_cmd->add_option("--apex", count.apex, "Label of the apex point")->capture_default_str();
  count_cmd->add_option("--max-size", count.max_size, "Carrier size limit")->capture_default_str();
  count_cmd->add_flag("--json", count.json, "Emit one JSON line");

  MapArgs map;
  auto* map_cmd = app.add_subcommand("map", "Apply tau, sigma, sigma-inverse or phi-inverse to a relation");
  map_cmd->add_option("verb", map.verb, "tau | sigma | sigma-inverse | phi-inverse")
      ->required()
      ->check(CLI::IsMember({"tau", "sigma", "sigma-inverse", "phi-inverse"}));
  map_cmd->add_option("--in", map.in, "Input file ('-' for stdin)")->capture_default_str();
  map_cmd->add_option("--X", map.x, "Comma-separated lower part; the rest is the upper part");
  map_cmd->add_option("--apex", map.apex, "Apex label (sigma: in the input; sigma-inverse: added, default y)");
  map_cmd->add_flag("--check", map.check, "Re-validate the image");

  auto* verify_cmd = app.add_subcommand("verify", "Exhaustive checks");
  verify_cmd->require_subcommand(1);
  VerifyTheoremArgs theorem;
  auto* theorem_cmd = verify_cmd->add_subcommand("theorem", "Sweep all labeled Q and |X|");
  theorem_cmd->add_option("--maxZ", theorem.max_z, "Largest |Z|")->capture_default_str();
  theorem_cmd->add_option("--maxX", theorem.max_x, "Largest |X|")->capture_default_str();
  theorem_cmd->add_option("--max-size", theorem.max_size, "Carrier size limit")->capture_default_str();
  theorem_cmd->add_flag("--json", theorem.json, "Emit JSON lines");
  VerifyPartitionArgs partition;
  auto* partition_cmd = verify_cmd->add_subcommand("partition", "Check the G-indexed partitions for one Q");
  partition_cmd->add_option("--Q", partition.q, "Anchor preset or file")->capture_default_str();
  partition_cmd->add_option("--X", partition.x, "Size of X, or comma-separated labels")->capture_default_str();
  partition_cmd->add_option("--system", partition.system, "convex | maxstar | both")->capture_default_str();
  partition_cmd->add_option("--max-size", partition.max_size, "Carrier size limit")->capture_default_str();
  partition_cmd->add_flag("--json", partition.json, "Emit JSON");

  EnumerateArgs enumerate;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "List all posets on n points, or one relation family");
  enumerate_cmd->add_option("--n", enumerate.n, "Carrier size (labels e1..en)");
  enumerate_cmd->add_option("--family", enumerate.family, "u | c | m | mstar | f | fstar | i | nstar | g");
  enumerate_cmd->add_option("--Q", enumerate.q, "Anchor preset or file")->capture_default_str();
  enumerate_cmd->add_option("--X", enumerate.x, "Size of X, or comma-separated labels")->capture_default_str();
  enumerate_cmd->add_option("--apex", enumerate.apex, "Add an apex with this label");
  enumerate_cmd->add_option("--max-size", enumerate.max_size, "Carrier size limit")->capture_default_str();
  enumerate_cmd->add_flag("--count-only", enumerate.count_only, "Print only the number of members");

  DotArgs dot;
  auto* dot_cmd = app.add_subcommand("export-dot", "Hasse diagram of a relation in DOT");
  dot_cmd->add_option("--in", dot.in, "Input file ('-' for stdin)")->capture_default_str();
  dot_cmd->add_option("--X", dot.x, "Labels drawn as small circles");
  dot_cmd->add_option("--Z", dot.z, "Labels drawn as black dots");
  dot_cmd->add_option("--apex", dot.apex, "Label drawn as a diamond");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (count_cmd->parsed()) return cmd_count(count, in, out);
    if (map_cmd->parsed()) return cmd_map(map, in, out, err);
    if (theorem_cmd->parsed()) return cmd_verify_theorem(theorem, out);
    if (partition_cmd->parsed()) return cmd_verify_partition(partition, in, out, err);
    if (enumerate_cmd->parsed()) return cmd_enumerate(enumerate, in, out);
    if (dot_cmd->parsed()) return cmd_export_dot(dot, in, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NotInFamilyError& e) {
    err << "error: NotInFamily: " << e.what() << '\n';
    return kExitFailed;
  } catch (const OrderError& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::PartitionViolation ? kExitFailed : kExitUsage;
  }
  return kExitUsage;
}

}  // namespace erne::cli
