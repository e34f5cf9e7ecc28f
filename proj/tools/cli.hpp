#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "erne/poset.hpp"
#include "erne/text_format.hpp"

namespace erne::cli {

/// Exit codes shared by every verb.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;  // counts differ, NotInFamily, partition violation
inline constexpr int kExitUsage = 2;   // bad flags, parse errors, limits

/// Runs one command line (without the program name). `in` backs `--in -` and
/// omitted `--in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// Built-in anchors: empty, antichain<k>, chain<k>, lambda, vee. Elements are
/// labelled z1..zk. Returns false if `name` is not a preset.
bool make_preset(const std::string& name, LabeledOrder& result);

/// Hasse diagram as DOT. Role sets pick node styles: Z filled black dots,
/// X small hollow circles, the apex a hollow diamond. Nodes are grouped into
/// ranks by height, drawn bottom to top.
std::string to_dot(const PartialOrder& order, const ElementTable& table, ElementSet x_role = {},
                   ElementSet z_role = {}, ElementSet apex_role = {});

}  // namespace erne::cli
