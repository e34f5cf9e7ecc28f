// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Counts are cross-checked against the pair-set predicates in oracle.hpp.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "erne/bijections.hpp"
#include "oracle.hpp"

using namespace erne;

namespace {

constexpr Id kApex = 15;

ElementSet ids_from(Id start, int count) {
  ElementSet out;
  for (int i = 0; i < count; ++i) out = out | ElementSet::single(start + i);
  return out;
}

ElementSet z_ids(int m) { return ids_from(0, m); }
ElementSet x_ids(int k) { return ids_from(4, k); }

PartialOrder from_pairs(ElementSet carrier, const oracle::Pairs& pairs) {
  Relation raw(carrier);
  for (auto [a, b] : pairs) {
    if (a != b) raw.add(a, b);
  }
  return validate(carrier, raw);
}

// Labeled anchors on Z, built from the naive relation filter.
std::vector<PartialOrder> anchors(int m) {
  const ElementSet z = z_ids(m);
  std::vector<PartialOrder> out;
  for (const auto& pairs : oracle::all_pors(oracle::points(z))) out.push_back(from_pairs(z, pairs));
  return out;
}

bool same_points(const oracle::Points& a, const oracle::Points& b) {
  return std::set<Id>(a.begin(), a.end()) == std::set<Id>(b.begin(), b.end());
}

// Oracle counts of relations on `carrier` keyed by their restriction to `upper`.
// `starred` additionally requires max R = max R|upper.
std::map<oracle::Pairs, std::uint64_t> restriction_counts(ElementSet carrier, ElementSet upper, bool starred,
                                                          bool convex) {
  const oracle::Points all = oracle::points(carrier);
  const oracle::Points up = oracle::points(upper);
  std::map<oracle::Pairs, std::uint64_t> counts;
  for (const PartialOrder& r : all_posets(carrier)) {
    const oracle::Pairs pairs = oracle::pairs_of(r);
    const oracle::Pairs restricted = oracle::restrict_to(pairs, up);
    if (starred && !same_points(oracle::maximal(all, pairs), oracle::maximal(up, restricted))) continue;
    if (convex && !oracle::is_convex(all, pairs, up)) continue;
    ++counts[restricted];
  }
  return counts;
}

std::uint64_t lookup(const std::map<oracle::Pairs, std::uint64_t>& counts, const PartialOrder& q) {
  const auto it = counts.find(oracle::pairs_of(q));
  return it == counts.end() ? 0 : it->second;
}

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  std::string first_failure;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) first_failure = what;
    ok = ok && cond;
  }
};

std::string describe(const PartialOrder& q) {
  std::ostringstream s;
  s << "Q{";
  for (auto [a, b] : q.strict_pairs()) s << a << "<" << b << " ";
  s << "|" << q.size() << "}";
  return s.str();
}

// 1. #N*_{Q+A_y}(X, Z+y) = #I_{Q^d}(X, Z).
void count_identity(Outcome& out) {
  int instances = 0;
  for (int m = 0; m <= 3; ++m) {
    const auto qs = anchors(m);
    for (int k = 0; k <= 2; ++k) {
      const ElementSet z = z_ids(m), x = x_ids(k);
      const ElementSet zy = z | ElementSet::single(kApex);
      const auto lhs = restriction_counts(x | zy, zy, true, false);
      const auto rhs = restriction_counts(x | z, z, false, false);
      for (const PartialOrder& q : qs) {
        const std::uint64_t l = lookup(lhs, direct_sum(q, antichain({kApex})));
        const std::uint64_t r = lookup(rhs, dual(q));
        const CountReport report = theorem_count_check(q, x, kApex);
        const std::string tag = describe(q) + " |X|=" + std::to_string(k);
        out.expect(l == r, tag + ": oracle sides differ");
        out.expect(report.lhs_count == l && report.rhs_count == r, tag + ": library count disagrees with oracle");
        out.expect(report.blocks_equal(), tag + ": block table differs");
        ++instances;
      }
    }
  }
  out.detail << instances << " labeled instances";
}

// 2. Antichain anchor: Z an antichain vs max R = Z + y.
void antichain_case(Outcome& out) {
  std::ostringstream rows;
  for (int m = 0; m <= 3; ++m) {
    for (int k = 0; k <= 5 - m; ++k) {
      const ElementSet z = z_ids(m), x = x_ids(k);
      const ElementSet zy = z | ElementSet::single(kApex);
      std::uint64_t left = 0, right = 0;
      for (const PartialOrder& r : all_posets(x | z)) {
        if (oracle::restrict_to(oracle::pairs_of(r), oracle::points(z)).size() == static_cast<std::size_t>(m)) ++left;
      }
      for (const PartialOrder& r : all_posets(x | zy)) {
        const auto pts = oracle::points(r.carrier());
        if (same_points(oracle::maximal(pts, oracle::pairs_of(r)), oracle::points(zy))) ++right;
      }
      out.expect(left == right, "m=" + std::to_string(m) + " |X|=" + std::to_string(k));
      if (k == 5 - m) rows << " m=" << m << ":" << left;
    }
  }
  out.detail << "largest |X| per m:" << rows.str();
}

// 3. sigma per block: M*_{G+A_y}(X - c(G), c(G)+y) -> C_{G^d}(X - c(G), c(G)).
void sigma_bijection(Outcome& out) {
  std::uint64_t blocks = 0, members = 0;
  for (int m = 0; m <= 3; ++m) {
    for (const PartialOrder& q : anchors(m)) {
      for (int k = 0; k <= 2; ++k) {
        const ElementSet x = x_ids(k);
        for (const PartialOrder& g : enumerate_G(q, x)) {
          const ElementSet cg = g.carrier();
          const ElementSet rest = x - cg;
          const SplitContext split{rest, cg, kApex};
          const auto domain = enumerate_family(FamilySpec{FamilyKind::Mstar, split, g});

          // Codomain straight from the oracle predicates.
          std::set<PartialOrder> codomain;
          const oracle::Pairs target = oracle::pairs_of(dual(g));
          const oracle::Points all = oracle::points(x | z_ids(m));
          const oracle::Points up = oracle::points(cg);
          for (const PartialOrder& r : all_posets(x | z_ids(m))) {
            const oracle::Pairs pairs = oracle::pairs_of(r);
            if (oracle::restrict_to(pairs, up) == target && oracle::is_convex(all, pairs, up)) codomain.insert(r);
          }

          std::set<PartialOrder> images;
          const std::string tag = describe(q) + " G=" + describe(g);
          for (const PartialOrder& r : domain) {
            const PartialOrder image = sigma(r, split);
            out.expect(codomain.count(image) == 1, tag + ": image outside codomain");
            out.expect(sigma_inverse(image, split) == r, tag + ": inverse fails");
            images.insert(image);
          }
          out.expect(images.size() == domain.size(), tag + ": not injective");
          out.expect(images == codomain, tag + ": not surjective");
          ++blocks;
          members += domain.size();
        }
      }
    }
  }
  out.detail << blocks << " blocks, " << members << " relations";
}

// 4. tau is an involution on U(X,Y) and swaps the Q- and Q^d-refined parts.
void tau_involution(Outcome& out) {
  std::uint64_t checked = 0;
  for (int n = 0; n <= 4; ++n) {
    const ElementSet carrier = ElementSet::first(n);
    const auto all = all_posets(carrier);
    for (const auto& y_pts : oracle::subsets(oracle::points(carrier))) {
      const ElementSet y = oracle::to_set(y_pts);
      const SplitContext split{carrier - y, y, std::nullopt};
      std::map<oracle::Pairs, std::set<PartialOrder>> by_anchor, images_by_anchor;
      for (const PartialOrder& r : all) {
        const oracle::Pairs pairs = oracle::pairs_of(r);
        if (!oracle::is_upper_end(pairs, y_pts)) continue;
        const PartialOrder t = tau(r, split);
        out.expect(tau(t, split) == r, "tau(tau(R)) != R on n=" + std::to_string(n));
        by_anchor[oracle::restrict_to(pairs, y_pts)].insert(r);
        images_by_anchor[oracle::pairs_of(dual(induced(r, y)))].insert(t);
        ++checked;
      }
      for (const auto& [anchor, images] : images_by_anchor) {
        out.expect(by_anchor[anchor] == images, "refined image mismatch on n=" + std::to_string(n));
      }
    }
  }
  out.detail << checked << " relations";
}

// 5. phi round trips and #F* = #M*.
void phi_round_trip(Outcome& out) {
  std::uint64_t maps = 0;
  for (int m = 0; m <= 2; ++m) {
    const ElementSet z = z_ids(m);
    for (const PartialOrder& q : anchors(m)) {
      for (int k = 0; k <= 3; ++k) {
        const ElementSet x = x_ids(k);
        const SplitContext split{x, z, std::nullopt};
        std::uint64_t starred = 0;
        for (const auto& f : enumerate_monotone_maps(q, x, false)) {
          out.expect(phi_inverse(phi(f, q), split) == f, describe(q) + ": phi_inverse(phi(f)) != f");
          starred += f.is_starred();
          ++maps;
        }
        std::uint64_t in_m = 0, in_mstar = 0;
        const oracle::Points all = oracle::points(x | z), up = oracle::points(z);
        const oracle::Pairs target = oracle::pairs_of(q);
        for (const PartialOrder& r : all_posets(x | z)) {
          const oracle::Pairs pairs = oracle::pairs_of(r);
          if (oracle::restrict_to(pairs, up) != target || !oracle::is_upper_end(pairs, up)) continue;
          ++in_m;
          out.expect(phi(phi_inverse(r, split), q) == r, describe(q) + ": phi(phi_inverse(R)) != R");
          if (same_points(oracle::maximal(all, pairs), oracle::maximal(up, target))) ++in_mstar;
        }
        out.expect(enumerate_monotone_maps(q, x, false).size() == in_m, describe(q) + ": #F != #M");
        out.expect(enumerate_monotone_maps(q, x, true).size() == starred && starred == in_mstar,
                   describe(q) + ": #F* != #M*");
      }
    }
  }
  out.detail << maps << " maps";
}

// 6. Convex hull against the oracle; max M = max hull; upper-end addendum.
void convex_hull_properties(Outcome& out) {
  std::uint64_t checked = 0;
  for (int n = 0; n <= 4; ++n) {
    const ElementSet carrier = ElementSet::first(n);
    const oracle::Points pts = oracle::points(carrier);
    for (const PartialOrder& r : all_posets(carrier)) {
      const oracle::Pairs pairs = oracle::pairs_of(r);
      for (const auto& s : oracle::subsets(pts)) {
        const ElementSet set = oracle::to_set(s);
        const ElementSet hull = convex_hull(r, set);
        out.expect(hull == oracle::to_set(oracle::convex_hull(pts, pairs, s)), "hull differs from oracle");
        const auto max_m = oracle::maximal(s, oracle::restrict_to(pairs, s));
        const auto hull_pts = oracle::points(hull);
        out.expect(same_points(max_m, oracle::maximal(hull_pts, oracle::restrict_to(pairs, hull_pts))),
                   "max M != max hull");
        if (same_points(max_m, oracle::maximal(pts, pairs))) {
          out.expect(oracle::is_upper_end(pairs, hull_pts), "hull is not an upper end");
        }
        ++checked;
      }
    }
  }
  out.detail << checked << " (R, M) pairs";
}

// 7. Both block systems partition their families.
void partitions(Outcome& out) {
  int instances = 0;
  for (int m = 0; m <= 3; ++m) {
    for (int k = 0; k <= 2; ++k) {
      const ElementSet z = z_ids(m), x = x_ids(k);
      const auto plain = restriction_counts(x | z, z, false, false);
      const auto starred = restriction_counts(x | z, z, true, false);
      for (const PartialOrder& q : anchors(m)) {
        const std::string tag = describe(q) + " |X|=" + std::to_string(k);
        try {
          const auto convex = verify_partition(q, x, PartitionSystem::Convex);
          const auto maxstar = verify_partition(q, x, PartitionSystem::MaxStar);
          out.expect(convex.block_total() == lookup(plain, q) && convex.target_size == lookup(plain, q),
                     tag + ": convex blocks do not cover the oracle family");
          out.expect(maxstar.block_total() == lookup(starred, q) && maxstar.target_size == lookup(starred, q),
                     tag + ": maxstar blocks do not cover the oracle family");
        } catch (const OrderError& e) {
          out.expect(false, tag + ": " + e.what());
        }
        ++instances;
      }
    }
  }
  out.detail << instances << " anchors x sizes, both systems";
}

// 8. Small figure counts.
void figure_counts(Outcome& out) {
  const auto two = [](std::vector<std::uint64_t> m) { return std::count(m.begin(), m.end(), 2u); };
  const ElementSet x = x_ids(1);

  const auto a2 = theorem_count_check(antichain(z_ids(2)), x, kApex);
  const auto a2m = CountReport::multiplicities(a2.lhs_classes);
  out.expect(a2.lhs_count == 7 && a2.rhs_count == 7, "A2: labeled count != 7");
  out.expect(a2.lhs_classes.size() == 5 && a2.rhs_classes.size() == 5, "A2: class count != 5");
  out.expect(two(a2m) == 2 && two(CountReport::multiplicities(a2.rhs_classes)) == 2, "A2: multiplicity-2 classes");

  const auto lam = theorem_count_check(lambda(0, 1, 2), x, kApex);
  out.expect(two(CountReport::multiplicities(lam.lhs_classes)) == 3 &&
                 two(CountReport::multiplicities(lam.rhs_classes)) == 3,
             "Lambda: multiplicity-2 classes != 3");

  const auto c2 = theorem_count_check(chain(z_ids(2)), x, kApex);
  out.expect(c2.lhs_count == 6 && c2.rhs_count == 6, "C2: labeled count != 6");

  // Labeled counts from the oracle.
  const auto counts = restriction_counts(x | z_ids(2), z_ids(2), false, false);
  out.expect(lookup(counts, antichain(z_ids(2))) == 7 && lookup(counts, chain(z_ids(2))) == 6,
             "oracle labeled counts");

  out.detail << "A2 " << a2.lhs_count << "/" << a2.lhs_classes.size() << " classes, Lambda " << lam.lhs_count << "/"
             << lam.lhs_classes.size() << " classes, C2 " << c2.lhs_count;
}

// 9. Generator against the naive filter, and two insertion orders at n = 5.
void generator_counts(Outcome& out) {
  const std::uint64_t expected[] = {1, 1, 3, 19, 219};
  for (int n = 0; n <= 4; ++n) {
    const ElementSet carrier = ElementSet::first(n);
    const auto naive = oracle::all_pors(oracle::points(carrier));
    std::set<oracle::Pairs> generated;
    for (const PartialOrder& r : all_posets(carrier)) generated.insert(oracle::pairs_of(r));
    out.expect(naive.size() == expected[n] && generated == std::set<oracle::Pairs>(naive.begin(), naive.end()),
               "n=" + std::to_string(n));
  }
  const ElementSet five = ElementSet::first(5);
  const auto forward = all_posets(five);
  const auto backward = all_posets(GeneratorConfig{five, kDefaultMaxSize, {4, 3, 2, 1, 0}, {}});
  const std::set<PartialOrder> f(forward.begin(), forward.end()), b(backward.begin(), backward.end());
  out.expect(forward.size() == 4231 && f.size() == 4231 && f == b, "n=5");
  out.detail << "1 1 3 19 219, n=5: " << f.size();
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria{
      {"count identity over all anchors |Z|<=3, |X|<=2", count_identity},
      {"antichain anchor special case", antichain_case},
      {"sigma bijective per block, inverse verified", sigma_bijection},
      {"tau involution and refined image", tau_involution},
      {"phi round trips, #F* = #M*", phi_round_trip},
      {"convex hull properties", convex_hull_properties},
      {"block partitions, both systems", partitions},
      {"figure counts", figure_counts},
      {"generator counts", generator_counts},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();
    try {
      check(outcome);
    } catch (const std::exception& e) {
      outcome.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  %d  %s  [%s] (%.1fs)%s%s\n", outcome.ok ? "PASS" : "FAIL", index, name,
                outcome.detail.str().c_str(), secs, outcome.ok ? "" : "  first failure: ",
                outcome.first_failure.c_str());
    failures += !outcome.ok;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
