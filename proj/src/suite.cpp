#include "gf/suite.hpp"

#include <algorithm>

#include "gf/smallgroups.hpp"
#include "gf/util.hpp"

namespace gf {

namespace {

std::vector<std::string> unit_names(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back("u" + std::to_string(i));
  return out;
}

std::vector<int> invert_map(const std::vector<int>& m) {
  std::vector<int> inv(m.size());
  for (size_t i = 0; i < m.size(); ++i) inv[m[i]] = static_cast<int>(i);
  return inv;
}

}  // namespace

std::vector<SuiteItem> exhaustive_transitive_suite(int max_units, int max_iso_order,
                                                   const Caps& caps) {
  (void)caps;
  std::vector<SuiteItem> out;
  for (int n = 1; n <= max_units; ++n) {
    EquivRelation rel = EquivRelation::full(unit_names(n));
    for (int ord = 1; ord <= max_iso_order; ++ord) {
      for (const auto& [gname, gamma] : small_groups_of_order(ord)) {
        std::vector<std::vector<int>> auts = automorphisms(gamma);
        // tuples (c_1..c_{n-1}) with c_0 = identity automorphism
        std::vector<size_t> pick(static_cast<size_t>(std::max(0, n - 1)), 0);
        int tuple_index = 0;
        while (true) {
          std::vector<std::vector<int>> c(n);
          c[0] = auts[0];
          for (int u = 1; u < n; ++u) c[u] = auts[pick[u - 1]];
          BundleAction ba;
          ba.rel = rel;
          ba.fibers.assign(n, gamma);
          for (const auto& [y, x] : rel.pairs) {
            std::vector<int> cy_inv = invert_map(c[y]);
            std::vector<int> map(gamma.order());
            for (int g = 0; g < gamma.order(); ++g) map[g] = cy_inv[c[x][g]];
            ba.delta[{y, x}] = std::move(map);
          }
          SemidirectGroupoid sg = semidirect(ba);
          out.push_back({"t" + std::to_string(n) + "_" + gname + "_c" +
                             std::to_string(tuple_index),
                         std::move(sg.gpd)});
          ++tuple_index;
          size_t level = 0;
          while (level < pick.size() && ++pick[level] == auts.size()) {
            pick[level] = 0;
            ++level;
          }
          if (pick.empty() || level == pick.size()) break;
        }
      }
    }
  }
  return out;
}

BundleAction random_bundle_action(Rng& rng, int max_units, int max_fiber_order) {
  int n = rng.range(1, max_units);
  // random set partition of the units
  std::vector<std::vector<int>> classes;
  for (int u = 0; u < n; ++u) {
    if (classes.empty() || rng.below(3) == 0) classes.push_back({u});
    else classes[rng.below(static_cast<int>(classes.size()))].push_back(u);
  }
  EquivRelation rel = EquivRelation::from_classes(unit_names(n), classes);

  std::vector<GroupTable> fibers(n, GroupTable::trivial());
  std::vector<std::vector<std::vector<int>>> c(n);  // per unit, automorphism map
  for (const auto& cls : classes) {
    int ord = rng.range(1, max_fiber_order);
    auto groups = small_groups_of_order(ord);
    GroupTable gamma = groups[rng.below(static_cast<int>(groups.size()))].table;
    std::vector<std::vector<int>> auts = automorphisms(gamma);
    for (size_t i = 0; i < cls.size(); ++i) {
      fibers[cls[i]] = gamma;
      c[cls[i]] = {i == 0 ? auts[0] : auts[rng.below(static_cast<int>(auts.size()))]};
    }
  }
  BundleAction ba;
  ba.rel = rel;
  ba.fibers = fibers;
  for (const auto& [y, x] : rel.pairs) {
    std::vector<int> cy_inv = invert_map(c[y][0]);
    std::vector<int> map(fibers[x].order());
    for (int g = 0; g < fibers[x].order(); ++g) map[g] = cy_inv[c[x][0][g]];
    ba.delta[{y, x}] = std::move(map);
  }
  return ba;
}

std::vector<Perm> random_thetas(Rng& rng, int units) {
  if (units == 1) return {Perm(1)};
  // random n-cycle sigma; theta_k = sigma^k
  std::vector<int> order(units);
  for (int i = 0; i < units; ++i) order[i] = i;
  rng.shuffle(order);
  std::vector<int> images(units);
  for (int i = 0; i < units; ++i) images[order[i]] = order[(i + 1) % units];
  Perm sigma = Perm::from_images(images);
  std::vector<Perm> theta{Perm(units)};
  for (int k = 1; k < units; ++k) theta.push_back(sigma * theta.back());
  return theta;
}

std::vector<SuiteItem> random_suite(uint64_t seed, int count, int max_units, int max_iso_order,
                                    const Caps& caps) {
  (void)caps;
  Rng rng(seed);
  std::vector<SuiteItem> out;
  // stratified: one principal and one non-principal per unit count
  for (int n = 1; n <= max_units; ++n) {
    RelationGroupoid rg = relation_groupoid(EquivRelation::full(unit_names(n)));
    out.push_back({"s" + std::to_string(seed) + "_full" + std::to_string(n), rg.gpd});
    BundleAction ba;
    ba.rel = EquivRelation::full(unit_names(n));
    GroupTable gamma = GroupTable::cyclic(2);
    ba.fibers.assign(n, gamma);
    for (const auto& [y, x] : ba.rel.pairs) ba.delta[{y, x}] = {0, 1};
    out.push_back({"s" + std::to_string(seed) + "_semi" + std::to_string(n),
                   semidirect(ba).gpd});
  }
  int k = 0;
  while (static_cast<int>(out.size()) < count) {
    int style = rng.below(3);
    if (style == 0) {
      BundleAction ba = random_bundle_action(rng, max_units, std::min(4, max_iso_order));
      out.push_back({"s" + std::to_string(seed) + "_r" + std::to_string(k), semidirect(ba).gpd});
    } else if (style == 1) {
      int n = rng.range(1, max_units);
      int ord = rng.range(1, std::min(4, max_iso_order));
      auto groups = small_groups_of_order(ord);
      GroupTable g = groups[rng.below(static_cast<int>(groups.size()))].table;
      auto reps = subgroup_class_reps(g);
      CosetAction ca = coset_action(g, reps[rng.below(static_cast<int>(reps.size()))]);
      FiniteAction act;
      act.group = g;
      for (size_t cidx = 0; cidx < ca.cosets.size(); ++cidx)
        act.points.push_back("p" + std::to_string(cidx));
      act.act = ca.act;
      (void)n;
      out.push_back(
          {"s" + std::to_string(seed) + "_r" + std::to_string(k), transformation_groupoid(act).gpd});
    } else {
      Rng sub(rng.next());
      BundleAction ba = random_bundle_action(sub, max_units, 1);  // principal, random relation
      out.push_back({"s" + std::to_string(seed) + "_r" + std::to_string(k), semidirect(ba).gpd});
    }
    ++k;
  }
  return out;
}

}  // namespace gf
