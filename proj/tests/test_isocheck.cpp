#include <algorithm>

#include "doctest.h"
#include "gf/bundle.hpp"
#include "gf/isocheck.hpp"
#include "gf/smallgroups.hpp"
#include "gf/suite.hpp"
#include "gf/util.hpp"

using namespace gf;

namespace {

BundleAction const_bundle_action(const EquivRelation& rel, const GroupTable& t) {
  BundleAction ba;
  ba.rel = rel;
  ba.fibers.assign(rel.units.size(), t);
  std::vector<int> id(t.order());
  for (size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
  for (const auto& [y, x] : rel.pairs) ba.delta[{y, x}] = id;
  return ba;
}

// independent oracle: try all bijections of the arrow sets
bool brute_force_groupoid_iso(const FiniteGroupoid& a, const FiniteGroupoid& b) {
  if (a.arrow_count() != b.arrow_count()) return false;
  std::vector<int> f(a.arrow_count());
  for (int i = 0; i < a.arrow_count(); ++i) f[i] = i;
  do {
    if (verify_isomorphism(f, a, b).ok) return true;
  } while (std::next_permutation(f.begin(), f.end()));
  return false;
}

FiniteAction rotation_action(int n) {
  FiniteAction a;
  a.group = GroupTable::cyclic(n);
  for (int i = 0; i < n; ++i) a.points.push_back(std::to_string(i));
  a.act.assign(n, std::vector<int>(n));
  for (int g = 0; g < n; ++g)
    for (int x = 0; x < n; ++x) a.act[g][x] = (g + x) % n;
  return a;
}

}  // namespace

TEST_CASE("groupoid invariants screen the obvious") {
  RelationGroupoid full3 = relation_groupoid(EquivRelation::full({"a", "b", "c"}));
  SemidirectGroupoid semi =
      semidirect(const_bundle_action(EquivRelation::full({"a", "b", "c"}), GroupTable::cyclic(2)));
  CHECK_FALSE(groupoid_invariant(full3.gpd) == groupoid_invariant(semi.gpd));
  CHECK(groupoid_invariant(full3.gpd) == groupoid_invariant(full3.gpd));
}

TEST_CASE("groupoid isomorphism search") {
  Caps caps;
  // full relation on 3 units vs transformation groupoid of the free Z3 action
  RelationGroupoid full3 = relation_groupoid(EquivRelation::full({"a", "b", "c"}));
  TransformationGroupoid rot = transformation_groupoid(rotation_action(3));
  auto m = groupoid_isomorphic(full3.gpd, rot.gpd, caps);
  REQUIRE(m.has_value());
  CHECK(verify_isomorphism(*m, full3.gpd, rot.gpd).ok);

  // screened: 9 arrows vs 18
  SemidirectGroupoid semi =
      semidirect(const_bundle_action(EquivRelation::full({"a", "b", "c"}), GroupTable::cyclic(2)));
  CHECK_FALSE(groupoid_isomorphic(full3.gpd, semi.gpd, caps).has_value());

  // reflexivity gives the identity arrow map
  auto self = groupoid_isomorphic(full3.gpd, full3.gpd, caps);
  REQUIRE(self.has_value());
  for (size_t i = 0; i < self->size(); ++i) CHECK((*self)[i] == static_cast<int>(i));

  // twisted and untwisted cocycles over C3 give isomorphic groupoids
  GroupTable c3 = GroupTable::cyclic(3);
  auto auts = automorphisms(c3);
  REQUIRE(auts.size() == 2);
  BundleAction tw;
  tw.rel = EquivRelation::full({"u0", "u1"});
  tw.fibers = {c3, c3};
  std::vector<std::vector<int>> c{auts[0], auts[1]};
  for (const auto& [y, x] : tw.rel.pairs) {
    std::vector<int> cy_inv(3);
    for (int i = 0; i < 3; ++i) cy_inv[c[y][i]] = i;
    std::vector<int> map(3);
    for (int i = 0; i < 3; ++i) map[i] = cy_inv[c[x][i]];
    tw.delta[{y, x}] = map;
  }
  SemidirectGroupoid twisted = semidirect(tw);
  SemidirectGroupoid untwisted =
      semidirect(const_bundle_action(EquivRelation::full({"u0", "u1"}), c3));
  auto mt = groupoid_isomorphic(twisted.gpd, untwisted.gpd, caps);
  REQUIRE(mt.has_value());
  CHECK(verify_isomorphism(*mt, twisted.gpd, untwisted.gpd).ok);

  // same counts, different isotropy structure: C4 vs V4 fibers
  SemidirectGroupoid g_c4 =
      semidirect(const_bundle_action(EquivRelation::full({"u0", "u1"}), GroupTable::cyclic(4)));
  SemidirectGroupoid g_v4 = semidirect(const_bundle_action(
      EquivRelation::full({"u0", "u1"}), GroupTable::cyclic(2).product(GroupTable::cyclic(2))));
  CHECK(g_c4.gpd.arrow_count() == g_v4.gpd.arrow_count());
  CHECK_FALSE(groupoid_isomorphic(g_c4.gpd, g_v4.gpd, caps).has_value());

  // symmetry on a sampled pair
  CHECK(groupoid_isomorphic(rot.gpd, full3.gpd, caps).has_value());
}

TEST_CASE("search agrees with brute force on small groupoids") {
  Caps caps;
  std::vector<FiniteGroupoid> pool;
  pool.push_back(relation_groupoid(EquivRelation::diagonal({"a", "b"})).gpd);
  pool.push_back(relation_groupoid(EquivRelation::full({"a", "b"})).gpd);
  pool.push_back(relation_groupoid(EquivRelation::from_classes({"a", "b", "c"}, {{0, 1}, {2}})).gpd);
  pool.push_back(semidirect(const_bundle_action(EquivRelation::diagonal({"x"}), GroupTable::cyclic(4))).gpd);
  pool.push_back(semidirect(const_bundle_action(EquivRelation::diagonal({"x"}),
                                                GroupTable::cyclic(2).product(GroupTable::cyclic(2)))).gpd);
  pool.push_back(transformation_groupoid(rotation_action(2)).gpd);
  for (size_t i = 0; i < pool.size(); ++i)
    for (size_t j = 0; j < pool.size(); ++j) {
      if (pool[i].arrow_count() > 6 || pool[j].arrow_count() > 6) continue;
      bool fast = groupoid_isomorphic(pool[i], pool[j], caps).has_value();
      CHECK(fast == brute_force_groupoid_iso(pool[i], pool[j]));
    }
}

TEST_CASE("search exhausts honestly when invariants cannot decide") {
  // the modular group of order 16 and C8 x C2 share the element-order
  // histogram, so the groupoid invariant screen passes and only a completed
  // arrow search can answer
  auto idx = [](int m, int t) { return ((m % 8) + 8) % 8 * 2 + t; };
  GroupTable m16;
  m16.names.resize(16);
  for (int m = 0; m < 8; ++m)
    for (int s = 0; s < 2; ++s)
      m16.names[idx(m, s)] = "a" + std::to_string(m) + (s ? "b" : "");
  m16.mul.assign(16, std::vector<int>(16));
  m16.inv.resize(16);
  for (int i = 0; i < 8; ++i)
    for (int s = 0; s < 2; ++s)
      for (int j = 0; j < 8; ++j)
        for (int u = 0; u < 2; ++u)
          m16.mul[idx(i, s)][idx(j, u)] = idx(i + (s ? 5 * j : j), (s + u) % 2);
  for (int e = 0; e < 16; ++e)
    for (int f = 0; f < 16; ++f)
      if (m16.mul[e][f] == 0) m16.inv[e] = f;
  GroupTable c8c2 = GroupTable::cyclic(8).product(GroupTable::cyclic(2));
  REQUIRE(m16.order_histogram() == c8c2.order_histogram());
  REQUIRE_FALSE(table_isomorphic(m16, c8c2).has_value());

  Caps caps;
  FiniteGroupoid a = semidirect(const_bundle_action(EquivRelation::diagonal({"x"}), m16)).gpd;
  FiniteGroupoid b = semidirect(const_bundle_action(EquivRelation::diagonal({"x"}), c8c2)).gpd;
  CHECK(groupoid_invariant(a) == groupoid_invariant(b));
  CHECK_FALSE(groupoid_isomorphic(a, b, caps).has_value());
  CHECK(groupoid_isomorphic(a, a, caps).has_value());
}

TEST_CASE("isomorphism search is transitive on sampled triples") {
  Caps caps;
  // three presentations of the principal transitive groupoid on 3 units
  FiniteGroupoid a = relation_groupoid(EquivRelation::full({"a", "b", "c"})).gpd;
  FiniteGroupoid b = transformation_groupoid(rotation_action(3)).gpd;
  FiniteGroupoid c = semidirect(const_bundle_action(EquivRelation::full({"p", "q", "r"}),
                                                    GroupTable::trivial())).gpd;
  auto ab = groupoid_isomorphic(a, b, caps);
  auto bc = groupoid_isomorphic(b, c, caps);
  REQUIRE(ab.has_value());
  REQUIRE(bc.has_value());
  // the composite map is an isomorphism a -> c, and the search agrees
  std::vector<int> comp(a.arrow_count());
  for (int i = 0; i < a.arrow_count(); ++i) comp[i] = (*bc)[(*ab)[i]];
  CHECK(verify_isomorphism(comp, a, c).ok);
  CHECK(groupoid_isomorphic(a, c, caps).has_value());
}

TEST_CASE("recognition succeeds on the whole exhaustive transitive suite") {
  Caps caps;
  for (const auto& item : exhaustive_transitive_suite(4, 4, caps)) {
    TransModel tm = is_transformation_groupoid(item.gpd, caps);
    REQUIRE(tm.verdict == TransModel::Verdict::Found);
    TransformationGroupoid model = transformation_groupoid(*tm.action);
    CHECK(verify_isomorphism(*tm.iso, model.gpd, item.gpd).ok);
  }
}

TEST_CASE("transformation-groupoid recognition") {
  Caps caps;
  // transitive always succeeds
  SemidirectGroupoid semi =
      semidirect(const_bundle_action(EquivRelation::full({"a", "b"}), GroupTable::cyclic(2)));
  TransModel tm = is_transformation_groupoid(semi.gpd, caps);
  CHECK(tm.verdict == TransModel::Verdict::Found);
  REQUIRE(tm.iso.has_value());
  TransformationGroupoid model = transformation_groupoid(*tm.action);
  CHECK(verify_isomorphism(*tm.iso, model.gpd, semi.gpd).ok);

  // free transitive groupoid: model with trivial stabilizer
  RelationGroupoid full3 = relation_groupoid(EquivRelation::full({"a", "b", "c"}));
  TransModel tm_free = is_transformation_groupoid(full3.gpd, caps);
  CHECK(tm_free.verdict == TransModel::Verdict::Found);
  CHECK(tm_free.action->group.order() == 3);

  // incompatible forced orders: full relation on 2 units vs one-unit Z3
  FiniteGroupoid mixed = disjoint_union(
      {relation_groupoid(EquivRelation::full({"a", "b"})).gpd,
       semidirect(const_bundle_action(EquivRelation::diagonal({"z"}), GroupTable::cyclic(3))).gpd});
  TransModel tm_no = is_transformation_groupoid(mixed, caps);
  CHECK(tm_no.verdict == TransModel::Verdict::No);

  // two copies of the full relation on 2 units: C2 acting on 4 points
  FiniteGroupoid twice = disjoint_union({relation_groupoid(EquivRelation::full({"a", "b"})).gpd,
                                         relation_groupoid(EquivRelation::full({"c", "d"})).gpd});
  TransModel tm_yes = is_transformation_groupoid(twice, caps);
  CHECK(tm_yes.verdict == TransModel::Verdict::Found);
  REQUIRE(tm_yes.action.has_value());
  CHECK(tm_yes.action->group.order() == 2);

  // undecided under a tight cap
  Caps tight = caps;
  tight.group_order = 2;
  FiniteGroupoid big = disjoint_union({relation_groupoid(EquivRelation::full({"a", "b", "c"})).gpd,
                                       relation_groupoid(EquivRelation::full({"d", "e", "f"})).gpd});
  CHECK(is_transformation_groupoid(big, tight).verdict == TransModel::Verdict::Undecided);
  CHECK(is_transformation_groupoid(big, caps).verdict == TransModel::Verdict::Found);
}

TEST_CASE("components reassemble into the original groupoid") {
  Caps caps;
  BundleAction ba;
  ba.rel = EquivRelation::from_classes({"a", "b", "c", "d", "e", "f"},
                                       {{0, 1}, {2}, {3, 4, 5}});
  GroupTable c2 = GroupTable::cyclic(2);
  ba.fibers = {c2,
               c2,
               GroupTable::cyclic(3),
               GroupTable::trivial(),
               GroupTable::trivial(),
               GroupTable::trivial()};
  for (const auto& [y, x] : ba.rel.pairs) {
    std::vector<int> id(ba.fibers[x].order());
    for (size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
    ba.delta[{y, x}] = id;
  }
  FiniteGroupoid g = semidirect(ba).gpd;
  FiniteGroupoid re = disjoint_union(components(g));
  CHECK(validate(re).empty());
  auto m = groupoid_isomorphic(re, g, caps);
  REQUIRE(m.has_value());
  CHECK(verify_isomorphism(*m, re, g).ok);
}

TEST_CASE("fiber distinctness certificates") {
  Caps caps;
  // prefix-coded fibers
  GroupBundle b;
  b.index_set = {"a", "b", "c"};
  for (const char* p : {"5,7", "5,9", "7,9"}) {
    GroupDesc d;
    d.neumann_code = OddPrefix::parse(p);
    b.fibers.push_back(d);
  }
  Certificate cert = fiber_distinctness_certificate(b, caps);
  REQUIRE(cert.doc["witnesses"].size() == 3);
  CHECK(cert.doc["witnesses"][0]["verdict"] == "distinct");
  CHECK(cert.doc["witnesses"][0]["witness"]["index"] == 2);  // (5,7) vs (5,9)
  CHECK(cert.doc["witnesses"][1]["witness"]["index"] == 1);  // (5,7) vs (7,9)
  CHECK(cert.doc["witnesses"][2]["witness"]["index"] == 1);  // (5,9) vs (7,9)
  CHECK(recheck_certificate(cert).ok);

  // symmetric reports under reversal of the bundle
  GroupBundle rev;
  rev.index_set = {b.index_set[2], b.index_set[1], b.index_set[0]};
  rev.fibers = {b.fibers[2], b.fibers[1], b.fibers[0]};
  Certificate cert_rev = fiber_distinctness_certificate(rev, caps);
  for (size_t i = 0; i < 3; ++i)
    CHECK(cert_rev.doc["witnesses"][i]["verdict"] == "distinct");

  // constant bundle: indistinguishable at depth
  GroupBundle cst;
  cst.index_set = {"x", "y"};
  GroupDesc d;
  d.neumann_code = OddPrefix::parse("5,7");
  cst.fibers = {d, d};
  Certificate cc = fiber_distinctness_certificate(cst, caps);
  CHECK(cc.doc["witnesses"][0]["verdict"] == "indistinguishable-at-depth");
  CHECK(cc.doc["witnesses"][0]["depth"] == 2);
  CHECK(recheck_certificate(cc).ok);

  // explicit fibers: order witness and isomorphism verdict
  GroupBundle expl;
  expl.index_set = {"x", "y", "z"};
  expl.fibers = {GroupDesc::from_finite(GroupTable::cyclic(2).regular_rep()),
                 GroupDesc::from_finite(GroupTable::cyclic(3).regular_rep()),
                 GroupDesc::from_finite(FinPermGroup::from_gens(2, {Perm::parse(2, "(1 2)")}))};
  Certificate ce = fiber_distinctness_certificate(expl, caps);
  CHECK(ce.doc["witnesses"][0]["verdict"] == "distinct");    // C2 vs C3 by order
  CHECK(ce.doc["witnesses"][1]["verdict"] == "isomorphic");  // two C2 presentations
  CHECK(ce.doc["witnesses"][2]["verdict"] == "distinct");    // C3 vs C2 by order
  CHECK(recheck_certificate(ce).ok);
}

TEST_CASE("genuineness ingredients") {
  Caps caps;
  // the demo: full relation on 3 units, A5-truncation fibers, codes distinct
  std::vector<OddPrefix> codes{OddPrefix::parse("5,7,9"), OddPrefix::parse("5,7,11"),
                               OddPrefix::parse("5,9,11")};
  std::vector<GroupTable> fibers;
  for (const auto& c : codes)
    fibers.push_back(GroupTable::from_perm_group(neumann_truncation(c, 1), caps.table));
  BundleAction ba;
  ba.rel = EquivRelation::full({"u0", "u1", "u2"});
  ba.fibers = fibers;
  for (const auto& [y, x] : ba.rel.pairs) {
    std::vector<int> id(fibers[x].order());
    for (size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
    ba.delta[{y, x}] = id;
  }
  SemidirectGroupoid sg = semidirect(ba);
  CHECK(sg.gpd.arrow_count() == 9 * 60);
  Certificate cert = genuineness_ingredients(sg, codes, caps);
  CHECK(cert.doc["verdict"] == "ingredients-present");
  CHECK(cert.doc["witnesses"][0]["holds"] == true);
  CHECK(cert.doc["witnesses"][0]["witnesses"].size() == 3);
  CHECK(cert.doc["witnesses"][2]["holds"] == true);
  CHECK(cert.doc["witnesses"][2]["witnesses"].size() == 3);
  CHECK(cert.doc["witnesses"][3]["transformation_model_found"] == true);
  CHECK(recheck_certificate(cert).ok);

  // principal input: ingredient (a) fails
  BundleAction principal;
  principal.rel = EquivRelation::full({"u0", "u1"});
  principal.fibers = {GroupTable::trivial(), GroupTable::trivial()};
  for (const auto& [y, x] : principal.rel.pairs) principal.delta[{y, x}] = {0};
  Certificate cp = genuineness_ingredients(
      semidirect(principal),
      std::vector<OddPrefix>{OddPrefix::parse("5,7"), OddPrefix::parse("5,9")}, caps);
  CHECK(cp.doc["verdict"] == "not-genuine-ingredients");
  CHECK(cp.doc["witnesses"][0]["holds"] == false);

  // constant codes: ingredient (c) fails
  BundleAction cst;
  cst.rel = EquivRelation::full({"u0", "u1"});
  GroupTable a5 = GroupTable::from_perm_group(neumann_truncation(OddPrefix::parse("5,7"), 1), caps.table);
  cst.fibers = {a5, a5};
  for (const auto& [y, x] : cst.rel.pairs) {
    std::vector<int> id(a5.order());
    for (size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
    cst.delta[{y, x}] = id;
  }
  Certificate cn = genuineness_ingredients(
      semidirect(cst), std::vector<OddPrefix>{OddPrefix::parse("5,7"), OddPrefix::parse("5,7")},
      caps);
  CHECK(cn.doc["verdict"] == "not-genuine-ingredients");
  CHECK(cn.doc["witnesses"][2]["holds"] == false);

  // provenance arity is enforced
  CHECK_THROWS_WITH_AS(
      genuineness_ingredients(sg, std::vector<OddPrefix>{OddPrefix::parse("5,7")}, caps),
      doctest::Contains("MissingProvenance"), DomainError);
}

TEST_CASE("certificates recheck and corrupted ones fail") {
  Caps caps;
  Certificate dist = distinguish(OddPrefix::parse("5,7,9"), OddPrefix::parse("5,7,11"));
  CHECK(recheck_certificate(dist).ok);
  Certificate bad = dist;
  bad.doc["witnesses"][0]["index"] = 2;
  CHECK_FALSE(recheck_certificate(bad).ok);
  Certificate bad2 = dist;
  bad2.doc["inputs"]["left_prefix"] = "5,7,13";
  CHECK_FALSE(recheck_certificate(bad2).ok);

  SemidirectGroupoid semi =
      semidirect(const_bundle_action(EquivRelation::full({"a", "b"}), GroupTable::cyclic(2)));
  Certificate bis = bisection_basis_certificate(semi.gpd);
  CHECK(recheck_certificate(bis).ok);
  Certificate bis_bad = bis;
  bis_bad.doc["witnesses"][0][0] = bis_bad.doc["witnesses"][1][0];
  CHECK_FALSE(recheck_certificate(bis_bad).ok);

  RelationGroupoid full3 = relation_groupoid(EquivRelation::full({"a", "b", "c"}));
  TransformationGroupoid rot = transformation_groupoid(rotation_action(3));
  auto m = groupoid_isomorphic(full3.gpd, rot.gpd, caps);
  REQUIRE(m.has_value());
  Certificate iso_cert = isomorphism_certificate(full3.gpd, rot.gpd, *m);
  CHECK(recheck_certificate(iso_cert).ok);
  Certificate iso_bad = iso_cert;
  std::swap(iso_bad.doc["witnesses"][0]["arrow_map"][0], iso_bad.doc["witnesses"][0]["arrow_map"][1]);
  CHECK_FALSE(recheck_certificate(iso_bad).ok);

  AtomicModel am = atomic_transformation_model(semi.gpd);
  Certificate tm_cert = transformation_model_certificate(semi.gpd, am.action, am.iso);
  CHECK(recheck_certificate(tm_cert).ok);

  // parse-print round trip preserves recheckability
  Certificate reparsed = Certificate::parse(tm_cert.print());
  CHECK(recheck_certificate(reparsed).ok);
  CHECK(reparsed.print() == tm_cert.print());
}
