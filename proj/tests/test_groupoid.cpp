#include <set>

#include "doctest.h"
#include "gf/constructions.hpp"
#include "gf/groupoid.hpp"
#include "gf/suite.hpp"
#include "gf/util.hpp"

using namespace gf;

namespace {

FiniteGroupoid one_unit_group(const GroupTable& t) {
  BundleAction ba;
  ba.rel = EquivRelation::diagonal({"x"});
  ba.fibers = {t};
  std::vector<int> id(t.order());
  for (size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
  ba.delta[{0, 0}] = id;
  return semidirect(ba).gpd;
}

FiniteGroupoid semidirect_full_const(int units, const GroupTable& t) {
  BundleAction ba;
  std::vector<std::string> names;
  for (int i = 0; i < units; ++i) names.push_back("u" + std::to_string(i));
  ba.rel = EquivRelation::full(names);
  ba.fibers.assign(units, t);
  std::vector<int> id(t.order());
  for (size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
  for (const auto& [y, x] : ba.rel.pairs) ba.delta[{y, x}] = id;
  return semidirect(ba).gpd;
}

}  // namespace

TEST_CASE("equivalence relations") {
  EquivRelation full = EquivRelation::full({"a", "b", "c"});
  CHECK(full.pairs.size() == 9);
  CHECK(full.validate().empty());
  CHECK(full.transitive_whole());

  EquivRelation two = EquivRelation::from_classes({"a", "b", "c"}, {{0, 1}, {2}});
  CHECK(two.pairs.size() == 5);
  CHECK(two.classes().size() == 2);
  CHECK_FALSE(two.transitive_whole());
  CHECK(two.contains(0, 1));
  CHECK_FALSE(two.contains(0, 2));

  EquivRelation broken;
  broken.units = {"a", "b"};
  broken.pairs = {{0, 0}, {0, 1}, {1, 1}};  // missing symmetry
  CHECK_FALSE(broken.validate().empty());
}

TEST_CASE("validate accepts constructed groupoids and spots corruption") {
  FiniteGroupoid g = semidirect_full_const(2, GroupTable::cyclic(2));
  CHECK(validate(g).empty());

  // a one-unit group is a groupoid
  FiniteGroupoid z2 = one_unit_group(GroupTable::cyclic(2));
  CHECK(validate(z2).empty());
  CHECK(z2.arrow_count() == 2);

  // corrupt one composition entry: typing or associativity must flag it
  SUBCASE("corrupted compose entry") {
    for (auto& [key, val] : g.comp) {
      (void)key;
      val = (val + 1) % g.arrow_count();
      break;
    }
    CHECK_FALSE(validate(g).empty());
  }
  SUBCASE("missing compose entry") {
    g.comp.erase(g.comp.begin());
    auto vs = validate(g);
    REQUIRE_FALSE(vs.empty());
    CHECK(vs.front().law == "composition-totality");
  }
  SUBCASE("corrupted inverse") {
    g.inverse[1] = g.inverse[0];
    CHECK_FALSE(validate(g).empty());
  }
}

TEST_CASE("isotropy fibers") {
  RelationGroupoid full3 = relation_groupoid(EquivRelation::full({"a", "b", "c"}));
  IsotropyBundle iso = isotropy(full3.gpd);
  for (const auto& fiber : iso.fibers) CHECK(fiber.size() == 1);

  // Z2 acting trivially on 2 points: both fibers of order 2
  FiniteAction act;
  act.group = GroupTable::cyclic(2);
  act.points = {"p", "q"};
  act.act = {{0, 1}, {0, 1}};
  TransformationGroupoid tg = transformation_groupoid(act);
  IsotropyBundle iso2 = isotropy(tg.gpd);
  CHECK(iso2.fibers[0].size() == 2);
  CHECK(iso2.fibers[1].size() == 2);
  CHECK(isotropy_table(tg.gpd, 0).order() == 2);
}

TEST_CASE("orbit relation and components") {
  FiniteGroupoid z2 = one_unit_group(GroupTable::cyclic(2));
  CHECK(orbit_relation(z2).pairs.size() == 1);
  CHECK(is_ergodic(z2));
  CHECK(is_ergodic(relation_groupoid(EquivRelation::full(
      {"a", "b", "c", "d", "e"})).gpd));

  // a transitive groupoid is its own single component
  FiniteGroupoid tr = semidirect_full_const(2, GroupTable::cyclic(2));
  auto tr_comps = components(tr);
  REQUIRE(tr_comps.size() == 1);
  CHECK(tr_comps[0].print() == tr.print());

  FiniteGroupoid two = disjoint_union({semidirect_full_const(2, GroupTable::trivial()),
                                       semidirect_full_const(2, GroupTable::trivial())});
  CHECK(validate(two).empty());
  CHECK(orbit_relation(two).classes().size() == 2);
  CHECK_FALSE(is_ergodic(two));
  CHECK(components(two).size() == 2);

  // Z4 rotating 4 points: one orbit
  FiniteAction rot;
  rot.group = GroupTable::cyclic(4);
  rot.points = {"0", "1", "2", "3"};
  rot.act.assign(4, std::vector<int>(4));
  for (int g = 0; g < 4; ++g)
    for (int x = 0; x < 4; ++x) rot.act[g][x] = (g + x) % 4;
  TransformationGroupoid tg = transformation_groupoid(rot);
  CHECK(orbit_relation(tg.gpd).pairs.size() == 16);
  CHECK(is_ergodic(tg.gpd));

  // mixed orbit sizes 1,2,3
  BundleAction ba;
  ba.rel = EquivRelation::from_classes({"a", "b", "c", "d", "e", "f"}, {{0}, {1, 2}, {3, 4, 5}});
  ba.fibers.assign(6, GroupTable::trivial());
  for (const auto& [y, x] : ba.rel.pairs) ba.delta[{y, x}] = {0};
  auto comps = components(semidirect(ba).gpd);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0].unit_count() == 1);
  CHECK(comps[1].unit_count() == 2);
  CHECK(comps[2].unit_count() == 3);
  for (const auto& c : comps) CHECK(validate(c).empty());
}

TEST_CASE("icc check is principality with a witness") {
  RelationGroupoid full3 = relation_groupoid(EquivRelation::full({"a", "b", "c"}));
  CHECK(icc_check(full3.gpd).icc);

  FiniteGroupoid semi = semidirect_full_const(2, GroupTable::cyclic(2));
  IccResult r = icc_check(semi);
  CHECK_FALSE(r.icc);
  REQUIRE(r.witness.has_value());
  const auto& w = semi.arrows[*r.witness];
  CHECK(w.src == w.tgt);
  CHECK(*r.witness != semi.unit_arrow[w.src]);

  FiniteGroupoid z2 = one_unit_group(GroupTable::cyclic(2));
  CHECK_FALSE(icc_check(z2).icc);
}

TEST_CASE("global bisection basis") {
  RelationGroupoid full3 = relation_groupoid(EquivRelation::full({"a", "b", "c"}));
  auto parts3 = global_bisection_basis(full3.gpd);
  CHECK(parts3.size() == 3);
  for (const auto& p : parts3) CHECK(is_global_bisection(full3.gpd, p));

  FiniteGroupoid semi = semidirect_full_const(2, GroupTable::cyclic(2));
  auto parts4 = global_bisection_basis(semi);
  CHECK(parts4.size() == 4);
  std::set<int> covered;
  for (const auto& p : parts4) {
    CHECK(is_global_bisection(semi, p));
    for (int id : p) CHECK(covered.insert(id).second);
  }
  CHECK(covered.size() == 8);

  FiniteGroupoid z3 = one_unit_group(GroupTable::cyclic(3));
  auto parts1 = global_bisection_basis(z3);
  CHECK(parts1.size() == 3);
  for (const auto& p : parts1) CHECK(p.size() == 1);

  FiniteGroupoid two = disjoint_union({full3.gpd, full3.gpd});
  CHECK_THROWS_WITH_AS(global_bisection_basis(two), doctest::Contains("NotTransitive"),
                       DomainError);
}

TEST_CASE("arrow count of transitive groupoids is units^2 * isotropy order") {
  for (int n = 1; n <= 4; ++n)
    for (int ord = 1; ord <= 4; ++ord) {
      FiniteGroupoid g = semidirect_full_const(n, GroupTable::cyclic(ord));
      CHECK(g.arrow_count() == n * n * ord);
    }
}

TEST_CASE("restriction") {
  RelationGroupoid full4 = relation_groupoid(EquivRelation::full({"a", "b", "c", "d"}));
  FiniteGroupoid same = restrict_to(full4.gpd, {0, 1, 2, 3});
  CHECK(same.print() == full4.gpd.print());

  FiniteGroupoid semi = semidirect_full_const(3, GroupTable::cyclic(2));
  FiniteGroupoid iso_g = restrict_to(semi, {1});
  CHECK(iso_g.unit_count() == 1);
  CHECK(iso_g.arrow_count() == 2);
  CHECK(validate(iso_g).empty());

  FiniteGroupoid pairg = restrict_to(full4.gpd, {0, 2});
  CHECK(pairg.unit_count() == 2);
  CHECK(pairg.arrow_count() == 4);
  CHECK(validate(pairg).empty());
}

TEST_CASE("isotropy fibers along an orbit are isomorphic via conjugation") {
  // twisted cocycle over C4 fibers: conjugation by connecting arrows realizes
  // the isomorphism between isotropy groups at different units
  GroupTable c4 = GroupTable::cyclic(4);
  auto auts = automorphisms(c4);
  REQUIRE(auts.size() == 2);
  BundleAction ba;
  ba.rel = EquivRelation::full({"u0", "u1"});
  ba.fibers = {c4, c4};
  std::vector<std::vector<int>> c{auts[0], auts[1]};
  for (const auto& [y, x] : ba.rel.pairs) {
    std::vector<int> cy_inv(4);
    for (int i = 0; i < 4; ++i) cy_inv[c[y][i]] = i;
    std::vector<int> map(4);
    for (int i = 0; i < 4; ++i) map[i] = cy_inv[c[x][i]];
    ba.delta[{y, x}] = map;
  }
  CHECK(validate_action(ba).empty());
  SemidirectGroupoid sg = semidirect(ba);
  CHECK(validate(sg.gpd).empty());

  FinPermGroup f0 = isotropy_table(sg.gpd, 0).regular_rep();
  FinPermGroup f1 = isotropy_table(sg.gpd, 1).regular_rep();
  CHECK(group_isomorphic(f0, f1, 1000).has_value());
}

TEST_CASE("random suite members validate and reassemble") {
  Caps caps;
  auto items = random_suite(3, 24, 4, 4, caps);
  CHECK(items.size() >= 24);
  // one principal and one non-principal instance per unit count
  std::set<std::pair<int, bool>> strata;
  for (const auto& item : items) {
    CHECK(validate(item.gpd).empty());
    strata.insert({item.gpd.unit_count(), icc_check(item.gpd).icc});
  }
  for (int n = 1; n <= 4; ++n) {
    CHECK(strata.count({n, true}) == 1);
    CHECK(strata.count({n, false}) == 1);
  }

  // reproducible from the seed, byte for byte
  auto again = random_suite(3, 24, 4, 4, caps);
  REQUIRE(again.size() == items.size());
  for (size_t i = 0; i < items.size(); ++i) {
    CHECK(again[i].name == items[i].name);
    CHECK(again[i].gpd.print() == items[i].gpd.print());
  }
}

TEST_CASE("validate flags compose entries with unknown arrow ids") {
  FiniteGroupoid g = semidirect_full_const(2, GroupTable::trivial());
  g.set_compose(99, 0, 0);
  auto vs = validate(g);
  REQUIRE_FALSE(vs.empty());
  CHECK(vs.front().law == "structure");
  CHECK_THROWS_AS(FiniteGroupoid::parse(
                      R"({"units":["a"],"arrows":[{"id":0,"src":"a","tgt":"a"}],)"
                      R"("unit_arrow":{"a":0},"inverse":{"0":0},"compose":[[0,5,0]]})"),
                  DomainError);
}
