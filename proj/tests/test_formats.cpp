#include "doctest.h"
#include "gf/bundle.hpp"
#include "gf/constructions.hpp"
#include "gf/groupoid.hpp"
#include "gf/neumann.hpp"
#include "gf/util.hpp"

using namespace gf;

TEST_CASE("permutation text forms") {
  Perm p = Perm::parse(5, "(1 2 3)(4 5)");
  CHECK(p.print_cycles() == "(1 2 3)(4 5)");
  CHECK(p.print_images() == "[2,3,1,5,4]");
  CHECK(Perm::parse(5, "[2,3,1,5,4]") == p);
  CHECK(Perm::parse(-1, "(1 2 3)(4 5)") == p);  // degree inferred
  CHECK(Perm::parse(4, "()").is_identity());
  CHECK(Perm::parse(3, "[1,2,3]").is_identity());
  CHECK_THROWS_AS(Perm::parse(5, "(1 2 6)"), DomainError);
  CHECK_THROWS_AS(Perm::parse(3, "[1,1,2]"), DomainError);
  // canonical print round trip on a sample
  for (const char* s : {"()", "(1 2)", "(1 3 5)(2 4)", "(2 3)(4 6)"}) {
    Perm q = Perm::parse(6, s);
    CHECK(Perm::parse(6, q.print_cycles()) == q);
    CHECK(q.print_cycles() == Perm::parse(6, q.print_cycles()).print_cycles());
  }
}

TEST_CASE("group files") {
  FinPermGroup g =
      FinPermGroup::from_gens(5, {Perm::parse(5, "(1 2 3 4 5)"), Perm::parse(5, "(1 2 3)")});
  std::string text = g.print();
  CHECK(text == "degree 5\n(1 2 3 4 5)\n(1 2 3)\n");
  FinPermGroup back = FinPermGroup::parse(text);
  CHECK(back.degree == 5);
  CHECK(back.gens == g.gens);
  CHECK(back.print() == text);
  CHECK_THROWS_AS(FinPermGroup::parse("nonsense"), DomainError);
}

TEST_CASE("prefix, word, point text forms") {
  CHECK(OddPrefix::parse("5,7,9").print() == "5,7,9");
  CHECK(Point::parse("2:7").print() == "2:7");
  CHECK(Word::parse("abAB").print() == "abAB");
  CHECK(Word::parse("").print() == "");
  CHECK_THROWS_AS(Point::parse("12"), DomainError);
  CHECK_THROWS_AS(Word::parse("xyz"), DomainError);
}

TEST_CASE("groupoid files round-trip bit-exactly") {
  BundleAction ba;
  ba.rel = EquivRelation::full({"p", "q"});
  ba.fibers.assign(2, GroupTable::cyclic(2));
  for (const auto& [y, x] : ba.rel.pairs) ba.delta[{y, x}] = {0, 1};
  FiniteGroupoid g = semidirect(ba).gpd;

  std::string text = g.print();
  FiniteGroupoid back = FiniteGroupoid::parse(text);
  CHECK(back.print() == text);
  CHECK(validate(back).empty());
  CHECK(back.arrow_count() == g.arrow_count());

  // composition table survives the round trip entry by entry
  for (int a = 0; a < g.arrow_count(); ++a)
    for (int b = 0; b < g.arrow_count(); ++b) CHECK(g.compose(a, b) == back.compose(a, b));

  CHECK_THROWS_AS(FiniteGroupoid::parse("{}"), std::exception);
}

TEST_CASE("relation files round-trip") {
  EquivRelation r = EquivRelation::from_classes({"a", "b", "c"}, {{0, 1}, {2}});
  std::string text = r.print();
  EquivRelation back = EquivRelation::parse(text);
  CHECK(back.print() == text);
  CHECK(back.pairs == r.pairs);
}

TEST_CASE("action files round-trip") {
  FiniteAction a;
  a.group = GroupTable::cyclic(3);
  a.points = {"x", "y", "z"};
  a.act.assign(3, std::vector<int>(3));
  for (int g = 0; g < 3; ++g)
    for (int x = 0; x < 3; ++x) a.act[g][x] = (g + x) % 3;
  std::string text = a.print();
  FiniteAction back = FiniteAction::parse(text);
  CHECK(back.print() == text);
  CHECK(back.act == a.act);
  CHECK(transformation_groupoid(back).gpd.print() == transformation_groupoid(a).gpd.print());
}

TEST_CASE("bundle action files round-trip") {
  BundleAction ba;
  ba.rel = EquivRelation::full({"p", "q"});
  GroupTable c3 = GroupTable::cyclic(3);
  ba.fibers = {c3, c3};
  auto auts = automorphisms(c3);
  std::vector<std::vector<int>> c{auts[0], auts[1]};
  for (const auto& [y, x] : ba.rel.pairs) {
    std::vector<int> cy_inv(3);
    for (int i = 0; i < 3; ++i) cy_inv[c[y][i]] = i;
    std::vector<int> map(3);
    for (int i = 0; i < 3; ++i) map[i] = cy_inv[c[x][i]];
    ba.delta[{y, x}] = map;
  }
  REQUIRE(validate_action(ba).empty());
  std::string text = ba.print();
  BundleAction back = BundleAction::parse(text);
  CHECK(back.print() == text);
  CHECK(back.delta == ba.delta);
  CHECK(semidirect(back).gpd.print() == semidirect(ba).gpd.print());
}

TEST_CASE("digests are stable and sensitive") {
  CHECK(content_digest("abc") == content_digest("abc"));
  CHECK(content_digest("abc") != content_digest("abd"));
  CHECK(content_digest("").rfind("fnv1a-64:", 0) == 0);
}

TEST_CASE("neumann truncations") {
  FinPermGroup t1 = neumann_truncation(OddPrefix::parse("5,7,9"), 1);
  CHECK(t1.degree == 5);
  CHECK(closure_enumerate(t1.degree, t1.gens, 1000).size() == 60);

  FinPermGroup t2 = neumann_truncation(OddPrefix::parse("5,7,9"), 2);
  CHECK(t2.degree == 12);
  // subdirect product of two simple non-isomorphic alternating groups is full
  CHECK(closure_enumerate(t2.degree, t2.gens, 200000).size() == 60u * 2520u);

  GroupDesc fiber = neumann_fiber(OddPrefix::parse("5,7,9"), 1);
  REQUIRE(fiber.neumann_code.has_value());
  CHECK(fiber.neumann_code->print() == "5,7,9");
  CHECK_THROWS_AS(neumann_truncation(OddPrefix::parse("5,7"), 3), DomainError);
}
