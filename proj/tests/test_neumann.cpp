#include <numeric>

#include "doctest.h"
#include "gf/groups.hpp"
#include "gf/neumann.hpp"
#include "gf/rng.hpp"
#include "gf/util.hpp"

using namespace gf;

namespace {

// independent oracle: a word evaluated on block 1 of U=(5,...) is a product
// of the explicit cycles (1 2 3 4 5) and (1 2 3), rightmost letter first
Perm block1_word_perm(const std::string& word) {
  Perm alpha = Perm::parse(5, "(1 2 3 4 5)");
  Perm beta = Perm::parse(5, "(1 2 3)");
  Perm acc(5);
  for (char c : word) {
    Perm p = c == 'a' ? alpha : c == 'A' ? alpha.inverse() : c == 'b' ? beta : beta.inverse();
    acc = acc * p;  // rightmost acts first
  }
  return acc;
}

OddPrefix random_prefix(Rng& rng, int max_len, uint64_t max_entry) {
  int len = rng.range(1, max_len);
  std::vector<uint64_t> entries;
  uint64_t cur = 5 + 2 * rng.below(3);
  for (int i = 0; i < len; ++i) {
    entries.push_back(cur);
    cur += 2 * rng.range(1, 4);
    if (cur > max_entry) break;
  }
  return OddPrefix::from_entries(entries);
}

}  // namespace

TEST_CASE("prefix validation") {
  CHECK_THROWS_AS(OddPrefix::from_entries({}), DomainError);
  CHECK_THROWS_AS(OddPrefix::from_entries({3}), DomainError);
  CHECK_THROWS_AS(OddPrefix::from_entries({6}), DomainError);
  CHECK_THROWS_AS(OddPrefix::from_entries({7, 5}), DomainError);
  CHECK_THROWS_AS(OddPrefix::from_entries({5, 5}), DomainError);
  CHECK(OddPrefix::parse("5,7,9").entries == std::vector<uint64_t>{5, 7, 9});
  CHECK(OddPrefix::parse("5, 7, 9").print() == "5,7,9");
}

TEST_CASE("alpha_apply cycles within a block") {
  OddPrefix u = OddPrefix::parse("5,7,9");
  CHECK(alpha_apply(u, {1, 1}) == Point{1, 2});
  CHECK(alpha_apply(u, {1, 5}) == Point{1, 1});
  CHECK(alpha_apply(u, {2, 7}) == Point{2, 1});
  CHECK_THROWS_WITH_AS(alpha_apply(u, {4, 1}), doctest::Contains("BlockOutOfRange"), DomainError);
  CHECK_THROWS_AS(alpha_apply(u, {1, 6}), DomainError);  // slot past block length
}

TEST_CASE("beta_apply is the 3-cycle on the first three slots") {
  OddPrefix u = OddPrefix::parse("5,7,9");
  CHECK(beta_apply(u, {2, 3}) == Point{2, 1});
  CHECK(beta_apply(u, {1, 4}) == Point{1, 4});
  CHECK(beta_apply(u, {3, 2}) == Point{3, 3});
  CHECK_THROWS_AS(beta_apply(u, {5, 1}), DomainError);
}

TEST_CASE("word_apply: identity, beta order, commutator against the cycle oracle") {
  OddPrefix u = OddPrefix::parse("5,7,9");
  CHECK(word_apply(u, Word::parse(""), {1, 2}) == Point{1, 2});

  // beta^3 = e
  for (uint64_t j = 1; j <= 3; ++j)
    for (uint64_t k = 1; k <= u.entries[j - 1]; ++k)
      CHECK(word_apply(u, Word::parse("bbb"), {j, k}) == Point{j, k});

  // oracle value for the commutator word, frozen: 1:1 -> 1:4
  Perm oracle = block1_word_perm("abAB");
  CHECK(oracle.apply(0) == 3);  // 0-based: slot 1 -> slot 4
  CHECK(word_apply(u, Word::parse("abAB"), {1, 1}) == Point{1, 4});

  // the oracle and word_apply agree on every block-1 point for random words
  Rng rng(20240811);
  const char* letters = "aAbB";
  for (int trial = 0; trial < 200; ++trial) {
    std::string w;
    int len = rng.range(0, 12);
    for (int i = 0; i < len; ++i) w += letters[rng.below(4)];
    Perm p = block1_word_perm(w);
    for (uint64_t k = 1; k <= 5; ++k) {
      Point got = word_apply(u, Word::parse(w), {1, k});
      CHECK(got.block == 1);
      CHECK(static_cast<int>(got.slot) == p.apply(static_cast<int>(k - 1)) + 1);
    }
  }
}

TEST_CASE("word_reduce examples and evaluation-equality property") {
  CHECK(word_reduce(Word::parse("aA")).print() == "");
  CHECK(word_reduce(Word::parse("bbbb")).print() == "b");
  CHECK(word_reduce(Word::parse("B")).print() == "bb");
  CHECK(word_reduce(Word::parse("abBA")).print() == "");

  OddPrefix u = OddPrefix::parse("5,7,9");
  Rng rng(7);
  const char* letters = "aAbB";
  for (int trial = 0; trial < 1000; ++trial) {
    std::string w;
    int len = rng.range(0, 10);
    for (int i = 0; i < len; ++i) w += letters[rng.below(4)];
    Word reduced = word_reduce(Word::parse(w));
    Point p{static_cast<uint64_t>(rng.range(1, 3)), static_cast<uint64_t>(rng.range(1, 5))};
    CHECK(word_apply(u, Word::parse(w), p) == word_apply(u, reduced, p));
  }
}

TEST_CASE("block_restriction gives the defining cycles") {
  OddPrefix u = OddPrefix::parse("5,7,9");
  BlockGenerators b1 = block_restriction(u, 1);
  CHECK(b1.degree == 5);
  CHECK(b1.alpha_part == Perm::parse(5, "(1 2 3 4 5)"));
  CHECK(b1.beta_part == Perm::parse(5, "(1 2 3)"));
  CHECK(block_restriction(u, 3).degree == 9);
  CHECK_THROWS_AS(block_restriction(u, 4), DomainError);

  // closure of block 1 has 60 elements (5!/2)
  auto elems = closure_enumerate(5, {b1.alpha_part, b1.beta_part}, 1000);
  CHECK(elems.size() == 60);
}

TEST_CASE("alpha order on truncations is the lcm of the block lengths") {
  CHECK(alpha_order_truncated(OddPrefix::parse("5,7,9"), 3) == 315);
  CHECK(alpha_order_truncated(OddPrefix::parse("5,7,9"), 1) == 5);
  CHECK(alpha_order_truncated(OddPrefix::parse("5,15,25"), 2) == 15);
  CHECK_THROWS_AS(alpha_order_truncated(OddPrefix::parse("5,7"), 3), DomainError);

  // monotone and at least the last entry
  Rng rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    OddPrefix u = random_prefix(rng, 4, 99);
    uint64_t prev = 1;
    for (size_t m = 1; m <= u.length(); ++m) {
      uint64_t cur = alpha_order_truncated(u, m);
      CHECK(cur >= prev);
      CHECK(cur >= u.entries[m - 1]);
      // independent oracle: the lcm from std::lcm
      uint64_t want = 1;
      for (size_t j = 0; j < m; ++j) want = std::lcm(want, u.entries[j]);
      CHECK(cur == want);
      prev = cur;
    }
  }
}

TEST_CASE("alpha restricted to block j has order exactly u_j") {
  OddPrefix u = OddPrefix::parse("5,7,9");
  for (uint64_t j = 1; j <= 3; ++j) {
    BlockGenerators bg = block_restriction(u, j);
    CHECK(bg.alpha_part.order() == u.entries[j - 1]);
    // and via word application: alpha^{u_j} fixes the block pointwise
    Point p{j, 2};
    Point cur = p;
    for (uint64_t i = 0; i < u.entries[j - 1]; ++i) cur = alpha_apply(u, cur);
    CHECK(cur == p);
  }
}

TEST_CASE("alternating invariant equals the prefix entries") {
  OddPrefix u = OddPrefix::parse("5,7,9");
  CHECK(alternating_invariant(u, 2, 200000) == std::vector<uint64_t>{5, 7});
  CHECK(alternating_invariant(u, 1, 200000) == std::vector<uint64_t>{5});

  Rng rng(4242);
  for (int trial = 0; trial < 50; ++trial) {
    OddPrefix p = random_prefix(rng, 3, 9);
    size_t depth = static_cast<size_t>(rng.range(1, static_cast<int>(p.length())));
    auto inv = alternating_invariant(p, depth, 200000);
    std::vector<uint64_t> want(p.entries.begin(), p.entries.begin() + depth);
    CHECK(inv == want);
  }

  // blocks beyond the closure cap are declared, not enumerated
  auto detail = alternating_invariant_detail(OddPrefix::parse("5,11"), 2, 200000);
  CHECK(detail[0].enumerated);
  CHECK_FALSE(detail[1].enumerated);
  CHECK(detail[1].degree == 11);
}

TEST_CASE("distinguish: witnesses and inconclusive verdicts") {
  Certificate c1 = distinguish(OddPrefix::parse("5,7,9"), OddPrefix::parse("5,7,11"));
  CHECK(c1.doc["verdict"] == "distinct");
  CHECK(c1.doc["witnesses"][0]["index"] == 3);
  CHECK(c1.doc["witnesses"][0]["left_normal_subgroup_order"] == "181440");
  CHECK(c1.doc["witnesses"][0]["right_normal_subgroup_order"] == "19958400");
  CHECK(c1.doc["witnesses"][0]["distinguishing_degree"] == 9);

  Certificate c2 = distinguish(OddPrefix::parse("5,7"), OddPrefix::parse("5,7"));
  CHECK(c2.doc["verdict"] == "inconclusive");
  CHECK(c2.doc["depth"] == 2);

  Certificate c3 = distinguish(OddPrefix::parse("5,9"), OddPrefix::parse("7,9"));
  CHECK(c3.doc["verdict"] == "distinct");
  CHECK(c3.doc["witnesses"][0]["index"] == 1);

  // a prefix extension carries no witness
  Certificate c4 = distinguish(OddPrefix::parse("5,7"), OddPrefix::parse("5,7,9"));
  CHECK(c4.doc["verdict"] == "inconclusive");

  // witness iff difference within the common length
  Rng rng(31337);
  for (int trial = 0; trial < 200; ++trial) {
    OddPrefix a = random_prefix(rng, 4, 99);
    OddPrefix b = random_prefix(rng, 4, 99);
    DistinguishOutcome o = distinguish_prefixes(a, b);
    size_t common = std::min(a.length(), b.length());
    bool differs = false;
    for (size_t i = 0; i < common; ++i)
      if (a.entries[i] != b.entries[i]) {
        differs = true;
        break;
      }
    CHECK(o.distinct == differs);
    if (o.distinct) {
      CHECK(a.entries[o.index - 1] != b.entries[o.index - 1]);
      // the smaller entry occurs in neither the other prefix nor its tail
      uint64_t deg = std::min(o.left_entry, o.right_entry);
      const OddPrefix& other = o.left_entry == deg ? b : a;
      for (uint64_t e : other.entries) CHECK(e != deg);
    }
  }
}

TEST_CASE("half factorial strings") {
  CHECK(half_factorial_string(5) == "60");
  CHECK(half_factorial_string(9) == "181440");
  CHECK(half_factorial_string(11) == "19958400");
  CHECK(half_factorial_string(21) == "25545471085854720000");  // past uint64 factorial range
}
