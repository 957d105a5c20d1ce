#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gf/certificate.hpp"
#include "gf/perm.hpp"

namespace gf {

/// A finite strictly increasing prefix (u_1,...,u_m) of odd integers >= 5.
/// Stands in for the infinite sequence it begins; anything that would need
/// the unknown tail fails loudly with BlockOutOfRange.
struct OddPrefix {
  std::vector<uint64_t> entries;

  static OddPrefix from_entries(std::vector<uint64_t> entries);
  static OddPrefix parse(const std::string& csv);  // "5,7,9"
  std::string print() const;
  size_t length() const { return entries.size(); }
  bool operator==(const OddPrefix& o) const { return entries == o.entries; }
};

/// The point x_{j,k}: block j >= 1, slot 1 <= k <= u_j.
struct Point {
  uint64_t block = 1;
  uint64_t slot = 1;

  static Point parse(const std::string& text);  // "j:k"
  std::string print() const;
  bool operator==(const Point& o) const { return block == o.block && slot == o.slot; }
};

enum class Gen : uint8_t { Alpha, AlphaInv, Beta, BetaInv };

/// A word over the two generators and their inverses. Text form: one char
/// per letter over `a A b B`. Applied rightmost letter first.
struct Word {
  std::vector<Gen> letters;

  static Word parse(const std::string& text);
  std::string print() const;
  bool empty() const { return letters.empty(); }
  bool operator==(const Word& o) const { return letters == o.letters; }
};

Point alpha_apply(const OddPrefix& u, Point p);
Point beta_apply(const OddPrefix& u, Point p);
Point word_apply(const OddPrefix& u, const Word& w, Point p);

/// Free cancellation of adjacent inverse pairs plus beta-run reduction mod 3
/// (beta^3 = e; a beta-inverse rewrites to two betas first). Evaluates
/// identically to the input everywhere; not a canonical form.
Word word_reduce(const Word& w);

/// The two generators restricted to one block, as explicit permutations of
/// {1..u_j}: the full cycle and the 3-cycle (1 2 3).
struct BlockGenerators {
  uint64_t degree = 0;
  Perm alpha_part;
  Perm beta_part;
};
BlockGenerators block_restriction(const OddPrefix& u, uint64_t block);

/// Order of alpha restricted to the first `depth` blocks: lcm(u_1..u_depth).
uint64_t alpha_order_truncated(const OddPrefix& u, size_t depth);

/// Per-block alternating invariant. Blocks whose closure fits under the cap
/// are enumerated and recognized structurally (RecognitionFailure would mean
/// an implementation bug); larger blocks are declared, not enumerated.
struct BlockInvariant {
  uint64_t degree = 0;
  bool enumerated = false;
};
std::vector<BlockInvariant> alternating_invariant_detail(const OddPrefix& u, size_t depth,
                                                         long closure_cap);
std::vector<uint64_t> alternating_invariant(const OddPrefix& u, size_t depth, long closure_cap);

struct DistinguishOutcome {
  bool distinct = false;
  size_t index = 0;  // 1-based first differing index when distinct
  uint64_t left_entry = 0;
  uint64_t right_entry = 0;
  size_t common_depth = 0;  // compared depth when inconclusive
};
DistinguishOutcome distinguish_prefixes(const OddPrefix& u, const OddPrefix& v);

/// Non-isomorphism certificate for the groups coded by two prefixes: the
/// first differing index plus the alternating-degree witness, or an explicit
/// inconclusive verdict when the prefixes agree on their common length.
Certificate distinguish(const OddPrefix& u, const OddPrefix& v);

}  // namespace gf
