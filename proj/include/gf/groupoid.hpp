#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gf/groups.hpp"

namespace gf {

/// An equivalence relation on a finite unit set. Pairs are (target, source),
/// sorted lexicographically, diagonal included, closed under symmetry and
/// transitivity (validate() reports any breakage).
struct EquivRelation {
  std::vector<std::string> units;
  std::vector<std::pair<int, int>> pairs;

  static EquivRelation from_classes(std::vector<std::string> units,
                                    const std::vector<std::vector<int>>& classes);
  static EquivRelation full(std::vector<std::string> units);
  static EquivRelation diagonal(std::vector<std::string> units);

  bool contains(int y, int x) const;
  std::vector<std::vector<int>> classes() const;  // each sorted, ordered by least unit
  bool transitive_whole() const { return classes().size() == 1; }
  std::vector<std::string> validate() const;

  std::string print() const;  // canonical JSON
  static EquivRelation parse(const std::string& text);
};

/// Finite groupoid: explicit arrows with dense integer ids, partial
/// composition table, inverse table, one unit arrow per unit.
/// compose(g,h) is defined iff src(g) = tgt(h); then the composite runs
/// src(h) -> tgt(g) ("g after h").
struct FiniteGroupoid {
  struct Arrow {
    int src = 0;
    int tgt = 0;
  };

  std::vector<std::string> units;
  std::vector<Arrow> arrows;
  std::vector<int> unit_arrow;  // unit index -> arrow id
  std::vector<int> inverse;     // arrow id -> arrow id
  std::unordered_map<uint64_t, int> comp;

  static uint64_t comp_key(int g, int h) {
    return (static_cast<uint64_t>(static_cast<uint32_t>(g)) << 32) |
           static_cast<uint32_t>(h);
  }
  void set_compose(int g, int h, int gh) { comp[comp_key(g, h)] = gh; }
  std::optional<int> compose(int g, int h) const;
  int compose_req(int g, int h) const;  // fails on undefined composition

  int unit_count() const { return static_cast<int>(units.size()); }
  int arrow_count() const { return static_cast<int>(arrows.size()); }

  std::string print() const;  // canonical JSON, bit-exact round-trip
  static FiniteGroupoid parse(const std::string& text);
};

/// One violated law with a concrete witness (arrow ids).
struct Violation {
  std::string law;
  std::vector<int> witness;
  std::string detail;
};

/// Exhaustive check of every groupoid law: composition typing and totality,
/// associativity on all composable triples, unit laws, inverse laws.
std::vector<Violation> validate(const FiniteGroupoid& g);

/// Per-unit isotropy fibers (arrow ids with src = tgt = the unit, ascending).
struct IsotropyBundle {
  std::vector<std::vector<int>> fibers;
};
IsotropyBundle isotropy(const FiniteGroupoid& g);

/// The isotropy fiber at one unit as an explicit group table; element 0 is
/// the unit arrow and names are the arrow ids.
GroupTable isotropy_table(const FiniteGroupoid& g, int unit);

EquivRelation orbit_relation(const FiniteGroupoid& g);
std::vector<FiniteGroupoid> components(const FiniteGroupoid& g);
bool is_ergodic(const FiniteGroupoid& g);

/// Finite icc reading: true iff the isotropy is trivial everywhere
/// (principal); otherwise false with the least non-unit isotropy arrow as
/// the witness set E.
struct IccResult {
  bool icc = false;
  std::optional<int> witness;
};
IccResult icc_check(const FiniteGroupoid& g);

/// An arrow set with injective source and target restrictions; global when
/// both are bijections onto the units.
using Bisection = std::vector<int>;
bool is_global_bisection(const FiniteGroupoid& g, const Bisection& b);

/// Partition of the arrows of a transitive groupoid into |arrows|/|units|
/// global bisections. Repeated perfect-matching extraction on the src/tgt
/// bipartite multigraph, augmenting paths, ties broken by least arrow id.
std::vector<Bisection> global_bisection_basis(const FiniteGroupoid& g);

FiniteGroupoid restrict_to(const FiniteGroupoid& g, const std::vector<int>& unit_subset);
FiniteGroupoid disjoint_union(const std::vector<FiniteGroupoid>& parts);

}  // namespace gf
