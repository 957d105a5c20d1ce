#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gf/perm.hpp"

namespace gf {

/// A finite permutation group on {1..degree}, given by generators. The
/// element list, when present, is the closure in deterministic BFS order
/// (identity first). Immutable; helpers never mutate in place.
struct FinPermGroup {
  int degree = 1;
  std::vector<Perm> gens;
  std::vector<Perm> elements;  // empty means not enumerated

  static FinPermGroup from_gens(int degree, std::vector<Perm> gens);
  FinPermGroup with_elements(long cap) const;

  std::string print() const;                       // "degree n" + one generator line each
  static FinPermGroup parse(const std::string&);   // same format
};

/// Breadth-first closure of `gens` under composition, starting from the
/// identity. Deterministic ordering: frontier elements in discovery order,
/// generators in the given order, new = gen * old. Throws CapExceeded if the
/// closure would pass `cap` elements.
std::vector<Perm> closure_enumerate(int degree, const std::vector<Perm>& gens, long cap);

/// Recognizes the alternating group: returns n iff the closure has exactly
/// n!/2 elements, every element is even, and the action on {1..n} is
/// transitive. No character theory, just the definition.
std::optional<int> is_alternating(const FinPermGroup& g, long cap);

/// True iff gHg^{-1} = H for every generator g of G. H is given as an
/// explicit element set (subset of G's closure).
bool is_normal(const std::vector<Perm>& subgroup, const FinPermGroup& g);

/// A finite group as an explicit multiplication table. Element 0 is the
/// identity. Derived from permutation groups (closure order), never primary.
struct GroupTable {
  std::vector<std::string> names;       // canonical element names
  std::vector<std::vector<int>> mul;    // mul[a][b]
  std::vector<int> inv;
  std::vector<int> gens;                // distinguished generating set (element indices)

  int order() const { return static_cast<int>(mul.size()); }
  bool is_abelian() const;
  int center_size() const;
  std::vector<uint64_t> element_orders() const;
  std::map<uint64_t, int> order_histogram() const;

  static GroupTable trivial();
  static GroupTable cyclic(int n);
  static GroupTable from_perm_group(const FinPermGroup& g, long cap);

  /// Direct product; element (a,b) has index a * rhs.order() + b.
  GroupTable product(const GroupTable& rhs) const;

  /// Left regular representation on {1..order}.
  FinPermGroup regular_rep() const;

  /// Deterministic minimal-ish generating set: scan elements in index order,
  /// keep those that enlarge the generated subgroup.
  std::vector<int> greedy_gens() const;
};

/// All isomorphisms A -> B as element maps, in deterministic search order.
/// first_only stops after one. Invariant screen first (order, element-order
/// histogram, abelianness, center size).
std::vector<std::vector<int>> table_isomorphisms(const GroupTable& a, const GroupTable& b,
                                                 bool first_only);

inline std::optional<std::vector<int>> table_isomorphic(const GroupTable& a, const GroupTable& b) {
  auto all = table_isomorphisms(a, b, true);
  if (all.empty()) return std::nullopt;
  return all.front();
}

/// Automorphism group of a table, as element maps.
std::vector<std::vector<int>> automorphisms(const GroupTable& g);

/// Generator-image isomorphism between permutation groups, or nullopt after
/// an exhausted search. Backtracking with invariant pruning.
struct GroupIso {
  std::vector<Perm> gen_images;   // image of g.gens[i] in h
  std::vector<int> element_map;   // index map between the two closures
};
std::optional<GroupIso> group_isomorphic(const FinPermGroup& g, const FinPermGroup& h, long cap);

}  // namespace gf
