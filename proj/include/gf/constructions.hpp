#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "gf/groupoid.hpp"

namespace gf {

/// An action of an enumerated finite group on a finite point set. Element 0
/// of the table is the identity.
struct FiniteAction {
  GroupTable group;
  std::vector<std::string> points;
  std::vector<std::vector<int>> act;  // act[element][point] -> point

  std::vector<std::string> validate() const;  // action-law violations

  std::string print() const;  // canonical JSON
  static FiniteAction parse(const std::string& text);
};

/// Transformation groupoid of an action: arrows are (point, element) pairs
/// with source x and target g.x; keeps the arrow coding for tests and
/// certificates.
struct TransformationGroupoid {
  FiniteGroupoid gpd;
  FiniteAction action;

  int arrow_of(int point, int elem) const {
    return point * static_cast<int>(action.group.order()) + elem;
  }
  std::pair<int, int> decode(int arrow) const {
    int n = static_cast<int>(action.group.order());
    return {arrow / n, arrow % n};
  }
};
TransformationGroupoid transformation_groupoid(const FiniteAction& a);

/// The principal groupoid of an equivalence relation: one arrow per pair.
struct RelationGroupoid {
  FiniteGroupoid gpd;
  EquivRelation rel;
  std::map<std::pair<int, int>, int> arrow_of;  // (tgt,src) -> arrow id
};
RelationGroupoid relation_groupoid(const EquivRelation& r);

/// An action of a relation on a bundle of enumerated finite groups: one
/// fiber isomorphism per pair, subject to the cocycle laws.
struct BundleAction {
  EquivRelation rel;
  std::vector<GroupTable> fibers;  // one per unit
  std::map<std::pair<int, int>, std::vector<int>> delta;  // (y,x): fiber[x] -> fiber[y]

  std::string print() const;
  static BundleAction parse(const std::string& text);
};

struct ActionViolation {
  std::string axiom;
  std::string detail;
};
std::vector<ActionViolation> validate_action(const BundleAction& d);

/// Semidirect product groupoid: arrows (g,(y,x)) with g in the source fiber,
/// composition through the action. Keeps the arrow coding.
struct SemidirectGroupoid {
  FiniteGroupoid gpd;
  BundleAction action;
  std::map<std::pair<int, int>, int> pair_base;  // (y,x) -> first arrow id of the block

  int arrow_of(int g_elem, int y, int x) const;
  std::tuple<int, int, int> decode(int arrow) const;  // (g_elem, y, x)
};
SemidirectGroupoid semidirect(const BundleAction& d);

/// Orbit-indexed bundle: fiber at x is the product over n of the base fiber
/// at theta_n(x), coordinates ordered by n.
struct OrbitBundle {
  EquivRelation rel;
  std::vector<Perm> theta;          // global unit bijections, theta[0] = id
  std::vector<GroupTable> base;     // one per unit
  std::vector<GroupTable> fibers;   // product tables, one per unit
  std::vector<std::vector<int>> factor_unit;  // per unit: coordinate n -> unit theta_n(x)
};
OrbitBundle orbit_indexed_bundle(const EquivRelation& r, const std::vector<GroupTable>& base,
                                 const std::vector<Perm>& theta, long cap);

/// theta_k = rotation by k inside the single class (units in index order).
std::vector<Perm> canonical_thetas(const EquivRelation& r);

/// Coordinate permutation sigma_{(y,x)} = phi_y^{-1} o phi_x where
/// phi_x(n) = theta_n(x); satisfies theta_{sigma_{(y,x)}(n)}(y) = theta_n(x).
std::vector<int> shift_sigma(const OrbitBundle& ob, int y, int x);

/// The shift action: delta_{(y,x)} permutes coordinates by sigma_{(y,x)}.
/// Requires n -> theta_n(x) injective for each unit (NotInjective).
BundleAction canonical_shift_action(const OrbitBundle& ob);

/// A star transversal from the base unit and the resulting trivialization:
/// every arrow factors uniquely as t_tgt . gamma . t_src^{-1} with gamma in
/// the isotropy group of the base unit.
struct Transversal {
  int base_unit = 0;
  std::vector<int> to_unit;  // arrow base -> x, to_unit[base] is the unit arrow
};
Transversal star_transversal(const FiniteGroupoid& g);

/// Atomic-case transformation model of a transitive groupoid: the group
/// (Z_n x Gamma) acting on Z_n by left translation of the first coordinate,
/// plus the explicit arrow isomorphism onto g. Verified before returning.
struct AtomicModel {
  FiniteAction action;
  TransformationGroupoid model;
  std::vector<int> iso;  // arrow map: model.gpd -> g
};
AtomicModel atomic_transformation_model(const FiniteGroupoid& g);

/// Checks a total arrow map for being a groupoid isomorphism: bijective,
/// unit/src/tgt compatible, multiplicative, inverse-preserving.
struct IsoCheck {
  bool ok = false;
  std::vector<std::string> violations;
};
IsoCheck verify_isomorphism(const std::vector<int>& f, const FiniteGroupoid& a,
                            const FiniteGroupoid& b);

}  // namespace gf
