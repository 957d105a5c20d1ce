#pragma once

#include <string>
#include <vector>

#include "gf/caps.hpp"
#include "gf/constructions.hpp"
#include "gf/rng.hpp"

namespace gf {

struct SuiteItem {
  std::string name;
  FiniteGroupoid gpd;
};

/// Every transitive groupoid shape with at most max_units units and isotropy
/// of order at most max_iso_order, one instance per cocycle tuple: semidirect
/// of the full relation with a constant fiber, delta_{(y,x)} = c_y^{-1} c_x
/// over unit-indexed automorphism tuples (c fixed to the identity at the
/// first unit). 297 instances at (4, 4).
std::vector<SuiteItem> exhaustive_transitive_suite(int max_units, int max_iso_order,
                                                   const Caps& caps);

/// Deterministic pseudo-random groupoids built through the constructions
/// module only: semidirects over random equivalence relations with random
/// cocycles, transformation groupoids, relation groupoids. At least one
/// principal and one non-principal instance per unit count.
std::vector<SuiteItem> random_suite(uint64_t seed, int count, int max_units, int max_iso_order,
                                    const Caps& caps);

/// A random bundle action that passes validate_action by construction:
/// random relation, constant fiber per class, cocycle from automorphism
/// tuples.
BundleAction random_bundle_action(Rng& rng, int max_units, int max_fiber_order);

/// Random Latin-square thetas for the full relation: powers of a random
/// n-cycle on the units, theta[0] = id.
std::vector<Perm> random_thetas(Rng& rng, int units);

}  // namespace gf
