#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gf/bundle.hpp"
#include "gf/caps.hpp"
#include "gf/certificate.hpp"
#include "gf/constructions.hpp"
#include "gf/groupoid.hpp"

namespace gf {

/// Isomorphism-necessary invariants: counts, orbit size multiset, per-orbit
/// isotropy order and element-order histogram.
struct GroupoidInvariant {
  int units = 0;
  int arrows = 0;
  std::vector<int> orbit_sizes;
  std::vector<std::pair<uint64_t, std::map<uint64_t, int>>> orbit_isotropy;

  bool operator==(const GroupoidInvariant& o) const = default;
};
GroupoidInvariant groupoid_invariant(const FiniteGroupoid& g);

/// Backtracking unit-and-arrow assignment behind an invariant pre-screen;
/// a returned map always passes verify_isomorphism, nullopt means the
/// exhaustive search completed.  Deterministic: units ordered by signature,
/// arrows by id, candidates by ascending id.
std::optional<std::vector<int>> groupoid_isomorphic(const FiniteGroupoid& a,
                                                    const FiniteGroupoid& b, const Caps& caps);

/// Transformation-groupoid recognition. Transitive groupoids always succeed
/// through the atomic model. Multi-component groupoids get a bounded but
/// principled search: |K| is forced to be |units_i|*|Gamma_i| for every
/// component, so disagreement is a provable `no`; a forced order beyond the
/// group-order cap is `undecided`; otherwise the search over the small-group
/// catalog and subgroup-class tuples is exhaustive.
struct TransModel {
  enum class Verdict { Found, No, Undecided } verdict = Verdict::No;
  std::optional<FiniteAction> action;
  std::optional<std::vector<int>> iso;  // model groupoid -> g
  std::string note;
};
TransModel is_transformation_groupoid(const FiniteGroupoid& g, const Caps& caps);

/// Pairwise distinctness report over a bundle: prefix-coded fibers through
/// the alternating invariant, explicit fibers through the isomorphism
/// search. Kind "non-isomorphism", subject "bundle-fibers".
Certificate fiber_distinctness_certificate(const GroupBundle& bundle, const Caps& caps);

/// The ingredients of genuineness at truncated scale, with witnesses:
/// nontrivial isotropy everywhere, 2-generated fibers, pairwise-distinct
/// fiber invariants, plus the explicit disclaimer that the finite truncation
/// is itself a transformation groupoid.
Certificate genuineness_ingredients(const SemidirectGroupoid& sg,
                                    const std::optional<std::vector<OddPrefix>>& codes,
                                    const Caps& caps);

/// Certificate builders for the remaining kinds.
Certificate bisection_basis_certificate(const FiniteGroupoid& g);
Certificate isomorphism_certificate(const FiniteGroupoid& a, const FiniteGroupoid& b,
                                    const std::vector<int>& map);
Certificate transformation_model_certificate(const FiniteGroupoid& g, const FiniteAction& action,
                                             const std::vector<int>& map);

}  // namespace gf
