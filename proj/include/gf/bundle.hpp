#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gf/fggroup.hpp"
#include "gf/neumann.hpp"

namespace gf {

/// Either an explicit finite permutation group or a lazily evaluated f.g.
/// group, optionally carrying the sequence prefix it truncates.
struct GroupDesc {
  std::optional<FinPermGroup> finite;
  FgGroupPtr lazy;
  std::optional<OddPrefix> neumann_code;

  bool is_finite() const { return finite.has_value(); }
  static GroupDesc from_finite(FinPermGroup g);
  static GroupDesc from_lazy(FgGroupPtr g);
};

/// A finite indexed family of group descriptions.
struct GroupBundle {
  std::vector<std::string> index_set;
  std::vector<GroupDesc> fibers;
};

/// Fiberwise direct product (finite-list analog of the direct sum). The
/// index set parameter settles the empty-list convention: a bundle of
/// trivial groups. Throws IndexMismatch when the input bundles disagree.
GroupBundle direct_sum_bundle(const std::vector<std::string>& index_set,
                              const std::vector<GroupBundle>& bundles, long cap);

/// Restricted wreath product g wr k: the semidirect product of the k-indexed
/// direct sum of copies of g by k translating coordinates. Finite-by-finite
/// is materialized as a permutation group on |g.degree| * |k| points (copies
/// indexed by the elements of k); k of order one returns g unchanged; any
/// lazy participant yields a lazy wreath that only materializes elements.
GroupDesc wreath_product(const GroupDesc& g, const GroupDesc& k, long cap);

/// The truncated group of a prefix: the two defining cycles restricted to
/// the first `depth` blocks, acting on u_1 + ... + u_depth points.
FinPermGroup neumann_truncation(const OddPrefix& u, size_t depth);
GroupDesc neumann_fiber(const OddPrefix& u, size_t depth);

}  // namespace gf
