#pragma once

#include <string>
#include <vector>

#include "gf/groups.hpp"

namespace gf {

struct SmallGroup {
  std::string name;
  GroupTable table;
};

/// All groups of the given order up to isomorphism, 1 <= n <= 12.
std::vector<SmallGroup> small_groups_of_order(int n);

/// Every subgroup of a table group, one representative per conjugacy class,
/// each as a sorted element-index set.  Deterministic ordering.
std::vector<std::vector<int>> subgroup_class_reps(const GroupTable& g);

/// A table for the subgroup spanned by the given element set (must be
/// closed); element 0 of the result is the identity.
GroupTable subgroup_table(const GroupTable& g, const std::vector<int>& elements);

/// Left coset space K/H as an action of K: points are cosets (named by their
/// least element), act by left translation.
struct CosetAction {
  std::vector<std::vector<int>> cosets;  // each sorted; cosets ordered by least element
  std::vector<std::vector<int>> act;     // act[k][coset] -> coset
};
CosetAction coset_action(const GroupTable& g, const std::vector<int>& subgroup);

}  // namespace gf
