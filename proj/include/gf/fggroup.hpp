#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "gf/groups.hpp"

namespace gf {

/// A finitely generated group with lazily evaluated elements. Elements are
/// opaque canonical keys: equal keys iff equal elements. Implementations must
/// be pure and deterministic.
class FgGroup {
public:
  virtual ~FgGroup() = default;
  virtual std::string name() const = 0;
  virtual std::string identity() const = 0;
  /// (label, element key) pairs; labels are for certificates and diagnostics.
  virtual std::vector<std::pair<std::string, std::string>> generators() const = 0;
  virtual std::string mul(const std::string& a, const std::string& b) const = 0;
  virtual std::string inv(const std::string& a) const = 0;
};

using FgGroupPtr = std::shared_ptr<const FgGroup>;

/// Finite group behind the lazy interface; keys are element names.
class TableFg : public FgGroup {
public:
  explicit TableFg(GroupTable table, std::string name = "finite");
  std::string name() const override { return name_; }
  std::string identity() const override;
  std::vector<std::pair<std::string, std::string>> generators() const override;
  std::string mul(const std::string& a, const std::string& b) const override;
  std::string inv(const std::string& a) const override;
  const GroupTable& table() const { return table_; }

private:
  int index_of(const std::string& key) const;
  GroupTable table_;
  std::string name_;
};

/// Permutation group behind the lazy interface; keys are 1-based image lists.
class PermGroupFg : public FgGroup {
public:
  explicit PermGroupFg(FinPermGroup group, std::string name = "permgroup");
  std::string name() const override { return name_; }
  std::string identity() const override;
  std::vector<std::pair<std::string, std::string>> generators() const override;
  std::string mul(const std::string& a, const std::string& b) const override;
  std::string inv(const std::string& a) const override;
  const FinPermGroup& group() const { return group_; }

private:
  FinPermGroup group_;
  std::string name_;
};

/// The infinite cyclic group; keys are decimal integers, generator t = "1".
class ZGroup : public FgGroup {
public:
  std::string name() const override { return "Z"; }
  std::string identity() const override { return "0"; }
  std::vector<std::pair<std::string, std::string>> generators() const override {
    return {{"t", "1"}};
  }
  std::string mul(const std::string& a, const std::string& b) const override;
  std::string inv(const std::string& a) const override;
};

/// Restricted wreath product base ≀ top: finitely supported maps top → base
/// with top translating the support. Key encoding is internal and canonical
/// (support sorted by position key). Elements only; the group itself is never
/// materialized.
class LazyWreath : public FgGroup {
public:
  LazyWreath(FgGroupPtr base, FgGroupPtr top);
  std::string name() const override;
  std::string identity() const override;
  std::vector<std::pair<std::string, std::string>> generators() const override;
  std::string mul(const std::string& a, const std::string& b) const override;
  std::string inv(const std::string& a) const override;

  /// The base element g planted at the top-identity position.
  std::string base_at_origin(const std::string& base_key) const;

private:
  struct Elem {
    std::vector<std::pair<std::string, std::string>> support;  // (position, base key)
    std::string shift;
  };
  std::string encode(Elem e) const;
  Elem decode(const std::string& key) const;
  FgGroupPtr base_, top_;
};

/// Deterministic ball of radius r in the word metric for the group's
/// generators and their inverses.  r is capped at 16 (CapExceeded).
std::vector<std::string> ball_enumerate(const FgGroup& g, int radius);

/// Number of distinct conjugates h g h^{-1} with h a word of length <= r.
/// Monotone non-decreasing in r. Rejects g = identity.
int conjugacy_growth_probe(const FgGroup& g, const std::string& elem, int radius);

}  // namespace gf
