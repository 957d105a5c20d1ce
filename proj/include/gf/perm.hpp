#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gf {

/// A permutation of {1..n}, stored 0-based. Immutable after construction.
///
/// Text forms accepted by parse(): cycle notation `(1 2 3)(4 5)` and image
/// lists `[2,3,1,5,4]`, both 1-based. print() emits canonical cycle notation
/// (cycles sorted by least moved point, each starting at its least point;
/// the identity prints as `()`).
class Perm {
public:
  Perm() = default;
  explicit Perm(int degree);  // identity

  static Perm from_images(std::vector<int> images0);  // 0-based, validated
  static Perm from_cycles(int degree, const std::vector<std::vector<int>>& cycles1);
  static Perm parse(int degree, const std::string& text);

  int degree() const { return static_cast<int>(img_.size()); }
  int apply(int p) const { return img_[p]; }

  /// Function composition: (a * b)(p) = a(b(p)); b acts first.
  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;

  bool is_identity() const;
  bool even() const;
  uint64_t order() const;

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator!=(const Perm& o) const { return img_ != o.img_; }
  bool operator<(const Perm& o) const { return img_ < o.img_; }

  const std::vector<int>& images() const { return img_; }
  uint64_t hash() const;

  std::string print_cycles() const;
  std::string print_images() const;

private:
  std::vector<int> img_;
};

struct PermHash {
  size_t operator()(const Perm& p) const { return static_cast<size_t>(p.hash()); }
};

}  // namespace gf
