#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace gf {

/// Deterministic RNG for suite generation and property tests.
/// Wraps mt19937_64 but does bounded sampling by modulo so two builds with
/// different standard libraries emit byte-identical suites.
class Rng {
public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t next() { return eng_(); }

  int below(int n) { return static_cast<int>(next() % static_cast<uint64_t>(n)); }

  int range(int lo, int hi) { return lo + below(hi - lo + 1); }

  bool coin() { return (next() & 1) != 0; }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[below(static_cast<int>(v.size()))];
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(below(static_cast<int>(i)));
      std::swap(v[i - 1], v[j]);
    }
  }

private:
  std::mt19937_64 eng_;
};

}  // namespace gf
