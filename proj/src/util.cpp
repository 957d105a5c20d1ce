#include "gf/util.hpp"

#include <numeric>
#include <vector>

namespace gf {

uint64_t fnv1a64(const void* data, size_t n) {
  const auto* p = static_cast<const unsigned char*>(data);
  uint64_t h = 0xcbf29ce484222325ULL;
  for (size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

uint64_t fnv1a64(const std::string& s) { return fnv1a64(s.data(), s.size()); }

std::string hex64(uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

uint64_t lcm_checked(uint64_t a, uint64_t b) {
  if (a == 0 || b == 0) fail("CapExceeded", "lcm of zero");
  uint64_t g = std::gcd(a, b);
  uint64_t q = a / g;
  if (q > UINT64_MAX / b) fail("CapExceeded", "lcm overflows 64 bits");
  return q * b;
}

std::string half_factorial_string(uint64_t n) {
  // little-endian base-10^9 bignum, multiplied up from 1
  std::vector<uint64_t> d{1};
  const uint64_t base = 1000000000ULL;
  for (uint64_t k = 2; k <= n; ++k) {
    uint64_t carry = 0;
    for (auto& limb : d) {
      uint64_t v = limb * k + carry;
      limb = v % base;
      carry = v / base;
    }
    while (carry) {
      d.push_back(carry % base);
      carry /= base;
    }
  }
  // divide by 2 (n >= 2 makes n! even)
  uint64_t rem = 0;
  for (size_t i = d.size(); i-- > 0;) {
    uint64_t cur = rem * base + d[i];
    d[i] = cur / 2;
    rem = cur % 2;
  }
  std::string out = std::to_string(d.back());
  for (size_t i = d.size() - 1; i-- > 0;) {
    std::string part = std::to_string(d[i]);
    out += std::string(9 - part.size(), '0') + part;
  }
  return out;
}

}  // namespace gf
