#include "gf/bundle.hpp"

#include <algorithm>
#include <unordered_map>

#include "gf/util.hpp"

namespace gf {

GroupDesc GroupDesc::from_finite(FinPermGroup g) {
  GroupDesc d;
  d.finite = std::move(g);
  return d;
}

GroupDesc GroupDesc::from_lazy(FgGroupPtr g) {
  GroupDesc d;
  d.lazy = std::move(g);
  return d;
}

namespace {

/// Direct product of finitely many lazy groups; keys are netstring tuples.
class ProductFg : public FgGroup {
public:
  explicit ProductFg(std::vector<FgGroupPtr> factors) : factors_(std::move(factors)) {}

  std::string name() const override {
    std::string out = "product(";
    for (size_t i = 0; i < factors_.size(); ++i) {
      if (i) out += ",";
      out += factors_[i]->name();
    }
    return out + ")";
  }

  std::string identity() const override {
    std::vector<std::string> parts;
    for (const auto& f : factors_) parts.push_back(f->identity());
    return encode(parts);
  }

  std::vector<std::pair<std::string, std::string>> generators() const override {
    std::vector<std::pair<std::string, std::string>> out;
    for (size_t i = 0; i < factors_.size(); ++i)
      for (const auto& [label, key] : factors_[i]->generators()) {
        std::vector<std::string> parts;
        for (size_t j = 0; j < factors_.size(); ++j)
          parts.push_back(j == i ? key : factors_[j]->identity());
        out.emplace_back(std::to_string(i) + ":" + label, encode(parts));
      }
    return out;
  }

  std::string mul(const std::string& a, const std::string& b) const override {
    auto pa = decode(a), pb = decode(b);
    std::vector<std::string> parts;
    for (size_t i = 0; i < factors_.size(); ++i) parts.push_back(factors_[i]->mul(pa[i], pb[i]));
    return encode(parts);
  }

  std::string inv(const std::string& a) const override {
    auto pa = decode(a);
    std::vector<std::string> parts;
    for (size_t i = 0; i < factors_.size(); ++i) parts.push_back(factors_[i]->inv(pa[i]));
    return encode(parts);
  }

private:
  static std::string encode(const std::vector<std::string>& parts) {
    std::string out = "P";
    for (const auto& p : parts) out += std::to_string(p.size()) + ":" + p;
    return out;
  }
  std::vector<std::string> decode(const std::string& key) const {
    std::vector<std::string> parts;
    size_t pos = 1;
    while (pos < key.size()) {
      size_t colon = key.find(':', pos);
      if (colon == std::string::npos) fail("ParseError", "bad product element key");
      size_t len = std::stoul(key.substr(pos, colon - pos));
      parts.push_back(key.substr(colon + 1, len));
      pos = colon + 1 + len;
    }
    if (parts.size() != factors_.size()) fail("ParseError", "bad product element arity");
    return parts;
  }

  std::vector<FgGroupPtr> factors_;
};

FinPermGroup perm_group_product(const std::vector<const FinPermGroup*>& factors) {
  int degree = 0;
  for (const auto* f : factors) degree += f->degree;
  if (degree == 0) degree = 1;
  std::vector<Perm> gens;
  int offset = 0;
  for (const auto* f : factors) {
    for (const auto& g : f->gens) {
      std::vector<int> images(degree);
      for (int p = 0; p < degree; ++p) images[p] = p;
      for (int p = 0; p < f->degree; ++p) images[offset + p] = offset + g.apply(p);
      gens.push_back(Perm::from_images(std::move(images)));
    }
    offset += f->degree;
  }
  return FinPermGroup::from_gens(degree, std::move(gens));
}

FgGroupPtr as_lazy(const GroupDesc& d) {
  if (d.lazy) return d.lazy;
  return std::make_shared<PermGroupFg>(*d.finite);
}

}  // namespace

GroupBundle direct_sum_bundle(const std::vector<std::string>& index_set,
                              const std::vector<GroupBundle>& bundles, long cap) {
  (void)cap;
  for (const auto& b : bundles)
    if (b.index_set != index_set)
      fail("IndexMismatch", "all bundles must share the index set");
  GroupBundle out;
  out.index_set = index_set;
  for (size_t z = 0; z < index_set.size(); ++z) {
    bool all_finite = true;
    for (const auto& b : bundles)
      if (!b.fibers[z].is_finite()) all_finite = false;
    if (all_finite) {
      std::vector<const FinPermGroup*> factors;
      for (const auto& b : bundles) factors.push_back(&*b.fibers[z].finite);
      out.fibers.push_back(GroupDesc::from_finite(perm_group_product(factors)));
    } else {
      std::vector<FgGroupPtr> factors;
      for (const auto& b : bundles) factors.push_back(as_lazy(b.fibers[z]));
      out.fibers.push_back(GroupDesc::from_lazy(std::make_shared<ProductFg>(std::move(factors))));
    }
  }
  return out;
}

GroupDesc wreath_product(const GroupDesc& g, const GroupDesc& k, long cap) {
  if (g.is_finite() && k.is_finite()) {
    std::vector<Perm> k_elems = closure_enumerate(k.finite->degree, k.finite->gens, cap);
    if (k_elems.size() == 1) return g;  // g wr trivial is g itself
    std::vector<Perm> g_elems = closure_enumerate(g.finite->degree, g.finite->gens, cap);
    // order check |G|^|K| * |K| <= cap
    uint64_t order = k_elems.size();
    for (size_t i = 0; i < k_elems.size(); ++i) {
      if (order > static_cast<uint64_t>(cap) / g_elems.size())
        fail("CapExceeded", "wreath order exceeds cap");
      order *= g_elems.size();
    }
    if (order > static_cast<uint64_t>(cap)) fail("CapExceeded", "wreath order exceeds cap");

    // copies of {1..dG} indexed by the elements of k in closure order;
    // base generators live in the copy of the identity (index 0)
    int dg = g.finite->degree;
    int nk = static_cast<int>(k_elems.size());
    int degree = dg * nk;
    std::vector<Perm> gens;
    for (const auto& gen : g.finite->gens) {
      std::vector<int> images(degree);
      for (int p = 0; p < degree; ++p) images[p] = p;
      for (int p = 0; p < dg; ++p) images[p] = gen.apply(p);
      gens.push_back(Perm::from_images(std::move(images)));
    }
    // top generators permute copies by left translation on k's elements
    std::unordered_map<Perm, int, PermHash> kindex;
    for (int i = 0; i < nk; ++i) kindex.emplace(k_elems[i], i);
    for (const auto& gen : k.finite->gens) {
      std::vector<int> images(degree);
      for (int c = 0; c < nk; ++c) {
        int target_copy = kindex.at(gen * k_elems[c]);
        for (int p = 0; p < dg; ++p) images[c * dg + p] = target_copy * dg + p;
      }
      gens.push_back(Perm::from_images(std::move(images)));
    }
    return GroupDesc::from_finite(FinPermGroup::from_gens(degree, std::move(gens)));
  }
  return GroupDesc::from_lazy(std::make_shared<LazyWreath>(as_lazy(g), as_lazy(k)));
}

FinPermGroup neumann_truncation(const OddPrefix& u, size_t depth) {
  if (depth < 1 || depth > u.length()) fail("BlockOutOfRange", "truncation depth beyond prefix");
  uint64_t total = 0;
  for (size_t j = 0; j < depth; ++j) total += u.entries[j];
  if (total > 100000) fail("CapExceeded", "truncated point set too large");
  int degree = static_cast<int>(total);
  std::vector<std::vector<int>> alpha_cycles, beta_cycles;
  int offset = 0;
  for (size_t j = 0; j < depth; ++j) {
    int n = static_cast<int>(u.entries[j]);
    std::vector<int> full(n);
    for (int i = 0; i < n; ++i) full[i] = offset + i + 1;
    alpha_cycles.push_back(full);
    beta_cycles.push_back({offset + 1, offset + 2, offset + 3});
    offset += n;
  }
  return FinPermGroup::from_gens(
      degree, {Perm::from_cycles(degree, alpha_cycles), Perm::from_cycles(degree, beta_cycles)});
}

GroupDesc neumann_fiber(const OddPrefix& u, size_t depth) {
  GroupDesc d = GroupDesc::from_finite(neumann_truncation(u, depth));
  d.neumann_code = u;
  return d;
}

}  // namespace gf
