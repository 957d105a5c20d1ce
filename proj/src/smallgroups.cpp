#include "gf/smallgroups.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "gf/util.hpp"

namespace gf {

namespace {

GroupTable from_perms(int degree, const std::vector<std::string>& gens) {
  std::vector<Perm> ps;
  for (const auto& g : gens) ps.push_back(Perm::parse(degree, g));
  return GroupTable::from_perm_group(FinPermGroup::from_gens(degree, ps), 100000);
}

GroupTable quaternion8() {
  // elements (sign, axis): axis 0 = 1, 1 = i, 2 = j, 3 = k; index = axis*2 + (sign<0)
  auto idx = [](int axis, int sign) { return axis * 2 + (sign < 0 ? 1 : 0); };
  GroupTable t;
  t.names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  t.mul.assign(8, std::vector<int>(8));
  t.inv.resize(8);
  auto mul_axes = [](int a, int b, int& axis, int& sign) {
    // quaternion axis products with sign
    if (a == 0) { axis = b; sign = 1; return; }
    if (b == 0) { axis = a; sign = 1; return; }
    if (a == b) { axis = 0; sign = -1; return; }
    // i*j=k, j*k=i, k*i=j; reversed order flips sign
    static const int table[4][4] = {{0, 0, 0, 0}, {0, 0, 3, 2}, {0, 3, 0, 1}, {0, 2, 1, 0}};
    static const int signs[4][4] = {{1, 1, 1, 1}, {1, 1, 1, -1}, {1, -1, 1, 1}, {1, 1, -1, 1}};
    axis = table[a][b];
    sign = signs[a][b];
  };
  for (int aa = 0; aa < 4; ++aa)
    for (int as = 1; as >= -1; as -= 2)
      for (int ba = 0; ba < 4; ++ba)
        for (int bs = 1; bs >= -1; bs -= 2) {
          int axis, sign;
          mul_axes(aa, ba, axis, sign);
          t.mul[idx(aa, as)][idx(ba, bs)] = idx(axis, sign * as * bs);
        }
  for (int e = 0; e < 8; ++e)
    for (int f = 0; f < 8; ++f)
      if (t.mul[e][f] == 0) t.inv[e] = f;
  t.gens = {2, 4};  // i, j
  return t;
}

GroupTable dicyclic12() {
  // a^6 = e, b^2 = a^3, b a b^{-1} = a^{-1}; elements a^m b^t
  auto idx = [](int m, int tt) { return ((m % 6) + 6) % 6 * 2 + tt; };
  GroupTable t;
  t.names.resize(12);
  for (int m = 0; m < 6; ++m)
    for (int s = 0; s < 2; ++s)
      t.names[idx(m, s)] = (m == 0 && s == 0) ? "e" : "a" + std::to_string(m) + (s ? "b" : "");
  t.mul.assign(12, std::vector<int>(12));
  t.inv.resize(12);
  for (int i = 0; i < 6; ++i)
    for (int s = 0; s < 2; ++s)
      for (int j = 0; j < 6; ++j)
        for (int u = 0; u < 2; ++u) {
          int m = s == 0 ? i + j : i - j + (s + u == 2 ? 3 : 0);
          t.mul[idx(i, s)][idx(j, u)] = idx(m, (s + u) % 2);
        }
  for (int e = 0; e < 12; ++e)
    for (int f = 0; f < 12; ++f)
      if (t.mul[e][f] == 0) t.inv[e] = f;
  t.gens = {idx(1, 0), idx(0, 1)};
  return t;
}

}  // namespace

std::vector<SmallGroup> small_groups_of_order(int n) {
  auto cyc = [](int k) { return GroupTable::cyclic(k); };
  switch (n) {
    case 1: return {{"C1", GroupTable::trivial()}};
    case 2: return {{"C2", cyc(2)}};
    case 3: return {{"C3", cyc(3)}};
    case 4: return {{"C4", cyc(4)}, {"C2xC2", cyc(2).product(cyc(2))}};
    case 5: return {{"C5", cyc(5)}};
    case 6: return {{"C6", cyc(6)}, {"S3", from_perms(3, {"(1 2 3)", "(1 2)"})}};
    case 7: return {{"C7", cyc(7)}};
    case 8:
      return {{"C8", cyc(8)},
              {"C4xC2", cyc(4).product(cyc(2))},
              {"C2xC2xC2", cyc(2).product(cyc(2)).product(cyc(2))},
              {"D4", from_perms(4, {"(1 2 3 4)", "(1 3)"})},
              {"Q8", quaternion8()}};
    case 9: return {{"C9", cyc(9)}, {"C3xC3", cyc(3).product(cyc(3))}};
    case 10: return {{"C10", cyc(10)}, {"D5", from_perms(5, {"(1 2 3 4 5)", "(2 5)(3 4)"})}};
    case 11: return {{"C11", cyc(11)}};
    case 12:
      return {{"C12", cyc(12)},
              {"C6xC2", cyc(6).product(cyc(2))},
              {"D6", from_perms(6, {"(1 2 3 4 5 6)", "(2 6)(3 5)"})},
              {"A4", from_perms(4, {"(1 2 3)", "(2 3 4)"})},
              {"Dic3", dicyclic12()}};
    default:
      fail("CapExceeded", "small-group catalog covers orders 1..12, asked for " + std::to_string(n));
  }
}

namespace {

std::vector<int> close_subset(const GroupTable& g, std::vector<int> seed) {
  std::set<int> s(seed.begin(), seed.end());
  s.insert(0);
  std::deque<int> q(s.begin(), s.end());
  while (!q.empty()) {
    int a = q.front();
    q.pop_front();
    std::vector<int> cur(s.begin(), s.end());
    for (int b : cur) {
      for (int c : {g.mul[a][b], g.mul[b][a], g.inv[a]})
        if (s.insert(c).second) q.push_back(c);
    }
  }
  return std::vector<int>(s.begin(), s.end());
}

}  // namespace

std::vector<std::vector<int>> subgroup_class_reps(const GroupTable& g) {
  int n = g.order();
  std::set<std::vector<int>> all;
  all.insert({0});
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> current(all.begin(), all.end());
    for (const auto& sub : current)
      for (int e = 1; e < n; ++e) {
        if (std::binary_search(sub.begin(), sub.end(), e)) continue;
        std::vector<int> seed = sub;
        seed.push_back(e);
        if (all.insert(close_subset(g, std::move(seed))).second) grew = true;
      }
  }
  // conjugacy classes of subgroups; keep the least representative
  std::vector<std::vector<int>> reps;
  std::set<std::vector<int>> seen;
  for (const auto& sub : all) {
    if (seen.count(sub)) continue;
    std::vector<std::vector<int>> orbit;
    for (int k = 0; k < n; ++k) {
      std::vector<int> conj;
      for (int h : sub) conj.push_back(g.mul[g.mul[k][h]][g.inv[k]]);
      std::sort(conj.begin(), conj.end());
      orbit.push_back(std::move(conj));
    }
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    for (const auto& o : orbit) seen.insert(o);
    reps.push_back(orbit.front());
  }
  std::sort(reps.begin(), reps.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return reps;
}

GroupTable subgroup_table(const GroupTable& g, const std::vector<int>& elements) {
  std::map<int, int> index;
  for (size_t i = 0; i < elements.size(); ++i) index[elements[i]] = static_cast<int>(i);
  if (!index.count(0) || index.at(0) != 0)
    fail("IndexMismatch", "subgroup element set must start with the identity");
  int n = static_cast<int>(elements.size());
  GroupTable t;
  t.names.resize(n);
  t.mul.assign(n, std::vector<int>(n));
  t.inv.resize(n);
  for (int a = 0; a < n; ++a) {
    t.names[a] = g.names[elements[a]];
    auto it = index.find(g.inv[elements[a]]);
    if (it == index.end()) fail("IndexMismatch", "element set not closed under inverse");
    t.inv[a] = it->second;
    for (int b = 0; b < n; ++b) {
      auto jt = index.find(g.mul[elements[a]][elements[b]]);
      if (jt == index.end()) fail("IndexMismatch", "element set not closed under product");
      t.mul[a][b] = jt->second;
    }
  }
  t.gens = t.greedy_gens();
  return t;
}

CosetAction coset_action(const GroupTable& g, const std::vector<int>& subgroup) {
  int n = g.order();
  std::vector<int> coset_of(n, -1);
  CosetAction ca;
  for (int e = 0; e < n; ++e) {
    if (coset_of[e] >= 0) continue;
    std::vector<int> coset;
    for (int h : subgroup) coset.push_back(g.mul[e][h]);
    std::sort(coset.begin(), coset.end());
    int id = static_cast<int>(ca.cosets.size());
    for (int x : coset) coset_of[x] = id;
    ca.cosets.push_back(std::move(coset));
  }
  ca.act.assign(n, std::vector<int>(ca.cosets.size()));
  for (int k = 0; k < n; ++k)
    for (size_t c = 0; c < ca.cosets.size(); ++c)
      ca.act[k][c] = coset_of[g.mul[k][ca.cosets[c].front()]];
  return ca;
}

}  // namespace gf
