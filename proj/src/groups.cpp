#include "gf/groups.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "gf/util.hpp"

namespace gf {

FinPermGroup FinPermGroup::from_gens(int degree, std::vector<Perm> gens) {
  for (const auto& g : gens)
    if (g.degree() != degree) fail("ParseError", "generator degree mismatch");
  FinPermGroup out;
  out.degree = degree;
  out.gens = std::move(gens);
  return out;
}

FinPermGroup FinPermGroup::with_elements(long cap) const {
  FinPermGroup out = *this;
  out.elements = closure_enumerate(degree, gens, cap);
  return out;
}

std::string FinPermGroup::print() const {
  std::string out = "degree " + std::to_string(degree) + "\n";
  for (const auto& g : gens) out += g.print_cycles() + "\n";
  return out;
}

FinPermGroup FinPermGroup::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) fail("ParseError", "empty group file");
  std::istringstream head(line);
  std::string kw;
  int degree = 0;
  head >> kw >> degree;
  if (kw != "degree" || degree < 1) fail("ParseError", "group file must start with 'degree n'");
  std::vector<Perm> gens;
  while (std::getline(in, line)) {
    std::string trimmed = line;
    trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
    if (trimmed.empty()) continue;
    gens.push_back(Perm::parse(degree, trimmed));
  }
  return from_gens(degree, std::move(gens));
}

std::vector<Perm> closure_enumerate(int degree, const std::vector<Perm>& gens, long cap) {
  if (cap < 1) fail("CapExceeded", "closure cap must be >= 1");
  std::vector<Perm> elems;
  std::unordered_map<Perm, int, PermHash> index;
  Perm id(degree);
  elems.push_back(id);
  index.emplace(id, 0);
  std::deque<int> frontier{0};
  while (!frontier.empty()) {
    int cur = frontier.front();
    frontier.pop_front();
    for (const auto& g : gens) {
      Perm nxt = g * elems[cur];
      if (index.count(nxt)) continue;
      if (static_cast<long>(elems.size()) + 1 > cap)
        fail("CapExceeded", "closure exceeds cap " + std::to_string(cap));
      index.emplace(nxt, static_cast<int>(elems.size()));
      elems.push_back(std::move(nxt));
      frontier.push_back(static_cast<int>(elems.size()) - 1);
    }
  }
  return elems;
}

std::optional<int> is_alternating(const FinPermGroup& g, long cap) {
  int n = g.degree;
  if (n < 2) return std::nullopt;
  std::vector<Perm> elems = g.elements.empty() ? closure_enumerate(n, g.gens, cap) : g.elements;
  // n!/2, saturating well past any enumerable closure
  uint64_t target = 1;
  bool overflow = false;
  for (uint64_t k = 2; k <= static_cast<uint64_t>(n); ++k) {
    if (target > UINT64_MAX / k) { overflow = true; break; }
    target *= k;
  }
  if (overflow || elems.size() != target / 2) return std::nullopt;
  for (const auto& e : elems)
    if (!e.even()) return std::nullopt;
  // transitivity of the orbit of point 0
  std::vector<char> reached(n, 0);
  reached[0] = 1;
  std::deque<int> q{0};
  int count = 1;
  while (!q.empty()) {
    int p = q.front();
    q.pop_front();
    for (const auto& gen : g.gens) {
      int im = gen.apply(p);
      if (!reached[im]) {
        reached[im] = 1;
        ++count;
        q.push_back(im);
      }
    }
  }
  if (count != n) return std::nullopt;
  return n;
}

bool is_normal(const std::vector<Perm>& subgroup, const FinPermGroup& g) {
  std::unordered_set<Perm, PermHash> hset(subgroup.begin(), subgroup.end());
  for (const auto& gen : g.gens) {
    Perm geninv = gen.inverse();
    for (const auto& h : subgroup)
      if (!hset.count(gen * h * geninv)) return false;
  }
  return true;
}

bool GroupTable::is_abelian() const {
  int n = order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (mul[a][b] != mul[b][a]) return false;
  return true;
}

int GroupTable::center_size() const {
  int n = order(), c = 0;
  for (int a = 0; a < n; ++a) {
    bool central = true;
    for (int b = 0; b < n && central; ++b) central = mul[a][b] == mul[b][a];
    if (central) ++c;
  }
  return c;
}

std::vector<uint64_t> GroupTable::element_orders() const {
  int n = order();
  std::vector<uint64_t> out(n);
  for (int a = 0; a < n; ++a) {
    uint64_t ord = 1;
    int cur = a;
    while (cur != 0) {
      cur = mul[cur][a];
      ++ord;
    }
    out[a] = ord;
  }
  return out;
}

std::map<uint64_t, int> GroupTable::order_histogram() const {
  std::map<uint64_t, int> h;
  for (uint64_t o : element_orders()) ++h[o];
  return h;
}

GroupTable GroupTable::trivial() {
  GroupTable t;
  t.names = {"e"};
  t.mul = {{0}};
  t.inv = {0};
  return t;
}

GroupTable GroupTable::cyclic(int n) {
  GroupTable t;
  t.names.resize(n);
  t.mul.assign(n, std::vector<int>(n));
  t.inv.resize(n);
  for (int a = 0; a < n; ++a) {
    t.names[a] = a == 0 ? "e" : "g" + std::to_string(a);
    t.inv[a] = (n - a) % n;
    for (int b = 0; b < n; ++b) t.mul[a][b] = (a + b) % n;
  }
  if (n > 1) t.gens = {1};
  return t;
}

GroupTable GroupTable::from_perm_group(const FinPermGroup& g, long cap) {
  std::vector<Perm> elems = g.elements.empty() ? closure_enumerate(g.degree, g.gens, cap) : g.elements;
  if (static_cast<long>(elems.size()) > cap)
    fail("CapExceeded", "group too large for a multiplication table");
  std::unordered_map<Perm, int, PermHash> index;
  for (size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], static_cast<int>(i));
  int n = static_cast<int>(elems.size());
  GroupTable t;
  t.names.resize(n);
  t.mul.assign(n, std::vector<int>(n));
  t.inv.resize(n);
  for (int a = 0; a < n; ++a) {
    t.names[a] = elems[a].print_cycles();
    t.inv[a] = index.at(elems[a].inverse());
    for (int b = 0; b < n; ++b) t.mul[a][b] = index.at(elems[a] * elems[b]);
  }
  for (const auto& gen : g.gens) {
    int idx = index.at(gen);
    if (idx != 0 && std::find(t.gens.begin(), t.gens.end(), idx) == t.gens.end())
      t.gens.push_back(idx);
  }
  return t;
}

GroupTable GroupTable::product(const GroupTable& rhs) const {
  int n1 = order(), n2 = rhs.order(), n = n1 * n2;
  GroupTable t;
  t.names.resize(n);
  t.mul.assign(n, std::vector<int>(n));
  t.inv.resize(n);
  for (int a1 = 0; a1 < n1; ++a1)
    for (int a2 = 0; a2 < n2; ++a2) {
      int a = a1 * n2 + a2;
      t.names[a] = "(" + names[a1] + "|" + rhs.names[a2] + ")";
      t.inv[a] = inv[a1] * n2 + rhs.inv[a2];
      for (int b1 = 0; b1 < n1; ++b1)
        for (int b2 = 0; b2 < n2; ++b2)
          t.mul[a][b1 * n2 + b2] = mul[a1][b1] * n2 + rhs.mul[a2][b2];
    }
  for (int g1 : gens) t.gens.push_back(g1 * n2);
  for (int g2 : rhs.gens) t.gens.push_back(g2);
  return t;
}

FinPermGroup GroupTable::regular_rep() const {
  int n = order();
  std::vector<int> use_gens = gens.empty() ? greedy_gens() : gens;
  std::vector<Perm> perms;
  for (int g : use_gens) {
    std::vector<int> images(n);
    for (int x = 0; x < n; ++x) images[x] = mul[g][x];
    perms.push_back(Perm::from_images(std::move(images)));
  }
  return FinPermGroup::from_gens(n, std::move(perms));
}

std::vector<int> GroupTable::greedy_gens() const {
  int n = order();
  std::vector<int> chosen;
  std::vector<char> in_sub(n, 0);
  in_sub[0] = 1;
  int sub_size = 1;
  auto close = [&]() {
    std::deque<int> q;
    for (int x = 0; x < n; ++x)
      if (in_sub[x]) q.push_back(x);
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      for (int g : chosen) {
        int y = mul[g][x];
        if (!in_sub[y]) {
          in_sub[y] = 1;
          ++sub_size;
          q.push_back(y);
        }
      }
    }
  };
  for (int e = 1; e < n && sub_size < n; ++e) {
    if (in_sub[e]) continue;
    chosen.push_back(e);
    close();
  }
  return chosen;
}

namespace {

// extends gen-images to a partial element map; empty on conflict
bool extend_map(const GroupTable& a, const GroupTable& b, const std::vector<int>& gens,
                const std::vector<int>& images, int upto, std::vector<int>& out_map) {
  int n = a.order();
  out_map.assign(n, -1);
  std::vector<int> owner(b.order(), -1);
  out_map[0] = 0;
  owner[0] = 0;
  std::deque<int> q{0};
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    for (int j = 0; j <= upto; ++j) {
      int y = a.mul[gens[j]][x];
      int fy = b.mul[images[j]][out_map[x]];
      if (out_map[y] == -1) {
        if (owner[fy] != -1) return false;  // injectivity broken
        out_map[y] = fy;
        owner[fy] = y;
        q.push_back(y);
      } else if (out_map[y] != fy) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

std::vector<std::vector<int>> table_isomorphisms(const GroupTable& a, const GroupTable& b,
                                                 bool first_only) {
  std::vector<std::vector<int>> found;
  if (a.order() != b.order()) return found;
  if (a.is_abelian() != b.is_abelian()) return found;
  if (a.center_size() != b.center_size()) return found;
  if (a.order_histogram() != b.order_histogram()) return found;

  std::vector<int> gens = a.greedy_gens();
  if (gens.empty()) {  // trivial group
    found.push_back({0});
    return found;
  }
  std::vector<uint64_t> ord_a = a.element_orders(), ord_b = b.element_orders();
  int n = b.order();
  std::vector<int> images(gens.size(), -1);

  std::vector<int> map;
  auto verify_full = [&](const std::vector<int>& m) {
    for (int x = 0; x < a.order(); ++x)
      for (int y = 0; y < a.order(); ++y)
        if (m[a.mul[x][y]] != b.mul[m[x]][m[y]]) return false;
    return true;
  };

  // depth-first over generator images, element orders must match
  std::vector<int> stack_pos(gens.size(), 0);
  int k = 0;
  while (k >= 0) {
    bool advanced = false;
    for (int cand = stack_pos[k]; cand < n; ++cand) {
      if (ord_b[cand] != ord_a[gens[k]]) continue;
      images[k] = cand;
      if (!extend_map(a, b, gens, images, k, map)) continue;
      stack_pos[k] = cand + 1;
      advanced = true;
      break;
    }
    if (!advanced) {
      stack_pos[k] = 0;
      --k;
      continue;
    }
    if (k + 1 == static_cast<int>(gens.size())) {
      bool total = std::find(map.begin(), map.end(), -1) == map.end();
      if (total && verify_full(map)) {
        found.push_back(map);
        if (first_only) return found;
      }
      // stay at this level, try the next candidate
    } else {
      ++k;
    }
  }
  return found;
}

std::vector<std::vector<int>> automorphisms(const GroupTable& g) {
  return table_isomorphisms(g, g, false);
}

std::optional<GroupIso> group_isomorphic(const FinPermGroup& g, const FinPermGroup& h, long cap) {
  std::vector<Perm> ge = g.elements.empty() ? closure_enumerate(g.degree, g.gens, cap) : g.elements;
  std::vector<Perm> he = h.elements.empty() ? closure_enumerate(h.degree, h.gens, cap) : h.elements;
  if (ge.size() != he.size()) return std::nullopt;
  FinPermGroup gc = g;
  gc.elements = ge;
  FinPermGroup hc = h;
  hc.elements = he;
  GroupTable ta = GroupTable::from_perm_group(gc, cap);
  GroupTable tb = GroupTable::from_perm_group(hc, cap);
  auto m = table_isomorphic(ta, tb);
  if (!m) return std::nullopt;
  std::unordered_map<Perm, int, PermHash> gindex;
  for (size_t i = 0; i < ge.size(); ++i) gindex.emplace(ge[i], static_cast<int>(i));
  GroupIso iso;
  iso.element_map = *m;
  for (const auto& gen : g.gens) iso.gen_images.push_back(he[(*m)[gindex.at(gen)]]);
  return iso;
}

}  // namespace gf
