#include "gf/groupoid.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "gf/certificate.hpp"
#include "gf/util.hpp"

namespace gf {

namespace {

std::vector<int> uf_parent_init(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

int uf_find(std::vector<int>& p, int x) {
  while (p[x] != x) {
    p[x] = p[p[x]];
    x = p[x];
  }
  return x;
}

void uf_union(std::vector<int>& p, int a, int b) {
  a = uf_find(p, a);
  b = uf_find(p, b);
  if (a != b) p[std::max(a, b)] = std::min(a, b);
}

}  // namespace

EquivRelation EquivRelation::from_classes(std::vector<std::string> units,
                                          const std::vector<std::vector<int>>& classes) {
  EquivRelation r;
  r.units = std::move(units);
  for (const auto& cls : classes)
    for (int y : cls)
      for (int x : cls) r.pairs.emplace_back(y, x);
  std::sort(r.pairs.begin(), r.pairs.end());
  r.pairs.erase(std::unique(r.pairs.begin(), r.pairs.end()), r.pairs.end());
  // every unit must be covered
  std::vector<char> seen(r.units.size(), 0);
  for (const auto& [y, x] : r.pairs) {
    (void)x;
    seen[y] = 1;
  }
  for (size_t i = 0; i < seen.size(); ++i)
    if (!seen[i]) fail("IndexMismatch", "unit " + r.units[i] + " not covered by any class");
  return r;
}

EquivRelation EquivRelation::full(std::vector<std::string> units) {
  std::vector<int> all(units.size());
  for (size_t i = 0; i < units.size(); ++i) all[i] = static_cast<int>(i);
  return from_classes(std::move(units), {all});
}

EquivRelation EquivRelation::diagonal(std::vector<std::string> units) {
  std::vector<std::vector<int>> classes;
  for (size_t i = 0; i < units.size(); ++i) classes.push_back({static_cast<int>(i)});
  return from_classes(std::move(units), classes);
}

bool EquivRelation::contains(int y, int x) const {
  return std::binary_search(pairs.begin(), pairs.end(), std::make_pair(y, x));
}

std::vector<std::vector<int>> EquivRelation::classes() const {
  auto parent = uf_parent_init(static_cast<int>(units.size()));
  for (const auto& [y, x] : pairs) uf_union(parent, y, x);
  std::map<int, std::vector<int>> by_root;
  for (int i = 0; i < static_cast<int>(units.size()); ++i) by_root[uf_find(parent, i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& [root, cls] : by_root) {
    (void)root;
    out.push_back(std::move(cls));
  }
  return out;
}

std::vector<std::string> EquivRelation::validate() const {
  std::vector<std::string> out;
  int n = static_cast<int>(units.size());
  for (const auto& [y, x] : pairs)
    if (y < 0 || y >= n || x < 0 || x >= n) {
      out.push_back("pair index out of range");
      return out;
    }
  for (int i = 0; i < n; ++i)
    if (!contains(i, i)) out.push_back("not reflexive at unit " + units[i]);
  for (const auto& [y, x] : pairs)
    if (!contains(x, y)) out.push_back("not symmetric at (" + units[y] + "," + units[x] + ")");
  for (const auto& [z, y] : pairs)
    for (const auto& [y2, x] : pairs)
      if (y2 == y && !contains(z, x))
        out.push_back("not transitive via (" + units[z] + "," + units[y] + "," + units[x] + ")");
  return out;
}

std::string EquivRelation::print() const {
  ojson d;
  d["units"] = units;
  ojson ps = ojson::array();
  for (const auto& [y, x] : pairs) ps.push_back(ojson::array({units[y], units[x]}));
  d["pairs"] = ps;
  return d.dump(2) + "\n";
}

EquivRelation EquivRelation::parse(const std::string& text) {
  ojson d = ojson::parse(text);
  EquivRelation r;
  r.units = d.at("units").get<std::vector<std::string>>();
  std::map<std::string, int> index;
  for (size_t i = 0; i < r.units.size(); ++i) index[r.units[i]] = static_cast<int>(i);
  for (const auto& p : d.at("pairs"))
    r.pairs.emplace_back(index.at(p.at(0).get<std::string>()),
                         index.at(p.at(1).get<std::string>()));
  std::sort(r.pairs.begin(), r.pairs.end());
  auto bad = r.validate();
  if (!bad.empty()) fail("ParseError", "relation file invalid: " + bad.front());
  return r;
}

std::optional<int> FiniteGroupoid::compose(int g, int h) const {
  auto it = comp.find(comp_key(g, h));
  if (it == comp.end()) return std::nullopt;
  return it->second;
}

int FiniteGroupoid::compose_req(int g, int h) const {
  auto r = compose(g, h);
  if (!r)
    fail("IndexMismatch",
         "composition undefined for arrows " + std::to_string(g) + "," + std::to_string(h));
  return *r;
}

std::string FiniteGroupoid::print() const {
  ojson d;
  d["units"] = units;
  ojson arr = ojson::array();
  for (int i = 0; i < arrow_count(); ++i) {
    ojson a;
    a["id"] = i;
    a["src"] = units[arrows[i].src];
    a["tgt"] = units[arrows[i].tgt];
    arr.push_back(a);
  }
  d["arrows"] = arr;
  ojson ua = ojson::object();
  for (int u = 0; u < unit_count(); ++u) ua[units[u]] = unit_arrow[u];
  d["unit_arrow"] = ua;
  ojson inv = ojson::object();
  for (int i = 0; i < arrow_count(); ++i) inv[std::to_string(i)] = inverse[i];
  d["inverse"] = inv;
  ojson comps = ojson::array();
  for (int g = 0; g < arrow_count(); ++g)
    for (int h = 0; h < arrow_count(); ++h) {
      auto r = compose(g, h);
      if (r) comps.push_back(ojson::array({g, h, *r}));
    }
  d["compose"] = comps;
  return d.dump(2) + "\n";
}

FiniteGroupoid FiniteGroupoid::parse(const std::string& text) {
  ojson d = ojson::parse(text);
  FiniteGroupoid g;
  g.units = d.at("units").get<std::vector<std::string>>();
  std::map<std::string, int> uindex;
  for (size_t i = 0; i < g.units.size(); ++i) {
    if (uindex.count(g.units[i])) fail("ParseError", "duplicate unit name " + g.units[i]);
    uindex[g.units[i]] = static_cast<int>(i);
  }
  const auto& arr = d.at("arrows");
  g.arrows.resize(arr.size());
  std::vector<char> seen(arr.size(), 0);
  for (const auto& a : arr) {
    int id = a.at("id").get<int>();
    if (id < 0 || id >= static_cast<int>(arr.size()) || seen[id])
      fail("ParseError", "arrow ids must be dense and unique");
    seen[id] = 1;
    g.arrows[id].src = uindex.at(a.at("src").get<std::string>());
    g.arrows[id].tgt = uindex.at(a.at("tgt").get<std::string>());
  }
  g.unit_arrow.assign(g.units.size(), -1);
  for (auto it = d.at("unit_arrow").begin(); it != d.at("unit_arrow").end(); ++it)
    g.unit_arrow[uindex.at(it.key())] = it.value().get<int>();
  for (size_t i = 0; i < g.unit_arrow.size(); ++i)
    if (g.unit_arrow[i] < 0) fail("ParseError", "missing unit arrow for " + g.units[i]);
  g.inverse.assign(g.arrows.size(), -1);
  for (auto it = d.at("inverse").begin(); it != d.at("inverse").end(); ++it)
    g.inverse[std::stoi(it.key())] = it.value().get<int>();
  for (size_t i = 0; i < g.inverse.size(); ++i)
    if (g.inverse[i] < 0) fail("ParseError", "missing inverse for arrow " + std::to_string(i));
  for (const auto& t : d.at("compose")) {
    int a = t.at(0).get<int>(), b = t.at(1).get<int>(), c = t.at(2).get<int>();
    int na = g.arrow_count();
    if (a < 0 || a >= na || b < 0 || b >= na || c < 0 || c >= na)
      fail("ParseError", "compose triple references an unknown arrow id");
    g.set_compose(a, b, c);
  }
  return g;
}

std::vector<Violation> validate(const FiniteGroupoid& g) {
  std::vector<Violation> out;
  int na = g.arrow_count(), nu = g.unit_count();
  auto add = [&](const std::string& law, std::vector<int> witness, const std::string& detail) {
    out.push_back({law, std::move(witness), detail});
  };

  // structure
  for (int i = 0; i < na; ++i) {
    const auto& a = g.arrows[i];
    if (a.src < 0 || a.src >= nu || a.tgt < 0 || a.tgt >= nu)
      add("structure", {i}, "arrow endpoint out of range");
  }
  if (static_cast<int>(g.unit_arrow.size()) != nu) {
    add("structure", {}, "unit_arrow table has wrong size");
    return out;
  }
  if (static_cast<int>(g.inverse.size()) != na) {
    add("structure", {}, "inverse table has wrong size");
    return out;
  }
  for (int u = 0; u < nu; ++u) {
    int e = g.unit_arrow[u];
    if (e < 0 || e >= na || g.arrows[e].src != u || g.arrows[e].tgt != u)
      add("structure", {e}, "unit arrow of " + g.units[u] + " is not an endo-arrow at it");
  }
  for (int i = 0; i < na; ++i) {
    int j = g.inverse[i];
    if (j < 0 || j >= na) {
      add("structure", {i}, "inverse out of range");
      continue;
    }
    if (g.arrows[j].src != g.arrows[i].tgt || g.arrows[j].tgt != g.arrows[i].src)
      add("inverse-typing", {i, j}, "inverse endpoints are not swapped");
  }
  for (const auto& [key, val] : g.comp) {
    int a = static_cast<int>(key >> 32), b = static_cast<int>(key & 0xffffffff);
    if (a < 0 || a >= na || b < 0 || b >= na || val < 0 || val >= na)
      add("structure", {a, b, val}, "composition entry references an unknown arrow");
  }
  if (!out.empty()) return out;  // law checks below assume sane structure

  // composition: defined iff composable, with correct typing
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < na; ++b) {
      bool composable = g.arrows[a].src == g.arrows[b].tgt;
      auto r = g.compose(a, b);
      if (composable && !r) {
        add("composition-totality", {a, b}, "composable pair missing from table");
      } else if (!composable && r) {
        add("composition-typing", {a, b}, "composition defined for non-composable pair");
      } else if (r) {
        if (*r < 0 || *r >= na) {
          add("composition-typing", {a, b}, "composite id out of range");
        } else if (g.arrows[*r].src != g.arrows[b].src || g.arrows[*r].tgt != g.arrows[a].tgt) {
          add("composition-typing", {a, b, *r}, "composite endpoints wrong");
        }
      }
    }
  if (!out.empty()) return out;

  // associativity on all composable triples
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < na; ++b) {
      if (g.arrows[a].src != g.arrows[b].tgt) continue;
      int ab = g.compose_req(a, b);
      for (int c = 0; c < na; ++c) {
        if (g.arrows[b].src != g.arrows[c].tgt) continue;
        int bc = g.compose_req(b, c);
        if (g.compose_req(ab, c) != g.compose_req(a, bc)) {
          add("associativity", {a, b, c}, "(a.b).c != a.(b.c)");
          if (out.size() > 16) return out;
        }
      }
    }

  // unit laws
  for (int a = 0; a < na; ++a) {
    int el = g.unit_arrow[g.arrows[a].tgt];
    int er = g.unit_arrow[g.arrows[a].src];
    if (g.compose_req(el, a) != a) add("unit-law", {el, a}, "left unit law fails");
    if (g.compose_req(a, er) != a) add("unit-law", {a, er}, "right unit law fails");
  }

  // inverse laws
  for (int a = 0; a < na; ++a) {
    int ia = g.inverse[a];
    if (g.compose_req(ia, a) != g.unit_arrow[g.arrows[a].src])
      add("inverse-law", {ia, a}, "g^{-1} g is not the source unit");
    if (g.compose_req(a, ia) != g.unit_arrow[g.arrows[a].tgt])
      add("inverse-law", {a, ia}, "g g^{-1} is not the target unit");
  }
  return out;
}

IsotropyBundle isotropy(const FiniteGroupoid& g) {
  IsotropyBundle b;
  b.fibers.resize(g.unit_count());
  for (int i = 0; i < g.arrow_count(); ++i)
    if (g.arrows[i].src == g.arrows[i].tgt) b.fibers[g.arrows[i].src].push_back(i);
  return b;
}

GroupTable isotropy_table(const FiniteGroupoid& g, int unit) {
  std::vector<int> fiber;
  for (int i = 0; i < g.arrow_count(); ++i)
    if (g.arrows[i].src == unit && g.arrows[i].tgt == unit) fiber.push_back(i);
  // element 0 must be the unit arrow
  int e = g.unit_arrow[unit];
  auto it = std::find(fiber.begin(), fiber.end(), e);
  if (it == fiber.end()) fail("IndexMismatch", "unit arrow missing from its own fiber");
  std::rotate(fiber.begin(), it, it + 1);
  std::sort(fiber.begin() + 1, fiber.end());
  std::map<int, int> index;
  for (size_t i = 0; i < fiber.size(); ++i) index[fiber[i]] = static_cast<int>(i);
  int n = static_cast<int>(fiber.size());
  GroupTable t;
  t.names.resize(n);
  t.mul.assign(n, std::vector<int>(n));
  t.inv.resize(n);
  for (int a = 0; a < n; ++a) {
    t.names[a] = "a" + std::to_string(fiber[a]);
    t.inv[a] = index.at(g.inverse[fiber[a]]);
    for (int b = 0; b < n; ++b) t.mul[a][b] = index.at(g.compose_req(fiber[a], fiber[b]));
  }
  return t;
}

EquivRelation orbit_relation(const FiniteGroupoid& g) {
  auto parent = uf_parent_init(g.unit_count());
  for (const auto& a : g.arrows) uf_union(parent, a.tgt, a.src);
  std::map<int, std::vector<int>> by_root;
  for (int i = 0; i < g.unit_count(); ++i) by_root[uf_find(parent, i)].push_back(i);
  std::vector<std::vector<int>> classes;
  for (auto& [root, cls] : by_root) {
    (void)root;
    classes.push_back(std::move(cls));
  }
  EquivRelation r = EquivRelation::from_classes(g.units, classes);
  auto bad = r.validate();
  if (!bad.empty()) fail("IndexMismatch", "orbit relation failed validation: " + bad.front());
  return r;
}

std::vector<FiniteGroupoid> components(const FiniteGroupoid& g) {
  std::vector<FiniteGroupoid> out;
  for (const auto& cls : orbit_relation(g).classes()) out.push_back(restrict_to(g, cls));
  return out;
}

bool is_ergodic(const FiniteGroupoid& g) { return orbit_relation(g).classes().size() == 1; }

IccResult icc_check(const FiniteGroupoid& g) {
  IccResult r;
  for (int i = 0; i < g.arrow_count(); ++i) {
    const auto& a = g.arrows[i];
    if (a.src == a.tgt && i != g.unit_arrow[a.src]) {
      r.icc = false;
      r.witness = i;
      return r;
    }
  }
  r.icc = true;
  return r;
}

bool is_global_bisection(const FiniteGroupoid& g, const Bisection& b) {
  std::vector<char> src_hit(g.unit_count(), 0), tgt_hit(g.unit_count(), 0);
  for (int id : b) {
    if (id < 0 || id >= g.arrow_count()) return false;
    if (src_hit[g.arrows[id].src] || tgt_hit[g.arrows[id].tgt]) return false;
    src_hit[g.arrows[id].src] = 1;
    tgt_hit[g.arrows[id].tgt] = 1;
  }
  return static_cast<int>(b.size()) == g.unit_count();
}

namespace {

// augmenting path from one source unit; by_src lists arrow ids ascending,
// so ties always resolve toward the least arrow id
bool augment(const FiniteGroupoid& g, const std::vector<std::vector<int>>& by_src, int src,
             std::vector<int>& match_tgt, std::vector<char>& visited) {
  for (int arrow : by_src[src]) {
    int t = g.arrows[arrow].tgt;
    if (visited[t]) continue;
    visited[t] = 1;
    if (match_tgt[t] == -1 ||
        augment(g, by_src, g.arrows[match_tgt[t]].src, match_tgt, visited)) {
      match_tgt[t] = arrow;
      return true;
    }
  }
  return false;
}

// one perfect matching on the remaining arrows; returns matched arrow ids
std::vector<int> perfect_matching(const FiniteGroupoid& g, const std::vector<char>& used) {
  int nu = g.unit_count();
  std::vector<std::vector<int>> by_src(nu);
  for (int i = 0; i < g.arrow_count(); ++i)
    if (!used[i]) by_src[g.arrows[i].src].push_back(i);  // ids ascending by construction

  std::vector<int> match_tgt(nu, -1);  // target unit -> arrow id
  for (int s = 0; s < nu; ++s) {
    std::vector<char> visited(nu, 0);
    if (!augment(g, by_src, s, match_tgt, visited)) return {};
  }
  std::vector<int> out;
  for (int t = 0; t < nu; ++t) out.push_back(match_tgt[t]);
  return out;
}

}  // namespace

std::vector<Bisection> global_bisection_basis(const FiniteGroupoid& g) {
  if (!is_ergodic(g))
    fail("NotTransitive", "a basis of global bisections needs a single orbit");
  if (g.arrow_count() % g.unit_count() != 0)
    fail("IndexMismatch", "arrow count not divisible by unit count");
  std::vector<char> used(g.arrow_count(), 0);
  std::vector<Bisection> parts;
  int rounds = g.arrow_count() / g.unit_count();
  for (int r = 0; r < rounds; ++r) {
    std::vector<int> match = perfect_matching(g, used);
    if (match.empty())
      fail("IndexMismatch", "no perfect matching in a regular layer (internal error)");
    Bisection part;
    for (int a : match) {
      used[a] = 1;
      part.push_back(a);
    }
    std::sort(part.begin(), part.end());
    parts.push_back(std::move(part));
  }
  for (size_t i = 0; i < used.size(); ++i)
    if (!used[i]) fail("IndexMismatch", "arrows left over after decomposition (internal error)");
  return parts;
}

FiniteGroupoid restrict_to(const FiniteGroupoid& g, const std::vector<int>& unit_subset) {
  FiniteGroupoid out;
  std::vector<int> unit_map(g.unit_count(), -1);
  for (int u : unit_subset) {
    unit_map[u] = static_cast<int>(out.units.size());
    out.units.push_back(g.units[u]);
  }
  std::vector<int> arrow_map(g.arrow_count(), -1);
  for (int i = 0; i < g.arrow_count(); ++i) {
    const auto& a = g.arrows[i];
    if (unit_map[a.src] >= 0 && unit_map[a.tgt] >= 0) {
      arrow_map[i] = static_cast<int>(out.arrows.size());
      out.arrows.push_back({unit_map[a.src], unit_map[a.tgt]});
    }
  }
  out.unit_arrow.assign(out.units.size(), -1);
  for (int u : unit_subset) out.unit_arrow[unit_map[u]] = arrow_map[g.unit_arrow[u]];
  out.inverse.assign(out.arrows.size(), -1);
  for (int i = 0; i < g.arrow_count(); ++i)
    if (arrow_map[i] >= 0) out.inverse[arrow_map[i]] = arrow_map[g.inverse[i]];
  for (const auto& [key, val] : g.comp) {
    int a = static_cast<int>(key >> 32), b = static_cast<int>(key & 0xffffffff);
    if (arrow_map[a] >= 0 && arrow_map[b] >= 0)
      out.set_compose(arrow_map[a], arrow_map[b], arrow_map[val]);
  }
  return out;
}

FiniteGroupoid disjoint_union(const std::vector<FiniteGroupoid>& parts) {
  FiniteGroupoid out;
  // keep original names when globally unique, else prefix with the part index
  std::map<std::string, int> name_count;
  for (const auto& p : parts)
    for (const auto& u : p.units) ++name_count[u];
  bool unique = true;
  for (const auto& [name, cnt] : name_count) {
    (void)name;
    if (cnt > 1) unique = false;
  }
  int arrow_base = 0, unit_base = 0, pi = 0;
  for (const auto& p : parts) {
    for (const auto& u : p.units)
      out.units.push_back(unique ? u : "c" + std::to_string(pi) + "." + u);
    for (const auto& a : p.arrows) out.arrows.push_back({a.src + unit_base, a.tgt + unit_base});
    for (int e : p.unit_arrow) out.unit_arrow.push_back(e + arrow_base);
    for (int v : p.inverse) out.inverse.push_back(v + arrow_base);
    for (const auto& [key, val] : p.comp) {
      int a = static_cast<int>(key >> 32), b = static_cast<int>(key & 0xffffffff);
      out.set_compose(a + arrow_base, b + arrow_base, val + arrow_base);
    }
    arrow_base += p.arrow_count();
    unit_base += p.unit_count();
    ++pi;
  }
  return out;
}

}  // namespace gf
