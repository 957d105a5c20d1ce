#include "gf/constructions.hpp"

#include <algorithm>
#include <set>

#include "gf/certificate.hpp"
#include "gf/util.hpp"

namespace gf {

std::vector<std::string> FiniteAction::validate() const {
  std::vector<std::string> out;
  int ne = group.order(), np = static_cast<int>(points.size());
  if (static_cast<int>(act.size()) != ne) {
    out.push_back("act table must have one row per group element");
    return out;
  }
  for (int g = 0; g < ne; ++g) {
    if (static_cast<int>(act[g].size()) != np) {
      out.push_back("act row " + std::to_string(g) + " has wrong length");
      return out;
    }
    for (int x = 0; x < np; ++x)
      if (act[g][x] < 0 || act[g][x] >= np) {
        out.push_back("act image out of range at (" + group.names[g] + "," + points[x] + ")");
        return out;
      }
  }
  for (int x = 0; x < np; ++x)
    if (act[0][x] != x)
      out.push_back("identity law fails at point " + points[x]);
  for (int g = 0; g < ne; ++g)
    for (int h = 0; h < ne; ++h)
      for (int x = 0; x < np; ++x)
        if (act[g][act[h][x]] != act[group.mul[g][h]][x]) {
          out.push_back("compatibility fails at (" + group.names[g] + "," + group.names[h] + "," +
                        points[x] + ")");
          if (out.size() > 8) return out;
        }
  return out;
}

std::string FiniteAction::print() const {
  ojson d;
  ojson grp;
  grp["elements"] = group.names;
  ojson mul = ojson::array();
  for (const auto& row : group.mul) mul.push_back(row);
  grp["mul"] = mul;
  d["group"] = grp;
  d["points"] = points;
  ojson rows = ojson::array();
  for (int g = 0; g < group.order(); ++g)
    for (size_t x = 0; x < points.size(); ++x)
      rows.push_back(ojson::array({group.names[g], points[x], points[act[g][x]]}));
  d["act"] = rows;
  return d.dump(2) + "\n";
}

FiniteAction FiniteAction::parse(const std::string& text) {
  ojson d = ojson::parse(text);
  FiniteAction a;
  const auto& grp = d.at("group");
  if (grp.is_string()) {
    // inline group file: elements are the closure in BFS order, named by
    // their cycle notation
    a.group = GroupTable::from_perm_group(FinPermGroup::parse(grp.get<std::string>()), 4096);
  } else {
    a.group.names = grp.at("elements").get<std::vector<std::string>>();
    int n = static_cast<int>(a.group.names.size());
    a.group.mul.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a.group.mul[i][j] = grp.at("mul").at(i).at(j).get<int>();
    a.group.inv.assign(n, -1);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (a.group.mul[i][j] == 0) a.group.inv[i] = j;
    for (int i = 0; i < n; ++i)
      if (a.group.inv[i] < 0)
        fail("ParseError", "group table has no inverse for element " + std::to_string(i));
    a.group.gens = a.group.greedy_gens();
  }
  a.points = d.at("points").get<std::vector<std::string>>();
  int n = a.group.order();
  std::map<std::string, int> eindex, pindex;
  for (int i = 0; i < n; ++i) eindex[a.group.names[i]] = i;
  for (size_t i = 0; i < a.points.size(); ++i) pindex[a.points[i]] = static_cast<int>(i);
  a.act.assign(n, std::vector<int>(a.points.size(), -1));
  for (const auto& row : d.at("act")) {
    int g = eindex.at(row.at(0).get<std::string>());
    int x = pindex.at(row.at(1).get<std::string>());
    a.act[g][x] = pindex.at(row.at(2).get<std::string>());
  }
  for (int g = 0; g < n; ++g)
    for (size_t x = 0; x < a.points.size(); ++x)
      if (a.act[g][x] < 0) fail("ParseError", "act table is not total");
  return a;
}

TransformationGroupoid transformation_groupoid(const FiniteAction& a) {
  auto bad = a.validate();
  if (!bad.empty()) fail("ActionLawViolation", bad.front());
  TransformationGroupoid out;
  out.action = a;
  FiniteGroupoid& g = out.gpd;
  int ne = a.group.order(), np = static_cast<int>(a.points.size());
  g.units = a.points;
  g.arrows.resize(ne * np);
  g.unit_arrow.resize(np);
  g.inverse.resize(ne * np);
  for (int x = 0; x < np; ++x)
    for (int e = 0; e < ne; ++e) {
      int id = out.arrow_of(x, e);
      g.arrows[id] = {x, a.act[e][x]};
      if (e == 0) g.unit_arrow[x] = id;
      g.inverse[id] = out.arrow_of(a.act[e][x], a.group.inv[e]);
    }
  // (gx, h) . (x, g) = (x, hg)
  for (int x = 0; x < np; ++x)
    for (int e = 0; e < ne; ++e) {
      int right = out.arrow_of(x, e);
      int mid = a.act[e][x];
      for (int h = 0; h < ne; ++h)
        g.set_compose(out.arrow_of(mid, h), right, out.arrow_of(x, a.group.mul[h][e]));
    }
  return out;
}

RelationGroupoid relation_groupoid(const EquivRelation& r) {
  auto bad = r.validate();
  if (!bad.empty()) fail("IndexMismatch", "relation invalid: " + bad.front());
  RelationGroupoid out;
  out.rel = r;
  FiniteGroupoid& g = out.gpd;
  g.units = r.units;
  for (const auto& [y, x] : r.pairs) {
    out.arrow_of[{y, x}] = static_cast<int>(g.arrows.size());
    g.arrows.push_back({x, y});
  }
  g.unit_arrow.resize(r.units.size());
  for (size_t u = 0; u < r.units.size(); ++u)
    g.unit_arrow[u] = out.arrow_of.at({static_cast<int>(u), static_cast<int>(u)});
  g.inverse.resize(g.arrows.size());
  for (const auto& [pair, id] : out.arrow_of) g.inverse[id] = out.arrow_of.at({pair.second, pair.first});
  for (const auto& [pzy, a] : out.arrow_of)
    for (const auto& [pyx, b] : out.arrow_of)
      if (pzy.second == pyx.first) g.set_compose(a, b, out.arrow_of.at({pzy.first, pyx.second}));
  return out;
}

std::string BundleAction::print() const {
  ojson d;
  d["units"] = rel.units;
  ojson ps = ojson::array();
  for (const auto& [y, x] : rel.pairs) ps.push_back(ojson::array({rel.units[y], rel.units[x]}));
  d["pairs"] = ps;
  ojson fs = ojson::object();
  for (size_t u = 0; u < fibers.size(); ++u) {
    ojson f;
    f["elements"] = fibers[u].names;
    ojson mul = ojson::array();
    for (const auto& row : fibers[u].mul) mul.push_back(row);
    f["mul"] = mul;
    fs[rel.units[u]] = f;
  }
  d["fibers"] = fs;
  ojson ds = ojson::array();
  for (const auto& [pair, map] : delta) {
    ojson e;
    e["pair"] = ojson::array({rel.units[pair.first], rel.units[pair.second]});
    e["map"] = map;
    ds.push_back(e);
  }
  d["delta"] = ds;
  return d.dump(2) + "\n";
}

BundleAction BundleAction::parse(const std::string& text) {
  ojson d = ojson::parse(text);
  BundleAction b;
  b.rel.units = d.at("units").get<std::vector<std::string>>();
  std::map<std::string, int> uindex;
  for (size_t i = 0; i < b.rel.units.size(); ++i) uindex[b.rel.units[i]] = static_cast<int>(i);
  for (const auto& p : d.at("pairs"))
    b.rel.pairs.emplace_back(uindex.at(p.at(0).get<std::string>()),
                             uindex.at(p.at(1).get<std::string>()));
  std::sort(b.rel.pairs.begin(), b.rel.pairs.end());
  auto bad = b.rel.validate();
  if (!bad.empty()) fail("ParseError", "relation part invalid: " + bad.front());
  b.fibers.resize(b.rel.units.size());
  for (size_t u = 0; u < b.rel.units.size(); ++u) {
    const auto& f = d.at("fibers").at(b.rel.units[u]);
    GroupTable& t = b.fibers[u];
    t.names = f.at("elements").get<std::vector<std::string>>();
    int n = static_cast<int>(t.names.size());
    t.mul.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) t.mul[i][j] = f.at("mul").at(i).at(j).get<int>();
    t.inv.assign(n, -1);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (t.mul[i][j] == 0) t.inv[i] = j;
    for (int i = 0; i < n; ++i)
      if (t.inv[i] < 0) fail("ParseError", "fiber table lacks inverses");
    t.gens = t.greedy_gens();
  }
  for (const auto& e : d.at("delta")) {
    int y = uindex.at(e.at("pair").at(0).get<std::string>());
    int x = uindex.at(e.at("pair").at(1).get<std::string>());
    b.delta[{y, x}] = e.at("map").get<std::vector<int>>();
  }
  return b;
}

std::vector<ActionViolation> validate_action(const BundleAction& d) {
  std::vector<ActionViolation> out;
  auto unit = [&](int u) { return d.rel.units[u]; };
  auto relbad = d.rel.validate();
  for (const auto& m : relbad) out.push_back({"relation", m});
  if (d.fibers.size() != d.rel.units.size()) {
    out.push_back({"structure", "one fiber per unit required"});
    return out;
  }
  for (const auto& [y, x] : d.rel.pairs)
    if (!d.delta.count({y, x}))
      out.push_back({"structure", "delta missing for (" + unit(y) + "," + unit(x) + ")"});
  for (const auto& [pair, map] : d.delta)
    if (!d.rel.contains(pair.first, pair.second))
      out.push_back({"structure", "delta defined off the relation at (" + unit(pair.first) + "," +
                                      unit(pair.second) + ")"});
  if (!out.empty()) return out;

  // each map is a group isomorphism fiber[x] -> fiber[y]
  for (const auto& [pair, map] : d.delta) {
    auto [y, x] = pair;
    const GroupTable& fx = d.fibers[x];
    const GroupTable& fy = d.fibers[y];
    if (static_cast<int>(map.size()) != fx.order() || fx.order() != fy.order()) {
      out.push_back({"iso", "delta map for (" + unit(y) + "," + unit(x) + ") has wrong size"});
      continue;
    }
    std::vector<char> hit(fy.order(), 0);
    bool ok = true;
    for (int g = 0; g < fx.order() && ok; ++g) {
      if (map[g] < 0 || map[g] >= fy.order() || hit[map[g]]) ok = false;
      else hit[map[g]] = 1;
    }
    if (!ok || map[0] != 0) {
      out.push_back({"iso", "delta for (" + unit(y) + "," + unit(x) + ") is not a bijection fixing e"});
      continue;
    }
    for (int g = 0; g < fx.order(); ++g)
      for (int h = 0; h < fx.order(); ++h)
        if (map[fx.mul[g][h]] != fy.mul[map[g]][map[h]]) {
          out.push_back({"iso", "delta for (" + unit(y) + "," + unit(x) +
                                    ") is not multiplicative at (" + fx.names[g] + "," +
                                    fx.names[h] + ")"});
          g = fx.order();
          break;
        }
  }
  if (!out.empty()) return out;

  // axiom 3: identity on the diagonal
  for (size_t u = 0; u < d.rel.units.size(); ++u) {
    const auto& map = d.delta.at({static_cast<int>(u), static_cast<int>(u)});
    for (int g = 0; g < static_cast<int>(map.size()); ++g)
      if (map[g] != g) {
        out.push_back({"axiom-3", "delta_(x,x) is not the identity at " + unit(static_cast<int>(u))});
        break;
      }
  }
  // axiom 2: delta_(y,x)^{-1} = delta_(x,y)
  for (const auto& [pair, map] : d.delta) {
    auto [y, x] = pair;
    const auto& back = d.delta.at({x, y});
    for (int g = 0; g < static_cast<int>(map.size()); ++g)
      if (back[map[g]] != g) {
        out.push_back({"axiom-2", "delta_(" + unit(x) + "," + unit(y) + ") is not the inverse of delta_(" +
                                      unit(y) + "," + unit(x) + ")"});
        break;
      }
  }
  // axiom 1: cocycle on all composable pairs
  for (const auto& [pzy, mzy] : d.delta)
    for (const auto& [pyx, myx] : d.delta) {
      if (pzy.second != pyx.first) continue;
      const auto& mzx = d.delta.at({pzy.first, pyx.second});
      for (int g = 0; g < static_cast<int>(myx.size()); ++g)
        if (mzy[myx[g]] != mzx[g]) {
          out.push_back({"axiom-1", "cocycle fails on (" + unit(pzy.first) + "," + unit(pzy.second) +
                                        "," + unit(pyx.second) + ") at element " +
                                        d.fibers[pyx.second].names[g]});
          break;
        }
    }
  return out;
}

int SemidirectGroupoid::arrow_of(int g_elem, int y, int x) const {
  return pair_base.at({y, x}) + g_elem;
}

std::tuple<int, int, int> SemidirectGroupoid::decode(int arrow) const {
  for (const auto& [pair, base] : pair_base) {
    int size = action.fibers[pair.second].order();
    if (arrow >= base && arrow < base + size) return {arrow - base, pair.first, pair.second};
  }
  fail("IndexMismatch", "arrow id out of range");
}

SemidirectGroupoid semidirect(const BundleAction& d) {
  auto bad = validate_action(d);
  if (!bad.empty()) fail("InvalidAction", bad.front().axiom + ": " + bad.front().detail);
  SemidirectGroupoid out;
  out.action = d;
  FiniteGroupoid& g = out.gpd;
  g.units = d.rel.units;
  for (const auto& [y, x] : d.rel.pairs) {
    out.pair_base[{y, x}] = static_cast<int>(g.arrows.size());
    for (int e = 0; e < d.fibers[x].order(); ++e) g.arrows.push_back({x, y});
  }
  g.unit_arrow.resize(g.units.size());
  for (size_t u = 0; u < g.units.size(); ++u)
    g.unit_arrow[u] = out.arrow_of(0, static_cast<int>(u), static_cast<int>(u));
  g.inverse.resize(g.arrows.size());
  for (const auto& [pair, base] : out.pair_base) {
    auto [y, x] = pair;
    const auto& dyx = d.delta.at({y, x});
    for (int e = 0; e < d.fibers[x].order(); ++e)
      g.inverse[base + e] = out.arrow_of(dyx[d.fibers[x].inv[e]], x, y);
  }
  // (h,(z,y)) . (g,(y,x)) = (delta_(x,y)(h) . g, (z,x))
  for (const auto& [pzy, base_l] : out.pair_base) {
    auto [z, y] = pzy;
    for (const auto& [pyx, base_r] : out.pair_base) {
      if (pyx.first != y) continue;
      int x = pyx.second;
      const auto& dxy = d.delta.at({x, y});
      for (int h = 0; h < d.fibers[y].order(); ++h)
        for (int e = 0; e < d.fibers[x].order(); ++e)
          g.set_compose(base_l + h, base_r + e,
                        out.arrow_of(d.fibers[x].mul[dxy[h]][e], z, x));
    }
  }
  return out;
}

std::vector<Perm> canonical_thetas(const EquivRelation& r) {
  if (!r.transitive_whole()) fail("NotTransitive", "canonical thetas need a single class");
  int n = static_cast<int>(r.units.size());
  std::vector<Perm> theta;
  for (int k = 0; k < n; ++k) {
    std::vector<int> images(n);
    for (int x = 0; x < n; ++x) images[x] = (x + k) % n;
    theta.push_back(Perm::from_images(std::move(images)));
  }
  return theta;
}

OrbitBundle orbit_indexed_bundle(const EquivRelation& r, const std::vector<GroupTable>& base,
                                 const std::vector<Perm>& theta, long cap) {
  if (!r.transitive_whole()) fail("NotTransitive", "orbit-indexed bundle needs a single class");
  if (base.size() != r.units.size()) fail("IndexMismatch", "one base fiber per unit required");
  if (theta.empty() || !theta[0].is_identity())
    fail("InvalidArgument", "theta[0] must be the identity bijection");
  int n = static_cast<int>(r.units.size());
  for (const auto& t : theta)
    if (t.degree() != n) fail("IndexMismatch", "theta maps must be unit bijections");
  for (const auto& [y, x] : r.pairs) {
    bool covered = false;
    for (const auto& t : theta)
      if (t.apply(x) == y) { covered = true; break; }
    if (!covered)
      fail("CoverageFailure",
           "pair (" + r.units[y] + "," + r.units[x] + ") realized by no theta");
  }
  OrbitBundle ob;
  ob.rel = r;
  ob.theta = theta;
  ob.base = base;
  for (int x = 0; x < n; ++x) {
    std::vector<int> factors;
    GroupTable fiber = GroupTable::trivial();
    bool first = true;
    for (const auto& t : theta) {
      int z = t.apply(x);
      factors.push_back(z);
      uint64_t next_order = static_cast<uint64_t>(fiber.order()) * base[z].order();
      if (next_order > static_cast<uint64_t>(cap)) fail("CapExceeded", "orbit product fiber too large");
      fiber = first ? base[z] : fiber.product(base[z]);
      first = false;
    }
    ob.factor_unit.push_back(std::move(factors));
    ob.fibers.push_back(std::move(fiber));
  }
  return ob;
}

std::vector<int> shift_sigma(const OrbitBundle& ob, int y, int x) {
  size_t nn = ob.theta.size();
  // sigma_{(y,x)}(n) = phi_y^{-1}(theta_n(x))
  std::vector<int> inv_y(ob.rel.units.size(), -1);
  for (size_t n = 0; n < nn; ++n) {
    int z = ob.theta[n].apply(y);
    if (inv_y[z] >= 0)
      fail("NotInjective", "coordinates collide at unit " + ob.rel.units[y]);
    inv_y[z] = static_cast<int>(n);
  }
  std::vector<int> sigma(nn);
  for (size_t n = 0; n < nn; ++n) {
    int z = ob.theta[n].apply(x);
    if (inv_y[z] < 0) fail("CoverageFailure", "sigma undefined: orbit mismatch");
    sigma[n] = inv_y[z];
  }
  return sigma;
}

namespace {

std::vector<int> fiber_radices(const OrbitBundle& ob, int x) {
  std::vector<int> r;
  for (int z : ob.factor_unit[x]) r.push_back(ob.base[z].order());
  return r;
}

std::vector<int> unrank(int e, const std::vector<int>& radices) {
  std::vector<int> digits(radices.size());
  for (size_t i = radices.size(); i-- > 0;) {
    digits[i] = e % radices[i];
    e /= radices[i];
  }
  return digits;
}

int rank(const std::vector<int>& digits, const std::vector<int>& radices) {
  int e = 0;
  for (size_t i = 0; i < radices.size(); ++i) e = e * radices[i] + digits[i];
  return e;
}

}  // namespace

BundleAction canonical_shift_action(const OrbitBundle& ob) {
  BundleAction out;
  out.rel = ob.rel;
  out.fibers = ob.fibers;
  for (const auto& [y, x] : ob.rel.pairs) {
    // (delta_{(y,x)} h)_m = h_{sigma_{(x,y)}(m)}
    std::vector<int> sig_xy = shift_sigma(ob, x, y);
    std::vector<int> rx = fiber_radices(ob, x), ry = fiber_radices(ob, y);
    std::vector<int> map(ob.fibers[x].order());
    for (int e = 0; e < ob.fibers[x].order(); ++e) {
      std::vector<int> dx = unrank(e, rx), dy(ry.size());
      for (size_t m = 0; m < ry.size(); ++m) dy[m] = dx[sig_xy[m]];
      map[e] = rank(dy, ry);
    }
    out.delta[{y, x}] = std::move(map);
  }
  auto bad = validate_action(out);
  if (!bad.empty())
    fail("InvalidAction", "shift action failed validation: " + bad.front().detail);
  return out;
}

Transversal star_transversal(const FiniteGroupoid& g) {
  if (!is_ergodic(g)) fail("NotTransitive", "transversal needs a single orbit");
  Transversal t;
  t.base_unit = 0;  // serialization-least unit
  t.to_unit.assign(g.unit_count(), -1);
  t.to_unit[0] = g.unit_arrow[0];
  for (int i = 0; i < g.arrow_count(); ++i) {
    const auto& a = g.arrows[i];
    if (a.src == 0 && t.to_unit[a.tgt] == -1) t.to_unit[a.tgt] = i;
  }
  for (int u = 0; u < g.unit_count(); ++u)
    if (t.to_unit[u] == -1)
      fail("NotTransitive", "no arrow from the base unit to " + g.units[u]);
  return t;
}

AtomicModel atomic_transformation_model(const FiniteGroupoid& g) {
  if (!is_ergodic(g)) fail("NotTransitive", "the atomic model needs a transitive groupoid");
  int n = g.unit_count();
  Transversal t = star_transversal(g);
  GroupTable gamma = isotropy_table(g, t.base_unit);
  std::vector<int> gamma_arrows;  // table element -> arrow id at the base unit
  for (const auto& name : gamma.names) gamma_arrows.push_back(std::stoi(name.substr(1)));

  AtomicModel am;
  am.action.group = GroupTable::cyclic(n).product(gamma);
  am.action.points.resize(n);
  for (int u = 0; u < n; ++u) am.action.points[u] = g.units[u];
  int ng = gamma.order();
  am.action.act.assign(am.action.group.order(), std::vector<int>(n));
  for (int h = 0; h < n; ++h)
    for (int gi = 0; gi < ng; ++gi)
      for (int x = 0; x < n; ++x) am.action.act[h * ng + gi][x] = (h + x) % n;
  am.model = transformation_groupoid(am.action);

  // phi(x,(h,gamma)) = t_{h+x} . gamma . t_x^{-1}
  am.iso.assign(am.model.gpd.arrow_count(), -1);
  for (int x = 0; x < n; ++x)
    for (int e = 0; e < am.action.group.order(); ++e) {
      int h = e / ng, gi = e % ng;
      int tx_inv = g.inverse[t.to_unit[x]];
      int mid = g.compose_req(gamma_arrows[gi], tx_inv);
      am.iso[am.model.arrow_of(x, e)] = g.compose_req(t.to_unit[(h + x) % n], mid);
    }
  auto check = verify_isomorphism(am.iso, am.model.gpd, g);
  if (!check.ok)
    fail("IndexMismatch", "atomic model verification failed (internal error): " +
                              check.violations.front());
  return am;
}

IsoCheck verify_isomorphism(const std::vector<int>& f, const FiniteGroupoid& a,
                            const FiniteGroupoid& b) {
  IsoCheck r;
  auto flag = [&](const std::string& v) {
    if (r.violations.size() < 16) r.violations.push_back(v);
  };
  if (static_cast<int>(f.size()) != a.arrow_count()) {
    flag("map is not total on the arrows");
    return r;
  }
  if (a.arrow_count() != b.arrow_count() || a.unit_count() != b.unit_count()) {
    flag("arrow or unit counts differ");
    return r;
  }
  std::vector<char> hit(b.arrow_count(), 0);
  for (int i = 0; i < a.arrow_count(); ++i) {
    if (f[i] < 0 || f[i] >= b.arrow_count()) {
      flag("image out of range at arrow " + std::to_string(i));
      return r;
    }
    if (hit[f[i]]) {
      flag("map is not injective at arrow " + std::to_string(i));
      return r;
    }
    hit[f[i]] = 1;
  }
  // induced unit map from unit arrows
  std::vector<int> umap(a.unit_count(), -1);
  std::vector<char> uhit(b.unit_count(), 0);
  for (int u = 0; u < a.unit_count(); ++u) {
    int img = f[a.unit_arrow[u]];
    bool is_unit = false;
    for (int v = 0; v < b.unit_count(); ++v)
      if (b.unit_arrow[v] == img) {
        umap[u] = v;
        is_unit = true;
        break;
      }
    if (!is_unit) {
      flag("unit arrow of " + a.units[u] + " does not map to a unit arrow");
      return r;
    }
    if (uhit[umap[u]]) {
      flag("unit map is not injective");
      return r;
    }
    uhit[umap[u]] = 1;
  }
  for (int i = 0; i < a.arrow_count(); ++i) {
    if (b.arrows[f[i]].src != umap[a.arrows[i].src])
      flag("source mismatch at arrow " + std::to_string(i));
    if (b.arrows[f[i]].tgt != umap[a.arrows[i].tgt])
      flag("target mismatch at arrow " + std::to_string(i));
  }
  if (!r.violations.empty()) return r;
  for (int g = 0; g < a.arrow_count(); ++g)
    for (int h = 0; h < a.arrow_count(); ++h) {
      auto gh = a.compose(g, h);
      if (!gh) continue;
      auto img = b.compose(f[g], f[h]);
      if (!img || *img != f[*gh]) {
        flag("multiplication not preserved at (" + std::to_string(g) + "," + std::to_string(h) + ")");
        if (r.violations.size() >= 16) return r;
      }
    }
  for (int g = 0; g < a.arrow_count(); ++g)
    if (f[a.inverse[g]] != b.inverse[f[g]]) {
      flag("inverse not preserved at arrow " + std::to_string(g));
      if (r.violations.size() >= 16) return r;
    }
  r.ok = r.violations.empty();
  return r;
}

}  // namespace gf
