#include "gf/isocheck.hpp"

#include <algorithm>
#include <set>

#include "gf/smallgroups.hpp"
#include "gf/util.hpp"

namespace gf {

GroupoidInvariant groupoid_invariant(const FiniteGroupoid& g) {
  GroupoidInvariant inv;
  inv.units = g.unit_count();
  inv.arrows = g.arrow_count();
  for (const auto& cls : orbit_relation(g).classes()) {
    inv.orbit_sizes.push_back(static_cast<int>(cls.size()));
    GroupTable iso = isotropy_table(g, cls.front());
    inv.orbit_isotropy.emplace_back(iso.order(), iso.order_histogram());
  }
  std::sort(inv.orbit_sizes.begin(), inv.orbit_sizes.end());
  std::sort(inv.orbit_isotropy.begin(), inv.orbit_isotropy.end());
  return inv;
}

namespace {

// per-unit signature: (isotropy order, sorted hom-set size profile)
std::vector<std::pair<int, std::vector<int>>> unit_signatures(const FiniteGroupoid& g) {
  int nu = g.unit_count();
  std::vector<std::vector<int>> hom(nu, std::vector<int>(nu, 0));
  std::vector<int> iso(nu, 0);
  for (const auto& a : g.arrows) {
    ++hom[a.src][a.tgt];
    if (a.src == a.tgt) ++iso[a.src];
  }
  std::vector<std::pair<int, std::vector<int>>> out(nu);
  for (int u = 0; u < nu; ++u) {
    std::vector<int> profile = hom[u];
    std::sort(profile.begin(), profile.end());
    out[u] = {iso[u], std::move(profile)};
  }
  return out;
}

struct ArrowSearch {
  const FiniteGroupoid& a;
  const FiniteGroupoid& b;
  const std::vector<int>& umap;
  std::vector<int> f;     // a-arrow -> b-arrow
  std::vector<int> used;  // b-arrow -> a-arrow
  std::vector<int> trail;

  ArrowSearch(const FiniteGroupoid& a_, const FiniteGroupoid& b_, const std::vector<int>& umap_)
      : a(a_), b(b_), umap(umap_), f(a_.arrow_count(), -1), used(b_.arrow_count(), -1) {}

  void undo(size_t mark) {
    while (trail.size() > mark) {
      int x = trail.back();
      trail.pop_back();
      used[f[x]] = -1;
      f[x] = -1;
    }
  }

  // assign with full propagation through inverses and compositions
  bool assign(int g0, int img0) {
    size_t mark = trail.size();
    std::vector<std::pair<int, int>> queue{{g0, img0}};
    size_t qi = 0;
    while (qi < queue.size()) {
      auto [x, y] = queue[qi++];
      if (f[x] != -1) {
        if (f[x] != y) {
          undo(mark);
          return false;
        }
        continue;
      }
      if (used[y] != -1 || b.arrows[y].src != umap[a.arrows[x].src] ||
          b.arrows[y].tgt != umap[a.arrows[x].tgt]) {
        undo(mark);
        return false;
      }
      f[x] = y;
      used[y] = x;
      trail.push_back(x);
      queue.emplace_back(a.inverse[x], b.inverse[y]);
      for (size_t ti = 0; ti < trail.size(); ++ti) {
        int h = trail[ti];
        if (auto c = a.compose(x, h)) {
          auto ci = b.compose(y, f[h]);
          if (!ci) {
            undo(mark);
            return false;
          }
          queue.emplace_back(*c, *ci);
        }
        if (h != x) {
          if (auto c = a.compose(h, x)) {
            auto ci = b.compose(f[h], y);
            if (!ci) {
              undo(mark);
              return false;
            }
            queue.emplace_back(*c, *ci);
          }
        }
      }
    }
    return true;
  }

  bool solve() {
    int g0 = -1;
    for (int i = 0; i < a.arrow_count(); ++i)
      if (f[i] == -1) {
        g0 = i;
        break;
      }
    if (g0 == -1) return true;
    for (int img = 0; img < b.arrow_count(); ++img) {
      if (used[img] != -1) continue;
      if (b.arrows[img].src != umap[a.arrows[g0].src] ||
          b.arrows[img].tgt != umap[a.arrows[g0].tgt])
        continue;
      size_t mark = trail.size();
      if (assign(g0, img)) {
        if (solve()) return true;
        undo(mark);
      }
    }
    return false;
  }
};

bool unit_maps_then_arrows(const FiniteGroupoid& a, const FiniteGroupoid& b,
                           const std::vector<int>& order,
                           const std::vector<std::vector<int>>& candidates, size_t level,
                           std::vector<int>& umap, std::vector<char>& used_units,
                           std::vector<int>& result) {
  if (level == order.size()) {
    ArrowSearch s(a, b, umap);
    for (int u = 0; u < a.unit_count(); ++u)
      if (!s.assign(a.unit_arrow[u], b.unit_arrow[umap[u]])) return false;
    if (!s.solve()) return false;
    result = s.f;
    return true;
  }
  int u = order[level];
  for (int v : candidates[u]) {
    if (used_units[v]) continue;
    umap[u] = v;
    used_units[v] = 1;
    if (unit_maps_then_arrows(a, b, order, candidates, level + 1, umap, used_units, result))
      return true;
    used_units[v] = 0;
    umap[u] = -1;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> groupoid_isomorphic(const FiniteGroupoid& a,
                                                    const FiniteGroupoid& b, const Caps& caps) {
  if (a.arrow_count() > caps.arrows || b.arrow_count() > caps.arrows)
    fail("CapExceeded", "arrow count exceeds the isomorphism search cap");
  if (!(groupoid_invariant(a) == groupoid_invariant(b))) return std::nullopt;

  auto sig_a = unit_signatures(a), sig_b = unit_signatures(b);
  std::vector<std::vector<int>> candidates(a.unit_count());
  for (int u = 0; u < a.unit_count(); ++u) {
    for (int v = 0; v < b.unit_count(); ++v)
      if (sig_a[u] == sig_b[v]) candidates[u].push_back(v);
    if (candidates[u].empty()) return std::nullopt;
  }
  // first-fail: most constrained units first, signature as tie-break
  std::vector<int> order(a.unit_count());
  for (int u = 0; u < a.unit_count(); ++u) order[u] = u;
  std::sort(order.begin(), order.end(), [&](int u, int v) {
    if (candidates[u].size() != candidates[v].size())
      return candidates[u].size() < candidates[v].size();
    if (sig_a[u] != sig_a[v]) return sig_a[u] < sig_a[v];
    return u < v;
  });

  std::vector<int> umap(a.unit_count(), -1), result;
  std::vector<char> used_units(b.unit_count(), 0);
  if (!unit_maps_then_arrows(a, b, order, candidates, 0, umap, used_units, result))
    return std::nullopt;
  auto check = verify_isomorphism(result, a, b);
  if (!check.ok)
    fail("IndexMismatch", "search returned a non-isomorphism (internal error): " +
                              check.violations.front());
  return result;
}

TransModel is_transformation_groupoid(const FiniteGroupoid& g, const Caps& caps) {
  TransModel out;
  auto comps_rel = orbit_relation(g).classes();
  if (comps_rel.size() == 1) {
    AtomicModel am = atomic_transformation_model(g);
    out.verdict = TransModel::Verdict::Found;
    out.action = am.action;
    out.iso = am.iso;
    out.note = "transitive: atomic model (Z_" + std::to_string(g.unit_count()) +
               " x isotropy) acting by left translation";
    return out;
  }

  // |K| = |units_i| * |Gamma_i| is forced for every component
  std::vector<FiniteGroupoid> comps = components(g);
  std::vector<GroupTable> gammas;
  uint64_t forced = 0;
  for (size_t i = 0; i < comps.size(); ++i) {
    gammas.push_back(isotropy_table(comps[i], 0));
    uint64_t o = static_cast<uint64_t>(comps[i].unit_count()) * gammas.back().order();
    if (i == 0) {
      forced = o;
    } else if (o != forced) {
      out.verdict = TransModel::Verdict::No;
      out.note = "components force incompatible acting-group orders " + std::to_string(forced) +
                 " vs " + std::to_string(o) + "; no group of any order can act";
      return out;
    }
  }
  if (forced > static_cast<uint64_t>(caps.group_order)) {
    out.verdict = TransModel::Verdict::Undecided;
    out.note = "forced acting-group order " + std::to_string(forced) +
               " exceeds the search cap " + std::to_string(caps.group_order);
    return out;
  }

  for (const auto& [kname, ktable] : small_groups_of_order(static_cast<int>(forced))) {
    // per component: subgroup class reps isomorphic to its isotropy group
    std::vector<std::vector<std::vector<int>>> choices(comps.size());
    bool viable = true;
    auto reps = subgroup_class_reps(ktable);
    for (size_t i = 0; i < comps.size() && viable; ++i) {
      for (const auto& rep : reps) {
        if (static_cast<int>(rep.size()) != gammas[i].order()) continue;
        if (table_isomorphic(subgroup_table(ktable, rep), gammas[i]))
          choices[i].push_back(rep);
      }
      if (choices[i].empty()) viable = false;
    }
    if (!viable) continue;

    // all tuples of stabilizer choices
    std::vector<size_t> pick(comps.size(), 0);
    while (true) {
      FiniteAction action;
      action.group = ktable;
      std::vector<std::vector<int>> rows(ktable.order());
      for (size_t i = 0; i < comps.size(); ++i) {
        CosetAction ca = coset_action(ktable, choices[i][pick[i]]);
        int base = static_cast<int>(action.points.size());
        for (size_t c = 0; c < ca.cosets.size(); ++c)
          action.points.push_back("c" + std::to_string(i) + "p" + std::to_string(c));
        for (int k = 0; k < ktable.order(); ++k)
          for (size_t c = 0; c < ca.cosets.size(); ++c) rows[k].push_back(base + ca.act[k][c]);
      }
      action.act = rows;
      TransformationGroupoid tg = transformation_groupoid(action);
      if (auto m = groupoid_isomorphic(tg.gpd, g, caps)) {
        out.verdict = TransModel::Verdict::Found;
        out.action = action;
        out.iso = m;
        out.note = "model: " + kname + " acting on disjoint coset spaces";
        return out;
      }
      size_t level = 0;
      while (level < pick.size() && ++pick[level] == choices[level].size()) {
        pick[level] = 0;
        ++level;
      }
      if (level == pick.size()) break;
    }
  }
  out.verdict = TransModel::Verdict::No;
  out.note = "exhausted all groups of the forced order " + std::to_string(forced) +
             " and all stabilizer assignments";
  return out;
}

namespace {

void put_digest_inputs(ojson& d, const std::string& label, const std::string& body) {
  d["inputs"][label] = body;
  d["inputs"][label + "_digest"] = content_digest(body);
}

ojson fiber_json(const GroupDesc& f) {
  ojson j;
  if (f.neumann_code) {
    j["neumann_prefix"] = f.neumann_code->print();
    if (f.is_finite()) j["group"] = f.finite->print();
  } else if (f.is_finite()) {
    j["group"] = f.finite->print();
  } else {
    j["lazy"] = f.lazy->name();
  }
  return j;
}

}  // namespace

Certificate fiber_distinctness_certificate(const GroupBundle& bundle, const Caps& caps) {
  Certificate cert;
  ojson& d = cert.doc;
  d["format"] = "gf-certificate-v1";
  d["kind"] = "non-isomorphism";
  d["subject"] = "bundle-fibers";
  d["digest_algorithm"] = "fnv1a-64";
  d["inputs"] = ojson::object();
  d["inputs"]["index_set"] = bundle.index_set;
  ojson fibers = ojson::array();
  for (const auto& f : bundle.fibers) fibers.push_back(fiber_json(f));
  d["inputs"]["fibers"] = fibers;
  {
    std::string all;
    for (const auto& f : bundle.fibers) all += fiber_json(f).dump();
    d["inputs"]["fibers_digest"] = content_digest(all);
  }

  ojson pairs = ojson::array();
  size_t n = bundle.fibers.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      const GroupDesc& fi = bundle.fibers[i];
      const GroupDesc& fj = bundle.fibers[j];
      ojson p;
      p["left"] = bundle.index_set[i];
      p["right"] = bundle.index_set[j];
      if (fi.neumann_code && fj.neumann_code) {
        DistinguishOutcome o = distinguish_prefixes(*fi.neumann_code, *fj.neumann_code);
        if (o.distinct) {
          p["verdict"] = "distinct";
          p["witness"] = {{"index", o.index},
                          {"left_entry", o.left_entry},
                          {"right_entry", o.right_entry},
                          {"distinguishing_degree", std::min(o.left_entry, o.right_entry)}};
        } else {
          p["verdict"] = "indistinguishable-at-depth";
          p["depth"] = o.common_depth;
        }
      } else if (fi.is_finite() && fj.is_finite()) {
        auto ea = closure_enumerate(fi.finite->degree, fi.finite->gens, caps.closure);
        auto eb = closure_enumerate(fj.finite->degree, fj.finite->gens, caps.closure);
        if (ea.size() != eb.size()) {
          p["verdict"] = "distinct";
          p["witness"] = {{"left_order", ea.size()}, {"right_order", eb.size()}};
        } else if (auto iso = group_isomorphic(*fi.finite, *fj.finite, caps.closure)) {
          ojson gens = ojson::array();
          for (const auto& gp : iso->gen_images) gens.push_back(gp.print_cycles());
          p["verdict"] = "isomorphic";
          p["witness"] = {{"generator_images", gens}};
        } else {
          p["verdict"] = "distinct";
          p["witness"] = {{"reason", "exhausted isomorphism search at equal order"}};
        }
      } else {
        p["verdict"] = "indeterminate";
        p["note"] = "fibers not comparable by this certificate";
      }
      pairs.push_back(p);
    }
  d["witnesses"] = pairs;
  d["recheck"] =
      "for each pair: prefix-coded fibers must reproduce the recorded first-difference "
      "witness or the inconclusive depth; explicit fibers must reproduce the recorded "
      "order/isomorphism verdict";
  return cert;
}

Certificate genuineness_ingredients(const SemidirectGroupoid& sg,
                                    const std::optional<std::vector<OddPrefix>>& codes,
                                    const Caps& caps) {
  const FiniteGroupoid& g = sg.gpd;
  if (codes && codes->size() != g.units.size())
    fail("MissingProvenance", "one prefix code per unit required");

  Certificate cert;
  ojson& d = cert.doc;
  d["format"] = "gf-certificate-v1";
  d["kind"] = "genuineness-ingredients";
  d["digest_algorithm"] = "fnv1a-64";
  d["inputs"] = ojson::object();
  put_digest_inputs(d, "groupoid", g.print());
  put_digest_inputs(d, "bundle_action", sg.action.print());
  if (codes) {
    ojson cs = ojson::array();
    for (const auto& c : *codes) cs.push_back(c.print());
    d["inputs"]["neumann_codes"] = cs;
  }

  bool all_ok = true;
  ojson ingredients = ojson::array();

  // (a) nontrivial isotropy at every unit: not an equivalence relation
  {
    ojson ing;
    ing["name"] = "isotropy-nontrivial-everywhere";
    ojson ws = ojson::array();
    bool ok = true;
    IsotropyBundle iso = isotropy(g);
    for (int u = 0; u < g.unit_count(); ++u) {
      int witness = -1;
      for (int arr : iso.fibers[u])
        if (arr != g.unit_arrow[u]) {
          witness = arr;
          break;
        }
      if (witness < 0) {
        ok = false;
        ws.push_back({{"unit", g.units[u]}, {"witness", nullptr}});
      } else {
        ws.push_back({{"unit", g.units[u]}, {"witness", witness}});
      }
    }
    ing["holds"] = ok;
    ing["witnesses"] = ws;
    all_ok = all_ok && ok;
    ingredients.push_back(ing);
  }

  // (b) fibers 2-generated, generators recorded
  {
    ojson ing;
    ing["name"] = "fibers-2-generated";
    ojson ws = ojson::array();
    bool ok = true;
    for (size_t u = 0; u < sg.action.fibers.size(); ++u) {
      const GroupTable& t = sg.action.fibers[u];
      std::vector<int> gens = t.gens.empty() ? t.greedy_gens() : t.gens;
      ojson w;
      w["unit"] = g.units[u];
      if (codes) {
        w["generators"] = ojson::array({"alpha (block cycles)", "beta (3-cycles)"});
        w["code"] = (*codes)[u].print();
      } else {
        ojson gl = ojson::array();
        for (int gi : gens) gl.push_back(t.names[gi]);
        w["generators"] = gl;
      }
      bool two_gen = codes.has_value() || gens.size() <= 2;
      w["two_generated"] = two_gen;
      ok = ok && two_gen;
      ws.push_back(w);
    }
    ing["holds"] = ok;
    ing["witnesses"] = ws;
    all_ok = all_ok && ok;
    ingredients.push_back(ing);
  }

  // (c) pairwise distinct fiber invariants at the recorded depth
  {
    ojson ing;
    ing["name"] = "fiber-invariants-pairwise-distinct";
    GroupBundle bundle;
    bundle.index_set = g.units;
    for (size_t u = 0; u < sg.action.fibers.size(); ++u) {
      if (codes) {
        GroupDesc desc;
        desc.neumann_code = (*codes)[u];
        bundle.fibers.push_back(desc);
      } else {
        bundle.fibers.push_back(
            GroupDesc::from_finite(isotropy_table(g, static_cast<int>(u)).regular_rep()));
      }
    }
    Certificate inner = fiber_distinctness_certificate(bundle, caps);
    bool ok = true;
    for (const auto& p : inner.doc["witnesses"])
      if (p.at("verdict").get<std::string>() != "distinct") ok = false;
    ing["holds"] = ok;
    ing["witnesses"] = inner.doc["witnesses"];
    all_ok = all_ok && ok;
    ingredients.push_back(ing);
  }

  // (d) scope disclaimer plus the atomic-case model on the truncation
  {
    ojson ing;
    ing["name"] = "finite-scope-disclaimer";
    ing["holds"] = true;
    ing["statement"] =
        "genuineness is a statement about diffuse measured limits and is not claimed for "
        "this finite truncation; in the atomic case every transitive groupoid is a "
        "transformation groupoid, and this one is no exception";
    if (is_ergodic(g)) {
      TransModel tm = is_transformation_groupoid(g, caps);
      ing["transformation_model_found"] = tm.verdict == TransModel::Verdict::Found;
      ing["model_note"] = tm.note;
    }
    ingredients.push_back(ing);
  }

  d["verdict"] = all_ok ? "ingredients-present" : "not-genuine-ingredients";
  d["witnesses"] = ingredients;
  d["recheck"] =
      "replay each ingredient from the embedded groupoid and bundle action: isotropy "
      "witnesses must be non-unit endo-arrows, generator records must match the fibers, "
      "and the pairwise distinctness reports must reproduce";
  return cert;
}

Certificate bisection_basis_certificate(const FiniteGroupoid& g) {
  std::vector<Bisection> parts = global_bisection_basis(g);
  Certificate cert;
  ojson& d = cert.doc;
  d["format"] = "gf-certificate-v1";
  d["kind"] = "bisection-basis";
  d["digest_algorithm"] = "fnv1a-64";
  d["inputs"] = ojson::object();
  put_digest_inputs(d, "groupoid", g.print());
  ojson ws = ojson::array();
  for (const auto& p : parts) ws.push_back(p);
  d["witnesses"] = ws;
  d["recheck"] =
      "the parts must partition the arrow set and each part's source and target maps must "
      "be bijections onto the units; the count must be arrows/units";
  return cert;
}

Certificate isomorphism_certificate(const FiniteGroupoid& a, const FiniteGroupoid& b,
                                    const std::vector<int>& map) {
  auto check = verify_isomorphism(map, a, b);
  if (!check.ok) fail("IndexMismatch", "refusing to certify a non-isomorphism");
  Certificate cert;
  ojson& d = cert.doc;
  d["format"] = "gf-certificate-v1";
  d["kind"] = "isomorphism";
  d["subject"] = "groupoid-pair";
  d["digest_algorithm"] = "fnv1a-64";
  d["inputs"] = ojson::object();
  put_digest_inputs(d, "left", a.print());
  put_digest_inputs(d, "right", b.print());
  d["witnesses"] = ojson::array({ojson{{"arrow_map", map}}});
  d["recheck"] =
      "the arrow map must be a bijection preserving units, sources, targets, composition "
      "and inverses from left to right";
  return cert;
}

Certificate transformation_model_certificate(const FiniteGroupoid& g, const FiniteAction& action,
                                             const std::vector<int>& map) {
  TransformationGroupoid tg = transformation_groupoid(action);
  auto check = verify_isomorphism(map, tg.gpd, g);
  if (!check.ok) fail("IndexMismatch", "refusing to certify a non-isomorphism");
  Certificate cert;
  ojson& d = cert.doc;
  d["format"] = "gf-certificate-v1";
  d["kind"] = "isomorphism";
  d["subject"] = "transformation-model";
  d["digest_algorithm"] = "fnv1a-64";
  d["inputs"] = ojson::object();
  put_digest_inputs(d, "groupoid", g.print());
  put_digest_inputs(d, "action", action.print());
  d["witnesses"] = ojson::array({ojson{{"arrow_map", map}}});
  d["recheck"] =
      "rebuild the transformation groupoid of the embedded action; the arrow map must be an "
      "isomorphism onto the embedded groupoid";
  return cert;
}

}  // namespace gf
