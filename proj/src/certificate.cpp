#include "gf/certificate.hpp"

#include "gf/bundle.hpp"
#include "gf/constructions.hpp"
#include "gf/groupoid.hpp"
#include "gf/isocheck.hpp"
#include "gf/neumann.hpp"
#include "gf/util.hpp"

namespace gf {

std::string Certificate::print() const { return doc.dump(2) + "\n"; }

Certificate Certificate::parse(const std::string& text) {
  Certificate c;
  c.doc = ojson::parse(text);
  return c;
}

std::string content_digest(const std::string& bytes) {
  return "fnv1a-64:" + hex64(fnv1a64(bytes));
}

namespace {

/// Placeholder for fibers recorded only by name; never multiplied.
class OpaqueFg : public FgGroup {
public:
  explicit OpaqueFg(std::string name) : name_(std::move(name)) {}
  std::string name() const override { return name_; }
  std::string identity() const override { return "e"; }
  std::vector<std::pair<std::string, std::string>> generators() const override { return {}; }
  std::string mul(const std::string&, const std::string&) const override {
    fail("InvalidArgument", "opaque fiber cannot be evaluated");
  }
  std::string inv(const std::string&) const override {
    fail("InvalidArgument", "opaque fiber cannot be evaluated");
  }

private:
  std::string name_;
};

bool check_digest(const ojson& inputs, const std::string& label, RecheckResult& r) {
  if (!inputs.contains(label) || !inputs.contains(label + "_digest")) {
    r.notes.push_back("missing input or digest for " + label);
    return false;
  }
  std::string body = inputs.at(label).get<std::string>();
  std::string want = inputs.at(label + "_digest").get<std::string>();
  if (content_digest(body) != want) {
    r.notes.push_back("digest mismatch for " + label);
    return false;
  }
  return true;
}

GroupBundle bundle_from_inputs(const ojson& inputs) {
  GroupBundle b;
  b.index_set = inputs.at("index_set").get<std::vector<std::string>>();
  for (const auto& fj : inputs.at("fibers")) {
    GroupDesc d;
    if (fj.contains("neumann_prefix")) d.neumann_code = OddPrefix::parse(fj.at("neumann_prefix"));
    if (fj.contains("group")) d.finite = FinPermGroup::parse(fj.at("group"));
    if (!d.neumann_code && !d.finite && fj.contains("lazy"))
      d.lazy = std::make_shared<OpaqueFg>(fj.at("lazy").get<std::string>());
    b.fibers.push_back(std::move(d));
  }
  return b;
}

RecheckResult recheck_neumann_pair(const Certificate& cert) {
  RecheckResult r;
  const ojson& inputs = cert.doc.at("inputs");
  OddPrefix u = OddPrefix::parse(inputs.at("left_prefix"));
  OddPrefix v = OddPrefix::parse(inputs.at("right_prefix"));
  if (content_digest(u.print()) != inputs.at("left_digest").get<std::string>() ||
      content_digest(v.print()) != inputs.at("right_digest").get<std::string>()) {
    r.notes.push_back("prefix digest mismatch");
    return r;
  }
  Certificate fresh = distinguish(u, v);
  if (fresh.doc.at("verdict") != cert.doc.at("verdict")) {
    r.notes.push_back("verdict does not reproduce");
    return r;
  }
  if (fresh.doc.at("witnesses") != cert.doc.at("witnesses")) {
    r.notes.push_back("witnesses do not reproduce");
    return r;
  }
  if (cert.doc.at("verdict") == "inconclusive" && fresh.doc.at("depth") != cert.doc.at("depth")) {
    r.notes.push_back("inconclusive depth does not reproduce");
    return r;
  }
  r.ok = true;
  r.notes.push_back("distinguish replayed and matched");
  return r;
}

RecheckResult recheck_bundle_fibers(const Certificate& cert) {
  RecheckResult r;
  GroupBundle b = bundle_from_inputs(cert.doc.at("inputs"));
  Certificate fresh = fiber_distinctness_certificate(b, Caps{});
  if (fresh.doc.at("witnesses") != cert.doc.at("witnesses")) {
    r.notes.push_back("pair reports do not reproduce");
    return r;
  }
  r.ok = true;
  r.notes.push_back("all pair reports replayed and matched");
  return r;
}

RecheckResult recheck_isomorphism(const Certificate& cert) {
  RecheckResult r;
  const ojson& inputs = cert.doc.at("inputs");
  std::vector<int> map =
      cert.doc.at("witnesses").at(0).at("arrow_map").get<std::vector<int>>();
  if (cert.doc.value("subject", "") == "transformation-model") {
    if (!check_digest(inputs, "groupoid", r) || !check_digest(inputs, "action", r)) return r;
    FiniteGroupoid g = FiniteGroupoid::parse(inputs.at("groupoid"));
    FiniteAction a = FiniteAction::parse(inputs.at("action"));
    TransformationGroupoid tg = transformation_groupoid(a);
    IsoCheck c = verify_isomorphism(map, tg.gpd, g);
    if (!c.ok) {
      r.notes.push_back("arrow map is not an isomorphism: " + c.violations.front());
      return r;
    }
  } else {
    if (!check_digest(inputs, "left", r) || !check_digest(inputs, "right", r)) return r;
    FiniteGroupoid a = FiniteGroupoid::parse(inputs.at("left"));
    FiniteGroupoid b = FiniteGroupoid::parse(inputs.at("right"));
    IsoCheck c = verify_isomorphism(map, a, b);
    if (!c.ok) {
      r.notes.push_back("arrow map is not an isomorphism: " + c.violations.front());
      return r;
    }
  }
  r.ok = true;
  r.notes.push_back("arrow map verified");
  return r;
}

RecheckResult recheck_bisections(const Certificate& cert) {
  RecheckResult r;
  const ojson& inputs = cert.doc.at("inputs");
  if (!check_digest(inputs, "groupoid", r)) return r;
  FiniteGroupoid g = FiniteGroupoid::parse(inputs.at("groupoid"));
  std::vector<char> covered(g.arrow_count(), 0);
  size_t count = 0;
  for (const auto& pj : cert.doc.at("witnesses")) {
    Bisection part = pj.get<Bisection>();
    if (!is_global_bisection(g, part)) {
      r.notes.push_back("part " + std::to_string(count) + " is not a global bisection");
      return r;
    }
    for (int id : part) {
      if (covered[id]) {
        r.notes.push_back("arrow " + std::to_string(id) + " covered twice");
        return r;
      }
      covered[id] = 1;
    }
    ++count;
  }
  for (int i = 0; i < g.arrow_count(); ++i)
    if (!covered[i]) {
      r.notes.push_back("arrow " + std::to_string(i) + " not covered");
      return r;
    }
  if (count != static_cast<size_t>(g.arrow_count() / g.unit_count())) {
    r.notes.push_back("part count is not arrows/units");
    return r;
  }
  r.ok = true;
  r.notes.push_back(std::to_string(count) + " global bisections verified as a partition");
  return r;
}

RecheckResult recheck_genuineness(const Certificate& cert) {
  RecheckResult r;
  const ojson& inputs = cert.doc.at("inputs");
  if (!check_digest(inputs, "groupoid", r) || !check_digest(inputs, "bundle_action", r)) return r;
  BundleAction ba = BundleAction::parse(inputs.at("bundle_action"));
  SemidirectGroupoid sg = semidirect(ba);
  if (sg.gpd.print() != inputs.at("groupoid").get<std::string>()) {
    r.notes.push_back("embedded groupoid is not the semidirect of the embedded action");
    return r;
  }
  std::optional<std::vector<OddPrefix>> codes;
  if (inputs.contains("neumann_codes")) {
    codes.emplace();
    for (const auto& c : inputs.at("neumann_codes")) codes->push_back(OddPrefix::parse(c));
  }
  Certificate fresh = genuineness_ingredients(sg, codes, Caps{});
  if (fresh.doc.at("verdict") != cert.doc.at("verdict") ||
      fresh.doc.at("witnesses") != cert.doc.at("witnesses")) {
    r.notes.push_back("ingredients do not reproduce");
    return r;
  }
  r.ok = true;
  r.notes.push_back("all ingredients replayed and matched");
  return r;
}

}  // namespace

RecheckResult recheck_certificate(const Certificate& cert) {
  RecheckResult r;
  std::string kind = cert.kind();
  std::string subject = cert.doc.value("subject", "");
  try {
    if (kind == "non-isomorphism" && subject == "neumann-prefix-pair")
      return recheck_neumann_pair(cert);
    if (kind == "non-isomorphism" && subject == "bundle-fibers")
      return recheck_bundle_fibers(cert);
    if (kind == "isomorphism") return recheck_isomorphism(cert);
    if (kind == "bisection-basis") return recheck_bisections(cert);
    if (kind == "genuineness-ingredients") return recheck_genuineness(cert);
  } catch (const std::exception& e) {
    r.notes.push_back(std::string("recheck raised: ") + e.what());
    return r;
  }
  r.notes.push_back("unknown certificate kind '" + kind + "'");
  return r;
}

}  // namespace gf
