#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gf/bundle.hpp"
#include "gf/caps.hpp"
#include "gf/certificate.hpp"
#include "gf/constructions.hpp"
#include "gf/groupoid.hpp"
#include "gf/isocheck.hpp"
#include "gf/neumann.hpp"
#include "gf/suite.hpp"
#include "gf/util.hpp"

using namespace gf;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("ParseError", "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail("ParseError", "cannot write " + path);
  out << body;
}

struct Options {
  Caps caps;
  int depth = 0;  // 0 means full prefix length
  uint64_t seed = 1;
  std::string out;
};

// result documents go to --out when given, else stdout
void emit(const Options& opt, const std::string& body, const std::string& summary) {
  if (opt.out.empty()) {
    std::cout << body;
  } else {
    write_file(opt.out, body);
    std::cout << summary << " -> " << opt.out << "\n";
  }
}

size_t depth_or_full(const Options& opt, const OddPrefix& u) {
  return opt.depth > 0 ? static_cast<size_t>(opt.depth) : u.length();
}

ojson violations_json(const std::vector<Violation>& vs) {
  ojson arr = ojson::array();
  for (const auto& v : vs) {
    ojson e;
    e["law"] = v.law;
    e["witness"] = v.witness;
    e["detail"] = v.detail;
    arr.push_back(e);
  }
  return arr;
}

GroupBundle parse_bundle_file(const std::string& text) {
  ojson d = ojson::parse(text);
  GroupBundle b;
  b.index_set = d.at("index_set").get<std::vector<std::string>>();
  for (const auto& fj : d.at("fibers")) {
    GroupDesc desc;
    if (fj.contains("neumann_prefix")) {
      desc.neumann_code = OddPrefix::parse(fj.at("neumann_prefix").get<std::string>());
      if (fj.contains("material_depth"))
        desc = neumann_fiber(*desc.neumann_code, fj.at("material_depth").get<size_t>());
    }
    if (fj.contains("group")) desc.finite = FinPermGroup::parse(fj.at("group").get<std::string>());
    if (!desc.neumann_code && !desc.finite)
      fail("ParseError", "fiber needs a neumann_prefix or a group");
    b.fibers.push_back(std::move(desc));
  }
  if (b.fibers.size() != b.index_set.size())
    fail("ParseError", "one fiber per index required");
  return b;
}

// action files may reference a separate group file; the reference is
// resolved relative to the action file's directory
FiniteAction load_action_file(const std::string& path) {
  ojson d = ojson::parse(read_file(path));
  if (d.contains("group_file")) {
    std::string ref = d.at("group_file").get<std::string>();
    std::string dir;
    size_t slash = path.find_last_of('/');
    if (slash != std::string::npos) dir = path.substr(0, slash + 1);
    d["group"] = read_file(ref.front() == '/' ? ref : dir + ref);
    d.erase("group_file");
  }
  return FiniteAction::parse(d.dump());
}

struct PipelineInput {
  EquivRelation rel;
  std::vector<GroupTable> base;
  std::vector<Perm> theta;
};

PipelineInput parse_pipeline(const std::string& text, long cap) {
  ojson d = ojson::parse(text);
  PipelineInput p;
  p.rel = EquivRelation::parse(ojson(d.at("relation")).dump());
  for (size_t u = 0; u < p.rel.units.size(); ++u) {
    FinPermGroup g = FinPermGroup::parse(
        d.at("base").at(p.rel.units[u]).get<std::string>());
    p.base.push_back(GroupTable::from_perm_group(g, cap));
  }
  if (d.contains("theta")) {
    for (const auto& tj : d.at("theta")) {
      std::vector<int> images;
      for (const auto& name : tj) {
        auto it = std::find(p.rel.units.begin(), p.rel.units.end(), name.get<std::string>());
        if (it == p.rel.units.end()) fail("ParseError", "theta names an unknown unit");
        images.push_back(static_cast<int>(it - p.rel.units.begin()));
      }
      p.theta.push_back(Perm::from_images(images));
    }
  } else {
    p.theta = canonical_thetas(p.rel);
  }
  return p;
}

int run_recheck(const std::string& path) {
  Certificate cert = Certificate::parse(read_file(path));
  RecheckResult r = recheck_certificate(cert);
  for (const auto& n : r.notes) std::cout << n << "\n";
  std::cout << (r.ok ? "recheck: OK" : "recheck: FAILED") << "\n";
  return r.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gf: finite groupoids, group bundles and re-checkable certificates"};
  app.require_subcommand(0, 1);
  Options opt;
  std::string recheck_path;

  app.add_option("--cap-closure", opt.caps.closure, "max enumerated closure size")
      ->envname("GF_CAP_CLOSURE");
  app.add_option("--cap-arrows", opt.caps.arrows, "max arrows in isomorphism search")
      ->envname("GF_CAP_ARROWS");
  app.add_option("--cap-group-order", opt.caps.group_order,
                 "candidate group order bound in the model search")
      ->envname("GF_CAP_GROUP_ORDER");
  app.add_option("--depth", opt.depth, "prefix depth (default: full prefix)")->envname("GF_DEPTH");
  app.add_option("--seed", opt.seed, "suite generation seed")->envname("GF_SEED");
  app.add_option("--out", opt.out, "output path")->envname("GF_OUT");
  app.add_option("--recheck", recheck_path, "re-validate a certificate file and exit")
      ->envname("GF_RECHECK");

  // neumann
  auto* neumann = app.add_subcommand("neumann", "sequence-prefix groups");
  std::string arg_prefix, arg_word, arg_point, arg_prefix2;
  auto* nm_eval = neumann->add_subcommand("eval", "apply a word to a point");
  nm_eval->add_option("prefix", arg_prefix)->required();
  nm_eval->add_option("word", arg_word)->required();
  nm_eval->add_option("point", arg_point)->required();
  auto* nm_order = neumann->add_subcommand("order", "truncated order of alpha");
  nm_order->add_option("prefix", arg_prefix)->required();
  auto* nm_inv = neumann->add_subcommand("invariant", "alternating invariant of a prefix");
  nm_inv->add_option("prefix", arg_prefix)->required();
  auto* nm_dist = neumann->add_subcommand("distinguish", "non-isomorphism witness for two prefixes");
  nm_dist->add_option("left", arg_prefix)->required();
  nm_dist->add_option("right", arg_prefix2)->required();

  // groupoid
  auto* groupoid_cmd = app.add_subcommand("groupoid", "finite groupoid analysis");
  std::string arg_file;
  auto* gp_validate = groupoid_cmd->add_subcommand("validate", "check every groupoid law");
  gp_validate->add_option("file", arg_file)->required();
  auto* gp_isotropy = groupoid_cmd->add_subcommand("isotropy", "isotropy fibers per unit");
  gp_isotropy->add_option("file", arg_file)->required();
  auto* gp_components = groupoid_cmd->add_subcommand("components", "orbit components");
  gp_components->add_option("file", arg_file)->required();
  auto* gp_bisections = groupoid_cmd->add_subcommand("bisections", "global bisection basis");
  gp_bisections->add_option("file", arg_file)->required();
  auto* gp_icc = groupoid_cmd->add_subcommand("icc", "finite icc check");
  gp_icc->add_option("file", arg_file)->required();

  // construct
  auto* construct = app.add_subcommand("construct", "builders");
  std::string arg_file2;
  auto* c_rel = construct->add_subcommand("relation", "relation groupoid from a relation file");
  c_rel->add_option("file", arg_file)->required();
  auto* c_tr = construct->add_subcommand("transformation", "transformation groupoid of an action");
  c_tr->add_option("file", arg_file)->required();
  auto* c_sd = construct->add_subcommand("semidirect", "semidirect groupoid of a bundle action");
  c_sd->add_option("file", arg_file)->required();
  auto* c_ob = construct->add_subcommand("orbit-bundle", "orbit-indexed product bundle");
  c_ob->add_option("file", arg_file)->required();
  auto* c_sa = construct->add_subcommand("shift-action", "canonical shift action on an orbit bundle");
  c_sa->add_option("file", arg_file)->required();
  auto* c_am = construct->add_subcommand("atomic-model", "transformation model of a transitive groupoid");
  c_am->add_option("file", arg_file)->required();

  // iso
  auto* iso = app.add_subcommand("iso", "isomorphism decisions");
  auto* iso_check = iso->add_subcommand("check", "groupoid isomorphism search");
  iso_check->add_option("left", arg_file)->required();
  iso_check->add_option("right", arg_file2)->required();
  auto* iso_tm = iso->add_subcommand("transmodel", "transformation-groupoid recognition");
  iso_tm->add_option("file", arg_file)->required();

  // certify
  auto* certify = app.add_subcommand("certify", "certificate emitters");
  auto* cf_fibers = certify->add_subcommand("fibers", "fiber distinctness for a bundle file");
  cf_fibers->add_option("file", arg_file)->required();
  auto* cf_genuine = certify->add_subcommand("genuine", "genuineness ingredients");
  std::string arg_gpd_file;
  std::vector<std::string> arg_codes;
  int arg_units = 0;
  size_t arg_material_depth = 1;
  cf_genuine->add_option("file", arg_gpd_file, "bare groupoid file (no provenance)");
  cf_genuine->add_option("--units", arg_units, "unit count for a built demo");
  cf_genuine->add_option("--codes", arg_codes, "one sequence prefix per unit");
  cf_genuine->add_option("--material-depth", arg_material_depth, "blocks materialized per fiber");

  // recheck subcommand (same as --recheck)
  auto* recheck_cmd = app.add_subcommand("recheck", "re-validate a certificate");
  recheck_cmd->add_option("file", arg_file)->required();

  // suite
  auto* suite_cmd = app.add_subcommand("suite", "deterministic groupoid corpus");
  int arg_count = 20, arg_max_units = 4, arg_max_iso = 4;
  bool arg_exhaustive = false;
  suite_cmd->add_option("--count", arg_count, "number of random instances");
  suite_cmd->add_option("--max-units", arg_max_units, "unit bound");
  suite_cmd->add_option("--max-iso", arg_max_iso, "isotropy order bound");
  suite_cmd->add_flag("--exhaustive", arg_exhaustive, "emit the exhaustive transitive suite");

  // global flags remain usable after any subcommand
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
    a->fallthrough();
    for (CLI::App* sub : a->get_subcommands([](CLI::App*) { return true; }))
      enable_fallthrough(sub);
  };
  enable_fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (!recheck_path.empty()) return run_recheck(recheck_path);

    if (nm_eval->parsed()) {
      OddPrefix u = OddPrefix::parse(arg_prefix);
      Point p = word_apply(u, Word::parse(arg_word), Point::parse(arg_point));
      std::cout << p.print() << "\n";
      return 0;
    }
    if (nm_order->parsed()) {
      OddPrefix u = OddPrefix::parse(arg_prefix);
      std::cout << alpha_order_truncated(u, depth_or_full(opt, u)) << "\n";
      return 0;
    }
    if (nm_inv->parsed()) {
      OddPrefix u = OddPrefix::parse(arg_prefix);
      auto detail = alternating_invariant_detail(u, depth_or_full(opt, u), opt.caps.closure);
      ojson d;
      ojson degrees = ojson::array(), flags = ojson::array();
      for (const auto& bi : detail) {
        degrees.push_back(bi.degree);
        flags.push_back(bi.enumerated ? "enumerated" : "declared");
      }
      d["degrees"] = degrees;
      d["status"] = flags;
      emit(opt, d.dump(2) + "\n", "invariant");
      return 0;
    }
    if (nm_dist->parsed()) {
      Certificate cert = distinguish(OddPrefix::parse(arg_prefix), OddPrefix::parse(arg_prefix2));
      emit(opt, cert.print(), "certificate " + cert.doc["verdict"].get<std::string>());
      return 0;
    }

    if (gp_validate->parsed()) {
      FiniteGroupoid g = FiniteGroupoid::parse(read_file(arg_file));
      auto vs = validate(g);
      emit(opt, violations_json(vs).dump(2) + "\n",
           vs.empty() ? "valid" : "invalid (" + std::to_string(vs.size()) + " violations)");
      return vs.empty() ? 0 : 1;
    }
    if (gp_isotropy->parsed()) {
      FiniteGroupoid g = FiniteGroupoid::parse(read_file(arg_file));
      IsotropyBundle b = isotropy(g);
      ojson d = ojson::object();
      for (int u = 0; u < g.unit_count(); ++u) d[g.units[u]] = b.fibers[u];
      emit(opt, d.dump(2) + "\n", "isotropy");
      return 0;
    }
    if (gp_components->parsed()) {
      FiniteGroupoid g = FiniteGroupoid::parse(read_file(arg_file));
      auto comps = components(g);
      if (opt.out.empty()) {
        for (size_t i = 0; i < comps.size(); ++i) std::cout << comps[i].print();
      } else {
        for (size_t i = 0; i < comps.size(); ++i)
          write_file(opt.out + "." + std::to_string(i) + ".gpd", comps[i].print());
        std::cout << comps.size() << " components -> " << opt.out << ".*.gpd\n";
      }
      return 0;
    }
    if (gp_bisections->parsed()) {
      FiniteGroupoid g = FiniteGroupoid::parse(read_file(arg_file));
      Certificate cert = bisection_basis_certificate(g);
      emit(opt, cert.print(),
           "basis of " + std::to_string(cert.doc["witnesses"].size()) + " global bisections");
      return 0;
    }
    if (gp_icc->parsed()) {
      FiniteGroupoid g = FiniteGroupoid::parse(read_file(arg_file));
      IccResult r = icc_check(g);
      ojson d;
      d["icc"] = r.icc;
      if (r.witness) d["witness_arrow"] = *r.witness;
      emit(opt, d.dump(2) + "\n", r.icc ? "icc" : "not icc");
      return 0;
    }

    if (c_rel->parsed()) {
      RelationGroupoid rg = relation_groupoid(EquivRelation::parse(read_file(arg_file)));
      emit(opt, rg.gpd.print(), "relation groupoid, " + std::to_string(rg.gpd.arrow_count()) + " arrows");
      return 0;
    }
    if (c_tr->parsed()) {
      TransformationGroupoid tg = transformation_groupoid(load_action_file(arg_file));
      emit(opt, tg.gpd.print(),
           "transformation groupoid, " + std::to_string(tg.gpd.arrow_count()) + " arrows");
      return 0;
    }
    if (c_sd->parsed()) {
      SemidirectGroupoid sg = semidirect(BundleAction::parse(read_file(arg_file)));
      emit(opt, sg.gpd.print(),
           "semidirect groupoid, " + std::to_string(sg.gpd.arrow_count()) + " arrows");
      return 0;
    }
    if (c_ob->parsed()) {
      PipelineInput p = parse_pipeline(read_file(arg_file), opt.caps.table);
      OrbitBundle ob = orbit_indexed_bundle(p.rel, p.base, p.theta, opt.caps.table);
      ojson d = ojson::object();
      for (size_t u = 0; u < ob.fibers.size(); ++u) {
        ojson f;
        f["order"] = ob.fibers[u].order();
        ojson factors = ojson::array();
        for (int z : ob.factor_unit[u]) factors.push_back(ob.rel.units[z]);
        f["factors"] = factors;
        d[ob.rel.units[u]] = f;
      }
      emit(opt, d.dump(2) + "\n", "orbit-indexed bundle");
      return 0;
    }
    if (c_sa->parsed()) {
      PipelineInput p = parse_pipeline(read_file(arg_file), opt.caps.table);
      OrbitBundle ob = orbit_indexed_bundle(p.rel, p.base, p.theta, opt.caps.table);
      BundleAction ba = canonical_shift_action(ob);
      emit(opt, ba.print(), "shift action over " + std::to_string(ba.rel.units.size()) + " units");
      return 0;
    }
    if (c_am->parsed()) {
      FiniteGroupoid g = FiniteGroupoid::parse(read_file(arg_file));
      AtomicModel am = atomic_transformation_model(g);
      Certificate cert = transformation_model_certificate(g, am.action, am.iso);
      emit(opt, cert.print(), "atomic model certificate");
      return 0;
    }

    if (iso_check->parsed()) {
      FiniteGroupoid a = FiniteGroupoid::parse(read_file(arg_file));
      FiniteGroupoid b = FiniteGroupoid::parse(read_file(arg_file2));
      auto m = groupoid_isomorphic(a, b, opt.caps);
      if (m) {
        Certificate cert = isomorphism_certificate(a, b, *m);
        emit(opt, cert.print(), "isomorphic");
      } else {
        ojson d;
        d["isomorphic"] = false;
        d["note"] = "exhaustive search completed";
        emit(opt, d.dump(2) + "\n", "not isomorphic");
      }
      return 0;
    }
    if (iso_tm->parsed()) {
      FiniteGroupoid g = FiniteGroupoid::parse(read_file(arg_file));
      TransModel tm = is_transformation_groupoid(g, opt.caps);
      if (tm.verdict == TransModel::Verdict::Found) {
        Certificate cert = transformation_model_certificate(g, *tm.action, *tm.iso);
        emit(opt, cert.print(), "transformation model found");
      } else {
        ojson d;
        d["verdict"] = tm.verdict == TransModel::Verdict::No ? "no" : "undecided";
        d["note"] = tm.note;
        emit(opt, d.dump(2) + "\n", "verdict: " + d["verdict"].get<std::string>());
      }
      return 0;
    }

    if (cf_fibers->parsed()) {
      GroupBundle b = parse_bundle_file(read_file(arg_file));
      Certificate cert = fiber_distinctness_certificate(b, opt.caps);
      emit(opt, cert.print(), "fiber distinctness certificate");
      return 0;
    }
    if (cf_genuine->parsed()) {
      if (!arg_gpd_file.empty())
        fail("MissingProvenance",
             "a bare groupoid file carries no construction provenance; build the demo with "
             "--units and --codes instead");
      if (arg_units <= 0 || static_cast<int>(arg_codes.size()) != arg_units)
        fail("MissingProvenance", "--units N and exactly N --codes are required");
      std::vector<OddPrefix> codes;
      for (const auto& c : arg_codes) codes.push_back(OddPrefix::parse(c));
      // materialized truncations must agree for the trivial-cocycle bundle
      std::vector<GroupTable> fibers;
      for (const auto& c : codes)
        fibers.push_back(GroupTable::from_perm_group(neumann_truncation(c, arg_material_depth),
                                                     opt.caps.table));
      for (size_t u = 1; u < fibers.size(); ++u)
        if (fibers[u].mul != fibers[0].mul)
          fail("InvalidAction",
               "materialized truncations differ across units; a constant-fiber bundle needs "
               "codes agreeing on the first material-depth entries");
      BundleAction ba;
      std::vector<std::string> units;
      for (int i = 0; i < arg_units; ++i) units.push_back("u" + std::to_string(i));
      ba.rel = EquivRelation::full(units);
      ba.fibers = fibers;
      for (const auto& [y, x] : ba.rel.pairs) {
        std::vector<int> id(fibers[0].order());
        for (size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
        ba.delta[{y, x}] = id;
      }
      SemidirectGroupoid sg = semidirect(ba);
      Certificate cert = genuineness_ingredients(sg, codes, opt.caps);
      emit(opt, cert.print(),
           "genuineness ingredients: " + cert.doc["verdict"].get<std::string>());
      return 0;
    }

    if (recheck_cmd->parsed()) return run_recheck(arg_file);

    if (suite_cmd->parsed()) {
      std::vector<SuiteItem> items =
          arg_exhaustive ? exhaustive_transitive_suite(arg_max_units, arg_max_iso, opt.caps)
                         : random_suite(opt.seed, arg_count, arg_max_units, arg_max_iso, opt.caps);
      if (opt.out.empty()) fail("ParseError", "suite needs --out DIR");
      for (const auto& item : items)
        write_file(opt.out + "/" + item.name + ".gpd", item.gpd.print());
      std::cout << items.size() << " groupoids -> " << opt.out << "\n";
      return 0;
    }

    std::cout << app.help();
    return 2;
  } catch (const DomainError& e) {
    ojson err;
    err["error"] = e.kind();
    err["message"] = e.what();
    std::cerr << err.dump() << "\n";
    std::cout << "error: " << e.what() << "\n";
    return 1;
  } catch (const ojson::exception& e) {
    ojson err;
    err["error"] = "ParseError";
    err["message"] = e.what();
    std::cerr << err.dump() << "\n";
    std::cout << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    ojson err;
    err["error"] = "Internal";
    err["message"] = e.what();
    std::cerr << err.dump() << "\n";
    std::cout << "error: " << e.what() << "\n";
    return 1;
  }
}
