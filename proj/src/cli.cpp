#include "finito/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "finito/canonical.hpp"
#include "finito/document.hpp"
#include "finito/enumerate.hpp"
#include "finito/errors.hpp"
#include "finito/models.hpp"
#include "finito/order_complex.hpp"
#include "finito/pi1.hpp"
#include "finito/reduction.hpp"

namespace finito::cli {

namespace {

using json = nlohmann::json;

struct Loaded {
  FinitePoset poset;
  std::optional<Element> base;
};

class Runner {
 public:
  explicit Runner(const Environment& env) : env_(env), out_(*env.out), err_(*env.err) {}

  int run(const std::vector<std::string>& args);

 private:
  std::string read_input(const std::string& path) const {
    if (path.empty() || path == "-") {
      std::ostringstream buf;
      buf << env_.in->rdbuf();
      return buf.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
  }

  Loaded load(const std::string& path) const {
    const auto doc = parse_poset(read_input(path));
    for (const auto& w : doc.warnings) err_ << "warning: " << w << '\n';
    return {to_poset(doc), doc.base};
  }

  std::string style(const std::string& text, bool good) const {
    if (!env_.color) return text;
    return (good ? "\x1b[32m" : "\x1b[31m") + text + "\x1b[0m";
  }

  std::size_t cap() const {
    return std::min(env_.max_points.value_or(kDefaultEnumerationCap), kHardEnumerationCap);
  }

  PosetCatalog catalog() const { return PosetCatalog({cap(), threads_ ? threads_ : env_.threads}); }

  std::string label_list(const FinitePoset& p, const std::vector<Element>& xs) const {
    std::string s;
    for (Element x : xs) s += (s.empty() ? "" : " ") + p.label(x);
    return s.empty() ? "-" : s;
  }

  std::optional<Element> resolve_label(const FinitePoset& p, const std::string& label) const {
    const auto& ls = p.labels();
    const auto it = std::find(ls.begin(), ls.end(), label);
    if (it == ls.end()) throw Error("'" + label + "' is not a point");
    return static_cast<Element>(it - ls.begin());
  }

  int cmd_info();
  int cmd_core();
  int cmd_homology();
  int cmd_pi1();
  int cmd_osaki();
  int cmd_mccord();
  int cmd_sphere();
  int cmd_verify_spheres();
  int cmd_verify_wedges();
  int cmd_enumerate();
  int cmd_emit();

  const Environment& env_;
  std::ostream& out_;
  std::ostream& err_;

  bool json_ = false;
  std::string file_;
  std::string dst_file_;
  std::string map_file_;
  std::string base_;
  std::string format_ = "poset";
  std::size_t number_ = 0;
  std::size_t max_h_ = 4;
  std::size_t max_n_ = 6;
  std::size_t threads_ = 0;
  std::vector<std::string> filters_;
  bool emit_all_ = false;
};

const char* kind_name(BeatKind k) { return k == BeatKind::up ? "up" : "down"; }

json beat_json(const FinitePoset& p, const std::vector<BeatPointReport>& beats) {
  json arr = json::array();
  for (const auto& b : beats) {
    arr.push_back({{"element", p.label(b.element)},
                   {"kind", kind_name(b.kind)},
                   {"witness", p.label(b.witness)}});
  }
  return arr;
}

json homology_json(const HomologySummary& h) {
  json torsion = json::array();
  for (const auto& t : h.torsion) {
    json degree = json::array();
    for (const auto& v : t) degree.push_back(v.str());
    torsion.push_back(degree);
  }
  return {{"betti", h.betti}, {"torsion", torsion}};
}

json word_list(const std::vector<Word>& words) {
  json arr = json::array();
  for (const auto& w : words) arr.push_back(w);
  return arr;
}

int Runner::cmd_info() {
  const auto [p, base] = load(file_);
  const auto h = homology(order_complex(p));
  const auto beats = beat_points(p);
  const auto comps = connected_components(p);
  const std::size_t b0 = h.betti.empty() ? 0 : h.betti[0];
  const std::size_t b1 = h.betti.size() > 1 ? h.betti[1] : 0;
  const long long chi = euler_char(p);
  if (json_) {
    out_ << json{{"points", p.size()},
                 {"height", height(p)},
                 {"components", comps.size()},
                 {"euler", chi},
                 {"betti", h.betti},
                 {"b0", b0},
                 {"b1", b1},
                 {"covers", cover_count(p)},
                 {"beat_points", beat_json(p, beats)},
                 {"minimal", beats.empty()},
                 {"osaki_reducible", osaki_reducible(p)}}
                .dump()
         << '\n';
    return kExitOk;
  }
  out_ << "points: " << p.size() << '\n'
       << "height: " << height(p) << '\n'
       << "cover edges: " << cover_count(p) << '\n'
       << "components: " << comps.size() << '\n'
       << "euler characteristic: " << chi << '\n'
       << "b0: " << b0 << '\n'
       << "b1: " << b1 << '\n';
  out_ << "beat points:";
  if (beats.empty()) out_ << " none";
  for (const auto& b : beats) {
    out_ << ' ' << p.label(b.element) << '(' << kind_name(b.kind) << ", " << p.label(b.witness)
         << ')';
  }
  out_ << '\n'
       << "minimal finite space: " << (beats.empty() ? "yes" : "no") << '\n'
       << "osaki reductions to a smaller space: " << (osaki_reducible(p) ? "yes" : "none") << '\n';
  return kExitOk;
}

int Runner::cmd_core() {
  const auto [p, base] = load(file_);
  const auto trace = core(p);
  const Format fmt = parse_format(format_);
  if (json_) {
    json removed = json::array();
    for (const auto& r : trace.removed) {
      removed.push_back({{"element", p.label(r.element)},
                         {"kind", kind_name(r.kind)},
                         {"witness", p.label(r.witness)}});
    }
    out_ << json{{"removed", removed},
                 {"core", json::parse(emit(trace.final, Format::json))},
                 {"contractible", trace.final.size() == 1}}
                .dump()
         << '\n';
    return kExitOk;
  }
  for (const auto& r : trace.removed) {
    out_ << "# remove " << p.label(r.element) << " (" << kind_name(r.kind)
         << " beat point, witness " << p.label(r.witness) << ")\n";
  }
  out_ << "# core: " << trace.final.size() << " point" << (trace.final.size() == 1 ? "" : "s")
       << (trace.final.size() == 1 ? " (contractible)" : "") << '\n';
  out_ << emit(trace.final, fmt);
  return kExitOk;
}

int Runner::cmd_homology() {
  const auto [p, base] = load(file_);
  const auto k = order_complex(p);
  const auto h = homology(k);
  if (json_) {
    json j = homology_json(h);
    j["f_vector"] = f_vector(k);
    j["euler"] = euler_char(p);
    out_ << j.dump() << '\n';
    return kExitOk;
  }
  out_ << "f-vector:";
  for (auto f : f_vector(k)) out_ << ' ' << f;
  out_ << "\neuler characteristic: " << euler_char(p) << '\n';
  out_ << "degree  betti  torsion\n";
  for (std::size_t d = 0; d < h.betti.size(); ++d) {
    std::string tors;
    for (const auto& t : h.torsion[d]) tors += (tors.empty() ? "Z/" : " Z/") + t.str();
    out_ << std::left << std::setw(8) << d << std::setw(7) << h.betti[d]
         << (tors.empty() ? "-" : tors) << '\n';
  }
  return kExitOk;
}

int Runner::cmd_pi1() {
  const auto [p, file_base] = load(file_);
  Element x0 = file_base.value_or(0);
  if (!base_.empty()) x0 = *resolve_label(p, base_);
  const auto pres = edge_path_presentation(p, x0);
  const auto simple = tietze_simplify(pres.group);
  const std::size_t rank = abelian_rank(pres.group);
  const auto torsion = abelian_torsion(pres.group);
  if (json_) {
    json gens = json::array();
    for (auto [lo, hi] : pres.generator_edges) gens.push_back({p.label(lo), p.label(hi)});
    json j{{"base", p.label(x0)},
           {"generators", pres.group.generators},
           {"generator_edges", gens},
           {"relators", word_list(pres.group.relators)},
           {"simplified_generators", simple.generators},
           {"simplified_relators", word_list(simple.relators)},
           {"abelian_rank", rank},
           {"abelian_torsion", torsion}};
    j["free_rank"] = simple.is_free() ? json(simple.generators) : json(nullptr);
    out_ << j.dump() << '\n';
    return kExitOk;
  }
  out_ << "basepoint: " << p.label(x0) << '\n';
  out_ << "generators:";
  for (std::size_t i = 0; i < pres.generator_edges.size(); ++i) {
    const auto [lo, hi] = pres.generator_edges[i];
    out_ << " x" << i + 1 << '=' << p.label(lo) << '<' << p.label(hi);
  }
  if (pres.generator_edges.empty()) out_ << " none";
  out_ << '\n'
       << "presentation: " << format_presentation(pres.group) << '\n'
       << "simplified: " << format_presentation(simple) << '\n';
  if (simple.is_free()) {
    out_ << "free group of rank " << simple.generators << '\n';
  }
  out_ << "abelianization: Z^" << rank;
  for (const auto& t : torsion) out_ << " + Z/" << t;
  out_ << '\n';
  return kExitOk;
}

int Runner::cmd_osaki() {
  const auto [p, base] = load(file_);
  const auto table = osaki_table(p);
  auto cell = [](bool hyp, std::size_t size) -> std::string {
    if (!hyp) return "no";
    return size > 1 ? "shrinks" : "trivial";
  };
  if (json_) {
    json rows = json::array();
    for (const auto& e : table) {
      rows.push_back({{"element", p.label(e.element)},
                      {"open", cell(e.open_hypothesis, e.open_size)},
                      {"closed", cell(e.closed_hypothesis, e.closed_size)}});
    }
    out_ << json{{"points", rows}, {"reducible", osaki_reducible(p)}}.dump() << '\n';
    return kExitOk;
  }
  out_ << "point     open      closed\n";
  for (const auto& e : table) {
    out_ << std::left << std::setw(10) << p.label(e.element) << std::setw(10)
         << cell(e.open_hypothesis, e.open_size) << cell(e.closed_hypothesis, e.closed_size)
         << '\n';
  }
  out_ << "reductions to a smaller space: " << (osaki_reducible(p) ? "available" : "none") << '\n';
  return kExitOk;
}

int Runner::cmd_mccord() {
  const auto src = load(file_).poset;
  const auto dst = load(dst_file_).poset;
  const auto map = parse_map(read_input(map_file_), src, dst);
  const auto report = mccord_check(src, dst, map);
  if (json_) {
    json pts = json::array();
    for (const auto& pt : report.points) {
      pts.push_back({{"target", dst.label(pt.target)},
                     {"preimage_size", pt.preimage_size},
                     {"contractible", pt.contractible}});
    }
    out_ << json{{"continuous", true},
                 {"points", pts},
                 {"weak_equivalence_certified", report.weak_equivalence_certified}}
                .dump()
         << '\n';
  } else {
    out_ << "continuous: yes\n" << "target    preimage  contractible\n";
    for (const auto& pt : report.points) {
      out_ << std::left << std::setw(10) << dst.label(pt.target) << std::setw(10)
           << pt.preimage_size << (pt.contractible ? "yes" : "no") << '\n';
    }
    out_ << "weak homotopy equivalence: "
         << (report.weak_equivalence_certified ? style("certified", true)
                                               : style("not certified by this cover", false))
         << '\n';
  }
  return report.weak_equivalence_certified ? kExitOk : kExitViolated;
}

int Runner::cmd_sphere() {
  const auto s = sphere_model(number_);
  out_ << emit(s, json_ ? Format::json : parse_format(format_));
  return kExitOk;
}

int Runner::cmd_verify_spheres() {
  auto cat = catalog();
  const auto report = verify_sphere_theorem(max_h_, cat);
  // Homology of the sphere models themselves.
  std::vector<std::pair<std::size_t, bool>> homology_rows;
  bool homology_ok = true;
  for (std::size_t n = 1; n <= max_h_; ++n) {
    const auto h = homology(order_complex(sphere_model(n)));
    std::vector<std::size_t> expect(n + 1, 0);
    expect[0] = 1;
    expect[n] += 1;
    const bool ok = h.betti == expect && euler_char(sphere_model(n)) == (n % 2 == 0 ? 2 : 0);
    homology_rows.emplace_back(n, ok);
    homology_ok = homology_ok && ok;
  }
  const bool confirmed = report.confirmed() && homology_ok;
  if (json_) {
    json eq = json::object();
    for (auto [h, c] : report.equality_classes) eq[std::to_string(h)] = c;
    json lower = json::array();
    for (const auto& v : report.lower_bound_violators) lower.push_back(json::parse(emit(v, Format::json)));
    json equal = json::array();
    for (const auto& v : report.equality_violators) equal.push_back(json::parse(emit(v, Format::json)));
    json hom = json::object();
    for (auto [n, ok] : homology_rows) hom[std::to_string(n)] = ok;
    out_ << json{{"max_height", report.max_height},
                 {"max_points", report.max_points},
                 {"posets_scanned", report.posets_scanned},
                 {"minimal_spaces", report.minimal_spaces},
                 {"equality_classes", eq},
                 {"lower_bound_violators", lower},
                 {"equality_violators", equal},
                 {"sphere_homology", hom},
                 {"confirmed", confirmed}}
                .dump()
         << '\n';
    return confirmed ? kExitOk : kExitViolated;
  }
  out_ << "scope: all " << report.posets_scanned << " isomorphism classes of posets with at most "
       << report.max_points << " points\n"
       << "minimal finite spaces other than the point: " << report.minimal_spaces << '\n'
       << "lower bound #X >= 2 h(X): "
       << (report.lower_bound_violators.empty() ? style("holds", true) : style("VIOLATED", false))
       << '\n';
  for (std::size_t h = 1; h <= report.max_height; ++h) {
    const auto it = report.equality_classes.find(h);
    const std::size_t count = it == report.equality_classes.end() ? 0 : it->second;
    out_ << "height " << h << ": " << count << " class(es) with " << 2 * h
         << " points; the model of S^" << h - 1 << " is "
         << (count == 1 ? style("unique", true) : style("NOT unique", false)) << '\n';
  }
  for (auto [n, ok] : homology_rows) {
    out_ << "homology of S^" << n << "S^0 is that of the " << n << "-sphere: "
         << (ok ? style("yes", true) : style("NO", false)) << '\n';
  }
  out_ << "note: spaces with the homotopy groups of S^n are covered through this combinatorial "
          "statement about minimal finite spaces; infinite spaces are out of reach.\n";
  for (const auto& v : report.lower_bound_violators) out_ << "# violator\n" << emit(v, Format::poset);
  for (const auto& v : report.equality_violators) out_ << "# violator\n" << emit(v, Format::poset);
  out_ << (confirmed ? style("confirmed", true) : style("VIOLATED", false)) << '\n';
  return confirmed ? kExitOk : kExitViolated;
}

int Runner::cmd_verify_wedges() {
  auto cat = catalog();
  const auto rows = wedge_uniqueness_scan(max_n_, cat);
  bool all_ok = true;
  for (const auto& r : rows) all_ok = all_ok && r.ok();
  if (json_) {
    json arr = json::array();
    for (const auto& r : rows) {
      json row{{"n", r.n},
               {"size", r.size},
               {"closed_form", r.closed_form},
               {"edges", r.edges},
               {"within_cap", r.within_cap},
               {"square", r.square},
               {"ok", r.ok()}};
      if (r.within_cap) {
        row["models"] = r.models;
        row["closed_under_opposite"] = r.closed_under_opposite;
        row["consistent"] = r.all_consistent;
        row["converse"] = r.converse_holds;
      }
      arr.push_back(row);
    }
    out_ << json{{"rows", arr}, {"confirmed", all_ok}}.dump() << '\n';
    return all_ok ? kExitOk : kExitViolated;
  }
  out_ << "n     size  closed  edges  models  square  unique  ok\n";
  for (const auto& r : rows) {
    out_ << std::left << std::setw(6) << r.n << std::setw(6) << r.size << std::setw(8)
         << r.closed_form << std::setw(7) << r.edges;
    if (r.within_cap) {
      out_ << std::setw(8) << r.models << std::setw(8) << (r.square ? "yes" : "no")
           << std::setw(8) << (r.models == 1 ? "yes" : "no");
    } else {
      out_ << std::setw(8) << "-" << std::setw(8) << (r.square ? "yes" : "no") << std::setw(8)
           << "-";
    }
    out_ << (r.ok() ? style("ok", true) : style("VIOLATED", false)) << '\n';
  }
  if (std::any_of(rows.begin(), rows.end(), [](const WedgeScanRow& r) { return !r.within_cap; })) {
    out_ << "rows marked '-' need spaces larger than the enumeration cap of " << cat.cap()
         << " points; only the size formula was checked there.\n";
  }
  out_ << (all_ok ? style("confirmed", true) : style("VIOLATED", false)) << '\n';
  return all_ok ? kExitOk : kExitViolated;
}

int Runner::cmd_enumerate() {
  auto cat = catalog();
  const auto& all = cat.level(number_);
  std::optional<std::size_t> want_height;
  bool want_connected = false, want_minimal = false;
  for (const auto& f : filters_) {
    if (f == "connected") {
      want_connected = true;
    } else if (f == "minimal") {
      want_minimal = true;
    } else if (f.rfind("height=", 0) == 0) {
      try {
        want_height = std::stoul(f.substr(7));
      } catch (const std::exception&) {
        throw Error("bad filter '" + f + "'");
      }
    } else {
      throw Error("unknown filter '" + f + "' (expected connected, minimal or height=H)");
    }
  }
  std::vector<const FinitePoset*> kept;
  for (const auto& p : all) {
    if (want_connected && !is_connected(p)) continue;
    if (want_minimal && !is_minimal_space(p)) continue;
    if (want_height && height(p) != *want_height) continue;
    kept.push_back(&p);
  }
  if (json_) {
    json j{{"k", number_}, {"total", all.size()}, {"count", kept.size()}, {"filters", filters_}};
    if (emit_all_) {
      json arr = json::array();
      for (const auto* p : kept) arr.push_back(json::parse(emit(*p, Format::json)));
      j["posets"] = arr;
    }
    out_ << j.dump() << '\n';
    return kExitOk;
  }
  out_ << "k: " << number_ << '\n' << "classes: " << all.size() << '\n';
  if (!filters_.empty()) out_ << "matching filters: " << kept.size() << '\n';
  if (emit_all_) {
    const Format fmt = parse_format(format_);
    for (std::size_t i = 0; i < kept.size(); ++i) {
      out_ << "# class " << i + 1 << '\n' << emit(*kept[i], fmt);
    }
  }
  return kExitOk;
}

int Runner::cmd_emit() {
  const auto [p, base] = load(file_);
  out_ << emit(p, json_ ? Format::json : parse_format(format_), base);
  return kExitOk;
}

int Runner::run(const std::vector<std::string>& args) {
  CLI::App app{"Finite topological spaces: cores, homology, fundamental groups, minimal models"};
  app.name(args.empty() ? "finito" : args[0]);
  app.require_subcommand(1);

  auto add_json = [&](CLI::App* sub) {
    sub->add_flag("--json", json_, "Machine-readable output");
  };
  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", file_, "Poset file ('-' or omitted: standard input)");
  };

  auto* info = app.add_subcommand("info", "Summary invariants of a space");
  add_file(info);
  add_json(info);

  auto* core_cmd = app.add_subcommand("core", "Remove beat points down to the core");
  add_file(core_cmd);
  add_json(core_cmd);
  core_cmd->add_option("--format", format_, "Output format for the core");

  auto* hom = app.add_subcommand("homology", "Integral homology of the order complex");
  add_file(hom);
  add_json(hom);

  auto* pi = app.add_subcommand("pi1", "Edge-path presentation of the fundamental group");
  add_file(pi);
  add_json(pi);
  pi->add_option("--base", base_, "Basepoint label");

  auto* osaki = app.add_subcommand("osaki", "Applicability of open and closed reductions");
  add_file(osaki);
  add_json(osaki);

  auto* mcc = app.add_subcommand("mccord", "Check a map against the basis-like cover criterion");
  mcc->add_option("src", file_, "Source poset file")->required();
  mcc->add_option("dst", dst_file_, "Target poset file")->required();
  mcc->add_option("map", map_file_, "Map file with 'src -> dst' lines")->required();
  add_json(mcc);

  auto* sph = app.add_subcommand("sphere", "Emit the minimal finite model of the n-sphere");
  sph->add_option("n", number_, "Dimension")->required();
  sph->add_option("--format", format_, "poset, json, dot or faces");
  add_json(sph);

  auto* verify = app.add_subcommand("verify", "Exhaustive theorem checks");
  verify->require_subcommand(1);
  auto* vs = verify->add_subcommand("spheres", "Minimal finite spaces have at least 2h points");
  vs->add_option("--max-h", max_h_, "Largest height to check")->capture_default_str();
  vs->add_option("--threads", threads_, "Enumeration worker threads");
  add_json(vs);
  auto* vw = verify->add_subcommand("wedges", "Minimal finite models of wedges of circles");
  vw->add_option("--max-n", max_n_, "Largest number of circles")->capture_default_str();
  vw->add_option("--threads", threads_, "Enumeration worker threads");
  add_json(vw);

  auto* en = app.add_subcommand("enumerate", "Count posets up to isomorphism");
  en->add_option("k", number_, "Number of points")->required();
  en->add_option("--filter", filters_, "connected, minimal or height=H (repeatable)");
  en->add_flag("--emit", emit_all_, "Print every matching class");
  en->add_option("--format", format_, "Format for --emit");
  en->add_option("--threads", threads_, "Enumeration worker threads");
  add_json(en);

  auto* em = app.add_subcommand("emit", "Convert a poset file to another format");
  add_file(em);
  em->add_option("--format", format_, "poset, json, dot or faces");
  add_json(em);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out_, err_);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (info->parsed()) return cmd_info();
    if (core_cmd->parsed()) return cmd_core();
    if (hom->parsed()) return cmd_homology();
    if (pi->parsed()) return cmd_pi1();
    if (osaki->parsed()) return cmd_osaki();
    if (mcc->parsed()) return cmd_mccord();
    if (sph->parsed()) return cmd_sphere();
    if (vs->parsed()) return cmd_verify_spheres();
    if (vw->parsed()) return cmd_verify_wedges();
    if (en->parsed()) return cmd_enumerate();
    if (em->parsed()) return cmd_emit();
  } catch (const Error& e) {
    err_ << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace

int run(const std::vector<std::string>& args, const Environment& env) {
  return Runner(env).run(args);
}

}  // namespace finito::cli
