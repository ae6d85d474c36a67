#include "mapenum/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "mapenum/bijections.hpp"
#include "mapenum/error.hpp"
#include "mapenum/oracle.hpp"
#include "mapenum/solver.hpp"
#include "mapenum/verify.hpp"

namespace mapenum {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { json, csv };

struct Globals {
  std::string format = "json";
  int threads = 0;
  int max_edges = 5;

  Format fmt() const { return format == "csv" ? Format::csv : Format::json; }
  EnumerationOptions enumeration() const { return {max_edges, threads}; }
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

void csv_row(std::ostream& out, std::initializer_list<std::string> fields) {
  bool first = true;
  for (const auto& f : fields) {
    if (!first) out << ',';
    out << csv_field(f);
    first = false;
  }
  out << '\n';
}

std::string rat_string(const WPolynomial& p) {
  if (p.is_constant()) return to_string(p.constant_term());
  return p.to_string();
}

Json series_json(const TSeries& s) {
  Json arr = Json::array();
  for (int k = 0; k <= s.order(); ++k) arr.push_back(rat_string(s[k]));
  return arr;
}

void series_csv(std::ostream& out, const TSeries& s) {
  csv_row(out, {"k", "coefficient"});
  for (int k = 0; k <= s.order(); ++k) csv_row(out, {std::to_string(k), rat_string(s[k])});
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::invalid_argument, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int parse_int(std::string_view text, const char* what) {
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) throw Error(Errc::parse, std::string("bad ") + what + " '" + std::string(text) + "'");
  return value;
}

// ---------------------------------------------------------------------------

struct CountArgs {
  int edges = 1;
  int genus = -1;
  std::string profile;
  bool no_classes = false;
};

void cmd_count(const CountArgs& a, const Globals& g, std::ostream& out) {
  MapFilter filter;
  if (a.genus >= 0) filter.genus = a.genus;
  if (!a.profile.empty()) filter.vertices = DegreeProfile::parse(a.profile);
  const auto opts = g.enumeration();
  const BigInt labelled = labelled_count(map_census(a.edges, filter, opts));
  const Rat rooted = Rat(labelled * (2 * a.edges)) / Rat(factorial(2 * a.edges));
  std::vector<SymmetryClass> classes;
  if (!a.no_classes) classes = symmetry_census(a.edges, filter, opts);

  if (g.fmt() == Format::csv) {
    csv_row(out, {"labelled", labelled.get_str()});
    csv_row(out, {"rooted", to_string(rooted)});
    if (!a.no_classes) {
      csv_row(out, {"code", "gamma", "count", "genus", "vertices"});
      for (const auto& c : classes)
        csv_row(out, {c.code.to_string(), std::to_string(c.gamma), c.labelled.get_str(),
                      std::to_string(c.genus), c.vertices.to_string()});
    }
    return;
  }
  Json report;
  report["edges"] = a.edges;
  report["genus"] = a.genus >= 0 ? Json(a.genus) : Json(nullptr);
  report["vertices"] = a.profile.empty() ? Json(nullptr) : Json(filter.vertices->to_string());
  report["labelled"] = labelled.get_str();
  report["rooted"] = to_string(rooted);
  if (!a.no_classes) {
    Json arr = Json::array();
    for (const auto& c : classes)
      arr.push_back({{"code", c.code.to_string()},
                     {"gamma", std::to_string(c.gamma)},
                     {"count", c.labelled.get_str()},
                     {"genus", c.genus},
                     {"vertices", c.vertices.to_string()}});
    report["iso_classes"] = arr;
  }
  out << report.dump() << '\n';
}

struct SeriesArgs {
  std::string weights_path;
  std::string target = "e0";
  int order = -1;
};

void cmd_series(const SeriesArgs& a, const Globals& g, std::ostream& out) {
  WeightFile wf;
  if (!a.weights_path.empty()) wf = parse_weight_file(read_file(a.weights_path));
  const int T = a.order >= 0 ? a.order : wf.order;
  const auto V = WeightSpec::numeric(wf.weights);

  TSeries s;
  const std::string& target = a.target;
  if (target == "e0") {
    s = rooted_map_gf(V, T);
  } else if (target == "R") {
    s = solve_rs(V, T).R;
  } else if (target == "S") {
    s = solve_rs(V, T).S;
  } else if (target.rfind("W:", 0) == 0) {
    const int n = parse_int(std::string_view(target).substr(2), "resolvent index");
    if (n < 0) throw Error(Errc::invalid_argument, "resolvent index must be >= 0");
    s = resolvent_w(V, T, n).W[static_cast<std::size_t>(n)];
  } else if (target.rfind("twopoint:", 0) == 0) {
    const int l = parse_int(std::string_view(target).substr(9), "distance");
    s = two_point_r(l, T)[static_cast<std::size_t>(l - 1)];
  } else {
    throw Error(Errc::invalid_argument, "unknown target '" + target + "' (e0, R, S, W:n, twopoint:l)");
  }
  if (g.fmt() == Format::csv) {
    series_csv(out, s);
  } else {
    out << series_json(s).dump() << '\n';
  }
}

struct FamilyArgs {
  int k_max = 5;
  std::vector<std::string> eulerian;
};

void cmd_families(const FamilyArgs& a, const Globals& g, std::ostream& out) {
  const auto tetra = tetravalent_counts(a.k_max);
  const auto tri = trivalent_counts(a.k_max);
  const auto e4 = rooted_map_gf(WeightSpec::quartic(), 2 * a.k_max);
  const auto e3 = rooted_map_gf(WeightSpec::cubic(), 3 * a.k_max);
  std::vector<std::pair<std::string, Rat>> euler;
  for (const auto& p : a.eulerian) {
    const auto prof = DegreeProfile::parse(p);
    euler.emplace_back(prof.to_string(), eulerian_count(prof));
  }

  if (g.fmt() == Format::csv) {
    csv_row(out, {"family", "k", "closed_form", "series"});
    for (int k = 0; k <= a.k_max; ++k)
      csv_row(out, {"tetravalent", std::to_string(k), to_string(tetra[static_cast<std::size_t>(k)]),
                    rat_string(e4[2 * k])});
    for (int k = 0; k <= a.k_max; ++k)
      csv_row(out, {"trivalent", std::to_string(k), to_string(tri[static_cast<std::size_t>(k)]),
                    rat_string(e3[3 * k])});
    for (const auto& [p, n] : euler) csv_row(out, {"eulerian", p, to_string(n), ""});
    return;
  }
  Json report;
  Json t4{{"closed_form", Json::array()}, {"series", Json::array()}};
  Json t3{{"closed_form", Json::array()}, {"series", Json::array()}};
  for (int k = 0; k <= a.k_max; ++k) {
    t4["closed_form"].push_back(to_string(tetra[static_cast<std::size_t>(k)]));
    t4["series"].push_back(rat_string(e4[2 * k]));
    t3["closed_form"].push_back(to_string(tri[static_cast<std::size_t>(k)]));
    t3["series"].push_back(rat_string(e3[3 * k]));
  }
  report["tetravalent"] = t4;
  report["trivalent"] = t3;
  if (!euler.empty()) {
    Json e = Json::object();
    for (const auto& [p, n] : euler) e[p] = to_string(n);
    report["eulerian"] = e;
  }
  out << report.dump() << '\n';
}

struct TreeArgs {
  std::string cls = "S";
  int order = 4;
  std::string weights_path;
  int well_labeled = 0;
  bool closure = false;
};

void cmd_trees(const TreeArgs& a, const Globals& g, std::ostream& out) {
  if (a.well_labeled > 0) {
    const auto wl = enumerate_well_labeled(a.well_labeled, a.order);
    if (g.fmt() == Format::csv) {
      csv_row(out, {"tree", "edges"});
      for (const auto& t : wl.trees) csv_row(out, {t.to_string(), std::to_string(t.edges())});
      return;
    }
    Json report;
    report["root_label"] = a.well_labeled;
    report["order"] = a.order;
    report["count"] = wl.trees.size();
    report["series"] = series_json(wl.series);
    Json arr = Json::array();
    for (const auto& t : wl.trees) arr.push_back(t.to_string());
    report["trees"] = arr;
    out << report.dump() << '\n';
    return;
  }

  TreeClass cls;
  if (a.cls == "R") cls = TreeClass::R;
  else if (a.cls == "S") cls = TreeClass::S;
  else throw Error(Errc::invalid_argument, "tree class must be R or S");
  const WeightSpec V = a.weights_path.empty() ? WeightSpec::formal(a.order + 1)
                                              : WeightSpec::numeric(parse_weight_file(read_file(a.weights_path)).weights);
  const auto en = enumerate_blossom(cls, a.order, V);

  if (g.fmt() == Format::csv) {
    csv_row(out, {"tree", "weight", "vertex_weight"});
    for (const auto& t : en.trees)
      csv_row(out, {t.to_string(), std::to_string(t.weight()), rat_string(t.vertex_weight(V))});
    return;
  }
  Json report;
  report["class"] = a.cls;
  report["order"] = a.order;
  report["count"] = en.trees.size();
  report["series"] = series_json(en.series);
  Json arr = Json::array();
  for (const auto& t : en.trees) {
    Json item{{"tree", t.to_string()}, {"weight", t.weight()}, {"vertex_weight", rat_string(t.vertex_weight(V))}};
    if (a.closure) {
      const auto closed = closure(t);
      item["map"] = {{"sigma", closed.map.sigma().to_cycle_string()},
                     {"alpha", closed.map.alpha().to_cycle_string()},
                     {"root", closed.root},
                     {"marked", closed.marked},
                     {"genus", euler_genus(closed.map).genus}};
    }
    arr.push_back(item);
  }
  report["trees"] = arr;
  out << report.dump() << '\n';
}

struct TwoPointArgs {
  int ell = 3;
  int order = 9;
};

void cmd_twopoint(const TwoPointArgs& a, const Globals& g, std::ostream& out) {
  const auto r = two_point_r(a.ell, a.order);
  if (g.fmt() == Format::csv) {
    csv_row(out, {"l", "k", "coefficient"});
    for (int l = 1; l <= a.ell; ++l)
      for (int k = 0; k <= a.order; ++k)
        csv_row(out, {std::to_string(l), std::to_string(k), rat_string(r[static_cast<std::size_t>(l - 1)][k])});
    return;
  }
  Json report = Json::object();
  for (int l = 1; l <= a.ell; ++l) report[std::to_string(l)] = series_json(r[static_cast<std::size_t>(l - 1)]);
  out << report.dump() << '\n';
}

struct VerifyArgs {
  std::string suite = "all";
  bool list = false;
};

int cmd_verify(const VerifyArgs& a, const Globals& g, std::ostream& out) {
  if (a.list) {
    for (const auto& name : suite_names()) out << name << '\n';
    return 0;
  }
  VerifyOptions options;
  options.enumeration = g.enumeration();
  const auto results = run_checks(suite_checks(a.suite, options));
  const bool ok = all_passed(results);
  if (g.fmt() == Format::csv) {
    csv_row(out, {"suite", "check", "passed", "detail"});
    for (const auto& r : results) csv_row(out, {r.suite, r.name, r.passed ? "true" : "false", r.detail});
  } else {
    Json report;
    report["suite"] = a.suite;
    report["passed"] = ok;
    Json arr = Json::array();
    for (const auto& r : results)
      arr.push_back({{"suite", r.suite}, {"check", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    report["checks"] = arr;
    out << report.dump() << '\n';
  }
  return ok ? 0 : 1;
}

}  // namespace

WeightFile parse_weight_file(std::string_view json_text) {
  Json doc;
  try {
    doc = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    throw Error(Errc::parse, std::string("weight file: ") + e.what());
  }
  if (!doc.is_object()) throw Error(Errc::parse, "weight file must be a JSON object");
  WeightFile wf;
  for (const auto& [key, value] : doc.items()) {
    if (key == "order") {
      if (!value.is_number_integer() || value.get<long>() < 0)
        throw Error(Errc::parse, "order must be a nonnegative integer");
      wf.order = value.get<int>();
    } else if (key == "weights") {
      if (!value.is_object()) throw Error(Errc::parse, "weights must be an object");
      for (const auto& [n_text, w] : value.items()) {
        const int n = parse_int(n_text, "weight index");
        if (n < 1) throw Error(Errc::parse, "weight index must be >= 1");
        if (w.is_string()) wf.weights[n] = parse_rat(w.get<std::string>());
        else if (w.is_number_integer()) wf.weights[n] = Rat(w.get<long>());
        else throw Error(Errc::parse, "weight v" + n_text + " must be an exact rational string");
      }
    } else {
      throw Error(Errc::parse, "unknown key '" + key + "' in weight file");
    }
  }
  return wf;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact enumeration of combinatorial maps", "mapenum"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--threads", g.threads, "Enumeration worker threads (0: hardware)")->check(CLI::NonNegativeNumber);
  app.add_option("--max-edges", g.max_edges, "Enumeration edge cap (at most 6)")->check(CLI::PositiveNumber);

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "Brute-force counts of maps with m edges");
  count->add_option("-m,--edges", count_args.edges, "Number of edges")->required();
  count->add_option("-g,--genus", count_args.genus, "Restrict to one genus");
  count->add_option("--profile", count_args.profile, "Vertex degree profile, e.g. 4:1,3:2");
  count->add_flag("--no-classes", count_args.no_classes, "Skip the isomorphism-class census");

  SeriesArgs series_args;
  auto* series = app.add_subcommand("series", "Planar generating series from a weight file");
  series->add_option("--weights", series_args.weights_path, "Weight file (JSON)");
  series->add_option("--target", series_args.target, "e0, R, S, W:n or twopoint:l");
  series->add_option("--order", series_args.order, "Truncation order (overrides the file)");

  FamilyArgs family_args;
  auto* families = app.add_subcommand("families", "Tetravalent, trivalent and Eulerian counts");
  families->add_option("--k-max", family_args.k_max, "Largest k")->check(CLI::NonNegativeNumber);
  families->add_option("--eulerian", family_args.eulerian, "Even degree profile, e.g. 4:2,2:1");

  TreeArgs tree_args;
  auto* trees = app.add_subcommand("trees", "Blossom and well-labeled trees");
  trees->add_option("--class", tree_args.cls, "R or S");
  trees->add_option("--order", tree_args.order, "Largest tree weight");
  trees->add_option("--weights", tree_args.weights_path, "Weight file (default: formal weights)");
  trees->add_option("--well-labeled", tree_args.well_labeled, "Root label; lists well-labeled trees");
  trees->add_flag("--closure", tree_args.closure, "Include the closed map of each tree");

  TwoPointArgs tp_args;
  auto* twopoint = app.add_subcommand("twopoint", "Quartic two-point series R_1..R_l");
  twopoint->add_option("--ell", tp_args.ell, "Largest distance")->check(CLI::PositiveNumber);
  twopoint->add_option("--order", tp_args.order, "Truncation order");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", verify_args.suite, "Suite name or all");
  verify->add_flag("--list", verify_args.list, "List suite names");

  for (auto* sub : {count, series, families, trees, twopoint, verify}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*count) cmd_count(count_args, g, out);
    else if (*series) cmd_series(series_args, g, out);
    else if (*families) cmd_families(family_args, g, out);
    else if (*trees) cmd_trees(tree_args, g, out);
    else if (*twopoint) cmd_twopoint(tp_args, g, out);
    else if (*verify) return cmd_verify(verify_args, g, out);
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace mapenum
