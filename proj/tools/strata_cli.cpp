#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "strata/json_io.hpp"
#include "strata/verify.hpp"

using namespace strata;

namespace {

struct Options {
  std::string type;
  int rank_guard = 5;
  std::size_t weyl_cap = kDefaultGroupCap;
  std::size_t bfs_cap = kDefaultOrbitCap;
  std::string format = "json";  // json | tsv | text
  std::string out;
};

enum class TypeOpt { required, none };

void add_common(CLI::App* cmd, Options& o, TypeOpt topt = TypeOpt::required) {
  if (topt == TypeOpt::required)
    cmd->add_option("--type", o.type, "ambient Cartan type, e.g. A3")
        ->required();
  cmd->add_option("--rank-guard", o.rank_guard,
                  "largest ambient rank enumerated");
  cmd->add_option("--weyl-cap", o.weyl_cap, "group enumeration cap");
  cmd->add_option("--bfs-cap", o.bfs_cap, "orbit walk cap");
  cmd->add_option("--format", o.format, "json | tsv | text")
      ->check(CLI::IsMember({"json", "tsv", "text"}));
  cmd->add_option("--out", o.out, "write the report to this path");
}

int emit(const Options& o, const std::string& body) {
  if (o.out.empty()) {
    std::cout << body;
    return 0;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) {
    std::cerr << "cannot open " << o.out << "\n";
    return 1;
  }
  f << body;
  return 0;
}

std::vector<int> parse_nodes(const std::string& s) {
  std::vector<int> nodes;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ','))
    if (!tok.empty()) nodes.push_back(std::stoi(tok));
  return nodes;
}

std::vector<OrbitLabel> parse_labels(const std::string& s) {
  std::vector<OrbitLabel> labs;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, '+'))
    if (!tok.empty()) labs.push_back(parse_orbit_label(tok));
  return labs;
}

/* "nodes|x_s|orbits", e.g. "1|0,0,0|A1:[1,1]"; orbits are '+'-separated. */
JordanTriple parse_triple_spec(const RootSystem& rs, const std::string& s) {
  std::stringstream in(s);
  std::string nodes, xs, orbits;
  if (!std::getline(in, nodes, '|') || !std::getline(in, xs, '|'))
    throw std::invalid_argument("triple spec needs nodes|x_s|orbits");
  std::getline(in, orbits, '|');
  return make_jordan_triple(rs, make_pseudo_levi(rs, parse_nodes(nodes)),
                            parse_rat_vec(xs), parse_labels(orbits));
}

/* "x_r|labels", e.g. "0,1/2,0|A1:[1,1]+A1:[2]". */
GroupPoint parse_point_spec(const RootSystem& rs, const std::string& s) {
  std::stringstream in(s);
  std::string xr, labels;
  if (!std::getline(in, xr, '|'))
    throw std::invalid_argument("point spec needs x_r|labels");
  std::getline(in, labels, '|');
  return make_group_point(rs, parse_rat_vec(xr), parse_labels(labels));
}

int cmd_enumerate(const Options& o, bool sheets_only) {
  CartanType t = parse_type(o.type);
  // guard before the context: the full group table of a large ambient type
  // must never be attempted
  if (t.family != 'A' && t.family != 'B' && t.family != 'C' &&
      t.family != 'D')
    throw std::invalid_argument("classical ambient type required");
  if (t.rank > o.rank_guard) throw guard_error("rank guard exceeded");
  RootSystem rs = build_root_system(t);
  StratifyCtx ctx = make_stratify_ctx(rs, o.weyl_cap, o.bfs_cap);
  std::vector<JordanTriple> classes =
      enumerate_jordan_classes(ctx, o.rank_guard);
  if (sheets_only) {
    std::erase_if(classes, [](const JordanTriple& t) { return !is_sheet(t); });
  }
  std::string body;
  if (o.format == "tsv") {
    body = classes_tsv(ctx, classes);
  } else if (o.format == "text") {
    std::ostringstream os;
    os << classes_text(ctx, classes) << classes.size()
       << (sheets_only ? " sheets\n" : " classes\n");
    body = os.str();
  } else {
    json j;
    j["type"] = show_type(rs.type);
    j["count"] = classes.size();
    json arr = json::array();
    for (const JordanTriple& t : classes)
      arr.push_back(jordan_triple_json(ctx, t));
    j["classes"] = std::move(arr);
    body = j.dump(2) + "\n";
  }
  return emit(o, body);
}

int cmd_verify(const Options& o, const std::vector<std::string>& types) {
  std::vector<CheckResult> results;
  auto run_type = [&](const std::string& name) {
    CartanType t = parse_type(name);
    if (codim1_expected_available(t)) {
      results.push_back(check_codim1_table(t, o.bfs_cap));
    } else if (t.family == 'A') {
      if (t.rank == 3) results.push_back(check_local_counts(o.weyl_cap));
      results.push_back(check_sln(t.rank + 1, o.weyl_cap));
    } else {
      throw std::invalid_argument("no frozen fixtures for " + name);
    }
  };
  if (types.empty()) {
    results.push_back(check_local_counts(o.weyl_cap));
    for (int n = 2; n <= 5; ++n) results.push_back(check_sln(n, o.weyl_cap));
    for (const char* t : {"G2", "F4", "E6", "E7"})
      results.push_back(check_codim1_table(parse_type(t), o.bfs_cap));
  } else {
    for (const std::string& t : types) run_type(t);
  }
  bool any_fail = false;
  std::string body;
  if (o.format == "json") {
    json arr = json::array();
    for (const CheckResult& r : results) {
      json j;
      j["fixture"] = r.fixture;
      j["status"] = r.status;
      j["detail"] = r.detail;
      arr.push_back(std::move(j));
      any_fail = any_fail || r.failed();
    }
    body = arr.dump(2) + "\n";
  } else {
    std::ostringstream os;
    for (const CheckResult& r : results) {
      os << r.fixture << ": " << r.status;
      if (!r.detail.empty()) os << " (" << r.detail << ")";
      os << '\n';
      any_fail = any_fail || r.failed();
    }
    body = os.str();
  }
  int rc = emit(o, body);
  return rc != 0 ? rc : (any_fail ? 1 : 0);
}

int cmd_local(const Options& o, const std::string& triple_spec,
              const std::string& point_spec) {
  RootSystem rs = build_root_system(parse_type(o.type));
  StratifyCtx ctx = make_stratify_ctx(rs, o.weyl_cap, o.bfs_cap);
  JordanTriple t = parse_triple_spec(rs, triple_spec);
  GroupPoint p = parse_point_spec(rs, point_spec);
  LocalModel m = local_model(ctx, t, p);
  std::string body;
  if (o.format == "text") {
    std::ostringstream os;
    os << "point " << show_rat_vec(m.x_r) << ", count " << m.count << '\n';
    for (const LocalBranch& b : m.branches) {
      os << "  branch coset " << show_rat_vec(b.x) << ", orbits ";
      for (std::size_t i = 0; i < b.labels.size(); ++i)
        os << (i ? "+" : "") << show_orbit_label(b.labels[i]);
      os << '\n';
    }
    body = os.str();
  } else {
    body = local_model_json(ctx, m).dump(2) + "\n";
  }
  int rc = emit(o, body);
  return rc != 0 ? rc : (m.count > 0 ? 0 : 3);
}

int cmd_codim1(const Options& o, const std::string& nodes_str) {
  RootSystem rs = build_root_system(parse_type(o.type));
  if (!nodes_str.empty()) {
    PseudoLevi pl = make_pseudo_levi(rs, parse_nodes(nodes_str));
    bool normal = codim1_normal(rs, pl, o.bfs_cap);
    std::string body;
    if (o.format == "text") {
      body = show_pseudo_levi(rs, pl) + " " + type_name(pl.components) +
             (normal ? " normal-codim1\n" : " not-normal-codim1\n");
    } else {
      json j = pseudo_levi_json(rs, pl);
      j["normal_codim1"] = normal;
      body = j.dump(2) + "\n";
    }
    int rc = emit(o, body);
    return rc != 0 ? rc : (normal ? 0 : 3);
  }
  std::vector<PseudoLevi> pls = enumerate_pseudo_levis(rs, o.bfs_cap);
  std::erase_if(pls, [&](const PseudoLevi& pl) {
    return pl.nodes.empty() || static_cast<int>(pl.nodes.size()) >= rs.rank;
  });
  std::ostringstream text;
  json arr = json::array();
  for (const PseudoLevi& pl : pls) {
    std::string status;
    try {
      status = codim1_normal(rs, pl, o.bfs_cap) ? "normal-codim1"
                                                : "not-normal-codim1";
    } catch (const guard_error&) {
      status = "skipped(cap)";
    }
    if (o.format == "json") {
      json j = pseudo_levi_json(rs, pl);
      j["status"] = status;
      arr.push_back(std::move(j));
    } else {
      text << show_pseudo_levi(rs, pl) << '\t' << type_name(pl.components)
           << '\t' << status << '\n';
    }
  }
  std::string body =
      o.format == "json" ? arr.dump(2) + "\n" : text.str();
  return emit(o, body);
}

int cmd_conjugate(const Options& o, const std::string& a_str,
                  const std::string& b_str) {
  RootSystem rs = build_root_system(parse_type(o.type));
  PseudoLevi a = make_pseudo_levi(rs, parse_nodes(a_str));
  PseudoLevi b = make_pseudo_levi(rs, parse_nodes(b_str));
  std::optional<Perm> w =
      subsystem_conjugator(rs, a.roots, b.roots, o.bfs_cap);
  std::string body;
  if (o.format == "text") {
    body = type_name(a.components) + " vs " + type_name(b.components) +
           (w ? ": conjugate\n" : ": not conjugate\n");
  } else {
    json j;
    j["type"] = show_type(rs.type);
    j["a"] = pseudo_levi_json(rs, a);
    j["b"] = pseudo_levi_json(rs, b);
    j["conjugate"] = w.has_value();
    if (w) {
      json img = json::array();
      for (int r : a.pi_roots) img.push_back((*w)[r]);
      j["witness_images"] = root_coords_json(
          rs, [&] {
            RootSet s;
            for (int r : a.pi_roots) s.push_back((*w)[r]);
            return s;
          }());
    }
    body = j.dump(2) + "\n";
  }
  int rc = emit(o, body);
  return rc != 0 ? rc : (w ? 0 : 3);
}

int cmd_induce(const Options& o, const std::string& shape_str,
               const std::string& orbits_str, const std::string& tail_str) {
  CartanType ambient = parse_type(o.type);
  LeviShape shape;
  {
    std::stringstream in(shape_str);
    std::string gl, tail;
    std::getline(in, gl, '/');
    std::getline(in, tail, '/');
    for (int v : parse_nodes(gl)) shape.gl_blocks.push_back(v);
    if (!tail.empty()) shape.tail = parse_type(tail);
  }
  if (!shape_fits(shape, ambient))
    throw std::invalid_argument("shape does not fit the ambient type");
  std::vector<Partition> gl_orbs;
  {
    std::stringstream in(orbits_str);
    std::string tok;
    while (std::getline(in, tok, '+'))
      if (!tok.empty()) gl_orbs.push_back(parse_partition(tok));
  }
  std::optional<OrbitLabel> tail_orb;
  if (!tail_str.empty()) tail_orb = parse_orbit_label(tail_str);

  json j;
  j["ambient"] = show_type(ambient);
  j["gl_blocks"] = shape.gl_blocks;
  if (shape.tail) j["tail"] = show_type(*shape.tail);
  std::string induced;
  try {
    OrbitLabel lab = ls_induce(shape, gl_orbs, tail_orb, ambient);
    induced = show_orbit_label(lab);
    j["induced"] = induced;
    j["dim"] = orbit_dimension(lab);
  } catch (const guard_error&) {
    Partition p = ls_induce_partition(shape, gl_orbs, tail_orb, ambient);
    induced = show_partition(p) + " (very even, tag unresolved)";
    j["induced"] = induced;
  }
  std::string body = o.format == "text" ? induced + "\n" : j.dump(2) + "\n";
  return emit(o, body);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact local-geometry and classification computations for "
               "Jordan classes, sheets, and strata"};
  app.require_subcommand(1);

  Options o;
  bool sheets_only = false;
  std::vector<std::string> verify_types;
  std::string triple_spec, point_spec, nodes_str, a_str, b_str;
  std::string shape_str, orbits_str, tail_str;

  CLI::App* c_enum = app.add_subcommand(
      "enumerate", "Jordan classes / sheets of a classical ambient type");
  add_common(c_enum, o);
  c_enum->add_flag("--sheets-only", sheets_only, "keep only sheets");

  CLI::App* c_verify = app.add_subcommand(
      "verify-paper", "diff computed results against the frozen tables");
  add_common(c_verify, o, TypeOpt::none);
  c_verify->add_option("--type", verify_types,
                       "restrict to these types (default: A3, SL2..SL5, "
                       "G2, F4, E6, E7; E8 only on request)");

  CLI::App* c_local = app.add_subcommand(
      "local", "branch data of a class closure at a point");
  add_common(c_local, o);
  c_local->add_option("--triple", triple_spec, "nodes|x_s|orbits")->required();
  c_local->add_option("--point", point_spec, "x_r|labels")->required();

  CLI::App* c_codim1 = app.add_subcommand(
      "codim1", "codimension-one normality of semisimple quotients");
  add_common(c_codim1, o);
  c_codim1->add_option("--nodes", nodes_str,
                       "extended-base node set (default: every class)");

  CLI::App* c_conj = app.add_subcommand(
      "conjugate", "Weyl-conjugacy of two extended-base subsystems");
  add_common(c_conj, o);
  c_conj->add_option("--a", a_str, "first node set")->required();
  c_conj->add_option("--b", b_str, "second node set")->required();

  CLI::App* c_induce = app.add_subcommand(
      "induce", "orbit induction from a Levi shape");
  add_common(c_induce, o);
  c_induce->add_option("--shape", shape_str, "gl blocks '/' optional tail, e.g. 2,3/C2")
      ->required();
  c_induce->add_option("--orbits", orbits_str,
                       "'+'-separated partitions, one per gl block");
  c_induce->add_option("--tail-orbit", tail_str, "orbit label on the tail");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (c_enum->parsed()) return cmd_enumerate(o, sheets_only);
    if (c_verify->parsed()) return cmd_verify(o, verify_types);
    if (c_local->parsed()) return cmd_local(o, triple_spec, point_spec);
    if (c_codim1->parsed()) return cmd_codim1(o, nodes_str);
    if (c_conj->parsed()) return cmd_conjugate(o, a_str, b_str);
    if (c_induce->parsed())
      return cmd_induce(o, shape_str, orbits_str, tail_str);
  } catch (const guard_error& e) {
    std::cerr << "guard: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
