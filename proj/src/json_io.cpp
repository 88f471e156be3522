#include "strata/json_io.hpp"

#include <sstream>

namespace strata {

namespace {

std::string coords_str(const RootSystem& rs, int root) {
  std::string s;
  for (int j = 0; j < rs.rank; ++j) {
    if (j) s += ',';
    s += rs.roots[root][j].get_str();
  }
  return s;
}

json labels_json(const std::vector<OrbitLabel>& labs) {
  json a = json::array();
  for (const auto& o : labs) a.push_back(show_orbit_label(o));
  return a;
}

json word_json(const Word& w) {
  json a = json::array();
  for (auto g : w) a.push_back(static_cast<int>(g));
  return a;
}

}  // namespace

json root_coords_json(const RootSystem& rs, const RootSet& roots) {
  json a = json::array();
  for (int r : roots) a.push_back(coords_str(rs, r));
  return a;
}

json pseudo_levi_json(const RootSystem& rs, const PseudoLevi& pl) {
  json j;
  j["nodes"] = pl.nodes;
  j["type"] = type_name(pl.components);
  j["levi"] = pl.is_levi_flag;
  json cg = json::array();
  for (const Int& d : pl.component_group) cg.push_back(d.get_str());
  j["component_group"] = cg;
  j["base"] = root_coords_json(rs, pl.pi_roots);
  return j;
}

json jordan_triple_json(const StratifyCtx& ctx, const JordanTriple& t) {
  const RootSystem& rs = *ctx.rs;
  json j;
  j["key"] = triple_key(ctx, t);
  j["nodes"] = t.pl.nodes;
  j["type"] = type_name(t.pl.components);
  j["levi"] = t.pl.is_levi_flag;
  j["coset"] = show_rat_vec(coset_canonical_key(rs, t.pl.pi_roots, t.x_s));
  j["orbits"] = labels_json(t.orbits);
  j["dim"] = class_dim(rs, t);
  j["sheet"] = is_sheet(t);
  return j;
}

json group_point_json(const RootSystem& rs, const GroupPoint& p) {
  json j;
  j["x"] = show_rat_vec(p.x_r);
  j["unipotent"] = labels_json(p.unipotent);
  return j;
}

json local_model_json(const StratifyCtx& ctx, const LocalModel& m) {
  const RootSystem& rs = *ctx.rs;
  json j;
  j["point"] = show_rat_vec(m.x_r);
  j["centralizer_pi"] = root_coords_json(rs, m.pi_r);
  j["count"] = m.count;
  json br = json::array();
  json ws = json::array();
  for (const LocalBranch& b : m.branches) {
    json one;
    one["levi_base"] = root_coords_json(rs, b.levi_base);
    one["coset"] = show_rat_vec(b.x);
    one["orbits"] = labels_json(b.labels);
    br.push_back(std::move(one));
    ws.push_back(word_json(b.witness_word));
  }
  j["branches"] = std::move(br);
  j["witnesses"] = std::move(ws);
  return j;
}

json stratum_json(const StratifyCtx& ctx, const Stratum& s) {
  json j;
  j["sheet_keys"] = s.sheet_keys;
  j["translates_disjoint_or_equal"] = s.translates_disjoint_or_equal;
  json tr = json::array();
  for (const JordanTriple& t : s.sheets) tr.push_back(jordan_triple_json(ctx, t));
  j["sheets"] = std::move(tr);
  return j;
}

json smooth_report_json(const RootSystem& rs, const SmoothReport& r) {
  json j;
  j["smooth"] = r.smooth;
  j["isolated_checked"] = r.isolated_checked;
  json ws = json::array();
  for (const SmoothWitness& w : r.witnesses) {
    json one;
    one["point"] = group_point_json(rs, w.point);
    one["class_key"] = w.class_key;
    one["count"] = w.count;
    ws.push_back(std::move(one));
  }
  j["witnesses"] = std::move(ws);
  return j;
}

std::string classes_tsv(const StratifyCtx& ctx,
                        const std::vector<JordanTriple>& classes) {
  const RootSystem& rs = *ctx.rs;
  std::ostringstream out;
  out << "key\ttype\tnodes\tcoset\torbits\tdim\tsheet\n";
  for (const JordanTriple& t : classes) {
    out << triple_key(ctx, t) << '\t' << type_name(t.pl.components) << '\t';
    for (std::size_t i = 0; i < t.pl.nodes.size(); ++i)
      out << (i ? "," : "") << t.pl.nodes[i];
    out << '\t' << show_rat_vec(coset_canonical_key(rs, t.pl.pi_roots, t.x_s))
        << '\t';
    for (std::size_t i = 0; i < t.orbits.size(); ++i)
      out << (i ? "+" : "") << show_orbit_label(t.orbits[i]);
    out << '\t' << class_dim(rs, t) << '\t' << (is_sheet(t) ? 1 : 0) << '\n';
  }
  return out.str();
}

std::string classes_text(const StratifyCtx& ctx,
                         const std::vector<JordanTriple>& classes) {
  std::ostringstream out;
  for (const JordanTriple& t : classes)
    out << show_triple(ctx, t) << (is_sheet(t) ? "  [sheet]" : "") << '\n';
  return out.str();
}

std::string closure_matrix_tsv(const StratifyCtx& ctx,
                               const std::vector<JordanTriple>& classes,
                               bool regular) {
  std::ostringstream out;
  out << "key";
  for (const JordanTriple& t : classes) out << '\t' << triple_key(ctx, t);
  out << '\n';
  for (const JordanTriple& ti : classes) {
    out << triple_key(ctx, ti);
    for (const JordanTriple& tj : classes) {
      GroupPoint p = generic_point_of(ctx, tj);
      bool in = regular ? regular_closure_contains(ctx, ti, p)
                        : closure_contains_point(ctx, ti, p);
      out << '\t' << (in ? 1 : 0);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace strata
