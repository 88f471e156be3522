#include "strata/verify.hpp"

#include <set>
#include <sstream>

namespace strata {

CheckResult check_codim1_table(const CartanType& t, std::size_t cap) {
  CheckResult res{"codim1 " + show_type(t), "pass", ""};
  RootSystem rs = build_root_system(t);
  std::vector<PseudoLevi> pls;
  try {
    pls = enumerate_pseudo_levis(rs, cap);
  } catch (const guard_error&) {
    res.status = "skipped(cap)";
    res.detail = "class enumeration exceeds cap";
    return res;
  }
  std::vector<const PseudoLevi*> scope;
  for (const auto& pl : pls)
    if (!pl.nodes.empty() && static_cast<int>(pl.nodes.size()) < rs.rank)
      scope.push_back(&pl);

  std::set<RootSet> targets;
  std::map<RootSet, const PseudoLevi*> by_key;
  for (const PseudoLevi* pl : scope) {
    RootSet key = positive_key(rs, pl->roots);
    targets.insert(key);
    by_key.emplace(std::move(key), pl);
  }

  std::set<const PseudoLevi*> expected;
  for (const NodeSetEntry& e : codim1_expected(t)) {
    PseudoLevi fpl = make_pseudo_levi(rs, e.nodes);
    RootSet start = positive_key(rs, fpl.roots);
    const PseudoLevi* cls = nullptr;
    if (auto it = by_key.find(start); it != by_key.end()) {
      cls = it->second;
    } else {
      try {
        OrbitScan sc = subsystem_orbit_scan(rs, start, targets, cap);
        if (sc.hit) cls = by_key.at(sc.hit_key);
      } catch (const guard_error&) {
        res.status = "skipped(cap)";
        res.detail = "class lookup exceeds cap for " + e.label;
        return res;
      }
    }
    if (!cls) {
      res.status = "fail";
      res.detail = "table entry " + e.label + " matches no class";
      return res;
    }
    expected.insert(cls);
  }

  std::ostringstream diff;
  for (const PseudoLevi* pl : scope) {
    bool computed;
    try {
      computed = codim1_normal(rs, *pl, cap);
    } catch (const guard_error&) {
      res.status = "skipped(cap)";
      res.detail = "wall walk exceeds cap at " + show_pseudo_levi(rs, *pl);
      return res;
    }
    if (computed && !expected.count(pl))
      diff << " +" << show_pseudo_levi(rs, *pl);
    if (!computed && expected.count(pl))
      diff << " -" << show_pseudo_levi(rs, *pl);
  }
  std::string d = diff.str();
  if (!d.empty()) {
    res.status = "fail";
    res.detail = "computed class set differs from frozen table:" + d;
  } else {
    res.detail = std::to_string(expected.size()) + " classes";
  }
  return res;
}

CheckResult check_local_counts(std::size_t weyl_cap) {
  const LocalCountExample& ex = local_count_example();
  CheckResult res{"local counts A3", "pass", ""};
  RootSystem rs = build_root_system({'A', 3});
  StratifyCtx ctx = make_stratify_ctx(rs, weyl_cap);
  JordanTriple t =
      make_jordan_triple(rs, make_pseudo_levi(rs, ex.levi_nodes), ex.x_s,
                         {parse_orbit_label(ex.orbit)});
  std::vector<OrbitLabel> labs;
  for (const std::string& s : ex.unipotent) labs.push_back(parse_orbit_label(s));
  GroupPoint p = make_group_point(rs, ex.x_r, std::move(labs));
  int cr = local_branch_count_semisimple(ctx, t, ex.x_r);
  int crv = local_branch_count(ctx, t, p);
  std::ostringstream d;
  d << "count(r)=" << cr << " count(rv)=" << crv;
  res.detail = d.str();
  if (cr != ex.count_semisimple || crv != ex.count) res.status = "fail";
  return res;
}

CheckResult check_sln(int n, std::size_t weyl_cap) {
  CheckResult res{"SL" + std::to_string(n) + " sheets+strata", "pass", ""};
  RootSystem rs = build_root_system({'A', n - 1});
  StratifyCtx ctx = make_stratify_ctx(rs, weyl_cap);
  std::vector<Stratum> strata;
  try {
    strata = sln_strata(ctx, n - 1);
  } catch (const guard_error&) {
    res.status = "skipped(cap)";
    res.detail = "enumeration exceeds cap";
    return res;
  }
  std::size_t sheets = 0;
  for (const Stratum& st : strata) {
    if (!st.translates_disjoint_or_equal) {
      res.status = "fail";
      res.detail = "stratum with overlapping distinct translates: " +
                   st.sheet_keys.front();
      return res;
    }
    for (const JordanTriple& t : st.sheets) {
      ++sheets;
      SmoothReport rep = sheet_smooth_classical(ctx, t);
      if (!rep.smooth) {
        res.status = "fail";
        res.detail = "non-smooth sheet " + triple_key(ctx, t);
        return res;
      }
    }
  }
  std::ostringstream d;
  d << sheets << " sheets, " << strata.size() << " strata";
  res.detail = d.str();
  return res;
}

}  // namespace strata
