#include "strata/stratify.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>
#include <stdexcept>

namespace strata {

namespace {

bool ratvec_less(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

std::set<int> eps_support(const EpsModel& em, const RootSet& roots) {
  std::set<int> sup;
  for (int r : roots) {
    auto it = em.eps.find(r);
    if (it == em.eps.end())
      throw std::logic_error("root outside component model");
    for (int i = 0; i < em.dim; ++i)
      if (it->second[i] != 0) sup.insert(i);
  }
  return sup;
}

RatMat base_coord_matrix(const RootSystem& rs, const RootSet& base) {
  RatMat P((int)base.size(), rs.rank);
  for (int i = 0; i < (int)base.size(); ++i)
    for (int j = 0; j < rs.rank; ++j) P[i][j] = Rat(rs.roots[base[i]][j]);
  return P;
}

std::string key_of_canonical(const StratifyCtx& ctx, const JordanTriple& c) {
  const RootSystem& rs = *ctx.rs;
  std::ostringstream os;
  os << "P[";
  for (std::size_t i = 0; i < c.pl.nodes.size(); ++i)
    os << (i ? "," : "") << "a" << c.pl.nodes[i];
  os << "]|x[";
  RootSet base = base_of(rs, c.pl.roots);
  os << show_rat_vec(coset_canonical_key(rs, base, c.x_s));
  os << "]|";
  for (std::size_t i = 0; i < c.orbits.size(); ++i)
    os << (i ? "+" : "") << show_orbit_label(c.orbits[i]);
  return os.str();
}

}  // namespace

RootSet integral_subsystem(const RootSystem& rs, const RatVec& x) {
  RootSet out;
  for (int r = 0; r < rs.nroots(); ++r)
    if (is_integer(rs.eval(r, x))) out.push_back(r);
  return out;
}

GroupPoint make_group_point(const RootSystem& rs, const RatVec& x_r,
                            std::vector<OrbitLabel> unipotent) {
  if ((int)x_r.size() != rs.rank)
    throw std::invalid_argument("point dimension mismatch");
  auto comps = decompose(rs, integral_subsystem(rs, x_r));
  if (comps.size() != unipotent.size())
    throw std::invalid_argument(
        "one unipotent label per centralizer component required");
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (unipotent[i].ct != comps[i].ctype)
      throw std::invalid_argument("unipotent label type mismatch");
    validate_orbit_label(unipotent[i]);
  }
  return GroupPoint{x_r, std::move(unipotent)};
}

JordanTriple make_jordan_triple(const RootSystem& rs, const PseudoLevi& pl,
                                const RatVec& x_s,
                                std::vector<OrbitLabel> orbits) {
  if (!coset_admissible(rs, pl, x_s))
    throw std::invalid_argument("coset is not admissible for the pseudo-Levi");
  if (orbits.size() != pl.components.size())
    throw std::invalid_argument("one orbit label per component required");
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    if (orbits[i].ct != pl.components[i].ctype)
      throw std::invalid_argument("orbit label type mismatch");
    validate_orbit_label(orbits[i]);
  }
  return JordanTriple{pl, x_s, std::move(orbits)};
}

StratifyCtx make_stratify_ctx(const RootSystem& rs, std::size_t weyl_cap,
                              std::size_t bfs_cap) {
  StratifyCtx ctx;
  ctx.rs = &rs;
  ctx.W = full_weyl_group(rs, weyl_cap);
  const int n = rs.rank + 1;
  for (unsigned mask = 0; mask + 1 < (1u << n); ++mask) {
    std::vector<int> nodes;
    RootSet seed;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) {
        nodes.push_back(i);
        seed.push_back(rs.ext_base[i]);
      }
    RootSet key = positive_key(rs, closure_subsystem(rs, seed));
    auto it = ctx.base_realizations.find(key);
    if (it == ctx.base_realizations.end() || nodes < it->second)
      ctx.base_realizations[key] = nodes;
  }
  ctx.pls = enumerate_pseudo_levis(rs, bfs_cap);
  return ctx;
}

OrbitLabel transport_label(const RootSystem& rs, const Perm& w,
                           const Component& src, const OrbitLabel& lab,
                           const Component& dst) {
  if (lab.ct != src.ctype)
    throw std::invalid_argument("label does not match source component");
  if (src.ctype != dst.ctype)
    throw std::logic_error("component type changed under transport");
  if (lab.tag == VeTag::none) return OrbitLabel{dst.ctype, lab.partition, VeTag::none};

  const int k = dst.ctype.rank;
  std::vector<int> wsrc(k);
  for (int i = 0; i < k; ++i) wsrc[i] = w[src.nodes[i]];
  std::set<int> dstset(dst.nodes.begin(), dst.nodes.end());
  WeylGroupTable Wd = enumerate_group(rs, dst.nodes, kDefaultGroupCap, false);
  for (const Perm& u : Wd.elems) {
    std::vector<int> sigma(k, -1);
    bool aligned = true;
    for (int i = 0; i < k && aligned; ++i) {
      int im = u[wsrc[i]];
      auto pos = std::find(dst.nodes.begin(), dst.nodes.end(), im);
      if (pos == dst.nodes.end())
        aligned = false;
      else
        sigma[i] = (int)(pos - dst.nodes.begin());
    }
    if (!aligned) continue;
    bool fixed = true, swapped = true;
    for (int i = 0; i < k - 2; ++i)
      if (sigma[i] != i) fixed = swapped = false;
    if (sigma[k - 2] != k - 2 || sigma[k - 1] != k - 1) fixed = false;
    if (sigma[k - 2] != k - 1 || sigma[k - 1] != k - 2) swapped = false;
    if (!fixed && !swapped)
      throw std::logic_error("unsupported component symmetry");
    VeTag tag = lab.tag;
    if (swapped) tag = (tag == VeTag::I) ? VeTag::II : VeTag::I;
    return OrbitLabel{dst.ctype, lab.partition, tag};
  }
  throw std::logic_error("no base alignment found in component group");
}

namespace {

struct TripleCand {
  std::vector<int> nodes;
  RatVec ckey;
  std::vector<OrbitLabel> labs;
};

bool cand_less(const TripleCand& a, const TripleCand& b) {
  if (a.nodes != b.nodes) return a.nodes < b.nodes;
  if (ratvec_less(a.ckey, b.ckey)) return true;
  if (ratvec_less(b.ckey, a.ckey)) return false;
  return a.labs < b.labs;
}

}  // namespace

JordanTriple canonical_triple(const StratifyCtx& ctx, const JordanTriple& t) {
  const RootSystem& rs = *ctx.rs;
  if (t.pl.nodes.empty())
    return JordanTriple{t.pl, RatVec(rs.rank, Rat(0)), {}};

  std::optional<TripleCand> best;
  for (const Perm& w : ctx.W.elems) {
    RootSet img = apply_perm(w, t.pl.roots);
    RootSet key = positive_key(rs, img);
    auto it = ctx.base_realizations.find(key);
    if (it == ctx.base_realizations.end()) continue;
    const std::vector<int>& nodes = it->second;
    if (best && best->nodes < nodes) continue;

    RootSet base = base_of(rs, img);
    RatVec ckey = coset_canonical_key(rs, base, coweight_action(rs, w, t.x_s));
    auto dcomps = decompose(rs, img);
    std::vector<OrbitLabel> labs(dcomps.size());
    for (std::size_t i = 0; i < t.pl.components.size(); ++i) {
      RootSet ci = apply_perm(w, t.pl.components[i].roots);
      auto jt = std::find_if(dcomps.begin(), dcomps.end(),
                             [&](const Component& c) { return c.roots == ci; });
      if (jt == dcomps.end())
        throw std::logic_error("component image not found in decomposition");
      labs[jt - dcomps.begin()] =
          transport_label(rs, w, t.pl.components[i], t.orbits[i], *jt);
    }
    TripleCand cand{nodes, std::move(ckey), std::move(labs)};
    if (!best || cand_less(cand, *best)) best = std::move(cand);
  }
  if (!best) throw std::logic_error("no extended-base conjugate found");

  PseudoLevi pl = make_pseudo_levi(rs, best->nodes);
  RootSet base = base_of(rs, pl.roots);
  auto x = solve(base_coord_matrix(rs, base), best->ckey);
  if (!x) throw std::logic_error("canonical coset key is not representable");
  return make_jordan_triple(rs, pl, *x, best->labs);
}

std::string triple_key(const StratifyCtx& ctx, const JordanTriple& t) {
  return key_of_canonical(ctx, canonical_triple(ctx, t));
}

std::vector<JordanTriple> enumerate_jordan_classes(const StratifyCtx& ctx,
                                                   int rank_guard) {
  const RootSystem& rs = *ctx.rs;
  const char f = rs.type.family;
  if (f != 'A' && f != 'B' && f != 'C' && f != 'D')
    throw std::invalid_argument("classical ambient type required");
  if (rs.rank > rank_guard) throw guard_error("rank guard exceeded");

  std::map<std::string, JordanTriple> seen;
  for (const PseudoLevi& pl : ctx.pls) {
    std::vector<std::vector<OrbitLabel>> alts;
    for (const auto& c : pl.components) alts.push_back(all_orbit_labels(c.ctype));
    for (const RatVec& x : coset_reps(rs, pl)) {
      if (!coset_admissible(rs, pl, x)) continue;
      std::vector<std::size_t> idx(alts.size(), 0);
      for (;;) {
        std::vector<OrbitLabel> labs;
        labs.reserve(alts.size());
        for (std::size_t i = 0; i < alts.size(); ++i) labs.push_back(alts[i][idx[i]]);
        JordanTriple c =
            canonical_triple(ctx, make_jordan_triple(rs, pl, x, std::move(labs)));
        seen.emplace(key_of_canonical(ctx, c), std::move(c));
        std::size_t d = 0;
        while (d < idx.size() && ++idx[d] == alts[d].size()) idx[d++] = 0;
        if (d == idx.size()) break;
      }
    }
  }
  std::vector<JordanTriple> out;
  out.reserve(seen.size());
  for (auto& [k, v] : seen) out.push_back(std::move(v));
  return out;
}

std::vector<Partition> induce_into_partitions(
    const RootSystem& rs, const Perm& w, const JordanTriple& t,
    const RootSet& integral, const std::vector<Component>& comps) {
  const auto& scomps = t.pl.components;
  std::vector<std::vector<int>> members(comps.size());
  for (std::size_t i = 0; i < scomps.size(); ++i) {
    RootSet img = apply_perm(w, scomps[i].roots);
    for (int r : img)
      if (!std::binary_search(integral.begin(), integral.end(), r))
        throw std::logic_error("image is not inside the integral subsystem");
    int home = -1;
    for (std::size_t j = 0; j < comps.size(); ++j)
      if (std::binary_search(comps[j].roots.begin(), comps[j].roots.end(),
                             img[0])) {
        home = (int)j;
        break;
      }
    if (home < 0) throw std::logic_error("image component not covered");
    members[home].push_back((int)i);
  }

  std::vector<Partition> out(comps.size());
  for (std::size_t j = 0; j < comps.size(); ++j) {
    const Component& C = comps[j];
    const char fam = C.ctype.family;
    if (fam != 'A' && fam != 'B' && fam != 'C' && fam != 'D')
      throw std::invalid_argument("exceptional orbit data unsupported");
    EpsModel em = eps_model(rs, C);

    struct Entry {
      int src;
      std::set<int> sup;
      bool tail;
    };
    std::vector<Entry> entries;
    for (int i : members[j]) {
      RootSet img = apply_perm(w, scomps[i].roots);
      std::set<int> sup = eps_support(em, img);
      const CartanType sct = scomps[i].ctype;
      bool tail;
      if (sct.family == 'A') {
        tail = ((int)sup.size() != sct.rank + 1);
      } else if (sct.family == 'B' || sct.family == 'C' || sct.family == 'D') {
        tail = true;
      } else {
        throw std::invalid_argument("exceptional orbit data unsupported");
      }
      entries.push_back({i, std::move(sup), tail});
    }
    if (fam == 'D') {
      // a support-sharing pair of A1 factors is an so(4) tail, not two gl(2)
      for (std::size_t a = 0; a < entries.size(); ++a)
        for (std::size_t b = a + 1; b < entries.size(); ++b)
          if (!entries[a].tail && !entries[b].tail &&
              entries[a].sup == entries[b].sup)
            entries[a].tail = entries[b].tail = true;
    }

    LeviShape shape;
    std::vector<Partition> gl_orbs;
    std::set<int> used;
    std::set<int> tailsup;
    std::vector<const Entry*> tes;
    for (const Entry& e : entries) {
      if (e.tail) {
        tes.push_back(&e);
        tailsup.insert(e.sup.begin(), e.sup.end());
      }
    }
    for (const Entry& e : entries) {
      if (e.tail) continue;
      for (int c : e.sup)
        if (used.count(c) || tailsup.count(c))
          throw std::logic_error("overlapping Levi blocks");
      used.insert(e.sup.begin(), e.sup.end());
      shape.gl_blocks.push_back((int)e.sup.size());
      gl_orbs.push_back(t.orbits[e.src].partition);
    }
    const int m = (int)tailsup.size();
    int pad = em.dim - (int)used.size() - m;
    if (pad < 0) throw std::logic_error("component coordinates overcommitted");
    for (int c = 0; c < pad; ++c) {
      shape.gl_blocks.push_back(1);
      gl_orbs.push_back(Partition{1});
    }

    std::optional<OrbitLabel> tail_orb;
    if (!tes.empty()) {
      if (fam == 'A') throw std::logic_error("tail inside a gl component");
      Partition tp;
      if (tes.size() == 2) {
        if (fam != 'D' || m != 2) throw std::logic_error("tail recognition failed");
        const Partition& p = t.orbits[tes[0]->src].partition;
        const Partition& q = t.orbits[tes[1]->src].partition;
        const bool pr = p == Partition{2}, qr = q == Partition{2};
        if (pr && qr)
          tp = {3, 1};
        else if (!pr && !qr)
          tp = {1, 1, 1, 1};
        else
          tp = {2, 2};
      } else if (tes.size() == 1) {
        const Entry& e = *tes[0];
        const CartanType sct = scomps[e.src].ctype;
        const Partition& p = t.orbits[e.src].partition;
        if (sct.family == 'A') {
          if (fam == 'B' && sct.rank == 1 && m == 1) {
            tp = (p == Partition{2}) ? Partition{3} : Partition{1, 1, 1};
          } else if (fam == 'C' && sct.rank == 1 && m == 1) {
            tp = p;
          } else if (fam == 'D' && sct.rank == 3 && m == 3) {
            tp = wedge_square_jordan_type(p);
          } else {
            throw std::logic_error("tail recognition failed");
          }
        } else {
          if (sct.family != fam || sct.rank != m)
            throw std::logic_error("tail recognition failed");
          tp = p;
        }
      } else {
        throw std::logic_error("tail recognition failed");
      }
      CartanType tct{fam, m};
      VeTag ttag = very_even(tct, tp) ? VeTag::I : VeTag::none;
      tail_orb = OrbitLabel{tct, tp, ttag};
      shape.tail = tct;
    }
    out[j] = ls_induce_partition(shape, gl_orbs, tail_orb, C.ctype);
  }
  return out;
}

std::vector<OrbitLabel> induce_into(const RootSystem& rs, const Perm& w,
                                    const JordanTriple& t,
                                    const RootSet& integral,
                                    const std::vector<Component>& comps) {
  auto parts = induce_into_partitions(rs, w, t, integral, comps);
  std::vector<OrbitLabel> out;
  out.reserve(parts.size());
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (very_even(comps[j].ctype, parts[j]))
      throw guard_error("very-even ambiguity");
    out.push_back(OrbitLabel{comps[j].ctype, parts[j], VeTag::none});
  }
  return out;
}

namespace {

bool closure_query(const StratifyCtx& ctx, const JordanTriple& t,
                   const GroupPoint& p, bool regular, Perm* witness) {
  const RootSystem& rs = *ctx.rs;
  RootSet integral = integral_subsystem(rs, p.x_r);
  auto comps = decompose(rs, integral);
  if (comps.size() != p.unipotent.size())
    throw std::invalid_argument("point labels do not match its centralizer");
  for (std::size_t c = 0; c < comps.size(); ++c)
    if (p.unipotent[c].ct != comps[c].ctype)
      throw std::invalid_argument("point label type mismatch");

  IntegerLattice Q = rs.coroot_lattice();
  bool ambiguous = false;
  for (const Perm& w : ctx.W.elems) {
    RatVec y = coweight_action(rs, perm_inverse(w), p.x_r);
    if (!lattice_coset_membership(y - t.x_s, t.pl.center, Q)) continue;
    auto parts = induce_into_partitions(rs, w, t, integral, comps);
    bool ok = true;
    for (std::size_t c = 0; c < comps.size() && ok; ++c) {
      if (regular) {
        if (p.unipotent[c].partition != parts[c]) {
          ok = false;
        } else if (very_even(comps[c].ctype, parts[c])) {
          ambiguous = true;  // equal partitions but an unresolved tag
          ok = false;
        }
      } else {
        ok = dominance_leq(p.unipotent[c].partition, parts[c]);
      }
    }
    if (ok) {
      if (witness) *witness = w;
      return true;
    }
  }
  if (ambiguous) throw guard_error("very-even ambiguity");
  return false;
}

}  // namespace

bool closure_contains_point(const StratifyCtx& ctx, const JordanTriple& t,
                            const GroupPoint& p, Perm* witness) {
  return closure_query(ctx, t, p, false, witness);
}

bool regular_closure_contains(const StratifyCtx& ctx, const JordanTriple& t,
                              const GroupPoint& p, Perm* witness) {
  return closure_query(ctx, t, p, true, witness);
}

bool meets_unipotent(const RootSystem& rs, const JordanTriple& t) {
  if (!t.pl.is_levi_flag) return false;
  return lattice_coset_membership(t.x_s, t.pl.center, rs.coroot_lattice());
}

bool is_sheet(const JordanTriple& t) {
  for (const auto& o : t.orbits)
    if (!is_rigid(o)) return false;
  return true;
}

long long class_dim(const RootSystem& rs, const JordanTriple& t) {
  long long d = rs.rank - (long long)t.pl.nodes.size();  // dim Z(M)°
  d += rs.nroots() - (long long)t.pl.roots.size();       // codim of M in G
  for (const auto& o : t.orbits) d += orbit_dimension(o);
  return d;
}

GroupPoint generic_point_of(const StratifyCtx& ctx, const JordanTriple& t) {
  const RootSystem& rs = *ctx.rs;
  const auto& basis = t.pl.center.basis;
  if (basis.empty()) return make_group_point(rs, t.x_s, t.orbits);
  static const int primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29,
                               31, 37, 41, 43, 47, 53, 59, 61, 67, 71};
  for (int q : primes) {
    for (int mul = 1; mul <= 4; ++mul) {
      RatVec x = t.x_s;
      Int coef = 1;
      for (const auto& b : basis) {
        x = x + (Rat(coef) / Rat(q)) * b;
        coef *= mul + 1;
      }
      if (integral_subsystem(rs, x) == t.pl.roots)
        return make_group_point(rs, x, t.orbits);
    }
  }
  throw std::logic_error("no generic coset point found");
}

std::vector<IsolatedPoint> isolated_points_in_regular_closure(
    const StratifyCtx& ctx, const JordanTriple& t) {
  const RootSystem& rs = *ctx.rs;
  std::map<std::string, GroupPoint> acc;
  for (const PseudoLevi& pl : ctx.pls) {
    if ((int)pl.nodes.size() != rs.rank) continue;
    std::vector<std::vector<OrbitLabel>> alts;
    for (const auto& c : pl.components) alts.push_back(all_orbit_labels(c.ctype));
    for (const RatVec& x : isolated_cosets(rs, pl)) {
      std::vector<std::size_t> idx(alts.size(), 0);
      for (;;) {
        std::vector<OrbitLabel> labs;
        labs.reserve(alts.size());
        for (std::size_t i = 0; i < alts.size(); ++i) labs.push_back(alts[i][idx[i]]);
        GroupPoint p = make_group_point(rs, x, labs);
        if (regular_closure_contains(ctx, t, p)) {
          JordanTriple pt = make_jordan_triple(rs, pl, x, std::move(labs));
          acc.emplace(triple_key(ctx, pt), std::move(p));
        }
        std::size_t d = 0;
        while (d < idx.size() && ++idx[d] == alts[d].size()) idx[d++] = 0;
        if (d == idx.size()) break;
      }
    }
  }
  std::vector<IsolatedPoint> out;
  out.reserve(acc.size());
  for (auto& [k, p] : acc) out.push_back(IsolatedPoint{std::move(p), k});
  return out;
}

std::vector<Stratum> sln_strata(const StratifyCtx& ctx, int rank_guard) {
  const RootSystem& rs = *ctx.rs;
  if (rs.type.family != 'A')
    throw std::invalid_argument("special linear ambient required");
  auto classes = enumerate_jordan_classes(ctx, rank_guard);
  const int n = rs.rank + 1;
  RatVec z(rs.rank, Rat(0));
  z[0] = 1;  // a fundamental coweight generating the center mod coroots

  std::map<std::string, JordanTriple> sheets;
  for (auto& c : classes)
    if (is_sheet(c)) sheets.emplace(key_of_canonical(ctx, c), c);

  std::set<std::string> visited;
  std::vector<Stratum> out;
  for (const auto& [k, s] : sheets) {
    if (visited.count(k)) continue;
    std::map<std::string, JordanTriple> members;
    for (int j = 0; j < n; ++j) {
      JordanTriple tr =
          make_jordan_triple(rs, s.pl, s.x_s + Rat(j) * z, s.orbits);
      JordanTriple cc = canonical_triple(ctx, tr);
      std::string ck = key_of_canonical(ctx, cc);
      if (!sheets.count(ck))
        throw std::logic_error("central translate is not a sheet");
      members.emplace(std::move(ck), std::move(cc));
    }
    Stratum st;
    std::vector<std::set<std::string>> iso;
    for (auto& [mk, mc] : members) {
      visited.insert(mk);
      st.sheet_keys.push_back(mk);
      std::set<std::string> keys;
      for (auto& ip : isolated_points_in_regular_closure(ctx, mc))
        keys.insert(ip.class_key);
      iso.push_back(std::move(keys));
      st.sheets.push_back(std::move(mc));
    }
    for (std::size_t a = 0; a < iso.size(); ++a)
      for (std::size_t b = a + 1; b < iso.size(); ++b)
        for (const auto& ka : iso[a])
          if (iso[b].count(ka)) st.translates_disjoint_or_equal = false;
    out.push_back(std::move(st));
  }
  return out;
}

std::string show_triple(const StratifyCtx& ctx, const JordanTriple& t) {
  std::ostringstream os;
  os << show_pseudo_levi(*ctx.rs, t.pl) << " x=[" << show_rat_vec(t.x_s) << "]";
  if (!t.orbits.empty()) {
    os << " orbits=";
    for (std::size_t i = 0; i < t.orbits.size(); ++i)
      os << (i ? "+" : "") << show_orbit_label(t.orbits[i]);
  }
  return os.str();
}

}  // namespace strata
