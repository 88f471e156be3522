#include "strata/localgeom.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>

namespace strata {

namespace {

std::vector<Perm> base_reflections(const RootSystem& rs,
                                   const RootSet& subsystem) {
  std::vector<Perm> gens;
  for (int a : base_of(rs, subsystem)) gens.push_back(reflection_perm(rs, a));
  return gens;
}

int count_at(const StratifyCtx& ctx, const JordanTriple& t,
             const GroupPoint& p, const std::vector<Perm>& wtau) {
  std::vector<Perm> mid = w_tau_rv(ctx, t, p);
  if (mid.empty()) return 0;
  RootSet integral = integral_subsystem(*ctx.rs, p.x_r);
  return double_coset_count(mid, base_reflections(*ctx.rs, integral), wtau);
}

/* W-orbit of the coset x0 + V(phi0) + Q^vee, walked without enumerating W.
   States are keyed by (image subsystem, canonical coset key); w[i] carries a
   group element realizing state i, rep[i] a point of its coset. */
struct TranslateOrbit {
  std::vector<Perm> w;
  std::vector<RatVec> rep;
  std::map<std::pair<RootSet, RatVec>, int> index;
};

/* A point with the pairings prescribed by a canonical coset key; it lies in
   the coset the key was computed from. */
RatVec point_with_pairings(const RootSystem& rs, const RootSet& base,
                           const RatVec& key) {
  RatMat P(static_cast<int>(base.size()), rs.rank);
  for (std::size_t r = 0; r < base.size(); ++r)
    for (int j = 0; j < rs.rank; ++j)
      P[static_cast<int>(r)][j] = Rat(rs.roots[base[r]][j]);
  auto x = solve(P, key);
  if (!x) throw std::logic_error("coset key has no realizing point");
  return *x;
}

TranslateOrbit translate_orbit(const RootSystem& rs, const RootSet& phi0,
                               const RatVec& x0, std::size_t cap) {
  TranslateOrbit orb;
  std::vector<Perm> gens;
  gens.reserve(rs.rank);
  for (int i = 0; i < rs.rank; ++i)
    gens.push_back(reflection_perm(rs, rs.simple_idx[i]));
  auto add = [&](Perm w, const RatVec& x) {
    RootSet phi = apply_perm(w, phi0);
    RootSet base = base_of(rs, phi);
    RatVec key = coset_canonical_key(rs, base, x);
    auto [it, fresh] = orb.index.try_emplace(
        {std::move(phi), std::move(key)}, static_cast<int>(orb.w.size()));
    if (!fresh) return;
    if (orb.w.size() >= cap) throw guard_error("orbit exceeds cap");
    orb.rep.push_back(point_with_pairings(rs, base, it->first.second));
    orb.w.push_back(std::move(w));
  };
  add(perm_identity(rs.nroots()), x0);
  for (std::size_t head = 0; head < orb.w.size(); ++head)
    for (const Perm& g : gens)
      add(perm_compose(g, orb.w[head]), coweight_action(rs, g, orb.rep[head]));
  return orb;
}

/* Local picture transverse to a codim-1 wall of the quotient: the image of
   the transverse line in t/W(wall) is a curve cut out by the wall group's
   invariants.  Its local semigroup is generated by the degrees of the
   invariants that survive on the line; 2 always survives (the norm), so the
   curve is smooth iff every odd-degree invariant dies, i.e. iff the wall
   group identifies the transverse direction with its negative. */
bool wall_transverse_symmetric(const RootSystem& rs, const RootSet& pi_base,
                               const RootSet& wall) {
  RootSet rbase = base_of(rs, wall);
  const int k = static_cast<int>(rbase.size());
  auto coroot_vec = [&](int a) {
    RatVec v(rs.rank);
    for (int i = 0; i < rs.rank; ++i)
      v[i] = Rat(rs.pairing(rs.simple_idx[i], a));
    return v;
  };
  RatMat M(static_cast<int>(pi_base.size()), k);
  for (std::size_t r = 0; r < pi_base.size(); ++r)
    for (int c = 0; c < k; ++c)
      M[static_cast<int>(r)][c] = Rat(rs.pairing(pi_base[r], rbase[c]));
  std::vector<RatVec> ker = kernel_basis(M);
  if (ker.size() != 1)
    throw std::logic_error("wall transverse direction not unique");
  RatVec us(rs.rank, Rat(0));
  for (int c = 0; c < k; ++c) us = us + ker[0][c] * coroot_vec(rbase[c]);
  RatVec neg = Rat(-1) * us;
  std::vector<Perm> gens;
  for (int a : rbase) gens.push_back(reflection_perm(rs, a));
  std::set<RatVec> seen{us};
  std::vector<RatVec> queue{us};
  while (!queue.empty()) {
    RatVec v = std::move(queue.back());
    queue.pop_back();
    for (const Perm& g : gens) {
      RatVec img = coweight_action(rs, g, v);
      if (img == neg) return true;
      if (seen.insert(img).second) queue.push_back(std::move(img));
    }
  }
  return false;
}

}  // namespace

std::vector<Perm> stab_coset(const StratifyCtx& ctx, const JordanTriple& t) {
  const RootSystem& rs = *ctx.rs;
  RationalSubspace V = rs.center_subspace(t.pl.pi_roots);
  IntegerLattice Qv = rs.coroot_lattice();
  std::vector<Perm> out;
  for (const Perm& w : ctx.W.elems) {
    bool keeps_v = true;
    for (const RatVec& b : V.basis)
      if (!V.contains(coweight_action(rs, w, b))) {
        keeps_v = false;
        break;
      }
    if (!keeps_v) continue;
    if (lattice_coset_membership(coweight_action(rs, w, t.x_s) - t.x_s, V, Qv))
      out.push_back(w);
  }
  return out;
}

std::vector<Perm> w_stab_tau(const StratifyCtx& ctx, const JordanTriple& t) {
  const RootSystem& rs = *ctx.rs;
  const auto& comps = t.pl.components;
  std::vector<Perm> out;
  for (const Perm& w : stab_coset(ctx, t)) {
    std::vector<OrbitLabel> moved(comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i) {
      RootSet img = apply_perm(w, comps[i].roots);
      std::size_t j = 0;
      while (j < comps.size() && comps[j].roots != img) ++j;
      if (j == comps.size())
        throw std::logic_error("coset stabilizer moved the subsystem");
      moved[j] = transport_label(rs, w, comps[i], t.orbits[i], comps[j]);
    }
    if (moved == t.orbits) out.push_back(w);
  }
  return out;
}

std::vector<Perm> w_tau_r(const StratifyCtx& ctx, const JordanTriple& t,
                          const RatVec& x_r) {
  const RootSystem& rs = *ctx.rs;
  RationalSubspace V = rs.center_subspace(t.pl.pi_roots);
  IntegerLattice Qv = rs.coroot_lattice();
  std::vector<Perm> out;
  for (const Perm& w : ctx.W.elems) {
    RatVec d = coweight_action(rs, perm_inverse(w), x_r) - t.x_s;
    if (lattice_coset_membership(d, V, Qv)) out.push_back(w);
  }
  return out;
}

std::vector<Perm> w_tau_rv(const StratifyCtx& ctx, const JordanTriple& t,
                           const GroupPoint& p) {
  const RootSystem& rs = *ctx.rs;
  RootSet integral = integral_subsystem(rs, p.x_r);
  auto comps = decompose(rs, integral);
  if (comps.size() != p.unipotent.size())
    throw std::invalid_argument("point labels do not match the integral subsystem");
  std::vector<Perm> out;
  for (const Perm& w : w_tau_r(ctx, t, p.x_r)) {
    auto ind = induce_into_partitions(rs, w, t, integral, comps);
    bool below = true;
    for (std::size_t c = 0; c < comps.size() && below; ++c)
      below = dominance_leq(p.unipotent[c].partition, ind[c]);
    if (below) out.push_back(w);
  }
  return out;
}

int local_branch_count_semisimple(const StratifyCtx& ctx,
                                  const JordanTriple& t, const RatVec& x_r) {
  std::vector<Perm> mid = w_tau_r(ctx, t, x_r);
  if (mid.empty()) return 0;
  RootSet integral = integral_subsystem(*ctx.rs, x_r);
  return double_coset_count(mid, base_reflections(*ctx.rs, integral),
                            w_stab_tau(ctx, t));
}

int local_branch_count(const StratifyCtx& ctx, const JordanTriple& t,
                       const GroupPoint& p) {
  return count_at(ctx, t, p, w_stab_tau(ctx, t));
}

LocalModel local_model(const StratifyCtx& ctx, const JordanTriple& t,
                       const GroupPoint& p) {
  const RootSystem& rs = *ctx.rs;
  LocalModel m;
  m.x_r = p.x_r;
  RootSet integral = integral_subsystem(rs, p.x_r);
  m.pi_r = base_of(rs, integral);
  std::vector<Perm> mid = w_tau_rv(ctx, t, p);
  if (mid.empty()) return m;
  auto reps = double_coset_reps(mid, base_reflections(rs, integral),
                                w_stab_tau(ctx, t));
  m.count = static_cast<int>(reps.size());
  const auto& comps = t.pl.components;
  for (std::size_t ri : reps) {
    const Perm& w = mid[ri];
    LocalBranch b;
    RootSet img = apply_perm(w, t.pl.roots);
    b.levi_base = base_of(rs, img);
    b.x = coset_canonical_key(rs, b.levi_base, coweight_action(rs, w, t.x_s));
    auto dst = decompose(rs, img);
    b.labels.resize(dst.size());
    for (std::size_t i = 0; i < comps.size(); ++i) {
      RootSet ci = apply_perm(w, comps[i].roots);
      std::size_t j = 0;
      while (j < dst.size() && dst[j].roots != ci) ++j;
      if (j == dst.size())
        throw std::logic_error("component image lost under transport");
      b.labels[j] = transport_label(rs, w, comps[i], t.orbits[i], dst[j]);
    }
    int wi = ctx.W.index_of(w);
    if (wi >= 0) b.witness_word = ctx.W.words[wi];
    m.branches.push_back(std::move(b));
  }
  return m;
}

bool quotient_unibranch_at(const StratifyCtx& ctx, const JordanTriple& t,
                           const RatVec& x_r) {
  if (stab_coset(ctx, t) != w_stab_tau(ctx, t))
    throw std::runtime_error(
        "orbit not characteristic: unibranch criterion inapplicable");
  return local_branch_count_semisimple(ctx, t, x_r) == 1;
}

bool reflection_group_test(const RootSystem& rs, const RootSet& pi_r_roots,
                           const RootSet& pi_prime_roots, std::size_t cap) {
  RootSet phir = closure_subsystem(rs, pi_r_roots);
  RootSet phip = closure_subsystem(rs, pi_prime_roots);
  if (!std::includes(phir.begin(), phir.end(), phip.begin(), phip.end()))
    throw std::invalid_argument("subsystem does not lie in the ambient one");
  RationalSubspace V = rs.center_subspace(base_of(rs, phip));
  const int k = V.dim();
  if (k == 0) return true;
  RootSet base = base_of(rs, phir);
  if (base.empty()) return true;

  RatMat B(rs.rank, k);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < rs.rank; ++i) B[i][j] = V.basis[j][i];

  WeylGroupTable Wr = enumerate_group(rs, base, cap, false);
  auto flat = [k](const RatMat& R) {
    std::vector<Rat> key;
    key.reserve(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) key.push_back(R[i][j]);
    return key;
  };

  std::set<std::vector<Rat>> seen;
  std::vector<RatMat> restricted;
  for (const Perm& w : Wr.elems) {
    RatMat R(k, k);
    bool stab = true;
    for (int j = 0; j < k && stab; ++j) {
      RatVec img = coweight_action(rs, w, V.basis[j]);
      if (!V.contains(img)) {
        stab = false;
        break;
      }
      auto c = solve(B, img);
      if (!c) throw std::logic_error("restriction coordinates unsolvable");
      for (int i = 0; i < k; ++i) R[i][j] = (*c)[i];
    }
    if (!stab) continue;
    if (seen.insert(flat(R)).second) restricted.push_back(R);
  }

  std::vector<RatMat> refl;
  for (const RatMat& R : restricted) {
    RatMat D = R;
    for (int i = 0; i < k; ++i) D[i][i] -= 1;
    if (rank(D) == 1) refl.push_back(R);
  }

  RatMat id(k, k);
  for (int i = 0; i < k; ++i) id[i][i] = 1;
  std::set<std::vector<Rat>> reached;
  std::vector<RatMat> queue{id};
  reached.insert(flat(id));
  while (!queue.empty()) {
    RatMat m = std::move(queue.back());
    queue.pop_back();
    for (const RatMat& r : refl) {
      RatMat p = mul(m, r);
      if (reached.insert(flat(p)).second) queue.push_back(p);
    }
  }
  return reached.size() == seen.size();
}

bool codim1_normal(const RootSystem& rs, const PseudoLevi& pl,
                   std::size_t cap) {
  const int m = static_cast<int>(pl.nodes.size());
  if (m == 0) return true;
  const RationalSubspace V = rs.center_subspace(pl.pi_roots);
  const int corank = static_cast<int>(V.basis.size());
  if (corank == 0) return true;
  const IntegerLattice Qv = rs.coroot_lattice();
  static const long kPrimes[] = {5,  7,  11, 13, 17, 19, 23, 29,
                                 31, 37, 41, 43, 47, 53, 59, 61};
  constexpr std::size_t kNPrimes = sizeof(kPrimes) / sizeof(kPrimes[0]);

  // coroot-lattice directions lying in V: these translate the coset onto
  // itself, so wall levels only matter modulo their pairings
  std::vector<IntVec> lam;  // coefficients in the simple-coroot basis
  {
    RatMat A(m, rs.rank);
    for (std::size_t r = 0; r < pl.pi_roots.size(); ++r)
      for (int j = 0; j < rs.rank; ++j)
        A[static_cast<int>(r)][j] =
            Rat(rs.pairing(pl.pi_roots[r], rs.simple_idx[j]));
    for (const RatVec& c : kernel_basis(A)) {
      Int den(1);
      for (const Rat& e : c) den = lcm(den, e.get_den());
      IntVec q(rs.rank);
      for (int j = 0; j < rs.rank; ++j) q[j] = Rat(Rat(den) * c[j]).get_num();
      lam.push_back(std::move(q));
    }
  }

  for (const RatVec& xs : coset_reps(rs, pl)) {
    if (!coset_admissible(rs, pl, xs)) continue;

    // codim-1 strata of the quotient through this coset: a generic point per
    // (root, integer level) face, deduplicated by (subsystem, coset) keys
    std::map<std::pair<RootSet, RatVec>, std::pair<RootSet, RatVec>> strata;
    for (int a = rs.npos(); a < rs.nroots(); ++a) {
      int jv = -1;
      for (int j = 0; j < corank; ++j)
        if (rs.eval(a, V.basis[j]) != 0) {
          jv = j;
          break;
        }
      if (jv < 0) continue;  // constant on the coset, no wall
      Int d(0);
      for (const IntVec& q : lam) {
        Int s(0);
        for (int j = 0; j < rs.rank; ++j)
          s += q[j] * rs.pairing(a, rs.simple_idx[j]);
        d = gcd(d, s);
      }
      if (d == 0) throw std::logic_error("wall has no period on the coset");
      RatMat BM(1, corank);
      for (int j = 0; j < corank; ++j) BM[0][j] = rs.eval(a, V.basis[j]);
      std::vector<RatVec> vb;
      for (const RatVec& c : kernel_basis(BM)) {
        RatVec u(rs.rank, Rat(0));
        for (int j = 0; j < corank; ++j) u = u + c[j] * V.basis[j];
        vb.push_back(u);
      }
      for (long mm = 0; mm < d.get_si(); ++mm) {
        Rat shift = (Rat(mm) - rs.eval(a, xs)) / rs.eval(a, V.basis[jv]);
        RatVec x1 = xs + shift * V.basis[jv];
        RootSet wall;
        RatVec xr;
        bool generic = false;
        for (std::size_t at = 0; at + vb.size() <= kNPrimes && !generic;
             ++at) {
          xr = x1;
          for (std::size_t k = 0; k < vb.size(); ++k)
            xr = xr + Rat(1, kPrimes[at + k]) * vb[k];
          wall = integral_subsystem(rs, xr);
          generic = static_cast<int>(base_of(rs, wall).size()) == m + 1;
        }
        if (!generic)
          throw std::logic_error("no generic point found on a quotient wall");
        strata.try_emplace({positive_key(rs, wall),
                            coset_canonical_key(rs, base_of(rs, wall), xr)},
                           wall, xr);
      }
    }

    std::set<RootSet> walls_seen;
    for (const auto& [key, st] : strata) {
      if (!walls_seen.insert(key.first).second) continue;
      if (!wall_transverse_symmetric(rs, pl.pi_roots, st.first)) return false;
    }

    TranslateOrbit orb;
    try {
      orb = translate_orbit(rs, pl.roots, xs, cap);
    } catch (const guard_error&) {
      throw guard_error("coset translate orbit cap exceeded at " +
                        show_pseudo_levi(rs, pl));
    }
    const std::size_t n = orb.w.size();
    for (const auto& [key, st] : strata) {
      const RootSet& wall = st.first;
      const RatVec& xr = st.second;
      std::vector<char> member(n, 0);
      for (std::size_t i = 0; i < n; ++i) {
        RatVec y = coweight_action(rs, perm_inverse(orb.w[i]), xr);
        member[i] = lattice_coset_membership(y - xs, V, Qv) ? 1 : 0;
      }
      if (!member[0]) throw std::logic_error("wall lost its own coset");
      std::vector<int> up(n);
      for (std::size_t i = 0; i < n; ++i) up[i] = static_cast<int>(i);
      auto find = [&](int i) {
        while (up[i] != i) i = up[i] = up[up[i]];
        return i;
      };
      std::vector<Perm> gens = base_reflections(rs, wall);
      for (std::size_t i = 0; i < n; ++i) {
        if (!member[i]) continue;
        for (const Perm& g : gens) {
          RootSet phi = apply_perm(perm_compose(g, orb.w[i]), pl.roots);
          RatVec xi = coweight_action(rs, g, orb.rep[i]);
          auto it = orb.index.find(
              {phi, coset_canonical_key(rs, base_of(rs, phi), xi)});
          if (it == orb.index.end() || !member[it->second])
            throw std::logic_error(
                "wall members not closed under local reflections");
          int r1 = find(static_cast<int>(i)), r2 = find(it->second);
          if (r1 != r2) up[r1] = r2;
        }
      }
      int classes = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (member[i] && find(static_cast<int>(i)) == static_cast<int>(i))
          ++classes;
      if (classes != 1) return false;
    }
  }
  return true;
}

SmoothReport sheet_smooth_classical(const StratifyCtx& ctx,
                                    const JordanTriple& t) {
  const RootSystem& rs = *ctx.rs;
  const char f = rs.type.family;
  if (f != 'A' && f != 'B' && f != 'C' && f != 'D')
    throw std::invalid_argument("classical ambient type required");
  if (!is_sheet(t)) throw std::invalid_argument("sheet required");
  SmoothReport rep;
  std::vector<Perm> wtau = w_stab_tau(ctx, t);
  for (const IsolatedPoint& ip : isolated_points_in_regular_closure(ctx, t)) {
    ++rep.isolated_checked;
    int c = count_at(ctx, t, ip.point, wtau);
    if (c != 1) {
      rep.smooth = false;
      rep.witnesses.push_back({ip.point, ip.class_key, c});
    }
  }
  return rep;
}

LieModel unipotent_lie_model(const RootSystem& rs, const JordanTriple& t) {
  if (!meets_unipotent(rs, t))
    throw std::runtime_error("class closure misses the unipotent variety");
  return LieModel{t.pl.pi_roots, type_name(t.pl.components), t.orbits};
}

}  // namespace strata
