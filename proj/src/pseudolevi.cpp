#include "strata/pseudolevi.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace strata {

namespace {

IntMat base_matrix(const RootSystem& rs, const RootSet& pi_base) {
  IntMat P(static_cast<int>(pi_base.size()), rs.rank);
  for (std::size_t i = 0; i < pi_base.size(); ++i)
    P[static_cast<int>(i)] = rs.roots[pi_base[i]];
  return P;
}

IntMat coroot_image(const RootSystem& rs, const RootSet& pi_base) {
  return mul(base_matrix(rs, pi_base), rs.cartan);
}

RatMat inverse_unimodular(const IntMat& U) {
  const int n = U.rows;
  RatMat inv(n, n);
  RatMat A = to_rat(U);
  for (int j = 0; j < n; ++j) {
    RatVec e(n, 0);
    e[j] = 1;
    auto col = solve(A, e);
    assert(col);
    for (int i = 0; i < n; ++i) inv[i][j] = (*col)[i];
  }
  return inv;
}

}  // namespace

PseudoLevi make_pseudo_levi(const RootSystem& rs, std::vector<int> nodes) {
  std::sort(nodes.begin(), nodes.end());
  if (std::unique(nodes.begin(), nodes.end()) != nodes.end())
    throw std::invalid_argument("repeated extended-base node");
  for (int v : nodes)
    if (v < 0 || v > rs.rank)
      throw std::invalid_argument("extended-base node out of range");

  PseudoLevi pl;
  pl.nodes = nodes;
  for (int v : nodes) pl.pi_roots.push_back(rs.ext_base[v]);
  std::sort(pl.pi_roots.begin(), pl.pi_roots.end());

  RatMat M(static_cast<int>(pl.pi_roots.size()), rs.rank);
  for (std::size_t i = 0; i < pl.pi_roots.size(); ++i)
    for (int j = 0; j < rs.rank; ++j)
      M[static_cast<int>(i)][j] = Rat(rs.roots[pl.pi_roots[i]][j]);
  if (rank(M) != static_cast<int>(pl.pi_roots.size()))
    throw std::invalid_argument("extended-base subset must be independent");

  pl.roots = closure_subsystem(rs, pl.pi_roots);
  pl.components = decompose(rs, pl.roots);
  pl.center = rs.center_subspace(pl.pi_roots);
  pl.component_group = center_component_group(rs, pl.pi_roots);
  pl.is_levi_flag = is_levi_subsystem(rs, pl.roots);
  return pl;
}

bool is_levi_subsystem(const RootSystem& rs, const RootSet& roots) {
  return rational_span_subsystem(rs, roots) == roots;
}

std::vector<Int> center_component_group(const RootSystem& rs,
                                        const RootSet& pi_base) {
  if (pi_base.empty()) return {};
  Smith s = smith_normal_form(coroot_image(rs, pi_base));
  std::vector<Int> factors;
  for (int i = 0; i < static_cast<int>(pi_base.size()); ++i) {
    assert(s.D[i][i] != 0);
    if (s.D[i][i] > 1) factors.push_back(s.D[i][i]);
  }
  return factors;
}

bool coset_admissible(const RootSystem& rs, const PseudoLevi& pl,
                      const RatVec& x_s) {
  for (int r : pl.pi_roots)
    if (!is_integer(rs.eval(r, x_s)))
      throw std::invalid_argument("x_s not centralized by G_Pi");
  for (int r : rational_span_subsystem(rs, pl.pi_roots)) {
    if (std::binary_search(pl.roots.begin(), pl.roots.end(), r)) continue;
    if (is_integer(rs.eval(r, x_s))) return false;
  }
  return true;
}

RatVec coset_canonical_key(const RootSystem& rs, const RootSet& pi_base,
                           const RatVec& x_s) {
  if (pi_base.empty()) return {};
  const IntMat P = base_matrix(rs, pi_base);
  RatVec y(P.rows, 0);
  for (int i = 0; i < P.rows; ++i) {
    for (int j = 0; j < rs.rank; ++j) y[i] += Rat(P[i][j]) * x_s[j];
    if (!is_integer(y[i]))
      throw std::invalid_argument("x_s not centralized by G_Pi");
  }
  return reduce_mod_lattice(y, IntegerLattice{coroot_image(rs, pi_base)});
}

std::vector<RatVec> coset_reps(const RootSystem& rs, const PseudoLevi& pl) {
  const int k = static_cast<int>(pl.pi_roots.size());
  if (k == 0) return {RatVec(rs.rank, 0)};
  const IntMat PC = coroot_image(rs, pl.pi_roots);
  Smith s = smith_normal_form(PC);
  RatMat uinv = inverse_unimodular(s.U);
  RatMat P = to_rat(base_matrix(rs, pl.pi_roots));

  std::vector<Int> d(k);
  for (int i = 0; i < k; ++i) d[i] = s.D[i][i];

  std::vector<RatVec> out;
  std::vector<Int> t(k, 0);
  for (;;) {
    RatVec y(k, 0);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) y[i] += uinv[i][j] * Rat(t[j]);
    auto x = solve(P, y);
    assert(x);
    out.push_back(*x);
    int pos = k - 1;
    while (pos >= 0 && t[pos] + 1 == d[pos]) t[pos--] = 0;
    if (pos < 0) break;
    ++t[pos];
  }
  return out;
}

std::vector<RatVec> isolated_cosets(const RootSystem& rs,
                                    const PseudoLevi& pl) {
  if (static_cast<int>(pl.nodes.size()) != rs.rank)
    throw std::invalid_argument("not full rank: infinitely many cosets");
  std::vector<std::pair<RatVec, RatVec>> keyed;  // (key, representative)
  RatMat P = to_rat(base_matrix(rs, pl.pi_roots));
  for (const RatVec& x : coset_reps(rs, pl)) {
    if (!coset_admissible(rs, pl, x)) continue;
    RatVec key = coset_canonical_key(rs, pl.pi_roots, x);
    auto rep = solve(P, key);
    assert(rep);
    keyed.push_back({key, *rep});
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<RatVec> out;
  for (auto& [key, rep] : keyed) out.push_back(rep);
  return out;
}

std::vector<PseudoLevi> enumerate_pseudo_levis(const RootSystem& rs,
                                               std::size_t bfs_cap) {
  const int n = rs.rank + 1;
  std::vector<std::vector<int>> subsets;
  for (int size = 0; size < n; ++size) {
    std::vector<int> pick;
    auto rec = [&](auto&& self, int from) -> void {
      if (static_cast<int>(pick.size()) == size) {
        subsets.push_back(pick);
        return;
      }
      for (int v = from; v < n; ++v) {
        pick.push_back(v);
        self(self, v + 1);
        pick.pop_back();
      }
    };
    rec(rec, 0);
  }

  std::map<RootSet, std::vector<int>> key_to_subsets;
  std::vector<RootSet> keys(subsets.size());
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    RootSet base;
    for (int v : subsets[i]) base.push_back(rs.ext_base[v]);
    keys[i] = positive_key(rs, closure_subsystem(rs, base));
    key_to_subsets[keys[i]].push_back(static_cast<int>(i));
  }

  std::vector<PseudoLevi> out;
  std::set<RootSet> assigned;
  std::size_t done = 0;
  for (std::size_t i = 0; i < subsets.size(); ++i, ++done) {
    if (assigned.count(keys[i])) continue;
    // full orbit walk: every extended-base realization of this class shows up
    std::set<RootSet> targets;
    for (auto& [key, list] : key_to_subsets)
      if (!assigned.count(key) && key != keys[i]) targets.insert(key);
    std::set<RootSet> seen{keys[i]};
    std::vector<RootSet> level{keys[i]};
    assigned.insert(keys[i]);
    std::vector<Perm> gens;
    for (int g = 0; g < rs.rank; ++g)
      gens.push_back(reflection_perm(rs, rs.simple_idx[g]));
    while (!level.empty()) {
      std::vector<RootSet> next;
      for (const RootSet& st : level) {
        for (const Perm& g : gens) {
          RootSet img;
          img.reserve(st.size());
          for (int r : st) img.push_back(rs.pos_rep(g[r]));
          std::sort(img.begin(), img.end());
          if (seen.insert(img).second) {
            if (seen.size() > bfs_cap)
              throw guard_error("orbit exceeds cap (" +
                                std::to_string(out.size()) +
                                " classes complete)");
            if (targets.count(img)) assigned.insert(img);
            next.push_back(std::move(img));
          }
        }
      }
      level = std::move(next);
    }
    out.push_back(make_pseudo_levi(rs, subsets[i]));
  }
  return out;
}

std::string show_pseudo_levi(const RootSystem& rs, const PseudoLevi& pl) {
  std::string s = show_type(rs.type) + ":{";
  for (std::size_t i = 0; i < pl.nodes.size(); ++i) {
    if (i) s += ",";
    s += "a" + std::to_string(pl.nodes[i]);
  }
  return s + "}";
}

}  // namespace strata
