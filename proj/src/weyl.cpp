#include "strata/weyl.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace strata {

Perm perm_identity(int nroots) {
  Perm p(nroots);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
  assert(a.size() == b.size());
  Perm c(a.size());
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
  return c;
}

Perm perm_inverse(const Perm& a) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[a[i]] = static_cast<std::uint16_t>(i);
  return c;
}

Perm reflection_perm(const RootSystem& rs, int a) {
  Perm p(rs.nroots());
  for (int b = 0; b < rs.nroots(); ++b)
    p[b] = static_cast<std::uint16_t>(rs.reflect_root(a, b));
  return p;
}

RootSet apply_perm(const Perm& w, const RootSet& s) {
  RootSet out;
  out.reserve(s.size());
  for (int r : s) out.push_back(w[r]);
  std::sort(out.begin(), out.end());
  return out;
}

RootSet positive_key(const RootSystem& rs, const RootSet& s) {
  RootSet out;
  out.reserve(s.size());
  for (int r : s) out.push_back(rs.pos_rep(r));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

RatVec coweight_action(const RootSystem& rs, const Perm& w, const RatVec& x) {
  Perm winv = perm_inverse(w);
  RatVec out(rs.rank);
  for (int i = 0; i < rs.rank; ++i)
    out[i] = rs.eval(winv[rs.simple_idx[i]], x);
  return out;
}

int WeylGroupTable::index_of(const Perm& p) const {
  auto it = index.find(p);
  return it == index.end() ? -1 : it->second;
}

namespace {

std::vector<int> normalize_gen_roots(const RootSystem& rs,
                                     std::vector<int> gen_roots) {
  for (int& r : gen_roots) r = rs.pos_rep(r);
  std::sort(gen_roots.begin(), gen_roots.end());
  gen_roots.erase(std::unique(gen_roots.begin(), gen_roots.end()),
                  gen_roots.end());
  return gen_roots;
}

}  // namespace

WeylGroupTable enumerate_group(const RootSystem& rs, std::vector<int> gen_roots,
                               std::size_t cap, bool parallel) {
  WeylGroupTable W;
  W.gen_roots = normalize_gen_roots(rs, gen_roots);
  if (W.gen_roots.size() > 255)
    throw std::logic_error("too many generators for word encoding");
  for (int r : W.gen_roots) W.gens.push_back(reflection_perm(rs, r));

  const int ng = static_cast<int>(W.gens.size());
  W.elems.push_back(perm_identity(rs.nroots()));
  W.words.push_back({});
  W.index.emplace(W.elems[0], 0);

  std::vector<int> level{0};
  std::vector<Perm> cand;
  while (!level.empty()) {
    const std::size_t n = level.size() * ng;
    cand.assign(n, Perm{});
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel && n > 256)
#endif
    for (std::ptrdiff_t t = 0; t < static_cast<std::ptrdiff_t>(n); ++t) {
      const int e = level[t / ng];
      const int g = static_cast<int>(t % ng);
      cand[t] = perm_compose(W.elems[e], W.gens[g]);
    }
    (void)parallel;
    std::vector<int> next;
    for (std::size_t t = 0; t < n; ++t) {
      auto [it, fresh] = W.index.emplace(cand[t], static_cast<int>(W.elems.size()));
      if (!fresh) continue;
      if (W.elems.size() >= cap) throw guard_error("group exceeds cap");
      Word word = W.words[level[t / ng]];
      word.push_back(static_cast<std::uint8_t>(t % ng));
      W.elems.push_back(std::move(cand[t]));
      W.words.push_back(std::move(word));
      next.push_back(it->second);
    }
    level = std::move(next);
  }
  return W;
}

WeylGroupTable full_weyl_group(const RootSystem& rs, std::size_t cap,
                               bool parallel) {
  return enumerate_group(rs, rs.simple_idx, cap, parallel);
}

std::vector<Perm> setwise_stabilizer(const WeylGroupTable& W,
                                     const RootSet& roots) {
  RootSet s = roots;
  std::sort(s.begin(), s.end());
  std::vector<Perm> out;
  for (const Perm& w : W.elems)
    if (apply_perm(w, s) == s) out.push_back(w);
  return out;
}

namespace {

struct OrbitNode {
  int parent = -1;
  int gen = -1;
};

// Level-synchronous walk over subsystem keys.  Records parent links so a
// witness word can be rebuilt when a target is reached.
struct OrbitWalk {
  std::vector<RootSet> states;
  std::vector<OrbitNode> nodes;
  bool hit = false;
  int hit_state = -1;
};

OrbitWalk orbit_walk(const RootSystem& rs, const RootSet& start,
                     const std::set<RootSet>& targets, std::size_t cap,
                     bool parallel) {
  OrbitWalk walk;
  std::vector<Perm> gens;
  for (int i = 0; i < rs.rank; ++i)
    gens.push_back(reflection_perm(rs, rs.simple_idx[i]));
  const int ng = static_cast<int>(gens.size());

  std::map<RootSet, int> seen;
  RootSet k0 = positive_key(rs, start);
  walk.states.push_back(k0);
  walk.nodes.push_back({});
  seen.emplace(std::move(k0), 0);
  if (targets.count(walk.states[0])) {
    walk.hit = true;
    walk.hit_state = 0;
    return walk;
  }

  std::vector<int> level{0};
  std::vector<RootSet> cand;
  while (!level.empty()) {
    const std::size_t n = level.size() * ng;
    cand.assign(n, RootSet{});
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel && n > 64)
#endif
    for (std::ptrdiff_t t = 0; t < static_cast<std::ptrdiff_t>(n); ++t) {
      const RootSet& s = walk.states[level[t / ng]];
      const Perm& g = gens[t % ng];
      RootSet img;
      img.reserve(s.size());
      for (int r : s) img.push_back(rs.pos_rep(g[r]));
      std::sort(img.begin(), img.end());
      cand[t] = std::move(img);
    }
    (void)parallel;
    std::vector<int> next;
    for (std::size_t t = 0; t < n; ++t) {
      auto [it, fresh] = seen.emplace(cand[t], static_cast<int>(walk.states.size()));
      if (!fresh) continue;
      if (walk.states.size() >= cap) throw guard_error("orbit exceeds cap");
      walk.states.push_back(std::move(cand[t]));
      walk.nodes.push_back({level[t / ng], static_cast<int>(t % ng)});
      next.push_back(it->second);
      if (targets.count(walk.states.back())) {
        walk.hit = true;
        walk.hit_state = it->second;
        return walk;
      }
    }
    level = std::move(next);
  }
  return walk;
}

}  // namespace

OrbitScan subsystem_orbit_scan(const RootSystem& rs, const RootSet& start,
                               const std::set<RootSet>& targets,
                               std::size_t cap, bool parallel) {
  OrbitWalk walk = orbit_walk(rs, start, targets, cap, parallel);
  OrbitScan scan;
  scan.hit = walk.hit;
  scan.orbit_size = walk.states.size();
  if (walk.hit) scan.hit_key = walk.states[walk.hit_state];
  return scan;
}

std::optional<Perm> subsystem_conjugator(const RootSystem& rs,
                                         const RootSet& a, const RootSet& b,
                                         std::size_t cap) {
  RootSet kb = positive_key(rs, b);
  OrbitWalk walk = orbit_walk(rs, a, {kb}, cap, true);
  if (!walk.hit) return std::nullopt;

  std::vector<int> ups;
  for (int s = walk.hit_state; walk.nodes[s].parent >= 0; s = walk.nodes[s].parent)
    ups.push_back(walk.nodes[s].gen);
  Perm w = perm_identity(rs.nroots());
  for (auto it = ups.rbegin(); it != ups.rend(); ++it)
    w = perm_compose(reflection_perm(rs, rs.simple_idx[*it]), w);
  assert(positive_key(rs, apply_perm(w, positive_key(rs, a))) == kb);
  return w;
}

bool subsystems_conjugate(const RootSystem& rs, const RootSet& a,
                          const RootSet& b, std::size_t cap) {
  RootSet ka = positive_key(rs, a), kb = positive_key(rs, b);
  if (ka == kb) return true;
  return subsystem_orbit_scan(rs, ka, {kb}, cap, true).hit;
}

namespace {

struct Dsu {
  std::vector<int> up;
  explicit Dsu(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
  int find(int x) {
    while (up[x] != x) x = up[x] = up[up[x]];
    return x;
  }
  void join(int a, int b) { up[find(a)] = find(b); }
};

}  // namespace

std::vector<std::size_t> double_coset_reps(const std::vector<Perm>& mid,
                                           const std::vector<Perm>& left_gens,
                                           const std::vector<Perm>& right_gens) {
  std::vector<std::size_t> out;
  if (mid.empty()) return out;
  std::map<Perm, int> pos;
  for (std::size_t i = 0; i < mid.size(); ++i)
    pos.emplace(mid[i], static_cast<int>(i));
  Dsu dsu(static_cast<int>(mid.size()));
  for (std::size_t i = 0; i < mid.size(); ++i) {
    for (const Perm& g : left_gens) {
      auto it = pos.find(perm_compose(g, mid[i]));
      if (it == pos.end())
        throw std::logic_error("double coset instability: left action leaves set");
      dsu.join(static_cast<int>(i), it->second);
    }
    for (const Perm& g : right_gens) {
      auto it = pos.find(perm_compose(mid[i], g));
      if (it == pos.end())
        throw std::logic_error("double coset instability: right action leaves set");
      dsu.join(static_cast<int>(i), it->second);
    }
  }
  std::map<int, std::size_t> first;
  for (std::size_t i = 0; i < mid.size(); ++i)
    first.emplace(dsu.find(static_cast<int>(i)), i);
  for (const auto& [root, i] : first) out.push_back(i);
  std::sort(out.begin(), out.end());
  return out;
}

int double_coset_count(const std::vector<Perm>& mid,
                       const std::vector<Perm>& left_gens,
                       const std::vector<Perm>& right_gens) {
  return static_cast<int>(double_coset_reps(mid, left_gens, right_gens).size());
}

}  // namespace strata
