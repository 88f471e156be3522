#include "strata/subsystem.hpp"

#include <algorithm>
#include <set>

namespace strata {

RootSet closure_subsystem(const RootSystem& rs, const RootSet& seed) {
  std::set<int> s;
  for (int r : seed) {
    s.insert(r);
    s.insert(rs.neg[r]);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(s.begin(), s.end());
    for (size_t i = 0; i < cur.size(); ++i)
      for (size_t j = i + 1; j < cur.size(); ++j) {
        IntVec sum = rs.roots[cur[i]];
        for (int k = 0; k < rs.rank; ++k) sum[k] += rs.roots[cur[j]][k];
        int idx = rs.index_of(sum);
        if (idx >= 0 && !s.count(idx)) {
          s.insert(idx);
          s.insert(rs.neg[idx]);
          grew = true;
        }
      }
  }
  return RootSet(s.begin(), s.end());
}

RootSet rational_span_subsystem(const RootSystem& rs, const RootSet& seed) {
  std::vector<RatVec> vecs;
  for (int r : seed) vecs.push_back(to_rat(rs.roots[r]));
  auto V = RationalSubspace::span(rs.rank, vecs);
  RootSet out;
  for (int i = 0; i < rs.nroots(); ++i)
    if (V.contains(to_rat(rs.roots[i]))) out.push_back(i);
  return out;
}

RootSet positive_part(const RootSystem& rs, const RootSet& s) {
  RootSet p;
  for (int r : s)
    if (rs.is_positive(r)) p.push_back(r);
  return p;
}

RootSet base_of(const RootSystem& rs, const RootSet& s) {
  RootSet pos = positive_part(rs, s);
  std::set<int> pset(pos.begin(), pos.end());
  RootSet base;
  for (int p : pos) {
    bool decomposable = false;
    for (int q : pos) {
      if (q == p) continue;
      IntVec diff = rs.roots[p];
      for (int k = 0; k < rs.rank; ++k) diff[k] -= rs.roots[q][k];
      int idx = rs.index_of(diff);
      if (idx >= 0 && pset.count(idx)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) base.push_back(p);
  }
  return base;
}

std::string Component::name() const {
  std::string s = show_type(ctype);
  // precomposed Ã (U+00C3), the same bytes the reference tables use
  if (short_marked) s.replace(0, 1, "Ã");
  return s;
}

namespace {

/* order the nodes of one connected base so the induced Cartan matrix equals
   cartan_matrix of the detected type */
std::pair<CartanType, std::vector<int>> classify(const RootSystem& rs,
                                                 const std::vector<int>& nodes) {
  int m = (int)nodes.size();
  auto bond = [&](int a, int b) {
    return (int)Int(rs.pairing(nodes[a], nodes[b]) * rs.pairing(nodes[b], nodes[a])).get_si();
  };
  std::vector<std::vector<int>> adj(m);
  int maxbond = 0;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (int w = bond(i, j); w > 0) {
        adj[i].push_back(j);
        adj[j].push_back(i);
        maxbond = std::max(maxbond, w);
      }
  auto longer = [&](int a, int b) { return rs.len2(nodes[a]) > rs.len2(nodes[b]); };

  CartanType ct;
  std::vector<int> order;
  if (m == 1) {
    ct = {'A', 1};
    order = {0};
  } else if (maxbond == 3) {
    if (m != 2) throw std::runtime_error("bad component: triple bond in rank > 2");
    ct = {'G', 2};
    order = longer(0, 1) ? std::vector<int>{1, 0} : std::vector<int>{0, 1};  // short first
  } else {
    // path or fork detection
    std::vector<int> deg(m);
    int fork = -1, nfork = 0;
    for (int i = 0; i < m; ++i) {
      deg[i] = (int)adj[i].size();
      if (deg[i] > 3) throw std::runtime_error("bad component: vertex degree > 3");
      if (deg[i] == 3) {
        fork = i;
        ++nfork;
      }
    }
    auto walk = [&](int start, int from) {
      std::vector<int> path{start};
      int prev = from, cur = start;
      for (;;) {
        int nxt = -1;
        for (int x : adj[cur])
          if (x != prev) nxt = x;
        if (nxt < 0) break;
        path.push_back(nxt);
        prev = cur;
        cur = nxt;
      }
      return path;
    };
    if (nfork == 0) {
      // path: find the two ends
      std::vector<int> ends;
      for (int i = 0; i < m; ++i)
        if (deg[i] == 1) ends.push_back(i);
      if (ends.size() != 2) throw std::runtime_error("bad component: not a tree");
      auto p1 = walk(ends[0], -1), p2 = walk(ends[1], -1);
      if (maxbond == 1) {
        ct = {'A', m};
        auto key = [&](const std::vector<int>& p) {
          std::vector<int> k;
          for (int x : p) k.push_back(nodes[x]);
          return k;
        };
        order = key(p1) < key(p2) ? p1 : p2;
      } else {
        Int lmax = 0;
        for (int i = 0; i < m; ++i) lmax = std::max(lmax, rs.len2(nodes[i]));
        int nlong = 0;
        for (int i = 0; i < m; ++i)
          if (rs.len2(nodes[i]) == lmax) ++nlong;
        int nshort = m - nlong;
        if (m == 2) {
          throw std::runtime_error("unreachable");  // handled by caller (B2/C2 naming)
        } else if (nshort == 1) {
          ct = {'B', m};
          order = rs.len2(nodes[p1[0]]) == lmax ? p1 : p2;  // long end first
        } else if (nlong == 1) {
          ct = {'C', m};
          order = rs.len2(nodes[p1[0]]) == lmax ? p2 : p1;  // short end first
        } else if (m == 4 && nlong == 2) {
          ct = {'F', 4};
          order = rs.len2(nodes[p1[0]]) == lmax ? p1 : p2;
        } else {
          throw std::runtime_error("bad component: unrecognized multiply-laced path");
        }
      }
    } else if (nfork == 1 && maxbond == 1) {
      std::vector<std::vector<int>> arms;
      for (int x : adj[fork]) arms.push_back(walk(x, fork));
      std::sort(arms.begin(), arms.end(), [&](auto& a, auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return nodes[a.back()] < nodes[b.back()];
      });
      size_t l1 = arms[0].size(), l2 = arms[1].size(), l3 = arms[2].size();
      if (l1 == 1 && l2 == 1) {
        ct = {'D', m};
        // alpha_1..alpha_{m-2} along the long arm, then the two fork leaves
        order.assign(arms[2].rbegin(), arms[2].rend());
        order.push_back(fork);
        int a = arms[0][0], b = arms[1][0];
        if (nodes[a] > nodes[b]) std::swap(a, b);
        order.push_back(a);
        order.push_back(b);
      } else if (l1 == 1 && l2 == 2 && (l3 >= 2 && l3 <= 4)) {
        ct = {'E', (int)(4 + l3)};
        // Bourbaki: node2 = short arm; (1,3) = middle arm outside-in; rest = long arm
        order = {arms[1][1], arms[0][0], arms[1][0], fork};
        for (int x : arms[2]) order.push_back(x);
      } else {
        throw std::runtime_error("bad component: unrecognized fork");
      }
    } else {
      throw std::runtime_error("bad component: shape not simple");
    }
  }
  return {ct, order};
}

}  // namespace

std::vector<Component> decompose(const RootSystem& rs, const RootSet& s) {
  RootSet base = base_of(rs, s);
  int m = (int)base.size();
  // connected components of the base under non-orthogonality
  std::vector<int> comp_id(m, -1);
  int nc = 0;
  for (int i = 0; i < m; ++i) {
    if (comp_id[i] >= 0) continue;
    std::vector<int> stack{i};
    comp_id[i] = nc;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (int b = 0; b < m; ++b)
        if (comp_id[b] < 0 && rs.pairing(base[a], base[b]) != 0) {
          comp_id[b] = nc;
          stack.push_back(b);
        }
    }
    ++nc;
  }
  std::vector<Component> comps(nc);
  for (int c = 0; c < nc; ++c) {
    std::vector<int> nodes;
    for (int i = 0; i < m; ++i)
      if (comp_id[i] == c) nodes.push_back(base[i]);
    Component comp;
    comp.roots = closure_subsystem(rs, nodes);
    if (nodes.size() == 2) {
      int b = (int)Int(rs.pairing(nodes[0], nodes[1]) * rs.pairing(nodes[1], nodes[0])).get_si();
      if (b == 2) {
        // B2 and C2 share a diagram; name by the ambient family
        bool cfam = rs.type.family == 'C';
        comp.ctype = {cfam ? 'C' : 'B', 2};
        bool first_long = rs.len2(nodes[0]) > rs.len2(nodes[1]);
        bool want_long_first = !cfam;  // B2: (long, short); C2: (short, long)
        comp.nodes = (first_long == want_long_first) ? std::vector<int>{nodes[0], nodes[1]}
                                                     : std::vector<int>{nodes[1], nodes[0]};
        comps[c] = comp;
        continue;
      }
    }
    auto [ct, order] = classify(rs, nodes);
    comp.ctype = ct;
    for (int i : order) comp.nodes.push_back(nodes[i]);
    comps[c] = comp;
  }
  for (auto& comp : comps) {
    // validate the ordered base against the standard Cartan matrix
    IntMat std_c = cartan_matrix(comp.ctype);
    int k = comp.ctype.rank;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (rs.pairing(comp.nodes[i], comp.nodes[j]) != std_c[i][j])
          throw std::runtime_error("component classification failed for " + show_type(comp.ctype));
    Int lmax = 0, lmin = -1;
    for (int r = 0; r < rs.nroots(); ++r) {
      lmax = std::max(lmax, rs.len2(r));
      lmin = lmin < 0 ? rs.len2(r) : std::min(lmin, rs.len2(r));
    }
    if (lmax != lmin) {
      bool all_short = true;
      for (int r : comp.roots)
        if (rs.len2(r) == lmax) all_short = false;
      comp.short_marked = all_short;
    }
  }
  std::sort(comps.begin(), comps.end(),
            [](const Component& a, const Component& b) { return a.roots < b.roots; });
  return comps;
}

TypeKey type_key(const std::vector<Component>& comps) {
  TypeKey k;
  for (auto& c : comps) k.push_back({c.ctype, c.short_marked});
  std::sort(k.begin(), k.end());
  return k;
}

std::string type_name(const std::vector<Component>& comps) {
  std::vector<std::pair<std::pair<int, std::string>, int>> counted;  // (sort key, name) -> count
  std::vector<std::pair<CartanType, bool>> k = type_key(comps);
  std::vector<std::string> names;
  for (auto& c : comps) names.push_back(c.name());
  std::sort(names.begin(), names.end());
  // display: rank descending, then name; collapse repeats as "kX"
  std::vector<std::pair<std::string, int>> uniq;
  for (auto& n : names) {
    if (!uniq.empty() && uniq.back().first == n)
      ++uniq.back().second;
    else
      uniq.push_back({n, 1});
  }
  std::stable_sort(uniq.begin(), uniq.end(), [](auto& a, auto& b) {
    auto rank_of = [](const std::string& s) { return std::stoi(s.substr(s.find_first_of("0123456789"))); };
    return rank_of(a.first) > rank_of(b.first);
  });
  std::string out;
  for (auto& [n, c] : uniq) {
    if (!out.empty()) out += "+";
    if (c > 1) out += std::to_string(c);
    out += n;
  }
  return out.empty() ? "1" : out;
}

IntVec base_coordinates(const RootSystem& rs, const std::vector<int>& base, int root) {
  RatMat M(rs.rank, (int)base.size());
  for (int j = 0; j < (int)base.size(); ++j)
    for (int i = 0; i < rs.rank; ++i) M[i][j] = rs.roots[base[j]][i];
  auto sol = solve(M, to_rat(rs.roots[root]));
  if (!sol) throw std::runtime_error("root not in span of base");
  IntVec c(base.size());
  for (size_t i = 0; i < base.size(); ++i) {
    if (!is_integer((*sol)[i])) throw std::runtime_error("root not in Z-span of base");
    c[i] = (*sol)[i].get_num();
  }
  return c;
}

EpsModel eps_model(const RootSystem& rs, const Component& comp) {
  EpsModel m;
  m.ct = comp.ctype;
  int k = comp.ctype.rank;
  char f = comp.ctype.family;
  if (f != 'A' && f != 'B' && f != 'C' && f != 'D')
    throw std::runtime_error("eps model: component not classical");
  m.dim = f == 'A' ? k + 1 : k;
  std::vector<IntVec> simple(k, IntVec(m.dim, 0));
  for (int i = 0; i < k; ++i) {
    if (i + 1 < m.dim) {
      simple[i][i] = 1;
      simple[i][i + 1] = -1;
    }
  }
  if (f == 'B') simple[k - 1][k - 1] = 1;
  if (f == 'C') simple[k - 1][k - 1] = 2;
  if (f == 'D') {
    simple[k - 1] = IntVec(m.dim, 0);
    simple[k - 1][k - 2] = 1;
    simple[k - 1][k - 1] = 1;
  }
  for (int r : comp.roots) {
    IntVec c = base_coordinates(rs, comp.nodes, r);
    IntVec e(m.dim, 0);
    for (int i = 0; i < k; ++i)
      for (int d = 0; d < m.dim; ++d) e[d] += c[i] * simple[i][d];
    m.eps[r] = e;
  }
  return m;
}

}  // namespace strata
