#include "strata/rootsystem.hpp"

#include <algorithm>
#include <set>

namespace strata {

CartanType parse_type(const std::string& s) {
  if (s.size() < 2) throw std::runtime_error("unknown Cartan type: " + s);
  CartanType t;
  t.family = s[0];
  try {
    size_t used = 0;
    t.rank = std::stoi(s.substr(1), &used);
    if (used != s.size() - 1) throw std::exception();
  } catch (...) {
    throw std::runtime_error("unknown Cartan type: " + s);
  }
  bool ok = (t.family == 'A' && t.rank >= 1) || (t.family == 'B' && t.rank >= 2) ||
            (t.family == 'C' && t.rank >= 2) || (t.family == 'D' && t.rank >= 4) ||
            (t.family == 'E' && t.rank >= 6 && t.rank <= 8) ||
            (t.family == 'F' && t.rank == 4) || (t.family == 'G' && t.rank == 2);
  if (!ok) throw std::runtime_error("unknown Cartan type: " + s);
  return t;
}

std::string show_type(const CartanType& t) { return t.family + std::to_string(t.rank); }

IntMat cartan_matrix(const CartanType& t) {
  int n = t.rank;
  IntMat c(n, n);
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto edge = [&](int i, int j) { c[i][j] = c[j][i] = -1; };  // 1-based args below
  auto chain = [&](int a, int b) {
    for (int i = a; i < b; ++i) edge(i - 1, i);
  };
  switch (t.family) {
    case 'A':
      chain(1, n);
      break;
    case 'B':
      chain(1, n - 1);
      c[n - 2][n - 1] = -2;  // <alpha_{n-1}, alpha_n^vee>
      c[n - 1][n - 2] = -1;
      break;
    case 'C':
      chain(1, n - 1);
      c[n - 2][n - 1] = -1;
      c[n - 1][n - 2] = -2;
      break;
    case 'D':
      chain(1, n - 1);
      edge(n - 3, n - 1);
      break;
    case 'E':
      edge(0, 2);
      edge(2, 3);
      edge(1, 3);
      chain(4, n);
      edge(3, 4);
      break;
    case 'F':
      edge(0, 1);
      edge(2, 3);
      c[1][2] = -2;
      c[2][1] = -1;
      break;
    case 'G':
      c[0][1] = -1;
      c[1][0] = -3;
      break;
  }
  return c;
}

namespace {

int height(const IntVec& v) {
  Int h = 0;
  for (auto& x : v) h += x;
  return (int)h.get_si();
}

IntVec negate(const IntVec& v) {
  IntVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
  return r;
}

bool root_less(const IntVec& a, const IntVec& b) {
  int ha = height(a), hb = height(b);
  if (ha != hb) return ha < hb;
  return a < b;
}

}  // namespace

RootSystem build_root_system(const CartanType& t) {
  RootSystem rs;
  rs.type = t;
  rs.rank = t.rank;
  rs.cartan = cartan_matrix(t);
  int n = t.rank;

  // symmetrizers: sym[i]*cartan[j][i] = sym[j]*cartan[i][j], scaled to integers
  {
    RatVec d(n, 0);
    d[0] = 1;
    std::vector<int> todo{0};
    while (!todo.empty()) {
      int i = todo.back();
      todo.pop_back();
      for (int j = 0; j < n; ++j)
        if (j != i && rs.cartan[i][j] != 0 && d[j] == 0) {
          d[j] = d[i] * Rat(rs.cartan[j][i]) / Rat(rs.cartan[i][j]);
          todo.push_back(j);
        }
    }
    Int l = 1;
    for (auto& q : d) {
      if (q == 0) throw std::runtime_error("disconnected Cartan matrix");
      l = lcm(l, q.get_den());
    }
    IntVec s(n);
    Int g = 0;
    for (int i = 0; i < n; ++i) {
      s[i] = Rat(Rat(l) * d[i]).get_num();
      g = gcd(g, s[i]);
    }
    for (auto& x : s) x /= g;
    rs.sym = s;
  }
  rs.form = IntMat(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      rs.form[i][j] = rs.sym[j] * rs.cartan[i][j];
      if (i > j && rs.form[i][j] != rs.form[j][i]) throw std::runtime_error("form not symmetric");
    }

  // close the simple roots under simple reflections
  std::set<IntVec> seen;
  std::vector<IntVec> queue;
  for (int i = 0; i < n; ++i) {
    IntVec a(n, 0);
    a[i] = 1;
    seen.insert(a);
    seen.insert(negate(a));
    queue.push_back(a);
    queue.push_back(negate(a));
  }
  while (!queue.empty()) {
    IntVec b = queue.back();
    queue.pop_back();
    for (int j = 0; j < n; ++j) {
      Int p = 0;  // <b, alpha_j^vee>
      for (int k = 0; k < n; ++k) p += b[k] * rs.cartan[k][j];
      IntVec c = b;
      c[j] -= p;
      if (seen.insert(c).second) queue.push_back(c);
    }
  }
  rs.roots.assign(seen.begin(), seen.end());
  std::sort(rs.roots.begin(), rs.roots.end(), root_less);
  for (int i = 0; i < (int)rs.roots.size(); ++i) rs.idx_[rs.roots[i]] = i;

  int N = rs.nroots();
  rs.neg.resize(N);
  for (int i = 0; i < N; ++i) rs.neg[i] = rs.idx_.at(negate(rs.roots[i]));
  for (int i = 0; i < N / 2; ++i)
    if (height(rs.roots[i]) >= 0 || height(rs.roots[N / 2 + i]) <= 0)
      throw std::runtime_error("root order broken");

  rs.simple_idx.resize(n);
  for (int i = 0; i < n; ++i) {
    IntVec a(n, 0);
    a[i] = 1;
    rs.simple_idx[i] = rs.idx_.at(a);
  }

  rs.highest = N - 1;
  for (int i = 0; i < N; ++i)
    for (int k = 0; k < n; ++k)
      if (rs.roots[rs.highest][k] < rs.roots[i][k])
        throw std::runtime_error("highest root not dominant-maximal");
  rs.ext_base.resize(n + 1);
  rs.ext_base[0] = rs.neg[rs.highest];
  for (int i = 0; i < n; ++i) rs.ext_base[i + 1] = rs.simple_idx[i];

  for (int i = 0; i < N; ++i) rs.maxlen2_ = std::max(rs.maxlen2_, rs.len2(i));

  // coroot coordinates: for gamma = sum c_j alpha_j,
  // gamma^vee = sum c_j (sym[j]/d_gamma) alpha_j^vee with d_gamma = (gamma,gamma)/2
  rs.coroot.resize(N);
  for (int i = 0; i < N; ++i) {
    Rat dg = Rat(rs.len2(i)) / 2;
    IntVec cr(n);
    for (int j = 0; j < n; ++j) {
      Rat c = Rat(rs.roots[i][j]) * Rat(rs.sym[j]) / dg;
      if (!is_integer(c)) throw std::runtime_error("coroot coordinates not integral");
      cr[j] = c.get_num();
    }
    rs.coroot[i] = cr;
  }
  return rs;
}

int RootSystem::index_of(const IntVec& coords) const {
  auto it = idx_.find(coords);
  return it == idx_.end() ? -1 : it->second;
}

Int RootSystem::len2(int idx) const {
  const IntVec& r = roots[idx];
  Int s = 0;
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) s += r[i] * form[i][j] * r[j];
  return s;
}

bool RootSystem::is_long(int idx) const { return len2(idx) == maxlen2_; }

Int RootSystem::pairing(int b, int a) const {
  // <beta, alpha^vee> = beta . coroot(alpha) in the mixed coordinate pairing
  Int s = 0;
  const IntVec& bc = roots[b];
  const IntVec& ac = coroot[a];
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) s += bc[i] * cartan[i][j] * ac[j];
  // cartan[i][j] = <alpha_i, alpha_j^vee>; coroot coords are in the alpha^vee basis,
  // so <beta, alpha^vee> = sum_j ac[j] <beta, alpha_j^vee>
  return s;
}

Rat RootSystem::eval(int root, const RatVec& x) const {
  if ((int)x.size() != rank) throw std::runtime_error("eval: dim mismatch");
  Rat s = 0;
  for (int i = 0; i < rank; ++i)
    if (roots[root][i] != 0) s += Rat(roots[root][i]) * x[i];
  return s;
}

int RootSystem::reflect_root(int a, int b) const {
  Int p = pairing(b, a);
  IntVec c = roots[b];
  for (int i = 0; i < rank; ++i) c[i] -= p * roots[a][i];
  int idx = index_of(c);
  if (idx < 0) throw std::runtime_error("reflection left the root system");
  return idx;
}

IntegerLattice RootSystem::coroot_lattice() const { return IntegerLattice{cartan}; }

RationalSubspace RootSystem::center_subspace(const std::vector<int>& pi_roots) const {
  RatMat M((int)pi_roots.size(), rank);
  for (size_t i = 0; i < pi_roots.size(); ++i)
    for (int j = 0; j < rank; ++j) M[(int)i][j] = roots[pi_roots[i]][j];
  auto ker = kernel_basis(M);
  RationalSubspace V;
  V.ambient = rank;
  V.basis = ker;
  return V;
}

}  // namespace strata
