#include "strata/lattice.hpp"

namespace strata {

bool IntegerLattice::contains(const RatVec& x) const {
  if ((int)x.size() != gens.rows) throw std::runtime_error("lattice: dim mismatch");
  Smith s = smith_normal_form(gens);
  RatVec ux = mul(to_rat(s.U), x);
  int k = std::min(gens.rows, gens.cols);
  for (int i = 0; i < gens.rows; ++i) {
    Int d = i < k ? s.D[i][i] : Int(0);
    if (d == 0) {
      if (ux[i] != 0) return false;
    } else if (!is_integer(ux[i] / Rat(d))) {
      return false;
    }
  }
  return true;
}

RationalSubspace RationalSubspace::span(int ambient, const std::vector<RatVec>& vecs) {
  RatMat M((int)vecs.size(), ambient);
  for (size_t i = 0; i < vecs.size(); ++i) {
    if ((int)vecs[i].size() != ambient) throw std::runtime_error("subspace: dim mismatch");
    M.a[i] = vecs[i];
  }
  auto pivots = rref(M);
  RationalSubspace V;
  V.ambient = ambient;
  for (size_t r = 0; r < pivots.size(); ++r) V.basis.push_back(M.a[r]);
  return V;
}

bool RationalSubspace::contains(const RatVec& x) const {
  if ((int)x.size() != ambient) throw std::runtime_error("subspace: dim mismatch");
  RatMat M((int)basis.size(), ambient);
  for (size_t i = 0; i < basis.size(); ++i) M.a[i] = basis[i];
  RatMat Mt = transpose(M);
  return solve(Mt, x).has_value();
}

std::vector<RatVec> RationalSubspace::annihilator() const {
  RatMat M((int)basis.size(), ambient);
  for (size_t i = 0; i < basis.size(); ++i) M.a[i] = basis[i];
  auto ker = kernel_basis(M);
  // clear denominators so pairing against integer lattices stays integral
  for (auto& q : ker) {
    Int l = 1;
    for (auto& e : q) l = lcm(l, e.get_den());
    for (auto& e : q) e *= Rat(l);
  }
  return ker;
}

bool lattice_coset_membership(const RatVec& x, const RationalSubspace& V,
                              const IntegerLattice& L) {
  if (V.ambient != L.dim() || (int)x.size() != V.ambient)
    throw std::runtime_error("coset membership: dim mismatch");
  auto ann = V.annihilator();
  if (ann.empty()) return true;  // V is the whole space
  int k = (int)ann.size();
  // project: y = Q x must lie in the lattice Q * gens
  RatVec y(k);
  IntMat QG(k, L.gens.cols);
  for (int i = 0; i < k; ++i) {
    y[i] = dot(ann[i], x);
    for (int j = 0; j < L.gens.cols; ++j) {
      Rat e = 0;
      for (int r = 0; r < L.gens.rows; ++r) e += ann[i][r] * Rat(L.gens[r][j]);
      if (!is_integer(e)) throw std::runtime_error("coset membership: non-integral projection");
      QG[i][j] = e.get_num();
    }
  }
  IntegerLattice P{QG};
  return P.contains(y);
}

RatVec reduce_mod_lattice(const RatVec& x, const IntegerLattice& L) {
  IntMat H = hnf_columns(L.gens);
  if (H.cols != L.dim()) throw std::runtime_error("reduce_mod_lattice: lattice not full rank");
  RatVec r = x;
  for (int i = 0; i < H.rows; ++i) {
    Rat q = r[i] / Rat(H[i][i]);
    Int k = floor_div(q.get_num(), q.get_den());
    if (k == 0) continue;
    for (int j = i; j < H.rows; ++j) r[j] -= Rat(k) * Rat(H[j][i]);
  }
  return r;
}

}  // namespace strata
