#pragma once

#include <map>

#include "strata/lattice.hpp"

namespace strata {

struct CartanType {
  char family = 0;  // 'A'..'G'
  int rank = 0;

  auto operator<=>(const CartanType&) const = default;
};

/* "A3", "E7", ... throws "unknown Cartan type" on anything invalid
   (A>=1, B>=2, C>=2, D>=4, E6..E8, F4, G2). */
CartanType parse_type(const std::string& s);
std::string show_type(const CartanType& t);

/* Cartan integers cartan[i][j] = <alpha_i, alpha_j^vee>, Bourbaki numbering,
   0-based indices (position i holds alpha_{i+1}). */
IntMat cartan_matrix(const CartanType& t);

/* A full root system with exact integer/rational data.

   Coordinates: every root is stored by its simple-root coordinates (an
   integer vector of length rank).  Coweights live in fundamental-coweight
   coordinates, so the pairing <root, coweight> is the plain dot product of
   the two coordinate vectors.  The coroot lattice in coweight coordinates
   is spanned by the columns of the Cartan matrix.

   Roots are sorted by (height, lexicographic coordinates); negatives come
   first, so indices [nroots/2, nroots) are the positive roots. */
struct RootSystem {
  CartanType type;
  int rank = 0;
  IntMat cartan;
  IntVec sym;                   // symmetrizers: (alpha_i, alpha_j) = sym[j]*cartan[i][j]
  IntMat form;                  // invariant form on simple roots
  std::vector<IntVec> roots;    // canonical order
  std::vector<int> neg;         // index of -root
  std::vector<int> simple_idx;  // index of alpha_{i+1}
  std::vector<int> ext_base;    // [0] = lowest root, [i] = alpha_i
  int highest = -1;             // index of the highest root
  std::vector<IntVec> coroot;   // coroot coordinates of each root

  int nroots() const { return (int)roots.size(); }
  int npos() const { return nroots() / 2; }
  bool is_positive(int idx) const { return idx >= npos(); }
  int pos_rep(int idx) const { return is_positive(idx) ? idx : neg[idx]; }

  int index_of(const IntVec& coords) const;  // -1 if not a root
  Int len2(int idx) const;                   // (root, root)
  bool is_long(int idx) const;
  Int pairing(int b, int a) const;  // <root_b, root_a^vee>
  Rat eval(int root, const RatVec& x) const;
  int reflect_root(int a, int b) const;  // index of s_{r_a}(r_b)

  IntegerLattice coroot_lattice() const;  // columns of cartan
  /* V_Pi = {v : alpha(v) = 0 for alpha in pi_roots} */
  RationalSubspace center_subspace(const std::vector<int>& pi_roots) const;

 private:
  std::map<IntVec, int> idx_;
  Int maxlen2_ = 0;
  friend RootSystem build_root_system(const CartanType&);
};

RootSystem build_root_system(const CartanType& t);

}  // namespace strata
