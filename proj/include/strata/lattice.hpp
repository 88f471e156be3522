#pragma once

#include "strata/matrix.hpp"

namespace strata {

/* Subgroup of Q^n spanned over Z by the columns of gens. */
struct IntegerLattice {
  IntMat gens;  // n x m, columns generate

  int dim() const { return gens.rows; }
  bool contains(const RatVec& x) const;
};

/* Q-subspace of Q^n given by a spanning set (not necessarily independent). */
struct RationalSubspace {
  int ambient = 0;
  std::vector<RatVec> basis;  // reduced, independent

  static RationalSubspace span(int ambient, const std::vector<RatVec>& vecs);
  int dim() const { return (int)basis.size(); }
  bool contains(const RatVec& x) const;
  /* rows q with q . v = 0 for all v in the subspace; integer entries */
  std::vector<RatVec> annihilator() const;
};

/* x in V + L ? (exact membership in the subspace-plus-lattice coset) */
bool lattice_coset_membership(const RatVec& x, const RationalSubspace& V,
                              const IntegerLattice& L);

/* Canonical representative of x modulo the full-rank lattice L (reduction
   into the fundamental HNF box). Deterministic. */
RatVec reduce_mod_lattice(const RatVec& x, const IntegerLattice& L);

}  // namespace strata
