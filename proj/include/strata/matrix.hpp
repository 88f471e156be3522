#pragma once

#include <optional>

#include "strata/numeric.hpp"

namespace strata {

/* Small dense exact matrices. Sizes here are tiny (rank <= 9, root lists
   <= 240 rows), so plain O(n^3) algorithms are used throughout. */

struct IntMat {
  int rows = 0, cols = 0;
  std::vector<IntVec> a;  // row major

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(r, IntVec(c, 0)) {}
  IntVec& operator[](int i) { return a[i]; }
  const IntVec& operator[](int i) const { return a[i]; }
  static IntMat identity(int n);
  bool operator==(const IntMat&) const = default;
};

struct RatMat {
  int rows = 0, cols = 0;
  std::vector<RatVec> a;

  RatMat() = default;
  RatMat(int r, int c) : rows(r), cols(c), a(r, RatVec(c, 0)) {}
  RatVec& operator[](int i) { return a[i]; }
  const RatVec& operator[](int i) const { return a[i]; }
  static RatMat identity(int n);
  bool operator==(const RatMat&) const = default;
};

IntMat mul(const IntMat& A, const IntMat& B);
RatMat mul(const RatMat& A, const RatMat& B);
RatVec mul(const RatMat& A, const RatVec& x);
IntMat transpose(const IntMat& A);
RatMat transpose(const RatMat& A);
RatMat to_rat(const IntMat& A);

Int det(const IntMat& A);  // fraction-free Bareiss

int rank(RatMat A);

/* One solution of A x = b, empty if inconsistent. */
std::optional<RatVec> solve(const RatMat& A, const RatVec& b);

/* Basis of the right kernel {x : A x = 0}. */
std::vector<RatVec> kernel_basis(const RatMat& A);

/* Reduced row echelon form in place; returns pivot columns. */
std::vector<int> rref(RatMat& A);

/* Smith normal form: U*M*V = D with U, V unimodular and the diagonal
   d_1 | d_2 | ... | d_k >= 0. */
struct Smith {
  IntMat D, U, V;
};
Smith smith_normal_form(const IntMat& M);

/* Column-style Hermite normal form of the lattice spanned by the columns
   of M: returns an r x k matrix (k = rank) in column echelon form with
   positive pivots, spanning the same lattice. */
IntMat hnf_columns(const IntMat& M);

}  // namespace strata
