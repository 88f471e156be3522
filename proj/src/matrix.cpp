#include "strata/matrix.hpp"

namespace strata {

IntMat IntMat::identity(int n) {
  IntMat I(n, n);
  for (int i = 0; i < n; ++i) I[i][i] = 1;
  return I;
}

RatMat RatMat::identity(int n) {
  RatMat I(n, n);
  for (int i = 0; i < n; ++i) I[i][i] = 1;
  return I;
}

IntMat mul(const IntMat& A, const IntMat& B) {
  if (A.cols != B.rows) throw std::runtime_error("mul: shape mismatch");
  IntMat C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      if (A[i][k] == 0) continue;
      for (int j = 0; j < B.cols; ++j) C[i][j] += A[i][k] * B[k][j];
    }
  return C;
}

RatMat mul(const RatMat& A, const RatMat& B) {
  if (A.cols != B.rows) throw std::runtime_error("mul: shape mismatch");
  RatMat C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      if (A[i][k] == 0) continue;
      for (int j = 0; j < B.cols; ++j) C[i][j] += A[i][k] * B[k][j];
    }
  return C;
}

RatVec mul(const RatMat& A, const RatVec& x) {
  if (A.cols != (int)x.size()) throw std::runtime_error("mul: shape mismatch");
  RatVec y(A.rows, 0);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j)
      if (A[i][j] != 0) y[i] += A[i][j] * x[j];
  return y;
}

IntMat transpose(const IntMat& A) {
  IntMat T(A.cols, A.rows);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) T[j][i] = A[i][j];
  return T;
}

RatMat transpose(const RatMat& A) {
  RatMat T(A.cols, A.rows);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) T[j][i] = A[i][j];
  return T;
}

RatMat to_rat(const IntMat& A) {
  RatMat R(A.rows, A.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) R[i][j] = A[i][j];
  return R;
}

Int det(const IntMat& A) {
  if (A.rows != A.cols) throw std::runtime_error("det: not square");
  int n = A.rows;
  if (n == 0) return 1;
  IntMat M = A;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (M[k][k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (M[i][k] != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      std::swap(M.a[k], M.a[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        M[i][j] = M[k][k] * M[i][j] - M[i][k] * M[k][j];
        M[i][j] /= prev;  // Bareiss: exact division
      }
    prev = M[k][k];
  }
  return sign > 0 ? M[n - 1][n - 1] : -M[n - 1][n - 1];
}

std::vector<int> rref(RatMat& A) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < A.cols && r < A.rows; ++c) {
    int p = -1;
    for (int i = r; i < A.rows; ++i)
      if (A[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(A.a[r], A.a[p]);
    Rat inv = 1 / A[r][c];
    for (int j = c; j < A.cols; ++j) A[r][j] *= inv;
    for (int i = 0; i < A.rows; ++i) {
      if (i == r || A[i][c] == 0) continue;
      Rat f = A[i][c];
      for (int j = c; j < A.cols; ++j) A[i][j] -= f * A[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank(RatMat A) { return (int)rref(A).size(); }

std::optional<RatVec> solve(const RatMat& A, const RatVec& b) {
  RatMat aug(A.rows, A.cols + 1);
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < A.cols; ++j) aug[i][j] = A[i][j];
    aug[i][A.cols] = b[i];
  }
  auto pivots = rref(aug);
  for (int p : pivots)
    if (p == A.cols) return std::nullopt;  // inconsistent
  RatVec x(A.cols, 0);
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[(int)r][A.cols];
  return x;
}

std::vector<RatVec> kernel_basis(const RatMat& A) {
  RatMat R = A;
  auto pivots = rref(R);
  std::vector<bool> is_pivot(A.cols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<RatVec> basis;
  for (int free = 0; free < A.cols; ++free) {
    if (is_pivot[free]) continue;
    RatVec v(A.cols, 0);
    v[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -R[(int)r][free];
    basis.push_back(v);
  }
  return basis;
}

/* ---- Smith normal form ---- */

namespace {

void row_swap(IntMat& M, IntMat& U, int i, int j) {
  std::swap(M.a[i], M.a[j]);
  std::swap(U.a[i], U.a[j]);
}
void col_swap(IntMat& M, IntMat& V, int i, int j) {
  for (int r = 0; r < M.rows; ++r) std::swap(M[r][i], M[r][j]);
  for (int r = 0; r < V.rows; ++r) std::swap(V[r][i], V[r][j]);
}
void row_add(IntMat& M, IntMat& U, int dst, int src, const Int& f) {
  for (int c = 0; c < M.cols; ++c) M[dst][c] += f * M[src][c];
  for (int c = 0; c < U.cols; ++c) U[dst][c] += f * U[src][c];
}
void col_add(IntMat& M, IntMat& V, int dst, int src, const Int& f) {
  for (int r = 0; r < M.rows; ++r) M[r][dst] += f * M[r][src];
  for (int r = 0; r < V.rows; ++r) V[r][dst] += f * V[r][src];
}
void row_neg(IntMat& M, IntMat& U, int i) {
  for (int c = 0; c < M.cols; ++c) M[i][c] = -M[i][c];
  for (int c = 0; c < U.cols; ++c) U[i][c] = -U[i][c];
}

}  // namespace

Smith smith_normal_form(const IntMat& M0) {
  Smith s;
  s.D = M0;
  s.U = IntMat::identity(M0.rows);
  s.V = IntMat::identity(M0.cols);
  IntMat& D = s.D;
  int n = std::min(M0.rows, M0.cols);
  for (int t = 0; t < n; ++t) {
    // find a nonzero pivot of minimal absolute value
    for (;;) {
      int pi = -1, pj = -1;
      Int best = 0;
      for (int i = t; i < D.rows; ++i)
        for (int j = t; j < D.cols; ++j)
          if (D[i][j] != 0 && (pi < 0 || abs(D[i][j]) < best)) {
            best = abs(D[i][j]);
            pi = i;
            pj = j;
          }
      if (pi < 0) goto done;  // all remaining entries zero
      if (pi != t) row_swap(D, s.U, t, pi);
      if (pj != t) col_swap(D, s.V, t, pj);
      if (D[t][t] < 0) row_neg(D, s.U, t);
      bool clean = true;
      for (int i = t + 1; i < D.rows; ++i)
        if (D[i][t] != 0) {
          row_add(D, s.U, i, t, -floor_div(D[i][t], D[t][t]));
          if (D[i][t] != 0) clean = false;
        }
      for (int j = t + 1; j < D.cols; ++j)
        if (D[t][j] != 0) {
          col_add(D, s.V, j, t, -floor_div(D[t][j], D[t][t]));
          if (D[t][j] != 0) clean = false;
        }
      if (!clean) continue;
      // divisibility: fold any non-divisible entry into the pivot's column
      bool redo = false;
      for (int i = t + 1; i < D.rows && !redo; ++i)
        for (int j = t + 1; j < D.cols && !redo; ++j)
          if (D[i][j] % D[t][t] != 0) {
            row_add(D, s.U, t, i, 1);
            redo = true;
          }
      if (!redo) break;
    }
  }
done:
  return s;
}

IntMat hnf_columns(const IntMat& M) {
  // integer column elimination, working left to right down the rows
  IntMat H = M;
  int r = 0, c = 0;
  while (r < H.rows && c < H.cols) {
    // gcd-reduce row r across columns c..end
    for (;;) {
      int p = -1;
      Int best = 0;
      for (int j = c; j < H.cols; ++j)
        if (H[r][j] != 0 && (p < 0 || abs(H[r][j]) < best)) {
          best = abs(H[r][j]);
          p = j;
        }
      if (p < 0) break;
      if (p != c)
        for (int i = 0; i < H.rows; ++i) std::swap(H[i][c], H[i][p]);
      if (H[r][c] < 0)
        for (int i = 0; i < H.rows; ++i) H[i][c] = -H[i][c];
      bool clean = true;
      for (int j = c + 1; j < H.cols; ++j)
        if (H[r][j] != 0) {
          Int f = -floor_div(H[r][j], H[r][c]);
          for (int i = 0; i < H.rows; ++i) H[i][j] += f * H[i][c];
          if (H[r][j] != 0) clean = false;
        }
      if (clean) break;
    }
    if (H[r][c] != 0) {
      // reduce earlier columns against the new pivot
      for (int j = 0; j < c; ++j) {
        Int f = -floor_div(H[r][j], H[r][c]);
        if (f != 0)
          for (int i = 0; i < H.rows; ++i) H[i][j] += f * H[i][c];
      }
      ++c;
    }
    ++r;
  }
  // drop zero columns (beyond rank)
  IntMat out(H.rows, c);
  for (int i = 0; i < H.rows; ++i)
    for (int j = 0; j < c; ++j) out[i][j] = H[i][j];
  return out;
}

}  // namespace strata
