#include "idealcore/linalg.hpp"

#include <algorithm>
#include <map>

#include "idealcore/errors.hpp"
#include "idealcore/ring.hpp"

namespace idealcore {

KMat KMat::from_rows(const std::vector<std::vector<Coeff>>& rows, int ncols,
                     FieldSpec f) {
  KMat m((int)rows.size(), ncols, f);
  for (int i = 0; i < m.rows; ++i) {
    if ((int)rows[i].size() != ncols)
      throw ContextError("row length mismatch");
    for (int j = 0; j < ncols; ++j) m.at(i, j) = f.reduce(rows[i][j]);
  }
  return m;
}

int rref(KMat& m, std::vector<int>* pivots) {
  const FieldSpec& F = m.field;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int p = -1;
    for (int i = r; i < m.rows; ++i)
      if (!FieldSpec::is_zero(m.at(i, c))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
    Coeff inv = F.inv(m.at(r, c));
    for (int j = c; j < m.cols; ++j) m.at(r, j) = F.mul(m.at(r, j), inv);
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || FieldSpec::is_zero(m.at(i, c))) continue;
      Coeff f = m.at(i, c);
      for (int j = c; j < m.cols; ++j)
        m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(r, j)));
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return r;
}

int rank(KMat m) { return rref(m); }

std::vector<std::vector<Coeff>> kernel_basis(KMat m) {
  std::vector<int> pivots;
  int r = rref(m, &pivots);
  std::vector<char> is_pivot(m.cols, 0);
  for (int c : pivots) is_pivot[c] = 1;
  std::vector<std::vector<Coeff>> out;
  const FieldSpec& F = m.field;
  for (int c = 0; c < m.cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Coeff> v(m.cols, Coeff(0));
    v[c] = Coeff(1);
    for (int i = 0; i < r; ++i) v[pivots[i]] = F.neg(m.at(i, c));
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<std::vector<Coeff>> rowspace_basis(KMat m) {
  int r = rref(m);
  std::vector<std::vector<Coeff>> out;
  out.reserve(r);
  for (int i = 0; i < r; ++i) {
    std::vector<Coeff> v(m.cols);
    for (int j = 0; j < m.cols; ++j) v[j] = m.at(i, j);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<std::vector<Coeff>> intersect_rowspaces(
    const std::vector<std::vector<Coeff>>& A,
    const std::vector<std::vector<Coeff>>& B, int ncols, FieldSpec f) {
  // Zassenhaus block matrix [A A; B 0]: after elimination, rows of the form
  // [0 w] give a basis of the intersection.
  int ra = (int)A.size(), rb = (int)B.size();
  KMat m(ra + rb, 2 * ncols, f);
  for (int i = 0; i < ra; ++i)
    for (int j = 0; j < ncols; ++j) {
      m.at(i, j) = f.reduce(A[i][j]);
      m.at(i, ncols + j) = m.at(i, j);
    }
  for (int i = 0; i < rb; ++i)
    for (int j = 0; j < ncols; ++j) m.at(ra + i, j) = f.reduce(B[i][j]);
  int r = rref(m);
  std::vector<std::vector<Coeff>> out;
  for (int i = 0; i < r; ++i) {
    bool left_zero = true;
    for (int j = 0; j < ncols && left_zero; ++j)
      if (!FieldSpec::is_zero(m.at(i, j))) left_zero = false;
    if (!left_zero) continue;
    std::vector<Coeff> v(ncols);
    bool nonzero = false;
    for (int j = 0; j < ncols; ++j) {
      v[j] = m.at(i, ncols + j);
      nonzero = nonzero || !FieldSpec::is_zero(v[j]);
    }
    if (nonzero) out.push_back(std::move(v));
  }
  return out;
}

bool in_rowspace(const std::vector<Coeff>& v,
                 const std::vector<std::vector<Coeff>>& basis, int ncols,
                 FieldSpec f) {
  KMat m = KMat::from_rows(basis, ncols, f);
  int r0 = rref(m);
  std::vector<std::vector<Coeff>> aug = basis;
  aug.push_back(v);
  return rank(KMat::from_rows(aug, ncols, f)) == r0;
}

// ---------------------------------------------------------------------------
// fraction-free elimination over polynomial entries

namespace {

struct BareissResult {
  PolyMat m;                 // echelon form, fraction-free
  std::vector<int> pivot_rows;
  std::vector<int> pivot_cols;
};

// One-step fraction-free Gaussian elimination with column pivoting skipped
// (columns processed left to right; rank-deficient columns are passed over).
BareissResult bareiss(PolyMat m) {
  BareissResult res;
  if (m.empty() || m[0].empty()) {
    res.m = std::move(m);
    return res;
  }
  int rows = (int)m.size(), cols = (int)m[0].size();
  RingCtxPtr ctx;
  for (auto& row : m)
    for (auto& p : row)
      if (p.ctx()) ctx = p.ctx();
  Polynomial prev = Polynomial::constant(ctx, Coeff(1));
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (!m[i][c].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) std::swap(m[piv], m[r]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j)
        m[i][j] = exact_divide(m[r][c] * m[i][j] - m[i][c] * m[r][j], prev);
      m[i][c] = Polynomial::zero(ctx);
    }
    prev = m[r][c];
    res.pivot_rows.push_back(r);
    res.pivot_cols.push_back(c);
    ++r;
  }
  res.m = std::move(m);
  return res;
}

}  // namespace

int rank_poly(const PolyMat& m) { return (int)bareiss(m).pivot_cols.size(); }

Polynomial det_poly(const PolyMat& m) {
  if (m.empty()) throw ContextError("determinant of empty matrix");
  int n = (int)m.size();
  if ((int)m[0].size() != n) throw ContextError("determinant of non-square matrix");
  RingCtxPtr ctx;
  for (auto& row : m)
    for (auto& p : row)
      if (p.ctx()) ctx = p.ctx();
  // track row swaps through a signed copy
  PolyMat w = m;
  Polynomial prev = Polynomial::constant(ctx, Coeff(1));
  int sign = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (!w[i][c].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return Polynomial::zero(ctx);
    if (piv != c) {
      std::swap(w[piv], w[c]);
      sign = -sign;
    }
    for (int i = c + 1; i < n; ++i) {
      for (int j = c + 1; j < n; ++j)
        w[i][j] = exact_divide(w[c][c] * w[i][j] - w[i][c] * w[c][j], prev);
      w[i][c] = Polynomial::zero(ctx);
    }
    prev = w[c][c];
  }
  Polynomial d = w[n - 1][n - 1];
  return sign < 0 ? -d : d;
}

std::vector<std::vector<Polynomial>> nullspace_poly(const PolyMat& m) {
  if (m.empty() || m[0].empty()) return {};
  int cols = (int)m[0].size();
  RingCtxPtr ctx;
  for (auto& row : m)
    for (auto& p : row)
      if (p.ctx()) ctx = p.ctx();
  BareissResult br = bareiss(m);
  int r = (int)br.pivot_cols.size();
  std::vector<char> is_pivot(cols, 0);
  for (int c : br.pivot_cols) is_pivot[c] = 1;
  std::vector<std::vector<Polynomial>> out;
  if (r == 0) {
    for (int c = 0; c < cols; ++c) {
      std::vector<Polynomial> v(cols, Polynomial::zero(ctx));
      v[c] = Polynomial::constant(ctx, Coeff(1));
      out.push_back(std::move(v));
    }
    return out;
  }
  // Cramer: for each free column f, solve A x = -M[R,f] on the pivot block A.
  auto minor_det = [&](int replace_idx, int free_col) {
    PolyMat sub(r, std::vector<Polynomial>(r, Polynomial::zero(ctx)));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        int col = (j == replace_idx) ? free_col : br.pivot_cols[j];
        sub[i][j] = br.m[i][col];  // echelon rows 0..r-1 span the row space
      }
    return det_poly(sub);
  };
  Polynomial big = minor_det(-1, 0);  // det of the pivot block itself
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Polynomial> v(cols, Polynomial::zero(ctx));
    v[f] = big;
    for (int j = 0; j < r; ++j) v[br.pivot_cols[j]] = -minor_det(j, f);
    // clear integer content for tidiness
    out.push_back(std::move(v));
  }
  return out;
}

KMat eval_poly_matrix(const PolyMat& m, const std::vector<Coeff>& point) {
  if (m.empty()) return KMat();
  RingCtxPtr ctx;
  for (auto& row : m)
    for (auto& p : row)
      if (p.ctx()) ctx = p.ctx();
  const FieldSpec& F = ctx->field;
  std::map<int, Coeff> values;
  for (int i = 0; i < (int)point.size(); ++i) values[i] = point[i];
  KMat out((int)m.size(), (int)m[0].size(), F);
  for (int i = 0; i < out.rows; ++i)
    for (int j = 0; j < out.cols; ++j) {
      Polynomial v = m[i][j].evaluate(values);
      if (!v.is_constant())
        throw ContextError("matrix evaluation left symbolic entries");
      out.at(i, j) = v.is_zero() ? Coeff(0) : v.lc();
    }
  return out;
}

}  // namespace idealcore
