#include "sheafltc/fp.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace sheafltc {

bool is_prime_u32(u32 n) {
  if (n < 2) return false;
  for (u32 d = 2; static_cast<u64>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

u32 invmod(u32 a, u32 p) {
  // extended euclid; a must be nonzero mod p
  long long t = 0, newt = 1, r = p, newr = a % p;
  if (newr == 0) throw std::domain_error("invmod of zero");
  while (newr != 0) {
    long long q = r / newr;
    long long tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) throw std::domain_error("modulus not prime or inverse missing");
  if (t < 0) t += p;
  return static_cast<u32>(t);
}

FpMat FpMat::identity(int n, u32 p) {
  FpMat m(n, n, p);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1 % p;
  return m;
}

FpMat FpMat::from_rows(const std::vector<FpVec>& rows, int cols, u32 p) {
  FpMat m(static_cast<int>(rows.size()), cols, p);
  for (int i = 0; i < m.rows; ++i) {
    assert(static_cast<int>(rows[i].size()) == cols);
    for (int j = 0; j < cols; ++j) m.at(i, j) = rows[i][j] % p;
  }
  return m;
}

FpMat transpose(const FpMat& m) {
  FpMat t(m.cols, m.rows, m.p);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  return t;
}

FpMat mat_mul(const FpMat& x, const FpMat& y) {
  assert(x.cols == y.rows && x.p == y.p);
  FpMat z(x.rows, y.cols, x.p);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      u64 c = x.at(i, k);
      if (!c) continue;
      for (int j = 0; j < y.cols; ++j)
        z.at(i, j) = static_cast<u32>((z.at(i, j) + c * y.at(k, j)) % x.p);
    }
  return z;
}

FpMat mat_add(const FpMat& x, const FpMat& y) {
  assert(x.rows == y.rows && x.cols == y.cols && x.p == y.p);
  FpMat z = x;
  for (size_t i = 0; i < z.a.size(); ++i) z.a[i] = (z.a[i] + y.a[i]) % x.p;
  return z;
}

FpMat mat_sub(const FpMat& x, const FpMat& y) {
  assert(x.rows == y.rows && x.cols == y.cols && x.p == y.p);
  FpMat z = x;
  for (size_t i = 0; i < z.a.size(); ++i) z.a[i] = (z.a[i] + x.p - y.a[i]) % x.p;
  return z;
}

FpMat mat_neg(const FpMat& x) {
  FpMat z = x;
  for (auto& e : z.a) e = e ? x.p - e : 0;
  return z;
}

FpMat mat_scale(u32 c, const FpMat& x) {
  FpMat z = x;
  for (auto& e : z.a) e = static_cast<u32>((static_cast<u64>(c) * e) % x.p);
  return z;
}

FpVec mat_vec(const FpMat& m, const FpVec& v) {
  assert(static_cast<int>(v.size()) == m.cols);
  FpVec out(m.rows, 0);
  for (int i = 0; i < m.rows; ++i) {
    u64 acc = 0;
    const u32* row = m.a.data() + static_cast<size_t>(i) * m.cols;
    for (int j = 0; j < m.cols; ++j) acc += static_cast<u64>(row[j]) * v[j];
    out[i] = static_cast<u32>(acc % m.p);
  }
  return out;
}

FpMat hstack(const FpMat& x, const FpMat& y) {
  assert(x.rows == y.rows && x.p == y.p);
  FpMat z(x.rows, x.cols + y.cols, x.p);
  for (int i = 0; i < x.rows; ++i) {
    for (int j = 0; j < x.cols; ++j) z.at(i, j) = x.at(i, j);
    for (int j = 0; j < y.cols; ++j) z.at(i, x.cols + j) = y.at(i, j);
  }
  return z;
}

FpMat vstack(const FpMat& x, const FpMat& y) {
  assert(x.cols == y.cols && x.p == y.p);
  FpMat z(x.rows + y.rows, x.cols, x.p);
  std::copy(x.a.begin(), x.a.end(), z.a.begin());
  std::copy(y.a.begin(), y.a.end(), z.a.begin() + x.a.size());
  return z;
}

bool is_zero(const FpMat& m) {
  for (u32 e : m.a)
    if (e) return false;
  return true;
}

FpVec vec_add(const FpVec& x, const FpVec& y, u32 p) {
  assert(x.size() == y.size());
  FpVec z = x;
  for (size_t i = 0; i < z.size(); ++i) z[i] = (z[i] + y[i]) % p;
  return z;
}

FpVec vec_sub(const FpVec& x, const FpVec& y, u32 p) {
  assert(x.size() == y.size());
  FpVec z = x;
  for (size_t i = 0; i < z.size(); ++i) z[i] = (z[i] + p - y[i]) % p;
  return z;
}

FpVec vec_scale(u32 c, const FpVec& x, u32 p) {
  FpVec z = x;
  for (auto& e : z) e = static_cast<u32>((static_cast<u64>(c) * e) % p);
  return z;
}

void vec_add_inplace(FpVec& x, const FpVec& y, u32 p) {
  assert(x.size() == y.size());
  for (size_t i = 0; i < x.size(); ++i) {
    x[i] += y[i];
    if (x[i] >= p) x[i] -= p;
  }
}

bool is_zero_vec(const FpVec& v) {
  for (u32 e : v)
    if (e) return false;
  return true;
}

std::vector<int> rref(FpMat& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int sel = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c)) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(r, j));
    u32 inv = invmod(m.at(r, c), m.p);
    for (int j = c; j < m.cols; ++j)
      m.at(r, j) = static_cast<u32>((static_cast<u64>(m.at(r, j)) * inv) % m.p);
    for (int i = 0; i < m.rows; ++i) {
      if (i == r) continue;
      u32 f = m.at(i, c);
      if (!f) continue;
      for (int j = c; j < m.cols; ++j)
        m.at(i, j) = static_cast<u32>((m.at(i, j) + static_cast<u64>(m.p - f) * m.at(r, j)) % m.p);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank(FpMat m) { return static_cast<int>(rref(m).size()); }

FpMat nullspace(const FpMat& m) {
  FpMat r = m;
  std::vector<int> piv = rref(r);
  std::vector<bool> is_piv(m.cols, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < m.cols; ++c)
    if (!is_piv[c]) free_cols.push_back(c);
  FpMat ker(m.cols, static_cast<int>(free_cols.size()), m.p);
  for (size_t k = 0; k < free_cols.size(); ++k) {
    int f = free_cols[k];
    ker.at(f, static_cast<int>(k)) = 1;
    for (size_t i = 0; i < piv.size(); ++i) {
      u32 v = r.at(static_cast<int>(i), f);
      ker.at(piv[i], static_cast<int>(k)) = v ? m.p - v : 0;
    }
  }
  return ker;
}

std::optional<FpVec> solve(const FpMat& A, const FpVec& b) {
  assert(static_cast<int>(b.size()) == A.rows);
  FpMat aug(A.rows, A.cols + 1, A.p);
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols) = b[i] % A.p;
  }
  std::vector<int> piv = rref(aug);
  if (!piv.empty() && piv.back() == A.cols) return std::nullopt;
  FpVec x(A.cols, 0);
  for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug.at(static_cast<int>(i), A.cols);
  return x;
}

std::optional<FpMat> solve_mat(const FpMat& A, const FpMat& B) {
  assert(A.rows == B.rows && A.p == B.p);
  FpMat aug = hstack(A, B);
  std::vector<int> piv = rref(aug);
  for (int c : piv)
    if (c >= A.cols) return std::nullopt;
  FpMat X(A.cols, B.cols, A.p);
  for (size_t i = 0; i < piv.size(); ++i)
    for (int j = 0; j < B.cols; ++j) X.at(piv[i], j) = aug.at(static_cast<int>(i), A.cols + j);
  return X;
}

std::optional<FpMat> inverse(const FpMat& m) {
  assert(m.rows == m.cols);
  return solve_mat(m, FpMat::identity(m.rows, m.p));
}

Subspace Subspace::zero(int n, u32 p) {
  Subspace s;
  s.p = p;
  s.n = n;
  s.basis = FpMat(0, n, p);
  return s;
}

Subspace Subspace::full(int n, u32 p) { return from_rows(FpMat::identity(n, p)); }

Subspace Subspace::from_rows(const FpMat& rows) {
  FpMat r = rows;
  std::vector<int> piv = rref(r);
  Subspace s;
  s.p = rows.p;
  s.n = rows.cols;
  s.pivots = piv;
  s.basis = FpMat(static_cast<int>(piv.size()), rows.cols, rows.p);
  for (size_t i = 0; i < piv.size(); ++i)
    for (int j = 0; j < rows.cols; ++j) s.basis.at(static_cast<int>(i), j) = r.at(static_cast<int>(i), j);
  return s;
}

Subspace Subspace::from_cols(const FpMat& cols) { return from_rows(transpose(cols)); }

FpVec Subspace::reduce(const FpVec& v) const {
  assert(static_cast<int>(v.size()) == n);
  FpVec r = v;
  for (int i = 0; i < basis.rows; ++i) {
    u32 c = r[pivots[i]];
    if (!c) continue;
    for (int j = pivots[i]; j < n; ++j)
      r[j] = static_cast<u32>((r[j] + static_cast<u64>(p - c) * basis.at(i, j)) % p);
  }
  return r;
}

bool Subspace::contains(const FpVec& v) const { return is_zero_vec(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  for (int i = 0; i < other.basis.rows; ++i)
    if (!contains(other.basis.row(i))) return false;
  return true;
}

FpVec Subspace::coords_of(const FpVec& v) const {
  // RREF rows vanish on each other's pivot columns, so coefficients can be
  // read off directly.
  FpVec c(basis.rows, 0);
  for (int i = 0; i < basis.rows; ++i) c[i] = v[pivots[i]] % p;
  return c;
}

Subspace sum(const Subspace& x, const Subspace& y) {
  assert(x.n == y.n && x.p == y.p);
  return Subspace::from_rows(vstack(x.basis, y.basis));
}

Subspace intersect(const Subspace& x, const Subspace& y) {
  assert(x.n == y.n && x.p == y.p);
  if (x.dim() == 0 || y.dim() == 0) return Subspace::zero(x.n, x.p);
  // v = c^T X = d^T Y  <=>  [X^T | -Y^T] (c,d)^T = 0
  FpMat m = hstack(transpose(x.basis), mat_neg(transpose(y.basis)));
  FpMat ker = nullspace(m);
  FpMat gens(ker.cols, x.n, x.p);
  for (int k = 0; k < ker.cols; ++k) {
    FpVec v(x.n, 0);
    for (int i = 0; i < x.dim(); ++i) {
      u32 c = ker.at(i, k);
      if (!c) continue;
      for (int j = 0; j < x.n; ++j)
        v[j] = static_cast<u32>((v[j] + static_cast<u64>(c) * x.basis.at(i, j)) % x.p);
    }
    for (int j = 0; j < x.n; ++j) gens.at(k, j) = v[j];
  }
  return Subspace::from_rows(gens);
}

Subspace preimage(const FpMat& M, const Subspace& U) {
  assert(M.rows == U.n && M.p == U.p);
  // reduce() is linear, so reduce every column and take the kernel
  FpMat red(M.rows, M.cols, M.p);
  for (int j = 0; j < M.cols; ++j) {
    FpVec col(M.rows);
    for (int i = 0; i < M.rows; ++i) col[i] = M.at(i, j);
    FpVec r = U.reduce(col);
    for (int i = 0; i < M.rows; ++i) red.at(i, j) = r[i];
  }
  return Subspace::from_cols(nullspace(red));
}

Subspace image_of(const FpMat& M, const Subspace& U) {
  assert(M.cols == U.n && M.p == U.p);
  return Subspace::from_cols(mat_mul(M, transpose(U.basis)));
}

void enumerate_span(const FpMat& rowbasis, const std::function<void(const FpVec&)>& fn) {
  int k = rowbasis.rows;
  u32 p = rowbasis.p;
  FpVec v(rowbasis.cols, 0);
  std::vector<u32> digits(k, 0);
  for (;;) {
    fn(v);
    int i = 0;
    while (i < k) {
      ++digits[i];
      const u32* row = rowbasis.a.data() + static_cast<size_t>(i) * rowbasis.cols;
      for (int j = 0; j < rowbasis.cols; ++j) {
        v[j] += row[j];
        if (v[j] >= p) v[j] -= p;
      }
      if (digits[i] < p) break;
      digits[i] = 0;
      ++i;
    }
    if (i == k) return;
  }
}

void enumerate_all(u32 p, int dim, const std::function<void(const FpVec&)>& fn) {
  enumerate_span(FpMat::identity(dim, p), fn);
}

double log2_point_count(u32 p, int dim) { return dim * std::log2(static_cast<double>(p)); }

}  // namespace sheafltc
