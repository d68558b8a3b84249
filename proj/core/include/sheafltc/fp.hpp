#pragma once
// Dense linear algebra over prime fields F_p with a runtime modulus.
// Everything here is deterministic: echelon forms always pick the first
// usable pivot, kernels/solutions set free variables to zero, and subspaces
// are stored by their (unique) reduced row echelon basis.
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace sheafltc {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using FpVec = std::vector<u32>;

bool is_prime_u32(u32 n);
u32 invmod(u32 a, u32 p);

// Row-major dense matrix over F_p. Entries are kept in [0, p).
struct FpMat {
  int rows = 0, cols = 0;
  u32 p = 2;
  std::vector<u32> a;

  FpMat() = default;
  FpMat(int r, int c, u32 p_) : rows(r), cols(c), p(p_), a(static_cast<size_t>(r) * c, 0) {}
  u32& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  u32 at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
  FpVec row(int i) const { return FpVec(a.begin() + static_cast<size_t>(i) * cols, a.begin() + static_cast<size_t>(i + 1) * cols); }
  static FpMat identity(int n, u32 p);
  static FpMat from_rows(const std::vector<FpVec>& rows, int cols, u32 p);
  bool operator==(const FpMat&) const = default;
};

FpMat transpose(const FpMat& m);
FpMat mat_mul(const FpMat& x, const FpMat& y);
FpMat mat_add(const FpMat& x, const FpMat& y);
FpMat mat_sub(const FpMat& x, const FpMat& y);
FpMat mat_neg(const FpMat& x);
FpMat mat_scale(u32 c, const FpMat& x);
FpVec mat_vec(const FpMat& m, const FpVec& v);
FpMat hstack(const FpMat& x, const FpMat& y);
FpMat vstack(const FpMat& x, const FpMat& y);
bool is_zero(const FpMat& m);

FpVec vec_add(const FpVec& x, const FpVec& y, u32 p);
FpVec vec_sub(const FpVec& x, const FpVec& y, u32 p);
FpVec vec_scale(u32 c, const FpVec& x, u32 p);
void vec_add_inplace(FpVec& x, const FpVec& y, u32 p);
bool is_zero_vec(const FpVec& v);

// In-place reduced row echelon form; returns the pivot column indices.
std::vector<int> rref(FpMat& m);
int rank(FpMat m);

// Columns form the canonical kernel basis (one column per free column).
FpMat nullspace(const FpMat& m);

// Particular solution of A x = b with free variables set to zero.
std::optional<FpVec> solve(const FpMat& A, const FpVec& b);
std::optional<FpMat> solve_mat(const FpMat& A, const FpMat& B);
std::optional<FpMat> inverse(const FpMat& m);

// Subspace of F_p^n, canonically represented by RREF basis rows.
struct Subspace {
  u32 p = 2;
  int n = 0;
  FpMat basis;  // dim x n, reduced row echelon rows
  std::vector<int> pivots;

  static Subspace zero(int n, u32 p);
  static Subspace full(int n, u32 p);
  static Subspace from_rows(const FpMat& rows);
  static Subspace from_cols(const FpMat& cols);
  int dim() const { return basis.rows; }
  bool contains(const FpVec& v) const;
  bool contains(const Subspace& other) const;
  // Canonical coset representative: v minus its span component; the result
  // vanishes on every pivot column.
  FpVec reduce(const FpVec& v) const;
  // Coefficients of a member vector in the basis rows.
  FpVec coords_of(const FpVec& v) const;
  bool operator==(const Subspace&) const = default;
};

Subspace sum(const Subspace& x, const Subspace& y);
Subspace intersect(const Subspace& x, const Subspace& y);
// {x : M x in U} where M : F^cols -> F^rows and U lives in F^rows.
Subspace preimage(const FpMat& M, const Subspace& U);
// {M x : x in U} as a subspace of F^rows.
Subspace image_of(const FpMat& M, const Subspace& U);

// Visit all p^dim vectors in the row span once, starting from zero. Uses an
// odometer so each step costs one row addition.
void enumerate_span(const FpMat& rowbasis, const std::function<void(const FpVec&)>& fn);
void enumerate_all(u32 p, int dim, const std::function<void(const FpVec&)>& fn);

// dim * log2(p); used for enumeration budget checks.
double log2_point_count(u32 p, int dim);

}  // namespace sheafltc
