// Linear algebra over F_p: oracle checks against hand-computed values and
// algebraic identities that hold for any correct implementation.
#include "doctest.h"
#include "sheafltc/fp.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace sheafltc;

namespace {

FpMat random_mat(std::mt19937_64& rng, std::size_t r, std::size_t c, std::uint32_t p) {
  FpMat m(r, c, p);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = static_cast<std::uint32_t>(rng() % p);
  return m;
}

} // namespace

TEST_CASE("primality and modular inverse") {
  CHECK(is_prime_u32(2));
  CHECK(is_prime_u32(3));
  CHECK(is_prime_u32(7));
  CHECK(is_prime_u32(65521));
  CHECK_FALSE(is_prime_u32(1));
  CHECK_FALSE(is_prime_u32(9));
  CHECK_FALSE(is_prime_u32(65537 * 2));
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 65521u})
    for (std::uint32_t a = 1; a < std::min<std::uint32_t>(p, 50); ++a)
      CHECK((std::uint64_t)a * invmod(a, p) % p == 1);
}

TEST_CASE("rref on a hand-worked matrix") {
  // [1 2 3; 2 4 6; 1 1 1] over F_7 -> rank 2, pivots {0,1}
  FpMat m(3, 3, 7);
  std::uint32_t vals[9] = {1, 2, 3, 2, 4, 6, 1, 1, 1};
  for (int i = 0; i < 9; ++i) m.a[i] = vals[i];
  FpMat r = m;
  auto piv = rref(r);
  CHECK(piv == std::vector<int>({0, 1}));
  // row 0 = (1 0 -1) = (1 0 6), row 1 = (0 1 2)
  CHECK(r.at(0, 0) == 1);
  CHECK(r.at(0, 1) == 0);
  CHECK(r.at(0, 2) == 6);
  CHECK(r.at(1, 0) == 0);
  CHECK(r.at(1, 1) == 1);
  CHECK(r.at(1, 2) == 2);
  CHECK(r.at(2, 0) == 0);
  CHECK(r.at(2, 1) == 0);
  CHECK(r.at(2, 2) == 0);
  CHECK(rank(m) == 2);
}

TEST_CASE("nullspace vectors are killed and span the kernel") {
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {2u, 3u, 7u}) {
    for (int trial = 0; trial < 20; ++trial) {
      auto m = random_mat(rng, 4, 6, p);
      auto ns = nullspace(m);
      CHECK(ns.rows == 6);
      CHECK(ns.cols == 6 - rank(m));
      if (ns.cols > 0) {
        auto prod = mat_mul(m, ns);
        CHECK(is_zero(prod));
        CHECK(rank(ns) == ns.cols); // columns independent
      }
    }
  }
}

TEST_CASE("solve returns an actual solution, inverse round-trips") {
  std::mt19937_64 rng(12);
  for (std::uint32_t p : {2u, 5u, 65521u}) {
    for (int trial = 0; trial < 20; ++trial) {
      auto m = random_mat(rng, 4, 4, p);
      FpVec x(4);
      for (auto& e : x) e = static_cast<std::uint32_t>(rng() % p);
      auto b = mat_vec(m, x);
      auto sol = solve(m, b);
      REQUIRE(sol.has_value());
      CHECK(mat_vec(m, *sol) == b);
      if (rank(m) == 4) {
        auto inv = inverse(m);
        REQUIRE(inv.has_value());
        auto id = mat_mul(m, *inv);
        for (std::size_t i = 0; i < 4; ++i)
          for (std::size_t j = 0; j < 4; ++j) CHECK(id.at(i, j) == (i == j ? 1u : 0u));
      }
    }
  }
}

TEST_CASE("solve detects inconsistent systems") {
  // x + y = 1, x + y = 2 over F_3
  FpMat m(2, 2, 3);
  m.a = {1, 1, 1, 1};
  CHECK_FALSE(solve(m, FpVec{1, 2}).has_value());
  CHECK(solve(m, FpVec{2, 2}).has_value());
}

TEST_CASE("subspace membership, canonical reps, coords") {
  // span{(1,1,0),(0,0,1)} in F_2^3
  FpMat g(2, 3, 2);
  g.a = {1, 1, 0, 0, 0, 1};
  auto s = Subspace::from_rows(g);
  CHECK(s.dim() == 2);
  CHECK(s.contains(FpVec{1, 1, 0}));
  CHECK(s.contains(FpVec{1, 1, 1}));
  CHECK_FALSE(s.contains(FpVec{1, 0, 0}));
  // reduce: canonical rep has zeros in pivot coordinates
  auto r = s.reduce(FpVec{1, 0, 1});
  CHECK(r == FpVec{0, 1, 0});
  // coords_of inverts the span map
  auto c = s.coords_of(FpVec{1, 1, 1});
  FpVec back(3, 0);
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < 3; ++j)
      back[j] = (back[j] + c[i] * s.basis.at(i, j)) % 2;
  CHECK(back == FpVec{1, 1, 1});
}

TEST_CASE("sum and intersection dimensions obey the modular law") {
  std::mt19937_64 rng(13);
  for (std::uint32_t p : {2u, 3u}) {
    for (int trial = 0; trial < 30; ++trial) {
      auto a = Subspace::from_rows(random_mat(rng, 2, 5, p));
      auto b = Subspace::from_rows(random_mat(rng, 3, 5, p));
      auto s = sum(a, b);
      auto i = intersect(a, b);
      CHECK(s.dim() + i.dim() == a.dim() + b.dim());
      // intersection vectors lie in both
      for (std::size_t r = 0; r < i.basis.rows; ++r) {
        FpVec v(i.basis.a.begin() + r * 5, i.basis.a.begin() + (r + 1) * 5);
        CHECK(a.contains(v));
        CHECK(b.contains(v));
      }
    }
  }
}

TEST_CASE("preimage and image under a linear map") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    auto m = random_mat(rng, 3, 4, 3); // map F_3^4 -> F_3^3
    auto w = Subspace::from_rows(random_mat(rng, 2, 3, 3));
    auto pre = preimage(m, w);
    // every basis vector of the preimage maps into w
    for (std::size_t r = 0; r < pre.basis.rows; ++r) {
      FpVec v(pre.basis.a.begin() + r * 4, pre.basis.a.begin() + (r + 1) * 4);
      CHECK(w.contains(mat_vec(m, v)));
    }
    // dimension: dim pre = dim ker + dim(im ∩ w)
    auto im = image_of(m, Subspace::full(4, 3));
    CHECK(pre.dim() == (4 - rank(m)) + intersect(im, w).dim());
  }
}

TEST_CASE("enumerate_span lists exactly the span, no repeats") {
  FpMat g(2, 4, 3);
  g.a = {1, 0, 2, 0, 0, 1, 1, 1};
  auto s = Subspace::from_rows(g);
  std::set<FpVec> seen;
  std::size_t n = 0;
  enumerate_span(s.basis, [&](const FpVec& v) {
    CHECK(s.contains(v));
    seen.insert(v);
    ++n;
  });
  CHECK(n == 9);
  CHECK(seen.size() == 9);
}

TEST_CASE("enumerate_all covers the whole space") {
  std::size_t n = 0;
  std::set<FpVec> seen;
  enumerate_all(2, 3, [&](const FpVec& v) { ++n; seen.insert(v); });
  CHECK(n == 8);
  CHECK(seen.size() == 8);
}

TEST_CASE("hstack and vstack shapes and content") {
  FpMat a(2, 2, 5), b(2, 1, 5);
  a.a = {1, 2, 3, 4};
  b.a = {4, 0};
  auto h = hstack(a, b);
  CHECK(h.rows == 2);
  CHECK(h.cols == 3);
  CHECK(h.at(0, 2) == 4);
  CHECK(h.at(1, 0) == 3);
  FpMat c(1, 2, 5);
  c.a = {2, 2};
  auto v = vstack(a, c);
  CHECK(v.rows == 3);
  CHECK(v.at(2, 1) == 2);
}
