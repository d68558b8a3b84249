#include <random>
#include <stdexcept>

#include "doctest.h"
#include "sheafltc/expansion.hpp"
#include "sheafltc/fixtures.hpp"

using namespace sheafltc;

TEST_CASE("all 0-cochains are locally minimal") {
  SimplicialComplex X = torus7();
  Sheaf F = constant_sheaf(X, 2, 1, false);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 10; ++t) {
    Cochain f = random_cochain(F, 0, rng);
    CHECK(is_locally_minimal(F, f));
  }
}

TEST_CASE("minimal cochains are locally minimal") {
  SimplicialComplex X = torus7();
  Sheaf F = constant_sheaf(X, 2, 1, false);
  Subspace B1 = coboundary_space(F, 1);
  std::mt19937_64 rng(4);
  int seen_nonzero = 0;
  for (int t = 0; t < 12; ++t) {
    Cochain f = random_cochain(F, 1, rng);
    FpVec argmin;
    quotient_norm(F, f, B1, NormVariant::WeightedSupport, &argmin);
    Cochain g{1, argmin};
    CHECK(is_minimal(F, g));
    CHECK(is_locally_minimal(F, g));
    if (!is_zero_vec(argmin)) ++seen_nonzero;
  }
  CHECK(seen_nonzero > 0);
}

TEST_CASE("zeroing entries of a minimal cochain keeps it minimal") {
  SimplicialComplex X = torus7();
  Sheaf F = constant_sheaf(X, 3, 1, false);
  Subspace B1 = coboundary_space(F, 1);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 8; ++t) {
    Cochain f = random_cochain(F, 1, rng);
    FpVec argmin;
    quotient_norm(F, f, B1, NormVariant::WeightedSupport, &argmin);
    Cochain g{1, argmin};
    REQUIRE(is_minimal(F, g));
    Cochain h = g;
    for (int x : support_faces(F, g))
      if (rng() % 2 == 0) set_block(F, h, x, FpVec(block(F, h, x).size(), 0));
    CHECK(is_minimal(F, h));
  }
}

TEST_CASE("an edge star fails local minimality exactly at its center") {
  SimplicialComplex X = torus7();
  Sheaf F = constant_sheaf(X, 2, 1, false);
  Cochain e0 = zero_cochain(F, 0);
  e0.v[0] = 1;
  Cochain f = apply_d(F, e0);
  CHECK(cochain_norm(F, f, NormVariant::WeightedSupport) == Rat(2, 7));
  CHECK(!is_minimal(F, f));
  CHECK(!is_locally_minimal_at(F, f, 0, 0));
  CHECK(!is_locally_minimal(F, f));
  CHECK(is_locally_minimal_at(F, f, 1, 3));  // at faces of dim >= k, trivially
}

TEST_CASE("greedy correction returns a locally minimal cochain within bounds") {
  SimplicialComplex T = torus7();
  SimplicialComplex S3 = simplex_complex(3);
  SimplicialComplex S4 = simplex_complex(4);
  ExpanderCodeFixture ek = expander_k4();
  std::vector<std::pair<Sheaf, int>> cases;
  cases.emplace_back(constant_sheaf(T, 2, 1, false), 1);
  cases.emplace_back(constant_sheaf(T, 2, 1, false), 2);
  cases.emplace_back(constant_sheaf(S3, 3, 1, false), 1);
  cases.emplace_back(constant_sheaf(S4, 2, 1, false), 2);
  cases.emplace_back(expander_code_sheaf(ek.graph, ek.p, ek.m, ek.T), 1);
  std::mt19937_64 rng(7);
  for (auto& [F, deg] : cases) {
    const SimplicialComplex& X = *F.X;
    int d = X.dim();
    int k = deg - 1;
    Rat cg = Rat(k + 1, d + 1) * X.Q() * Rat(binom(d + 1, k + 2));
    Rat cr = Rat(binom(d + 1, k + 2)) * X.num(d);
    FpMat D = coboundary_matrix(F, k);
    for (int t = 0; t < 15; ++t) {
      Cochain f = random_cochain(F, deg, rng);
      ApproximationResult res = locally_minimal_approximation(F, f);
      Rat nf = cochain_norm(F, f, NormVariant::WeightedSupport);
      CHECK(is_locally_minimal(F, res.corrected));
      CHECK(cochain_norm(F, res.corrected, NormVariant::WeightedSupport) <= nf);
      CHECK(cochain_norm(F, res.g, NormVariant::WeightedSupport) <= cg * nf);
      CHECK(Rat(res.rounds) <= cr * nf);
      CHECK(res.corrected.v == vec_sub(f.v, mat_vec(D, res.g.v), F.p));
      ApproximationResult again = locally_minimal_approximation(F, f);
      CHECK(again.g.v == res.g.v);
      CHECK(again.rounds == res.rounds);
      // the corrected cochain is a fixed point of the procedure
      ApproximationResult fixed = locally_minimal_approximation(F, res.corrected);
      CHECK(fixed.rounds == 0);
      CHECK(is_zero_vec(fixed.g.v));
    }
  }
}

TEST_CASE("smallest locally minimal cocycle norms on small fixtures") {
  {
    SimplicialComplex X = cycle_graph(3);
    Sheaf F = constant_sheaf(X, 2, 1, false);
    auto m = min_locally_minimal_cocycle_norm(F, 0);
    REQUIRE(m.has_value());
    CHECK(*m == 1);
  }
  {
    // every nonzero 1-cocycle of the full tetrahedron is a vertex cut, and
    // cuts fail local minimality at a vertex on their small side
    SimplicialComplex X = simplex_complex(3);
    Sheaf F = constant_sheaf(X, 2, 1, true);
    CHECK(!min_locally_minimal_cocycle_norm(F, 1).has_value());
  }
  {
    ExpanderCodeFixture fx = expander_k4();
    Sheaf F = expander_code_sheaf(fx.graph, fx.p, fx.m, fx.T);
    auto m = min_locally_minimal_cocycle_norm(F, 0);
    REQUIRE(m.has_value());
    CHECK(*m == Rat(3, 4));
  }
}

TEST_CASE("locally minimal cocycle norm agrees with the small-cocycle scan") {
  SimplicialComplex X = torus7();
  Sheaf F = constant_sheaf(X, 2, 1, false);
  auto m = min_locally_minimal_cocycle_norm(F, 1);
  REQUIRE(m.has_value());
  CHECK(*m > 0);
  CHECK(*m <= 1);
  SmallSetExpansionReport at =
      small_locally_minimal_expansion_check(F, 1, *m, Rat(1, 100), true);
  CHECK(at.ok);
  CHECK(!at.any);  // nothing strictly below the minimum
  SmallSetExpansionReport above =
      small_locally_minimal_expansion_check(F, 1, *m * Rat(22, 21), Rat(1, 100), true);
  CHECK(above.any);
  CHECK(!above.ok);  // a cocycle expands at ratio 0
  CHECK(above.min_ratio == 0);
}

TEST_CASE("small locally minimal cocycles certify cosystolic constants") {
  SimplicialComplex X = torus7();
  Sheaf F = constant_sheaf(X, 2, 1, false);
  // no nonzero locally minimal 0-cocycle weighs less than 1
  SmallSetExpansionReport small =
      small_locally_minimal_expansion_check(F, 0, 1, Rat(1, 10), true);
  CHECK(small.ok);
  CHECK(!small.any);
  // hence every 0-cocycle outside B^0 weighs at least 1: delta = 1
  ExpansionReport cs = cosystolic_expansion(F, 0);
  CHECK(cs.delta == 1);
  CHECK(!cs.delta_vacuous);
  // and eps >= min{alpha', (d+1)/((k+1)Q) / C(d+1,k+2)} = min{alpha', 1/6}
  auto alpha_prime = min_locally_minimal_cocycle_norm(F, 1);
  REQUIRE(alpha_prime.has_value());
  Rat cap = std::min(*alpha_prime, Rat(1, 6));
  CHECK(cs.eps >= cap);
  // pushing alpha above delta turns up the constant cocycle as a witness
  SmallSetExpansionReport wide =
      small_locally_minimal_expansion_check(F, 0, Rat(3, 2), Rat(1, 10), true);
  CHECK(wide.any);
  CHECK(!wide.ok);
  CHECK(wide.min_ratio == 0);
  Cochain w{0, wide.witness};
  CHECK(!is_zero_vec(w.v));
  CHECK(is_zero_vec(apply_d(F, w).v));
}

TEST_CASE("the scan measures the exact expansion ratio of one-vertex words") {
  ExpanderCodeFixture fx = expander_k4();
  Sheaf F = expander_code_sheaf(fx.graph, fx.p, fx.m, fx.T);
  SmallSetExpansionReport rep =
      small_locally_minimal_expansion_check(F, 0, Rat(1, 2), Rat(4, 3), false);
  CHECK(rep.ok);
  CHECK(rep.any);
  CHECK(rep.candidates == 12);  // 4 vertices, 3 nonzero local words each
  CHECK(rep.min_ratio == Rat(4, 3));
  SmallSetExpansionReport tight = small_locally_minimal_expansion_check(
      F, 0, Rat(1, 2), Rat(4, 3) + Rat(1, 1000), false);
  CHECK(!tight.ok);
  CHECK(!is_zero_vec(tight.witness));
}

TEST_CASE("scan and approximation respect the enumeration budget") {
  OneCocycleFixture fx = one_cocycle_torus7();
  Sheaf G = one_cocycle_sheaf(fx.X, fx.p, fx.m, fx.edge_spaces);
  CHECK_THROWS_AS(small_locally_minimal_expansion_check(G, 1, 1, 1, false, 10.0),
                  std::runtime_error);
  std::mt19937_64 rng(9);
  Cochain f = random_cochain(G, 2, rng);
  CHECK_THROWS_AS(locally_minimal_approximation(G, f), std::runtime_error);
}
