#include <random>

#include "doctest.h"
#include "sheafltc/cohomology.hpp"
#include "sheafltc/fixtures.hpp"
#include "sheafltc/norms.hpp"

using namespace sheafltc;

TEST_CASE("norm names round-trip") {
  for (auto v : {NormVariant::WeightedSupport, NormVariant::NormalizedHamming,
                 NormVariant::BasisHamming})
    CHECK(parse_norm(norm_name(v)) == v);
  CHECK(!parse_norm("hamming").has_value());
}

TEST_CASE("zero cochain has zero norm in all variants") {
  SimplicialComplex X = torus7();
  Sheaf F = constant_sheaf(X, 3, 2, false);
  for (int k = 0; k <= 2; ++k) {
    Cochain z = zero_cochain(F, k);
    for (auto v : {NormVariant::WeightedSupport, NormVariant::NormalizedHamming,
                   NormVariant::BasisHamming})
      CHECK(cochain_norm(F, z, v) == 0);
  }
}

TEST_CASE("full support on a pure complex has ws norm 1") {
  SimplicialComplex X = torus7();
  Sheaf F = constant_sheaf(X, 2, 1, false);
  for (int k = 0; k <= 2; ++k) {
    Cochain f = zero_cochain(F, k);
    for (auto& x : f.v) x = 1;
    CHECK(cochain_norm(F, f, NormVariant::WeightedSupport) == 1);
    CHECK(cochain_norm(F, f, NormVariant::NormalizedHamming) == 1);
    CHECK(cochain_norm(F, f, NormVariant::BasisHamming) == X.num(k));
  }
}

TEST_CASE("single-face support matches face weight and counting") {
  SimplicialComplex X = torus7();
  Sheaf F = constant_sheaf(X, 5, 3, false);
  Cochain f = zero_cochain(F, 1);
  set_block(F, f, 4, FpVec{0, 2, 0});
  CHECK(cochain_norm(F, f, NormVariant::WeightedSupport) == X.weight(1, 4));
  CHECK(cochain_norm(F, f, NormVariant::NormalizedHamming) == Rat(1, 21));
  CHECK(cochain_norm(F, f, NormVariant::BasisHamming) == 1);
  set_block(F, f, 4, FpVec{1, 2, 3});
  CHECK(cochain_norm(F, f, NormVariant::BasisHamming) == 3);
  CHECK(cochain_norm(F, f, NormVariant::WeightedSupport) == X.weight(1, 4));
}

TEST_CASE("degree -1 norms use the unit weight of the empty face") {
  SimplicialComplex X = simplex_complex(3);
  Sheaf F = constant_sheaf(X, 2, 2, true);
  Cochain f{-1, FpVec{1, 0}};
  CHECK(cochain_norm(F, f, NormVariant::WeightedSupport) == 1);
  CHECK(cochain_norm(F, f, NormVariant::NormalizedHamming) == 1);
  CHECK(cochain_norm(F, f, NormVariant::BasisHamming) == 1);
  CHECK(mass(F, -1, NormVariant::WeightedSupport) == 1);
  CHECK(mass(F, -1, NormVariant::BasisHamming) == 2);
}

TEST_CASE("masses: constant sheaf saturates, zero fibers drop out") {
  SimplicialComplex X = torus7();
  Sheaf F = constant_sheaf(X, 2, 1, false);
  for (int k = 0; k <= 2; ++k) {
    CHECK(mass(F, k, NormVariant::WeightedSupport) == 1);
    CHECK(mass(F, k, NormVariant::NormalizedHamming) == 1);
    CHECK(mass(F, k, NormVariant::BasisHamming) == F.cochain_dim(k));
  }
  CHECK(mass(F, 3, NormVariant::WeightedSupport) == 0);
  CHECK(mass(F, -1, NormVariant::WeightedSupport) == 0);  // not augmented

  OneCocycleFixture oc = one_cocycle_torus7();
  Sheaf G = one_cocycle_sheaf(oc.X, oc.p, oc.m, oc.edge_spaces);
  // vertices carry the zero space in this sheaf
  CHECK(mass(G, 0, NormVariant::WeightedSupport) == 0);
  CHECK(mass(G, 0, NormVariant::BasisHamming) == 0);
  CHECK(mass(G, 1, NormVariant::WeightedSupport) == 1);
  CHECK(mass(G, 2, NormVariant::NormalizedHamming) == 1);
}

TEST_CASE("quotient norm minimizes over the subspace and reports the argmin") {
  SimplicialComplex X = cycle_graph(3);
  Sheaf F = constant_sheaf(X, 2, 1, false);
  Subspace Z = cocycle_space(F, 0);  // constants: span{(1,1,1)}
  REQUIRE(Z.dim() == 1);

  Cochain ones{0, FpVec{1, 1, 1}};
  FpVec arg;
  CHECK(quotient_norm(F, ones, Z, NormVariant::WeightedSupport, &arg) == 0);
  CHECK(is_zero_vec(arg));

  Cochain e0{0, FpVec{1, 0, 0}};
  CHECK(quotient_norm(F, e0, Z, NormVariant::WeightedSupport, &arg) == Rat(1, 3));
  CHECK(arg == FpVec{1, 0, 0});

  Cochain two{0, FpVec{1, 1, 0}};  // the complement is smaller
  CHECK(quotient_norm(F, two, Z, NormVariant::WeightedSupport, &arg) == Rat(1, 3));
  CHECK(arg == FpVec{0, 0, 1});
}

TEST_CASE("Hamming norm sandwiched by weighted support times degree factors") {
  SimplicialComplex X = torus7();
  Sheaf F = constant_sheaf(X, 2, 2, false);
  std::mt19937_64 rng(99);
  int d = X.dim();
  for (int k = 0; k <= 2; ++k) {
    Rat Qk(X.degree(k, d));
    Rat scale = Rat(binom(d + 1, k + 1)) * Rat(X.num(d), X.num(k));
    for (int t = 0; t < 25; ++t) {
      Cochain f = random_cochain(F, k, rng);
      Rat ws = cochain_norm(F, f, NormVariant::WeightedSupport);
      Rat ham = cochain_norm(F, f, NormVariant::NormalizedHamming);
      CHECK(scale / Qk * ws <= ham);
      CHECK(ham <= scale * ws);
    }
  }
}

TEST_CASE("ws and Hamming norms coincide on a face-transitive complex") {
  // every torus7 face of a given dimension has the same weight, so the two
  // normalizations agree
  SimplicialComplex X = torus7();
  Sheaf F = constant_sheaf(X, 3, 1, false);
  std::mt19937_64 rng(7);
  for (int k = 0; k <= 2; ++k)
    for (int t = 0; t < 10; ++t) {
      Cochain f = random_cochain(F, k, rng);
      CHECK(cochain_norm(F, f, NormVariant::WeightedSupport) ==
            cochain_norm(F, f, NormVariant::NormalizedHamming));
    }
}

TEST_CASE("triangle inequality on random triples") {
  SimplicialComplex X = torus7();
  Sheaf F = constant_sheaf(X, 5, 2, false);
  std::mt19937_64 rng(123);
  for (int t = 0; t < 40; ++t) {
    Cochain f = random_cochain(F, 1, rng);
    Cochain g = random_cochain(F, 1, rng);
    Cochain s{1, vec_add(f.v, g.v, F.p)};
    for (auto v : {NormVariant::WeightedSupport, NormVariant::NormalizedHamming,
                   NormVariant::BasisHamming})
      CHECK(cochain_norm(F, s, v) <= cochain_norm(F, f, v) + cochain_norm(F, g, v));
  }
}
