#include <vector>

#include "doctest.h"
#include "sheafltc/expansion.hpp"
#include "sheafltc/fixtures.hpp"
#include "sheafltc/local_to_global.hpp"

using namespace sheafltc;

TEST_CASE("combined local expansion constant") {
  CHECK(combined_local_epsilon(0, {Rat(3, 5)}) == Rat(6, 5));
  CHECK(combined_local_epsilon(1, {Rat(1, 2), Rat(1)}) == Rat(3, 4));
  CHECK(combined_local_epsilon(2, {Rat(1), Rat(1), Rat(1)}) == Rat(4, 3));
  CHECK_THROWS_AS(combined_local_epsilon(1, {Rat(1)}), std::invalid_argument);
}

TEST_CASE("base threshold inequality matches its closed forms") {
  // one level: 2 (alpha + h)
  Rat a(1, 5), h(1, 7);
  CHECK(base_inequality_lhs(0, {a}, {h}) == 2 * (a + h));

  // two levels: 9 (alpha_{-1} + h_{-1}) / h_0 + 6 (alpha_0 + h_0)
  Rat am1(1, 50), hm1(1, 40), a0(1, 9), h0(1, 8);
  CHECK(base_inequality_lhs(1, {am1, a0}, {hm1, h0}) ==
        9 * (am1 + hm1) / h0 + 6 * (a0 + h0));

  CHECK_THROWS_AS(base_inequality_lhs(1, {a}, {h, h}), std::invalid_argument);
  CHECK_THROWS_AS(base_inequality_lhs(0, {a}, {Rat(0)}), std::invalid_argument);
  CHECK_THROWS_AS(base_inequality_lhs(4, {a, a, a, a, a}, {h, h, h, h, h}),
                  std::invalid_argument);
}

TEST_CASE("zero-dimensional small-set constants") {
  Rat e0(3, 5), alpha(1, 10);

  // user-chosen threshold: beta = 2 (eps0 - alpha - h), gamma = h
  SmallSetConstants r = small_set_constants(0, {e0}, {alpha}, {Rat(1, 5)});
  CHECK(r.eps == Rat(6, 5));
  CHECK(r.feasible);
  CHECK(r.beta == 2 * (e0 - alpha - Rat(1, 5)));
  CHECK(r.gamma == Rat(1, 5));

  // at the end of the admissible interval the margin vanishes
  SmallSetConstants edge = small_set_constants(0, {e0}, {alpha}, {e0 - alpha});
  CHECK(!edge.feasible);
  CHECK(edge.beta == 0);

  // default choice: midpoint of the interval
  SmallSetConstants d = small_set_constants(0, {e0}, {alpha});
  CHECK(d.feasible);
  CHECK(!d.necessity_violated);
  REQUIRE(d.h.size() == 1);
  CHECK(d.h[0] == (e0 - alpha) / 2);
  CHECK(d.beta == e0 - alpha);
  CHECK(d.gamma == (e0 - alpha) / 2);

  // alpha at the cap: infeasible for every h, and flagged as such
  SmallSetConstants bad = small_set_constants(0, {e0}, {e0});
  CHECK(bad.necessity_violated);
  CHECK(!bad.feasible);
  CHECK(bad.h.empty());
}

TEST_CASE("one-dimensional small-set constants and feasibility boundary") {
  // eps = min{3/2 eps_0, 3 eps_1} = 3/2; solvable iff alpha_0 < eps/6 = 1/4
  // and alpha_{-1} < (eps - 6 alpha_0)^2 / 216
  std::vector<Rat> eps = {Rat(1), Rat(1)};

  SmallSetConstants ok = small_set_constants(1, eps, {Rat(1, 2401), Rat(1, 5)});
  CHECK(ok.eps == Rat(3, 2));
  CHECK(ok.feasible);
  CHECK(!ok.necessity_violated);
  REQUIRE(ok.h.size() == 2);
  CHECK(ok.h[1] == Rat(1, 40));        // (eps - 6 alpha_0) / 12
  CHECK(ok.h[0] == Rat(1, 11524800));  // half the room left at that h_0
  CHECK(ok.gamma == ok.h[0] * ok.h[1]);
  CHECK(ok.lhs == base_inequality_lhs(1, {Rat(1, 2401), Rat(1, 5)}, ok.h));
  CHECK(ok.beta == ok.eps - ok.lhs);
  CHECK(ok.beta > 0);

  // exactly on the quadratic boundary: infeasible but not excluded by the caps
  SmallSetConstants bd = small_set_constants(1, eps, {Rat(1, 2400), Rat(1, 5)});
  CHECK(!bd.feasible);
  CHECK(!bd.necessity_violated);
  CHECK(bd.h.empty());

  // alpha_0 at eps/6
  SmallSetConstants bd2 = small_set_constants(1, eps, {Rat(0), Rat(1, 4)});
  CHECK(!bd2.feasible);

  // alpha_0 beyond the cap (eps/U(3))^1 = 1/2
  SmallSetConstants nec = small_set_constants(1, eps, {Rat(0), Rat(3, 5)});
  CHECK(nec.necessity_violated);
  CHECK(!nec.feasible);

  // a user h is validated as given
  SmallSetConstants user =
      small_set_constants(1, eps, {Rat(1, 2401), Rat(1, 5)}, ok.h);
  CHECK(user.feasible);
  CHECK(user.lhs == ok.lhs);
  SmallSetConstants user_bad =
      small_set_constants(1, eps, {Rat(1, 2401), Rat(1, 5)}, {Rat(1), Rat(1)});
  CHECK(!user_bad.feasible);
}

TEST_CASE("threshold choice certifies the spectral route") {
  for (int k = 0; k <= 3; ++k) {
    // eps_i = (k+1-i)/(k+2) makes the combined constant exactly 1
    std::vector<Rat> eps;
    for (int i = 0; i <= k; ++i) eps.emplace_back(k + 1 - i, k + 2);
    REQUIRE(combined_local_epsilon(k, eps) == 1);

    std::vector<Rat> alpha = theorem_alpha_choice(k, Rat(1));
    Rat base = Rat(1) / (Rat(k + 1) * Rat(k + 1) * rat_pow(Rat(2), 2 * k + 6));
    REQUIRE(static_cast<int>(alpha.size()) == k + 1);
    CHECK(alpha[k] == base);
    CHECK(alpha[0] == rat_pow(base, 1u << k));

    SmallSetConstants r = small_set_constants(k, eps, alpha, alpha);
    CHECK(!r.necessity_violated);
    CHECK(r.feasible);
    CHECK(r.beta >= Rat(1, 2));
    CHECK(r.gamma == rat_pow(base, (1u << (k + 1)) - 1));

    // with h = alpha every summand collapses to 2 * base
    Rat coeff(0);
    for (int i = 0; i <= k; ++i) coeff += Rat(binom(k + 2, i + 2)) * Rat(i + 1);
    CHECK(r.lhs == Rat(vine_number(k + 2)) * coeff * 2 * base);
  }
}

TEST_CASE("grid search finds thresholds in higher dimensions") {
  // combined eps = 1; alphas half of the certifying choice
  std::vector<Rat> eps = {Rat(3, 4), Rat(3, 4), Rat(3, 4)};
  REQUIRE(combined_local_epsilon(2, eps) == 1);
  std::vector<Rat> alpha = theorem_alpha_choice(2, Rat(1));
  for (Rat& a : alpha) a /= 2;

  SmallSetConstants r = small_set_constants(2, eps, alpha);
  CHECK(r.feasible);
  CHECK(!r.necessity_violated);
  REQUIRE(r.h.size() == 3);
  for (const Rat& h : r.h) {
    CHECK(h > 0);
    CHECK(h <= 1);
  }
  CHECK(r.lhs == base_inequality_lhs(2, alpha, r.h));
  CHECK(r.beta == r.eps - r.lhs);
  CHECK(r.gamma == r.h[0] * r.h[1] * r.h[2]);

  // a violated cap disables the search outright
  std::vector<Rat> big = alpha;
  big[2] = Rat(1);  // cap at level 1 is eps/U(4) < 1
  SmallSetConstants nec = small_set_constants(2, eps, big);
  CHECK(nec.necessity_violated);
  CHECK(!nec.feasible);
  CHECK(nec.h.empty());
}

TEST_CASE("spectral thresholds for expanding small cochains") {
  CHECK(small_set_lambda_threshold(0, 2, Rat(2)) == Rat(1, 64));
  CHECK(small_set_lambda_threshold(1, 3, Rat(1)) == Rat(1, 3145728));
  CHECK(small_set_lambda_threshold(0, 5, Rat(100)) == Rat(1, 5));  // capped at 1
  CHECK_THROWS_AS(small_set_lambda_threshold(1, 1, Rat(1)), std::invalid_argument);
}

TEST_CASE("spectral theorem constants") {
  CosystolicTheoremConstants c = cosystolic_theorem_constants(
      0, 2, 6, {Rat(1)}, {Rat(1), Rat(1)}, Rat(1, 1000000));
  CHECK(c.eps == 2);
  CHECK(c.eps_prime == Rat(3, 2));
  CHECK(c.lambda_threshold == Rat(9, 8388608));
  CHECK(c.lambda_ok);
  CHECK(c.beta == 1);
  CHECK(c.gamma == Rat(1, 32));
  CHECK(c.beta_prime == Rat(3, 4));
  CHECK(c.gamma_prime == Rat(27, 8589934592LL));
  CHECK(c.eps_cosystolic == Rat(27, 8589934592LL));  // smaller than 1/6
  CHECK(c.delta_cosystolic == Rat(1, 32));

  CosystolicTheoremConstants far = cosystolic_theorem_constants(
      0, 2, 6, {Rat(1)}, {Rat(1), Rat(1)}, Rat(1, 500000));
  CHECK(!far.lambda_ok);

  CHECK_THROWS_AS(cosystolic_theorem_constants(1, 2, 6, {Rat(1), Rat(1)},
                                               {Rat(1), Rat(1), Rat(1)}, Rat(0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      cosystolic_theorem_constants(0, 2, 0, {Rat(1)}, {Rat(1), Rat(1)}, Rat(0)),
      std::invalid_argument);
}

TEST_CASE("dimension-two route to cosystolic expansion") {
  // feasible inputs; everything must agree with composing the two small-set runs
  Rat e0(1), e0p(2, 3), e1p(1);
  Dim2CseConstants c = dim2_cse_constants(2, 6, e0, e0p, e1p, Rat(0), Rat(1, 7));
  CHECK(c.min_prime == Rat(1, 6));
  CHECK(c.feasible);
  SmallSetConstants zero = small_set_constants(0, {e0}, {Rat(0)});
  SmallSetConstants one = small_set_constants(1, {e0p, e1p}, {Rat(0), Rat(1, 7)});
  CHECK(c.beta == zero.beta);
  CHECK(c.gamma == zero.gamma);
  CHECK(c.h0 == zero.h[0]);
  CHECK(c.beta_prime == one.beta);
  CHECK(c.gamma_prime == one.gamma);
  CHECK(c.h1 == one.h);
  CHECK(c.beta == 1);
  CHECK(c.gamma == Rat(1, 2));
  CHECK(c.gamma_prime == Rat(1, 1778112));
  // cap 2/(Q d) = 1/6 exceeds gamma'
  CHECK(c.eps_cosystolic == Rat(1, 1778112));
  CHECK(c.delta_cosystolic == Rat(1, 2));

  // boundary: alpha_0 exactly at min{eps0'/4, eps1'/2}
  Dim2CseConstants bd = dim2_cse_constants(2, 6, e0, e0p, e1p, Rat(0), Rat(1, 6));
  CHECK(!bd.feasible);

  // a large degree makes the 2/(Q d) cap bind instead of gamma'
  Dim2CseConstants capped = dim2_cse_constants(2, 25, e0, Rat(4), Rat(4), Rat(0), Rat(0));
  CHECK(capped.feasible);
  CHECK(capped.gamma_prime == Rat(1, 24));
  CHECK(capped.eps_cosystolic == Rat(1, 25));
}

TEST_CASE("spectral variant of the dimension-two route") {
  Rat e0(1), e0p(2, 3), e1p(1);

  // lambda = 1/1000 passes both inequalities of the variant
  Dim2CseConstants s = dim2_cse_constants_spectral(2, 6, e0, e0p, e1p, Rat(1, 1000));
  CHECK(s.feasible);
  CHECK(s.alpha_0 == Rat(1, 1000));
  CHECK(s.alpha_m1 == Rat(1, 999));
  Dim2CseConstants direct = dim2_cse_constants(2, 6, e0, e0p, e1p, Rat(1, 999), Rat(1, 1000));
  CHECK(s.eps_cosystolic == direct.eps_cosystolic);
  CHECK(s.delta_cosystolic == direct.delta_cosystolic);
  CHECK(s.beta_prime == direct.beta_prime);
  CHECK(s.gamma_prime == direct.gamma_prime);

  // lambda = 1/100 fails the quadratic inequality, 1/2 even the linear one
  CHECK(!dim2_cse_constants_spectral(2, 6, e0, e0p, e1p, Rat(1, 100)).feasible);
  CHECK(!dim2_cse_constants_spectral(2, 6, e0, e0p, e1p, Rat(1, 2)).feasible);
  // lambda >= 1 cannot trickle down at all
  CHECK(!dim2_cse_constants_spectral(2, 6, e0, e0p, e1p, Rat(1)).feasible);
}

TEST_CASE("trickling down the spectral bound") {
  CHECK(trickle_down(Rat(1, 2)) == Rat(1));
  CHECK(trickle_down(Rat(1, 3), 2) == Rat(1));
  CHECK(trickle_down(Rat(1, 100)) == Rat(1, 99));
  CHECK(trickle_down(Rat(0)) == Rat(0));
  CHECK(trickle_down(Rat(-1, 2)) == Rat(-1, 3));
  CHECK_THROWS_AS(trickle_down(Rat(1, 2), 2), std::invalid_argument);
  CHECK_THROWS_AS(trickle_down(Rat(1)), std::invalid_argument);
  CHECK_THROWS_AS(trickle_down(Rat(1, 2), 0), std::invalid_argument);
}

TEST_CASE("measured link constants of the seven-vertex torus") {
  SimplicialComplex X = torus7();
  Sheaf F = constant_sheaf(X, 2, 1, false);

  // vertex links are hexagons, edge links are pairs of points
  Rat eps0 = local_coboundary_expansion_min(F, 0, 0).eps;    // dim -1 in each link
  Rat eps0p = local_coboundary_expansion_min(F, 0, 1).eps;   // dim 0 in vertex links
  Rat eps1p = local_coboundary_expansion_min(F, 1, 1).eps;   // dim -1 in edge links
  CHECK(eps0 == Rat(1));
  CHECK(eps0p == Rat(2, 3));
  CHECK(eps1p == Rat(1));

  Rat alpha0 = local_skeleton_alpha(X, 0);
  Rat alpham1 = local_skeleton_alpha(X, -1);
  CHECK(alpha0 == Rat(1, 6));
  CHECK(alpham1 == Rat(0));

  // the mixing constant of the hexagon links sits exactly on the boundary
  // min{eps0'/4, eps1'/2} = 1/6, so the route is (just) infeasible here
  Dim2CseConstants c = dim2_cse_constants(X.dim(), X.Q(), eps0, eps0p, eps1p,
                                          alpham1, alpha0);
  CHECK(c.min_prime == Rat(1, 6));
  CHECK(!c.feasible);

  // and the spectral variant fails too: hexagon second eigenvalue is 1/2
  Link L = X.link(X.faces[0][0]);
  CHECK(L.complex.spectral_interval().second == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(!dim2_cse_constants_spectral(X.dim(), X.Q(), eps0, eps0p, eps1p,
                                     Rat(1, 2)).feasible);
}
