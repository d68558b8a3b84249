#pragma once
#include <vector>

#include "rational.hpp"

namespace sheafltc {

// Combined constant eps = min_{0<=i<=k} (k+2) eps_i / (k+1-i) built from the
// i-local coboundary expansion values eps_i in dimension k (eps_i.size() == k+1).
Rat combined_local_epsilon(int k, const std::vector<Rat>& eps_i);

// Left-hand side of the base inequality
//   U(k+2) * sum_{i=0}^{k} C(k+2, i+2) (i+1) (alpha_{i-1} + h_{i-1}) / (h_i ... h_{k-1}).
// alpha and h are indexed by j -> value at level j-1, so both have size k+1 and
// entry 0 holds the level -1 value. Requires k <= 3 (vine numbers above U(5)
// are out of reach) and h > 0 entrywise.
Rat base_inequality_lhs(int k, const std::vector<Rat>& alpha, const std::vector<Rat>& h);

// The threshold-vector choice used to derive the spectral theorem from the
// finer one: entry j holds (eps / ((k+1)^2 2^(2k+6)))^(2^(k-1-i)) for i = j-1,
// i ranging over {-1, ..., k-1}.
std::vector<Rat> theorem_alpha_choice(int k, const Rat& eps_combined);

struct SmallSetConstants {
  int k = 0;
  Rat eps;                          // combined eps from the i-local values
  bool necessity_violated = false;  // some alpha_i >= (eps/U(k+2))^(2^(k-1-i)); no h can work
  bool feasible = false;            // base inequality holds strictly at h
  std::vector<Rat> h;               // certifying thresholds h_{-1..k-1} (empty if infeasible)
  Rat lhs;                          // base-inequality LHS at h
  Rat beta;                         // eps - lhs (the expansion factor; positive iff feasible)
  Rat gamma;                        // h_{-1} * ... * h_{k-1} (the smallness bound)
};

// Feasibility and constants for beta-expansion of gamma-small locally minimal
// k-cochains from i-local coboundary expansion (eps_i, size k+1) and i-local
// skeleton expansion (alpha, size k+1, entry 0 = level -1). If h_choice is
// nonempty it is validated as given; otherwise closed forms are used for
// k = 0, 1 and a geometric grid search for k = 2, 3.
SmallSetConstants small_set_constants(int k, const std::vector<Rat>& eps_i,
                                      const std::vector<Rat>& alpha,
                                      const std::vector<Rat>& h_choice = {});

// Spectral-hypothesis threshold for expanding small locally minimal k-cochains
// alone: (1/d) * min{ (eps/((k+1)^2 2^(2k+6)))^(2^k), 1 }.
Rat small_set_lambda_threshold(int k, int d, const Rat& eps_combined);

struct CosystolicTheoremConstants {
  int k = 0, d = 0;
  long long Q = 0;
  Rat eps, eps_prime;  // combined constants for dimensions k and k+1
  Rat lambda_threshold;
  bool lambda_ok = false;  // given lambda <= lambda_threshold
  Rat beta, gamma;         // (eps/2)-expands gamma-small locally minimal k-cochains
  Rat beta_prime, gamma_prime;  // same one dimension up
  Rat eps_cosystolic, delta_cosystolic;  // dimension-k cosystolic pair
};

// Closed-form constants of the spectral local-to-global theorem: inputs are the
// i-local coboundary expansions in dimension k (size k+1) and k+1 (size k+2),
// the (d-2)-local spectral bound lambda, the degree bound Q and the complex
// dimension d >= k+2.
CosystolicTheoremConstants cosystolic_theorem_constants(int k, int d, long long Q,
                                                        const std::vector<Rat>& eps_i,
                                                        const std::vector<Rat>& eps_prime_i,
                                                        const Rat& lambda);

struct Dim2CseConstants {
  bool feasible = false;  // both corollary inequalities hold strictly
  Rat min_prime;          // min{eps0'/4, eps1'/2}
  Rat alpha_m1, alpha_0;  // the skeleton constants actually used
  Rat beta, gamma;              // 0-cochains: beta-expands gamma-small
  Rat beta_prime, gamma_prime;  // locally minimal 1-cochains
  Rat eps_cosystolic, delta_cosystolic;  // dimension-0 pair via the small-set bridge
  Rat h0;               // chosen h_{-1} for the 0-cochain part
  std::vector<Rat> h1;  // certifying (h_{-1}, h_0) for the 1-cochain part
};

// Sharper dimension-0 route for d >= 2: eps0 is the 0-local coboundary
// expansion in dimension 0, eps0p/eps1p the i-local ones in dimension 1, and
// alpha_m1/alpha_0 the (-1)- and 0-local skeleton expansions. Feasible iff
//   alpha_0 < min{eps0p/4, eps1p/2}   and
//   alpha_m1 < min{eps0, (1/6)(min{eps0p/4, eps1p/2} - alpha_0)^2}.
Dim2CseConstants dim2_cse_constants(int d, long long Q, const Rat& eps0, const Rat& eps0p,
                                    const Rat& eps1p, const Rat& alpha_m1, const Rat& alpha_0);

// Variant replacing the skeleton hypotheses: X connected and every vertex link
// [-1,lambda]-spectral. Sets alpha_0 = lambda and alpha_m1 = lambda/(1-lambda)
// after checking lambda < min{eps0p/4, eps1p/2} and
// lambda/(1-lambda) < min{eps0, (1/6)(min{eps0p/4, eps1p/2} - lambda)^2}.
Dim2CseConstants dim2_cse_constants_spectral(int d, long long Q, const Rat& eps0,
                                             const Rat& eps0p, const Rat& eps1p,
                                             const Rat& lambda);

// One step of the trickling-down conversion: a [-1,lambda] spectral bound on
// all vertex links of a connected complex gives lambda/(1-lambda) for the
// complex itself; `steps` iterates this. Throws if 1 - steps*lambda <= 0.
Rat trickle_down(const Rat& lambda, int steps = 1);

}  // namespace sheafltc
