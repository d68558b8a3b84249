#include "sheafltc/local_to_global.hpp"

#include <stdexcept>

#include "sheafltc/expansion.hpp"

namespace sheafltc {

namespace {

void check_k(int k) {
  if (k < 0 || k > 3)
    throw std::invalid_argument("local-to-global constants: k must be in {0,...,3}");
}

Rat product(const std::vector<Rat>& v) {
  Rat p(1);
  for (const Rat& x : v) p *= x;
  return p;
}

}  // namespace

Rat combined_local_epsilon(int k, const std::vector<Rat>& eps_i) {
  if (k < 0 || static_cast<int>(eps_i.size()) != k + 1)
    throw std::invalid_argument("combined_local_epsilon: need eps_0..eps_k");
  Rat best;
  for (int i = 0; i <= k; ++i) {
    Rat v = Rat(k + 2) * eps_i[i] / Rat(k + 1 - i);
    if (i == 0 || v < best) best = v;
  }
  return best;
}

Rat base_inequality_lhs(int k, const std::vector<Rat>& alpha, const std::vector<Rat>& h) {
  check_k(k);
  if (static_cast<int>(alpha.size()) != k + 1 || static_cast<int>(h.size()) != k + 1)
    throw std::invalid_argument("base_inequality_lhs: alpha and h must hold levels -1..k-1");
  for (const Rat& x : h)
    if (x <= 0) throw std::invalid_argument("base_inequality_lhs: h must be positive");
  Rat sum(0);
  for (int i = 0; i <= k; ++i) {
    Rat denom(1);
    for (int j = i + 1; j <= k; ++j) denom *= h[j];
    sum += Rat(binom(k + 2, i + 2)) * Rat(i + 1) * (alpha[i] + h[i]) / denom;
  }
  return Rat(vine_number(k + 2)) * sum;
}

std::vector<Rat> theorem_alpha_choice(int k, const Rat& eps_combined) {
  check_k(k);
  Rat base = eps_combined / (Rat(k + 1) * Rat(k + 1) * rat_pow(Rat(2), 2 * k + 6));
  std::vector<Rat> out(k + 1);
  for (int j = 0; j <= k; ++j) out[j] = rat_pow(base, 1u << (k - j));
  return out;
}

SmallSetConstants small_set_constants(int k, const std::vector<Rat>& eps_i,
                                      const std::vector<Rat>& alpha,
                                      const std::vector<Rat>& h_choice) {
  check_k(k);
  if (static_cast<int>(alpha.size()) != k + 1)
    throw std::invalid_argument("small_set_constants: alpha must hold levels -1..k-1");
  SmallSetConstants out;
  out.k = k;
  out.eps = combined_local_epsilon(k, eps_i);
  const Rat U(vine_number(k + 2));

  // a certifying h forces alpha_i < (eps/U(k+2))^(2^(k-1-i)) at every level
  std::vector<Rat> cap(k + 1);
  for (int j = 0; j <= k; ++j) {
    cap[j] = rat_pow(out.eps / U, 1u << (k - j));
    if (alpha[j] >= cap[j]) out.necessity_violated = true;
  }

  auto finish = [&](const std::vector<Rat>& h) {
    out.h = h;
    out.lhs = base_inequality_lhs(k, alpha, h);
    out.beta = out.eps - out.lhs;
    out.gamma = product(h);
    out.feasible = out.lhs < out.eps;
  };

  if (!h_choice.empty()) {
    finish(h_choice);
    return out;
  }
  if (out.necessity_violated) return out;

  if (k == 0) {
    // inequality: 2(alpha + h) < eps; midpoint of the admissible interval
    Rat room = out.eps / 2 - alpha[0];
    if (room <= 0) return out;
    finish({room / 2});
    return out;
  }
  if (k == 1) {
    // inequality: 9(alpha_{-1} + h_{-1})/h_0 + 6(alpha_0 + h_0) < eps.
    // Solvable iff alpha_0 < eps/6 and alpha_{-1} < (eps - 6 alpha_0)^2 / 216;
    // pick h_0 at the vertex of the quadratic and h_{-1} at the midpoint of
    // its admissible interval.
    Rat m = out.eps - 6 * alpha[1];
    if (m <= 0) return out;
    if (alpha[0] >= m * m / 216) return out;
    Rat h0 = m / 12;
    Rat hm1 = (m / 2 * h0 / 9 - alpha[0]) / 2;
    if (hm1 <= 0) return out;
    finish({hm1, h0});
    return out;
  }

  // k = 2, 3: deterministic geometric grid under the necessity caps, keeping
  // the h with the largest margin
  const int kGridDepth = 10;
  std::vector<std::vector<Rat>> values(k + 1);
  for (int j = 0; j <= k; ++j) {
    Rat top = cap[j] < 1 ? cap[j] : Rat(1);
    Rat v = top;
    for (int g = 1; g <= kGridDepth; ++g) {
      v /= 2;
      values[j].push_back(v);
    }
    if (alpha[j] > 0 && alpha[j] <= 1) values[j].push_back(alpha[j]);
  }
  std::vector<Rat> h(k + 1), best_h;
  Rat best_beta(0);
  bool found = false;
  auto rec = [&](auto&& self, int j) -> void {
    if (j > k) {
      Rat lhs = base_inequality_lhs(k, alpha, h);
      Rat beta = out.eps - lhs;
      if (beta > 0 && (!found || beta > best_beta)) {
        found = true;
        best_beta = beta;
        best_h = h;
      }
      return;
    }
    for (const Rat& v : values[j]) {
      h[j] = v;
      self(self, j + 1);
    }
  };
  rec(rec, 0);
  if (found) finish(best_h);
  return out;
}

Rat small_set_lambda_threshold(int k, int d, const Rat& eps_combined) {
  check_k(k);
  if (d < k + 1) throw std::invalid_argument("small_set_lambda_threshold: need d >= k+1");
  Rat base = eps_combined / (Rat(k + 1) * Rat(k + 1) * rat_pow(Rat(2), 2 * k + 6));
  Rat v = rat_pow(base, 1u << k);
  if (v > 1) v = 1;
  return v / d;
}

CosystolicTheoremConstants cosystolic_theorem_constants(int k, int d, long long Q,
                                                        const std::vector<Rat>& eps_i,
                                                        const std::vector<Rat>& eps_prime_i,
                                                        const Rat& lambda) {
  check_k(k);
  if (d < k + 2) throw std::invalid_argument("cosystolic_theorem_constants: need d >= k+2");
  if (Q < 1) throw std::invalid_argument("cosystolic_theorem_constants: need Q >= 1");
  CosystolicTheoremConstants out;
  out.k = k;
  out.d = d;
  out.Q = Q;
  out.eps = combined_local_epsilon(k, eps_i);
  out.eps_prime = combined_local_epsilon(k + 1, eps_prime_i);

  Rat base = out.eps / (Rat(k + 1) * Rat(k + 1) * rat_pow(Rat(2), 2 * k + 6));
  Rat base_p = out.eps_prime / (Rat(k + 2) * Rat(k + 2) * rat_pow(Rat(2), 2 * k + 8));
  Rat t = rat_pow(base, 1u << k);
  Rat tp = rat_pow(base_p, 1u << (k + 1));
  Rat m = t < tp ? t : tp;
  if (m > 1) m = 1;
  out.lambda_threshold = m / d;
  out.lambda_ok = lambda <= out.lambda_threshold;

  out.beta = out.eps / 2;
  out.gamma = rat_pow(base, (1u << (k + 1)) - 1);
  out.beta_prime = out.eps_prime / 2;
  out.gamma_prime = rat_pow(base_p, (1u << (k + 2)) - 1);

  Rat cap = Rat(d + 1) / (Rat(k + 1) * Rat(Q) * Rat(binom(d + 1, k + 2)));
  out.eps_cosystolic = out.gamma_prime < cap ? out.gamma_prime : cap;
  out.delta_cosystolic = out.gamma;
  return out;
}

Dim2CseConstants dim2_cse_constants(int d, long long Q, const Rat& eps0, const Rat& eps0p,
                                    const Rat& eps1p, const Rat& alpha_m1,
                                    const Rat& alpha_0) {
  if (d < 2) throw std::invalid_argument("dim2_cse_constants: need d >= 2");
  if (Q < 1) throw std::invalid_argument("dim2_cse_constants: need Q >= 1");
  Dim2CseConstants out;
  out.alpha_m1 = alpha_m1;
  out.alpha_0 = alpha_0;
  Rat a = eps0p / 4, b = eps1p / 2;
  out.min_prime = a < b ? a : b;

  SmallSetConstants zero = small_set_constants(0, {eps0}, {alpha_m1});
  SmallSetConstants one = small_set_constants(1, {eps0p, eps1p}, {alpha_m1, alpha_0});
  out.feasible = zero.feasible && one.feasible;
  if (!out.feasible) return out;

  out.beta = zero.beta;
  out.gamma = zero.gamma;
  out.h0 = zero.h[0];
  out.beta_prime = one.beta;
  out.gamma_prime = one.gamma;
  out.h1 = one.h;

  Rat cap = Rat(2) / (Rat(Q) * Rat(d));  // (d+1)/((k+1)Q) * C(d+1,2)^{-1} at k = 0
  out.eps_cosystolic = out.gamma_prime < cap ? out.gamma_prime : cap;
  out.delta_cosystolic = out.gamma;
  return out;
}

Dim2CseConstants dim2_cse_constants_spectral(int d, long long Q, const Rat& eps0,
                                             const Rat& eps0p, const Rat& eps1p,
                                             const Rat& lambda) {
  if (lambda >= 1) {
    Dim2CseConstants out;
    out.alpha_0 = lambda;
    Rat a = eps0p / 4, b = eps1p / 2;
    out.min_prime = a < b ? a : b;
    return out;
  }
  return dim2_cse_constants(d, Q, eps0, eps0p, eps1p, trickle_down(lambda), lambda);
}

Rat trickle_down(const Rat& lambda, int steps) {
  if (steps < 1) throw std::invalid_argument("trickle_down: steps must be >= 1");
  Rat denom = 1 - Rat(steps) * lambda;
  if (denom <= 0) throw std::invalid_argument("trickle_down: 1 - steps*lambda must be positive");
  return lambda / denom;
}

}  // namespace sheafltc
