#include "sheafltc/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iterator>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace sheafltc {
namespace {

// F_p^dim in lexicographic order (coordinate 0 most significant), so the
// first minimizer found is the lexicographically least one.
void lex_enumerate(u32 p, int dim, const std::function<void(const FpVec&)>& fn) {
  FpVec v(dim, 0);
  for (;;) {
    fn(v);
    int i = dim - 1;
    while (i >= 0) {
      if (++v[i] < p) break;
      v[i] = 0;
      --i;
    }
    if (i < 0) return;
  }
}

struct EpsSetup {
  int k = 0;
  int out_degree = 0;
  FpMat D;      // numerator map (d_k or del_k)
  Subspace R;   // reference subspace: D vanishes on R, so ||D f|| is constant
                // on cosets f + R
  Rat mk{0}, mout{0};
};

void run_eps(const Sheaf& F, const EpsSetup& s, const ExpansionOptions& opt,
             ExpansionReport& rep) {
  rep.k = s.k;
  rep.norm = opt.norm;
  rep.seed = opt.seed;
  rep.defined = s.mk != 0 && s.mout != 0;
  if (!rep.defined) return;  // the inequality holds for every eps
  int n = F.cochain_dim(s.k);
  int r = s.R.dim();
  if (n == 0 || n == r) {
    rep.vacuous = true;
    return;
  }
  bool exact = !opt.force_sample && log2_point_count(F.p, n) <= opt.budget_log2;
  bool denom_exact = log2_point_count(F.p, r) <= opt.budget_log2;
  bool have = false;
  Rat best(0);
  FpVec best_w;
  auto consider = [&](const FpVec& f) {
    if (s.R.contains(f)) return;
    Rat num = cochain_norm(F, Cochain{s.out_degree, mat_vec(s.D, f)}, opt.norm) * s.mk;
    Rat den;
    FpVec witness;
    if (denom_exact) {
      den = quotient_norm(F, Cochain{s.k, f}, s.R, opt.norm, &witness);
    } else {
      den = cochain_norm(F, Cochain{s.k, f}, opt.norm);  // >= true coset norm
      witness = f;
      rep.denom_exact = false;
    }
    den *= s.mout;
    Rat ratio = num / den;
    if (!have || ratio < best) {
      have = true;
      best = ratio;
      best_w = std::move(witness);
    }
  };
  if (exact) {
    // one representative per coset of R: span of the standard basis vectors
    // at R's non-pivot coordinates
    std::vector<bool> is_piv(n, false);
    for (int c : s.R.pivots) is_piv[c] = true;
    FpMat comp(n - r, n, F.p);
    int row = 0;
    for (int c = 0; c < n; ++c)
      if (!is_piv[c]) comp.at(row++, c) = 1;
    enumerate_span(comp, consider);
  } else {
    rep.exact = false;
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<u32> dist(0, F.p - 1);
    for (long t = 0; t < opt.samples; ++t) {
      FpVec f(n);
      for (auto& x : f) x = dist(rng);
      consider(f);
      ++rep.samples_used;
    }
  }
  if (have) {
    rep.eps = best;
    rep.eps_witness = best_w;
  }
}

void run_delta(const Sheaf& F, int k, const Subspace& Z, const Subspace& B,
               const ExpansionOptions& opt, ExpansionReport& rep) {
  rep.has_delta = true;
  if (Z.dim() == B.dim()) {  // B <= Z, so equal dimension means Z = B
    rep.delta_vacuous = true;
    return;
  }
  rep.delta_vacuous = false;
  Rat mk = mass(F, k, opt.norm);  // positive: Z != B needs a nonzero fiber
  bool exact = !opt.force_sample && log2_point_count(F.p, Z.dim()) <= opt.budget_log2;
  bool have = false;
  Rat best(0);
  FpVec best_w;
  auto consider = [&](const FpVec& f) {
    if (B.contains(f)) return;
    Rat v = cochain_norm(F, Cochain{k, f}, opt.norm) / mk;
    if (!have || v < best) {
      have = true;
      best = v;
      best_w = f;
    }
  };
  if (exact) {
    enumerate_span(Z.basis, consider);
  } else {
    rep.exact = false;
    std::mt19937_64 rng(opt.seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<u32> dist(0, F.p - 1);
    int zd = Z.dim();
    for (long t = 0; t < opt.samples; ++t) {
      FpVec f(Z.n, 0);
      for (int i = 0; i < zd; ++i) {
        u32 c = dist(rng);
        if (!c) continue;
        for (int j = 0; j < Z.n; ++j)
          f[j] = static_cast<u32>((f[j] + static_cast<u64>(c) * Z.basis.at(i, j)) % F.p);
      }
      consider(f);
      ++rep.samples_used;
    }
  }
  if (have) {
    rep.delta = best;
    rep.delta_witness = best_w;
  }
}

// Cached per-vertex link data for rejecting non-locally-minimal degree-k
// cochains quickly during scans.
struct LocMinChecker {
  const Sheaf* F;
  int k;
  struct V {
    Link L;
    Sheaf Fz;
    Subspace B;  // coboundaries in degree k-1 of the augmented link sheaf
  };
  std::vector<V> vtx;

  LocMinChecker(const Sheaf& F_, int k_, double budget_log2) : F(&F_), k(k_) {
    if (k <= 0) return;
    const SimplicialComplex& X = *F_.X;
    // build in place: Fz keeps a pointer to L.complex, so the Link must never move
    vtx.resize(X.num(0));
    for (int v = 0; v < X.num(0); ++v) {
      V& d = vtx[v];
      d.L = X.link(X.faces[0][v]);
      d.Fz = restrict_to_link(F_, d.L, true);
      d.B = coboundary_space(d.Fz, k - 1);
      if (log2_point_count(F_.p, d.B.dim()) > budget_log2)
        throw std::runtime_error("locally-minimal check: link budget exceeded");
    }
  }

  bool operator()(const Cochain& f) const {
    if (k <= 0) return true;
    for (const V& d : vtx) {
      Cochain fz = link_restrict(*F, d.Fz, d.L, f);
      if (quotient_norm(d.Fz, fz, d.B, NormVariant::WeightedSupport) !=
          cochain_norm(d.Fz, fz, NormVariant::WeightedSupport))
        return false;
    }
    return true;
  }
};

}  // namespace

ExpansionReport coboundary_expansion(const Sheaf& F, int k, const ExpansionOptions& opt) {
  ExpansionReport rep;
  EpsSetup s;
  s.k = k;
  s.out_degree = k + 1;
  s.D = coboundary_matrix(F, k);
  s.R = coboundary_space(F, k);
  s.mk = mass(F, k, opt.norm);
  s.mout = mass(F, k + 1, opt.norm);
  run_eps(F, s, opt, rep);
  return rep;
}

ExpansionReport cosystolic_expansion(const Sheaf& F, int k, const ExpansionOptions& opt) {
  ExpansionReport rep;
  EpsSetup s;
  s.k = k;
  s.out_degree = k + 1;
  s.D = coboundary_matrix(F, k);
  s.R = cocycle_space(F, k);
  s.mk = mass(F, k, opt.norm);
  s.mout = mass(F, k + 1, opt.norm);
  run_eps(F, s, opt, rep);
  run_delta(F, k, s.R, coboundary_space(F, k), opt, rep);
  return rep;
}

ExpansionReport systolic_expansion(const Sheaf& F, int k, const ExpansionOptions& opt) {
  ExpansionReport rep;
  EpsSetup s;
  s.k = k;
  s.out_degree = k - 1;
  s.D = boundary_matrix(F, k);
  s.R = chain_cycle_space(F, k);
  s.mk = mass(F, k, opt.norm);
  s.mout = mass(F, k - 1, opt.norm);
  run_eps(F, s, opt, rep);
  run_delta(F, k, s.R, chain_boundary_space(F, k), opt, rep);
  return rep;
}

bool is_minimal(const Sheaf& F, const Cochain& f, double budget_log2) {
  Subspace B = coboundary_space(F, f.degree);
  if (log2_point_count(F.p, B.dim()) > budget_log2)
    throw std::runtime_error("is_minimal: coboundary space exceeds enumeration budget");
  return quotient_norm(F, f, B, NormVariant::WeightedSupport) ==
         cochain_norm(F, f, NormVariant::WeightedSupport);
}

bool is_locally_minimal_at(const Sheaf& F, const Cochain& f, int i, int zi,
                           double budget_log2) {
  int k = f.degree;
  // f_z lives in degree k-i-1; below degree 0 there are no coboundaries in
  // the link, so minimality is automatic
  if (i >= k) return true;
  const SimplicialComplex& X = *F.X;
  Link L = X.link(X.faces[i][zi]);
  Sheaf Fz = restrict_to_link(F, L, true);
  Cochain fz = link_restrict(F, Fz, L, f);
  return is_minimal(Fz, fz, budget_log2);
}

bool is_locally_minimal(const Sheaf& F, const Cochain& f, double budget_log2) {
  if (f.degree <= 0) return true;
  for (int v = 0; v < F.X->num(0); ++v)
    if (!is_locally_minimal_at(F, f, 0, v, budget_log2)) return false;
  return true;
}

ApproximationResult locally_minimal_approximation(const Sheaf& F, const Cochain& f,
                                                  double budget_log2) {
  const SimplicialComplex& X = *F.X;
  int k = f.degree - 1;  // corrections live in C^k
  ApproximationResult out;
  out.corrected = f;
  out.g = zero_cochain(F, k);
  if (f.degree <= 0) return out;

  struct VtxData {
    Link L;
    Sheaf Fz;
    FpMat D;  // d_{k-1} of the augmented link sheaf
    int hdim = 0;
  };
  // build in place: Fz keeps a pointer to L.complex, so the Link must never move
  std::vector<VtxData> vtx(X.num(0));
  for (int v = 0; v < X.num(0); ++v) {
    VtxData& d = vtx[v];
    d.L = X.link(X.faces[0][v]);
    d.Fz = restrict_to_link(F, d.L, true);
    d.D = coboundary_matrix(d.Fz, k - 1);
    d.hdim = d.Fz.cochain_dim(k - 1);
    if (log2_point_count(F.p, d.hdim) > budget_log2)
      throw std::runtime_error("locally_minimal_approximation: link search exceeds budget");
  }
  FpMat Dk = coboundary_matrix(F, k);

  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < X.num(0); ++v) {
      const VtxData& d = vtx[v];
      Cochain fz = link_restrict(F, d.Fz, d.L, out.corrected);
      Rat best = cochain_norm(d.Fz, fz, NormVariant::WeightedSupport);
      FpVec best_h;
      bool found = false;
      lex_enumerate(F.p, d.hdim, [&](const FpVec& h) {
        FpVec cand = vec_sub(fz.v, mat_vec(d.D, h), F.p);
        Rat nn = cochain_norm(d.Fz, Cochain{k - 1 + 1, cand}, NormVariant::WeightedSupport);
        if (nn < best) {
          best = nn;
          best_h = h;
          found = true;
        }
      });
      if (!found) continue;
      Cochain hx = link_extend(F, d.Fz, d.L, Cochain{k - 1, best_h});
      vec_add_inplace(out.g.v, hx.v, F.p);
      out.corrected.v = vec_sub(out.corrected.v, mat_vec(Dk, hx.v), F.p);
      ++out.rounds;
      changed = true;
    }
  }
  return out;
}

SmallSetExpansionReport small_locally_minimal_expansion_check(const Sheaf& F, int k,
                                                              const Rat& alpha, const Rat& beta,
                                                              bool cocycles_only,
                                                              double budget_log2) {
  SmallSetExpansionReport rep;
  rep.k = k;
  rep.alpha = alpha;
  rep.beta = beta;
  rep.cocycles_only = cocycles_only;
  const SimplicialComplex& X = *F.X;
  if (k < 0 || k > X.dim() || F.cochain_dim(k) == 0) return rep;
  int n = F.cochain_dim(k);
  FpMat D = coboundary_matrix(F, k);
  auto off = F.offsets(k);

  struct Fc {
    int idx;
    Rat w;
    int off, len;
  };
  std::vector<Fc> faces;
  for (int i = 0; i < X.num(k); ++i)
    if (F.dim_at(k, i) > 0) faces.push_back({i, X.weight(k, i), off[i], F.dim_at(k, i)});

  LocMinChecker loc_min(F, k, budget_log2);

  double budget = std::pow(2.0, budget_log2);
  double steps = 0;
  FpVec cur(n, 0);
  Rat wsum(0);
  bool have_min = false;
  Rat min_ratio(0);
  FpVec min_w, viol_w;

  auto process = [&](const FpVec& f) {
    if (++steps > budget)
      throw std::runtime_error("small_locally_minimal_expansion_check: scan budget exceeded");
    FpVec df = mat_vec(D, f);
    if (cocycles_only && !is_zero_vec(df)) return;
    if (!loc_min(Cochain{k, f})) return;
    ++rep.candidates;
    rep.any = true;
    Rat nf = wsum;  // full support on the chosen faces
    Rat ndf = cochain_norm(F, Cochain{k + 1, df}, NormVariant::WeightedSupport);
    Rat ratio = ndf / nf;
    if (!have_min || ratio < min_ratio) {
      have_min = true;
      min_ratio = ratio;
      min_w = f;
    }
    if (ndf < beta * nf && rep.ok) {
      rep.ok = false;
      viol_w = f;
    }
  };

  std::function<void(size_t)> extend = [&](size_t start) {
    for (size_t j = start; j < faces.size(); ++j) {
      const Fc& fc = faces[j];
      Rat w2 = wsum + fc.w;
      if (!(w2 < alpha)) continue;  // candidates need ||f||_ws strictly below alpha
      wsum = w2;
      // all nonzero values on this block
      FpVec blockv(fc.len, 0);
      lex_enumerate(F.p, fc.len, [&](const FpVec& b) {
        if (is_zero_vec(b)) return;
        for (int t = 0; t < fc.len; ++t) cur[fc.off + t] = b[t];
        process(cur);
        extend(j + 1);
      });
      for (int t = 0; t < fc.len; ++t) cur[fc.off + t] = 0;
      wsum -= fc.w;
    }
  };
  extend(0);
  rep.min_ratio = min_ratio;
  rep.witness = rep.ok ? min_w : viol_w;
  return rep;
}

std::optional<Rat> min_locally_minimal_cocycle_norm(const Sheaf& F, int k, double budget_log2) {
  Subspace Z = cocycle_space(F, k);
  if (log2_point_count(F.p, Z.dim()) > budget_log2)
    throw std::runtime_error("min_locally_minimal_cocycle_norm: cocycle space exceeds budget");
  LocMinChecker loc_min(F, k, budget_log2);
  bool have = false;
  Rat best(0);
  enumerate_span(Z.basis, [&](const FpVec& f) {
    if (is_zero_vec(f)) return;
    Cochain c{k, f};
    Rat nrm = cochain_norm(F, c, NormVariant::WeightedSupport);
    if (have && nrm >= best) return;  // cheap prune before the link checks
    if (!loc_min(c)) return;
    best = nrm;
    have = true;
  });
  if (!have) return std::nullopt;
  return best;
}

Rat local_skeleton_alpha(const SimplicialComplex& X, int i) {
  if (i == -1) return X.skeleton_alpha_exact();
  Rat worst(0);
  bool have = false;
  for (int z = 0; z < X.num(i); ++z) {
    Rat a = X.link(X.faces[i][z]).complex.skeleton_alpha_exact();
    if (!have || a > worst) {
      worst = a;
      have = true;
    }
  }
  return worst;
}

LocalExpansionSummary local_coboundary_expansion_min(const Sheaf& F, int i, int k,
                                                     const ExpansionOptions& opt) {
  LocalExpansionSummary out;
  auto absorb = [&](const ExpansionReport& r, int face) {
    if (!r.defined || r.vacuous) return;  // conventionally +inf, no constraint
    if (out.all_undefined || r.eps < out.eps) {
      out.eps = r.eps;
      out.argmin_face = face;
      out.all_undefined = false;
    }
  };
  if (i == -1) {
    absorb(coboundary_expansion(F, k, opt), -1);
    return out;
  }
  const SimplicialComplex& X = *F.X;
  for (int z = 0; z < X.num(i); ++z) {
    Link L = X.link(X.faces[i][z]);
    Sheaf Fz = restrict_to_link(F, L, true);
    absorb(coboundary_expansion(Fz, k - i - 1, opt), z);
  }
  return out;
}

bool HeavyStructure::is_heavy(int i, int x) const {
  if (i == -1) return empty_heavy;
  if (i < -1 || i > k) return false;
  return heavy[i][x] != 0;
}

Rat HeavyStructure::heavy_weight(int i) const {
  if (i == -1) return empty_heavy ? Rat(1) : Rat(0);
  Rat t(0);
  for (int x = 0; x < X->num(i); ++x)
    if (heavy[i][x]) t += X->weight(i, x);
  return t;
}

Rat HeavyStructure::upsilon_weight() const {
  Rat t(0);
  for (int y : upsilon) t += X->weight(k + 1, y);
  return t;
}

bool HeavyStructure::descends(int ydim, int y, int xdim, int x) const {
  if (!is_heavy(ydim, y) || !is_heavy(xdim, x)) return false;
  if (ydim == xdim) return ydim == -1 || x == y;
  if (ydim < xdim) return false;
  if (ydim == 0) return xdim == -1;  // the only proper face of a vertex is the empty face
  for (const auto& [fidx, pos] : X->facets[ydim][y])
    if (descends(ydim - 1, fidx, xdim, x)) return true;
  return false;
}

std::vector<std::pair<int, int>> HeavyStructure::descent_set(int y) const {
  std::set<std::pair<int, int>> seen;
  if (k + 1 > X->dim()) return {};
  std::vector<std::pair<int, int>> stack;
  for (const auto& [fx, pos] : X->facets[k + 1][y])
    if (heavy[k][fx] && seen.insert({k, fx}).second) stack.push_back({k, fx});
  while (!stack.empty()) {
    auto [i, x] = stack.back();
    stack.pop_back();
    if (i == 0) {
      if (empty_heavy) seen.insert({-1, 0});
      continue;
    }
    if (i == -1) continue;
    for (const auto& [fx, pos] : X->facets[i][x])
      if (heavy[i - 1][fx] && seen.insert({i - 1, fx}).second) stack.push_back({i - 1, fx});
  }
  return {seen.begin(), seen.end()};
}

std::vector<std::pair<int, int>> HeavyStructure::terminals_of(int y) const {
  std::set<std::pair<int, int>> term(terminals.begin(), terminals.end());
  std::vector<std::pair<int, int>> out;
  for (const auto& pr : descent_set(y))
    if (term.count(pr)) out.push_back(pr);
  return out;
}

HeavyStructure heavy_structure(const Sheaf& F, const Cochain& f,
                               const std::vector<Rat>& thresholds) {
  const SimplicialComplex& X = *F.X;
  int k = f.degree;
  if (static_cast<int>(thresholds.size()) != k + 1)
    throw std::invalid_argument("heavy_structure: need thresholds for dims -1..k-1");
  HeavyStructure H;
  H.X = &X;
  H.k = k;
  H.thresholds = thresholds;
  H.heavy.assign(k + 1, {});
  for (int i = 0; i <= k; ++i) H.heavy[i].assign(X.num(i), 0);
  for (int x : support_faces(F, f)) H.heavy[k][x] = 1;

  for (int i = k; i >= 0; --i) {
    const Rat& h = thresholds[i];  // h_{i-1}
    if (i == 0) {
      Rat acc(0);
      for (int x = 0; x < X.num(0); ++x)
        if (H.heavy[0][x]) acc += X.weight(0, x);
      H.empty_heavy = acc >= h;  // w(X(0) over the empty face) = 1
    } else {
      std::vector<Rat> acc(X.num(i - 1), Rat(0));
      for (int y = 0; y < X.num(i); ++y) {
        if (!H.heavy[i][y]) continue;
        for (const auto& [x, pos] : X.facets[i][y]) acc[x] += X.weight(i, y);
      }
      // w(X(i) containing x) = (i+1) w(x) for an (i-1)-face x
      for (int x = 0; x < X.num(i - 1); ++x)
        if (acc[x] >= h * Rat(i + 1) * X.weight(i - 1, x)) H.heavy[i - 1][x] = 1;
    }
  }

  for (int i = 0; i <= k; ++i) {
    std::vector<int> Ai;
    for (int x = 0; x < X.num(i); ++x)
      if (H.heavy[i][x]) Ai.push_back(x);
    for (size_t a = 0; a < Ai.size(); ++a)
      for (size_t b = a + 1; b < Ai.size(); ++b) {
        const Face& fx = X.faces[i][Ai[a]];
        const Face& fy = X.faces[i][Ai[b]];
        Face inter;
        std::set_intersection(fx.begin(), fx.end(), fy.begin(), fy.end(),
                              std::back_inserter(inter));
        if (static_cast<int>(inter.size()) != i) continue;
        bool inter_heavy =
            i == 0 ? H.empty_heavy : H.heavy[i - 1][X.index_of(inter)] != 0;
        if (!inter_heavy) H.bad_pairs.push_back({i, Ai[a], Ai[b]});
      }
  }

  if (k + 1 <= X.dim()) {
    std::set<int> ups;
    for (const BadPair& bp : H.bad_pairs) {
      const Face& fx = X.faces[bp.i][bp.x];
      const Face& fy = X.faces[bp.i][bp.y];
      Face u;
      std::set_union(fx.begin(), fx.end(), fy.begin(), fy.end(), std::back_inserter(u));
      for (int y2 = 0; y2 < X.num(k + 1); ++y2) {
        const Face& big = X.faces[k + 1][y2];
        if (std::includes(big.begin(), big.end(), u.begin(), u.end())) ups.insert(y2);
      }
    }
    H.upsilon.assign(ups.begin(), ups.end());
  }

  if (H.empty_heavy) H.terminals.push_back({-1, 0});
  for (int i = 0; i <= k; ++i)
    for (int x = 0; x < X.num(i); ++x) {
      if (!H.heavy[i][x]) continue;
      bool heavy_facet = false;
      if (i == 0) {
        heavy_facet = H.empty_heavy;
      } else {
        for (const auto& [fx, pos] : X.facets[i][x])
          if (H.heavy[i - 1][fx]) {
            heavy_facet = true;
            break;
          }
      }
      if (!heavy_facet) H.terminals.push_back({i, x});
    }
  return H;
}

Rat bad_faces_bound(int k, const std::vector<Rat>& thresholds, const std::vector<Rat>& alphas,
                    const Rat& f_norm) {
  if (static_cast<int>(thresholds.size()) != k + 1 ||
      static_cast<int>(alphas.size()) != k + 1)
    throw std::invalid_argument("bad_faces_bound: need entries for dims -1..k-1");
  Rat total(0);
  for (int i = 0; i <= k; ++i) {
    Rat denom(1);
    for (int j = i; j <= k - 1; ++j) denom *= thresholds[j + 1];
    total += Rat(binom(k + 2, i + 2)) * Rat(i + 1) * (alphas[i] + thresholds[i]) / denom;
  }
  return total * f_norm;
}

long vine_number(int n) {
  if (n < 1 || n > 5) throw std::invalid_argument("vine_number: supported for 1 <= n <= 5");
  std::vector<std::vector<int>> lvl(n + 1);
  for (int m = 0; m < (1 << n); ++m) lvl[__builtin_popcount(static_cast<unsigned>(m))].push_back(m);
  std::vector<std::map<int, int>> pos(n + 1);
  for (int j = 0; j <= n; ++j)
    for (size_t t = 0; t < lvl[j].size(); ++t) pos[j][lvl[j][t]] = static_cast<int>(t);
  // facet positions one level down, as bitmasks over that level's ordering
  std::vector<std::vector<u32>> fmask(n + 1);
  for (int j = 1; j <= n; ++j) {
    fmask[j].resize(lvl[j].size(), 0);
    for (size_t t = 0; t < lvl[j].size(); ++t) {
      int m = lvl[j][t];
      for (int b = 0; b < n; ++b)
        if (m >> b & 1) fmask[j][t] |= u32(1) << pos[j - 1].at(m ^ (1 << b));
    }
  }
  // value(j, L) = best terminal count achievable by levels 0..j when level j
  // equals L; members of L with no facet chosen below are terminal
  std::vector<std::map<u32, long>> memo(n + 1);
  std::function<long(int, u32)> value = [&](int j, u32 L) -> long {
    if (j == 0) return __builtin_popcount(L);  // the empty set is always terminal
    auto it = memo[j].find(L);
    if (it != memo[j].end()) return it->second;
    u32 cov = 0;  // level j-1 sets with a superset in L (the only allowed members)
    for (size_t t = 0; t < lvl[j].size(); ++t)
      if (L >> t & 1) cov |= fmask[j][t];
    long best = -1;
    u32 sub = cov;
    for (;;) {
      long term = 0;
      for (size_t t = 0; t < lvl[j].size(); ++t)
        if ((L >> t & 1) && !(fmask[j][t] & sub)) ++term;
      best = std::max(best, term + value(j - 1, sub));
      if (sub == 0) break;
      sub = (sub - 1) & cov;
    }
    memo[j][L] = best;
    return best;
  };
  return value(n, 1u);  // the top level holds exactly the full set
}

long vine_number_bruteforce(int n) {
  if (n < 1 || n > 4)
    throw std::invalid_argument("vine_number_bruteforce: supported for 1 <= n <= 4");
  int full = (1 << n) - 1;
  int nsub = 1 << n;
  long best = 0;
  for (u32 m = 0; m < (u32(1) << (nsub - 1)); ++m) {
    auto member = [&](int s) { return s == full || ((m >> s) & 1) != 0; };
    // a member is good if a saturated chain inside E joins it to the full set
    std::vector<char> good(nsub, 0);
    good[full] = 1;
    for (int j = n - 1; j >= 0; --j)
      for (int s = 0; s < nsub; ++s) {
        if (__builtin_popcount(static_cast<unsigned>(s)) != j || !member(s)) continue;
        for (int b = 0; b < n; ++b)
          if (!(s >> b & 1) && member(s | (1 << b)) && good[s | (1 << b)]) {
            good[s] = 1;
            break;
          }
      }
    bool vine = true;
    for (int s = 0; s < nsub && vine; ++s)
      if (member(s) && !good[s]) vine = false;
    if (!vine) continue;
    long terms = 0;
    for (int s = 0; s < nsub; ++s) {
      if (!member(s)) continue;
      bool term = true;
      for (int b = 0; b < n && term; ++b)
        if ((s >> b & 1) && member(s ^ (1 << b))) term = false;
      if (term) ++terms;
    }
    best = std::max(best, terms);
  }
  return best;
}

}  // namespace sheafltc
