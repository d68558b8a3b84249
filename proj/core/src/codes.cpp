#include "sheafltc/codes.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <stdexcept>

namespace sheafltc {

namespace {

// letter distance: number of k-faces where the blocks of a and b differ
long letter_distance(const FpVec& a, const FpVec& b, int letters, int m, u32 p) {
  long d = 0;
  for (int i = 0; i < letters; ++i) {
    for (int t = 0; t < m; ++t) {
      u32 x = a[static_cast<size_t>(i) * m + t];
      u32 y = b[static_cast<size_t>(i) * m + t];
      if (x % p != y % p) {
        ++d;
        break;
      }
    }
  }
  return d;
}

long min_letter_distance_to_code(const FpVec& f, const Subspace& Z, int letters, int m, u32 p) {
  long best = letters + 1;
  enumerate_span(Z.basis, [&](const FpVec& z) {
    long d = letter_distance(f, z, letters, m, p);
    if (d < best) best = d;
  });
  return best;
}

long rejecting_faces(const Sheaf& F, const FpMat& dk, int k, const FpVec& f) {
  Cochain df{k + 1, mat_vec(dk, f)};
  return static_cast<long>(support_faces(F, df).size());
}

}  // namespace

CocycleCode build_code(const Sheaf& F, int k) {
  if (F.X == nullptr) throw std::invalid_argument("build_code: sheaf has no complex");
  const SimplicialComplex& X = *F.X;
  if (k < 0 || k > X.dim() - 1)
    throw std::invalid_argument("build_code: degree must lie in [0, dim X - 1]");
  if (F.validate()) throw std::invalid_argument("build_code: sheaf fails validation");
  CocycleCode c;
  c.F = &F;
  c.k = k;
  c.p = F.p;
  c.letters = X.num(k);
  if (c.letters == 0) throw std::invalid_argument("build_code: no k-faces");
  c.m = F.dims[k][0];
  for (int i = 0; i < c.letters; ++i)
    if (F.dims[k][i] != c.m)
      throw std::invalid_argument(
          "build_code: the alphabet needs one fiber dimension on every k-face");
  if (c.m == 0) throw std::invalid_argument("build_code: zero fibers give a length-0 code");
  c.dim_c = F.cochain_dim(k);
  c.Z = cocycle_space(F, k);
  c.B = coboundary_space(F, k);
  c.rate = Rat(c.Z.dim(), c.dim_c);
  c.coboundaries_trivial = c.B.dim() == 0;
  return c;
}

std::optional<Rat> code_distance(const CocycleCode& code, double budget_log2) {
  if (log2_point_count(code.p, code.Z.dim()) > budget_log2)
    throw std::runtime_error("code_distance: code enumeration exceeds the budget");
  std::optional<long> best;
  enumerate_span(code.Z.basis, [&](const FpVec& z) {
    if (code.coboundaries_trivial ? is_zero_vec(z) : code.B.contains(z)) return;
    long w = 0;
    for (int i = 0; i < code.letters; ++i)
      for (int t = 0; t < code.m; ++t)
        if (z[static_cast<size_t>(i) * code.m + t]) {
          ++w;
          break;
        }
    if (!best || w < *best) best = w;
  });
  if (!best) return std::nullopt;
  return Rat(*best, code.letters);
}

TesterReport tester_stats(const CocycleCode& code, const ExpansionOptions& opt, long table_cap) {
  const Sheaf& F = *code.F;
  const SimplicialComplex& X = *F.X;
  TesterReport rep;
  rep.k = code.k;
  rep.queries = code.k + 2;
  rep.faces = X.num(code.k + 1);
  rep.seed = opt.seed;
  if (rep.faces == 0) throw std::invalid_argument("tester_stats: no (k+1)-faces to probe");
  FpMat dk = coboundary_matrix(F, code.k);
  if (log2_point_count(code.p, code.Z.dim()) > opt.budget_log2)
    throw std::runtime_error("tester_stats: code enumeration exceeds the budget");

  bool have = false;
  auto consider = [&](const FpVec& f, long rejects, long dist) {
    Rat ratio = (Rat(rejects) * code.letters) / (Rat(dist) * rep.faces);
    if (!have || ratio < rep.mu) {
      have = true;
      rep.mu = ratio;
      rep.witness = f;
      rep.witness_rejects = rejects;
      rep.witness_dist = dist;
    }
  };

  rep.exact = !opt.force_sample && log2_point_count(code.p, code.dim_c) <= opt.budget_log2;
  if (rep.exact) {
    // the rejection count and the code distance both depend only on f + Z^k,
    // so scanning one representative per coset covers every word
    std::vector<int> free_cols;
    for (int j = 0; j < code.dim_c; ++j)
      if (!std::binary_search(code.Z.pivots.begin(), code.Z.pivots.end(), j))
        free_cols.push_back(j);
    FpVec f(code.dim_c, 0);
    std::vector<u32> odo(free_cols.size(), 0);
    for (;;) {
      // advance the odometer; the all-zero word is the code itself
      size_t pos = 0;
      while (pos < odo.size()) {
        if (++odo[pos] < code.p) {
          f[free_cols[pos]] = odo[pos];
          break;
        }
        odo[pos] = 0;
        f[free_cols[pos]] = 0;
        ++pos;
      }
      if (pos == odo.size()) break;
      long rejects = rejecting_faces(F, dk, code.k, f);
      long dist = min_letter_distance_to_code(f, code.Z, code.letters, code.m, code.p);
      ++rep.cosets_scanned;
      consider(f, rejects, dist);
      if (static_cast<long>(rep.table.size()) < table_cap)
        rep.table.push_back(TesterRow{f, rejects, dist});
    }
  } else {
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<u32> coord(0, code.p - 1);
    for (long s = 0; s < opt.samples; ++s) {
      FpVec f(code.dim_c);
      for (auto& x : f) x = coord(rng);
      ++rep.samples_used;
      if (code.Z.contains(f)) continue;
      long rejects = rejecting_faces(F, dk, code.k, f);
      long dist = min_letter_distance_to_code(f, code.Z, code.letters, code.m, code.p);
      consider(f, rejects, dist);
    }
  }
  return rep;
}

TesterBridge tester_bridge(const CocycleCode& code, const ExpansionOptions& opt) {
  const Sheaf& F = *code.F;
  const SimplicialComplex& X = *F.X;
  TesterBridge b;
  TesterReport t = tester_stats(code, opt);
  b.mu = t.mu;
  ExpansionOptions o = opt;
  o.norm = NormVariant::NormalizedHamming;
  ExpansionReport ham = cosystolic_expansion(F, code.k, o);
  b.eps_ham = ham.eps;
  b.mu_matches_ham = t.exact && ham.exact && ham.defined && !ham.vacuous && b.mu == ham.eps;
  o.norm = NormVariant::WeightedSupport;
  ExpansionReport ws = cosystolic_expansion(F, code.k, o);
  b.eps_ws = ws.eps;
  b.delta_ws = ws.delta;
  b.P = Rat(X.degree(code.k, X.dim()));
  b.mu_above_ws_over_p2 = t.exact && ws.exact && ws.defined && b.mu >= b.eps_ws / (b.P * b.P);
  b.dist = code_distance(code, opt.budget_log2);
  b.dist_above_ws_over_p =
      b.dist.has_value() && ws.has_delta && !ws.delta_vacuous && *b.dist >= b.delta_ws / b.P;
  return b;
}

namespace {

DecodeResult decode_impl(const Sheaf& F, int k, FpVec fv, double budget_log2) {
  const SimplicialComplex& X = *F.X;
  if (k < 0 || k > X.dim() - 1) throw std::invalid_argument("decode: degree out of range");
  if (static_cast<int>(fv.size()) != F.cochain_dim(k))
    throw std::invalid_argument("decode: word length does not match C^k");
  for (auto& x : fv) x %= F.p;

  struct VtxData {
    Link L;
    Sheaf Fz;
    FpMat D;  // d_{k-1} of the augmented link sheaf
    std::vector<int> offs;
    int nlink = 0;
    int hdim = 0;
  };
  // built in place: Fz points at L.complex, so the Link must never move
  std::vector<VtxData> vtx(X.num(0));
  for (int v = 0; v < X.num(0); ++v) {
    VtxData& d = vtx[v];
    d.L = X.link(X.faces[0][v]);
    d.Fz = restrict_to_link(F, d.L, true);
    d.D = coboundary_matrix(d.Fz, k - 1);
    d.offs = d.Fz.offsets(k);
    d.nlink = d.L.complex.num(k);
    d.hdim = d.Fz.cochain_dim(k - 1);
    if (d.nlink > budget_log2)
      throw std::runtime_error("decode: link subset enumeration exceeds the budget");
  }
  std::vector<std::vector<int>> adj(X.num(0));
  for (const Face& e : X.faces[1]) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }

  FpMat Dk = coboundary_matrix(F, k);
  Cochain f{k, std::move(fv)};
  Cochain df = apply_d(F, f);

  std::queue<int> L;
  std::vector<char> inq(X.num(0), 1);
  for (int v = 0; v < X.num(0); ++v) L.push(v);

  // every correction removes at least one weight grain 1/(C(d+1,k+2) |X(d)|)
  long long success_cap =
      (binom(X.dim() + 1, k + 2) * X.num(X.dim())).convert_to<long long>();
  long long pop_cap = (success_cap + 1) * (X.num(0) + 1) + 16;

  DecodeResult out;
  while (!L.empty()) {
    if (++out.pops > pop_cap)
      throw std::logic_error("decode: correction loop exceeded its certified bound");
    int z = L.front();
    L.pop();
    inq[z] = 0;
    const VtxData& dz = vtx[z];
    Cochain gz = link_restrict(F, dz.Fz, dz.L, df);
    Rat cur = cochain_norm(dz.Fz, gz, NormVariant::WeightedSupport);
    if (cur == 0) continue;

    Rat best = cur;
    FpVec best_h;
    bool found = false;
    // subsets E of X_z(k) by size then lexicographic index tuple; E is where
    // the corrected residue is forced to vanish
    for (int s = 1; s <= dz.nlink && !(found && best == 0); ++s) {
      std::vector<int> comb(s);
      for (int i = 0; i < s; ++i) comb[i] = i;
      for (;;) {
        int rows = 0;
        for (int x : comb) rows += dz.Fz.dim_at(k, x);
        FpMat A(rows, dz.hdim, F.p);
        FpVec b(rows);
        int r = 0;
        for (int x : comb) {
          int len = dz.Fz.dim_at(k, x);
          for (int t = 0; t < len; ++t, ++r) {
            for (int c = 0; c < dz.hdim; ++c) A.at(r, c) = dz.D.at(dz.offs[x] + t, c);
            b[r] = gz.v[dz.offs[x] + t];
          }
        }
        if (auto h = solve(A, b)) {
          FpVec cand = vec_sub(gz.v, mat_vec(dz.D, *h), F.p);
          Rat nn = cochain_norm(dz.Fz, Cochain{k, cand}, NormVariant::WeightedSupport);
          if (nn < best) {
            best = nn;
            best_h = *h;
            found = true;
            if (best == 0) break;
          }
        }
        // next combination
        int i = s - 1;
        while (i >= 0 && comb[i] == dz.nlink - s + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < s; ++j) comb[j] = comb[j - 1] + 1;
      }
    }
    if (!found) continue;

    Cochain hx = link_extend(F, dz.Fz, dz.L, Cochain{k - 1, best_h});
    f.v = vec_sub(f.v, hx.v, F.p);
    df.v = vec_sub(df.v, mat_vec(Dk, hx.v), F.p);
    ++out.corrections;
    for (int z2 : adj[z])
      if (!inq[z2]) {
        L.push(z2);
        inq[z2] = 1;
      }
  }
  out.word = std::move(f.v);
  out.clean = is_zero_vec(df.v);
  return out;
}

Rat radius_impl(const SimplicialComplex& X, int k, const Rat& gamma, const Rat& gamma_prime) {
  int d = X.dim();
  if (k < 0 || k > d - 1) throw std::invalid_argument("decode_radius: degree out of range");
  Rat crowd = Rat(k + 1) * X.Q() * Rat(binom(d + 1, k + 2)) / (d + 1);
  Rat first = gamma / (crowd + 1);
  Rat m = first < gamma_prime ? first : gamma_prime;
  return m / (Rat(k + 2) * X.degree(k, d));
}

}  // namespace

DecodeResult decode(const CocycleCode& code, const FpVec& f, const DecodeParams& params) {
  return decode_impl(*code.F, code.k, f, params.budget_log2);
}

Rat decode_radius(const CocycleCode& code, const Rat& gamma, const Rat& gamma_prime) {
  return radius_impl(*code.F->X, code.k, gamma, gamma_prime);
}

CSSCode build_css(const Sheaf& F, int k) {
  if (F.X == nullptr) throw std::invalid_argument("build_css: sheaf has no complex");
  const SimplicialComplex& X = *F.X;
  if (k < 1 || k > X.dim() - 1)
    throw std::invalid_argument("build_css: degree must lie in [1, dim X - 1]");
  if (F.validate()) throw std::invalid_argument("build_css: sheaf fails validation");
  CSSCode c;
  c.F = &F;
  c.k = k;
  c.n = F.cochain_dim(k);
  if (c.n == 0) throw std::invalid_argument("build_css: C^k is zero");
  c.CX = cocycle_space(F, k);
  c.CZ = chain_cycle_space(F, k);
  c.CX_perp = chain_boundary_space(F, k);
  c.CZ_perp = coboundary_space(F, k);
  c.rate = Rat(c.CX.dim() - c.CZ_perp.dim(), c.n);

  FpMat dk = coboundary_matrix(F, k);
  FpMat bd = boundary_matrix(F, k);
  c.phi_x.reserve(dk.rows);
  for (int i = 0; i < dk.rows; ++i) c.phi_x.push_back(dk.row(i));
  c.phi_z.reserve(bd.rows);
  for (int i = 0; i < bd.rows; ++i) c.phi_z.push_back(bd.row(i));

  auto dot = [&](const FpVec& a, const FpVec& b) {
    u64 s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += static_cast<u64>(a[i]) * b[i] % F.p;
    return static_cast<u32>(s % F.p);
  };
  c.orthogonal = c.CZ.contains(c.CX_perp) && c.CX.contains(c.CZ_perp) &&
                 c.CX.dim() + c.CX_perp.dim() == c.n && c.CZ.dim() + c.CZ_perp.dim() == c.n;
  for (int i = 0; i < c.CX.basis.rows && c.orthogonal; ++i)
    for (int j = 0; j < c.CX_perp.basis.rows && c.orthogonal; ++j)
      if (dot(c.CX.basis.row(i), c.CX_perp.basis.row(j)) != 0) c.orthogonal = false;
  for (int i = 0; i < c.CZ.basis.rows && c.orthogonal; ++i)
    for (int j = 0; j < c.CZ_perp.basis.rows && c.orthogonal; ++j)
      if (dot(c.CZ.basis.row(i), c.CZ_perp.basis.row(j)) != 0) c.orthogonal = false;

  auto weight = [](const FpVec& v) {
    int w = 0;
    for (u32 x : v)
      if (x) ++w;
    return w;
  };
  for (const FpVec& r : c.phi_x) c.query_x = std::max(c.query_x, weight(r));
  for (const FpVec& r : c.phi_z) c.query_z = std::max(c.query_z, weight(r));
  int mk = F.max_face_dim(k);
  c.query_x_bound = (k + 2) * mk;
  c.query_z_bound = X.degree(k - 1, k) * mk;
  return c;
}

CSSDistances css_distances(const CSSCode& css, double budget_log2) {
  u32 p = css.F->p;
  CSSDistances out;
  auto side = [&](const Subspace& space, const Subspace& skip) -> std::optional<Rat> {
    if (log2_point_count(p, space.dim()) > budget_log2)
      throw std::runtime_error("css_distances: enumeration exceeds the budget");
    std::optional<int> best;
    enumerate_span(space.basis, [&](const FpVec& w) {
      if (skip.contains(w)) return;
      int c = 0;
      for (u32 x : w)
        if (x) ++c;
      if (!best || c < *best) best = c;
    });
    if (!best) return std::nullopt;
    return Rat(*best, css.n);
  };
  out.x = side(css.CX, css.CZ_perp);
  out.z = side(css.CZ, css.CX_perp);
  return out;
}

DecodeResult css_x_decode(const CSSCode& css, const FpVec& f, const DecodeParams& params) {
  return decode_impl(*css.F, css.k, f, params.budget_log2);
}

Rat css_decode_radius(const CSSCode& css, const Rat& gamma, const Rat& gamma_prime) {
  return radius_impl(*css.F->X, css.k, gamma, gamma_prime) / css.F->max_face_dim(css.k);
}

}  // namespace sheafltc
