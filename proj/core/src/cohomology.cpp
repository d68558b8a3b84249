#include "sheafltc/cohomology.hpp"

#include <algorithm>
#include <stdexcept>

namespace sheafltc {

FpMat coboundary_matrix(const Sheaf& F, int k) {
  const SimplicialComplex& X = *F.X;
  int rows = F.cochain_dim(k + 1);
  int cols = F.cochain_dim(k);
  FpMat D(rows, cols, F.p);
  if (rows == 0 || cols == 0) return D;
  if (k == -1) {
    auto off = F.offsets(0);
    for (int v = 0; v < X.num(0); ++v) {
      const FpMat& r = F.res_from_empty[v];
      for (int a = 0; a < r.rows; ++a)
        for (int b = 0; b < r.cols; ++b) D.at(off[v] + a, b) = r.at(a, b);
    }
    return D;
  }
  auto off_hi = F.offsets(k + 1);
  auto off_lo = F.offsets(k);
  for (int yi = 0; yi < X.num(k + 1); ++yi) {
    for (const auto& [xi, pos] : X.facets[k + 1][yi]) {
      // find the cofacet slot on the facet side
      const auto& cof = X.cofacets[k][xi];
      int slot = -1;
      for (size_t t = 0; t < cof.size(); ++t)
        if (cof[t].first == yi) {
          slot = static_cast<int>(t);
          break;
        }
      const FpMat& r = F.res[k][xi][slot];
      u32 sgn = (pos % 2 == 0) ? 1 : F.p - 1;
      for (int a = 0; a < r.rows; ++a)
        for (int b = 0; b < r.cols; ++b)
          D.at(off_hi[yi] + a, off_lo[xi] + b) =
              static_cast<u32>((static_cast<u64>(sgn) * r.at(a, b)) % F.p);
    }
  }
  return D;
}

FpMat boundary_matrix(const Sheaf& F, int k) { return transpose(coboundary_matrix(F, k - 1)); }

Cochain apply_d(const Sheaf& F, const Cochain& f) {
  Cochain out;
  out.degree = f.degree + 1;
  out.v = mat_vec(coboundary_matrix(F, f.degree), f.v);
  return out;
}

Cochain apply_boundary(const Sheaf& F, const Cochain& f) {
  Cochain out;
  out.degree = f.degree - 1;
  out.v = mat_vec(boundary_matrix(F, f.degree), f.v);
  return out;
}

std::vector<int> Cohomology::h_list(int d) const {
  std::vector<int> out;
  for (int k = 0; k <= d; ++k) out.push_back(data.count(k) ? data.at(k).h() : 0);
  return out;
}

Cohomology cohomology(const Sheaf& F) {
  Cohomology coh;
  int low = F.augmented ? -1 : 0;
  int d = F.X->dim();
  for (int k = low; k <= d; ++k) {
    DegreeData dd;
    dd.c_dim = F.cochain_dim(k);
    dd.Z = Subspace::from_cols(nullspace(coboundary_matrix(F, k)));
    if (k == low)
      dd.B = Subspace::zero(dd.c_dim, F.p);
    else
      dd.B = Subspace::from_cols(coboundary_matrix(F, k - 1));
    FpMat reduced(dd.Z.dim(), dd.c_dim, F.p);
    for (int i = 0; i < dd.Z.dim(); ++i) {
      FpVec r = dd.B.reduce(dd.Z.basis.row(i));
      for (int j = 0; j < dd.c_dim; ++j) reduced.at(i, j) = r[j];
    }
    dd.H_reps = Subspace::from_rows(reduced);
    coh.data[k] = std::move(dd);
  }
  return coh;
}

Subspace cocycle_space(const Sheaf& F, int k) {
  return Subspace::from_cols(nullspace(coboundary_matrix(F, k)));
}

Subspace coboundary_space(const Sheaf& F, int k) {
  return Subspace::from_cols(coboundary_matrix(F, k - 1));
}

Subspace chain_cycle_space(const Sheaf& F, int k) {
  return Subspace::from_cols(nullspace(boundary_matrix(F, k)));
}

Subspace chain_boundary_space(const Sheaf& F, int k) {
  return Subspace::from_cols(boundary_matrix(F, k + 1));
}

FpVec class_coords(const DegreeData& dd, const FpVec& cocycle) {
  if (!dd.Z.contains(cocycle)) throw std::invalid_argument("class_coords: not a cocycle");
  return dd.H_reps.coords_of(dd.B.reduce(cocycle));
}

FpMat res_chain(const Sheaf& F, const Face& from, const Face& to) {
  Face cur = from;
  FpMat M = FpMat::identity(F.dim_at(static_cast<int>(from.size()) - 1,
                                     from.empty() ? 0 : F.X->index_of(from)),
                            F.p);
  for (int v : to) {
    if (std::binary_search(cur.begin(), cur.end(), v)) continue;
    Face next = cur;
    next.insert(std::lower_bound(next.begin(), next.end(), v), v);
    M = mat_mul(restriction_between(F, cur, next), M);
    cur = next;
  }
  if (cur != to) throw std::invalid_argument("res_chain: faces not nested");
  return M;
}

Cochain cup_product(const Sheaf& G, int alpha_degree, const FpVec& alpha, const Cochain& g) {
  const SimplicialComplex& X = *G.X;
  if (alpha_degree < 0 || g.degree < 0)
    throw std::invalid_argument("cup_product needs non-negative degrees");
  int n = alpha_degree + g.degree;
  Cochain out = zero_cochain(G, n);
  if (n > X.dim()) return out;
  auto off_out = G.offsets(n);
  auto off_g = G.offsets(g.degree);
  for (int ui = 0; ui < X.num(n); ++ui) {
    const Face& u = X.faces[n][ui];
    Face front(u.begin(), u.begin() + alpha_degree + 1);
    Face back(u.begin() + alpha_degree, u.end());
    u32 a = alpha[X.index_of(front)];
    if (!a) continue;
    FpMat R = res_chain(G, back, u);
    int bi = X.index_of(back);
    FpVec gb(g.v.begin() + off_g[bi], g.v.begin() + off_g[bi] + G.dims[g.degree][bi]);
    FpVec val = mat_vec(R, gb);
    for (size_t t = 0; t < val.size(); ++t)
      out.v[off_out[ui] + t] =
          static_cast<u32>((out.v[off_out[ui] + t] + static_cast<u64>(a) * val[t]) % G.p);
  }
  return out;
}

Cochain apply_morphism(const Sheaf& F, const Sheaf& G, const SheafMorphism& m, const Cochain& f) {
  Cochain out = zero_cochain(G, f.degree);
  if (f.degree == -1) {
    out.v = mat_vec(m.empty_map, f.v);
    return out;
  }
  auto offF = F.offsets(f.degree);
  auto offG = G.offsets(f.degree);
  for (int i = 0; i < F.X->num(f.degree); ++i) {
    FpVec b(f.v.begin() + offF[i], f.v.begin() + offF[i] + F.dims[f.degree][i]);
    FpVec r = mat_vec(m.maps[f.degree][i], b);
    std::copy(r.begin(), r.end(), out.v.begin() + offG[i]);
  }
  return out;
}

LesReport les_dimension_check(const Sheaf& F, const Sheaf& G, const Sheaf& H,
                              const SheafMorphism& a, const SheafMorphism& b) {
  LesReport rep;
  const SimplicialComplex& X = *F.X;
  int d = X.dim();

  if (validate_morphism(F, G, a) || validate_morphism(G, H, b)) {
    rep.sheaf_exact = false;
    rep.long_sequence_exact = false;
    rep.detail = "morphism naturality fails";
    return rep;
  }
  for (int k = 0; k <= d; ++k)
    for (int i = 0; i < X.num(k); ++i) {
      const FpMat& ax = a.maps[k][i];
      const FpMat& bx = b.maps[k][i];
      bool ok = rank(ax) == ax.cols && rank(bx) == bx.rows && is_zero(mat_mul(bx, ax)) &&
                rank(ax) + rank(bx) == G.dims[k][i];
      if (!ok) {
        rep.sheaf_exact = false;
        rep.detail = "short sequence not exact at face " + face_key(X.faces[k][i]);
        return rep;
      }
    }

  Cohomology cF = cohomology(F), cG = cohomology(G), cH = cohomology(H);
  rep.hF = cF.h_list(d);
  rep.hG = cG.h_list(d);
  rep.hH = cH.h_list(d);

  auto induced = [&](const Cohomology& src, const Cohomology& dst, const Sheaf& Fs,
                     const Sheaf& Gs, const SheafMorphism& m, int k) {
    const DegreeData& sd = src.at(k);
    const DegreeData& dn = dst.at(k);
    FpMat M(dn.h(), sd.h(), Fs.p);
    for (int i = 0; i < sd.h(); ++i) {
      Cochain f;
      f.degree = k;
      f.v = sd.H_reps.basis.row(i);
      Cochain g = apply_morphism(Fs, Gs, m, f);
      FpVec cc = class_coords(dn, g.v);
      for (int r = 0; r < dn.h(); ++r) M.at(r, i) = cc[r];
    }
    return M;
  };

  std::vector<int> kerA(d + 1, 0);
  for (int k = 0; k <= d; ++k) {
    FpMat A = induced(cF, cG, F, G, a, k);
    FpMat B = induced(cG, cH, G, H, b, k);
    int ra = rank(A), rb = rank(B);
    rep.rankA.push_back(ra);
    rep.rankB.push_back(rb);
    kerA[k] = rep.hF[k] - ra;
    if (ra + rb != rep.hG[k]) {
      rep.long_sequence_exact = false;
      rep.detail = "exactness fails at the middle term in degree " + std::to_string(k);
    }
  }
  // connecting map ranks are forced from both sides; they must agree
  rep.connecting_rank.assign(d + 1, 0);
  for (int k = 0; k <= d; ++k) {
    int from_ker = (k + 1 <= d) ? kerA[k + 1] : 0;
    int from_im = rep.hH[k] - rep.rankB[k];
    rep.connecting_rank[k] = from_im;
    if (from_ker != from_im) {
      rep.long_sequence_exact = false;
      rep.detail = "connecting rank mismatch in degree " + std::to_string(k);
    }
  }
  if (kerA[0] != 0) {
    rep.long_sequence_exact = false;
    rep.detail = "left exactness fails in degree 0";
  }
  return rep;
}

}  // namespace sheafltc
