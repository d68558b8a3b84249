#include "sheafltc/sheaf.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace sheafltc {

namespace {

// matrix of the codim-1 restriction x -> y, where |y| = |x|+1 and x may be
// the empty face
const FpMat& res_lookup(const Sheaf& F, const Face& x, const Face& y) {
  const SimplicialComplex& X = *F.X;
  if (x.empty()) {
    if (!F.augmented) throw std::logic_error("empty-face restriction on non-augmented sheaf");
    return F.res_from_empty.at(X.index_of(y));
  }
  int k = static_cast<int>(x.size()) - 1;
  int xi = X.index_of(x);
  int yi = X.index_of(y);
  const auto& cof = X.cofacets[k][xi];
  for (size_t t = 0; t < cof.size(); ++t)
    if (cof[t].first == yi) return F.res[k][xi][t];
  throw std::logic_error("not a cofacet: " + face_key(x) + " -> " + face_key(y));
}

}  // namespace

const FpMat& restriction_between(const Sheaf& F, const Face& from, const Face& to) {
  return res_lookup(F, from, to);
}

const FpMat& Sheaf::res_mat(int k, int i, int t) const {
  if (k < 0) return res_from_empty.at(t);
  return res[k][i][t];
}

std::vector<int> Sheaf::offsets(int k) const {
  if (k < 0) return {0};
  std::vector<int> off(dims[k].size() + 1, 0);
  for (size_t i = 0; i < dims[k].size(); ++i) off[i + 1] = off[i] + dims[k][i];
  return off;
}

int Sheaf::cochain_dim(int k) const {
  if (k < -1 || k > X->dim()) return 0;
  if (k == -1) return augmented ? empty_dim : 0;
  return std::accumulate(dims[k].begin(), dims[k].end(), 0);
}

int Sheaf::max_face_dim(int k) const {
  if (k == -1) return augmented ? empty_dim : 0;
  if (k < -1 || k > X->dim() || dims[k].empty()) return 0;
  return *std::max_element(dims[k].begin(), dims[k].end());
}

bool Sheaf::nonzero_on(int k) const {
  if (k == -1) return augmented && empty_dim > 0;
  if (k < -1 || k > X->dim()) return false;
  for (int d : dims[k])
    if (d > 0) return true;
  return false;
}

std::optional<Sheaf::SquareWitness> Sheaf::validate() const {
  const SimplicialComplex& Xc = *X;
  int d = Xc.dim();
  if (static_cast<int>(dims.size()) != d + 1) throw std::invalid_argument("dims size mismatch");
  for (int k = 0; k <= d; ++k) {
    if (static_cast<int>(dims[k].size()) != Xc.num(k))
      throw std::invalid_argument("dims level size mismatch");
    if (static_cast<int>(res[k].size()) != Xc.num(k))
      throw std::invalid_argument("res level size mismatch");
    for (int i = 0; i < Xc.num(k); ++i) {
      const auto& cof = Xc.cofacets[k][i];
      if (res[k][i].size() != cof.size())
        throw std::invalid_argument("cofacet restriction count mismatch at " +
                                    face_key(Xc.faces[k][i]));
      for (size_t t = 0; t < cof.size(); ++t) {
        const FpMat& m = res[k][i][t];
        if (m.p != p || m.cols != dims[k][i] || m.rows != dims[k + 1][cof[t].first])
          throw std::invalid_argument("restriction shape mismatch at " +
                                      face_key(Xc.faces[k][i]));
      }
    }
  }
  if (augmented) {
    if (static_cast<int>(res_from_empty.size()) != Xc.num(0))
      throw std::invalid_argument("empty-face restriction count mismatch");
    for (int v = 0; v < Xc.num(0); ++v)
      if (res_from_empty[v].cols != empty_dim || res_from_empty[v].rows != dims[0][v])
        throw std::invalid_argument("empty-face restriction shape mismatch");
  }

  // codim-2 path independence
  int low = augmented ? -1 : 0;
  for (int k = low; k + 2 <= d; ++k) {
    for (int wi = 0; wi < Xc.num(k + 2); ++wi) {
      const Face& w = Xc.faces[k + 2][wi];
      for (size_t pa = 0; pa < w.size(); ++pa) {
        for (size_t pb = pa + 1; pb < w.size(); ++pb) {
          Face x;
          for (size_t j = 0; j < w.size(); ++j)
            if (j != pa && j != pb) x.push_back(w[j]);
          if (x.empty() && !augmented) continue;
          Face y1 = x, y2 = x;
          y1.insert(std::lower_bound(y1.begin(), y1.end(), w[pb]), w[pb]);  // keeps a removed
          y2.insert(std::lower_bound(y2.begin(), y2.end(), w[pa]), w[pa]);
          FpMat via1 = mat_mul(res_lookup(*this, y1, w), res_lookup(*this, x, y1));
          FpMat via2 = mat_mul(res_lookup(*this, y2, w), res_lookup(*this, x, y2));
          if (!(via1 == via2)) return SquareWitness{x, w};
        }
      }
    }
  }
  return std::nullopt;
}

bool Sheaf::is_locally_constant() const {
  for (int k = 0; k < static_cast<int>(res.size()); ++k)
    for (const auto& per_face : res[k])
      for (const FpMat& m : per_face) {
        if (m.rows != m.cols) return false;
        if (rank(m) != m.rows) return false;
      }
  if (augmented)
    for (const FpMat& m : res_from_empty) {
      if (m.rows != m.cols) return false;
      if (rank(m) != m.rows) return false;
    }
  return true;
}

Sheaf constant_sheaf(const SimplicialComplex& X, u32 p, int d, bool augmented) {
  Sheaf F;
  F.X = &X;
  F.p = p;
  F.augmented = augmented;
  F.empty_dim = augmented ? d : 0;
  F.dims.resize(X.dim() + 1);
  F.res.resize(X.dim() + 1);
  for (int k = 0; k <= X.dim(); ++k) {
    F.dims[k].assign(X.num(k), d);
    F.res[k].assign(X.num(k), {});
    for (int i = 0; i < X.num(k); ++i)
      F.res[k][i].assign(X.cofacets[k][i].size(), FpMat::identity(d, p));
  }
  if (augmented) F.res_from_empty.assign(X.num(0), FpMat::identity(d, p));
  return F;
}

Sheaf restrict_to_link(const Sheaf& F, const Link& L, bool augmented) {
  const SimplicialComplex& Xc = *F.X;
  const SimplicialComplex& Lc = L.complex;
  int zs = static_cast<int>(L.center.size());
  Sheaf G;
  G.X = &Lc;
  G.p = F.p;
  G.augmented = augmented;
  G.empty_dim = augmented ? F.dims[zs - 1][L.center_index] : 0;
  G.dims.resize(Lc.dim() + 1 < 0 ? 0 : Lc.dim() + 1);
  G.res.resize(G.dims.size());
  for (int k = 0; k <= Lc.dim(); ++k) {
    G.dims[k].resize(Lc.num(k));
    G.res[k].resize(Lc.num(k));
    for (int i = 0; i < Lc.num(k); ++i) {
      G.dims[k][i] = F.dims[k + zs][L.join_index[k][i]];
      const auto& cof = Lc.cofacets[k][i];
      G.res[k][i].resize(cof.size());
      for (size_t t = 0; t < cof.size(); ++t) {
        int pj = L.join_index[k][i];
        int pj2 = L.join_index[k + 1][cof[t].first];
        G.res[k][i][t] = res_lookup(F, Xc.faces[k + zs][pj], Xc.faces[k + zs + 1][pj2]);
      }
    }
  }
  if (augmented) {
    G.res_from_empty.resize(Lc.num(0));
    for (int v = 0; v < Lc.num(0); ++v)
      G.res_from_empty[v] = res_lookup(F, L.center, Xc.faces[zs][L.join_index[0][v]]);
  }
  return G;
}

std::optional<Face> validate_morphism(const Sheaf& F, const Sheaf& G, const SheafMorphism& m) {
  const SimplicialComplex& X = *F.X;
  if (F.X != G.X || F.p != G.p) throw std::invalid_argument("morphism across different bases");
  for (int k = 0; k <= X.dim(); ++k)
    for (int i = 0; i < X.num(k); ++i) {
      const FpMat& mx = m.maps[k][i];
      if (mx.rows != G.dims[k][i] || mx.cols != F.dims[k][i]) return X.faces[k][i];
      for (size_t t = 0; t < X.cofacets[k][i].size(); ++t) {
        int yi = X.cofacets[k][i][t].first;
        FpMat lhs = mat_mul(m.maps[k + 1][yi], F.res[k][i][t]);
        FpMat rhs = mat_mul(G.res[k][i][t], mx);
        if (!(lhs == rhs)) return X.faces[k][i];
      }
    }
  if (F.augmented && G.augmented) {
    if (m.empty_map.rows != G.empty_dim || m.empty_map.cols != F.empty_dim) return Face{};
    for (int v = 0; v < X.num(0); ++v) {
      FpMat lhs = mat_mul(m.maps[0][v], F.res_from_empty[v]);
      FpMat rhs = mat_mul(G.res_from_empty[v], m.empty_map);
      if (!(lhs == rhs)) return Face{};
    }
  }
  return std::nullopt;
}

std::optional<Face> validate_subsheaf(const Sheaf& F, const Subsheaf& U) {
  const SimplicialComplex& X = *F.X;
  for (int k = 0; k <= X.dim(); ++k)
    for (int i = 0; i < X.num(k); ++i) {
      if (U.spaces[k][i].n != F.dims[k][i]) return X.faces[k][i];
      for (size_t t = 0; t < X.cofacets[k][i].size(); ++t) {
        int yi = X.cofacets[k][i][t].first;
        Subspace img = image_of(F.res[k][i][t], U.spaces[k][i]);
        if (!U.spaces[k + 1][yi].contains(img)) return X.faces[k][i];
      }
    }
  return std::nullopt;
}

std::pair<Sheaf, SheafMorphism> subsheaf_sheaf(const Sheaf& F, const Subsheaf& U) {
  if (F.augmented) throw std::invalid_argument("subsheaf_sheaf: augmented unsupported");
  const SimplicialComplex& X = *F.X;
  Sheaf S;
  S.X = F.X;
  S.p = F.p;
  S.dims.resize(X.dim() + 1);
  S.res.resize(X.dim() + 1);
  SheafMorphism inc;
  inc.maps.resize(X.dim() + 1);
  for (int k = 0; k <= X.dim(); ++k) {
    S.dims[k].resize(X.num(k));
    S.res[k].resize(X.num(k));
    inc.maps[k].resize(X.num(k));
    for (int i = 0; i < X.num(k); ++i) {
      S.dims[k][i] = U.spaces[k][i].dim();
      inc.maps[k][i] = transpose(U.spaces[k][i].basis);
    }
  }
  for (int k = 0; k <= X.dim(); ++k)
    for (int i = 0; i < X.num(k); ++i) {
      const auto& cof = X.cofacets[k][i];
      S.res[k][i].resize(cof.size());
      for (size_t t = 0; t < cof.size(); ++t) {
        int yi = cof[t].first;
        auto sol = solve_mat(inc.maps[k + 1][yi], mat_mul(F.res[k][i][t], inc.maps[k][i]));
        if (!sol) throw std::invalid_argument("subspaces not closed under restriction");
        S.res[k][i][t] = *sol;
      }
    }
  return {std::move(S), std::move(inc)};
}

std::pair<Sheaf, SheafMorphism> quotient_sheaf(const Sheaf& F, const Subsheaf& U) {
  if (F.augmented) throw std::invalid_argument("quotient_sheaf: augmented unsupported");
  const SimplicialComplex& X = *F.X;
  // projection = reduce by U then read the non-pivot coordinates; the section
  // embeds those coordinates back at the same positions
  auto proj_of = [](const Subspace& u) {
    std::vector<bool> is_piv(u.n, false);
    for (int c : u.pivots) is_piv[c] = true;
    std::vector<int> keep;
    for (int c = 0; c < u.n; ++c)
      if (!is_piv[c]) keep.push_back(c);
    FpMat P(static_cast<int>(keep.size()), u.n, u.p);
    for (int j = 0; j < u.n; ++j) {
      FpVec e(u.n, 0);
      e[j] = 1;
      FpVec r = u.reduce(e);
      for (size_t t = 0; t < keep.size(); ++t) P.at(static_cast<int>(t), j) = r[keep[t]];
    }
    FpMat S(u.n, static_cast<int>(keep.size()), u.p);
    for (size_t t = 0; t < keep.size(); ++t) S.at(keep[t], static_cast<int>(t)) = 1;
    return std::make_pair(P, S);
  };

  Sheaf Qs;
  Qs.X = F.X;
  Qs.p = F.p;
  Qs.dims.resize(X.dim() + 1);
  Qs.res.resize(X.dim() + 1);
  SheafMorphism pr;
  pr.maps.resize(X.dim() + 1);
  std::vector<std::vector<FpMat>> sections(X.dim() + 1);
  for (int k = 0; k <= X.dim(); ++k) {
    Qs.dims[k].resize(X.num(k));
    Qs.res[k].resize(X.num(k));
    pr.maps[k].resize(X.num(k));
    sections[k].resize(X.num(k));
    for (int i = 0; i < X.num(k); ++i) {
      auto [P, S] = proj_of(U.spaces[k][i]);
      Qs.dims[k][i] = P.rows;
      pr.maps[k][i] = P;
      sections[k][i] = S;
    }
  }
  for (int k = 0; k <= X.dim(); ++k)
    for (int i = 0; i < X.num(k); ++i) {
      const auto& cof = X.cofacets[k][i];
      Qs.res[k][i].resize(cof.size());
      for (size_t t = 0; t < cof.size(); ++t) {
        int yi = cof[t].first;
        Qs.res[k][i][t] = mat_mul(pr.maps[k + 1][yi], mat_mul(F.res[k][i][t], sections[k][i]));
      }
    }
  return {std::move(Qs), std::move(pr)};
}

Sheaf pullback_sheaf(const Sheaf& F, const SimplicialComplex& Y, const SimplicialComplex& X,
                     const SimplicialMap& u) {
  if (F.augmented) throw std::invalid_argument("pullback_sheaf: augmented unsupported");
  if (F.X != &X) throw std::invalid_argument("pullback_sheaf: sheaf not on the target complex");
  Sheaf G;
  G.X = &Y;
  G.p = F.p;
  G.dims.resize(Y.dim() + 1);
  G.res.resize(Y.dim() + 1);
  for (int k = 0; k <= Y.dim(); ++k) {
    G.dims[k].resize(Y.num(k));
    G.res[k].resize(Y.num(k));
    for (int i = 0; i < Y.num(k); ++i) {
      Face img = u.image_face(Y.faces[k][i]);
      if (static_cast<int>(img.size()) != k + 1)
        throw std::invalid_argument("pullback needs a dimension-preserving map");
      G.dims[k][i] = F.dims[k][X.index_of(img)];
    }
  }
  for (int k = 0; k <= Y.dim(); ++k)
    for (int i = 0; i < Y.num(k); ++i) {
      const auto& cof = Y.cofacets[k][i];
      G.res[k][i].resize(cof.size());
      Face img = u.image_face(Y.faces[k][i]);
      for (size_t t = 0; t < cof.size(); ++t) {
        Face img2 = u.image_face(Y.faces[k + 1][cof[t].first]);
        G.res[k][i][t] = res_lookup(F, img, img2);
      }
    }
  return G;
}

Pushforward pushforward_sheaf(const Sheaf& G, const SimplicialComplex& Y,
                              const SimplicialComplex& X, const SimplicialMap& u) {
  if (G.augmented) throw std::invalid_argument("pushforward_sheaf: augmented unsupported");
  if (G.X != &Y) throw std::invalid_argument("pushforward_sheaf: sheaf not on the source");
  Pushforward out;
  out.fiber = fiber_faces(Y, X, u);
  out.block_offset.resize(X.dim() + 1);
  Sheaf& S = out.sheaf;
  S.X = &X;
  S.p = G.p;
  S.dims.resize(X.dim() + 1);
  S.res.resize(X.dim() + 1);
  for (int k = 0; k <= X.dim(); ++k) {
    S.dims[k].resize(X.num(k));
    S.res[k].resize(X.num(k));
    out.block_offset[k].resize(X.num(k));
    for (int i = 0; i < X.num(k); ++i) {
      int off = 0;
      for (int yi : out.fiber[k][i]) {
        out.block_offset[k][i].push_back(off);
        off += G.dims[k][yi];
      }
      S.dims[k][i] = off;
    }
  }
  for (int k = 0; k <= X.dim(); ++k)
    for (int i = 0; i < X.num(k); ++i) {
      const auto& cof = X.cofacets[k][i];
      S.res[k][i].resize(cof.size());
      for (size_t t = 0; t < cof.size(); ++t) {
        int xi2 = cof[t].first;
        FpMat M(S.dims[k + 1][xi2], S.dims[k][i], S.p);
        const auto& fib2 = out.fiber[k + 1][xi2];
        for (size_t b2 = 0; b2 < fib2.size(); ++b2) {
          int y2 = fib2[b2];
          // the unique facet of y2 over (k, i)
          int yfound = -1;
          for (const auto& [yf, pos] : Y.facets[k + 1][y2]) {
            if (X.index_of(u.image_face(Y.faces[k][yf])) == i) {
              yfound = yf;
              break;
            }
          }
          if (yfound < 0) throw std::logic_error("pushforward: fiber facet missing");
          const auto& fib1 = out.fiber[k][i];
          int b1 = static_cast<int>(std::lower_bound(fib1.begin(), fib1.end(), yfound) -
                                    fib1.begin());
          const FpMat& r = res_lookup(G, Y.faces[k][yfound], Y.faces[k + 1][y2]);
          for (int a = 0; a < r.rows; ++a)
            for (int b = 0; b < r.cols; ++b)
              M.at(out.block_offset[k + 1][xi2][b2] + a, out.block_offset[k][i][b1] + b) =
                  r.at(a, b);
        }
        S.res[k][i][t] = std::move(M);
      }
    }
  return out;
}

Sheaf expander_code_sheaf(const SimplicialComplex& graph, u32 p, int m,
                          const std::vector<FpMat>& T) {
  if (graph.dim() != 1) throw std::invalid_argument("expander_code_sheaf needs a graph");
  if (static_cast<int>(T.size()) != graph.num(0))
    throw std::invalid_argument("one local map per vertex required");
  Sheaf F;
  F.X = &graph;
  F.p = p;
  F.dims.resize(2);
  F.res.resize(2);
  F.dims[0].assign(graph.num(0), m);
  F.dims[1].assign(graph.num(1), 1);
  F.res[1].assign(graph.num(1), {});
  F.res[0].resize(graph.num(0));
  for (int v = 0; v < graph.num(0); ++v) {
    const auto& cof = graph.cofacets[0][v];
    const FpMat& Tv = T[v];
    if (Tv.rows != static_cast<int>(cof.size()) || Tv.cols != m || Tv.p != p)
      throw std::invalid_argument("T_v must be deg(v) x m over the same field");
    if (rank(Tv) != m) throw std::invalid_argument("T_v must be injective");
    F.res[0][v].resize(cof.size());
    for (size_t t = 0; t < cof.size(); ++t) {
      FpMat row(1, m, p);
      for (int j = 0; j < m; ++j) row.at(0, j) = Tv.at(static_cast<int>(t), j);
      F.res[0][v][t] = std::move(row);
    }
  }
  return F;
}

Sheaf one_cocycle_sheaf(const SimplicialComplex& X, u32 p, int m,
                        const std::vector<Subspace>& edge_spaces) {
  if (X.dim() != 2) throw std::invalid_argument("one_cocycle_sheaf needs a 2-complex");
  if (static_cast<int>(edge_spaces.size()) != X.num(1))
    throw std::invalid_argument("one subspace per edge required");
  Sheaf G;
  G.X = &X;
  G.p = p;
  G.dims.resize(3);
  G.res.resize(3);
  G.dims[0].assign(X.num(0), 0);
  G.dims[1].resize(X.num(1));
  G.dims[2].assign(X.num(2), m);
  for (int e = 0; e < X.num(1); ++e) {
    if (edge_spaces[e].n != m || edge_spaces[e].p != p)
      throw std::invalid_argument("edge subspace has wrong ambient");
    G.dims[1][e] = edge_spaces[e].dim();
  }
  G.res[2].assign(X.num(2), {});
  G.res[0].resize(X.num(0));
  for (int v = 0; v < X.num(0); ++v)
    G.res[0][v].assign(X.cofacets[0][v].size(), FpMat(0, 0, p));
  for (int v = 0; v < X.num(0); ++v)
    for (size_t t = 0; t < X.cofacets[0][v].size(); ++t)
      G.res[0][v][t] = FpMat(G.dims[1][X.cofacets[0][v][t].first], 0, p);
  G.res[1].resize(X.num(1));
  for (int e = 0; e < X.num(1); ++e) {
    const auto& cof = X.cofacets[1][e];
    G.res[1][e].resize(cof.size());
    for (size_t t = 0; t < cof.size(); ++t) G.res[1][e][t] = transpose(edge_spaces[e].basis);
  }
  return G;
}

std::optional<int> one_cocycle_general_position_failure(const SimplicialComplex& X, int m, int r,
                                                        const std::vector<Subspace>& edge_spaces) {
  int need = (m + r - 1) / r;  // smallest |S| with |S| r >= m
  for (int v = 0; v < X.num(0); ++v) {
    const auto& cof = X.cofacets[0][v];
    int deg = static_cast<int>(cof.size());
    if (deg < need) continue;
    std::vector<int> pick(need);
    bool bad = false;
    std::function<void(int, int)> rec = [&](int start, int depth) {
      if (bad) return;
      if (depth == need) {
        Subspace inter = edge_spaces[cof[pick[0]].first];
        for (int j = 1; j < need; ++j)
          inter = intersect(inter, edge_spaces[cof[pick[j]].first]);
        if (inter.dim() > 0) bad = true;
        return;
      }
      for (int a = start; a < deg; ++a) {
        pick[depth] = a;
        rec(a + 1, depth + 1);
      }
    };
    rec(0, 0);
    if (bad) return v;
  }
  return std::nullopt;
}

CounitKernel counit_kernel_sheaf(const Sheaf& F, const SimplicialComplex& Y,
                                 const SimplicialComplex& X, const SimplicialMap& u) {
  CoveringCheck chk = verify_covering(Y, X, u);
  if (!chk.ok) throw std::invalid_argument("counit_kernel_sheaf: not a covering: " + chk.reason);
  if (chk.degree % F.p == 0)
    throw std::invalid_argument("counit splits only when the field characteristic "
                                "does not divide the covering degree");
  CounitKernel out;
  Sheaf pulled = pullback_sheaf(F, Y, X, u);
  out.push = pushforward_sheaf(pulled, Y, X, u);
  // counit: sum the fiber blocks (each block is a copy of F(x))
  Subsheaf ker;
  ker.spaces.resize(X.dim() + 1);
  for (int k = 0; k <= X.dim(); ++k) {
    ker.spaces[k].resize(X.num(k));
    for (int i = 0; i < X.num(k); ++i) {
      int blocks = static_cast<int>(out.push.fiber[k][i].size());
      int fd = F.dims[k][i];
      FpMat phi(fd, blocks * fd, F.p);
      for (int b = 0; b < blocks; ++b)
        for (int a = 0; a < fd; ++a) phi.at(a, b * fd + a) = 1;
      ker.spaces[k][i] = Subspace::from_cols(nullspace(phi));
    }
  }
  auto [K, inc] = subsheaf_sheaf(out.push.sheaf, ker);
  out.kernel = std::move(K);
  out.inclusion = std::move(inc);
  return out;
}

}  // namespace sheafltc
