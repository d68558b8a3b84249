#include "sheafltc/covering.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "sheafltc/cohomology.hpp"
#include "sheafltc/sheaf.hpp"

namespace sheafltc {

Face SimplicialMap::image_face(const Face& f) const {
  Face img;
  img.reserve(f.size());
  for (int v : f) img.push_back(vertex_map.at(v));
  std::sort(img.begin(), img.end());
  return img;
}

CoveringCheck verify_covering(const SimplicialComplex& Y, const SimplicialComplex& X,
                              const SimplicialMap& u) {
  CoveringCheck out;
  if (static_cast<int>(u.vertex_map.size()) != Y.num(0)) {
    out.reason = "vertex map has wrong size";
    return out;
  }
  for (int v : u.vertex_map)
    if (v < 0 || v >= X.num(0)) {
      out.reason = "vertex map image out of range";
      return out;
    }

  // simplicial and dimension-preserving
  for (int k = 0; k <= Y.dim(); ++k)
    for (int i = 0; i < Y.num(k); ++i) {
      Face img = u.image_face(Y.faces[k][i]);
      if (std::adjacent_find(img.begin(), img.end()) != img.end()) {
        out.reason = "face collapses under the map";
        out.witness = Y.faces[k][i];
        return out;
      }
      if (!X.has_face(img)) {
        out.reason = "image is not a face of the target";
        out.witness = Y.faces[k][i];
        return out;
      }
    }

  // star bijection at every source vertex
  for (int y = 0; y < Y.num(0); ++y) {
    int x = u.vertex_map[y];
    std::set<std::pair<int, int>> images;  // (dim, target index)
    for (int k = 0; k <= Y.dim(); ++k)
      for (int i = 0; i < Y.num(k); ++i) {
        const Face& f = Y.faces[k][i];
        if (!std::binary_search(f.begin(), f.end(), y)) continue;
        Face img = u.image_face(f);
        auto key = std::make_pair(k, X.index_of(img));
        if (!images.insert(key).second) {
          out.reason = "two faces at a vertex share an image (star not injective)";
          out.witness = f;
          return out;
        }
      }
    for (int k = 0; k <= X.dim(); ++k)
      for (int i = 0; i < X.num(k); ++i) {
        const Face& f = X.faces[k][i];
        if (!std::binary_search(f.begin(), f.end(), x)) continue;
        if (!images.count({k, i})) {
          out.reason = "face at the image vertex is not covered (star not surjective)";
          out.witness = Face{y};
          return out;
        }
      }
  }

  // uniform vertex fiber size
  std::vector<int> fiber_size(X.num(0), 0);
  for (int v : u.vertex_map) ++fiber_size[v];
  int e = fiber_size.empty() ? 0 : fiber_size[0];
  for (int v = 0; v < X.num(0); ++v)
    if (fiber_size[v] != e || e == 0) {
      out.reason = "vertex fibers are not all the same size";
      out.witness = Face{v};
      return out;
    }

  out.ok = true;
  out.degree = e;
  return out;
}

std::vector<std::vector<std::vector<int>>> fiber_faces(const SimplicialComplex& Y,
                                                       const SimplicialComplex& X,
                                                       const SimplicialMap& u) {
  std::vector<std::vector<std::vector<int>>> fib(X.dim() + 1);
  for (int k = 0; k <= X.dim(); ++k) fib[k].assign(X.num(k), {});
  for (int k = 0; k <= Y.dim(); ++k)
    for (int i = 0; i < Y.num(k); ++i) {
      int t = X.index_of(u.image_face(Y.faces[k][i]));
      if (t >= 0) fib[k][t].push_back(i);
    }
  return fib;
}

DoubleCover double_cover_from_cocycle(const SimplicialComplex& X, const FpVec& z) {
  if (static_cast<int>(z.size()) != X.num(1))
    throw std::invalid_argument("cocycle must have one value per edge");
  for (u32 v : z)
    if (v > 1) throw std::invalid_argument("cocycle entries must be 0/1");
  // cocycle condition on every triangle
  for (int t = 0; t < X.num(2); ++t) {
    u32 s = 0;
    for (const auto& [e, pos] : X.facets[2][t]) s ^= z[e];
    if (s) throw std::invalid_argument("edge cochain is not a cocycle");
  }

  auto edge_val = [&](int a, int b) -> u32 {
    Face e{std::min(a, b), std::max(a, b)};
    return z[X.index_of(e)];
  };

  std::vector<Face> lifted;
  for (const Face& f : X.maximal_faces()) {
    for (int s = 0; s < 2; ++s) {
      Face lift;
      lift.reserve(f.size());
      lift.push_back(2 * f[0] + s);
      for (size_t i = 1; i < f.size(); ++i)
        lift.push_back(2 * f[i] + (s ^ static_cast<int>(edge_val(f[0], f[i]))));
      std::sort(lift.begin(), lift.end());
      lifted.push_back(lift);
    }
  }

  DoubleCover dc;
  dc.cocycle = z;
  dc.total = SimplicialComplex::from_maximal_faces(2 * X.num(0), lifted);
  dc.to_base.vertex_map.resize(2 * X.num(0));
  for (int v = 0; v < X.num(0); ++v) {
    dc.to_base.vertex_map[2 * v] = v;
    dc.to_base.vertex_map[2 * v + 1] = v;
  }
  CoveringCheck chk = verify_covering(dc.total, X, dc.to_base);
  if (!chk.ok || chk.degree != 2)
    throw std::logic_error("constructed double cover failed verification: " + chk.reason);
  return dc;
}

std::optional<std::vector<int>> deck_transformation(const SimplicialComplex& Y,
                                                    const SimplicialComplex& X,
                                                    const SimplicialMap& u) {
  CoveringCheck chk = verify_covering(Y, X, u);
  if (!chk.ok || chk.degree != 2) return std::nullopt;
  std::vector<std::vector<int>> fib(X.num(0));
  for (int y = 0; y < Y.num(0); ++y) fib[u.vertex_map[y]].push_back(y);
  std::vector<int> sigma(Y.num(0), -1);
  for (const auto& f : fib) {
    sigma[f[0]] = f[1];
    sigma[f[1]] = f[0];
  }
  // must be a simplicial automorphism commuting with u (vertex pairing is
  // enough for coverings, but verify anyway)
  for (int k = 0; k <= Y.dim(); ++k)
    for (int i = 0; i < Y.num(k); ++i) {
      Face img;
      for (int v : Y.faces[k][i]) img.push_back(sigma[v]);
      std::sort(img.begin(), img.end());
      if (!Y.has_face(img)) return std::nullopt;
    }
  return sigma;
}

Tower build_tower(const SimplicialComplex& X, int depth, u64 seed) {
  Tower tower;
  tower.levels.push_back(X);
  std::mt19937_64 rng(seed);
  for (int r = 0; r < depth; ++r) {
    const SimplicialComplex& cur = tower.levels.back();
    Sheaf F = constant_sheaf(cur, 2, 1, false);
    Cohomology coh = cohomology(F);
    const auto& H1 = coh.at(1).H_reps;
    if (H1.dim() == 0) {
      tower.stop_reason = "H^1(level " + std::to_string(r) + ", F_2) = 0";
      return tower;
    }
    // uniformly random nonzero class
    FpVec coeff(H1.dim(), 0);
    do {
      for (auto& c : coeff) c = static_cast<u32>(rng() & 1);
    } while (is_zero_vec(coeff));
    FpVec z(cur.num(1), 0);
    for (int i = 0; i < H1.dim(); ++i)
      if (coeff[i]) vec_add_inplace(z, H1.basis.row(i), 2);
    DoubleCover dc = double_cover_from_cocycle(cur, z);
    tower.cocycles.push_back(z);
    tower.maps.push_back(dc.to_base);
    tower.levels.push_back(std::move(dc.total));
  }
  tower.complete = true;
  return tower;
}

}  // namespace sheafltc
