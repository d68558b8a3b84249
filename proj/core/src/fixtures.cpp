#include "sheafltc/fixtures.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace sheafltc {

SimplicialComplex simplex_complex(int n) {
  Face all(n + 1);
  std::iota(all.begin(), all.end(), 0);
  return SimplicialComplex::from_maximal_faces(n + 1, {all});
}

SimplicialComplex simplex_boundary(int n) {
  std::vector<Face> maximal;
  for (int skip = 0; skip <= n; ++skip) {
    Face f;
    for (int v = 0; v <= n; ++v)
      if (v != skip) f.push_back(v);
    maximal.push_back(f);
  }
  return SimplicialComplex::from_maximal_faces(n + 1, maximal);
}

SimplicialComplex cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Face> edges;
  for (int i = 0; i < n; ++i) {
    int a = i, b = (i + 1) % n;
    edges.push_back({std::min(a, b), std::max(a, b)});
  }
  return SimplicialComplex::from_maximal_faces(n, edges);
}

SimplicialComplex complete_graph(int n) {
  std::vector<Face> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) edges.push_back({a, b});
  return SimplicialComplex::from_maximal_faces(n, edges);
}

SimplicialComplex circulant_graph(int n, const std::vector<int>& offsets) {
  std::set<Face> edges;
  for (int i = 0; i < n; ++i)
    for (int o : offsets) {
      int a = i, b = (i + o) % n;
      if (a == b) continue;
      edges.insert({std::min(a, b), std::max(a, b)});
    }
  return SimplicialComplex::from_maximal_faces(n, {edges.begin(), edges.end()});
}

SimplicialComplex torus7() {
  std::vector<Face> tris;
  for (int i = 0; i < 7; ++i) {
    auto tri = [&](int a, int b, int c) {
      Face f{a % 7, b % 7, c % 7};
      std::sort(f.begin(), f.end());
      return f;
    };
    tris.push_back(tri(i, i + 1, i + 3));
    tris.push_back(tri(i, i + 2, i + 3));
  }
  return SimplicialComplex::from_maximal_faces(7, tris);
}

ExpanderCodeFixture expander_k4() {
  ExpanderCodeFixture f;
  f.graph = complete_graph(4);
  f.m = 2;
  // image = even-weight code in F_2^3, distance 2/3
  FpMat T(3, 2, 2);
  T.at(0, 0) = 1;
  T.at(1, 1) = 1;
  T.at(2, 0) = 1;
  T.at(2, 1) = 1;
  f.T.assign(4, T);
  return f;
}

ExpanderCodeFixture expander_c8() {
  ExpanderCodeFixture f;
  f.graph = circulant_graph(8, {1, 2});
  f.m = 3;
  FpMat T(4, 3, 2);
  T.at(0, 0) = 1;
  T.at(1, 1) = 1;
  T.at(2, 2) = 1;
  T.at(3, 0) = T.at(3, 1) = T.at(3, 2) = 1;
  f.T.assign(8, T);
  return f;
}

OneCocycleFixture one_cocycle_torus7() {
  OneCocycleFixture f;
  f.X = torus7();
  f.edge_spaces.reserve(f.X.num(1));
  for (int e = 0; e < f.X.num(1); ++e) {
    const Face& edge = f.X.faces[1][e];
    u32 t = static_cast<u32>((edge[0] + edge[1]) % 7);
    // kernel of the moment-curve functional (1, t, t^2, t^3)
    FpMat row(1, f.m, f.p);
    u32 pw = 1;
    for (int j = 0; j < f.m; ++j) {
      row.at(0, j) = pw;
      pw = (pw * t) % f.p;
    }
    f.edge_spaces.push_back(Subspace::from_cols(nullspace(row)));
  }
  return f;
}

}  // namespace sheafltc
