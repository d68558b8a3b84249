#pragma once
// Finite simplicial complexes with the canonical top-face-counting weights.
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sheafltc/rational.hpp"

namespace sheafltc {

using Face = std::vector<int>;  // strictly increasing vertex ids

std::string face_key(const Face& f);
Face parse_face_key(const std::string& s);

struct Link;

struct SimplicialComplex {
  // faces[k] holds the k-dimensional faces in lexicographic order
  std::vector<std::vector<Face>> faces;
  std::vector<std::map<Face, int>> index;

  // facets[k][i]: (index of facet in dim k-1, position of removed vertex)
  std::vector<std::vector<std::vector<std::pair<int, int>>>> facets;
  // cofacets[k][i]: (index of cofacet in dim k+1, position of added vertex)
  std::vector<std::vector<std::vector<std::pair<int, int>>>> cofacets;
  // number of top-dimensional faces containing each face
  std::vector<std::vector<int>> top_count;

  int dim() const { return static_cast<int>(faces.size()) - 1; }
  int num(int k) const {
    return (k < 0 || k > dim()) ? 0 : static_cast<int>(faces[k].size());
  }
  int num_vertices() const { return num(0); }
  int index_of(const Face& f) const;
  bool has_face(const Face& f) const { return index_of(f) >= 0; }

  // Vertex ids must cover 0..n_vertices-1 exactly.
  static SimplicialComplex from_maximal_faces(int n_vertices, const std::vector<Face>& maximal);
  void rebuild_tables();  // fills index/facets/cofacets/top_count from faces

  bool is_pure() const;
  bool is_connected() const;
  bool is_strongly_connected() const;
  std::vector<Face> maximal_faces() const;

  // D_{i,j}: max number of j-faces containing a single i-face
  int degree(int i, int j) const;
  int Q() const { return degree(0, dim()); }

  Rat weight(int k, int idx) const;
  Rat total_weight(int k) const;

  Link link(const Face& z) const;

  // Least alpha >= 0 with w(E(S)) <= w(S)^2 + alpha w(S) for all nonempty
  // vertex sets S. Exhaustive over subsets; requires <= 24 vertices.
  Rat skeleton_alpha_exact() const;

  // [lo, hi] covering the spectrum of the weighted adjacency operator on the
  // orthogonal complement of the constants (weighted inner product).
  std::pair<double, double> spectral_interval() const;
};

struct Link {
  SimplicialComplex complex;
  Face center;
  std::vector<int> vertex_to_parent;  // link vertex id -> parent vertex id
  // join_index[k][i] = parent index (at dim k + |center|) of face ∪ center
  std::vector<std::vector<int>> join_index;
  int center_index = -1;  // index of center in parent
};

}  // namespace sheafltc
