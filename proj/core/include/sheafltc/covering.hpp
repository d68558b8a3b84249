#pragma once
// Simplicial covering maps, double covers from F_2 cocycles, deck
// transformations, and iterated double-cover towers.
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sheafltc/complex.hpp"
#include "sheafltc/fp.hpp"

namespace sheafltc {

struct SimplicialMap {
  std::vector<int> vertex_map;  // source vertex -> target vertex
  Face image_face(const Face& f) const;
};

struct CoveringCheck {
  bool ok = false;
  int degree = 0;
  std::string reason;
  std::optional<Face> witness;  // offending source face / vertex
};

// A covering map is simplicial and restricts to a bijection between the
// faces containing y and the faces containing u(y), for every vertex y.
CoveringCheck verify_covering(const SimplicialComplex& Y, const SimplicialComplex& X,
                              const SimplicialMap& u);

// fiber_faces(u)[k][i] = indices of the Y-faces over X-face (k,i), ascending.
std::vector<std::vector<std::vector<int>>> fiber_faces(const SimplicialComplex& Y,
                                                       const SimplicialComplex& X,
                                                       const SimplicialMap& u);

struct DoubleCover {
  SimplicialComplex total;  // vertex (v,s) gets id 2v+s
  SimplicialMap to_base;
  FpVec cocycle;  // the defining F_2 edge cochain on the base
};

// z must be an F_2 1-cocycle of the constant sheaf (one value per edge of X,
// in edge order). The cover is connected iff [z] != 0 in H^1(X, F_2).
DoubleCover double_cover_from_cocycle(const SimplicialComplex& X, const FpVec& z);

// The unique fixed-point-free involution swapping the sheets of a degree-2
// covering; nullopt if u is not a degree-2 covering.
std::optional<std::vector<int>> deck_transformation(const SimplicialComplex& Y,
                                                    const SimplicialComplex& X,
                                                    const SimplicialMap& u);

struct Tower {
  // levels[0] is the base; levels[r] covers levels[r-1] via maps[r-1]
  std::vector<SimplicialComplex> levels;
  std::vector<SimplicialMap> maps;
  std::vector<FpVec> cocycles;  // chosen class representative per step
  bool complete = false;        // false if some level had H^1(F_2) = 0
  std::string stop_reason;
};

// Iterates connected double covers chosen from uniformly random nonzero
// H^1(·, F_2) classes. Deterministic for a fixed seed.
Tower build_tower(const SimplicialComplex& X, int depth, u64 seed);

}  // namespace sheafltc
