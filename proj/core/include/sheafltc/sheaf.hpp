#pragma once
// Sheaves of F_p vector spaces on simplicial complexes.
#include <optional>
#include <utility>
#include <vector>

#include "sheafltc/complex.hpp"
#include "sheafltc/covering.hpp"
#include "sheafltc/fp.hpp"

namespace sheafltc {

// A dimension for every face plus a restriction matrix for every codim-1
// containment; restrictions must agree on codim-2 squares. Augmented sheaves
// also carry a space on the empty face with restrictions into the vertices.
// Sheaf only borrows the complex: the caller keeps it alive.
struct Sheaf {
  const SimplicialComplex* X = nullptr;
  u32 p = 2;
  bool augmented = false;
  int empty_dim = 0;
  std::vector<std::vector<int>> dims;            // [k][i]
  std::vector<std::vector<std::vector<FpMat>>> res;  // [k][i][t], t = cofacet slot
  std::vector<FpMat> res_from_empty;             // per vertex, when augmented

  int dim_at(int k, int i) const { return k < 0 ? empty_dim : dims[k][i]; }
  // restriction to cofacet slot t of face (k,i); k = -1 reads res_from_empty
  const FpMat& res_mat(int k, int i, int t) const;

  std::vector<int> offsets(int k) const;
  int cochain_dim(int k) const;
  int max_face_dim(int k) const;  // max dim F(x) over X(k)
  bool nonzero_on(int k) const;

  struct SquareWitness {
    Face from, to;  // codim-2 pair where the two compositions differ
  };
  std::optional<SquareWitness> validate() const;
  bool is_locally_constant() const;
};

Sheaf constant_sheaf(const SimplicialComplex& X, u32 p, int d, bool augmented);

// Restriction matrix along a codim-1 containment; `from` may be empty for
// augmented sheaves.
const FpMat& restriction_between(const Sheaf& F, const Face& from, const Face& to);

// F_z(y) = F(y ∪ z); augmented versions get F_z(∅) = F(z). The returned
// sheaf points at L.complex, so L must outlive it.
Sheaf restrict_to_link(const Sheaf& F, const Link& L, bool augmented);

// One matrix per face (and optionally the empty face); validated externally.
struct SheafMorphism {
  std::vector<std::vector<FpMat>> maps;
  FpMat empty_map;
};
// Returns a face where naturality fails, or nullopt if the morphism is valid.
std::optional<Face> validate_morphism(const Sheaf& F, const Sheaf& G, const SheafMorphism& m);

// Per-face subspaces closed under restriction.
struct Subsheaf {
  std::vector<std::vector<Subspace>> spaces;  // [k][i], subspace of F(x)
};
std::optional<Face> validate_subsheaf(const Sheaf& F, const Subsheaf& U);
// Sheaf structure on the subspaces themselves + inclusion morphism into F.
std::pair<Sheaf, SheafMorphism> subsheaf_sheaf(const Sheaf& F, const Subsheaf& U);
// Quotient F/U + projection morphism. Quotient coordinates are the non-pivot
// coordinates of F(x) relative to the echelon basis of U(x).
std::pair<Sheaf, SheafMorphism> quotient_sheaf(const Sheaf& F, const Subsheaf& U);

// Pullback along a covering (dimension-preserving simplicial map).
Sheaf pullback_sheaf(const Sheaf& F, const SimplicialComplex& Y, const SimplicialComplex& X,
                     const SimplicialMap& u);

struct Pushforward {
  Sheaf sheaf;  // on X; points at the caller's X
  // fiber[k][i] = Y-face indices over X-face (k,i) in ascending order;
  // block_offset[k][i][t] = offset of fiber t's block inside (u_*G)(x)
  std::vector<std::vector<std::vector<int>>> fiber;
  std::vector<std::vector<std::vector<int>>> block_offset;
};
Pushforward pushforward_sheaf(const Sheaf& G, const SimplicialComplex& Y,
                              const SimplicialComplex& X, const SimplicialMap& u);

// Expander-code sheaf on a graph: F(v) = F^m, F(e) = F, and the restriction
// to an edge reads off that edge's row of T_v (edges at v in edge order).
Sheaf expander_code_sheaf(const SimplicialComplex& graph, u32 p, int m,
                          const std::vector<FpMat>& T);

// Sheaf with G(v)=0, G(e)=U(e) (given by echelon bases inside F^m), G(t)=F^m.
Sheaf one_cocycle_sheaf(const SimplicialComplex& X, u32 p, int m,
                        const std::vector<Subspace>& edge_spaces);
// Largest S ⊆ edges-at-v with r·|S| >= m and nonzero joint intersection is a
// general-position failure; returns a witness vertex if one exists.
std::optional<int> one_cocycle_general_position_failure(const SimplicialComplex& X, int m, int r,
                                                        const std::vector<Subspace>& edge_spaces);

struct CounitKernel {
  Pushforward push;     // u_* u^* F
  Sheaf kernel;         // ker(counit), points at the caller's X
  SheafMorphism inclusion;  // kernel -> u_* u^* F
};
// Requires p coprime to the covering degree, so the counit splits.
CounitKernel counit_kernel_sheaf(const Sheaf& F, const SimplicialComplex& Y,
                                 const SimplicialComplex& X, const SimplicialMap& u);

}  // namespace sheafltc
