#pragma once
#include <map>
#include <string>

#include "sheafltc/cochain.hpp"

namespace sheafltc {

// Matrix of d_k : C^k -> C^{k+1} in the ordered-face sign convention: the
// facet obtained by deleting position i enters with sign (-1)^i.
FpMat coboundary_matrix(const Sheaf& F, int k);
// Dual boundary map C^k -> C^{k-1}: entrywise transpose of d_{k-1}.
FpMat boundary_matrix(const Sheaf& F, int k);

Cochain apply_d(const Sheaf& F, const Cochain& f);
Cochain apply_boundary(const Sheaf& F, const Cochain& f);

struct DegreeData {
  int c_dim = 0;
  Subspace Z, B;
  // rows: B-reduced representatives of a cohomology basis (echelon)
  Subspace H_reps;
  int h() const { return H_reps.dim(); }
};

struct Cohomology {
  std::map<int, DegreeData> data;
  const DegreeData& at(int k) const { return data.at(k); }
  bool has(int k) const { return data.count(k) != 0; }
  // h^0..h^d (degree -1 included separately for augmented sheaves)
  std::vector<int> h_list(int d) const;
};

// All degrees from -1 (augmented) or 0 up to dim X.
Cohomology cohomology(const Sheaf& F);

// Individual subspaces of C^k, cheaper than a full cohomology() pass.
Subspace cocycle_space(const Sheaf& F, int k);         // Z^k = ker d_k
Subspace coboundary_space(const Sheaf& F, int k);      // B^k = im d_{k-1}
Subspace chain_cycle_space(const Sheaf& F, int k);     // Z_k = ker del_k
Subspace chain_boundary_space(const Sheaf& F, int k);  // B_k = im del_{k+1}

// Coordinates of a cocycle's class in the H_reps basis.
FpVec class_coords(const DegreeData& dd, const FpVec& cocycle);

// Composite restriction F(from) -> F(to) along any saturated chain (path
// independence makes the choice irrelevant for valid sheaves).
FpMat res_chain(const Sheaf& F, const Face& from, const Face& to);

// alpha: scalar F_p cochain (one value per alpha_degree-face, constant
// coefficients). Returns alpha ∪ g with the back-face value restricted into
// the big face.
Cochain cup_product(const Sheaf& G, int alpha_degree, const FpVec& alpha, const Cochain& g);

struct LesReport {
  bool sheaf_exact = true;       // 0 -> F -> G -> H -> 0 exact per face
  bool long_sequence_exact = true;
  std::string detail;
  std::vector<int> hF, hG, hH;
  std::vector<int> rankA, rankB;     // induced maps per degree
  std::vector<int> connecting_rank;  // derived rank of each connecting map
};
// Checks per-face exactness of the short sequence and the dimension
// constraints forced by the long exact cohomology sequence.
LesReport les_dimension_check(const Sheaf& F, const Sheaf& G, const Sheaf& H,
                              const SheafMorphism& a, const SheafMorphism& b);

// Apply a morphism to a cochain.
Cochain apply_morphism(const Sheaf& F, const Sheaf& G, const SheafMorphism& m, const Cochain& f);

}  // namespace sheafltc
