#pragma once
// Named example complexes and sheaf ingredients used by the CLI and tests.
// Fixtures hand back complexes and raw data separately so the caller controls
// where the complex lives before wiring a sheaf to it.
#include <vector>

#include "sheafltc/complex.hpp"
#include "sheafltc/fp.hpp"

namespace sheafltc {

SimplicialComplex simplex_complex(int n);   // full n-simplex
SimplicialComplex simplex_boundary(int n);  // boundary of the n-simplex
SimplicialComplex cycle_graph(int n);
SimplicialComplex complete_graph(int n);
SimplicialComplex circulant_graph(int n, const std::vector<int>& offsets);
// 7-vertex triangulated torus: triangles {i,i+1,i+3} and {i,i+2,i+3} mod 7
SimplicialComplex torus7();

struct ExpanderCodeFixture {
  SimplicialComplex graph;
  u32 p = 2;
  int m = 0;
  std::vector<FpMat> T;  // deg(v) x m per vertex
};
ExpanderCodeFixture expander_k4();  // K_4, m = 2, parity local code
ExpanderCodeFixture expander_c8();  // circulant C_8(1,2), m = 3

struct OneCocycleFixture {
  SimplicialComplex X;
  u32 p = 7;
  int m = 4;
  int r = 1;
  std::vector<Subspace> edge_spaces;  // dim m-r inside F^m
};
// Moment-curve kernels on the 7-vertex torus; in general position by the
// Vandermonde determinant.
OneCocycleFixture one_cocycle_torus7();

}  // namespace sheafltc
