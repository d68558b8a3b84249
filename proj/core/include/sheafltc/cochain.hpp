#pragma once
#include <random>

#include "sheafltc/sheaf.hpp"

namespace sheafltc {

// Flat coefficient vector over the faces of one dimension, blocks in face
// order. Degree -1 (augmented sheaves) is a single block for the empty face.
struct Cochain {
  int degree = 0;
  FpVec v;
};

Cochain zero_cochain(const Sheaf& F, int k);
FpVec block(const Sheaf& F, const Cochain& f, int i);
void set_block(const Sheaf& F, Cochain& f, int i, const FpVec& val);
void add_block(const Sheaf& F, Cochain& f, int i, const FpVec& val);
// indices of faces with a nonzero block
std::vector<int> support_faces(const Sheaf& F, const Cochain& f);
Cochain random_cochain(const Sheaf& F, int k, std::mt19937_64& rng);

// (-1)^{inversions} when sorting the tuple (x..., z...); returns 1 or p-1.
u32 merge_sign(const Face& x, const Face& z, u32 p);

// f in C^k(X) -> f_z in C^{k-|z|}(X_z) with f_z(y) = f(y z) in ordered
// notation; Fz must be the link sheaf of L (augmented if k = |z|-1 values
// land on the empty link face).
Cochain link_restrict(const Sheaf& F, const Sheaf& Fz, const Link& L,
                      const Cochain& f);
// g in C^j(X_z) -> g^z in C^{j+|z|}(X), supported on faces containing z.
Cochain link_extend(const Sheaf& F, const Sheaf& Fz, const Link& L,
                    const Cochain& g);

}  // namespace sheafltc
