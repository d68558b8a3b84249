#include "sheafltc/cochain.hpp"

#include <stdexcept>

namespace sheafltc {

Cochain zero_cochain(const Sheaf& F, int k) {
  Cochain f;
  f.degree = k;
  f.v.assign(F.cochain_dim(k), 0);
  return f;
}

FpVec block(const Sheaf& F, const Cochain& f, int i) {
  if (f.degree == -1) return f.v;
  auto off = F.offsets(f.degree);
  return FpVec(f.v.begin() + off[i], f.v.begin() + off[i] + F.dims[f.degree][i]);
}

void set_block(const Sheaf& F, Cochain& f, int i, const FpVec& val) {
  if (f.degree == -1) {
    f.v = val;
    return;
  }
  auto off = F.offsets(f.degree);
  std::copy(val.begin(), val.end(), f.v.begin() + off[i]);
}

void add_block(const Sheaf& F, Cochain& f, int i, const FpVec& val) {
  size_t off = f.degree == -1 ? 0 : F.offsets(f.degree)[i];
  for (size_t j = 0; j < val.size(); ++j) f.v[off + j] = (f.v[off + j] + val[j]) % F.p;
}

std::vector<int> support_faces(const Sheaf& F, const Cochain& f) {
  std::vector<int> out;
  if (f.degree == -1) {
    if (!is_zero_vec(f.v)) out.push_back(0);
    return out;
  }
  auto off = F.offsets(f.degree);
  for (int i = 0; i < F.X->num(f.degree); ++i) {
    bool nz = false;
    for (int j = off[i]; j < off[i + 1]; ++j)
      if (f.v[j]) {
        nz = true;
        break;
      }
    if (nz) out.push_back(i);
  }
  return out;
}

Cochain random_cochain(const Sheaf& F, int k, std::mt19937_64& rng) {
  Cochain f = zero_cochain(F, k);
  for (auto& e : f.v) e = static_cast<u32>(rng() % F.p);
  return f;
}

u32 merge_sign(const Face& x, const Face& z, u32 p) {
  int inv = 0;
  for (int a : x)
    for (int b : z)
      if (a > b) ++inv;
  return (inv % 2 == 0) ? 1u : p - 1;
}

Cochain link_restrict(const Sheaf& F, const Sheaf& Fz, const Link& L,
                      const Cochain& f) {
  int zs = static_cast<int>(L.center.size());
  int j = f.degree - zs;
  Cochain out = zero_cochain(Fz, j);
  if (j == -1) {
    if (!Fz.augmented) throw std::invalid_argument("link sheaf must be augmented for degree -1");
    out.v = block(F, f, L.center_index);
    return out;
  }
  if (j < -1 || j > L.complex.dim()) return out;
  auto offF = F.offsets(f.degree);
  auto offZ = Fz.offsets(j);
  for (int i = 0; i < L.complex.num(j); ++i) {
    Face parent_y;
    for (int v : L.complex.faces[j][i]) parent_y.push_back(L.vertex_to_parent[v]);
    u32 sgn = merge_sign(parent_y, L.center, F.p);
    int pi = L.join_index[j][i];
    for (int t = 0; t < Fz.dims[j][i]; ++t)
      out.v[offZ[i] + t] =
          static_cast<u32>((static_cast<u64>(sgn) * f.v[offF[pi] + t]) % F.p);
  }
  return out;
}

Cochain link_extend(const Sheaf& F, const Sheaf& Fz, const Link& L,
                    const Cochain& g) {
  int zs = static_cast<int>(L.center.size());
  int k = g.degree + zs;
  Cochain out = zero_cochain(F, k);
  auto offF = F.offsets(k);
  if (g.degree == -1) {
    for (size_t t = 0; t < g.v.size(); ++t) out.v[offF[L.center_index] + t] = g.v[t];
    return out;
  }
  auto offZ = Fz.offsets(g.degree);
  for (int i = 0; i < L.complex.num(g.degree); ++i) {
    Face parent_y;
    for (int v : L.complex.faces[g.degree][i]) parent_y.push_back(L.vertex_to_parent[v]);
    u32 sgn = merge_sign(parent_y, L.center, F.p);
    int pi = L.join_index[g.degree][i];
    for (int t = 0; t < Fz.dims[g.degree][i]; ++t)
      out.v[offF[pi] + t] =
          static_cast<u32>((static_cast<u64>(sgn) * g.v[offZ[i] + t]) % F.p);
  }
  return out;
}

}  // namespace sheafltc
