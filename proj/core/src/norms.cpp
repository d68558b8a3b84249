#include "sheafltc/norms.hpp"

#include <limits>
#include <stdexcept>

namespace sheafltc {

std::string norm_name(NormVariant v) {
  switch (v) {
    case NormVariant::WeightedSupport: return "ws";
    case NormVariant::NormalizedHamming: return "ham";
    case NormVariant::BasisHamming: return "basis";
  }
  return "?";
}

std::optional<NormVariant> parse_norm(const std::string& s) {
  if (s == "ws") return NormVariant::WeightedSupport;
  if (s == "ham") return NormVariant::NormalizedHamming;
  if (s == "basis") return NormVariant::BasisHamming;
  return std::nullopt;
}

namespace {

bool block_nonzero(const FpVec& v, int off, int len) {
  for (int t = 0; t < len; ++t)
    if (v[off + t]) return true;
  return false;
}

}  // namespace

Rat cochain_norm(const Sheaf& F, const Cochain& f, NormVariant v) {
  const auto& X = *F.X;
  int k = f.degree;
  if (v == NormVariant::BasisHamming) {
    long cnt = 0;
    for (u32 x : f.v)
      if (x) ++cnt;
    return Rat(cnt);
  }
  if (k == -1) {
    // single block for the empty face, which carries weight 1
    bool nz = block_nonzero(f.v, 0, static_cast<int>(f.v.size()));
    return nz ? Rat(1) : Rat(0);
  }
  Rat total(0);
  int off = 0;
  for (int i = 0; i < X.num(k); ++i) {
    int len = F.dim_at(k, i);
    if (len > 0 && block_nonzero(f.v, off, len)) {
      if (v == NormVariant::WeightedSupport)
        total += X.weight(k, i);
      else
        total += Rat(1, X.num(k));
    }
    off += len;
  }
  return total;
}

Rat mass(const Sheaf& F, int k, NormVariant v) {
  const auto& X = *F.X;
  if (k < -1 || k > X.dim()) return Rat(0);
  if (v == NormVariant::BasisHamming) return Rat(F.cochain_dim(k));
  if (k == -1) return F.empty_dim > 0 ? Rat(1) : Rat(0);
  Rat total(0);
  for (int i = 0; i < X.num(k); ++i) {
    if (F.dim_at(k, i) == 0) continue;
    if (v == NormVariant::WeightedSupport)
      total += X.weight(k, i);
    else
      total += Rat(1, X.num(k));
  }
  return total;
}

Rat quotient_norm(const Sheaf& F, const Cochain& f, const Subspace& U, NormVariant v,
                  FpVec* argmin) {
  if (U.n != static_cast<int>(f.v.size()))
    throw std::invalid_argument("quotient_norm: subspace dimension mismatch");
  u32 p = F.p;
  bool have = false;
  Rat best(0);
  FpVec best_v;
  enumerate_span(U.basis, [&](const FpVec& u) {
    FpVec cand(f.v.size());
    for (size_t j = 0; j < cand.size(); ++j) {
      u32 s = f.v[j] + u[j];
      cand[j] = s >= p ? s - p : s;
    }
    Rat n = cochain_norm(F, Cochain{f.degree, cand}, v);
    if (!have || n < best) {
      have = true;
      best = n;
      best_v = std::move(cand);
    }
  });
  if (argmin) *argmin = best_v;
  return best;
}

}  // namespace sheafltc
