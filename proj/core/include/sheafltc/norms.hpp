#pragma once
// Norms on cochains: weighted support, normalized Hamming, and coordinate
// (basis) Hamming, together with the per-degree masses and quotient norms.
#include <optional>
#include <string>

#include "sheafltc/cochain.hpp"
#include "sheafltc/rational.hpp"

namespace sheafltc {

enum class NormVariant { WeightedSupport, NormalizedHamming, BasisHamming };

std::string norm_name(NormVariant v);
std::optional<NormVariant> parse_norm(const std::string& s);

// Norm of a single face's value being nonzero: w(x), 1/|X(k)|, or the
// per-coordinate count (the latter is handled by cochain_norm directly).
Rat cochain_norm(const Sheaf& F, const Cochain& f, NormVariant v);

// m(k) = sup of the norm over C^k: sum of w(x) / face-count fraction over
// faces with F(x) != 0, or dim C^k for the basis norm.
Rat mass(const Sheaf& F, int k, NormVariant v);

// min over u in U of ||f.v + u||; enumerates U (p^dim(U) steps). argmin, if
// given, receives the minimizing coset member.
Rat quotient_norm(const Sheaf& F, const Cochain& f, const Subspace& U, NormVariant v,
                  FpVec* argmin = nullptr);

}  // namespace sheafltc
