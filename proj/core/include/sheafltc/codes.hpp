#pragma once
// Cocycle codes: Z^k viewed as a linear code with one alphabet letter per
// k-face, its (k+2)-query tester, the greedy link-correction decoder with a
// certified radius, and the derived quantum CSS pair (Z^k, Z_k).
#include <cstdint>
#include <optional>
#include <vector>

#include "sheafltc/cohomology.hpp"
#include "sheafltc/expansion.hpp"
#include "sheafltc/norms.hpp"

namespace sheafltc {

// Codewords are the k-cocycles; the alphabet is F_p^m with the common fiber
// dimension m over X(k). Rate and distance are relative (per letter).
struct CocycleCode {
  const Sheaf* F = nullptr;
  int k = 0;
  u32 p = 2;
  int m = 0;        // dim F(x) for every x in X(k)
  int letters = 0;  // |X(k)|
  int dim_c = 0;    // dim C^k = m * letters
  Subspace Z;       // codeword space (reduced echelon basis)
  Subspace B;       // B^k; when nonzero it usually carries low-weight words
  Rat rate{0};      // dim Z^k / dim C^k
  bool coboundaries_trivial = false;  // B^k = 0
};

// Requires a validated sheaf with the same nonzero fiber dimension on every
// k-face and 0 <= k <= dim X - 1 (the tester needs faces one level up).
CocycleCode build_code(const Sheaf& F, int k);

// Least letter weight over Z - B (over Z - {0} when B = 0), normalized by
// the number of letters; nullopt when the candidate set is empty.
std::optional<Rat> code_distance(const CocycleCode& code, double budget_log2 = 24.0);

// The tester picks y in X(k+1) uniformly and accepts f iff (d_k f)(y) = 0,
// reading the k+2 letters under y. Soundness mu is the least ratio between
// the rejection probability and the relative letter distance to the code.
struct TesterRow {
  FpVec word;        // scanned coset representative
  long rejects = 0;  // (k+1)-faces rejecting it
  long dist = 0;     // letter distance to the code
};
struct TesterReport {
  int k = 0;
  int queries = 0;  // letters read per probe: k+2
  long faces = 0;   // |X(k+1)|
  bool exact = true;
  Rat mu{0};
  FpVec witness;  // word attaining mu
  long witness_rejects = 0;
  long witness_dist = 0;
  long cosets_scanned = 0;
  long samples_used = 0;
  std::uint64_t seed = 0;
  // one row per nonzero coset, while no more than table_cap fit (exact mode)
  std::vector<TesterRow> table;
};
// Exact mode enumerates every coset of Z^k and, per coset, the whole code for
// the distance; it runs when p^(dim C^k) fits the budget. Otherwise random
// words give an upper bound on mu (the code must still fit the budget).
TesterReport tester_stats(const CocycleCode& code, const ExpansionOptions& opt = {},
                          long table_cap = 4096);

// Consistency of the tester with the expansion reports: mu equals the
// normalized-Hamming cosystolic constant, and the weighted-support constants
// bound mu and the distance through P = D_{k,d}(X).
struct TesterBridge {
  Rat mu;
  Rat eps_ham{0};  // cosystolic expansion, normalized Hamming norm
  bool mu_matches_ham = false;
  Rat eps_ws{0}, delta_ws{0};  // cosystolic expansion, weighted support norm
  Rat P{0};
  bool mu_above_ws_over_p2 = false;    // mu >= eps_ws / P^2
  bool dist_above_ws_over_p = false;   // distance >= delta_ws / P
  std::optional<Rat> dist;
};
TesterBridge tester_bridge(const CocycleCode& code, const ExpansionOptions& opt = {});

struct DecodeParams {
  // each vertex search solves 2^|X_z(k)| linear systems; |X_z(k)| must stay
  // below this many bits
  double budget_log2 = 24.0;
};
struct DecodeResult {
  FpVec word;            // f'
  bool clean = false;    // d_k f' = 0; false flags a word beyond repair
  long corrections = 0;  // vertex corrections applied
  long pops = 0;         // queue pops processed
};
// Greedy corrector: a FIFO queue seeded with every 0-face; popping z searches
// h in C^{k-1}(X_z, F_z) with ||(d_k f')_z - d_{k-1} h||_ws < ||(d_k f')_z||_ws
// by enumerating the subsets E of X_z(k) where the residue must vanish and
// solving each linear system; the h with the least surviving weight wins,
// earliest (|E|, lex E) then echelon-least solution on ties. A correction
// updates f' <- f' - h^z and re-enqueues the neighbors of z.
DecodeResult decode(const CocycleCode& code, const FpVec& f, const DecodeParams& params = {});

// Certified correction radius in the relative letter norm, from gamma (the
// least weighted-support norm of a nonzero locally minimal k-cocycle) and
// gamma' (the same one degree up):
//   1/((k+2) P) * min{ gamma / ((k+1) Q / (d+1) * C(d+1, k+2) + 1), gamma' }.
Rat decode_radius(const CocycleCode& code, const Rat& gamma, const Rat& gamma_prime);

// X/Z pair on C^k: C_X = Z^k = ker d_k and C_Z = Z_k = ker of the dual
// boundary map, with C_X^perp = B_k and C_Z^perp = B^k. Phi_X collects the
// functionals f -> <(d_k f)(y), b> (rows of d_k); Phi_Z the functionals
// f -> <(boundary f)(z), b> (rows of the dual boundary matrix).
struct CSSCode {
  const Sheaf* F = nullptr;
  int k = 0;
  int n = 0;  // dim C^k
  Subspace CX, CZ;
  Subspace CX_perp;  // = B_k
  Subspace CZ_perp;  // = B^k
  std::vector<FpVec> phi_x, phi_z;
  Rat rate{0};              // dim H^k / n
  bool orthogonal = false;  // C_X^perp inside C_Z and C_Z^perp inside C_X, forms checked
  int query_x = 0, query_z = 0;              // realized max generator supports
  int query_x_bound = 0, query_z_bound = 0;  // (k+2) M_k and D_{k-1,k}(X) M_k
};
// Requires 1 <= k <= dim X - 1 and a validated sheaf.
CSSCode build_css(const Sheaf& F, int k);

// Relative coordinate-weight distances over C_X - C_Z^perp and C_Z - C_X^perp
// (nullopt for an empty difference set, i.e. vanishing (co)homology).
struct CSSDistances {
  std::optional<Rat> x, z;
};
CSSDistances css_distances(const CSSCode& css, double budget_log2 = 24.0);

// X-side decoding: the same greedy corrector; success means landing on the
// transmitted codeword modulo C_Z^perp = B^k.
DecodeResult css_x_decode(const CSSCode& css, const FpVec& f, const DecodeParams& params = {});

// X-side radius in the relative coordinate norm: decode_radius divided by the
// letter width M_k.
Rat css_decode_radius(const CSSCode& css, const Rat& gamma, const Rat& gamma_prime);

}  // namespace sheafltc
