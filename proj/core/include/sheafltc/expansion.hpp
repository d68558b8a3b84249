#pragma once
// Coboundary / cosystolic / systolic expansion constants, locally minimal
// cochains and the greedy approximation that produces them, small-support
// expansion scans, heavy-face bookkeeping, and vine numbers.
#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "sheafltc/cohomology.hpp"
#include "sheafltc/norms.hpp"

namespace sheafltc {

struct ExpansionOptions {
  NormVariant norm = NormVariant::WeightedSupport;
  // enumeration cap: exact mode requires p^(dim C^k) <= 2^budget_log2
  double budget_log2 = 24.0;
  std::uint64_t seed = 1;
  long samples = 20000;
  bool force_sample = false;  // skip exact mode even when affordable
};

struct ExpansionReport {
  int k = 0;
  NormVariant norm = NormVariant::WeightedSupport;
  bool exact = true;        // minimized over every coset of the reference space
  bool denom_exact = true;  // per-sample coset distances are true minima; when
                            // false the reported eps is only a heuristic
  bool defined = true;      // false when m(k) or m(k+1) vanishes (eps = +inf)
  bool vacuous = false;     // C^k equals the reference space; nothing to test
  Rat eps{0};
  FpVec eps_witness;  // coset-minimal f attaining eps (exact mode)
  bool has_delta = false;
  bool delta_vacuous = true;  // Z = B in degree k
  Rat delta{0};
  FpVec delta_witness;
  long samples_used = 0;
  std::uint64_t seed = 0;
};

// eps = min ||d_k f|| m(k) / (||f+B^k|| m(k+1)) over f outside B^k.
ExpansionReport coboundary_expansion(const Sheaf& F, int k, const ExpansionOptions& opt = {});
// eps over cosets of Z^k; delta = min ||f||/m(k) over Z^k - B^k.
ExpansionReport cosystolic_expansion(const Sheaf& F, int k, const ExpansionOptions& opt = {});
// Boundary-map analogue: eps = min ||del_k f|| m(k) / (||f+Z_k|| m(k-1));
// delta over Z_k - B_k.
ExpansionReport systolic_expansion(const Sheaf& F, int k, const ExpansionOptions& opt = {});

// ||f|| == ||f + B^k|| in the weighted-support norm.
bool is_minimal(const Sheaf& F, const Cochain& f, double budget_log2 = 24.0);

// f in C^k is locally minimal at the i-face z iff the link restriction f_z is
// minimal in C^{k-i-1} of the augmented link sheaf. Plain "locally minimal"
// checks every 0-face (which suffices for all i by the descent property).
bool is_locally_minimal_at(const Sheaf& F, const Cochain& f, int i, int zi,
                           double budget_log2 = 24.0);
bool is_locally_minimal(const Sheaf& F, const Cochain& f, double budget_log2 = 24.0);

struct ApproximationResult {
  Cochain corrected;  // f - d_k g, locally minimal
  Cochain g;          // accumulated correction in C^k
  int rounds = 0;     // number of vertex corrections applied
};

// Greedy pass over 0-faces: at each vertex, find the link correction that
// minimizes the resulting weighted-support norm (lexicographically least h on
// ties) and apply it while a strict decrease exists.
ApproximationResult locally_minimal_approximation(const Sheaf& F, const Cochain& f,
                                                  double budget_log2 = 24.0);

struct SmallSetExpansionReport {
  int k = 0;
  Rat alpha{0}, beta{0};
  bool cocycles_only = false;
  bool ok = true;        // no locally minimal candidate violates ||df|| >= beta ||f||
  bool any = false;      // at least one candidate existed
  long candidates = 0;   // locally minimal f with 0 < ||f||_ws < alpha
  Rat min_ratio{0};      // min ||df||/||f|| over candidates (valid when any)
  FpVec witness;         // violating f if !ok, else attains min_ratio
};

// Exhaustive scan of nonzero f with ||f||_ws < alpha (support-set DFS with a
// weight budget), keeping only locally minimal f (and cocycles when asked).
SmallSetExpansionReport small_locally_minimal_expansion_check(const Sheaf& F, int k,
                                                              const Rat& alpha, const Rat& beta,
                                                              bool cocycles_only,
                                                              double budget_log2 = 24.0);

// Smallest ||f||_ws over nonzero locally minimal k-cocycles (enumerates Z^k);
// nullopt when none exist. The largest usable alpha in the cocycle version of
// the small-set property, and the gamma' of the decoder's radius.
std::optional<Rat> min_locally_minimal_cocycle_norm(const Sheaf& F, int k,
                                                    double budget_log2 = 24.0);

// Largest alpha-skeleton constant among links of i-faces (i = -1 gives X
// itself); every link is then an alpha-skeleton expander.
Rat local_skeleton_alpha(const SimplicialComplex& X, int i);

// Worst coboundary expansion of (X_z, F_z) in dimension k-i-1 over z in X(i);
// i = -1 measures (X, F) itself in dimension k. Returns nullopt when some
// link's constant is undefined by zero mass (conventionally +inf, so it
// imposes no constraint) unless all are, in which case defined=false style
// handling is left to the caller via the optional.
struct LocalExpansionSummary {
  bool all_undefined = true;  // every link had vanishing mass
  Rat eps{0};                 // min over links with defined expansion
  int argmin_face = -1;       // index in X(i) attaining eps (-1 for X itself)
};
LocalExpansionSummary local_coboundary_expansion_min(const Sheaf& F, int i, int k,
                                                     const ExpansionOptions& opt = {});

struct BadPair {
  int i;     // dimension of the two heavy faces
  int x, y;  // indices in X(i); their common (i-1)-face is not heavy
};

struct HeavyStructure {
  const SimplicialComplex* X = nullptr;
  int k = 0;
  std::vector<Rat> thresholds;     // h_{-1}, ..., h_{k-1}
  std::vector<std::vector<char>> heavy;  // heavy[i][x] for i-faces, i = 0..k
  bool empty_heavy = false;              // is the empty face heavy
  std::vector<BadPair> bad_pairs;
  std::vector<int> upsilon;  // (k+1)-faces containing a bad pair (empty if k = dim X)
  // terminal = heavy with no heavy facet (the empty face counts for vertices)
  std::vector<std::pair<int, int>> terminals;  // (dim, index); dim -1 encodes the empty face

  Rat heavy_weight(int i) const;  // w(A_i), i in [-1, k]
  Rat upsilon_weight() const;
  bool is_heavy(int i, int x) const;  // i = -1, x ignored queries the empty face
  // saturated chains of heavy faces; x may be (-1, 0) for the empty face
  bool descends(int ydim, int y, int xdim, int x) const;
  // heavy faces reachable downward from the (k+1)-face y through a heavy k-face
  std::vector<std::pair<int, int>> descent_set(int y) const;
  std::vector<std::pair<int, int>> terminals_of(int y) const;  // terminal members of descent_set
};

// A_k = supp f; A_{i-1} = faces whose heavy-cofacet weight fraction reaches
// h_{i-1}. thresholds must have size k+1 (entries for dims -1..k-1).
HeavyStructure heavy_structure(const Sheaf& F, const Cochain& f, const std::vector<Rat>& thresholds);

// Right-hand side of the bad-face weight bound: sum_i C(k+2,i+2)(i+1)
// (alpha_{i-1}+h_{i-1}) / (h_i...h_{k-1}) * ||f||_ws, with alpha the local
// skeleton constants (entries for dims -1..k-1, like thresholds).
Rat bad_faces_bound(int k, const std::vector<Rat>& thresholds, const std::vector<Rat>& alphas,
                    const Rat& f_norm);

// U(n): max number of terminal sets over all n-vines (collections of subsets
// of {1..n} containing the full set, each member joined to it by a chain
// adding one element at a time). Exact for n <= 5.
long vine_number(int n);
long vine_number_bruteforce(int n);  // independent check, n <= 4

}  // namespace sheafltc
