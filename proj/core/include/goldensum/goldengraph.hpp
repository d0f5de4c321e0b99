#ifndef GOLDENSUM_GOLDENGRAPH_HPP
#define GOLDENSUM_GOLDENGRAPH_HPP

// The self-similar limiting function s(x, y) of the cot Birkhoff sums and
// the analytic fast estimator for S_n at astronomically large n.
//
// For x = sum_j alpha^{e_j} (canonical beta-word e_1 < e_2 < ..., no two
// adjacent) the orbit sum splits into blocks of Fibonacci lengths
// q_{N-e_j}. Block j is a sigma-sum at argument
//
//   A_j = (-alpha)^{e_j} W_{j-1},   W_j = y - sum_{i<=j} (-1)^{e_i} alpha^{-e_i} / sqrt(5),
//
// (W_j is the q_N-scaled orbit position at the block boundary) followed by
// one near-pole term 1/(pi W_j). Folding that term into the block gives a
// single special function per block, the pole branch of sigma,
//
//   sigma_plus(t) = sigma(t) + 1/(pi (t - 1/sqrt(5))),
//
// whose pole at 1/sqrt(5) is exactly sigma's analyticity boundary:
//
//   s(x, y) = sum_j (-alpha)^{e_j} sigma_plus(A_j)            [non-terminal]
//           + (-alpha)^{e_J} sigma_or_plus(A_J)               [terminal]
//
// The terminal block keeps its boundary pole iff e_J is even (the floor
// [q_N x] lands on the pole index exactly then); estimates for rational
// x = n/q_L use the pole-free terminal, matching the oracle convention
// (1/n) sum_{k=1}^{n-1} g(k alpha).
//
// The huge-n estimator: Zeckendorf indices z of n, even level L with
// q_L >= n, exponents e_j = L - z_j, estimate = s(x)/x with x = n/q_L.
// Cost is O(J^2) in the Zeckendorf length J, independent of n.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "goldensum/birkhoff.hpp"
#include "goldensum/fibarith.hpp"
#include "goldensum/tau_sigma.hpp"

namespace goldensum {

// x minus nearest integer, in [-1/2, 1/2), ties toward -1/2 (corefuncs
// signed_frac re-exported here because the offset limits are defined by it)
using goldensum::signed_frac;

enum class OffsetVariant {
    Block,     // series arguments A_j (the variant the estimator consumes)
    DigitTail, // calibrated display variant (see compute_offsets)
};

struct OffsetSequence {
    double y0 = 0.0;
    std::vector<double> offsets;        // one per expansion term
    OffsetVariant variant = OffsetVariant::DigitTail;
    std::vector<unsigned> levels_used;  // finite validation levels
    std::vector<double> convergence_gaps; // per offset; finite => converged
    std::vector<bool> converged;
};

// Offsets attached to the terms of the word `rep` at starting offset y.
//
// Block variant: A_j as above (closed-form limits), validated against the
// finite-level quantities q_{n-e_j} * signed_frac(M_{j-1} alpha) computed
// exactly over `levels` (even); per-offset gaps recorded, non-convergence
// flagged per offset rather than thrown.
//
// DigitTail variant (calibrated on the worked 4-term example, frozen):
//   y_1 = y,  y_k = sum_{i=3}^{k+1} (-alpha)^{e_i} (1 < k < J),
//   y_J = (-alpha)^{L-e_J} with L the reference even level (q_L >= word
//   scale); reproduces the quoted example offsets to ~3e-6.
OffsetSequence compute_offsets(const BetaExpansion& rep, double y,
                               std::vector<unsigned> levels,
                               OffsetVariant variant,
                               unsigned reference_level = 0);

// sigma's pole branch (see file header)
double sigma_plus(const SigmaTable& table, double t);

// Series value of s at the exact word value of `rep` (by-q normalization).
// Radius violations name the offending term index.
double s_series(const BetaExpansion& rep, double y, const SigmaTable& table);

// Finite-level direct value S_{[q_level x]}(y/q_level)/q_level, raw sign
// (no parity adjustment): s_oracle(1^-, y, level) == sigma_approx(y, level).
double s_oracle(double x, double y, unsigned level, const PolePolicy& pp = {});

struct SelfSimilarityReport {
    double max_residual = 0.0;
    double at_x = 0.0;
    unsigned level_pair[2] = {0, 0};
};

// max over the grid of | s^(n+1)(alpha x) + alpha * s^(n)(x) | where s^(m)
// is the parity-signed finite-level value (even: +S/q, odd: -S/q).
SelfSimilarityReport self_similarity_residual(const std::vector<double>& grid,
                                              unsigned level);

// o(x) = sum (-1)^{k-1} a_k alpha^k over the beta-digits of x; satisfies
// o(alpha x) = -alpha o(x) exactly.
double caricature(double x, unsigned depth = 72);

// t(x,y) at level n: (1/q_n) sum_{k=1}^{min([q_n x], q_n - 1)} cot(pi(y/q_n + k p_n/q_n))
double t_function(double x, double y, unsigned level, const PolePolicy& pp = {});

struct AffineFitReport {
    double a = 0.0, b = 0.0;  // best a + b*t(alpha x) fit to t(x)
    double max_residual = 0.0;
};

// least-squares affine fit of t(alpha x) against t(x) over a grid
AffineFitReport t_affine_similarity_fit(const std::vector<double>& grid, unsigned level);

inline constexpr int kHugeEstimateSchemaVersion = 1;
inline constexpr std::size_t kMaxZeckendorfTerms = 512;

struct HugeEstimate {
    std::string n;                 // decimal
    unsigned q_level = 0;          // smallest even L with q_L >= n
    double x = 0.0;                // n / q_L
    std::vector<unsigned> exponents;
    std::vector<double> offsets;   // DigitTail display offsets
    std::vector<double> terms;     // per-block contributions; estimate = sum
    double estimate = 0.0;         // normalized like the Birkhoff average S/n
    std::optional<double> oracle;  // (1/n) sum_{k<n} g(k alpha), when n <= 1e7
    double truncation_indicator = 0.0;

    std::string to_json(int digits = 17) const;
};

// Analytic estimate of the Birkhoff average for the cot kernel at index n.
// n = 0 yields the zero estimate. Offsets outside the sigma radius raise
// std::domain_error naming the term.
HugeEstimate estimate_huge(const Natural& n, const SigmaTable& table);

// worked-example calibration targets (quoted offsets of the 4-term example)
inline constexpr double kExampleOffsets[4] = {0.0, -0.0344396, -0.026314, 0.00118918};

} // namespace goldensum

#endif
