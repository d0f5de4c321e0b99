#ifndef GOLDENSUM_TAU_SIGMA_HPP
#define GOLDENSUM_TAU_SIGMA_HPP

// The rational-rotation mean tau and the golden-rotation mean sigma.
//
//   tau_{p/q}(y) = (1/q) sum_{k=1}^{q-1} cot(pi(y/q + k p/q))
//                = cot(pi y) - cot(pi y/q)/q          (cyclotomic identity)
//   tau(y)       = cot(pi y) - 1/(pi y),  tau(0) = 0  (q -> infinity)
//
//   sigma_n(y)   = (1/q_n) sum_{k=1}^{q_n - 1} cot(pi(y/q_n + k alpha))
//
// sigma_n converges along even levels to an analytic sigma(y) for
// |y| < 1/sqrt(5); odd levels converge to -sigma(-y). Successive
// even-level gaps shrink by alpha^4 per 2-level step (measured; a single
// Richardson step with that ratio is applied). Taylor coefficients of
// sigma come from the same orbit pass through the exact cot-derivative
// polynomials:
//
//   sigma^{(l)}(0) = lim (1/q^{l+1}) sum_{k<q} g^{(l)}(k alpha).
//
// The table stores polynomial coefficients a_l (i.e. sigma(y) ~ sum a_l y^l);
// a_0..a_3 = 0.2580122, -1.2472482, 0.6736385, -1.3808268.

#include <cstdint>
#include <string>
#include <vector>

#include "goldensum/corefuncs.hpp"

namespace goldensum {

inline constexpr double kSigmaPoleOffset = 0.44721359549995794; // 1/sqrt(5)

double tau_rational(std::int64_t p, std::int64_t q, double y, const PolePolicy& pp = {});
// independent route: the literal q-1 term sum
double tau_rational_direct(std::int64_t p, std::int64_t q, double y, const PolePolicy& pp = {});

// cot(pi y) - 1/(pi y) on (-1,1), extended by tau(0) = 0; odd
double tau_limit(double y);

// | (1/q^{l+1}) sum_{k<q} g^{(l)}(y/q + k/q)  -  [g^{(l)}(y) - g^{(l)}(y/q)/q^{l+1}] |
double tau_derivative_identity(int l, std::int64_t q, double y, const PolePolicy& pp = {});

// raw finite-level mean (no parity sign adjustment)
double sigma_approx(double y, unsigned level, const PolePolicy& pp = {});

inline constexpr int kSigmaTableSchemaVersion = 1;

struct SigmaTable {
    int order = 8;                      // highest stored power of y
    std::vector<unsigned> levels;       // even levels used
    std::vector<double> coefficients;   // a_0 .. a_order
    std::vector<double> residuals;      // per-coefficient last extrapolation gap
    double radius = 0.15;               // validated |y| range
    std::string variant;                // "derivative-sums" or "finite-differences"

    std::string to_json() const;
    static SigmaTable from_json(const std::string& text); // throws std::runtime_error
    bool operator==(const SigmaTable& o) const;

    // truncation + extrapolation error bound for |y| <= radius
    double residual_bound() const;
};

// Builds the coefficient table from even levels (default {24,...,32}).
// Both construction routes are computed; the derivative-sum route is kept
// (selection by agreement of the low orders with the finite-difference
// route and with sigma_approx extrapolation), the rejected route's values
// are retained in the JSON as metadata. Deterministic: identical inputs
// give bit-identical tables. Throws std::runtime_error when the even-level
// gaps fail to shrink.
SigmaTable sigma_taylor(int order, std::vector<unsigned> levels = {});

// Horner evaluation; |y| > table.radius raises std::domain_error
double sigma_eval(const SigmaTable& table, double y);

// even-level Richardson extrapolation of sigma_approx (test oracle)
double sigma_extrapolated(double y, unsigned top_even_level);

} // namespace goldensum

#endif
