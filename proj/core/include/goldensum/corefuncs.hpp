#ifndef GOLDENSUM_COREFUNCS_HPP
#define GOLDENSUM_COREFUNCS_HPP

// The summation kernels and their relatives, all period 1 in x:
//
//   cot       g(x)  = cot(pi x)            pole at 0
//   csc2      csc^2(pi x)                  pole at 0 (positive; -g'/pi)
//   sec       sec(pi x)                    pole at 1/2
//   logsin    G(x)  = log|2 sin(pi x)|/pi  log-singularity at 0; G' = g
//   sawtooth  H(x)  = x - [x] - 1/2        no pole (jump at 0)
//
// The log kernel appears in three scalings; logsin is the antiderivative
// normalization with G' = g exactly. The others are available as explicit
// helpers:
//   log2sin(x)       = log|2 sin(pi x)|        (= pi * G)
//   log_two_minus_two_cos(x) = log(2 - 2cos(2 pi x)) (= 2 pi G)
//
// Pole handling: arguments are reduced to the signed fundamental domain
// [-1/2, 1/2) before evaluation (this keeps near-pole terms at full
// relative precision), and anything inside PolePolicy.epsilon of the pole
// set raises pole_error instead of returning an infinity.
//
// Also here: derivatives of cot via the exact polynomial recurrence
// (d/dx) cot(pi x) = -pi (1 + cot^2), Euler's partial-fraction partial
// sums, the Cesaro-smoothed Fourier partial sums, the theta q-series
// theta(a) = 1 + 2 sum w^{n^2} (w = e^{i pi a}), and cot sums along
// complex rotations.

#include <complex>
#include <cstdint>
#include <vector>

#include "goldensum/errors.hpp"

namespace goldensum {

enum class KernelId { Cot, Csc2, Sec, LogSin, Sawtooth };

KernelId kernel_from_string(const std::string& name);
std::string kernel_name(KernelId id);

struct PolePolicy {
    double epsilon = 1e-12;
};

// x mod 1 reduced to [-1/2, 1/2), ties toward -1/2
inline double signed_frac(double x) {
    double f = x - std::floor(x);
    if (f >= 0.5) f -= 1.0;
    return f;
}

double eval_kernel(KernelId id, double x, const PolePolicy& pp = {});

// value at an already-reduced signed position (hot path for orbit loops)
double eval_kernel_signed(KernelId id, double s, const PolePolicy& pp = {});

inline constexpr int kMaxCotDerivativeOrder = 12;

// d^l/dx^l cot(pi x); exact integer polynomial-in-cot table, l <= 12
double cot_derivative(int l, double x, const PolePolicy& pp = {});

// (1/pi) [1/x + sum_{0<|k|<=K} 1/(x-k)] -> cot(pi x), error O(1/K)
double euler_cot_partial(double x, std::int64_t K);

// 2 sum_{k<=K} (1 - k/K) sin(2 pi k x) -> cot(pi x) pointwise away from 0
double fourier_cesaro_partial(double x, std::int64_t K);

// theta(alpha) = 1 + 2 sum_{n=1}^{K} w^{n^2}, w = e^{i pi alpha}, Im alpha > 0
std::complex<double> theta_series(std::complex<double> alpha, int K);

// sum_{k=1}^{K} cot(pi (k alpha + offset)), Im alpha > 0 (offset in period-1 units)
std::complex<double> complex_cot_sum(std::complex<double> alpha, double offset, int K);

// cot(pi z) for complex z, stable in both half planes
std::complex<double> complex_cot_pi(std::complex<double> z);

// scaling constants relating the log-kernel conventions
inline constexpr double kLogKernelOverPi = 1.0;       // logsin = log|2 sin(pi x)| / pi
double log2sin(double x, const PolePolicy& pp = {});  // unscaled log|2 sin(pi x)|
double log_two_minus_two_cos(double x, const PolePolicy& pp = {});

} // namespace goldensum

#endif
