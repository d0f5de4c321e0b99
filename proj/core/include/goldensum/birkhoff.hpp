#ifndef GOLDENSUM_BIRKHOFF_HPP
#define GOLDENSUM_BIRKHOFF_HPP

// Direct Birkhoff sums S_n(theta) = sum_{k=1}^{n} g(theta + k*rot mod 1),
// one-pass graph sampling of s_m(x) = S_{[m x]}/m^l along Fibonacci
// levels, and the renormalization operator
//
//   B_{p/q}(f)(y) = (1/q^l) sum_{k=0}^{q-1} f(y/q + k p/q mod 1),
//
// whose order-1 fixed point is cot(pi y) (cyclotomic identity), with the
// companion csc^2 / cot^2 / double-angle / de-Moivre identity suite.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "goldensum/corefuncs.hpp"

namespace goldensum {

struct RotationSpec {
    enum class Kind { Golden, Rational, Real };
    Kind kind = Kind::Golden;
    std::int64_t p = 0, q = 1; // Rational, gcd(p,q)=1
    double value = 0.0;        // Real

    static RotationSpec golden() { return {}; }
    static RotationSpec rational(std::int64_t p, std::int64_t q); // throws on gcd != 1
    static RotationSpec real(double a);
    // grammar: "golden" | "p/q" | decimal literal
    static RotationSpec parse(const std::string& text);
    std::string to_string() const;
};

struct GraphSamples {
    std::vector<double> xs;     // strictly increasing grid on [0,1]
    std::vector<double> values;
    unsigned level = 0;
    bool even = true;
    double offset_y = 0.0;
    KernelId kernel = KernelId::Cot;
    int norm_exponent = 1;

    // header "x,value", one row per point
    void write_csv(std::ostream& os, int digits = 15) const;
    std::string metadata_json() const;
};

inline constexpr std::uint64_t kMaxDirectTerms = 500'000'000;

// Direct compensated summation; throws pole_error (with the term index) on
// pole hits and std::overflow_error past kMaxDirectTerms.
double birkhoff_sum(KernelId kernel, const RotationSpec& rot, double theta,
                    std::uint64_t n, const PolePolicy& pp = {});

// values[i] = S_{[q_level * xs[i]]}(y / q_level) / q_level^{norm_exponent},
// computed with one prefix pass over the orbit (O(q + m), not O(q m)).
// grid points are xs[i] = i/(m-1), i = 0..m-1 (m >= 2), plus the x = 1
// endpoint equals the full-level sum.
GraphSamples birkhoff_graph(KernelId kernel, const RotationSpec& rot, double y,
                            unsigned level, std::size_t grid_points,
                            int norm_exponent = 1, const PolePolicy& pp = {});

// B_{p/q} applied to an arbitrary period-1 evaluator
double renorm_apply(const std::function<double(double)>& f, std::int64_t p,
                    std::int64_t q, int order, double y);
double renorm_apply(KernelId kernel, std::int64_t p, std::int64_t q, int order,
                    double y, const PolePolicy& pp = {});

struct IdentityResult {
    std::string name;
    double max_residual = 0.0;
    std::size_t grid_size = 0;
    bool pass = false;
};

struct IdentityReport {
    std::vector<IdentityResult> results;
    double worst() const;
    bool all_pass() const;
};

enum class IdentityFamily { CotFixedPoint, DoubleAngle, DeMoivreFive, Csc2, Cot2, All };

// Residuals of the renormalization identities over a pole-free grid:
//   cot fixed point over (p,q) in {(1,2),(1,3),(2,3),(2,5),(3,5),(5,8)},
//   double angle cot(x) + cot(x+pi/2) = 2 cot(2x),
//   the 5-term de-Moivre sum, and the csc^2 / cot^2 variants
//   (1/q^2) sum csc^2(pi (k+y)/q) = csc^2(pi y),
//   (1/q^2) sum cot^2(pi (k+y)/q) = cot^2(pi y) + 1 - 1/q.
// Failures are reported, not thrown; an empty grid yields an empty report.
IdentityReport identity_suite(IdentityFamily which, const std::vector<double>& grid,
                              double tolerance);

// convenience: m interior points of (0,1) avoiding the poles of all suite members
std::vector<double> identity_grid(std::size_t m);

} // namespace goldensum

#endif
