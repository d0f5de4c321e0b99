#ifndef GOLDENSUM_ORBIT_HPP
#define GOLDENSUM_ORBIT_HPP

// Orbit generators and compensated accumulation.
//
// Positions of the rotation orbit theta + k*alpha (mod 1) are kept as an
// unevaluated double-double pair and reduced to the SIGNED fundamental
// domain [-1/2, 1/2). Near-pole terms of the cot/csc^2 sums sit at
// distances ~ alpha^n ~ 1e-8 from 0; a plain double loop loses ~1e-9
// absolute on k*alpha after 1e7 steps, which is a 10% relative error on
// the closest approach. The double-double walk keeps the absolute error
// below ~1e-28 per million steps, so every summand is full double
// precision.

#include <cmath>
#include <cstdint>

namespace goldensum {

struct DoubleDouble {
    double hi = 0.0;
    double lo = 0.0;
};

inline DoubleDouble two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline DoubleDouble fast_two_sum(double a, double b) {
    // requires |a| >= |b|
    double s = a + b;
    return {s, b - (s - a)};
}

// alpha = (sqrt(5)-1)/2 as an exact-to-~107-bit pair.
DoubleDouble golden_alpha_dd();

inline constexpr double kSqrt5 = 2.2360679774997896964;
inline constexpr double kGoldenAlpha = 0.6180339887498948482;
inline constexpr double kGoldenPhi = 1.6180339887498948482; // 1/alpha

// Neumaier-compensated accumulator. Deterministic for a fixed insertion
// order; summing 1e6 cot terms forward vs reverse agrees to ~1e-12.
class CompensatedSum {
public:
    void add(double x) {
        double t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// theta + k*alpha mod 1 for k = 1, 2, ...; positions reported in
// [-1/2, 1/2).
class GoldenOrbit {
public:
    explicit GoldenOrbit(double theta = 0.0) {
        DoubleDouble a = golden_alpha_dd();
        ahi_ = a.hi;
        alo_ = a.lo;
        hi_ = theta;
        lo_ = 0.0;
        reduce();
    }

    // advance one step and return the new signed position
    double next() {
        DoubleDouble s = two_sum(hi_, ahi_);
        double lo = lo_ + alo_ + s.lo;
        DoubleDouble r = fast_two_sum(s.hi, lo);
        hi_ = r.hi;
        lo_ = r.lo;
        reduce();
        return hi_ + lo_;
    }

    double position() const { return hi_ + lo_; }

private:
    void reduce() {
        if (hi_ >= 0.5) hi_ -= 1.0;      // exact: hi in [0.5, 1.5)
        else if (hi_ < -0.5) hi_ += 1.0;
    }

    double ahi_, alo_;
    double hi_, lo_;
};

// theta + k*p/q mod 1 with exact integer stepping; positions in [-1/2, 1/2).
class RationalOrbit {
public:
    RationalOrbit(std::int64_t p, std::int64_t q, double theta_times_q = 0.0)
        : p_(((p % q) + q) % q), q_(q), r_(0), y_(theta_times_q) {}

    // position of step k (call repeatedly, k = 1, 2, ...)
    double next() {
        r_ += p_;
        if (r_ >= q_) r_ -= q_;
        double num = y_ + static_cast<double>(r_);
        double pos = num / static_cast<double>(q_);
        if (pos >= 0.5) pos = (num - static_cast<double>(q_)) / static_cast<double>(q_);
        return pos;
    }

private:
    std::int64_t p_, q_, r_;
    double y_; // offset premultiplied by q: position = (y + k*p mod q)/q
};

} // namespace goldensum

#endif
