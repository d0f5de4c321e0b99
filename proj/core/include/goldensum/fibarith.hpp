#ifndef GOLDENSUM_FIBARITH_HPP
#define GOLDENSUM_FIBARITH_HPP

// Exact integer and algebraic arithmetic around the golden ratio
// alpha = (sqrt(5)-1)/2:
//
//   - Fibonacci numbers F_n (F_0=0, F_1=F_2=1) and the continued-fraction
//     convergents p_n/q_n = F_{n-1}/F_n of alpha,
//   - Zeckendorf representation n = sum F_{z_i} with no two adjacent
//     indices, indices >= 2 (F_1 = F_2 makes index 1 redundant),
//   - greedy beta-expansion x = sum alpha^{e_j}, digits in {0,1}, no two
//     adjacent exponents (alpha^{k} + alpha^{k+1} = alpha^{k-1}),
//   - exact powers alpha^j = a + b*alpha in Z[alpha] (alpha^2 = 1 - alpha),
//   - the Catalan-number series for sqrt(5)*(alpha - p_n/q_n) in inverse
//     even powers of q_n.
//
// Integers are GMP-backed; the series evaluation is MPFR-backed because a
// K-term tail comparison needs ~ (2K+4)*log2(q_n) bits.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "goldensum/precision.hpp"

namespace goldensum {

// Arbitrary-precision nonnegative integer; round-trips decimal strings.
class Natural {
public:
    Natural() : v_(0) {}
    explicit Natural(unsigned long x) : v_(x) {}
    explicit Natural(const mpz_class& z);
    // parses a decimal string; throws std::invalid_argument on junk or sign
    explicit Natural(const std::string& decimal);

    std::string to_string() const { return v_.get_str(); }
    const mpz_class& value() const { return v_; }

    bool operator==(const Natural& o) const { return v_ == o.v_; }
    bool operator<(const Natural& o) const { return v_ < o.v_; }
    bool operator<=(const Natural& o) const { return v_ <= o.v_; }
    bool is_zero() const { return v_ == 0; }

private:
    mpz_class v_;
};

struct ZeckendorfRep {
    std::vector<unsigned> indices; // strictly decreasing, each >= 2, no two adjacent
};

struct BetaExpansion {
    std::vector<unsigned> exponents; // strictly increasing, >= 1, no two adjacent
    unsigned depth = 0;              // greedy truncation length used
};

struct Convergent {
    unsigned n;
    Natural p; // F_{n-1}
    Natural q; // F_n
};

// Exact element a + b*alpha of Z[alpha].
struct AlphaInteger {
    mpz_class a;
    mpz_class b;

    AlphaInteger operator*(const AlphaInteger& o) const {
        // (a+b*al)(c+d*al) = ac + bd + (ad + bc - bd) al   using al^2 = 1 - al
        AlphaInteger r;
        r.a = a * o.a + b * o.b;
        r.b = a * o.b + b * o.a - b * o.b;
        return r;
    }
    bool operator==(const AlphaInteger& o) const { return a == o.a && b == o.b; }
    double eval() const;
};

Natural fibonacci(unsigned n);
// F_n for n <= 92 without allocation
std::uint64_t fibonacci_u64(unsigned n);

Convergent convergent(unsigned n); // n >= 1

// Greedy Zeckendorf decomposition; zeckendorf(0) is the empty representation.
ZeckendorfRep zeckendorf(const Natural& n);
Natural zeckendorf_value(const ZeckendorfRep& rep);

// Greedy beta-expansion of x in [0,1). The double overload promotes x to
// MPFR internally so depths beyond double's ~74-digit horizon stay
// deterministic (they describe the exact binary value of x).
BetaExpansion beta_expand(double x, unsigned depth);
BetaExpansion beta_expand(const BigFloat& x, unsigned depth);

// sum alpha^{e}; accepts non-canonical exponent lists (adjacent exponents)
double beta_value(const BetaExpansion& rep);

// alpha^j = a + b*alpha with a = (-1)^j F_{j-1}, b = (-1)^{j+1} F_j
AlphaInteger alpha_power(unsigned j);

// Partial sum of the Catalan-number expansion of sqrt(5)*(alpha - p_n/q_n):
//
//   sum_{k=0}^{K-1} (-1)^{(n+1)(k+1)} c_k / (5^k q_n^{2k+2}),
//   c_k = (2k)! / (k! (k+1)!).
//
// Demands prec_bits >= (2K+4)*log2(q_n); throws precision_error otherwise.
BigFloat catalan_gold(unsigned n, unsigned K, mpfr_prec_t prec_bits);

// sqrt(5)*(alpha - p_n/q_n), the quantity the series expands (test oracle).
BigFloat golden_ratio_error(unsigned n, mpfr_prec_t prec_bits);

} // namespace goldensum

#endif
