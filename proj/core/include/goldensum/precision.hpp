#ifndef GOLDENSUM_PRECISION_HPP
#define GOLDENSUM_PRECISION_HPP

// Minimal RAII wrapper over MPFR for the few places that need more than
// double: the Catalan-gold error series and deep beta-expansion digit
// extraction. Not a general big-float library; only the operations used
// here are provided.

#include <mpfr.h>

#include <cstdint>
#include <string>
#include <utility>

namespace goldensum {

class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec = 128) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    BigFloat(double x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_d(v_, x, MPFR_RNDN); }
    BigFloat(const BigFloat& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigFloat(BigFloat&& o) noexcept { mpfr_init2(v_, 2); mpfr_swap(v_, o.v_); }
    BigFloat& operator=(BigFloat o) { mpfr_swap(v_, o.v_); return *this; }
    ~BigFloat() { mpfr_clear(v_); }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    std::string to_string(std::size_t digits) const {
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*Rg", static_cast<int>(digits), v_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

    static BigFloat sqrt5(mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_sqrt_ui(r.v_, 5, MPFR_RNDN);
        return r;
    }
    // (sqrt(5)-1)/2
    static BigFloat golden_alpha(mpfr_prec_t prec) {
        BigFloat r = sqrt5(prec);
        mpfr_sub_ui(r.v_, r.v_, 1, MPFR_RNDN);
        mpfr_div_ui(r.v_, r.v_, 2, MPFR_RNDN);
        return r;
    }

private:
    mpfr_t v_;
};

} // namespace goldensum

#endif
