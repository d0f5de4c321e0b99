#include "goldensum/orbit.hpp"

#include <mpfr.h>

namespace goldensum {

DoubleDouble golden_alpha_dd() {
    static const DoubleDouble a = [] {
        mpfr_t t, r;
        mpfr_init2(t, 160);
        mpfr_init2(r, 160);
        mpfr_sqrt_ui(t, 5, MPFR_RNDN);
        mpfr_sub_ui(t, t, 1, MPFR_RNDN);
        mpfr_div_ui(t, t, 2, MPFR_RNDN);
        DoubleDouble out;
        out.hi = mpfr_get_d(t, MPFR_RNDN);
        mpfr_sub_d(r, t, out.hi, MPFR_RNDN);
        out.lo = mpfr_get_d(r, MPFR_RNDN);
        mpfr_clear(t);
        mpfr_clear(r);
        return out;
    }();
    return a;
}

} // namespace goldensum
