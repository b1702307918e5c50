#pragma once
// Certified machine intervals over MPFR: every operation rounds the lower
// endpoint down and the upper endpoint up, so the true real value is always
// enclosed. Comparisons are certified: an order is reported only when the
// intervals are disjoint (or both are the same exact point); otherwise the
// comparison throws PrecisionExhausted.
#include <mpfr.h>

#include <cstdlib>
#include <string>

#include "tentlim/errors.hpp"
#include "tentlim/rational.hpp"

namespace tentlim {

inline mpfr_prec_t default_prec_bits() {
    static mpfr_prec_t bits = [] {
        const char* env = std::getenv("TENTLIM_PRECISION_BITS");
        if (env) {
            long v = std::strtol(env, nullptr, 10);
            if (v >= MPFR_PREC_MIN && v <= 1 << 24) return static_cast<mpfr_prec_t>(v);
        }
        return static_cast<mpfr_prec_t>(128);
    }();
    return bits;
}

class CertInterval {
  public:
    CertInterval() : CertInterval(default_prec_bits()) {}

    explicit CertInterval(mpfr_prec_t bits) {
        mpfr_init2(lo_, bits);
        mpfr_init2(hi_, bits);
        mpfr_set_zero(lo_, 1);
        mpfr_set_zero(hi_, 1);
    }

    CertInterval(const CertInterval& o) : CertInterval(o.prec()) {
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }

    CertInterval(CertInterval&& o) noexcept {
        mpfr_init2(lo_, o.prec());
        mpfr_init2(hi_, o.prec());
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
    }

    CertInterval& operator=(const CertInterval& o) {
        if (this != &o) {
            mpfr_set_prec(lo_, o.prec());
            mpfr_set_prec(hi_, o.prec());
            mpfr_set(lo_, o.lo_, MPFR_RNDD);
            mpfr_set(hi_, o.hi_, MPFR_RNDU);
        }
        return *this;
    }

    CertInterval& operator=(CertInterval&& o) noexcept {
        if (this != &o) {
            mpfr_swap(lo_, o.lo_);
            mpfr_swap(hi_, o.hi_);
        }
        return *this;
    }

    ~CertInterval() {
        mpfr_clear(lo_);
        mpfr_clear(hi_);
    }

    mpfr_prec_t prec() const { return mpfr_get_prec(lo_); }

    static CertInterval from_rational(const BigRational& r, mpfr_prec_t bits = default_prec_bits()) {
        CertInterval x(bits);
        mpfr_set_q(x.lo_, r.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(x.hi_, r.get_mpq_t(), MPFR_RNDU);
        return x;
    }

    static CertInterval from_long(long v, mpfr_prec_t bits = default_prec_bits()) {
        CertInterval x(bits);
        mpfr_set_si(x.lo_, v, MPFR_RNDD);
        mpfr_set_si(x.hi_, v, MPFR_RNDU);
        return x;
    }

    // Constants carry two guard bits so the enclosure width stays <= 2^-bits
    // (a bare `bits`-bit container can only reach 2^(1-bits) around values in
    // [1,2)).
    static CertInterval sqrt2(mpfr_prec_t bits = default_prec_bits()) {
        CertInterval x(bits + 2);
        mpfr_set_ui(x.lo_, 2, MPFR_RNDD);
        mpfr_set_ui(x.hi_, 2, MPFR_RNDU);
        mpfr_sqrt(x.lo_, x.lo_, MPFR_RNDD);
        mpfr_sqrt(x.hi_, x.hi_, MPFR_RNDU);
        return x;
    }

    // (1+sqrt(5))/2
    static CertInterval golden(mpfr_prec_t bits = default_prec_bits()) {
        CertInterval x(bits + 2);
        mpfr_set_ui(x.lo_, 5, MPFR_RNDD);
        mpfr_set_ui(x.hi_, 5, MPFR_RNDU);
        mpfr_sqrt(x.lo_, x.lo_, MPFR_RNDD);
        mpfr_sqrt(x.hi_, x.hi_, MPFR_RNDU);
        mpfr_add_ui(x.lo_, x.lo_, 1, MPFR_RNDD);
        mpfr_add_ui(x.hi_, x.hi_, 1, MPFR_RNDU);
        mpfr_div_ui(x.lo_, x.lo_, 2, MPFR_RNDD);
        mpfr_div_ui(x.hi_, x.hi_, 2, MPFR_RNDU);
        return x;
    }

    // Bitwise-equal enclosures (not a numeric comparison).
    friend bool identical(const CertInterval& a, const CertInterval& b) {
        return mpfr_equal_p(a.lo_, b.lo_) && mpfr_equal_p(a.hi_, b.hi_);
    }

    // True when hi - lo <= 2^e, evaluated with outward rounding.
    bool width_leq_pow2(long e) const {
        mpfr_t w;
        mpfr_init2(w, prec() + 4);
        mpfr_sub(w, hi_, lo_, MPFR_RNDU);
        bool ok = mpfr_cmp_ui_2exp(w, 1, e) <= 0;
        mpfr_clear(w);
        return ok;
    }

    friend CertInterval operator+(const CertInterval& a, const CertInterval& b) {
        CertInterval r(a.prec());
        mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
        mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
        return r;
    }

    friend CertInterval operator-(const CertInterval& a, const CertInterval& b) {
        CertInterval r(a.prec());
        mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
        mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
        return r;
    }

    friend CertInterval operator-(const CertInterval& a) {
        CertInterval r(a.prec());
        mpfr_neg(r.lo_, a.hi_, MPFR_RNDD);
        mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
        return r;
    }

    friend CertInterval operator*(const CertInterval& a, const CertInterval& b) {
        CertInterval r(a.prec());
        mpfr_t t;
        mpfr_init2(t, a.prec());
        // lower bound: min of four products rounded down
        mpfr_mul(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
        mpfr_mul(t, a.lo_, b.hi_, MPFR_RNDD);
        mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
        mpfr_mul(t, a.hi_, b.lo_, MPFR_RNDD);
        mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
        mpfr_mul(t, a.hi_, b.hi_, MPFR_RNDD);
        mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
        // upper bound: max of four products rounded up
        mpfr_mul(r.hi_, a.lo_, b.lo_, MPFR_RNDU);
        mpfr_mul(t, a.lo_, b.hi_, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
        mpfr_mul(t, a.hi_, b.lo_, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
        mpfr_mul(t, a.hi_, b.hi_, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
        mpfr_clear(t);
        return r;
    }

    friend CertInterval operator/(const CertInterval& a, const CertInterval& b) {
        if (mpfr_sgn(b.lo_) <= 0 && mpfr_sgn(b.hi_) >= 0)
            throw PrecisionExhausted("division by an interval containing zero");
        CertInterval r(a.prec());
        mpfr_t t;
        mpfr_init2(t, a.prec());
        mpfr_div(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
        mpfr_div(t, a.lo_, b.hi_, MPFR_RNDD);
        mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
        mpfr_div(t, a.hi_, b.lo_, MPFR_RNDD);
        mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
        mpfr_div(t, a.hi_, b.hi_, MPFR_RNDD);
        mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
        mpfr_div(r.hi_, a.lo_, b.lo_, MPFR_RNDU);
        mpfr_div(t, a.lo_, b.hi_, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
        mpfr_div(t, a.hi_, b.lo_, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
        mpfr_div(t, a.hi_, b.hi_, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
        mpfr_clear(t);
        return r;
    }

    // Pointwise min/max of bounds is the exact interval image of min/max.
    friend CertInterval imin(const CertInterval& a, const CertInterval& b) {
        CertInterval r(a.prec());
        mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
        mpfr_min(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
        return r;
    }

    friend CertInterval imax(const CertInterval& a, const CertInterval& b) {
        CertInterval r(a.prec());
        mpfr_max(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
        mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
        return r;
    }

    friend CertInterval iabs(const CertInterval& a) {
        CertInterval r(a.prec());
        if (mpfr_sgn(a.lo_) >= 0) {
            mpfr_set(r.lo_, a.lo_, MPFR_RNDD);
            mpfr_set(r.hi_, a.hi_, MPFR_RNDU);
        } else if (mpfr_sgn(a.hi_) <= 0) {
            mpfr_neg(r.lo_, a.hi_, MPFR_RNDD);
            mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
        } else {
            mpfr_set_zero(r.lo_, 1);
            mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
            mpfr_max(r.hi_, r.hi_, a.hi_, MPFR_RNDU);
        }
        return r;
    }

    // Certified three-way compare: -1/0/+1, or PrecisionExhausted when the
    // intervals overlap without both being the same exact point.
    friend int compare_certified(const CertInterval& a, const CertInterval& b) {
        if (mpfr_cmp(a.hi_, b.lo_) < 0) return -1;
        if (mpfr_cmp(a.lo_, b.hi_) > 0) return 1;
        if (mpfr_cmp(a.lo_, a.hi_) == 0 && mpfr_cmp(b.lo_, b.hi_) == 0 &&
            mpfr_cmp(a.lo_, b.lo_) == 0)
            return 0;
        throw PrecisionExhausted("interval comparison not certifiable at " +
                                 std::to_string(a.prec()) + " bits");
    }

    bool is_point() const { return mpfr_cmp(lo_, hi_) == 0; }

    bool contains_rational(const BigRational& r) const {
        return mpfr_cmp_q(lo_, r.get_mpq_t()) <= 0 &&
               mpfr_cmp_q(hi_, r.get_mpq_t()) >= 0;
    }

    double lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
    double hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }
    double mid_double() const { return 0.5 * (lo_double() + hi_double()); }

    std::string lo_str() const { return bound_str(lo_, MPFR_RNDD); }
    std::string hi_str() const { return bound_str(hi_, MPFR_RNDU); }

  private:
    static std::string bound_str(const mpfr_t v, mpfr_rnd_t rnd) {
        char buf[64];
        mpfr_snprintf(buf, sizeof buf, rnd == MPFR_RNDD ? "%.20RDe" : "%.20RUe", v);
        return buf;
    }

    mpfr_t lo_, hi_;
};

} // namespace tentlim
