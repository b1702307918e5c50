#pragma once
// Scalar abstraction used by the templated core: exact rationals for rational
// slopes, certified intervals for irrational ones. The free-function layer
// below is the only surface the algorithms touch, so each algorithm is written
// once and instantiated for both lanes.
#include <string>
#include <variant>

#include "tentlim/errors.hpp"
#include "tentlim/interval.hpp"
#include "tentlim/rational.hpp"

namespace tentlim {

using ExactScalar = std::variant<BigRational, CertInterval>;

// ---- rational lane ----------------------------------------------------------

inline int compare(const BigRational& a, const BigRational& b) {
    int c = cmp(a, b);
    return (c > 0) - (c < 0);
}
inline int sign(const BigRational& a) { return sgn(a); }
inline BigRational abs_of(const BigRational& a) { return abs(a); }
inline BigRational min_of(const BigRational& a, const BigRational& b) {
    return cmp(a, b) <= 0 ? a : b;
}
inline BigRational max_of(const BigRational& a, const BigRational& b) {
    return cmp(a, b) >= 0 ? a : b;
}
inline BigRational scalar_like(const BigRational&, long num, long den = 1) {
    if (den == 0) throw ZeroDenominator("scalar_like with zero denominator");
    BigRational r(num, den);
    r.canonicalize();
    return r;
}
inline double to_double(const BigRational& a) { return a.get_d(); }
inline bool identical(const BigRational& a, const BigRational& b) {
    return cmp(a, b) == 0;
}
inline std::string scalar_str(const BigRational& a) { return rat_str(a); }

// ---- interval lane ----------------------------------------------------------

inline int compare(const CertInterval& a, const CertInterval& b) {
    return compare_certified(a, b);
}
inline int sign(const CertInterval& a) {
    return compare_certified(a, CertInterval::from_long(0, a.prec()));
}
inline CertInterval abs_of(const CertInterval& a) { return iabs(a); }
inline CertInterval min_of(const CertInterval& a, const CertInterval& b) {
    return imin(a, b);
}
inline CertInterval max_of(const CertInterval& a, const CertInterval& b) {
    return imax(a, b);
}
inline CertInterval scalar_like(const CertInterval& proto, long num, long den = 1) {
    if (den == 0) throw ZeroDenominator("scalar_like with zero denominator");
    BigRational r(num, den);
    r.canonicalize();
    return CertInterval::from_rational(r, proto.prec());
}
inline double to_double(const CertInterval& a) { return a.mid_double(); }
inline std::string scalar_str(const CertInterval& a) {
    return "[" + a.lo_str() + ", " + a.hi_str() + "]";
}

// ---- parsing ----------------------------------------------------------------

// Slope literals: "p/q" / integer / decimal parse exactly as rationals;
// the named constants "sqrt2" and "golden" become certified intervals.
inline ExactScalar parse_scalar(const std::string& text,
                                mpfr_prec_t bits = default_prec_bits()) {
    if (text == "sqrt2") return CertInterval::sqrt2(bits);
    if (text == "golden") return CertInterval::golden(bits);
    return rat_parse(text);
}

inline std::string scalar_str(const ExactScalar& s) {
    return std::visit([](const auto& v) { return scalar_str(v); }, s);
}

inline double to_double(const ExactScalar& s) {
    return std::visit([](const auto& v) { return to_double(v); }, s);
}

} // namespace tentlim
