#pragma once
// Arbitrary-precision rationals: a thin layer over mpq_class adding strict
// parsing ("p/q", integer, or decimal forms) and a canonical string form.
#include <gmpxx.h>

#include <cctype>
#include <string>

#include "tentlim/errors.hpp"

namespace tentlim {

using BigRational = mpq_class;

namespace detail {

inline bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

} // namespace detail

// Accepts "p/q" (integers, optional leading '-'), plain integers, and decimal
// literals like "1.75" or "-0.5". Throws MalformedNumber / ZeroDenominator.
inline BigRational rat_parse(const std::string& in) {
    std::string s = in;
    if (s.empty()) throw MalformedNumber("empty number literal");
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
        neg = (s[0] == '-');
        s = s.substr(1);
        if (s.empty()) throw MalformedNumber("sign without digits: '" + in + "'");
    }

    auto slash = s.find('/');
    auto dot = s.find('.');
    BigRational r;
    if (slash != std::string::npos) {
        if (dot != std::string::npos)
            throw MalformedNumber("mixed '/' and '.' in '" + in + "'");
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (!detail::all_digits(num) || !detail::all_digits(den))
            throw MalformedNumber("bad fraction literal '" + in + "'");
        mpz_class d(den);
        if (d == 0) throw ZeroDenominator("zero denominator in '" + in + "'");
        r = BigRational(mpz_class(num), d);
    } else if (dot != std::string::npos) {
        std::string ip = s.substr(0, dot);
        std::string fp = s.substr(dot + 1);
        if (ip.empty() && fp.empty())
            throw MalformedNumber("bare '.' in '" + in + "'");
        if (!ip.empty() && !detail::all_digits(ip))
            throw MalformedNumber("bad decimal literal '" + in + "'");
        if (!fp.empty() && !detail::all_digits(fp))
            throw MalformedNumber("bad decimal literal '" + in + "'");
        mpz_class numerator = ip.empty() ? mpz_class(0) : mpz_class(ip);
        mpz_class denominator = 1;
        for (char ch : fp) {
            numerator = numerator * 10 + (ch - '0');
            denominator *= 10;
        }
        r = BigRational(numerator, denominator);
    } else {
        if (!detail::all_digits(s))
            throw MalformedNumber("bad integer literal '" + in + "'");
        r = BigRational(mpz_class(s));
    }
    r.canonicalize();
    if (neg) r = -r;
    return r;
}

// Canonical form: lowest terms, "p/q", integers without "/1".
inline std::string rat_str(const BigRational& r) {
    BigRational c = r;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

} // namespace tentlim
