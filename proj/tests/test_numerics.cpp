#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tentlim/scalar.hpp"
#include "tentlim/tentmap.hpp"

using namespace tentlim;

TEST_CASE("rational parsing and canonical form") {
    CHECK(rat_str(rat_parse("3/2")) == "3/2");
    CHECK(rat_str(rat_parse("6/4")) == "3/2");
    CHECK(rat_str(rat_parse("-6/4")) == "-3/2");
    CHECK(rat_str(rat_parse("+2")) == "2");
    CHECK(rat_str(rat_parse("0")) == "0");
    CHECK(rat_str(rat_parse("1.75")) == "7/4");
    CHECK(rat_str(rat_parse("-0.5")) == "-1/2");
    CHECK(rat_str(rat_parse(".25")) == "1/4");
    CHECK(rat_str(rat_parse("10.")) == "10");
    CHECK(rat_str(rat_parse("4/2")) == "2");

    CHECK_THROWS_AS(rat_parse(""), MalformedNumber);
    CHECK_THROWS_AS(rat_parse("-"), MalformedNumber);
    CHECK_THROWS_AS(rat_parse("."), MalformedNumber);
    CHECK_THROWS_AS(rat_parse("3/2/5"), MalformedNumber);
    CHECK_THROWS_AS(rat_parse("1.5/2"), MalformedNumber);
    CHECK_THROWS_AS(rat_parse("abc"), MalformedNumber);
    CHECK_THROWS_AS(rat_parse("1e3"), MalformedNumber);
    CHECK_THROWS_AS(rat_parse("3/0"), ZeroDenominator);
}

TEST_CASE("interval arithmetic encloses exact values") {
    auto third = CertInterval::from_rational(rat_parse("1/3"));
    auto sixth = CertInterval::from_rational(rat_parse("1/6"));
    auto sum = third + sixth;
    CHECK(sum.contains_rational(rat_parse("1/2")));
    CHECK_FALSE(sum.is_point());
    // enclosing-but-not-point vs the exact point: no certifiable order
    CHECK_THROWS_AS(compare(sum, CertInterval::from_rational(rat_parse("1/2"))),
                    PrecisionExhausted);

    auto two = CertInterval::sqrt2() * CertInterval::sqrt2();
    CHECK(two.contains_rational(BigRational(2)));

    auto phi = CertInterval::golden();
    auto lhs = phi * phi;
    auto rhs = phi + CertInterval::from_long(1);
    // phi^2 = phi + 1: both sides must stay overlapping at any precision
    CHECK(lhs.hi_double() >= rhs.lo_double());
    CHECK(rhs.hi_double() >= lhs.lo_double());
    CHECK_THROWS_AS(compare(lhs, rhs), PrecisionExhausted);

    CHECK(compare(CertInterval::sqrt2(), CertInterval::from_long(1)) > 0);
    CHECK(compare(CertInterval::from_long(0), CertInterval::sqrt2()) < 0);
}

TEST_CASE("point intervals stay exact under dyadic arithmetic") {
    auto p = CertInterval::from_rational(rat_parse("3/2"), 128);
    CHECK(p.is_point());
    CHECK(compare(p * p, scalar_like(p, 9, 4)) == 0);
    auto x = scalar_like(p, 3, 8);
    auto y = p * x; // 9/16, dyadic, stays a point at 128 bits
    CHECK(y.is_point());
    CHECK(compare(y, scalar_like(p, 9, 16)) == 0);
    CHECK_THROWS_AS(p / CertInterval::from_long(0), PrecisionExhausted);
}

TEST_CASE("generic scalar helpers") {
    BigRational a = rat_parse("-3/4");
    CHECK(sign(a) == -1);
    CHECK(rat_str(abs_of(a)) == "3/4");
    CHECK(rat_str(min_of(a, rat_parse("1/4"))) == "-3/4");
    CHECK(rat_str(max_of(a, rat_parse("1/4"))) == "1/4");
    CHECK(rat_str(scalar_like(a, 7, 2)) == "7/2");
    CHECK_THROWS_AS(scalar_like(a, 1, 0), ZeroDenominator);

    auto s = parse_scalar("7/4");
    CHECK(std::holds_alternative<BigRational>(s));
    CHECK(scalar_str(s) == "7/4");
    auto t = parse_scalar("sqrt2");
    CHECK(std::holds_alternative<CertInterval>(t));
    auto g = parse_scalar("golden", 256);
    CHECK(std::get<CertInterval>(g).prec() >= 256);
    CHECK(std::get<CertInterval>(g).width_leq_pow2(-256));
    CHECK(CertInterval::sqrt2(64).width_leq_pow2(-64));
    CHECK_FALSE(CertInterval::sqrt2(64).width_leq_pow2(-80));
}

TEST_CASE("tent map slope domain") {
    CHECK_NOTHROW(TentMap<BigRational>(rat_parse("3/2")));
    CHECK_NOTHROW(TentMap<BigRational>(rat_parse("2")));
    CHECK_THROWS_AS(TentMap<BigRational>(rat_parse("1.4")), Renormalizable);
    CHECK_THROWS_AS(TentMap<BigRational>(rat_parse("707/500")), Renormalizable);
    CHECK_THROWS_AS(TentMap<BigRational>(rat_parse("201/100")), OutOfDomain);
    CHECK_THROWS_AS(TentMap<BigRational>(rat_parse("-3/2")), OutOfDomain);
    // boundary slope sqrt2: s^2 - 2 straddles zero, honestly undecidable
    CHECK_THROWS_AS(TentMap<CertInterval>(CertInterval::sqrt2()), PrecisionExhausted);
    CHECK_NOTHROW(TentMap<CertInterval>(CertInterval::golden()));
}

TEST_CASE("critical orbit, slope 3/2") {
    TentMap<BigRational> m(rat_parse("3/2"));
    CHECK(rat_str(m.c1) == "3/4");
    CHECK(rat_str(m.c2) == "3/8");
    CHECK(rat_str(m.r) == "3/5");
    CriticalOrbit<BigRational> orb(m);
    const char* want[] = {"1/2", "3/4", "3/8", "9/16", "21/32", "33/64", "93/128", "105/256"};
    for (int i = 0; i <= 7; ++i) CHECK(rat_str(orb.value(i)) == want[i]);
    CHECK(orb.kappa() == 7);
    bool sides[] = {true, false, true, true, true, true, false};
    for (int i = 1; i <= 7; ++i) CHECK(orb.side(i) == sides[i - 1]);
    CHECK(m.core_contains(orb.value(5)));
    CHECK_FALSE(m.core_contains(rat_parse("1/4")));
    CHECK_FALSE(orb.preperiodic_at(40).has_value());
    CHECK(rat_str(orb.recurrence_gap(10)) == "1/64");
    // the recurrence gap only tightens as the horizon grows
    BigRational prev = orb.recurrence_gap(1);
    for (int n = 2; n <= 40; ++n) {
        BigRational g = orb.recurrence_gap(n);
        CHECK(g <= prev);
        prev = g;
    }
}

TEST_CASE("critical orbit, slopes 2 and 7/4") {
    TentMap<BigRational> m2(rat_parse("2"));
    CriticalOrbit<BigRational> o2(m2);
    CHECK(rat_str(o2.value(1)) == "1");
    CHECK(rat_str(o2.value(2)) == "0");
    CHECK(rat_str(o2.value(3)) == "0");
    CHECK(o2.kappa() == 3);
    CHECK(rat_str(m2.r) == "2/3");
    auto rep = o2.preperiodic_at(5);
    REQUIRE(rep.has_value());
    CHECK(rep->first == 2);
    CHECK(rep->second == 1);
    CHECK(rat_str(o2.recurrence_gap(5)) == "1/2");

    TentMap<BigRational> m7(rat_parse("7/4"));
    CriticalOrbit<BigRational> o7(m7);
    CHECK(rat_str(o7.value(1)) == "7/8");
    CHECK(rat_str(o7.value(2)) == "7/32");
    CHECK(rat_str(o7.value(3)) == "49/128");
    CHECK(o7.kappa() == 3);
}

// Independent cross-check of the interval lane: simulate the same orbit in
// doubles and require agreement on kappa plus enclosure of the double values.
TEST_CASE("interval-lane orbit agrees with a double simulation") {
    auto slope = CertInterval::sqrt2() * scalar_like(CertInterval::sqrt2(), 13, 12);
    TentMap<CertInterval> m(slope);
    CriticalOrbit<CertInterval> orb(m);

    double s = std::sqrt(2.0) * 13.0 / 12.0;
    double x = 0.5;
    int dkappa = 0;
    for (int i = 1; i <= 40; ++i) {
        x = std::min(s * x, s * (1.0 - x));
        auto ci = orb.value(i);
        double tol = 1e-15 * std::pow(s, i) + 1e-12; // double roundoff grows like s^i
        CHECK(ci.lo_double() <= x + tol);
        CHECK(ci.hi_double() >= x - tol);
        if (dkappa == 0 && i >= 3 && x <= 0.5) dkappa = i;
    }
    CHECK(dkappa == 5);
    CHECK(orb.kappa() == dkappa);
    CHECK((orb.kappa() - 3) % 2 == 0);
}

TEST_CASE("rational-slope orbits are enclosed by the interval lane") {
    TentMap<BigRational> mq(rat_parse("3/2"));
    CriticalOrbit<BigRational> oq(mq);
    TentMap<CertInterval> mi(CertInterval::from_rational(rat_parse("3/2")));
    CriticalOrbit<CertInterval> oi(mi);
    for (int i = 0; i <= 30; ++i)
        CHECK(oi.value(i).contains_rational(oq.value(i)));
    CHECK(oi.kappa() == 7);
}

// golden slope: c_3 = 1/2 exactly, so the side of c_3 is not certifiable
TEST_CASE("golden slope hits the critical point") {
    TentMap<CertInterval> m(CertInterval::golden());
    CriticalOrbit<CertInterval> orb(m);
    CHECK(orb.value(3).contains_rational(rat_parse("1/2")));
    CHECK_THROWS_AS(orb.kappa(), PrecisionExhausted);
    CHECK_THROWS_AS(orb.side(3), PrecisionExhausted);
}
