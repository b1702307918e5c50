#pragma once
// Symmetric arcs A_i and salient points m_i, tracked through projections by
// their windows: the window of A_i at depth i is [c2, 1-c2] anchored at the
// fixed point r, and moving one level deeper applies the decreasing-branch
// inverse x -> (s-x)/s to everything.
#include <string>
#include <vector>

#include "tentlim/errors.hpp"
#include "tentlim/tentmap.hpp"

namespace tentlim {

template <class S>
struct Arc {
    int depth;
    S lo, hi;
    S anchor;
};

// A_i as seen at its own depth.
template <class S>
Arc<S> arc_A(const TentMap<S>& map, int i) {
    if (i < 1) throw OutOfDomain("arc index must be >= 1");
    S one = scalar_like(map.s, 1);
    return {i, map.c2, one - map.c2, map.r};
}

// Preimage under the decreasing branch of T.
template <class S>
S dec_pullback(const TentMap<S>& map, const S& x) {
    return (map.s - x) / map.s;
}

// The same window seen d - arc.depth levels deeper. Only the fixed-point
// anchor keeps the branch choice canonical; it is fixed, so it never moves.
template <class S>
Arc<S> arc_at_depth(const TentMap<S>& map, Arc<S> arc, int d) {
    if (d < arc.depth) throw OutOfDomain("arcs only transport deeper");
    if (!identical(arc.anchor, map.r)) {
        if (compare(arc.anchor, map.c) == 0)
            throw AnchorAtFold("anchor sits on the fold");
        throw OutOfDomain("only the fixed-point anchor is supported");
    }
    while (arc.depth < d) {
        S nlo = dec_pullback(map, arc.hi);
        S nhi = dec_pullback(map, arc.lo);
        arc.lo = nlo;
        arc.hi = nhi;
        ++arc.depth;
    }
    return arc;
}

// inner lies inside outer once both are viewed at a common depth.
template <class S>
bool contains(const TentMap<S>& map, const Arc<S>& outer, const Arc<S>& inner) {
    int d = std::max(outer.depth, inner.depth);
    Arc<S> o = arc_at_depth(map, outer, d);
    Arc<S> in = arc_at_depth(map, inner, d);
    return compare(o.lo, in.lo) <= 0 && compare(in.hi, o.hi) <= 0;
}

// Same, but strictly interior. The lattice checks below use this form: at
// s = 2 the windows collide at their boundary threads (c1 = 1 - c2), and the
// lemmas concern the arcs' proper structure, not those endpoint collisions.
template <class S>
bool contains_interior(const TentMap<S>& map, const Arc<S>& outer,
                       const Arc<S>& inner) {
    int d = std::max(outer.depth, inner.depth);
    Arc<S> o = arc_at_depth(map, outer, d);
    Arc<S> in = arc_at_depth(map, inner, d);
    return compare(o.lo, in.lo) < 0 && compare(in.hi, o.hi) < 0;
}

// Position of the salient point m_i at depth d: pulled back below its own
// level, pushed forward (orbit values) above it.
template <class S>
S salient_position(const TentMap<S>& map, int i, int d) {
    if (i < 1) throw OutOfDomain("salient index must be >= 1");
    if (d < 0) throw OutOfDomain("depth must be >= 0");
    if (d >= i) {
        S p = map.c;
        for (int t = 0; t < d - i; ++t) p = dec_pullback(map, p);
        return p;
    }
    CriticalOrbit<S> orb(map, i - d);
    return orb.value(i - d);
}

struct LatticeReport {
    int checks = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// Exhaustive small-scale audit of how the arcs and salient points sit with
// respect to each other. kappaOverride substitutes a wrong return index so a
// test can confirm the checks actually bite.
template <class S>
LatticeReport verify_arc_lattice(const TentMap<S>& map, int maxI,
                                 int kappaOverride = 0) {
    CriticalOrbit<S> orb(map, maxI + 2);
    int kap = kappaOverride > 0 ? kappaOverride : orb.kappa();
    if (maxI < kap + 2)
        throw OutOfDomain("verify_arc_lattice needs maxI >= kappa + 2");
    LatticeReport rep;
    auto fail = [&rep](const std::string& what, int i, int j) {
        rep.failures.push_back(what + " i=" + std::to_string(i) +
                               " j=" + std::to_string(j));
    };
    // equality that a certified lane cannot refute still counts: overlapping
    // enclosures of the same algebraic point must not flag a failure
    auto consistentEq = [](const S& a, const S& b) {
        try {
            return compare(a, b) == 0;
        } catch (const PrecisionExhausted&) {
            return true;
        }
    };

    for (int i = 1; i + 2 <= maxI; ++i) {
        ++rep.checks;
        if (!contains_interior(map, arc_A(map, i + 2), arc_A(map, i)))
            fail("nesting", i, i + 2);
    }
    for (int i = 1; i <= maxI; ++i)
        for (int l = 1; l < kap && i + l <= maxI; l += 2) {
            ++rep.checks;
            if (contains_interior(map, arc_A(map, i + l), arc_A(map, i)))
                fail("odd-gap containment", i, i + l);
        }
    for (int i = 1; i + kap <= maxI; ++i) {
        ++rep.checks;
        if (!contains_interior(map, arc_A(map, i + kap), arc_A(map, i)))
            fail("return-gap nesting", i, i + kap);
    }

    // at a common depth the salient points alternate around r and march
    // strictly outward with the index
    int D = maxI + 1;
    S prevGap = abs_of(salient_position(map, 1, D) - map.r);
    int prevSide = sign(salient_position(map, 1, D) - map.r);
    for (int i = 2; i <= maxI; ++i) {
        S q = salient_position(map, i, D);
        ++rep.checks;
        int side = sign(q - map.r);
        if (side == 0 || side == prevSide) fail("alternation", i - 1, i);
        S gap = abs_of(q - map.r);
        ++rep.checks;
        if (compare(gap, prevGap) <= 0) fail("expansion", i - 1, i);
        prevSide = side;
        prevGap = gap;
    }

    for (int i = 1; i + 2 <= maxI; ++i) {
        Arc<S> deep = arc_at_depth(map, arc_A(map, i), i + 2);
        ++rep.checks;
        // m_{i+2} is the left endpoint of A_i two levels down
        if (!consistentEq(deep.lo, salient_position(map, i + 2, i + 2)))
            fail("salient boundary", i, i + 2);
        ++rep.checks;
        S mid = salient_position(map, i + 1, i + 2);
        if (compare(deep.lo, mid) < 0 && compare(mid, deep.hi) < 0)
            fail("interior salient", i, i + 1);
    }

    // m_i enters A_{i+1} exactly when the return index is 3
    for (int i = 1; i + 1 <= maxI; ++i) {
        Arc<S> a = arc_A(map, i + 1);
        S p = salient_position(map, i, i + 1);
        bool in = compare(a.lo, p) <= 0 && compare(p, a.hi) <= 0;
        ++rep.checks;
        if (in != (kap == 3)) fail("return-3 salient", i, i + 1);
    }
    return rep;
}

} // namespace tentlim
