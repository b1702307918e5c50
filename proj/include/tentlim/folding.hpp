#pragma once
// Fold structure of tent-map iterates: turning points of T^n on a window,
// k-patterns (fold-level sequences), the level-shift recurrence, pattern
// realization search, the adjacent-image covering check, and the delta budget.
#include <algorithm>
#include <optional>
#include <vector>

#include "tentlim/errors.hpp"
#include "tentlim/tentmap.hpp"

namespace tentlim {

template <class S>
struct TurningPoint {
    S pos;     // position of the fold
    int m;     // first hit time: T^m(pos) = c, minimal
    int level; // n - m for the iterate T^n that was scanned
};

using Pattern = std::vector<int>;

namespace detail {

// Turning points of T^n on [lo,hi], found by pulling c back through the
// monotone branches of T. At each step the window splits at c; the deeper
// fold set of each branch is the branch-inverse image of the fold set of
// T^{n-1} on the branch image. Positions are distinct across depths because
// c never revisits itself under the admitted slopes.
template <class S>
void turning_rec(const TentMap<S>& map, int n, const S& lo, const S& hi, int m,
                 int total, std::vector<TurningPoint<S>>& out) {
    if (n <= 0) return;
    bool leftBranch = compare(lo, map.c) < 0;
    bool rightBranch = compare(hi, map.c) > 0;
    if (compare(map.c, lo) >= 0 && compare(map.c, hi) <= 0)
        out.push_back({map.c, m, total - m});
    if (n == 1) return;
    if (leftBranch) {
        const S& bhi = rightBranch ? map.c : hi;
        S ilo = map.s * lo, ihi = map.s * bhi;
        size_t first = out.size();
        turning_rec(map, n - 1, ilo, ihi, m + 1, total, out);
        for (size_t t = first; t < out.size(); ++t)
            out[t].pos = out[t].pos / map.s;
    }
    if (rightBranch) {
        const S& blo = leftBranch ? map.c : lo;
        S one = scalar_like(map.s, 1);
        S ilo = map.s * (one - hi), ihi = map.s * (one - blo);
        size_t first = out.size();
        turning_rec(map, n - 1, ilo, ihi, m + 1, total, out);
        for (size_t t = first; t < out.size(); ++t)
            out[t].pos = one - out[t].pos / map.s;
    }
}

} // namespace detail

// Sorted turning points of T^n on the closed window [lo, hi].
template <class S>
std::vector<TurningPoint<S>> turning_points(const TentMap<S>& map, int n,
                                            const S& lo, const S& hi) {
    if (n < 1) throw OutOfDomain("iterate count must be >= 1");
    if (compare(lo, hi) > 0) throw OutOfDomain("window is empty");
    S zero = scalar_like(map.s, 0);
    S one = scalar_like(map.s, 1);
    if (compare(lo, zero) < 0 || compare(hi, one) > 0)
        throw OutOfDomain("window leaves [0,1]");
    std::vector<TurningPoint<S>> out;
    detail::turning_rec(map, n, lo, hi, 0, n, out);
    std::sort(out.begin(), out.end(),
              [](const TurningPoint<S>& a, const TurningPoint<S>& b) {
                  return compare(a.pos, b.pos) < 0;
              });
    return out;
}

// Fold levels along the closed window, in positional order.
template <class S>
Pattern k_pattern(const TentMap<S>& map, int n, const S& lo, const S& hi) {
    Pattern p;
    for (const auto& t : turning_points(map, n, lo, hi)) p.push_back(t.level);
    return p;
}

// Palindrome with a strict maximum in the middle (the shape every k-symmetric
// window produces).
inline bool is_symmetric_pattern(const Pattern& p) {
    if (p.empty()) return true;
    if (p.size() % 2 == 0) return false;
    size_t mid = p.size() / 2;
    for (size_t i = 0; i < mid; ++i)
        if (p[i] != p[p.size() - 1 - i]) return false;
    for (size_t i = 0; i < p.size(); ++i)
        if (i != mid && p[i] >= p[mid]) return false;
    return true;
}

// One shift step: every level rises by one, and a new level-1 fold appears in
// each gap whose image crosses c. crossings has one flag per gap, boundary
// gaps included, so |crossings| = |P| + 1.
inline Pattern shift_pattern(const Pattern& p, const std::vector<bool>& crossings) {
    if (crossings.size() != p.size() + 1)
        throw LengthMismatch("need one crossing flag per gap");
    Pattern out;
    for (size_t i = 0; i <= p.size(); ++i) {
        if (crossings[i]) out.push_back(1);
        if (i < p.size()) out.push_back(p[i] + 1);
    }
    return out;
}

// Gap crossing flags of T^n on [lo, hi]: true when the image of the open gap
// between consecutive fold positions (window endpoints at the borders)
// strictly crosses c. Turning values are orbit points c_level, so signs come
// from the critical orbit.
template <class S>
std::vector<bool> window_crossings(const TentMap<S>& map, int n, const S& lo,
                                   const S& hi) {
    auto tps = turning_points(map, n, lo, hi);
    CriticalOrbit<S> orb(map, n);
    std::vector<S> gapEnds; // values at gap endpoints, in positional order
    gapEnds.push_back(map.iterate(lo, n));
    for (const auto& t : tps) gapEnds.push_back(orb.value(t.level));
    gapEnds.push_back(map.iterate(hi, n));
    std::vector<bool> flags;
    for (size_t i = 0; i + 1 < gapEnds.size(); ++i) {
        int sa = compare(gapEnds[i], map.c);
        int sb = compare(gapEnds[i + 1], map.c);
        flags.push_back(sa * sb < 0);
    }
    return flags;
}

template <class S>
struct RealizedPattern {
    int n;
    S lo, hi;
};

// Smallest iterate whose fold structure on the core contains the requested
// level run; the window is cut at gap midpoints around the run.
template <class S>
std::optional<RealizedPattern<S>> realize_pattern(const TentMap<S>& map,
                                                  const Pattern& want, int maxN) {
    if (want.empty()) throw OutOfDomain("empty pattern");
    int need = *std::max_element(want.begin(), want.end());
    S half = scalar_like(map.s, 1, 2);
    for (int n = std::max(need, 1); n <= maxN; ++n) {
        auto tps = turning_points(map, n, map.c2, map.c1);
        if (tps.size() < want.size()) continue;
        for (size_t start = 0; start + want.size() <= tps.size(); ++start) {
            bool ok = true;
            for (size_t t = 0; t < want.size(); ++t)
                if (tps[start + t].level != want[t]) { ok = false; break; }
            if (!ok) continue;
            // cut at gap midpoints; the core endpoints bound the outer gaps
            S prev = (start == 0) ? map.c2 : tps[start - 1].pos;
            S lo = (prev + tps[start].pos) * half;
            size_t last = start + want.size() - 1;
            S next = (last + 1 == tps.size()) ? map.c1 : tps[last + 1].pos;
            S hi = (tps[last].pos + next) * half;
            return RealizedPattern<S>{n, lo, hi};
        }
    }
    return std::nullopt;
}

// Piecewise-linear restriction of T^n to [lo, hi]: breakpoints are the window
// endpoints plus interior folds, values the iterate there.
template <class S>
struct PLFunction {
    std::vector<S> x;
    std::vector<S> y;
};

template <class S>
PLFunction<S> pl_restrict(const TentMap<S>& map, int n, const S& lo, const S& hi) {
    PLFunction<S> f;
    f.x.push_back(lo);
    if (n >= 1)
        for (const auto& t : turning_points(map, n, lo, hi))
            if (compare(t.pos, lo) > 0 && compare(t.pos, hi) < 0) f.x.push_back(t.pos);
    if (compare(lo, hi) < 0) f.x.push_back(hi);
    for (const auto& v : f.x) f.y.push_back(map.iterate(v, n));
    return f;
}

struct AdjacentViolation {
    int n;
    size_t pair; // index j of the adjacent turning pair (x_j, x_{j+1})
};

namespace detail {

// Covering walk for one adjacent pair: right of y = x_{j+1}, a monotone run
// must come back to the far value T^n(x_j) before any fold passes the near
// value T^n(y); the segment to the domain end acts as the final fold.
template <class S>
bool adjacent_pair_covered(const std::vector<S>& vals, size_t j, const S& endValue) {
    const S& vx = vals[j];
    const S& vy = vals[j + 1];
    bool capIsHigh = compare(vy, vx) > 0;
    for (size_t t = j + 2; t < vals.size(); ++t) {
        if (capIsHigh) {
            if (compare(vals[t], vx) <= 0) return true;
            if (compare(vals[t], vy) > 0) return false;
        } else {
            if (compare(vals[t], vx) >= 0) return true;
            if (compare(vals[t], vy) < 0) return false;
        }
    }
    if (capIsHigh) return compare(endValue, vx) <= 0;
    return compare(endValue, vx) >= 0;
}

} // namespace detail

// Adjacent-image covering on [0,1]: for each adjacent turning pair of T^n the
// next stretch must re-cover the pair's image. Returns violations (expected
// empty). The override lets a test corrupt the fold-value table.
template <class S>
std::vector<AdjacentViolation> verify_adjacent_images(
    const TentMap<S>& map, int n,
    const std::vector<S>* foldValuesOverride = nullptr) {
    S zero = scalar_like(map.s, 0);
    S one = scalar_like(map.s, 1);
    auto tps = turning_points(map, n, zero, one);
    CriticalOrbit<S> orb(map, n);
    std::vector<S> vals;
    for (const auto& t : tps) vals.push_back(orb.value(t.level));
    if (foldValuesOverride) {
        if (foldValuesOverride->size() != vals.size())
            throw LengthMismatch("fold table size mismatch");
        vals = *foldValuesOverride;
    }
    S endValue = map.iterate(one, n);
    std::vector<AdjacentViolation> bad;
    for (size_t j = 0; j + 1 < vals.size(); ++j)
        if (!detail::adjacent_pair_covered(vals, j, endValue))
            bad.push_back({n, j});
    return bad;
}

enum class DeltaKind { OrbitGap, FixedGap, ImageGap };

template <class S>
struct DeltaCertificate {
    S delta;
    DeltaKind kind;
    int index; // orbit index i, or iterate n of the attaining image gap
    int pair;  // turning-pair index when kind == ImageGap
};

// delta = (1/100) * min over: |c - c_i| (i <= N), |c - r|, and adjacent
// turning-value gaps of T^n on [0,1] for n <= N. Throws PreperiodicOrbit when
// the orbit returns exactly to c (or an interval gap straddles zero).
template <class S>
DeltaCertificate<S> delta_bound(const TentMap<S>& map, int N) {
    CriticalOrbit<S> orb(map, N);
    S best = abs_of(map.c - orb.value(1));
    DeltaCertificate<S> cert{best, DeltaKind::OrbitGap, 1, 0};
    auto gapIsZero = [](const S& g) {
        if constexpr (std::is_same_v<S, BigRational>)
            return sgn(g) == 0;
        else
            return g.contains_rational(BigRational(0));
    };
    for (int i = 1; i <= N; ++i) {
        S g = abs_of(map.c - orb.value(i));
        if (gapIsZero(g))
            throw PreperiodicOrbit("critical orbit returns to c at step " +
                                   std::to_string(i));
        if (compare(g, cert.delta) < 0) cert = {g, DeltaKind::OrbitGap, i, 0};
    }
    S fg = abs_of(map.c - map.r);
    if (compare(fg, cert.delta) < 0) cert = {fg, DeltaKind::FixedGap, 0, 0};
    S zero = scalar_like(map.s, 0);
    S one = scalar_like(map.s, 1);
    for (int n = 1; n <= N; ++n) {
        auto tps = turning_points(map, n, zero, one);
        for (size_t j = 0; j + 1 < tps.size(); ++j) {
            S g = abs_of(orb.value(tps[j].level) - orb.value(tps[j + 1].level));
            if (gapIsZero(g))
                throw PreperiodicOrbit("coinciding adjacent fold values");
            if (compare(g, cert.delta) < 0)
                cert = {g, DeltaKind::ImageGap, n, static_cast<int>(j)};
        }
    }
    cert.delta = cert.delta * scalar_like(map.s, 1, 100);
    return cert;
}

} // namespace tentlim
