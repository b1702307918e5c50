#pragma once
// Slope-distinguishing invariant sequences: entry n is the fold pattern of
// T^n over the arc [m_{n-1}, m_n] read at depth n, tagged with the side of c
// the orbit point c_n falls on. Consecutive entries obey the shift recurrence,
// which is cross-checked during construction. distinguish() finds the first
// depth where two slopes disagree; count_levels() tallies folds of one level
// inside a salient window under the half-open convention.
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tentlim/arcs.hpp"
#include "tentlim/errors.hpp"
#include "tentlim/folding.hpp"
#include "tentlim/tentmap.hpp"

namespace tentlim {

struct InvariantEntry {
    int n = 0;
    Pattern pattern;    // fold levels of T^n on the salient window, in position order
    bool side = false;  // true when c_n lies strictly right of c
};

template <class S>
struct InvariantSequence {
    S slope;
    std::vector<InvariantEntry> entries;  // n = 2..N in order
};

// Window of the arc [m_{n-1}, m_n] seen at depth n. m_n sits at c and m_{n-1}
// one decreasing pullback above it, for every n, so the whole sequence reads
// off the fixed interval [c, (s-c)/s].
template <class S>
std::pair<S, S> salient_window(const TentMap<S>& map, int n) {
    if (n < 2) throw OutOfDomain("salient window needs n >= 2");
    S lo = salient_position(map, n, n);
    S hi = salient_position(map, n - 1, n);
    return {std::move(lo), std::move(hi)};
}

// Entries n = 2..N. The base entry is forced to (2, 1) by the window geometry;
// every later entry must equal the shift of its predecessor under the gap
// crossings of the previous iterate. The side bit is undefined exactly when
// the orbit returns to c.
template <class S>
InvariantSequence<S> invariant_sequence(const TentMap<S>& map, int N) {
    if (N < 2) throw OutOfDomain("invariant sequence starts at n = 2");
    CriticalOrbit<S> orb(map, N);
    InvariantSequence<S> seq{map.s, {}};
    for (int n = 2; n <= N; ++n) {
        auto [lo, hi] = salient_window(map, n);
        InvariantEntry e;
        e.n = n;
        e.pattern = k_pattern(map, n, lo, hi);
        int cmp = compare(orb.value(n), map.c);
        if (cmp == 0) throw PreperiodicOrbit("orbit hits c; side bit undefined");
        e.side = cmp > 0;
        if (seq.entries.empty()) {
            if (e.pattern != Pattern{2, 1})
                throw Error("base invariant entry is not (2, 1)");
        } else {
            Pattern want = shift_pattern(seq.entries.back().pattern,
                                         window_crossings(map, n - 1, lo, hi));
            if (want != e.pattern)
                throw Error("pattern recurrence failed at n = " + std::to_string(n));
        }
        seq.entries.push_back(std::move(e));
    }
    return seq;
}

// Crossing flags of the salient-window gaps at iterate n, read off the orbit
// alone: both window ends map onto orbit points (c_n and c_{n-1}), so every
// gap endpoint value is some c_level and a gap crosses c exactly when its two
// endpoint levels sit on opposite sides. Agrees with window_crossings on the
// salient window without touching fold positions.
template <class S>
std::vector<bool> salient_crossings(CriticalOrbit<S>& orb, const TentMap<S>& map,
                                    int n, const Pattern& p) {
    if (n < 1) throw OutOfDomain("iterate count must be >= 1");
    std::vector<int> sgn(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        sgn[static_cast<size_t>(i)] = compare(orb.value(i), map.c);
    std::vector<int> levels;
    levels.reserve(p.size() + 2);
    levels.push_back(n);
    levels.insert(levels.end(), p.begin(), p.end());
    levels.push_back(n - 1);
    std::vector<bool> flags;
    flags.reserve(levels.size() - 1);
    for (size_t g = 0; g + 1 < levels.size(); ++g)
        flags.push_back(sgn[static_cast<size_t>(levels[g])] *
                            sgn[static_cast<size_t>(levels[g + 1])] <
                        0);
    return flags;
}

struct Distinction {
    int n = 0;
    std::string reason;  // "side-mismatch" or "pattern-mismatch"
};

// First depth n <= N where the two invariant sequences disagree; absent when
// they agree through depth N. Side bits are compared before patterns at each
// depth. Only the base patterns are materialized: salient_crossings reads
// nothing but earlier side bits, so the shift recurrence forces two sequences
// with equal bases and equal sides through n-1 to share the pattern at n, and
// the first divergence is necessarily a side bit. The walk therefore costs
// O(N) orbit steps where materializing patterns would cost s^N.
template <class S>
std::optional<Distinction> distinguish(const TentMap<S>& a, const TentMap<S>& b,
                                       int N) {
    if (N < 2) throw OutOfDomain("distinguish starts at n = 2");
    CriticalOrbit<S> oa(a, N), ob(b, N);
    auto sideOf = [](CriticalOrbit<S>& orb, const TentMap<S>& m, int i) {
        int cmp = compare(orb.value(i), m.c);
        if (cmp == 0) throw PreperiodicOrbit("orbit hits c; side bit undefined");
        return cmp > 0;
    };
    if (sideOf(oa, a, 2) != sideOf(ob, b, 2))
        return Distinction{2, "side-mismatch"};
    auto wa = salient_window(a, 2);
    auto wb = salient_window(b, 2);
    if (k_pattern(a, 2, wa.first, wa.second) != k_pattern(b, 2, wb.first, wb.second))
        return Distinction{2, "pattern-mismatch"};
    for (int n = 3; n <= N; ++n)
        if (sideOf(oa, a, n) != sideOf(ob, b, n))
            return Distinction{n, "side-mismatch"};
    return std::nullopt;
}

// Number of level-n folds of T^{K+1} in the window of [m_K, m_{K+1}],
// half-open: the fold at the m_{K+1} end (position c, the unique level-(K+1)
// fold) is dropped, the m_K end is kept.
template <class S>
int count_levels(const TentMap<S>& map, int K, int n) {
    if (K < 1) throw OutOfDomain("count_levels needs K >= 1");
    if (n < 1) throw OutOfDomain("count_levels needs level >= 1");
    auto [lo, hi] = salient_window(map, K + 1);
    int count = 0;
    for (const auto& t : turning_points(map, K + 1, lo, hi))
        if (t.level == n && compare(t.pos, lo) > 0) ++count;
    return count;
}

}  // namespace tentlim
