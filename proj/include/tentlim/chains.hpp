#pragma once
// Natural chains: the partition of [0, c1] cut at every <= k-step preimage of
// c, link traversal of arc windows against it, link-symmetry detection, and
// the completeness audit: every symmetric subarc through the fixed thread is
// centered on a salient fold.
#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tentlim/arcs.hpp"
#include "tentlim/errors.hpp"
#include "tentlim/folding.hpp"
#include "tentlim/tentmap.hpp"

namespace tentlim {

template <class S>
struct Chain {
    int k = 0;
    std::vector<S> boundaries;  // interior cut points, sorted, inside [0, c1]
    S mesh;                     // widest closed gap, end gaps included
    int links() const { return static_cast<int>(boundaries.size()) + 1; }
};

// Cut [0, c1] at every point of U_{j<=k} T^{-j}(c). Links are the closed gaps
// between consecutive cuts; two neighbours share exactly their common cut.
template <class S>
Chain<S> natural_chain(const TentMap<S>& map, int k) {
    if (k < 0) throw OutOfDomain("natural_chain needs k >= 0");
    std::vector<S> pts{map.c};
    std::vector<S> layer{map.c};
    S one = scalar_like(map.s, 1, 1);
    for (int j = 1; j <= k; ++j) {
        std::vector<S> next;
        next.reserve(2 * layer.size());
        for (const S& y : layer) {
            S up = y / map.s;
            next.push_back(up);
            S down = one - up;
            if (compare(down, map.c1) <= 0) next.push_back(down);
        }
        pts.insert(pts.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    std::sort(pts.begin(), pts.end(),
              [](const S& a, const S& b) { return compare(a, b) < 0; });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const S& a, const S& b) { return identical(a, b); }),
              pts.end());

    Chain<S> ch;
    ch.k = k;
    ch.boundaries = std::move(pts);
    S prev = scalar_like(map.s, 0, 1);
    S widest = prev;
    for (const S& b : ch.boundaries) {
        S gap = b - prev;
        widest = max_of(widest, gap);
        prev = b;
    }
    S tail = map.c1 - prev;
    ch.mesh = max_of(widest, tail);
    return ch;
}

namespace detail {

// boundaries strictly below / at-or-below x
template <class S>
int cnt_lt(const std::vector<S>& b, const S& x) {
    int lo = 0, hi = static_cast<int>(b.size());
    while (lo < hi) {
        int mid = (lo + hi) / 2;
        if (compare(b[mid], x) < 0)
            lo = mid + 1;
        else
            hi = mid;
    }
    return lo;
}

template <class S>
int cnt_le(const std::vector<S>& b, const S& x) {
    int lo = 0, hi = static_cast<int>(b.size());
    while (lo < hi) {
        int mid = (lo + hi) / 2;
        if (compare(b[mid], x) <= 0)
            lo = mid + 1;
        else
            hi = mid;
    }
    return lo;
}

} // namespace detail

// Links visited by the graph of T^(a.depth - k) over the arc's window, repeats
// within a link collapsed. A link is entered only when the path penetrates its
// interior; touching the shared cut of two links and turning back stays put.
template <class S>
std::vector<int> link_sequence(const TentMap<S>& map, const Chain<S>& chain,
                               const Arc<S>& a) {
    int e = a.depth - chain.k;
    if (e < 0) throw DepthTooShallow("arc is shallower than the chain");
    PLFunction<S> f = pl_restrict(map, e, a.lo, a.hi);
    for (const S& v : f.y) {
        // fold values can equal c1 exactly, which a certified lane cannot
        // separate; only a certifiable escape is an error
        bool escapes;
        try {
            escapes = compare(v, map.c1) > 0;
        } catch (const PrecisionExhausted&) {
            escapes = false;
        }
        if (escapes) throw OutOfDomain("walk leaves the chain interval");
    }

    const auto& B = chain.boundaries;
    int m = static_cast<int>(f.y.size());
    std::vector<int> seq;
    int cur = 0;
    for (int i = 1; i < m; ++i) {
        int dir = compare(f.y[i], f.y[i - 1]);
        if (dir == 0) continue;
        if (seq.empty()) {
            cur = dir > 0 ? detail::cnt_le(B, f.y[0]) + 1
                          : detail::cnt_lt(B, f.y[0]) + 1;
            seq.push_back(cur);
        }
        int target = dir > 0 ? detail::cnt_lt(B, f.y[i]) + 1
                             : detail::cnt_le(B, f.y[i]) + 1;
        while (cur != target) {
            cur += target > cur ? 1 : -1;
            seq.push_back(cur);
        }
    }
    if (seq.empty()) seq.push_back(detail::cnt_lt(B, f.y[0]) + 1);
    return seq;
}

template <class S>
struct LinkSymmetry {
    int midlink = 0;
    std::optional<S> midpoint;  // deepest fold position, in the arc's window
};

// Palindromic link lists have a unique middle visit; the midpoint is the
// deepest fold inside it. Monotone single-link walks are trivially symmetric
// and carry no fold.
template <class S>
std::optional<LinkSymmetry<S>> is_link_symmetric(const TentMap<S>& map,
                                                 const Chain<S>& chain,
                                                 const Arc<S>& a) {
    std::vector<int> seq = link_sequence(map, chain, a);
    int L = static_cast<int>(seq.size());
    if (L % 2 == 0) return std::nullopt;
    for (int i = 0, j = L - 1; i < j; ++i, --j)
        if (seq[i] != seq[j]) return std::nullopt;

    LinkSymmetry<S> out;
    out.midlink = seq[L / 2];
    int e = a.depth - chain.k;
    if (e < 1) return out;
    auto tps = turning_points(map, e, a.lo, a.hi);
    if (tps.empty()) return out;
    int best = 0;
    bool tie = false;
    for (int i = 1; i < static_cast<int>(tps.size()); ++i) {
        if (tps[i].level > tps[best].level) {
            best = i;
            tie = false;
        } else if (tps[i].level == tps[best].level) {
            tie = true;
        }
    }
    if (tie) return std::nullopt;
    CriticalOrbit<S> orb(map, tps[best].level + 1);
    S v = orb.value(tps[best].level);
    if (out.midlink != detail::cnt_lt(chain.boundaries, v) + 1 &&
        out.midlink != detail::cnt_le(chain.boundaries, v) + 1)
        return std::nullopt;
    out.midpoint = tps[best].pos;
    return out;
}

struct CompletenessReport {
    int k = 0;
    int depth = 0;
    int candidates = 0;  // folds examined as potential centers
    int flagged = 0;     // centers of a symmetric multi-link subarc through rho
    int checks = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// Enumerate every symmetric subarc (palindromic fold-level pattern, equal end
// values) of the depth-D arc that contains the fixed thread and is not inside
// a single link, and confirm each one is centered on a salient fold. The
// midpointCap parameter truncates the allowed salient set to levels <= cap so
// a test can prove the audit bites.
template <class S>
CompletenessReport verify_completeness(const TentMap<S>& map, int k, int D,
                                       int midpointCap = 0) {
    if (k < 0) throw OutOfDomain("verify_completeness needs k >= 0");
    if (D < k + 4) throw OutOfDomain("verify_completeness needs D >= k + 4");
    int n = D - k;
    Chain<S> ch = natural_chain(map, k);
    const auto& B = ch.boundaries;
    CriticalOrbit<S> orb(map, n + 2);
    S one = scalar_like(map.s, 1, 1);
    S lo = map.c2;
    S hi = one - map.c2;
    auto tps = turning_points(map, n, lo, hi);
    int M = static_cast<int>(tps.size());

    CompletenessReport rep;
    rep.k = k;
    rep.depth = D;

    // salient fold of level i sits n-i pullbacks below c; those landing in
    // the window are folds of the walk, indexed here by level
    std::vector<S> sal;
    sal.reserve(n);
    sal.push_back(map.c);  // level n
    for (int j = 1; j < n; ++j) sal.push_back(dec_pullback(map, sal.back()));
    // equality a certified lane cannot refute counts as a match
    auto consistent_eq = [](const S& a, const S& b) {
        try {
            return compare(a, b) == 0;
        } catch (const PrecisionExhausted&) {
            return true;
        }
    };
    std::vector<int> salIdx(n + 1, 0);  // level -> 1-based fold index
    for (int idx = 1; idx <= M; ++idx)
        for (int j = 0; j < n; ++j)
            if (consistent_eq(tps[idx - 1].pos, sal[j])) salIdx[n - j] = idx;

    // the fixed thread's position r lies strictly between two folds
    int h = 0;  // folds strictly left of r
    while (h < M && compare(tps[h].pos, map.r) < 0) ++h;

    // value just past the end of a run of mirrored folds: the next fold's
    // value, or the walk's value at the window end
    auto beyond = [&](int idx) -> S {
        if (idx >= 1 && idx <= M) return orb.value(tps[idx - 1].level);
        return orb.value(n + 2);  // T^n(c2) = T^n(1 - c2)
    };

    // two folds sit in one arc-component of a closed link iff the walk's
    // value hull between them crosses no cut strictly
    auto same_component = [&](int ja, int jb) {
        int a = std::min(ja, jb), b = std::max(ja, jb);
        S vlo = orb.value(tps[a - 1].level);
        S vhi = vlo;
        for (int u = a + 1; u <= b; ++u) {
            S v = orb.value(tps[u - 1].level);
            vlo = min_of(vlo, v);
            vhi = max_of(vhi, v);
        }
        return detail::cnt_lt(B, vhi) - detail::cnt_le(B, vlo) == 0;
    };

    for (int j = 1; j <= M; ++j) {
        ++rep.candidates;
        int level = tps[j - 1].level;
        int maxR = 0;
        while (j - maxR - 1 >= 1 && j + maxR + 1 <= M &&
               tps[j - maxR - 2].level == tps[j + maxR].level)
            ++maxR;

        bool flagged = false;
        int usedT = 0;
        for (int t = 0; t <= maxR && !flagged; ++t) {
            int Lf = j - t, Rf = j + t;  // outermost mirrored folds
            S cLam = orb.value(tps[Lf - 1].level);
            S offL = beyond(Lf - 1);
            S offR = beyond(Rf + 1);
            int sigma = compare(offL, cLam);  // both outward sweeps agree

            bool cover;
            if (Lf <= h && h + 1 <= Rf) {
                cover = true;  // r inside [p_L, p_R]
            } else if (h == Lf - 1 || h == Rf) {
                // r in an outer gap: both sweeps must reach strictly past its
                // value, which is r itself
                cover = sigma * compare(offL, map.r) > 0 &&
                        sigma * compare(offR, map.r) > 0;
            } else {
                cover = false;
            }
            if (!cover) continue;

            // reachable value hull: mirrored fold values plus the outward
            // sweep, open at the smaller of the two overshoot limits
            S hullLo = cLam, hullHi = cLam;
            for (int u = Lf; u <= Rf; ++u) {
                S v = orb.value(tps[u - 1].level);
                hullLo = min_of(hullLo, v);
                hullHi = max_of(hullHi, v);
            }
            S cap = sigma > 0 ? min_of(offL, offR) : max_of(offL, offR);
            if (sigma > 0)
                hullHi = max_of(hullHi, cap);
            else
                hullLo = min_of(hullLo, cap);
            bool multi = detail::cnt_lt(B, hullHi) - detail::cnt_le(B, hullLo) > 0;
            if (multi) {
                flagged = true;
                usedT = t;
            }
        }
        if (!flagged) continue;
        ++rep.flagged;

        // the center must be a salient fold, or at least indistinguishable
        // from one at this chain's resolution (same component of its link)
        int allowed = std::min(midpointCap > 0 ? midpointCap : n, n);
        bool good = false;
        for (int lvl = 1; lvl <= allowed && !good; ++lvl) {
            int sj = salIdx[lvl];
            if (sj == 0) continue;
            good = sj == j || same_component(sj, j);
        }
        ++rep.checks;
        if (!good)
            rep.failures.push_back("midpoint not salient: fold " +
                                   std::to_string(j) + " level " +
                                   std::to_string(level));

        // a symmetric arc must also read as a palindrome against the chain;
        // its ends are folds, which a certified lane cannot place strictly
        // inside the window, so an uncertifiable walk is skipped, not failed
        if (usedT > 0) {
            Arc<S> rep_arc{D, tps[j - usedT - 1].pos, tps[j + usedT - 1].pos,
                           map.r};
            try {
                ++rep.checks;
                if (!is_link_symmetric(map, ch, rep_arc))
                    rep.failures.push_back(
                        "flagged arc not link-symmetric: fold " +
                        std::to_string(j));
            } catch (const PrecisionExhausted&) {
            }
        }
    }
    return rep;
}

} // namespace tentlim
