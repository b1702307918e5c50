#pragma once
// eps-symmetry and eps-closeness of piecewise-linear iterate windows via an
// exact 1-D Frechet matcher, a seeded-grid verifier for the no-symmetry
// propositions, and recovery of the monotone branch behind eps-close windows.
#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "tentlim/errors.hpp"
#include "tentlim/folding.hpp"
#include "tentlim/tentmap.hpp"

namespace tentlim {

// Outcome of a matching query. margin = achieved sup-distance minus eps, so
// close iff margin < 0; the witness reparametrization is present iff close.
template <class S>
struct MatchResult {
    bool close = false;
    S margin;
    std::optional<PLFunction<S>> matching;
};

// Exact evaluation of a PL function at a point of its window.
template <class S>
S pl_eval(const PLFunction<S>& f, const S& x) {
    if (compare(x, f.x.front()) < 0 || compare(x, f.x.back()) > 0)
        throw OutOfDomain("pl_eval: point outside the window");
    size_t lo = 0, hi = f.x.size() - 1;
    while (lo + 1 < hi) {
        size_t mid = (lo + hi) / 2;
        if (compare(f.x[mid], x) <= 0) lo = mid; else hi = mid;
    }
    if (compare(f.x[lo], x) == 0) return f.y[lo];
    if (compare(f.x[hi], x) == 0) return f.y[hi];
    S t = (x - f.x[lo]) / (f.x[hi] - f.x[lo]);
    S dy = f.y[hi] - f.y[lo];
    S add = t * dy;
    return f.y[lo] + add;
}

// Restriction of f to [lo, hi] inside its window, end nodes interpolated.
template <class S>
PLFunction<S> pl_slice(const PLFunction<S>& f, const S& lo, const S& hi) {
    if (compare(lo, hi) >= 0) throw OutOfDomain("pl_slice: empty window");
    PLFunction<S> out;
    out.x.push_back(lo);
    out.y.push_back(pl_eval(f, lo));
    for (size_t k = 0; k < f.x.size(); ++k)
        if (compare(f.x[k], lo) > 0 && compare(f.x[k], hi) < 0) {
            out.x.push_back(f.x[k]);
            out.y.push_back(f.y[k]);
        }
    out.x.push_back(hi);
    out.y.push_back(pl_eval(f, hi));
    return out;
}

// Mirror of f across its window: the value at x becomes the value at a+b-x.
template <class S>
PLFunction<S> pl_reverse(const PLFunction<S>& f) {
    PLFunction<S> out;
    S ab = f.x.front() + f.x.back();
    for (size_t k = f.x.size(); k-- > 0;) {
        S nx = ab - f.x[k];
        out.x.push_back(nx);
        out.y.push_back(f.y[k]);
    }
    return out;
}

namespace detail {

// Free-space tables for the Frechet decision on value polylines F, G. Cell
// (i,j) pairs segment i of F with segment j of G; the slab |F - G| <= eps is
// convex per cell, so the reachable part of each cell edge is an interval,
// stored as fractions in [0,1] along the opposing segment. Lower bounds only
// propagate between parallel edges, so fractions compare directly.
template <class S>
struct FsEdge {
    bool some = false;
    S lo, hi;
};

// { t in [0,1] : |p - lerp(ga,gb,t)| <= eps }, clamped with exact 0/1 ends.
template <class S>
FsEdge<S> fs_free(const S& p, const S& ga, const S& gb, const S& eps) {
    FsEdge<S> e;
    S zero = scalar_like(p, 0), one = scalar_like(p, 1);
    int dir = compare(ga, gb);
    if (dir == 0) {
        S gap = abs_of(p - ga);
        if (compare(gap, eps) <= 0) { e.some = true; e.lo = zero; e.hi = one; }
        return e;
    }
    S d = gb - ga;
    S numLo = p - eps - ga;
    S numHi = p + eps - ga;
    S tlo = numLo / d;
    S thi = numHi / d;
    if (dir > 0) std::swap(tlo, thi);
    if (compare(tlo, zero) < 0) tlo = zero;
    if (compare(thi, one) > 0) thi = one;
    if (compare(tlo, thi) <= 0 && compare(thi, zero) >= 0 && compare(tlo, one) <= 0) {
        e.some = true;
        e.lo = tlo;
        e.hi = thi;
    }
    return e;
}

template <class S>
struct FsTables {
    size_t M = 0, N = 0;        // segment counts
    std::vector<FsEdge<S>> VL;  // vertical edges, (M+1) x N
    std::vector<FsEdge<S>> HB;  // horizontal edges, M x (N+1)
    size_t vdx(size_t i, size_t j) const { return i * N + j; }
    size_t hdx(size_t i, size_t j) const { return i * (N + 1) + j; }
};

// Reachable free space for the closed decision sup <= eps; needs M, N >= 1.
template <class S>
FsTables<S> fs_tables(const std::vector<S>& F, const std::vector<S>& G, const S& eps) {
    FsTables<S> tb;
    tb.M = F.size() - 1;
    tb.N = G.size() - 1;
    tb.VL.assign((tb.M + 1) * tb.N, {});
    tb.HB.assign(tb.M * (tb.N + 1), {});
    S zero = scalar_like(eps, 0), one = scalar_like(eps, 1);
    for (size_t j = 0; j < tb.N; ++j) {  // left border, contiguous from (0,0)
        FsEdge<S> fr = fs_free(F[0], G[j], G[j + 1], eps);
        if (!(fr.some && compare(fr.lo, zero) == 0)) break;
        tb.VL[tb.vdx(0, j)] = fr;
        if (compare(fr.hi, one) != 0) break;
    }
    for (size_t i = 0; i < tb.M; ++i) {  // bottom border
        FsEdge<S> fr = fs_free(G[0], F[i], F[i + 1], eps);
        if (!(fr.some && compare(fr.lo, zero) == 0)) break;
        tb.HB[tb.hdx(i, 0)] = fr;
        if (compare(fr.hi, one) != 0) break;
    }
    for (size_t i = 0; i < tb.M; ++i)
        for (size_t j = 0; j < tb.N; ++j) {
            const FsEdge<S>& L = tb.VL[tb.vdx(i, j)];
            const FsEdge<S>& B = tb.HB[tb.hdx(i, j)];
            if (!L.some && !B.some) continue;
            FsEdge<S> fr = fs_free(F[i + 1], G[j], G[j + 1], eps);
            if (fr.some) {
                if (!B.some && compare(L.lo, fr.lo) > 0) fr.lo = L.lo;
                if (compare(fr.lo, fr.hi) <= 0) tb.VL[tb.vdx(i + 1, j)] = fr;
            }
            FsEdge<S> ft = fs_free(G[j + 1], F[i], F[i + 1], eps);
            if (ft.some) {
                if (!L.some && compare(B.lo, ft.lo) > 0) ft.lo = B.lo;
                if (compare(ft.lo, ft.hi) <= 0) tb.HB[tb.hdx(i, j + 1)] = ft;
            }
        }
    return tb;
}

// Closed decision: some monotone matching of F onto G keeps |F - G| <= eps.
template <class S>
bool fs_decide(const std::vector<S>& F, const std::vector<S>& G, const S& eps) {
    size_t M = F.size() - 1, N = G.size() - 1;
    if (M == 0 || N == 0) {
        for (const S& a : F)
            for (const S& b : G) {
                S gap = abs_of(a - b);
                if (compare(gap, eps) > 0) return false;
            }
        return true;
    }
    FsTables<S> tb = fs_tables(F, G, eps);
    S one = scalar_like(eps, 1);
    const FsEdge<S>& R = tb.VL[tb.vdx(M, N - 1)];
    if (R.some && compare(R.hi, one) == 0) return true;
    const FsEdge<S>& T = tb.HB[tb.hdx(M - 1, N)];
    return T.some && compare(T.hi, one) == 0;
}

// Exact Frechet distance between the value polylines. In one dimension the
// optimum is attained among vertex-vertex gaps and half-gaps within a single
// curve (the openings where a monotone stretch must absorb a reversal), so a
// sorted candidate scan with the closed decision recovers it exactly.
template <class S>
S fs_value(const std::vector<S>& F, const std::vector<S>& G) {
    std::vector<S> cand;
    cand.push_back(scalar_like(F.front(), 0));
    S half = scalar_like(F.front(), 1, 2);
    for (const S& a : F)
        for (const S& b : G) cand.push_back(abs_of(a - b));
    for (size_t i = 0; i < F.size(); ++i)
        for (size_t k = i + 1; k < F.size(); ++k) {
            S g = abs_of(F[i] - F[k]);
            cand.push_back(g * half);
        }
    for (size_t j = 0; j < G.size(); ++j)
        for (size_t l = j + 1; l < G.size(); ++l) {
            S g = abs_of(G[j] - G[l]);
            cand.push_back(g * half);
        }
    std::sort(cand.begin(), cand.end(),
              [](const S& a, const S& b) { return compare(a, b) < 0; });
    cand.erase(std::unique(cand.begin(), cand.end(),
                           [](const S& a, const S& b) { return compare(a, b) == 0; }),
               cand.end());
    size_t lo = 0, hi = cand.size() - 1;
    while (lo < hi) {
        size_t mid = (lo + hi) / 2;
        if (fs_decide(F, G, cand[mid])) hi = mid; else lo = mid + 1;
    }
    return cand[lo];
}

// One corner of a matching path in (segment index, fraction) coordinates.
template <class S>
struct PathPt {
    size_t fi, gi;
    S ft, gt;
};

// Monotone matching path achieving sup <= eps, from (0,0) to (M,N); the
// caller guarantees fs_decide(F, G, eps). Backtracks greedily through the
// reach tables, staying at the latest admissible position.
template <class S>
std::vector<PathPt<S>> fs_path(const std::vector<S>& F, const std::vector<S>& G, const S& eps) {
    size_t M = F.size() - 1, N = G.size() - 1;
    S zero = scalar_like(eps, 0), one = scalar_like(eps, 1);
    std::vector<PathPt<S>> pts;
    if (M == 0 || N == 0) {
        pts.push_back({0, 0, zero, zero});
        pts.push_back({M, N, zero, zero});
        return pts;
    }
    FsTables<S> tb = fs_tables(F, G, eps);
    pts.push_back({M, N, zero, zero});
    bool vert;
    size_t ci, cj;
    S ct = one;
    const FsEdge<S>& R = tb.VL[tb.vdx(M, N - 1)];
    if (R.some && compare(R.hi, one) == 0) {
        vert = true; ci = M; cj = N - 1;
    } else {
        vert = false; ci = M - 1; cj = N;
    }
    while (true) {
        if (vert) {
            pts.push_back({ci, cj, zero, ct});
            if (ci == 0) break;
            const FsEdge<S>& Bm = tb.HB[tb.hdx(ci - 1, cj)];
            if (Bm.some) {
                vert = false; --ci; ct = Bm.hi;
            } else {
                const FsEdge<S>& Lm = tb.VL[tb.vdx(ci - 1, cj)];
                S nt = Lm.hi;
                if (compare(nt, ct) > 0) nt = ct;
                --ci; ct = nt;
            }
        } else {
            pts.push_back({ci, cj, ct, zero});
            if (cj == 0) break;
            const FsEdge<S>& Lm = tb.VL[tb.vdx(ci, cj - 1)];
            if (Lm.some) {
                vert = true; --cj; ct = Lm.hi;
            } else {
                const FsEdge<S>& Bm = tb.HB[tb.hdx(ci, cj - 1)];
                S nt = Bm.hi;
                if (compare(nt, ct) > 0) nt = ct;
                --cj; ct = nt;
            }
        }
    }
    if (vert) {
        for (size_t v = cj + 1; v-- > 0;) pts.push_back({0, v, zero, zero});
    } else {
        for (size_t u = ci + 1; u-- > 0;) pts.push_back({u, 0, zero, zero});
    }
    std::reverse(pts.begin(), pts.end());
    return pts;
}

// Path corners as a PL reparametrization: x walks f's window, y the matched
// parameter in g's window. Corners sit on cell edges, so between consecutive
// corners both curves are affine and the node bound certifies the whole path.
template <class S>
PLFunction<S> path_to_witness(const std::vector<PathPt<S>>& pts,
                              const std::vector<S>& xF, const std::vector<S>& xG) {
    PLFunction<S> w;
    for (const auto& p : pts) {
        S u = xF[p.fi];
        if (p.fi + 1 < xF.size()) {
            S du = xF[p.fi + 1] - xF[p.fi];
            S add = p.ft * du;
            u = u + add;
        }
        S v = xG[p.gi];
        if (p.gi + 1 < xG.size()) {
            S dv = xG[p.gi + 1] - xG[p.gi];
            S add = p.gt * dv;
            v = v + add;
        }
        if (!w.x.empty() && identical(w.x.back(), u) && identical(w.y.back(), v)) continue;
        w.x.push_back(u);
        w.y.push_back(v);
    }
    return w;
}

// Split a window function at an interior center into (left values, mirrored
// right values), ready for the matcher.
template <class S>
std::pair<std::vector<S>, std::vector<S>> split_for_center(const PLFunction<S>& f, const S& m) {
    PLFunction<S> L = pl_slice(f, f.x.front(), m);
    PLFunction<S> R = pl_slice(f, m, f.x.back());
    std::vector<S> rrev(R.y.rbegin(), R.y.rend());
    return {std::move(L.y), std::move(rrev)};
}

}  // namespace detail

// Exact 1-D Frechet distance between the graphs of f and g, orientation kept.
template <class S>
S frechet_1d(const PLFunction<S>& f, const PLFunction<S>& g) {
    return detail::fs_value(f.y, g.y);
}

// eps-symmetry of f: a monotone remapping of the window onto its mirror with
// values staying strictly within eps. Default center is free (the whole graph
// against its mirror); with a center the left half is matched against the
// mirrored right half, so the witness bijection fixes m and swaps the ends.
template <class S>
MatchResult<S> is_eps_symmetric(const PLFunction<S>& f, const S& eps,
                                const std::optional<S>& center = std::nullopt) {
    const S& a = f.x.front();
    const S& b = f.x.back();
    MatchResult<S> res;
    if (center) {
        if (!(compare(*center, a) > 0 && compare(*center, b) < 0))
            throw CenterOutside("symmetry center must lie strictly inside the window");
        PLFunction<S> L = pl_slice(f, a, *center);
        PLFunction<S> Rrev = pl_reverse(pl_slice(f, *center, b));
        S v = detail::fs_value(L.y, Rrev.y);
        res.margin = v - eps;
        res.close = compare(v, eps) < 0;
        if (res.close) {
            auto pts = detail::fs_path(L.y, Rrev.y, v);
            PLFunction<S> w = detail::path_to_witness(pts, L.x, Rrev.x);
            S mb = *center + b;
            for (S& t : w.y) t = mb - t;
            res.matching = std::move(w);
        }
        return res;
    }
    PLFunction<S> rev = pl_reverse(f);
    S v = detail::fs_value(f.y, rev.y);
    res.margin = v - eps;
    res.close = compare(v, eps) < 0;
    if (res.close) {
        auto pts = detail::fs_path(f.y, rev.y, v);
        PLFunction<S> w = detail::path_to_witness(pts, f.x, rev.x);
        S ab = a + b;
        for (S& t : w.y) t = ab - t;
        res.matching = std::move(w);
    }
    return res;
}

// eps-closeness of two PL windows: the better of the two orientations of g.
// The witness maps f's parameter to the matched parameter of g (decreasing
// when the mirrored orientation wins). Symmetric in its arguments.
template <class S>
MatchResult<S> is_eps_close(const PLFunction<S>& f, const PLFunction<S>& g, const S& eps) {
    S v1 = detail::fs_value(f.y, g.y);
    PLFunction<S> grev = pl_reverse(g);
    S v2 = detail::fs_value(f.y, grev.y);
    bool fwd = compare(v1, v2) <= 0;
    const S& v = fwd ? v1 : v2;
    MatchResult<S> res;
    res.margin = v - eps;
    res.close = compare(v, eps) < 0;
    if (!res.close) return res;
    if (fwd) {
        auto pts = detail::fs_path(f.y, g.y, v1);
        res.matching = detail::path_to_witness(pts, f.x, g.x);
    } else {
        auto pts = detail::fs_path(f.y, grev.y, v2);
        PLFunction<S> w = detail::path_to_witness(pts, f.x, grev.x);
        S ab = g.x.front() + g.x.back();
        for (S& t : w.y) t = ab - t;
        res.matching = std::move(w);
    }
    return res;
}

// Certificate that no forbidden eps-symmetry shows up on a declared config
// grid: windows with all of a, b, m at distance > delta from c (class A),
// windows around c tested at their geometric midpoint, exempting centers
// within eps * s^-n of c (class B), and delta-wide neighborhoods of orbit
// points centered exactly there (class C).
template <class S>
struct NoSymmetryReport {
    S delta;
    int maxN = 0;
    int grid = 0;
    int configsA = 0, configsB = 0, configsC = 0;
    int rung = -1;  // certified eps = delta * 2^-rung
    int exemptions = 0;
    std::vector<std::string> ladder;      // binding config per failed rung
    std::vector<std::string> violations;  // empty at the certified eps
};

// Largest eps on the halving ladder below delta such that no config in the
// grid is eps-symmetric in the forbidden sense for any n <= maxN. The claim
// is only about the declared grid: configs are drawn deterministically from
// the seeded lattice, so reruns certify the identical statement.
template <class S>
std::pair<S, NoSymmetryReport<S>> verify_no_symmetry(const TentMap<S>& map, const S& delta,
                                                     int maxN, int grid) {
    if (maxN < 0) throw OutOfDomain("verify_no_symmetry: maxN must be >= 0");
    if (grid < 8) throw OutOfDomain("verify_no_symmetry: grid too small to split across classes");
    if (sign(delta) <= 0) throw OutOfDomain("verify_no_symmetry: delta must be positive");

    NoSymmetryReport<S> rep;
    rep.delta = delta;
    rep.maxN = maxN;
    rep.grid = grid;

    const S zero = scalar_like(delta, 0), one = scalar_like(delta, 1);
    const S half = scalar_like(delta, 1, 2);

    // interior lattice x_t = c2 + t * (c1 - c2) / (grid + 1), t = 1..grid
    std::vector<S> lat(static_cast<size_t>(grid) + 1, zero);
    S step = (map.c1 - map.c2) / scalar_like(delta, grid + 1);
    for (int t = 1; t <= grid; ++t) {
        S off = step * scalar_like(delta, t);
        lat[static_cast<size_t>(t)] = map.c2 + off;
    }

    struct Cfg {
        char cls;
        S a, b, m;
    };
    std::vector<Cfg> cfgs;
    std::mt19937 rng(20260814u);  // fixed seed: the grid is part of the claim
    auto draw = [&rng](int n) { return static_cast<int>(rng() % static_cast<unsigned>(n)); };

    const int nA = grid - 2 * (grid / 3), nB = grid / 3, nC = grid / 3;
    long budget = 400L * grid;

    auto clear_of_c = [&](const S& x) {
        S g = abs_of(x - map.c);
        return compare(g, delta) > 0;
    };
    int got = 0;
    while (got < nA && budget-- > 0) {
        int t1 = 1 + draw(grid), t2 = 1 + draw(grid);
        if (t1 > t2) std::swap(t1, t2);
        if (t2 - t1 < 2) continue;
        int tm = t1 + 1 + draw(t2 - t1 - 1);
        if (!clear_of_c(lat[t1]) || !clear_of_c(lat[t2]) || !clear_of_c(lat[tm])) continue;
        cfgs.push_back({'A', lat[t1], lat[t2], lat[tm]});
        ++got;
    }
    rep.configsA = got;

    got = 0;
    {
        // deterministic exemplar: the symmetric window around c, center c
        S wl = map.c - map.c2, wr = map.c1 - map.c;
        S wmin = compare(wl, wr) <= 0 ? wl : wr;
        S w = wmin * half;
        if (compare(w, delta) >= 0) {
            S a = map.c - w, b = map.c + w;
            cfgs.push_back({'B', a, b, map.c});
            ++got;
        }
    }
    while (got < nB && budget-- > 0) {
        int t1 = 1 + draw(grid), t2 = 1 + draw(grid);
        if (t1 > t2) std::swap(t1, t2);
        if (t1 == t2) continue;
        const S &a = lat[t1], &b = lat[t2];
        if (!(compare(a, map.c) < 0 && compare(b, map.c) > 0)) continue;
        S ga = map.c - a, gb = b - map.c;
        if (compare(ga, delta) < 0 || compare(gb, delta) < 0) continue;
        S m = (a + b) * half;
        cfgs.push_back({'B', a, b, m});
        ++got;
    }
    rep.configsB = got;

    const int imax = std::max(maxN, 3);
    CriticalOrbit<S> orb(map, imax + 2);
    got = 0;
    while (got < nC && budget-- > 0) {
        int i = 1 + draw(imax);
        S wl = delta, wr = delta;
        int el = draw(11), er = draw(11);
        for (int e = 0; e < el; ++e) wl = wl + wl;
        for (int e = 0; e < er; ++e) wr = wr + wr;
        S ci = orb.value(i);
        S a = ci - wl, b = ci + wr;
        if (compare(a, zero) <= 0 || compare(b, one) >= 0) continue;
        cfgs.push_back({'C', a, b, ci});
        ++got;
    }
    rep.configsC = got;

    std::vector<S> spow(static_cast<size_t>(maxN) + 1, one);
    for (int n = 1; n <= maxN; ++n) spow[static_cast<size_t>(n)] = spow[static_cast<size_t>(n) - 1] * map.s;

    auto describe = [&](const Cfg& cf, int n, const S& v) {
        return std::string("class ") + cf.cls + " n=" + std::to_string(n) + " H=[" +
               scalar_str(cf.a) + ", " + scalar_str(cf.b) + "] m=" + scalar_str(cf.m) +
               " sym-gap " + scalar_str(v);
    };

    auto sweep = [&](const S& eps, std::string& binding, int& exempt) -> bool {
        exempt = 0;
        for (const Cfg& cf : cfgs) {
            S cm = abs_of(map.c - cf.m);
            for (int n = 0; n <= maxN; ++n) {
                PLFunction<S> f = pl_restrict(map, n, cf.a, cf.b);
                auto [L, R] = detail::split_for_center(f, cf.m);
                if (!detail::fs_decide(L, R, eps)) continue;  // sup surely > eps
                S v = detail::fs_value(L, R);
                if (compare(v, eps) >= 0) continue;  // grazing contact, not strict
                if (cf.cls == 'B') {
                    S amp = spow[static_cast<size_t>(n)] * cm;
                    if (compare(amp, eps) <= 0) {  // center pinned to c: allowed branch
                        ++exempt;
                        continue;
                    }
                }
                binding = describe(cf, n, v);
                return false;
            }
        }
        return true;
    };

    S eps = delta;
    for (int rung = 0; rung < 64; ++rung) {
        std::string binding;
        int exempt = 0;
        if (sweep(eps, binding, exempt)) {
            rep.rung = rung;
            rep.exemptions = exempt;
            return {eps, rep};
        }
        rep.ladder.push_back("eps=" + scalar_str(eps) + " binding " + binding);
        eps = eps * half;
    }
    throw NoEpsilonFound("no epsilon certified down the whole ladder; last binding: " +
                         rep.ladder.back());
}

// A full monotone branch of T^k over a window J' = [lo, hi]: T^k maps J'
// homeomorphically onto the core.
template <class S>
struct MonotoneBranch {
    int k = 0;
    S lo, hi;
};

// For eps-close windows (T^i on the core, T^j on [a,b]), recover k = j - i
// and the branch window J' with both ends within eps of [a,b]. Laps of T^k on
// the core are bounded by folds (value = the orbit point of the fold level)
// and by the core endpoints (value = the orbit point two or one steps on), so
// a lap is onto exactly when its end values are {c2, c1}.
template <class S>
MonotoneBranch<S> verify_lemma12(const TentMap<S>& map, const S& eps, int i, int j,
                                 const S& abLo, const S& abHi) {
    if (i < 0 || j < i) throw OutOfDomain("verify_lemma12: need 0 <= i <= j");
    if (!(compare(abLo, abHi) < 0 && map.core_contains(abLo) && map.core_contains(abHi)))
        throw OutOfDomain("verify_lemma12: [a,b] must be a window inside the core");
    PLFunction<S> onCore = pl_restrict(map, i, map.c2, map.c1);
    PLFunction<S> onAb = pl_restrict(map, j, abLo, abHi);
    MatchResult<S> pre = is_eps_close(onCore, onAb, eps);
    if (!pre.close)
        throw HypothesisNotMet("verify_lemma12: windows are not eps-close (margin " +
                               scalar_str(pre.margin) + ")");
    int k = j - i;
    CriticalOrbit<S> orb(map, k + 3);
    std::vector<S> pos, val;
    pos.push_back(map.c2);
    val.push_back(orb.value(k + 2));
    if (k >= 1)
        for (const auto& t : turning_points(map, k, map.c2, map.c1))
            if (compare(t.pos, map.c2) > 0 && compare(t.pos, map.c1) < 0) {
                pos.push_back(t.pos);
                val.push_back(orb.value(t.level));
            }
    pos.push_back(map.c1);
    val.push_back(orb.value(k + 1));
    for (size_t t = 0; t + 1 < pos.size(); ++t) {
        bool rising = compare(val[t], map.c2) == 0 && compare(val[t + 1], map.c1) == 0;
        bool falling = compare(val[t], map.c1) == 0 && compare(val[t + 1], map.c2) == 0;
        if (!rising && !falling) continue;
        S dl = abs_of(pos[t] - abLo), dr = abs_of(pos[t + 1] - abHi);
        if (compare(dl, eps) < 0 && compare(dr, eps) < 0) return {k, pos[t], pos[t + 1]};
    }
    throw NotFound("verify_lemma12: no full monotone branch of the shift within eps of the window");
}

}  // namespace tentlim
