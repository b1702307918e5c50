#pragma once
// Tent maps T_s(x) = min(sx, s(1-x)) on [0,1] with slope s in (sqrt2, 2],
// their critical orbits c_i = T^i(1/2), and the first return index
// kappa = min{ i >= 3 : c_i <= 1/2 }.
#include <optional>
#include <utility>
#include <vector>

#include "tentlim/errors.hpp"
#include "tentlim/scalar.hpp"

namespace tentlim {

template <class S>
struct TentMap {
    S s;        // slope
    S c;        // critical point 1/2
    S c1, c2;   // first two critical values; the core is [c2, c1]
    S r;        // positive fixed point s/(s+1)

    explicit TentMap(const S& slope)
        : s(slope),
          c(scalar_like(slope, 1, 2)),
          c1(slope * scalar_like(slope, 1, 2)),
          c2(slope - slope * slope * scalar_like(slope, 1, 2)),
          r(slope / (slope + scalar_like(slope, 1))) {
        if (sign(s) <= 0) throw OutOfDomain("slope must be positive");
        if (compare(s, scalar_like(s, 2)) > 0)
            throw OutOfDomain("slope exceeds 2");
        // s <= sqrt2 certified as s^2 <= 2: T_s is then renormalizable and the
        // single-map machinery here does not apply.
        if (compare(s * s, scalar_like(s, 2)) <= 0)
            throw Renormalizable("slope at or below sqrt2");
    }

    S eval(const S& x) const {
        return min_of(s * x, s * (scalar_like(s, 1) - x));
    }

    S iterate(S x, int n) const {
        for (int i = 0; i < n; ++i) x = eval(x);
        return x;
    }

    bool core_contains(const S& x) const {
        return compare(x, c2) >= 0 && compare(x, c1) <= 0;
    }
};

template <class S>
class CriticalOrbit {
  public:
    explicit CriticalOrbit(const TentMap<S>& map, int minLen = 8) : map_(map) {
        pts_.push_back(map_.c); // c_0
        extend(minLen);
    }

    void extend(int len) {
        while (static_cast<int>(pts_.size()) <= len)
            pts_.push_back(map_.eval(pts_.back()));
    }

    // c_i; i = 0 is the critical point itself.
    const S& value(int i) {
        if (i < 0) throw OutOfDomain("orbit index must be nonnegative");
        extend(i);
        return pts_[static_cast<size_t>(i)];
    }

    // true when c_i lies strictly right of c.
    bool side(int i) { return compare(value(i), map_.c) > 0; }

    int kappa() {
        if (kappa_ == 0) {
            for (int i = 3;; ++i) {
                if (i > kKappaCap)
                    throw Error("kappa not found below iterate cap");
                if (compare(value(i), map_.c) <= 0) {
                    kappa_ = i;
                    break;
                }
            }
        }
        return kappa_;
    }

    // Minimal (index, period) with c_{index+period} = c_index among indices
    // 1..N, smallest index first, then smallest period.
    std::optional<std::pair<int, int>> preperiodic_at(int N) {
        for (int i = 1; i < N; ++i)
            for (int p = 1; i + p <= N; ++p)
                if (compare(value(i), value(i + p)) == 0) return {{i, p}};
        return std::nullopt;
    }

    // min |c - c_i| over 1 <= i <= N; non-increasing in N.
    S recurrence_gap(int N) {
        if (N < 1) throw OutOfDomain("need at least one orbit point");
        S best = abs_of(map_.c - value(1));
        for (int i = 2; i <= N; ++i) {
            S g = abs_of(map_.c - value(i));
            if (compare(g, best) < 0) best = g;
        }
        return best;
    }

    const TentMap<S>& map() const { return map_; }

  private:
    static constexpr int kKappaCap = 100000;
    TentMap<S> map_;
    std::vector<S> pts_;
    int kappa_ = 0;
};

} // namespace tentlim
