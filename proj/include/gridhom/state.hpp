#pragma once
#include <algorithm>
#include <vector>

#include "grid.hpp"
#include "monomial.hpp"

namespace gridhom {

using State = std::vector<int>; // column -> row of the state's lattice point

inline std::vector<State> enumerate_states(const GridDiagram& g) {
    State p(g.n);
    for (int i = 0; i < g.n; ++i) p[i] = i;
    std::vector<State> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// Pair count I(A,B) = #{(a,b) : a < b in both coordinates} for planar point
// sets.  Doubled coordinates keep everything integral: state points at
// (2c, 2r), markings at square centers (2c+1, 2r+1).
namespace detail {
inline long pair_count(const std::vector<std::pair<int, int>>& a,
                       const std::vector<std::pair<int, int>>& b) {
    long cnt = 0;
    for (const auto& p : a)
        for (const auto& q : b)
            if (p.first < q.first && p.second < q.second) ++cnt;
    return cnt;
}
inline std::vector<std::pair<int, int>> state_points(const State& s) {
    std::vector<std::pair<int, int>> v;
    v.reserve(s.size());
    for (size_t c = 0; c < s.size(); ++c) v.push_back({2 * (int)c, 2 * s[c]});
    return v;
}
inline std::vector<std::pair<int, int>> marking_points(const std::vector<int>& m) {
    std::vector<std::pair<int, int>> v;
    v.reserve(m.size());
    for (size_t c = 0; c < m.size(); ++c) v.push_back({2 * (int)c + 1, 2 * m[c] + 1});
    return v;
}
// M computed against an arbitrary marking set
inline long maslov_against(const State& s, const std::vector<int>& marks) {
    auto sp = state_points(s);
    auto mp = marking_points(marks);
    return pair_count(sp, sp) - pair_count(sp, mp) - pair_count(mp, sp) + pair_count(mp, mp) + 1;
}
} // namespace detail

inline int maslov(const GridDiagram& g, const State& s) {
    if ((int)s.size() != g.n) throw SizeMismatch("state size != grid size");
    return (int)detail::maslov_against(s, g.o);
}

inline int alexander(const GridDiagram& g, const State& s) {
    if ((int)s.size() != g.n) throw SizeMismatch("state size != grid size");
    long doubled = detail::maslov_against(s, g.o) - detail::maslov_against(s, g.x) - (g.n - 1);
    if (doubled % 2 != 0)
        throw HalfIntegerResult("Alexander grading is not an integer (not a knot diagram?)");
    // C++ division truncates toward zero; doubled can be negative and odd
    // values are rejected above, so plain /2 is exact.
    return (int)(doubled / 2);
}

// Toroidal rectangle: columns c0..c0+w-1, rows r0..r0+h-1 (mod n).
struct Rect {
    int c0 = 0, w = 0, r0 = 0, h = 0;
    bool contains_square(int n, int c, int r) const {
        return ((c - c0) % n + n) % n < w && ((r - r0) % n + n) % n < h;
    }
};

struct RectContents {
    std::vector<int> o_cols; // columns whose O lies in the rectangle
    std::vector<int> x_cols;
};

inline RectContents rectangle_contents(const GridDiagram& g, const Rect& r) {
    RectContents out;
    for (int c = 0; c < g.n; ++c) {
        if (r.contains_square(g.n, c, g.o[c])) out.o_cols.push_back(c);
        if (r.contains_square(g.n, c, g.x[c])) out.x_cols.push_back(c);
    }
    return out;
}

struct RectHit {
    State y;
    Rect r;
};

// All empty rectangles from x (interior avoids every point of x; the four
// corners are points of x and of the swapped state y).  Two candidate
// rectangles per unordered column pair; y differs from x exactly there.
inline std::vector<RectHit> empty_rectangles(const GridDiagram& g, const State& s) {
    int n = g.n;
    std::vector<RectHit> out;
    auto consider = [&](int i, int j) {
        // rectangle with SW corner at (i, s[i]), NE at (j, s[j]) modulo wrap
        Rect r;
        r.c0 = i;
        r.w = ((j - i) % n + n) % n;
        r.r0 = s[i];
        r.h = ((s[j] - s[i]) % n + n) % n;
        for (int t = 1; t < r.w; ++t) {
            int row = s[(r.c0 + t) % n];
            if (((row - r.r0) % n + n) % n < r.h) return; // interior state point
        }
        State y = s;
        std::swap(y[i], y[j]);
        out.push_back({std::move(y), r});
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) consider(i, j);
    return out;
}

// One term of the minus differential: X-avoiding empty rectangles, with a
// U_c factor per O in the rectangle.
struct DiffTerm {
    State y;
    Monomial mono;
};

inline std::vector<DiffTerm> differential_terms(const GridDiagram& g, const State& s) {
    std::vector<DiffTerm> out;
    for (auto& hit : empty_rectangles(g, s)) {
        RectContents rc = rectangle_contents(g, hit.r);
        if (!rc.x_cols.empty()) continue;
        Monomial m((size_t)g.n);
        for (int c : rc.o_cols) m.e[c] += 1;
        out.push_back({hit.y, std::move(m)});
    }
    return out;
}

} // namespace gridhom
