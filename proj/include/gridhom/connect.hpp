#pragma once
#include <map>
#include <optional>

#include "complex.hpp"
#include "homology.hpp"
#include "morse.hpp"

namespace gridhom {

// ---------------------------------------------------------------------------
// Stabilized summands: the I/N splitting, the destabilization state map e,
// and the rectangle / hexagon counts H_O1, H_Hex feeding both the
// destabilization chain map and the connected-sum quasi-isomorphism.
// ---------------------------------------------------------------------------

// 0/1-multiplicity domains from x to y on the torus: solve the mixed second
// difference equation A(m) = chi_x - chi_y.  The general solution is a
// particular cumulative sum plus a row function and a column function; both
// are pinned to two candidate values per index by the 0/1 requirement.
inline std::vector<std::vector<std::vector<int>>> domains_01(int n, const State& x,
                                                             const State& y) {
    std::vector<std::vector<int>> T(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) {
        T[i][x[i]] += 1;
        T[i][y[i]] -= 1;
    }
    std::vector<std::vector<int>> m0(n, std::vector<int>(n, 0));
    for (int c = 0; c < n; ++c)
        for (int r = 0; r < n; ++r)
            m0[c][r] = T[c][r] + (c ? m0[c - 1][r] : 0) + (r ? m0[c][r - 1] : 0) -
                       ((c && r) ? m0[c - 1][r - 1] : 0);
    std::vector<std::vector<std::vector<int>>> out;
    // gauge: row shift a_0 = 0; enumerate the two candidates for every other
    // row/column shift
    for (int tmask = 0; tmask < (1 << n); ++tmask) {
        std::vector<int> b(n);
        for (int r = 0; r < n; ++r) b[r] = -m0[0][r] + ((tmask >> r) & 1);
        for (int smask = 0; smask < (1 << (n - 1)); ++smask) {
            std::vector<int> a(n, 0);
            bool ok = true;
            for (int c = 1; c < n && ok; ++c) {
                a[c] = -m0[c][0] - b[0] + ((smask >> (c - 1)) & 1);
            }
            for (int c = 0; c < n && ok; ++c)
                for (int r = 0; r < n; ++r) {
                    int v = m0[c][r] + a[c] + b[r];
                    if (v != 0 && v != 1) {
                        ok = false;
                        break;
                    }
                }
            if (!ok) continue;
            std::vector<std::vector<int>> m(n, std::vector<int>(n));
            for (int c = 0; c < n; ++c)
                for (int r = 0; r < n; ++r) m[c][r] = m0[c][r] + a[c] + b[r];
            if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(std::move(m));
        }
    }
    return out;
}

// corner profile of a 0/1 domain at a lattice point: number of the four
// surrounding squares covered
inline int corner_fill(const std::vector<std::vector<int>>& m, int n, int i, int j) {
    auto sq = [&](int c, int r) { return m[(c % n + n) % n][(r % n + n) % n]; };
    return sq(i, j) + sq(i - 1, j) + sq(i - 1, j - 1) + sq(i, j - 1);
}

struct Hexagon {
    State y;
    std::vector<std::vector<int>> dom;
};

// Empty hexagons from x to y with the 270-degree corner at the lattice point
// (0,0): 0/1 domain, six corners (five convex, one reflex at the origin), no
// state point in the interior.
inline std::vector<Hexagon> hexagons(const GridDiagram& gp, const State& x, const State& y) {
    int n = gp.n;
    std::vector<Hexagon> out;
    int ndiff = 0;
    for (int i = 0; i < n; ++i)
        if (x[i] != y[i]) ++ndiff;
    if (ndiff != 3) return out;
    for (auto& m : domains_01(n, x, y)) {
        int corners90 = 0, corners270 = 0;
        bool reflex_at_origin = false, bad = false;
        for (int i = 0; i < n && !bad; ++i)
            for (int j = 0; j < n; ++j) {
                int f = corner_fill(m, n, i, j);
                if (f == 1) ++corners90;
                if (f == 3) {
                    ++corners270;
                    if (i == 0 && j == 0) reflex_at_origin = true;
                }
                // interior points of the domain may not meet either state
                if (f == 4 && (x[i] == j || y[i] == j)) bad = true;
            }
        if (bad || corners90 != 5 || corners270 != 1 || !reflex_at_origin) continue;
        out.push_back({y, m});
    }
    return out;
}

struct StabilizedSummand {
    GridDiagram gp;     // prepared (stabilized) diagram, size M
    GridDiagram base;   // destabilized diagram, size M-1
    bool left_type;     // true: stabilization column is the last one (O1 right)

    static StabilizedSummand make_left(const GridDiagram& gp) {
        return {gp, destabilize_left(gp), true};
    }
    static StabilizedSummand make_right(const GridDiagram& gp) {
        return {gp, destabilize_right(gp), false};
    }

    int o1_col() const { return left_type ? gp.n - 1 : 0; }
    int x1_col() const { return 0; } // corner X at square (0,0) in both types
    int x2_col() const { return gp.n - 1; }
    // the O playing the second cone variable: {O1, O2} are the two O's in the
    // row and column of the corner X1.  Left type: O1 shares X1's row, so O2
    // is the O of column 0.  Right type: O1 shares X1's column, so O2 is the
    // O in row 0 (its column depends on the base diagram).
    int o2_col() const {
        if (left_type) return 0;
        for (int c = 1; c < gp.n; ++c)
            if (gp.o[c] == 0) return c;
        throw PreconditionViolated("no O in the corner X's row");
    }
    // ... and its name in the base diagram's ring
    int o2_base_var() const { return left_type ? 0 : o2_col() - 1; }

    bool in_I(const State& s) const { return s[0] == 0; }

    State e_state(const State& s) const {
        int M = gp.n;
        if (!in_I(s)) throw PreconditionViolated("e is defined on the I part only");
        State out(M - 1);
        if (left_type) {
            out[0] = s[M - 1] - 1;
            for (int j = 1; j < M - 1; ++j) out[j] = s[j] - 1;
        } else {
            for (int i = 1; i < M; ++i) out[i - 1] = (s[i] == M - 1) ? 0 : s[i];
        }
        return out;
    }

    VarSubst e_subst() const {
        // base ring plus one adjoined variable V at index M-1
        int M = gp.n;
        VarSubst s;
        s.target_nvars = (size_t)M;
        s.target_of.resize((size_t)M);
        if (left_type) {
            for (int i = 0; i < M; ++i) s.target_of[(size_t)i] = (uint32_t)i;
        } else {
            s.target_of[0] = (uint32_t)(M - 1); // O1 variable -> adjoined V
            for (int i = 1; i < M; ++i) s.target_of[(size_t)i] = (uint32_t)(i - 1);
        }
        return s;
    }

    // Rectangle count: empty rectangles from x (in N) to states of I that
    // contain O1 and no X, with the O1 exponent dropped.
    std::vector<std::pair<State, Monomial>> h_o1_terms(const State& x) const {
        std::vector<std::pair<State, Monomial>> out;
        if (in_I(x)) return out;
        for (auto& hit : empty_rectangles(gp, x)) {
            if (!in_I(hit.y)) continue;
            RectContents rc = rectangle_contents(gp, hit.r);
            if (!rc.x_cols.empty()) continue;
            bool has_o1 = false;
            Monomial m((size_t)gp.n);
            for (int c : rc.o_cols) {
                if (c == o1_col())
                    has_o1 = true;
                else
                    m.e[c] += 1;
            }
            if (!has_o1) continue;
            out.push_back({hit.y, std::move(m)});
        }
        return out;
    }

    // Hexagon count: empty hexagons from x (in N) to I with reflex corner at
    // the origin, crossing O1 and the corner X1 but no other X; O1 exponent
    // dropped.
    std::vector<std::pair<State, Monomial>> h_hex_terms(const State& x) const {
        std::vector<std::pair<State, Monomial>> out;
        if (in_I(x)) return out;
        int n = gp.n;
        // y differs from x in column 0 and two others; the three moved rows
        // are 3-cycled, and y[0] must become 0
        std::vector<State> candidates;
        for (int j1 = 1; j1 < n; ++j1)
            for (int j2 = j1 + 1; j2 < n; ++j2) {
                if (x[j1] == 0) {
                    State y = x;
                    y[0] = 0;
                    y[j1] = x[j2];
                    y[j2] = x[0];
                    candidates.push_back(std::move(y));
                }
                if (x[j2] == 0) {
                    State y = x;
                    y[0] = 0;
                    y[j2] = x[j1];
                    y[j1] = x[0];
                    candidates.push_back(std::move(y));
                }
            }
        for (const State& y : candidates) {
            {
                for (auto& hx : hexagons(gp, x, y)) {
                    bool has_o1 = false, bad = false;
                    Monomial m((size_t)n);
                    for (int c = 0; c < n && !bad; ++c) {
                        if (hx.dom[c][gp.o[c]]) {
                            if (c == o1_col())
                                has_o1 = true;
                            else
                                m.e[c] += 1;
                        }
                        int xm = hx.dom[c][gp.x[c]];
                        if (c == x1_col()) {
                            if (xm != 1) bad = true;
                        } else if (xm != 0) {
                            bad = true;
                        }
                    }
                    if (bad || !has_o1) continue;
                    out.push_back({y, m});
                }
            }
        }
        return out;
    }
};

// Destabilization chain map D : GC-(gp) -> Cone(V + U_{O2}) on GC-(base)[V].
struct DestabilizeResult {
    Complex stabilized;       // GC-(gp)
    StateIndex stab_states;
    Complex base;             // GC-(base), ring extended by V
    StateIndex base_states;
    ConeResult cone;          // of multiplication by V + U_{O2}
    ChainMap d;               // GC-(gp) -> cone.complex
};

inline DestabilizeResult destabilize(const StabilizedSummand& sum) {
    DestabilizeResult r;
    auto [cs, ss] = build_minus_complex(sum.gp);
    r.stabilized = std::move(cs);
    r.stab_states = std::move(ss);
    auto [cb0, sb] = build_minus_complex(sum.base);
    r.base_states = std::move(sb);
    // extend the base ring by the adjoined variable V (index M-1)
    int M = sum.gp.n;
    VarSubst ext;
    ext.target_nvars = (size_t)M;
    ext.target_of.resize((size_t)(M - 1));
    for (int i = 0; i + 1 < M; ++i) ext.target_of[(size_t)i] = (uint32_t)i;
    r.base = substitute(cb0, ext);

    ChainMap mult;
    mult.src = &r.base;
    mult.dst = &r.base;
    mult.subst = VarSubst::identity((size_t)M);
    mult.image.resize(r.base.ngens());
    Monomial v = var_power((size_t)M, (size_t)(M - 1));
    Monomial u2 = var_power((size_t)M, (size_t)sum.o2_base_var());
    for (uint32_t g = 0; g < r.base.ngens(); ++g)
        mult.image[g] = single(g, v) + single(g, u2);
    r.cone = cone(mult);

    ChainMap& d = r.d;
    d.src = &r.stabilized;
    d.dst = &r.cone.complex;
    d.subst = sum.e_subst();
    d.image.resize(r.stabilized.ngens());
    for (uint32_t i = 0; i < r.stabilized.ngens(); ++i) {
        const State& x = r.stab_states.states[i];
        if (sum.in_I(x)) {
            uint32_t b = r.base_states.index.at(sum.e_state(x));
            d.image[i] = single(r.cone.dst_id(b), unit_monomial((size_t)M));
        } else {
            for (auto& [y, m] : sum.h_hex_terms(x)) {
                uint32_t b = r.base_states.index.at(sum.e_state(y));
                d.image[i].toggle(r.cone.dst_id(b), d.subst.apply(m));
            }
            for (auto& [y, m] : sum.h_o1_terms(x)) {
                uint32_t b = r.base_states.index.at(sum.e_state(y));
                d.image[i].toggle(r.cone.src_id(b), d.subst.apply(m));
            }
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// The connected-sum diagram: state classes, the subcomplex C, the map f, and
// the quasi-isomorphism eta.
// ---------------------------------------------------------------------------

enum class StateClass { II, IN, NI, NN, AD1, Outside };

inline const char* to_string(StateClass c) {
    switch (c) {
        case StateClass::II: return "II";
        case StateClass::IN: return "IN";
        case StateClass::NI: return "NI";
        case StateClass::NN: return "NN";
        case StateClass::AD1: return "AD1";
        default: return "outside";
    }
}

struct ConnectSum {
    GridDiagram g;
    ConnectInfo info;
    StabilizedSummand left, right;

    static ConnectSum analyze(const GridDiagram& g) {
        ConnectInfo info = detect_connect(g);
        int m = info.m, k = info.k;
        GridDiagram g1p, g2p;
        g1p.n = m;
        g1p.o.assign(m, 0);
        g1p.x.assign(m, 0);
        for (int c = 0; c < m; ++c) {
            g1p.o[c] = g.o[c] - k;
            g1p.x[c] = g.x[c] - k;
        }
        g1p.o[m - 1] = 0; // undo the connecting row swap
        g2p.n = k;
        g2p.o.assign(k, 0);
        g2p.x.assign(k, 0);
        for (int c = 0; c < k; ++c) {
            g2p.o[c] = g.o[m + c];
            g2p.x[c] = g.x[m + c];
        }
        g2p.o[0] = k - 1;
        return {g, info, StabilizedSummand::make_left(g1p), StabilizedSummand::make_right(g2p)};
    }

    // block membership: S0 states send columns 0..m-1 to rows k.. and the
    // rest below; the distinguished points are
    //   a = (0,0)   d = (m,k)   b = (m,0)   c = (0,k)
    StateClass classify(const State& s) const {
        int m = info.m, k = info.k, N = info.m + info.k;
        if ((int)s.size() != N) throw SizeMismatch("state size != grid size");
        bool s0 = true;
        for (int c = 0; c < N; ++c)
            if ((s[c] >= k) != (c < m)) s0 = false;
        if (s0) {
            bool has_c = (s[0] == k), has_b = (s[m] == 0);
            if (has_b && has_c) return StateClass::II;
            if (has_b) return StateClass::IN;
            if (has_c) return StateClass::NI;
            return StateClass::NN;
        }
        if (s[0] == 0 && s[m] == k) {
            bool rest_ok = true;
            for (int c = 1; c < N; ++c) {
                if (c == m) continue;
                if ((s[c] >= k) != (c < m)) rest_ok = false;
            }
            if (rest_ok) return StateClass::AD1;
        }
        return StateClass::Outside;
    }

    // S0 states factor through the two summands
    std::pair<State, State> split(const State& s) const {
        StateClass cl = classify(s);
        if (cl == StateClass::Outside || cl == StateClass::AD1)
            throw PreconditionViolated("only block-diagonal states split");
        State q1(info.m), q2(info.k);
        for (int c = 0; c < info.m; ++c) q1[c] = s[c] - info.k;
        for (int c = 0; c < info.k; ++c) q2[c] = s[info.m + c];
        return {q1, q2};
    }

    State join(const State& q1, const State& q2) const {
        State s((size_t)(info.m + info.k));
        for (int c = 0; c < info.m; ++c) s[c] = q1[c] + info.k;
        for (int c = 0; c < info.k; ++c) s[info.m + c] = q2[c];
        return s;
    }

    // IN states in particular: left factor is of N type, right of I type
    std::pair<State, State> split_IN(const State& s) const {
        if (classify(s) != StateClass::IN)
            throw PreconditionViolated("split_IN expects an IN state");
        auto [q1, q2] = split(s);
        if (left.in_I(q1) || !right.in_I(q2))
            throw ZeroBlockViolated("IN state split has the wrong I/N types");
        return {q1, q2};
    }

    std::vector<State> enumerate_S0() const {
        std::vector<State> out;
        State p1(info.m), p2(info.k);
        for (int i = 0; i < info.m; ++i) p1[i] = i;
        std::vector<State> lefts;
        do lefts.push_back(p1);
        while (std::next_permutation(p1.begin(), p1.end()));
        for (int i = 0; i < info.k; ++i) p2[i] = i;
        do {
            for (const auto& q1 : lefts) out.push_back(join(q1, p2));
        } while (std::next_permutation(p2.begin(), p2.end()));
        return out;
    }

    std::vector<State> enumerate_AD1() const {
        // a and d fixed; remaining columns stay block-diagonal avoiding the
        // rows a and d use
        int m = info.m, k = info.k;
        std::vector<State> out;
        std::vector<int> rows1(m - 1), rows2(k - 1);
        for (int i = 0; i < m - 1; ++i) rows1[i] = k + 1 + i; // rows k+1..N-1
        for (int i = 0; i < k - 1; ++i) rows2[i] = 1 + i;     // rows 1..k-1
        std::sort(rows1.begin(), rows1.end());
        do {
            std::vector<int> r2 = rows2;
            std::sort(r2.begin(), r2.end());
            do {
                State s((size_t)(m + k));
                s[0] = 0;
                s[m] = k;
                for (int c = 1; c < m; ++c) s[c] = rows1[c - 1];
                for (int c = 1; c < k; ++c) s[m + c] = r2[c - 1];
                out.push_back(std::move(s));
            } while (std::next_permutation(r2.begin(), r2.end()));
        } while (std::next_permutation(rows1.begin(), rows1.end()));
        return out;
    }
};

} // namespace gridhom
