#include <catch_amalgamated.hpp>

#include <map>

#include "gridhom/fixtures.hpp"
#include "gridhom/state.hpp"

using namespace gridhom;

namespace {
// Independent symmetrized pair-count oracle: J(A,B) = (I(A,B)+I(B,A))/2,
// M = J(x-O, x-O) + 1 and A = J(x - (X+O)/2, X - O) - (n-1)/2, evaluated in
// doubled arithmetic so everything stays integral.
long I_cnt(const std::vector<std::pair<int, int>>& a, const std::vector<std::pair<int, int>>& b) {
    long c = 0;
    for (auto& p : a)
        for (auto& q : b)
            if (p.first < q.first && p.second < q.second) ++c;
    return c;
}
std::pair<long, long> oracle_gradings_doubled(const GridDiagram& g, const State& s) {
    std::vector<std::pair<int, int>> xs, os, xx;
    for (int c = 0; c < g.n; ++c) {
        xs.push_back({2 * c, 2 * s[c]});
        os.push_back({2 * c + 1, 2 * g.o[c] + 1});
        xx.push_back({2 * c + 1, 2 * g.x[c] + 1});
    }
    auto J2 = [&](auto& a, auto& b) { return I_cnt(a, b) + I_cnt(b, a); }; // 2J
    long m2 = J2(xs, xs) - 2 * J2(xs, os) + J2(os, os) + 2;               // 2M
    long a4 = 2 * J2(xs, xx) - 2 * J2(xs, os) - J2(xx, xx) + J2(os, os) -
              2 * (g.n - 1);                                              // 4A
    return {m2, a4};
}
} // namespace

TEST_CASE("frozen gradings on the 2x2 unknot") {
    GridDiagram g = fixtures::unknot2();
    State sw{1, 0}, id{0, 1};
    REQUIRE(maslov(g, sw) == 0);
    REQUIRE(alexander(g, sw) == 0);
    REQUIRE(maslov(g, id) == -1);
    REQUIRE(alexander(g, id) == -1);
}

TEST_CASE("gradings agree with the symmetrized oracle and all planar cuts") {
    for (const GridDiagram& g0 :
         {fixtures::unknot2(), fixtures::unknot(4), fixtures::trefoil_rh(),
          fixtures::trefoil_lh(), fixtures::unknot(5)}) {
        for (const State& s : enumerate_states(g0)) {
            int m = maslov(g0, s), a = alexander(g0, s);
            auto [m2, a4] = oracle_gradings_doubled(g0, s);
            REQUIRE(2 * m == m2);
            REQUIRE(4 * a == a4);
            // translating the torus cut must not change either grading
            for (int dc = 0; dc < g0.n; ++dc)
                for (int dr = 0; dr < g0.n; ++dr) {
                    GridDiagram gt = translate(g0, dc, dr);
                    State st(g0.n);
                    for (int c = 0; c < g0.n; ++c)
                        st[(c + dc) % g0.n] = (s[c] + dr) % g0.n;
                    if (maslov(gt, st) != m || alexander(gt, st) != a) {
                        REQUIRE(maslov(gt, st) == m);
                        REQUIRE(alexander(gt, st) == a);
                    }
                }
        }
    }
}

TEST_CASE("two rectangles connect each pair of states differing in two columns") {
    GridDiagram g = fixtures::trefoil_rh();
    auto states = enumerate_states(g);
    for (const State& s : states) {
        auto rects = empty_rectangles(g, s);
        std::map<State, int> per_target;
        for (auto& hit : rects) {
            per_target[hit.y]++;
            // corners: SW and NE corners sit on x, the others on y
            REQUIRE(hit.r.w > 0);
            REQUIRE(hit.r.h > 0);
            REQUIRE(s[hit.r.c0] == hit.r.r0);
        }
        for (auto& [y, cnt] : per_target) REQUIRE(cnt <= 2);
    }
}

TEST_CASE("rectangle contents count markings with multiplicity one") {
    GridDiagram g = fixtures::unknot(4);
    Rect r{3, 2, 2, 3}; // wraps in both directions
    RectContents rc = rectangle_contents(g, r);
    for (int c : rc.o_cols) REQUIRE(r.contains_square(g.n, c, g.o[c]));
    for (int c : rc.x_cols) REQUIRE(r.contains_square(g.n, c, g.x[c]));
    int o_in = 0, x_in = 0;
    for (int c = 0; c < g.n; ++c) {
        o_in += r.contains_square(g.n, c, g.o[c]);
        x_in += r.contains_square(g.n, c, g.x[c]);
    }
    REQUIRE((int)rc.o_cols.size() == o_in);
    REQUIRE((int)rc.x_cols.size() == x_in);
}

TEST_CASE("differential terms shift the bigrading by (-1,0) per U power") {
    for (const GridDiagram& g : {fixtures::unknot(4), fixtures::trefoil_rh()}) {
        for (const State& s : enumerate_states(g)) {
            for (auto& t : differential_terms(g, s)) {
                int deg = t.mono.degree();
                REQUIRE(maslov(g, t.y) - 2 * deg == maslov(g, s) - 1);
                REQUIRE(alexander(g, t.y) - deg == alexander(g, s));
            }
        }
    }
}

TEST_CASE("alexander throws on half-integer input data") {
    // two-component split link: the symmetrized count is odd
    GridDiagram split{2, {0, 1}, {1, 0}};
    (void)split; // 2x2 is fine; build a genuinely odd case
    GridDiagram hopf{4, {2, 3, 0, 1}, {0, 1, 2, 3}};
    validate(hopf, false);
    bool threw = false;
    for (const State& s : enumerate_states(hopf)) {
        try {
            (void)alexander(hopf, s);
        } catch (const HalfIntegerResult&) {
            threw = true;
        }
    }
    REQUIRE(threw);
}
