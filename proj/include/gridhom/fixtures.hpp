#pragma once
#include "grid.hpp"

namespace gridhom {
namespace fixtures {

inline GridDiagram unknot2() { return {2, {0, 1}, {1, 0}}; }

// n x n unknot: O on the diagonal, X shifted by one
inline GridDiagram unknot(int n) {
    GridDiagram g;
    g.n = n;
    g.o.resize(n);
    g.x.resize(n);
    for (int c = 0; c < n; ++c) {
        g.o[c] = c;
        g.x[c] = (c + 1) % n;
    }
    return g;
}

// 5x5 trefoils: diagonal O's, X's shifted by two.  Handedness labels are
// pinned by the computed tau (tests freeze tau = +1 for the right-handed
// one); the cyclic diagram comes out left-handed in this convention.
inline GridDiagram trefoil_lh() {
    GridDiagram g;
    g.n = 5;
    g.o.resize(5);
    g.x.resize(5);
    for (int c = 0; c < 5; ++c) {
        g.o[c] = c;
        g.x[c] = (c + 2) % 5;
    }
    return g;
}

inline GridDiagram trefoil_rh() { return mirror(trefoil_lh()); }

// connect-ready variants (X translated into the corner the prepare steps need)
inline GridDiagram as_left_summand(const GridDiagram& g) {
    return translate_x_to_top_left(g, 0);
}
inline GridDiagram as_right_summand(const GridDiagram& g) {
    return translate_x_to_bottom_right(g, 0);
}

inline GridDiagram connect_sum(const GridDiagram& a, const GridDiagram& b) {
    return connect(prepare_summand_left(as_left_summand(a)),
                   prepare_summand_right(as_right_summand(b)));
}

} // namespace fixtures
} // namespace gridhom
