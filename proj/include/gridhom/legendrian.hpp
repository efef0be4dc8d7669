#pragma once
#include "kunneth.hpp"

namespace gridhom {

// Canonical corner states of the X markings: x+ occupies the northeast
// corners, x- the southwest corners.
inline State canonical_state(const GridDiagram& g, bool plus) {
    State s((size_t)g.n);
    for (int c = 0; c < g.n; ++c) {
        if (plus)
            s[(c + 1) % g.n] = (g.x[c] + 1) % g.n;
        else
            s[c] = g.x[c];
    }
    return s;
}

struct LambdaReport {
    Bigrading plus, minus;
    bool plus_nonzero_checked = false; // class checked against the boundary image
    bool minus_nonzero_checked = false;
    bool plus_nonzero = false;
    bool minus_nonzero = false;
};

// The Legendrian invariant classes lambda+/- = [x+/-]; theta is lambda+ read
// as a transverse invariant.  Throws NotACycle if a differential is nonzero.
// When check_nonzero is set (feasible for small grids) the class is verified
// to miss the image of the differential on its slice.
inline LambdaReport lambda(const GridDiagram& g, bool check_nonzero = false) {
    validate(g);
    LambdaReport rep;
    for (bool plus : {true, false}) {
        State s = canonical_state(g, plus);
        if (!differential_terms(g, s).empty())
            throw NotACycle(std::string("canonical state x") + (plus ? "+" : "-") +
                            " has nonzero differential");
        Bigrading bg{maslov(g, s), alexander(g, s)};
        (plus ? rep.plus : rep.minus) = bg;
        if (check_nonzero) {
            auto [cx, si] = build_minus_complex(g);
            SliceHomology h = slice_homology(cx, bg.maslov, bg.alexander);
            Elem e = single(si.index.at(s), unit_monomial(cx.nvars));
            auto co = h.coords(to_bits(h.sb, e)); // throws if not a cycle
            bool nonzero = false;
            for (char b : co) nonzero |= (b != 0);
            (plus ? rep.plus_nonzero : rep.minus_nonzero) = nonzero;
            (plus ? rep.plus_nonzero_checked : rep.minus_nonzero_checked) = true;
        }
    }
    return rep;
}

struct AdditivityReport {
    bool plus_term_exact = false;  // eta(x+(g#)) equals x+(g1) (x) x+(g2)
    bool minus_term_exact = false;
    Bigrading plus_sharp, minus_sharp;
    Bigrading plus_expected, minus_expected;
};

// Corollary-level check: under eta, the canonical classes of the connected
// sum map to the tensor of the canonical classes, term-exactly.
inline AdditivityReport additivity_check(const ConnectSum& cs, const EtaMap& eta) {
    AdditivityReport rep;
    for (bool plus : {true, false}) {
        State xs = canonical_state(cs.g, plus);
        if (!differential_terms(cs.g, xs).empty()) throw NotACycle("connected-sum corner state");
        State x1 = canonical_state(cs.left.base, plus);
        State x2 = canonical_state(cs.right.base, plus);
        Elem got = eta.apply_state(xs);
        Elem want = single(eta.pair_id(x1, x2), unit_monomial(eta.subst.target_nvars));
        bool ok = got == want;
        Bigrading sharp{maslov(cs.g, xs), alexander(cs.g, xs)};
        Bigrading expect{maslov(cs.left.base, x1) + maslov(cs.right.base, x2),
                         alexander(cs.left.base, x1) + alexander(cs.right.base, x2)};
        if (plus) {
            rep.plus_term_exact = ok;
            rep.plus_sharp = sharp;
            rep.plus_expected = expect;
        } else {
            rep.minus_term_exact = ok;
            rep.minus_sharp = sharp;
            rep.minus_expected = expect;
        }
    }
    return rep;
}

} // namespace gridhom
