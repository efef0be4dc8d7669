#include <catch_amalgamated.hpp>

#include "gridhom/fixtures.hpp"
#include "gridhom/legendrian.hpp"

using namespace gridhom;

TEST_CASE("canonical corner states are cycles on all fixtures") {
    for (const GridDiagram& g :
         {fixtures::unknot2(), fixtures::unknot(3), fixtures::unknot(4),
          fixtures::trefoil_lh(), fixtures::trefoil_rh(),
          fixtures::connect_sum(fixtures::unknot2(), fixtures::unknot2()),
          fixtures::connect_sum(fixtures::unknot(3), fixtures::unknot2())}) {
        for (bool plus : {true, false}) {
            State s = canonical_state(g, plus);
            CHECK(differential_terms(g, s).empty());
        }
    }
}

TEST_CASE("canonical states occupy one corner per X square") {
    GridDiagram g = fixtures::trefoil_lh();
    State sp = canonical_state(g, true), sm = canonical_state(g, false);
    for (int c = 0; c < g.n; ++c) {
        CHECK(sm[c] == g.x[c]);                         // southwest corner
        CHECK(sp[(c + 1) % g.n] == (g.x[c] + 1) % g.n); // northeast corner
    }
}

TEST_CASE("lambda classes are nonzero with frozen bigradings") {
    LambdaReport u = lambda(fixtures::unknot2(), true);
    CHECK(u.plus == Bigrading{0, 0});
    CHECK(u.minus == Bigrading{0, 0});
    CHECK(u.plus_nonzero);
    CHECK(u.minus_nonzero);

    LambdaReport lh = lambda(fixtures::trefoil_lh(), true);
    CHECK(lh.plus == Bigrading{2, 1});
    CHECK(lh.minus == Bigrading{2, 1});
    CHECK(lh.plus_nonzero);
    CHECK(lh.minus_nonzero);

    LambdaReport rh = lambda(fixtures::trefoil_rh(), true);
    CHECK(rh.plus == Bigrading{-6, -3});
    CHECK(rh.minus == Bigrading{-4, -2});
    CHECK(rh.plus_nonzero);
    CHECK(rh.minus_nonzero);
}

// For the combined diagram the canonical states land in the block-diagonal
// class containing both off-corner points b and c (class II), not in AD1:
// an AD1 state has a nonzero image under the connecting map f and so could
// never be a cycle.  The II placement is what makes the eta images below
// come out as pure tensors.
TEST_CASE("canonical states of a combined diagram are II states") {
    for (const GridDiagram& g :
         {fixtures::connect_sum(fixtures::unknot2(), fixtures::unknot2()),
          fixtures::connect_sum(fixtures::unknot(3), fixtures::unknot2()),
          fixtures::connect_sum(fixtures::unknot2(), fixtures::unknot(3))}) {
        ConnectSum cs = ConnectSum::analyze(g);
        CHECK(cs.classify(canonical_state(g, true)) == StateClass::II);
        CHECK(cs.classify(canonical_state(g, false)) == StateClass::II);
    }
}

TEST_CASE("eta maps canonical states to the tensor of canonical states") {
    for (const GridDiagram& g :
         {fixtures::connect_sum(fixtures::unknot2(), fixtures::unknot2()),
          fixtures::connect_sum(fixtures::unknot(3), fixtures::unknot2()),
          fixtures::connect_sum(fixtures::unknot2(), fixtures::unknot(3)),
          fixtures::connect_sum(fixtures::unknot2(), fixtures::trefoil_rh())}) {
        ConnectSum cs = ConnectSum::analyze(g);
        EtaMap eta = EtaMap::make(cs);
        AdditivityReport r = additivity_check(cs, eta);
        CHECK(r.plus_term_exact);
        CHECK(r.minus_term_exact);
        CHECK(r.plus_sharp == r.plus_expected);
        CHECK(r.minus_sharp == r.minus_expected);
    }
}

TEST_CASE("homology-level additivity at desk scale") {
    // lambda+- of the combined diagram and of the tensor side are both
    // nonzero classes in the same bigrading
    GridDiagram g = fixtures::connect_sum(fixtures::unknot2(), fixtures::unknot2());
    LambdaReport sum = lambda(g, true);
    CHECK(sum.plus_nonzero);
    CHECK(sum.minus_nonzero);

    ConnectSum cs = ConnectSum::analyze(g);
    EtaMap eta = EtaMap::make(cs);
    for (bool plus : {true, false}) {
        State x1 = canonical_state(cs.left.base, plus);
        State x2 = canonical_state(cs.right.base, plus);
        Elem t = single(eta.pair_id(x1, x2), unit_monomial(eta.subst.target_nvars));
        Bigrading bg = eta.target.complex.grading[t.terms.begin()->gen];
        CHECK(bg == (plus ? sum.plus : sum.minus));
        SliceHomology h = slice_homology(eta.target.complex, bg.maslov, bg.alexander);
        auto co = h.coords(to_bits(h.sb, t));
        bool nonzero = false;
        for (char b : co) nonzero |= (b != 0);
        CHECK(nonzero);
    }
}
