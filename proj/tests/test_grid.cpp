#include <catch_amalgamated.hpp>

#include "gridhom/fixtures.hpp"
#include "gridhom/grid.hpp"

using namespace gridhom;

TEST_CASE("parse and render round-trip") {
    std::string text =
        ". X O\n"
        "O . X\n"
        "X O .\n";
    GridDiagram g = parse_text(text);
    REQUIRE(g.n == 3);
    REQUIRE(render_text(g) == ". X O\nO . X\nX O .\n");
    GridDiagram again = parse_text(render_text(g));
    REQUIRE(again.o == g.o);
    REQUIRE(again.x == g.x);
}

TEST_CASE("parser rejects malformed input") {
    REQUIRE_THROWS_AS(parse_text("X O\nO"), RaggedRows);
    REQUIRE_THROWS_AS(parse_text("X Q\nO X"), BadCharacter);
    REQUIRE_THROWS_AS(parse_text("X X\nO O"), NotPermutation); // row duplicates
    REQUIRE_THROWS_AS(parse_text(""), RaggedRows);
}

TEST_CASE("validate catches bad marking data") {
    GridDiagram g{2, {0, 1}, {0, 1}};
    REQUIRE_THROWS_AS(validate(g), SharedSquare);
    g = {2, {0, 0}, {1, 0}};
    REQUIRE_THROWS_AS(validate(g), NotPermutation);
    g = {2, {0}, {1, 0}};
    REQUIRE_THROWS_AS(validate(g), SizeMismatch);
    g = {2, {0, 1}, {1, 0}};
    REQUIRE_NOTHROW(validate(g));
    GridDiagram split{4, {0, 1, 2, 3}, {1, 0, 3, 2}};
    REQUIRE_THROWS_AS(validate(split), NotAKnot);
    REQUIRE_NOTHROW(validate(split, false));
}

TEST_CASE("fixture diagrams are knots") {
    REQUIRE_NOTHROW(validate(fixtures::unknot2()));
    REQUIRE_NOTHROW(validate(fixtures::unknot(5)));
    REQUIRE_NOTHROW(validate(fixtures::trefoil_rh()));
    REQUIRE_NOTHROW(validate(fixtures::trefoil_lh()));
}

TEST_CASE("translate moves markings cyclically") {
    GridDiagram g = fixtures::trefoil_lh(); // diagonal O's
    GridDiagram t = translate(g, 2, 3);
    REQUIRE_NOTHROW(validate(t));
    REQUIRE(t.o[2] == 3);
    GridDiagram back = translate(t, -2, -3);
    REQUIRE(back.o == g.o);
    REQUIRE(back.x == g.x);
}

TEST_CASE("marking labels follow columns") {
    auto labels = canonical_marking_labels(fixtures::unknot(4));
    REQUIRE(labels.size() == 4);
    for (int c = 0; c < 4; ++c) {
        REQUIRE(labels[c].first == c);
        REQUIRE(labels[c].second == c);
    }
}

TEST_CASE("prepare steps demand a corner X") {
    GridDiagram u = fixtures::unknot2();
    REQUIRE_THROWS_AS(prepare_summand_left(translate(u, 0, 1)), PreconditionViolated);
    GridDiagram lp = prepare_summand_left(fixtures::as_left_summand(u));
    REQUIRE(lp.n == 3);
    REQUIRE(is_prepared_left(lp));
    REQUIRE(lp.x[0] == 0);
    REQUIRE(lp.x[2] == 2);
    REQUIRE(lp.o[2] == 0);
    GridDiagram rp = prepare_summand_right(fixtures::as_right_summand(u));
    REQUIRE(is_prepared_right(rp));
    REQUIRE(rp.o[0] == 2);
    // destabilizing undoes preparing
    GridDiagram back = destabilize_left(lp);
    REQUIRE(back.o == fixtures::as_left_summand(u).o);
    REQUIRE(back.x == fixtures::as_left_summand(u).x);
    GridDiagram back2 = destabilize_right(rp);
    REQUIRE(back2.o == fixtures::as_right_summand(u).o);
    REQUIRE(back2.x == fixtures::as_right_summand(u).x);
}

TEST_CASE("connect glues blocks and swaps the stabilization O rows") {
    GridDiagram g = fixtures::connect_sum(fixtures::unknot2(), fixtures::unknot2());
    REQUIRE(g.n == 6);
    REQUIRE_NOTHROW(validate(g)); // the sum is a knot again
    ConnectInfo info = detect_connect(g);
    REQUIRE(info.m == 3);
    REQUIRE(info.k == 3);
    REQUIRE(g.o[2] == 2);
    REQUIRE(g.o[3] == 3);
    REQUIRE_THROWS_AS(detect_connect(fixtures::unknot(6)), NotAConnectDiagram);
    REQUIRE_THROWS_AS(connect(fixtures::unknot(3), fixtures::unknot(3)), NotStabilized);
}

TEST_CASE("mirror transposes the grid") {
    GridDiagram g = fixtures::trefoil_rh();
    GridDiagram m = mirror(g);
    REQUIRE_NOTHROW(validate(m));
    GridDiagram mm = mirror(m);
    REQUIRE(mm.o == g.o);
    REQUIRE(mm.x == g.x);
}
