#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "gridhom/connect.hpp"
#include "gridhom/fixtures.hpp"
#include "gridhom/kunneth.hpp"

using namespace gridhom;

namespace {
// Brute-force oracle: every 0/1 square assignment whose cyclic mixed second
// difference at lattice point (c,r) equals [x[c]==r] - [y[c]==r].
std::vector<std::vector<std::vector<int>>> bitmask_domains(int n, const State& x, const State& y) {
    std::vector<std::vector<std::vector<int>>> out;
    int nsq = n * n;
    for (long mask = 0; mask < (1L << nsq); ++mask) {
        std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
        for (int c = 0; c < n; ++c)
            for (int r = 0; r < n; ++r) m[c][r] = (int)((mask >> (c * n + r)) & 1);
        bool ok = true;
        for (int c = 0; c < n && ok; ++c)
            for (int r = 0; r < n; ++r) {
                int cp = (c + n - 1) % n, rp = (r + n - 1) % n;
                int d2 = m[c][r] - m[cp][r] - m[c][rp] + m[cp][rp];
                int want = (x[c] == r ? 1 : 0) - (y[c] == r ? 1 : 0);
                if (d2 != want) {
                    ok = false;
                    break;
                }
            }
        if (ok) out.push_back(std::move(m));
    }
    return out;
}

bool same_domain_sets(std::vector<std::vector<std::vector<int>>> a,
                      std::vector<std::vector<std::vector<int>>> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}
} // namespace

TEST_CASE("constructive 0/1 domain solver matches the exhaustive oracle") {
    // all pairs at n = 3, a deterministic sample at n = 4
    GridDiagram g3 = fixtures::unknot(3);
    auto st3 = enumerate_states(g3);
    for (const State& x : st3)
        for (const State& y : st3)
            REQUIRE(same_domain_sets(domains_01(3, x, y), bitmask_domains(3, x, y)));

    auto st4 = enumerate_states(fixtures::unknot(4));
    std::mt19937 rng(20260826);
    for (int trial = 0; trial < 30; ++trial) {
        const State& x = st4[rng() % st4.size()];
        const State& y = st4[rng() % st4.size()];
        REQUIRE(same_domain_sets(domains_01(4, x, y), bitmask_domains(4, x, y)));
    }
}

TEST_CASE("destabilization is a bidegree (0,0) quasi-isomorphism onto the cone") {
    auto check = [](const StabilizedSummand& sum) {
        DestabilizeResult dr = destabilize(sum);
        REQUIRE(dr.stabilized.d_squared_is_zero());
        REQUIRE(dr.cone.complex.d_squared_is_zero());
        REQUIRE(is_chain_map(dr.d));
        auto bid = map_bidegree(dr.d);
        REQUIRE(bid.has_value());
        REQUIRE(*bid == std::make_pair(0, 0));
        REQUIRE(is_acyclic(cone(dr.d).complex));
    };
    // 3x3 through 6x6, both stabilization types, knotted summands included
    check(StabilizedSummand::make_left(prepare_summand_left(fixtures::as_left_summand(fixtures::unknot2()))));
    check(StabilizedSummand::make_right(prepare_summand_right(fixtures::as_right_summand(fixtures::unknot2()))));
    check(StabilizedSummand::make_left(prepare_summand_left(fixtures::as_left_summand(fixtures::unknot(3)))));
    check(StabilizedSummand::make_right(prepare_summand_right(fixtures::as_right_summand(fixtures::unknot(3)))));
    check(StabilizedSummand::make_left(prepare_summand_left(fixtures::as_left_summand(fixtures::trefoil_lh()))));
    check(StabilizedSummand::make_right(prepare_summand_right(fixtures::as_right_summand(fixtures::trefoil_rh()))));
}

TEST_CASE("the I part is a subcomplex with no differential back out") {
    auto sum = StabilizedSummand::make_left(
        prepare_summand_left(fixtures::as_left_summand(fixtures::unknot(3))));
    for (const State& s : enumerate_states(sum.gp)) {
        if (!sum.in_I(s)) continue;
        for (auto& t : differential_terms(sum.gp, s)) REQUIRE(sum.in_I(t.y));
    }
}

TEST_CASE("connected-sum state classes have the predicted sizes") {
    GridDiagram g = fixtures::connect_sum(fixtures::unknot2(), fixtures::unknot2());
    ConnectSum cs = ConnectSum::analyze(g);
    REQUIRE(cs.info.m == 3);
    REQUIRE(cs.info.k == 3);
    auto s0 = cs.enumerate_S0();
    REQUIRE(s0.size() == 36); // m! * k!
    int ii = 0, in_ = 0, ni = 0, nn = 0;
    for (const State& s : s0) {
        switch (cs.classify(s)) {
            case StateClass::II: ++ii; break;
            case StateClass::IN: ++in_; break;
            case StateClass::NI: ++ni; break;
            case StateClass::NN: ++nn; break;
            default: FAIL("S0 state classified outside S0");
        }
        auto [q1, q2] = cs.split(s);
        REQUIRE(cs.join(q1, q2) == s);
    }
    REQUIRE(ii == 4);  // (m-1)!(k-1)!
    REQUIRE(in_ == 8); // (m! - (m-1)!)(k-1)!
    REQUIRE(ni == 8);
    REQUIRE(nn == 16);
    auto ad1 = cs.enumerate_AD1();
    REQUIRE(ad1.size() == 4); // (m-1)!(k-1)!
    for (const State& s : ad1) REQUIRE(cs.classify(s) == StateClass::AD1);

    // the full state count splits as claimed
    int total_named = 0;
    for (const State& s : enumerate_states(g))
        if (cs.classify(s) != StateClass::Outside) ++total_named;
    REQUIRE(total_named == 36 + 4);
}

TEST_CASE("split_IN checks the factor types") {
    GridDiagram g = fixtures::connect_sum(fixtures::unknot2(), fixtures::unknot2());
    ConnectSum cs = ConnectSum::analyze(g);
    for (const State& s : cs.enumerate_S0()) {
        if (cs.classify(s) != StateClass::IN) continue;
        auto [q1, q2] = cs.split_IN(s);
        REQUIRE(!cs.left.in_I(q1));
        REQUIRE(cs.right.in_I(q2));
    }
    // an II state is rejected
    for (const State& s : cs.enumerate_S0())
        if (cs.classify(s) == StateClass::II) {
            REQUIRE_THROWS_AS(cs.split_IN(s), PreconditionViolated);
            break;
        }
}

TEST_CASE("the connecting map out of AD1 has the two-term U form") {
    for (const GridDiagram& g :
         {fixtures::connect_sum(fixtures::unknot2(), fixtures::unknot2()),
          fixtures::connect_sum(fixtures::unknot(3), fixtures::unknot2())}) {
        ConnectSum cs = ConnectSum::analyze(g);
        for (const State& s : cs.enumerate_AD1()) {
            REQUIRE(!map_f(cs, s).empty());
            REQUIRE(f_has_expected_form(cs, s));
        }
    }
}
