#pragma once
#include "connect.hpp"

namespace gridhom {

// The subcomplex C of GC-(g#) spanned by the block-diagonal states S0 and
// the corner class AD1.
struct SubcomplexC {
    Complex complex; // over the g# ring
    std::vector<State> gens;
    std::map<State, uint32_t> index;
};

inline SubcomplexC build_C(const ConnectSum& cs) {
    SubcomplexC r;
    r.gens = cs.enumerate_S0();
    auto ad1 = cs.enumerate_AD1();
    r.gens.insert(r.gens.end(), ad1.begin(), ad1.end());
    for (uint32_t i = 0; i < r.gens.size(); ++i) r.index[r.gens[i]] = i;
    int N = cs.g.n;
    size_t forbidden = (size_t)(cs.info.m - 1); // spectator variable of C0
    r.complex.nvars = (size_t)N;
    r.complex.grading.resize(r.gens.size());
    r.complex.diff.resize(r.gens.size());
    for (uint32_t i = 0; i < r.gens.size(); ++i) {
        const State& x = r.gens[i];
        r.complex.grading[i] = {maslov(cs.g, x), alexander(cs.g, x)};
        bool x_in_s0 = cs.classify(x) != StateClass::AD1;
        for (auto& t : differential_terms(cs.g, x)) {
            auto it = r.index.find(t.y);
            if (it == r.index.end())
                throw NotSubcomplex("differential of a C generator leaves C");
            if (x_in_s0 && t.mono.e[forbidden] != 0)
                throw ZeroBlockViolated(
                    "block-diagonal differential uses the spectator variable");
            r.complex.diff[i].toggle(it->second, t.mono);
        }
    }
    return r;
}

// Connecting component f: for an AD1 state, the part of the differential
// landing in S0.  Theorem shape: exactly (U_{m-1} + U_m) times the state with
// {a,d} replaced by {b,c}.
struct FTerm {
    State y;
    Monomial mono;
};

inline std::vector<FTerm> map_f(const ConnectSum& cs, const State& x) {
    if (cs.classify(x) != StateClass::AD1)
        throw PreconditionViolated("f is defined on AD1 states");
    std::vector<FTerm> out;
    for (auto& t : differential_terms(cs.g, x)) {
        StateClass cl = cs.classify(t.y);
        if (cl == StateClass::AD1) continue;
        if (cl == StateClass::Outside)
            throw NotSubcomplex("differential of an AD1 state leaves C");
        out.push_back({t.y, t.mono});
    }
    return out;
}

// check the structural form of f on one AD1 state
inline bool f_has_expected_form(const ConnectSum& cs, const State& x) {
    State y = x;
    std::swap(y[0], y[cs.info.m]); // replace {a,d} by {b,c}
    auto terms = map_f(cs, x);
    if (terms.size() != 2) return false;
    size_t vm1 = (size_t)(cs.info.m - 1), vm = (size_t)cs.info.m;
    bool saw_m1 = false, saw_m = false;
    for (auto& t : terms) {
        if (!(t.y == y)) return false;
        if (t.mono.degree() != 1) return false;
        if (t.mono.e[vm1] == 1) saw_m1 = true;
        if (t.mono.e[vm] == 1) saw_m = true;
    }
    return saw_m1 && saw_m;
}

// ---------------------------------------------------------------------------
// eta : C -> GC-(g1) (x) GC-(g2) over the shared variable.
// ---------------------------------------------------------------------------

struct EtaMap {
    const ConnectSum* cs = nullptr;
    Complex B1, B2;           // summand complexes
    StateIndex S1, S2;
    TensorResult target;      // tensor over the shared variable
    VarSubst subst;           // g# ring -> target ring
    VarSubst sub1, sub2;      // summand stabilized rings -> target ring

    // memoized hexagon counts on the two stabilized summands
    mutable std::map<State, std::vector<std::pair<State, Monomial>>> hex1, hex2;

    static EtaMap make(const ConnectSum& cs) {
        EtaMap e;
        e.cs = &cs;
        auto [b1, s1] = build_minus_complex(cs.left.base);
        auto [b2, s2] = build_minus_complex(cs.right.base);
        e.B1 = std::move(b1);
        e.S1 = std::move(s1);
        e.B2 = std::move(b2);
        e.S2 = std::move(s2);
        size_t s = (size_t)(cs.info.m - 1), t = (size_t)(cs.info.k - 1);
        // the shared tensor variable identifies the two cone partners:
        // left O2 is base variable 0 of g1, right O2 varies with the base
        size_t shared2 = (size_t)cs.right.o2_base_var();
        e.target = tensor(e.B1, e.B2, (size_t)cs.left.o2_base_var(), shared2);
        size_t N = (size_t)(cs.info.m + cs.info.k);
        uint32_t shared_target = e.target.a_vars.target_of[(size_t)cs.left.o2_base_var()];
        e.subst.target_nvars = s + t - 1;
        e.subst.target_of.resize(N);
        for (size_t c = 0; c < N; ++c) {
            if (c < s)
                e.subst.target_of[c] = e.target.a_vars.target_of[c]; // g1 columns
            else if (c == s || c == s + 1)
                e.subst.target_of[c] = shared_target; // both cone O1 variables
            else
                e.subst.target_of[c] = e.target.b_vars.target_of[c - (s + 2)];
        }
        e.sub1.target_nvars = s + t - 1;
        e.sub1.target_of.resize(s + 1);
        for (size_t i = 0; i < s; ++i) e.sub1.target_of[i] = e.target.a_vars.target_of[i];
        e.sub1.target_of[s] = shared_target; // O1 exponent never present, but keep total
        e.sub2.target_nvars = s + t - 1;
        e.sub2.target_of.resize(t + 1);
        e.sub2.target_of[0] = shared_target; // O1 of the right summand, likewise absent
        for (size_t j = 1; j <= t; ++j)
            e.sub2.target_of[j] = e.target.b_vars.target_of[j - 1];
        return e;
    }

    const std::vector<std::pair<State, Monomial>>& hex_left(const State& q1) const {
        auto it = hex1.find(q1);
        if (it == hex1.end()) it = hex1.emplace(q1, cs->left.h_hex_terms(q1)).first;
        return it->second;
    }
    const std::vector<std::pair<State, Monomial>>& hex_right(const State& q2) const {
        auto it = hex2.find(q2);
        if (it == hex2.end()) it = hex2.emplace(q2, cs->right.h_hex_terms(q2)).first;
        return it->second;
    }

    uint32_t pair_id(const State& y1, const State& y2) const {
        return target.pair_id(S1.index.at(y1), S2.index.at(y2));
    }

    // image of a single C generator (state of g#) with trivial coefficient.
    // Each factor of the image applies the hexagon homotopy exactly when that
    // factor is of N type; NN therefore gets the hexagon count on both sides.
    // (Sending NN to zero instead breaks the chain-map identity on every
    // connect fixture: eta(d(NN)) picks up uncancelled IN/NI hexagon terms.)
    Elem apply_state(const State& x) const {
        Elem out;
        StateClass cl = cs->classify(x);
        if (cl == StateClass::AD1 || cl == StateClass::Outside) return out;
        auto [q1, q2] = cs->split(x);
        switch (cl) {
            case StateClass::II:
                out.toggle(pair_id(cs->left.e_state(q1), cs->right.e_state(q2)),
                           unit_monomial(subst.target_nvars));
                break;
            case StateClass::IN: // left factor has N type
                for (auto& [y1, mu] : hex_left(q1))
                    out.toggle(pair_id(cs->left.e_state(y1), cs->right.e_state(q2)),
                               sub1.apply(mu));
                break;
            case StateClass::NI:
                for (auto& [y2, mu] : hex_right(q2))
                    out.toggle(pair_id(cs->left.e_state(q1), cs->right.e_state(y2)),
                               sub2.apply(mu));
                break;
            case StateClass::NN:
                for (auto& [y1, mu1] : hex_left(q1))
                    for (auto& [y2, mu2] : hex_right(q2))
                        out.toggle(pair_id(cs->left.e_state(y1), cs->right.e_state(y2)),
                                   sub1.apply(mu1) * sub2.apply(mu2));
                break;
            default:
                break;
        }
        return out;
    }

    Elem apply_state(const State& x, const Monomial& mono_in_gsharp) const {
        return apply_state(x).scaled(subst.apply(mono_in_gsharp));
    }

    // as a ChainMap from a materialized C
    ChainMap as_chain_map(const SubcomplexC& c) const {
        ChainMap f;
        f.src = &c.complex;
        f.dst = &target.complex;
        f.subst = subst;
        f.image.resize(c.gens.size());
        for (size_t i = 0; i < c.gens.size(); ++i) f.image[i] = apply_state(c.gens[i]);
        return f;
    }
};

// ---------------------------------------------------------------------------
// quotient and quasi-isomorphism checks
// ---------------------------------------------------------------------------

// GC-(g#)/C: generators outside C with the differential projected.
inline Complex quotient_complex(const Complex& full, const std::vector<char>& in_sub) {
    Complex q;
    q.nvars = full.nvars;
    std::vector<uint32_t> newid(full.ngens(), UINT32_MAX);
    for (uint32_t i = 0; i < full.ngens(); ++i)
        if (!in_sub[i]) {
            newid[i] = (uint32_t)q.grading.size();
            q.grading.push_back(full.grading[i]);
        }
    q.diff.resize(q.grading.size());
    for (uint32_t i = 0; i < full.ngens(); ++i) {
        if (in_sub[i]) continue;
        for (const auto& t : full.diff[i].terms)
            if (!in_sub[t.gen]) q.diff[newid[i]].toggle(newid[t.gen], t.mono);
    }
    return q;
}

struct QuotientReport {
    bool acyclic = false;
    size_t residual_generators = 0;
};

inline QuotientReport quotient_acyclicity_check(const Complex& full,
                                                const std::vector<char>& in_sub) {
    Complex q = quotient_complex(full, in_sub);
    Reduction r = morse_reduce(q);
    return {r.reduced.ngens() == 0, r.reduced.ngens()};
}

// Inclusion C -> GC-(g#): a quasi-isomorphism in every bigrading exactly when
// the quotient is acyclic (all complexes are free and bounded); also
// verifiable slice by slice through homology_iso_check.
inline bool inclusion_quasi_iso_check(const ConnectSum& cs, const SubcomplexC& c,
                                      const Complex& full, const StateIndex& full_states,
                                      const std::optional<Window>& window = std::nullopt) {
    std::vector<char> in_sub(full.ngens(), 0);
    for (const auto& s : c.gens) in_sub[full_states.index.at(s)] = 1;
    if (!quotient_acyclicity_check(full, in_sub).acyclic) return false;
    if (window) {
        ChainMap incl;
        incl.src = &c.complex;
        incl.dst = &full;
        incl.subst = VarSubst::identity(full.nvars);
        incl.image.resize(c.gens.size());
        for (size_t i = 0; i < c.gens.size(); ++i)
            incl.image[i] = single(full_states.index.at(c.gens[i]), unit_monomial(full.nvars));
        if (!homology_iso_check(incl, *window)) return false;
    }
    return true;
}

} // namespace gridhom
