#pragma once
#include <vector>

#include "complex.hpp"

namespace gridhom {

// Unit-entry (algebraic Morse / Gaussian) reduction.  Cancelling a pair
// (x,y) with <dx,y> = 1 (the coefficient is a single unit monomial, which for
// homogeneous complexes is the only way a unit appears) replaces the
// differential by d'w = dw + <dw,y> dx restricted away from {x,y}, and keeps
// chain homotopy equivalences both ways:
//   iota' w = iota w + <dw,y> iota x        (reduced -> original)
//   pi'     = (x -> 0, y -> dx + y, else id) after pi.
// Over the graded-local ring F2[U_*] the result with no unit entries is a
// minimal model: it is zero iff the complex is acyclic.
struct Reduction {
    Complex reduced;
    ChainMap pi;   // original -> reduced
    ChainMap iota; // reduced -> original
    std::vector<uint32_t> surviving; // reduced gen -> original gen id
};

inline Reduction morse_reduce(const Complex& input) {
    size_t n = input.ngens();
    std::vector<Elem> diff = input.diff;
    std::vector<Elem> pi(n), iota(n);
    std::vector<char> alive(n, 1);
    for (uint32_t i = 0; i < n; ++i) {
        pi[i] = single(i, unit_monomial(input.nvars));
        iota[i] = single(i, unit_monomial(input.nvars));
    }
    // incidence: for fast lookup of who hits a given generator
    std::vector<std::vector<uint32_t>> hit_by(n);
    auto rebuild_hits = [&](uint32_t target) {
        auto& v = hit_by[target];
        v.clear();
        for (uint32_t w = 0; w < n; ++w) {
            if (!alive[w]) continue;
            for (const auto& t : diff[w].terms)
                if (t.gen == target) {
                    v.push_back(w);
                    break;
                }
        }
    };
    auto unit_coeff = [&](const Elem& e, uint32_t g) -> bool {
        for (const auto& t : e.terms)
            if (t.gen == g && t.mono.is_one()) return true;
        return false;
    };

    bool progress = true;
    while (progress) {
        progress = false;
        for (uint32_t x = 0; x < n && !progress; ++x) {
            if (!alive[x]) continue;
            for (const auto& t : diff[x].terms) {
                if (!alive[t.gen] || !t.mono.is_one()) continue;
                uint32_t y = t.gen;
                if (!unit_coeff(diff[x], y)) continue;
                // cancel (x, y)
                Elem dx = diff[x];
                alive[x] = alive[y] = 0;
                rebuild_hits(y);
                for (uint32_t w : hit_by[y]) {
                    if (w == x || !alive[w]) continue;
                    auto cs = coeff_of(diff[w], y);
                    // update iota-side inclusion before diff[w] changes
                    for (const auto& mu : cs) iota[w] += iota[x].scaled(mu);
                    for (const auto& mu : cs) diff[w] += dx.scaled(mu);
                }
                // drop dead targets everywhere they appear
                for (uint32_t w = 0; w < n; ++w) {
                    if (!alive[w]) continue;
                    Elem cleaned;
                    for (const auto& tt : diff[w].terms)
                        if (alive[tt.gen]) cleaned.terms.insert(tt);
                    diff[w] = std::move(cleaned);
                }
                // projection update: y -> dx + y (the rest of dx), x -> 0
                Elem rest = dx;
                rest.toggle(y, unit_monomial(input.nvars));
                for (uint32_t gsrc = 0; gsrc < n; ++gsrc) {
                    Elem next;
                    for (const auto& tt : pi[gsrc].terms) {
                        if (tt.gen == x) continue;
                        if (tt.gen == y)
                            next += rest.scaled(tt.mono);
                        else
                            next.toggle(tt.gen, tt.mono); // F2: may cancel an expansion term
                    }
                    pi[gsrc] = std::move(next);
                }
                progress = true;
                break;
            }
        }
    }

    Reduction r;
    std::vector<uint32_t> newid(n, UINT32_MAX);
    for (uint32_t i = 0; i < n; ++i)
        if (alive[i]) {
            newid[i] = (uint32_t)r.surviving.size();
            r.surviving.push_back(i);
        }
    r.reduced.nvars = input.nvars;
    r.reduced.grading.resize(r.surviving.size());
    r.reduced.diff.resize(r.surviving.size());
    for (uint32_t ri = 0; ri < r.surviving.size(); ++ri) {
        uint32_t oi = r.surviving[ri];
        r.reduced.grading[ri] = input.grading[oi];
        for (const auto& t : diff[oi].terms)
            r.reduced.diff[ri].toggle(newid[t.gen], t.mono);
    }
    // pi: original -> reduced ids
    r.pi.subst = VarSubst::identity(input.nvars);
    r.pi.image.resize(n);
    for (uint32_t i = 0; i < n; ++i)
        for (const auto& t : pi[i].terms) {
            if (newid[t.gen] == UINT32_MAX)
                throw ZeroBlockViolated("projection leaks onto a cancelled generator");
            r.pi.image[i].toggle(newid[t.gen], t.mono);
        }
    // iota: reduced -> original ids
    r.iota.subst = VarSubst::identity(input.nvars);
    r.iota.image.resize(r.surviving.size());
    for (uint32_t ri = 0; ri < r.surviving.size(); ++ri) r.iota.image[ri] = iota[r.surviving[ri]];
    return r;
}

// Acyclicity over the graded-local ring: reduce and check nothing is left.
inline bool is_acyclic(const Complex& c) { return morse_reduce(c).reduced.ngens() == 0; }

} // namespace gridhom
