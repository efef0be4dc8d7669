#pragma once
#include <cstdint>
#include <set>
#include <utility>

#include "monomial.hpp"

namespace gridhom {

// Element of a free F2[U_*]-module with basis indexed by generator ids.
// F2 coefficients: a term is present (coeff 1) or absent, so the element is
// just a set of (generator, monomial) pairs and addition is symmetric
// difference.
struct Term {
    uint32_t gen;
    Monomial mono;
    bool operator<(const Term& o) const {
        if (gen != o.gen) return gen < o.gen;
        return mono < o.mono;
    }
    bool operator==(const Term& o) const { return gen == o.gen && mono == o.mono; }
};

struct Elem {
    std::set<Term> terms;

    bool is_zero() const { return terms.empty(); }
    size_t size() const { return terms.size(); }

    void toggle(const Term& t) {
        auto it = terms.find(t);
        if (it == terms.end())
            terms.insert(t);
        else
            terms.erase(it);
    }
    void toggle(uint32_t gen, const Monomial& m) { toggle(Term{gen, m}); }

    Elem& operator+=(const Elem& o) {
        for (const auto& t : o.terms) toggle(t);
        return *this;
    }
    Elem operator+(const Elem& o) const {
        Elem r = *this;
        r += o;
        return r;
    }
    bool operator==(const Elem& o) const { return terms == o.terms; }

    Elem scaled(const Monomial& m) const {
        Elem r;
        for (const auto& t : terms) r.terms.insert(Term{t.gen, t.mono * m});
        return r;
    }
};

inline Elem single(uint32_t gen, const Monomial& m) {
    Elem e;
    e.terms.insert(Term{gen, m});
    return e;
}

// coefficient of generator g (a set of monomials)
inline std::set<Monomial> coeff_of(const Elem& e, uint32_t g) {
    std::set<Monomial> r;
    for (const auto& t : e.terms)
        if (t.gen == g) r.insert(t.mono);
    return r;
}

} // namespace gridhom
