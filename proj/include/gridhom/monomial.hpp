#pragma once
#include <cstdint>
#include <numeric>
#include <vector>

#include "errors.hpp"

namespace gridhom {

// Monomial in U_0..U_{nvars-1}.  Exponent vector is dense: nvars <= 24 in
// practice and typical exponents stay small, so this beats a sparse map.
struct Monomial {
    std::vector<uint16_t> e;

    Monomial() = default;
    explicit Monomial(size_t nvars) : e(nvars, 0) {}

    size_t nvars() const { return e.size(); }
    int degree() const { return std::accumulate(e.begin(), e.end(), 0); }
    bool is_one() const {
        for (auto v : e)
            if (v) return false;
        return true;
    }

    Monomial operator*(const Monomial& o) const {
        if (e.size() != o.e.size()) throw SizeMismatch("monomial variable counts differ");
        Monomial r = *this;
        for (size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
        return r;
    }
    bool divides(const Monomial& o) const {
        if (e.size() != o.e.size()) throw SizeMismatch("monomial variable counts differ");
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    Monomial quotient_of(const Monomial& num) const { // num / *this
        Monomial r = num;
        for (size_t i = 0; i < e.size(); ++i) r.e[i] -= e[i];
        return r;
    }

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator<(const Monomial& o) const { return e < o.e; }
};

inline Monomial unit_monomial(size_t nvars) { return Monomial(nvars); }

inline Monomial var_power(size_t nvars, size_t i, int k = 1) {
    Monomial m(nvars);
    m.e[i] = static_cast<uint16_t>(k);
    return m;
}

// Substitution of variables: each source variable maps to a target variable
// index.  Used when a chain map changes rings (renaming, identification,
// adjoined variables simply never appear in the image).
struct VarSubst {
    std::vector<uint32_t> target_of; // source var -> target var
    size_t target_nvars = 0;

    Monomial apply(const Monomial& m) const {
        if (m.nvars() != target_of.size()) throw SizeMismatch("substitution arity");
        Monomial r(target_nvars);
        for (size_t i = 0; i < target_of.size(); ++i) r.e[target_of[i]] += m.e[i];
        return r;
    }
    static VarSubst identity(size_t nvars) {
        VarSubst s;
        s.target_nvars = nvars;
        s.target_of.resize(nvars);
        for (size_t i = 0; i < nvars; ++i) s.target_of[i] = static_cast<uint32_t>(i);
        return s;
    }
};

} // namespace gridhom
