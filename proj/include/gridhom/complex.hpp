#pragma once
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "f2matrix.hpp"
#include "module_element.hpp"
#include "state.hpp"
#include "umodule.hpp"

namespace gridhom {

// Free bigraded F2[U_0..U_{nvars-1}]-module with a differential, given by
// generator bigradings and the image of each generator.
struct Complex {
    size_t nvars = 0;
    std::vector<Bigrading> grading;
    std::vector<Elem> diff;

    size_t ngens() const { return grading.size(); }

    Elem apply_diff(const Elem& e) const {
        Elem out;
        for (const auto& t : e.terms) out += diff[t.gen].scaled(t.mono);
        return out;
    }

    bool d_squared_is_zero() const {
        for (size_t i = 0; i < ngens(); ++i)
            if (!apply_diff(diff[i]).is_zero()) return false;
        return true;
    }

    // every term of the differential must drop Maslov by 1 and keep Alexander
    bool is_homogeneous() const {
        for (size_t i = 0; i < ngens(); ++i)
            for (const auto& t : diff[i].terms) {
                int deg = t.mono.degree();
                if (grading[t.gen].maslov - 2 * deg != grading[i].maslov - 1) return false;
                if (grading[t.gen].alexander - deg != grading[i].alexander) return false;
            }
        return true;
    }
};

struct StateIndex {
    std::vector<State> states;
    std::map<State, uint32_t> index;
};

inline std::pair<Complex, StateIndex> build_minus_complex(const GridDiagram& g) {
    validate(g);
    StateIndex si;
    si.states = enumerate_states(g);
    for (uint32_t i = 0; i < si.states.size(); ++i) si.index[si.states[i]] = i;
    Complex c;
    c.nvars = (size_t)g.n;
    c.grading.resize(si.states.size());
    c.diff.resize(si.states.size());
    for (uint32_t i = 0; i < si.states.size(); ++i) {
        c.grading[i] = {maslov(g, si.states[i]), alexander(g, si.states[i])};
        for (auto& t : differential_terms(g, si.states[i]))
            c.diff[i].toggle(si.index.at(t.y), t.mono);
    }
    return {std::move(c), std::move(si)};
}

// --- slices ------------------------------------------------------------

// Basis of the (m,a) bigrading slice as an F2 vector space: generator g
// contributes the monomials of degree k = A(g) - a when M(g) - 2k = m.
struct SliceBasis {
    std::vector<Term> basis;
    std::map<Term, size_t> index;
};

namespace detail {
inline void monomials_of_degree(size_t nvars, int deg, Monomial& cur, size_t from,
                                std::vector<Monomial>& out) {
    if (deg == 0) {
        out.push_back(cur);
        return;
    }
    if (from == nvars) return;
    for (int take = 0; take <= deg; ++take) {
        cur.e[from] = (uint16_t)take;
        monomials_of_degree(nvars, deg - take, cur, from + 1, out);
    }
    cur.e[from] = 0;
}
} // namespace detail

inline std::vector<Monomial> monomials_of_degree(size_t nvars, int deg) {
    std::vector<Monomial> out;
    Monomial cur(nvars);
    if (deg < 0) return out;
    if (nvars == 0) {
        if (deg == 0) out.push_back(cur);
        return out;
    }
    detail::monomials_of_degree(nvars, deg, cur, 0, out);
    return out;
}

inline SliceBasis slice(const Complex& c, int m, int a) {
    SliceBasis sb;
    for (uint32_t g = 0; g < c.ngens(); ++g) {
        int k = c.grading[g].alexander - a;
        if (k < 0) continue;
        if (c.grading[g].maslov - 2 * k != m) continue;
        for (auto& mono : monomials_of_degree(c.nvars, k)) sb.basis.push_back({g, mono});
    }
    for (size_t i = 0; i < sb.basis.size(); ++i) sb.index[sb.basis[i]] = i;
    return sb;
}

// Matrix (rows = src basis) of a linear map given per-basis-term images.
inline F2Matrix matrix_of(const SliceBasis& src, const SliceBasis& dst,
                          const std::function<Elem(const Term&)>& image) {
    F2Matrix mat(src.basis.size(), dst.basis.size());
    for (size_t i = 0; i < src.basis.size(); ++i) {
        Elem img = image(src.basis[i]);
        for (const auto& t : img.terms) {
            auto it = dst.index.find(t);
            if (it == dst.index.end())
                throw SizeMismatch("image term leaves the destination slice");
            mat.flip(i, it->second);
        }
    }
    return mat;
}

inline F2Matrix boundary_matrix(const Complex& c, const SliceBasis& src, const SliceBasis& dst) {
    return matrix_of(src, dst, [&](const Term& t) { return c.diff[t.gen].scaled(t.mono); });
}

// --- ring operations ----------------------------------------------------

// substitute variables (identify / rename); gradings unchanged.
inline Complex substitute(const Complex& c, const VarSubst& s) {
    Complex r;
    r.nvars = s.target_nvars;
    r.grading = c.grading;
    r.diff.resize(c.ngens());
    for (size_t i = 0; i < c.ngens(); ++i)
        for (const auto& t : c.diff[i].terms) r.diff[i].toggle(t.gen, s.apply(t.mono));
    return r;
}

// set U_j equal to U_i (j folded onto i, variable count drops by one).
inline Complex set_variables_equal(const Complex& c, size_t i, size_t j) {
    if (i == j) throw VariableClash("cannot identify a variable with itself");
    if (i >= c.nvars || j >= c.nvars) throw SizeMismatch("variable index out of range");
    VarSubst s;
    s.target_nvars = c.nvars - 1;
    s.target_of.resize(c.nvars);
    size_t next = 0;
    std::vector<uint32_t> newidx(c.nvars, 0);
    for (size_t v = 0; v < c.nvars; ++v)
        if (v != j) newidx[v] = (uint32_t)next++;
    for (size_t v = 0; v < c.nvars; ++v) s.target_of[v] = (v == j) ? newidx[i] : newidx[v];
    return substitute(c, s);
}

// Tensor product over the shared variable: var v1 of a is identified with
// var v2 of b; generator (i,j) has id i*b.ngens()+j.
struct TensorResult {
    Complex complex;
    VarSubst a_vars; // a's ring -> product ring
    VarSubst b_vars;
    size_t b_ngens = 0;
    uint32_t pair_id(uint32_t i, uint32_t j) const { return i * (uint32_t)b_ngens + j; }
};

inline TensorResult tensor(const Complex& a, const Complex& b, size_t v1, size_t v2) {
    if (v1 >= a.nvars || v2 >= b.nvars) throw SizeMismatch("shared variable out of range");
    TensorResult r;
    r.b_ngens = b.ngens();
    size_t nv = a.nvars + b.nvars - 1;
    r.a_vars.target_nvars = nv;
    r.a_vars.target_of.resize(a.nvars);
    for (size_t v = 0; v < a.nvars; ++v) r.a_vars.target_of[v] = (uint32_t)v;
    r.b_vars.target_nvars = nv;
    r.b_vars.target_of.resize(b.nvars);
    size_t next = a.nvars;
    for (size_t v = 0; v < b.nvars; ++v)
        r.b_vars.target_of[v] = (v == v2) ? (uint32_t)v1 : (uint32_t)next++;
    Complex& c = r.complex;
    c.nvars = nv;
    c.grading.resize(a.ngens() * b.ngens());
    c.diff.resize(a.ngens() * b.ngens());
    for (uint32_t i = 0; i < a.ngens(); ++i)
        for (uint32_t j = 0; j < b.ngens(); ++j) {
            uint32_t id = r.pair_id(i, j);
            c.grading[id] = {a.grading[i].maslov + b.grading[j].maslov,
                             a.grading[i].alexander + b.grading[j].alexander};
            for (const auto& t : a.diff[i].terms)
                c.diff[id].toggle(r.pair_id(t.gen, j), r.a_vars.apply(t.mono));
            for (const auto& t : b.diff[j].terms)
                c.diff[id].toggle(r.pair_id(i, t.gen), r.b_vars.apply(t.mono));
        }
    return r;
}

// --- chain maps -----------------------------------------------------------

struct ChainMap {
    const Complex* src = nullptr;
    const Complex* dst = nullptr;
    VarSubst subst;              // src ring -> dst ring
    std::vector<Elem> image;     // per src generator, element of dst

    Elem apply(const Elem& e) const {
        Elem out;
        for (const auto& t : e.terms) out += image[t.gen].scaled(subst.apply(t.mono));
        return out;
    }
};

inline bool is_chain_map(const ChainMap& f) {
    for (size_t i = 0; i < f.src->ngens(); ++i) {
        Elem lhs = f.dst->apply_diff(f.image[i]);
        Elem rhs = f.apply(f.src->diff[i]);
        if (!(lhs == rhs)) return false;
    }
    return true;
}

// common bidegree of all terms of the map; nullopt for the zero map
inline std::optional<std::pair<int, int>> map_bidegree(const ChainMap& f) {
    std::optional<std::pair<int, int>> bid;
    for (size_t i = 0; i < f.src->ngens(); ++i)
        for (const auto& t : f.image[i].terms) {
            int dm = f.dst->grading[t.gen].maslov - 2 * t.mono.degree() - f.src->grading[i].maslov;
            int da = f.dst->grading[t.gen].alexander - t.mono.degree() -
                     f.src->grading[i].alexander;
            if (!bid)
                bid = {dm, da};
            else if (*bid != std::make_pair(dm, da))
                throw NotChainMap("map is not bigrading-homogeneous");
        }
    return bid;
}

// Mapping cone of f: gens = src gens (shifted) then dst gens.  The source
// copy is shifted so the total differential has bidegree (-1,0): with f of
// bidegree (dm,da), source generator gradings move by (dm+1, da).
struct ConeResult {
    Complex complex;
    size_t src_ngens = 0;
    uint32_t src_id(uint32_t i) const { return i; }
    uint32_t dst_id(uint32_t j) const { return (uint32_t)src_ngens + j; }
};

inline ConeResult cone(const ChainMap& f) {
    if (f.subst.target_nvars != f.dst->nvars || f.subst.target_of.size() != f.src->nvars)
        throw VariableClash("cone needs a substitution matching both rings");
    // cone lives over the destination ring; the source differential is pushed
    // through the substitution (valid whenever the substitution is a ring
    // isomorphism or the check is slice-wise over F2, which is how we use it)
    auto bid = map_bidegree(f);
    int dm = bid ? bid->first : -1, da = bid ? bid->second : 0;
    ConeResult r;
    r.src_ngens = f.src->ngens();
    Complex& c = r.complex;
    c.nvars = f.dst->nvars;
    c.grading.resize(f.src->ngens() + f.dst->ngens());
    c.diff.resize(c.grading.size());
    for (uint32_t i = 0; i < f.src->ngens(); ++i) {
        c.grading[r.src_id(i)] = {f.src->grading[i].maslov + dm + 1,
                                  f.src->grading[i].alexander + da};
        for (const auto& t : f.src->diff[i].terms)
            c.diff[r.src_id(i)].toggle(r.src_id(t.gen), f.subst.apply(t.mono));
        for (const auto& t : f.image[i].terms) c.diff[r.src_id(i)].toggle(r.dst_id(t.gen), t.mono);
    }
    for (uint32_t j = 0; j < f.dst->ngens(); ++j) {
        c.grading[r.dst_id(j)] = f.dst->grading[j];
        for (const auto& t : f.dst->diff[j].terms)
            c.diff[r.dst_id(j)].toggle(r.dst_id(t.gen), t.mono);
    }
    return r;
}

} // namespace gridhom
