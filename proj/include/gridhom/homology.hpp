#pragma once
#include <map>
#include <set>

#include "complex.hpp"
#include "morse.hpp"

namespace gridhom {

// Row space with incremental insertion / reduction, used to take homology
// quotients slice by slice.
class F2RowSpace {
  public:
    explicit F2RowSpace(size_t cols) : cols_(cols), words_((cols + 63) / 64) {}

    size_t dim() const { return rows_.size(); }
    size_t cols() const { return cols_; }

    void reduce(std::vector<uint64_t>& v) const {
        for (const auto& [piv, row] : rows_)
            if (bit(v, piv))
                for (size_t w = 0; w < words_; ++w) v[w] ^= row[w];
    }
    // returns false if v reduces to zero, otherwise inserts it
    bool insert(std::vector<uint64_t> v) {
        reduce(v);
        size_t piv = first_bit(v);
        if (piv == SIZE_MAX) return false;
        rows_.push_back({piv, std::move(v)});
        return true;
    }
    // forward-substitution coordinates w.r.t. insertion order (rows were
    // reduced against all earlier rows on insertion).
    std::vector<char> coords_after(const F2RowSpace& modded_out, std::vector<uint64_t> v) const {
        modded_out.reduce(v);
        std::vector<char> out(rows_.size(), 0);
        for (size_t i = 0; i < rows_.size(); ++i)
            if (bit(v, rows_[i].first)) {
                out[i] = 1;
                for (size_t w = 0; w < words_; ++w) v[w] ^= rows_[i].second[w];
            }
        if (first_bit(v) != SIZE_MAX)
            throw PreconditionViolated("vector is not in the cycle space of its slice");
        return out;
    }
    static bool bit(const std::vector<uint64_t>& v, size_t i) {
        return (v[i >> 6] >> (i & 63)) & 1u;
    }
    static size_t first_bit(const std::vector<uint64_t>& v) {
        for (size_t w = 0; w < v.size(); ++w)
            if (v[w]) return w * 64 + (size_t)__builtin_ctzll(v[w]);
        return SIZE_MAX;
    }
    const std::vector<std::pair<size_t, std::vector<uint64_t>>>& rows() const { return rows_; }

  private:
    size_t cols_, words_;
    std::vector<std::pair<size_t, std::vector<uint64_t>>> rows_;
};

// Homology of one bigrading slice, with chain-level representatives so maps
// can be pushed through.
struct SliceHomology {
    SliceBasis sb;
    F2RowSpace boundaries;
    F2RowSpace classes; // representatives, reduced against boundaries
    SliceHomology() : boundaries(0), classes(0) {}

    size_t dim() const { return classes.dim(); }
    std::vector<char> coords(const std::vector<uint64_t>& chain) const {
        return classes.coords_after(boundaries, chain);
    }
    Elem representative(size_t i) const {
        Elem e;
        const auto& row = classes.rows()[i].second;
        for (size_t b = 0; b < sb.basis.size(); ++b)
            if (F2RowSpace::bit(row, b)) e.terms.insert(sb.basis[b]);
        return e;
    }
};

inline std::vector<uint64_t> to_bits(const SliceBasis& sb, const Elem& e) {
    std::vector<uint64_t> v((sb.basis.size() + 63) / 64, 0);
    for (const auto& t : e.terms) {
        auto it = sb.index.find(t);
        if (it == sb.index.end()) throw SizeMismatch("element does not lie in the slice");
        v[it->second >> 6] ^= uint64_t(1) << (it->second & 63);
    }
    return v;
}

inline SliceHomology slice_homology(const Complex& c, int m, int a) {
    SliceHomology h;
    h.sb = slice(c, m, a);
    SliceBasis below = slice(c, m - 1, a);
    SliceBasis above = slice(c, m + 1, a);
    size_t dim = h.sb.basis.size();
    h.boundaries = F2RowSpace(dim);
    h.classes = F2RowSpace(dim);
    for (const auto& t : above.basis) {
        Elem img = c.diff[t.gen].scaled(t.mono);
        h.boundaries.insert(to_bits(h.sb, img));
    }
    // kernel of the outgoing boundary (row-vector convention: left kernel)
    F2Matrix out = boundary_matrix(c, h.sb, below);
    F2Matrix ker = out.transposed().kernel_basis();
    for (size_t r = 0; r < ker.rows(); ++r) {
        std::vector<uint64_t> v((dim + 63) / 64, 0);
        for (size_t b = 0; b < dim; ++b)
            if (ker.get(r, b)) v[b >> 6] ^= uint64_t(1) << (b & 63);
        h.boundaries.reduce(v);
        h.classes.insert(std::move(v));
    }
    return h;
}

inline size_t homology_slice(const Complex& c, int m, int a) {
    return slice_homology(c, m, a).dim();
}

// Matrix (rows = src homology basis) of the map induced by f between slices
// (m,a) of src and (m+dm, a+da) of dst.
inline F2Matrix induced_matrix(const ChainMap& f, const SliceHomology& hsrc,
                               const SliceHomology& hdst) {
    F2Matrix mat(hsrc.dim(), hdst.dim());
    for (size_t i = 0; i < hsrc.dim(); ++i) {
        Elem img = f.apply(hsrc.representative(i));
        auto co = hdst.coords(to_bits(hdst.sb, img));
        for (size_t j = 0; j < co.size(); ++j)
            if (co[j]) mat.set(i, j, true);
    }
    return mat;
}

struct Window {
    int m_lo, m_hi, a_lo, a_hi;
    bool contains(int m, int a) const {
        return m >= m_lo && m <= m_hi && a >= a_lo && a <= a_hi;
    }
};

// f must be bidegree (0,0); checks that it induces an isomorphism on
// homology in every bigrading of the window.
inline bool homology_iso_check(const ChainMap& f, const Window& w) {
    if (!is_chain_map(f)) throw NotChainMap("homology_iso_check needs a chain map");
    for (int m = w.m_lo; m <= w.m_hi; ++m)
        for (int a = w.a_lo; a <= w.a_hi; ++a) {
            SliceHomology hs = slice_homology(*f.src, m, a);
            SliceHomology hd = slice_homology(*f.dst, m, a);
            if (hs.dim() != hd.dim()) return false;
            if (hs.dim() == 0) continue;
            if (induced_matrix(f, hs, hd).rank() != hs.dim()) return false;
        }
    return true;
}

// --- F[U]-module structure ---------------------------------------------

// Decompose homology as an F[U]-module (U acts by U_0; all grid variables
// agree on homology).  Works per delta = M - 2A diagonal: going down a
// diagonal is a persistence module under multiplication by U, finite bars
// are torsion summands, bars surviving to the bottom of the probe window are
// towers once the bottom has stabilized.
inline UModule module_structure(const Complex& input, int depth = 8, int margin = 2) {
    if (depth < margin + 1) throw WindowTooSmall("probe depth must exceed stabilization margin");
    Reduction red = morse_reduce(input);
    const Complex& c = red.reduced;
    UModule result;
    if (c.ngens() == 0) return result;
    if (c.nvars == 0) throw PreconditionViolated("module structure needs at least one variable");

    std::set<int> diagonals;
    int a_top = c.grading[0].alexander, a_bot = c.grading[0].alexander;
    for (auto& g : c.grading) {
        diagonals.insert(g.maslov - 2 * g.alexander);
        a_top = std::max(a_top, g.alexander);
        a_bot = std::min(a_bot, g.alexander);
    }
    int a_lo = a_bot - depth;
    Monomial u = var_power(c.nvars, 0);

    for (int delta : diagonals) {
        int levels = a_top - a_lo + 1;
        std::vector<SliceHomology> H;
        H.reserve(levels);
        for (int a = a_top; a >= a_lo; --a) H.push_back(slice_homology(c, delta + 2 * a, a));
        // U-induced maps H[i] -> H[i+1] (one step down the diagonal)
        std::vector<F2Matrix> step(levels - 1);
        ChainMap mult;
        mult.src = &c;
        mult.dst = &c;
        mult.subst = VarSubst::identity(c.nvars);
        mult.image.resize(c.ngens());
        for (uint32_t g = 0; g < c.ngens(); ++g) mult.image[g] = single(g, u);
        for (int i = 0; i + 1 < levels; ++i) step[i] = induced_matrix(mult, H[i], H[i + 1]);

        // stabilization at the window bottom
        for (int i = levels - 1 - margin; i + 1 < levels; ++i) {
            size_t d0 = H[i].dim(), d1 = H[i + 1].dim();
            if (d0 != d1 || step[i].rank() != d0)
                throw NeedDeeperProbe("homology not stabilized at the bottom of diagonal " +
                                      std::to_string(delta) + "; increase the probe depth");
        }

        // ranks of iterated U between levels
        auto rank_between = [&](int i, int j) -> size_t { // i above j
            if (i == j) return H[i].dim();
            F2Matrix m = step[i];
            for (int t = i + 1; t < j; ++t) m = m.multiply(step[t]);
            return m.rank();
        };
        int bottom = levels - 1;
        for (int i = 0; i < levels; ++i) {
            int a_birth = a_top - i;
            auto born_alive = [&](int j) -> long {
                long r = (long)rank_between(i, j);
                if (i > 0) r -= (long)rank_between(i - 1, j);
                return r;
            };
            // towers: born at i, alive at the stabilized bottom
            long towers = born_alive(bottom);
            for (long t = 0; t < towers; ++t)
                result.towers.push_back({delta + 2 * a_birth, a_birth});
            // finite bars: born at i, last alive at j < bottom
            for (int j = i; j < bottom; ++j) {
                long cnt = born_alive(j) - born_alive(j + 1);
                for (long t = 0; t < cnt; ++t)
                    result.torsion.push_back({{delta + 2 * a_birth, a_birth}, j - i + 1});
            }
        }
    }
    result.normalize();
    return result;
}

inline int tau(const Complex& c, int depth = 8) { return module_structure(c, depth).tau(); }

} // namespace gridhom
