#pragma once
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"

namespace gridhom {

// n x n toroidal grid diagram.  Everything internal is 0-based: o[c] / x[c]
// is the row of the O / X marking in column c, the square (c,r) is
// [c,c+1] x [r,r+1], markings sit at square centers.  1-based (col,row)
// pairs appear only in the text format and in error messages.
struct GridDiagram {
    int n = 0;
    std::vector<int> o; // column -> row of O
    std::vector<int> x; // column -> row of X
};

inline void check_permutation(const std::vector<int>& p, int n, const char* what) {
    if ((int)p.size() != n) throw SizeMismatch(std::string(what) + " length != n");
    std::vector<char> seen(n, 0);
    for (int v : p) {
        if (v < 0 || v >= n)
            throw NotPermutation(std::string(what) + " value " + std::to_string(v + 1) +
                                 " out of range");
        if (seen[v]++)
            throw NotPermutation(std::string(what) + " repeats row " + std::to_string(v + 1));
    }
}

inline bool is_knot(const GridDiagram& g) {
    // follow the link: column -> O row -> column of X in that row -> ...
    std::vector<int> x_inv(g.n);
    for (int c = 0; c < g.n; ++c) x_inv[g.x[c]] = c;
    int c = 0, steps = 0;
    do {
        c = x_inv[g.o[c]];
        ++steps;
    } while (c != 0 && steps <= g.n);
    return steps == g.n;
}

inline void validate(const GridDiagram& g, bool require_knot = true) {
    if (g.n <= 0) throw SizeMismatch("grid size must be positive");
    check_permutation(g.o, g.n, "O marking");
    check_permutation(g.x, g.n, "X marking");
    for (int c = 0; c < g.n; ++c)
        if (g.o[c] == g.x[c])
            throw SharedSquare("O and X share square (col " + std::to_string(c + 1) + ", row " +
                               std::to_string(g.o[c] + 1) + ")");
    if (require_knot && !is_knot(g))
        throw NotAKnot("markings trace more than one link component");
}

// Text format: one line per row, top row first, cells 'O', 'X' or '.'
// separated by optional spaces.
inline GridDiagram parse_text(const std::string& text) {
    std::vector<std::string> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::string cells;
        for (char ch : line) {
            if (ch == ' ' || ch == '\t' || ch == '\r') continue;
            if (ch == '#') break; // trailing comment
            cells.push_back(ch);
        }
        if (!cells.empty()) rows.push_back(cells);
    }
    int n = (int)rows.size();
    if (n == 0) throw RaggedRows("no rows");
    GridDiagram g;
    g.n = n;
    g.o.assign(n, -1);
    g.x.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        if ((int)rows[i].size() != n)
            throw RaggedRows("row " + std::to_string(i + 1) + " has " +
                             std::to_string(rows[i].size()) + " cells, expected " +
                             std::to_string(n));
        int r = n - 1 - i; // top line is the highest row
        for (int c = 0; c < n; ++c) {
            char ch = rows[i][c];
            if (ch == '.' || ch == '-') continue;
            if (ch == 'O' || ch == 'o') {
                if (g.o[c] != -1)
                    throw NotPermutation("column " + std::to_string(c + 1) + " has two O's");
                g.o[c] = r;
            } else if (ch == 'X' || ch == 'x') {
                if (g.x[c] != -1)
                    throw NotPermutation("column " + std::to_string(c + 1) + " has two X's");
                g.x[c] = r;
            } else {
                throw BadCharacter(std::string("unexpected '") + ch + "' at (col " +
                                   std::to_string(c + 1) + ", row " + std::to_string(r + 1) + ")");
            }
        }
    }
    for (int c = 0; c < n; ++c) {
        if (g.o[c] == -1) throw NotPermutation("column " + std::to_string(c + 1) + " has no O");
        if (g.x[c] == -1) throw NotPermutation("column " + std::to_string(c + 1) + " has no X");
    }
    validate(g, false);
    return g;
}

inline std::string render_text(const GridDiagram& g) {
    std::string out;
    for (int r = g.n - 1; r >= 0; --r) {
        for (int c = 0; c < g.n; ++c) {
            if (c) out += ' ';
            out += (g.o[c] == r) ? 'O' : (g.x[c] == r) ? 'X' : '.';
        }
        out += '\n';
    }
    return out;
}

// Cyclic shift of the planar realization: column c -> c + dc, row r -> r + dr.
inline GridDiagram translate(const GridDiagram& g, int dc, int dr) {
    auto norm = [&](int v) { return ((v % g.n) + g.n) % g.n; };
    GridDiagram r;
    r.n = g.n;
    r.o.assign(g.n, 0);
    r.x.assign(g.n, 0);
    for (int c = 0; c < g.n; ++c) {
        r.o[norm(c + dc)] = norm(g.o[c] + dr);
        r.x[norm(c + dc)] = norm(g.x[c] + dr);
    }
    return r;
}

// Mirror (transpose): exchanges the roles of rows and columns.
// Reflection across a vertical line.  Vertical segments stay vertical, so
// the over/under convention is preserved and the knot is genuinely mirrored.
// (Transposing instead would flip the crossing convention too and give back
// the same knot.)
inline GridDiagram mirror(const GridDiagram& g) {
    GridDiagram r;
    r.n = g.n;
    r.o.assign(g.n, 0);
    r.x.assign(g.n, 0);
    for (int c = 0; c < g.n; ++c) {
        r.o[g.n - 1 - c] = g.o[c];
        r.x[g.n - 1 - c] = g.x[c];
    }
    return r;
}

// Variable labels: U_i is the O in column i.  Returned as the (col,row)
// positions in variable order, so reports can name variables consistently.
inline std::vector<std::pair<int, int>> canonical_marking_labels(const GridDiagram& g) {
    std::vector<std::pair<int, int>> labels;
    labels.reserve(g.n);
    for (int c = 0; c < g.n; ++c) labels.push_back({c, g.o[c]});
    return labels;
}

// --- connected-sum plumbing -------------------------------------------------

// Left summand gets stabilized at its top-left X (which must sit in the
// corner square): the corner square is subdivided at the torus seam, which
// adds a new rightmost column and bottom row.  The old corner X is replaced
// by X's at the bottom-left and top-right corners and an O in the new
// bottom-right corner.
inline GridDiagram prepare_summand_left(const GridDiagram& g) {
    validate(g);
    int s = g.n;
    if (g.x[0] != s - 1)
        throw PreconditionViolated(
            "left summand needs its X in the top-left corner square; translate first");
    GridDiagram r;
    r.n = s + 1;
    r.o.assign(r.n, 0);
    r.x.assign(r.n, 0);
    for (int c = 0; c < s; ++c) r.o[c] = g.o[c] + 1;
    r.o[s] = 0;
    r.x[0] = 0;
    for (int c = 1; c < s; ++c) r.x[c] = g.x[c] + 1;
    r.x[s] = s;
    validate(r);
    return r;
}

// Right summand: stabilized at its bottom-right corner X; new leftmost
// column and top row, O in the new top-left corner, X's at both diagonal
// corners.
inline GridDiagram prepare_summand_right(const GridDiagram& g) {
    validate(g);
    int s = g.n;
    if (g.x[s - 1] != 0)
        throw PreconditionViolated(
            "right summand needs its X in the bottom-right corner square; translate first");
    GridDiagram r;
    r.n = s + 1;
    r.o.assign(r.n, 0);
    r.x.assign(r.n, 0);
    r.o[0] = s;
    for (int c = 1; c <= s; ++c) r.o[c] = g.o[c - 1];
    r.x[0] = 0;
    for (int c = 1; c < s; ++c) r.x[c] = g.x[c - 1];
    r.x[s] = s;
    validate(r);
    return r;
}

// Translate so the X of choice sits in the corner required by the prepare
// steps.
inline GridDiagram translate_x_to_top_left(const GridDiagram& g, int which_col = 0) {
    return translate(g, -which_col, g.n - 1 - g.x[which_col]);
}
inline GridDiagram translate_x_to_bottom_right(const GridDiagram& g, int which_col = 0) {
    return translate(g, g.n - 1 - which_col, -g.x[which_col]);
}

inline bool is_prepared_left(const GridDiagram& g) {
    int m = g.n;
    return m >= 3 && g.x[0] == 0 && g.x[m - 1] == m - 1 && g.o[m - 1] == 0;
}
inline bool is_prepared_right(const GridDiagram& g) {
    int k = g.n;
    return k >= 3 && g.x[0] == 0 && g.x[k - 1] == k - 1 && g.o[0] == k - 1;
}

// Glue two prepared summands into the (m+k) x (m+k) connected-sum diagram:
// the left one fills the NW block (columns 0..m-1, rows k..m+k-1), the right
// one the SE block, and the two stabilization O's swap rows, which is what
// joins the two knots.
inline GridDiagram connect(const GridDiagram& g1p, const GridDiagram& g2p) {
    if (!is_prepared_left(g1p))
        throw NotStabilized("first argument is not a prepared left summand");
    if (!is_prepared_right(g2p))
        throw NotStabilized("second argument is not a prepared right summand");
    int m = g1p.n, k = g2p.n, N = m + k;
    GridDiagram g;
    g.n = N;
    g.o.assign(N, 0);
    g.x.assign(N, 0);
    for (int c = 0; c < m; ++c) {
        g.o[c] = g1p.o[c] + k;
        g.x[c] = g1p.x[c] + k;
    }
    for (int c = 0; c < k; ++c) {
        g.o[m + c] = g2p.o[c];
        g.x[m + c] = g2p.x[c];
    }
    g.o[m - 1] = k - 1; // the row swap of the two stabilization O's
    g.o[m] = k;
    validate(g);
    return g;
}

struct ConnectInfo {
    int m = 0; // size of the left (NW) block
    int k = 0; // size of the right (SE) block
};

// Recognize a diagram of the exact shape produced by connect().
inline ConnectInfo detect_connect(const GridDiagram& g) {
    int N = g.n;
    for (int m = 3; m <= N - 3; ++m) {
        int k = N - m;
        bool ok = true;
        for (int c = 0; c < N && ok; ++c) {
            bool hi = g.x[c] >= k;
            if (hi != (c < m)) ok = false;
            int want_hi_o = (c < m) ? 1 : 0;
            if (c == m - 1 || c == m) want_hi_o ^= 1;
            if (((g.o[c] >= k) ? 1 : 0) != want_hi_o) ok = false;
        }
        if (!ok) continue;
        if (g.o[m - 1] != k - 1 || g.o[m] != k) continue;
        if (g.x[0] != k || g.x[m - 1] != N - 1 || g.x[m] != 0 || g.x[N - 1] != k - 1) continue;
        GridDiagram g1p, g2p;
        g1p.n = m;
        g2p.n = k;
        g1p.o.assign(m, 0);
        g1p.x.assign(m, 0);
        g2p.o.assign(k, 0);
        g2p.x.assign(k, 0);
        for (int c = 0; c < m; ++c) {
            g1p.o[c] = g.o[c] - k;
            g1p.x[c] = g.x[c] - k;
        }
        g1p.o[m - 1] = 0;
        for (int c = 0; c < k; ++c) {
            g2p.o[c] = g.o[m + c];
            g2p.x[c] = g.x[m + c];
        }
        g2p.o[0] = k - 1;
        if (is_prepared_left(g1p) && is_prepared_right(g2p)) return {m, k};
    }
    throw NotAConnectDiagram("diagram does not have the glued two-block shape");
}

// Undo the prepare steps (used by the destabilization maps).
inline GridDiagram destabilize_left(const GridDiagram& gp) {
    if (!is_prepared_left(gp)) throw NotStabilized("not a prepared left summand");
    int s = gp.n - 1;
    GridDiagram g;
    g.n = s;
    g.o.assign(s, 0);
    g.x.assign(s, 0);
    for (int c = 0; c < s; ++c) g.o[c] = gp.o[c] - 1;
    g.x[0] = s - 1;
    for (int c = 1; c < s; ++c) g.x[c] = gp.x[c] - 1;
    validate(g);
    return g;
}
inline GridDiagram destabilize_right(const GridDiagram& gp) {
    if (!is_prepared_right(gp)) throw NotStabilized("not a prepared right summand");
    int s = gp.n - 1;
    GridDiagram g;
    g.n = s;
    g.o.assign(s, 0);
    g.x.assign(s, 0);
    for (int c = 0; c < s; ++c) g.o[c] = gp.o[c + 1];
    for (int c = 0; c < s - 1; ++c) g.x[c] = gp.x[c + 1];
    g.x[s - 1] = 0;
    validate(g);
    return g;
}

} // namespace gridhom
