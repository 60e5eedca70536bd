#include "lrkit/plactic.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace lrkit {

namespace {

// Dense working grid; 0 means empty.
struct Grid {
    int d, width;
    std::vector<int> vals;
    std::vector<char> tags;  // 0 empty, 1 first member, 2 second member

    Grid(int dd, int ww) : d(dd), width(ww), vals(dd * ww, 0), tags(dd * ww, 0) {}
    int idx(int r, int c) const { return (r - 1) * width + (c - 1); }
    bool in(int r, int c) const { return r >= 1 && r <= d && c >= 1 && c <= width; }
    int val(int r, int c) const { return in(r, c) ? vals[idx(r, c)] : 0; }
    char tag(int r, int c) const { return in(r, c) ? tags[idx(r, c)] : 0; }
    void set(int r, int c, int v, char t) {
        vals[idx(r, c)] = v;
        tags[idx(r, c)] = t;
    }
    void clear(int r, int c) {
        vals[idx(r, c)] = 0;
        tags[idx(r, c)] = 0;
    }
};

void fill_grid(Grid& g, const SkewTableau& t, char tag) {
    for (int r = 1; r <= t.box().d; ++r)
        for (int c = t.shape.row_begin(r); c <= t.shape.row_end(r); ++c) g.set(r, c, t.at(r, c), tag);
}

// One contracting jeu de taquin slide of the `tag` member into the hole at
// (r, c); returns the final hole position.  Ties go north for column-strict
// content and east for row-strict content.
std::pair<int, int> slide_hole(Grid& g, int r, int c, char tag, bool row_strict) {
    for (;;) {
        bool n = g.tag(r + 1, c) == tag;
        bool e = g.tag(r, c + 1) == tag;
        if (!n && !e) return {r, c};
        bool take_north;
        if (n && e) {
            int a = g.val(r + 1, c), b = g.val(r, c + 1);
            if (a != b)
                take_north = a < b;
            else
                take_north = !row_strict;
        } else {
            take_north = n;
        }
        if (take_north) {
            g.set(r, c, g.val(r + 1, c), tag);
            g.clear(r + 1, c);
            ++r;
        } else {
            g.set(r, c, g.val(r, c + 1), tag);
            g.clear(r, c + 1);
            ++c;
        }
    }
}

// Reverse slide: ties go south (column-strict) or west (row-strict).
std::pair<int, int> slide_hole_back(Grid& g, int r, int c, char tag, bool row_strict) {
    for (;;) {
        bool s = g.tag(r - 1, c) == tag;
        bool w = g.tag(r, c - 1) == tag;
        if (!s && !w) return {r, c};
        bool take_south;
        if (s && w) {
            int a = g.val(r - 1, c), b = g.val(r, c - 1);
            if (a != b)
                take_south = a > b;
            else
                take_south = !row_strict;
        } else {
            take_south = s;
        }
        if (take_south) {
            g.set(r, c, g.val(r - 1, c), tag);
            g.clear(r - 1, c);
            --r;
        } else {
            g.set(r, c, g.val(r, c - 1), tag);
            g.clear(r, c - 1);
            --c;
        }
    }
}

SkewTableau extract_between(const Grid& g, char tag, const Partition& inner, const Partition& outer,
                            int alphabet, bool row_strict) {
    const auto& box = inner.box;
    std::vector<std::vector<int>> rows(box.d);
    for (int r = 1; r <= box.d; ++r)
        for (int c = 1; c <= box.width; ++c) {
            bool inside = c > inner.part(r) && c <= outer.part(r);
            if ((g.tag(r, c) == tag) != inside)
                throw std::logic_error("switched member does not fill a skew shape");
            if (inside) rows[r - 1].push_back(g.val(r, c));
        }
    return SkewTableau(SkewShape(outer, inner), rows, alphabet, row_strict);
}

}  // namespace

BurgeArray::BurgeArray(Word t, Word b) : top(std::move(t)), bottom(std::move(b)) {
    if (top.length() != bottom.length()) throw std::invalid_argument("biword rows differ in length");
    for (int i = 0; i + 1 < top.length(); ++i) {
        if (top.letters[i] > top.letters[i + 1]) throw std::invalid_argument("top row must weakly increase");
        if (top.letters[i] == top.letters[i + 1] && bottom.letters[i] < bottom.letters[i + 1])
            throw std::invalid_argument("bottom row must weakly decrease within equal top letters");
    }
}

bool same_filling(const SkewTableau& a, const SkewTableau& b) {
    auto sig = [](const SkewTableau& t) {
        std::vector<std::pair<int, std::vector<int>>> rows;
        for (int r = 1; r <= t.box().d; ++r)
            if (!t.rows[r - 1].empty()) rows.push_back({t.shape.inner.part(r), t.rows[r - 1]});
        return rows;
    };
    return sig(a) == sig(b);
}

SkewTableau contracting_slide(const SkewTableau& t, int row, int col) {
    const auto& sh = t.shape;
    if (row < 1 || row > t.box().d || col < 1 || col != sh.inner.part(row) ||
        sh.inner.part(row + 1) >= col)
        throw std::invalid_argument("not an inside corner");
    Grid g(t.box().d, t.box().width);
    fill_grid(g, t, 2);
    auto [hr, hc] = slide_hole(g, row, col, 2, t.row_strict);
    std::vector<int> inner = t.shape.inner.parts, outer = t.shape.outer.parts;
    inner[row - 1] -= 1;
    outer[hr - 1] = hc - 1;
    Partition in(inner, t.box()), out(outer, t.box());
    std::vector<std::vector<int>> rows(t.box().d);
    for (int r = 1; r <= t.box().d; ++r)
        for (int c = in.part(r) + 1; c <= out.part(r); ++c) rows[r - 1].push_back(g.val(r, c));
    return SkewTableau(SkewShape(out, in), rows, t.alphabet_size, t.row_strict);
}

SkewTableau expanding_slide(const SkewTableau& t, int row, int col) {
    const auto& sh = t.shape;
    bool addable = col == sh.outer.part(row) + 1 && col <= t.box().width &&
                   (row == 1 || sh.outer.part(row - 1) >= col) && row <= t.box().d;
    if (!addable) throw std::invalid_argument("not an outside corner");
    Grid g(t.box().d, t.box().width);
    fill_grid(g, t, 2);
    auto [hr, hc] = slide_hole_back(g, row, col, 2, t.row_strict);
    std::vector<int> inner = t.shape.inner.parts, outer = t.shape.outer.parts;
    outer[row - 1] += 1;
    inner[hr - 1] = hc;
    Partition in(inner, t.box()), out(outer, t.box());
    std::vector<std::vector<int>> rows(t.box().d);
    for (int r = 1; r <= t.box().d; ++r)
        for (int c = in.part(r) + 1; c <= out.part(r); ++c) rows[r - 1].push_back(g.val(r, c));
    return SkewTableau(SkewShape(out, in), rows, t.alphabet_size, t.row_strict);
}

SkewTableau rectify(const SkewTableau& t) {
    SkewTableau cur = t;
    while (!cur.shape.inner.empty()) {
        int pick_row = 0, pick_col = 0;
        for (int r = 1; r <= cur.box().d; ++r) {
            int c = cur.shape.inner.part(r);
            if (c >= 1 && cur.shape.inner.part(r + 1) < c) {
                if (pick_col == 0 || c < pick_col || (c == pick_col && r > pick_row)) {
                    pick_row = r;
                    pick_col = c;
                }
            }
        }
        cur = contracting_slide(cur, pick_row, pick_col);
    }
    return cur;
}

SkewTableau arectify(const SkewTableau& t) {
    SkewTableau cur = t;
    for (;;) {
        int pick_row = 0, pick_col = 0;
        for (int r = 1; r <= cur.box().d; ++r) {
            int c = cur.shape.outer.part(r) + 1;
            if (c > cur.box().width) continue;
            if (r > 1 && cur.shape.outer.part(r - 1) < c) continue;
            if (pick_col == 0 || c > pick_col || (c == pick_col && r < pick_row)) {
                pick_row = r;
                pick_col = c;
            }
        }
        if (pick_row == 0) return cur;
        cur = expanding_slide(cur, pick_row, pick_col);
    }
}

namespace {

// Straight tableau from columns, in a canonical minimal rectangle.
SkewTableau from_columns(const std::vector<std::vector<int>>& cols, int alphabet) {
    int nrows = 0;
    for (const auto& c : cols) nrows = std::max(nrows, static_cast<int>(c.size()));
    nrows = std::max(nrows, 1);
    int wid = std::max(static_cast<int>(cols.size()), 1);
    AmbientRectangle box{nrows, wid};
    std::vector<std::vector<int>> rows(nrows);
    std::vector<int> outer(nrows, 0);
    for (int r = 0; r < nrows; ++r)
        for (size_t c = 0; c < cols.size(); ++c)
            if (r < static_cast<int>(cols[c].size())) {
                rows[r].push_back(cols[c][r]);
                outer[r] = static_cast<int>(c) + 1;
            }
    Partition out(outer, box), in(std::vector<int>{}, box);
    return SkewTableau(SkewShape(out, in), rows, std::max(alphabet, 1));
}

}  // namespace

TableauPair burge_insert_biword(const BurgeArray& b) {
    std::vector<std::vector<int>> pcols, qcols;
    for (int k = 0; k < b.bottom.length(); ++k) {
        int x = b.bottom.letters[k];
        size_t j = 0;
        for (;;) {
            if (j == pcols.size()) pcols.push_back({});
            auto& col = pcols[j];
            auto it = std::lower_bound(col.begin(), col.end(), x);
            if (it == col.end()) {
                col.push_back(x);
                if (qcols.size() <= j) qcols.push_back({});
                qcols[j].push_back(b.top.letters[k]);
                break;
            }
            std::swap(x, *it);
            ++j;
        }
    }
    return {from_columns(pcols, b.bottom.alphabet_size), from_columns(qcols, b.top.alphabet_size)};
}

TableauPair burge_insert(const Word& w) {
    std::vector<int> top(w.length());
    for (int i = 0; i < w.length(); ++i) top[i] = i + 1;
    return burge_insert_biword(BurgeArray(Word(top, std::max(w.length(), 1)), w));
}

BurgeArray burge_inverse(const TableauPair& pair) {
    if (!(pair.p.shape.outer.trimmed() == pair.q.shape.outer.trimmed()))
        throw std::invalid_argument("tableau pair shapes differ");
    // work with columns of p; q tells us the reverse insertion order
    std::vector<std::vector<int>> pcols;
    for (int c = 1; c <= pair.p.shape.outer.part(1); ++c) {
        std::vector<int> col;
        for (int r = 1; r <= pair.p.box().d; ++r)
            if (pair.p.shape.contains(r, c)) col.push_back(pair.p.at(r, c));
        pcols.push_back(col);
    }
    struct Cell {
        int label, r, c;
    };
    std::vector<Cell> cells;
    for (int r = 1; r <= pair.q.box().d; ++r)
        for (int c = pair.q.shape.row_begin(r); c <= pair.q.shape.row_end(r); ++c)
            cells.push_back({pair.q.at(r, c), r, c});
    // uninsert from the largest label; equal labels from east to west
    std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
        if (a.label != b.label) return a.label > b.label;
        return a.c > b.c;
    });
    std::vector<int> tops, bottoms;
    for (const auto& cell : cells) {
        int j = cell.c - 1;
        if (static_cast<int>(pcols[j].size()) != cell.r)
            throw std::invalid_argument("recording tableau inconsistent with insertion tableau");
        int v = pcols[j].back();
        pcols[j].pop_back();
        for (int k = j - 1; k >= 0; --k) {
            auto& col = pcols[k];
            auto it = std::upper_bound(col.begin(), col.end(), v);
            if (it == col.begin()) throw std::invalid_argument("reverse bump failed");
            --it;
            std::swap(v, *it);
        }
        tops.push_back(cell.label);
        bottoms.push_back(v);
    }
    std::reverse(tops.begin(), tops.end());
    std::reverse(bottoms.begin(), bottoms.end());
    return BurgeArray(Word(tops, pair.q.alphabet_size), Word(bottoms, pair.p.alphabet_size));
}

SkewTableau u_of_w(const Word& w) {
    if (!is_yamanouchi(w)) throw std::invalid_argument("u_of_w requires a Yamanouchi word");
    auto m = w.weight();
    std::vector<int> nu;
    for (int i = 1; i <= w.alphabet_size; ++i)
        if (m[i] > 0) nu.push_back(static_cast<int>(m[i]));
    int d = std::max<int>(1, static_cast<int>(nu.size()));
    int wid = std::max<int>(1, nu.empty() ? 0 : nu[0]);
    AmbientRectangle box{d, wid};
    std::vector<std::vector<int>> rows(d);
    for (int k = 0; k < w.length(); ++k) rows[w.letters[k] - 1].push_back(k + 1);
    Partition out(nu, box), in(std::vector<int>{}, box);
    return SkewTableau(SkewShape(out, in), rows, std::max(w.length(), 1));
}

bool knuth_equivalent(const SkewTableau& a, const SkewTableau& b) {
    return same_filling(burge_insert(row_word(a)).p, burge_insert(row_word(b)).p);
}

bool dual_knuth_equivalent(const SkewTableau& a, const SkewTableau& b) {
    if (!(a.shape.outer.trimmed() == b.shape.outer.trimmed()) ||
        !(a.shape.inner.trimmed() == b.shape.inner.trimmed()))
        return false;
    return same_filling(burge_insert(row_word(a)).q, burge_insert(row_word(b)).q);
}

std::pair<SkewTableau, SkewTableau> switch_tableaux(const SkewTableau& s, const SkewTableau& t) {
    if (!(s.box() == t.box())) throw std::invalid_argument("switch members live in different rectangles");
    if (!(s.shape.outer == t.shape.inner)) throw std::invalid_argument("second member must extend the first");
    Grid g(s.box().d, s.box().width);
    fill_grid(g, s, 1);
    fill_grid(g, t, 2);
    // vacate the entries of s in decreasing standard order; unprocessed
    // entries never move, so original positions remain valid
    struct Item {
        int v, r, c;
    };
    std::vector<Item> items;
    for (int r = 1; r <= s.box().d; ++r)
        for (int c = s.shape.row_begin(r); c <= s.shape.row_end(r); ++c) items.push_back({s.at(r, c), r, c});
    // reverse standard order: largest entry first; within equal entries the
    // southeast-most first (column-strict) resp. northeast-most (row-strict)
    std::sort(items.begin(), items.end(), [&](const Item& a, const Item& b) {
        if (a.v != b.v) return a.v > b.v;
        if (s.row_strict) return a.c != b.c ? a.c < b.c : a.r > b.r;
        return a.r != b.r ? a.r < b.r : a.c > b.c;
    });
    for (const auto& item : items) {
        g.clear(item.r, item.c);
        auto [hr, hc] = slide_hole(g, item.r, item.c, 2, t.row_strict);
        g.set(hr, hc, item.v, 1);
    }
    std::vector<int> mid(s.box().d, 0);
    for (int r = 1; r <= s.box().d; ++r) {
        int cnt = 0;
        for (int c = 1; c <= s.box().width; ++c)
            if (g.tag(r, c) == 2) ++cnt;
        mid[r - 1] = s.shape.inner.part(r) + cnt;
    }
    Partition middle(mid, s.box());
    SkewTableau a = extract_between(g, 2, s.shape.inner, middle, t.alphabet_size, t.row_strict);
    SkewTableau b = extract_between(g, 1, middle, t.shape.outer, s.alphabet_size, s.row_strict);
    return {a, b};
}

SkewTableau haiman_intersection(const SkewTableau& dual_rep, const SkewTableau& knuth_rep) {
    SkewTableau w = yamanouchi_tableau(dual_rep.shape.inner, std::max(1, dual_rep.box().d));
    auto [a, b] = switch_tableaux(w, dual_rep);
    SkewTableau vn = rectify(knuth_rep);
    if (!(a.shape.outer.trimmed() == vn.shape.outer.trimmed()))
        throw std::invalid_argument("classes do not correspond to the same normal shape");
    // rebuild vn inside dual_rep's rectangle
    Partition out(vn.shape.outer.trimmed(), dual_rep.box());
    Partition in(std::vector<int>{}, dual_rep.box());
    std::vector<std::vector<int>> rows(dual_rep.box().d);
    for (int r = 1; r <= vn.box().d && r <= dual_rep.box().d; ++r) rows[r - 1] = vn.rows[r - 1];
    SkewTableau vv(SkewShape(out, in), rows, vn.alphabet_size, vn.row_strict);
    auto [a2, x] = switch_tableaux(vv, b);
    (void)a2;
    return x;
}

ThreeFold s1(const ThreeFold& f) {
    auto [a, b] = switch_tableaux(f.a, f.b);
    return {a, b, f.c};
}

ThreeFold s2(const ThreeFold& f) {
    auto [b, c] = switch_tableaux(f.b, f.c);
    return {f.a, b, c};
}

}  // namespace lrkit
