#include "lrkit/symmetries.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

#include "lrkit/crystal.hpp"
#include "lrkit/plactic.hpp"

namespace lrkit {

namespace {

struct Action {
    std::array<int, 3> perm;  // new slot k holds old slot perm[k]
    bool flip;
    bool operator<(const Action& o) const { return std::tie(perm, flip) < std::tie(o.perm, o.flip); }
};

Action action_of(GroupElement g) {
    switch (g) {
        case GroupElement::id: return {{1, 2, 3}, false};
        case GroupElement::spade: return {{2, 1, 3}, true};
        case GroupElement::club: return {{1, 3, 2}, true};
        case GroupElement::lozenge: return {{3, 2, 1}, true};
        case GroupElement::rot120: return {{2, 3, 1}, false};
        case GroupElement::rot240: return {{3, 1, 2}, false};
        case GroupElement::rho: return {{3, 2, 1}, false};
        case GroupElement::rho1: return {{2, 1, 3}, false};
        case GroupElement::rho2: return {{1, 3, 2}, false};
        case GroupElement::varrho: return {{1, 2, 3}, true};
        case GroupElement::spade_rho: return {{2, 3, 1}, true};
        case GroupElement::club_rho: return {{3, 1, 2}, true};
    }
    throw std::logic_error("unknown group element");
}

const std::map<Action, GroupElement>& action_index() {
    static const std::map<Action, GroupElement> idx = [] {
        std::map<Action, GroupElement> m;
        for (GroupElement g : kAllGroupElements) m[action_of(g)] = g;
        return m;
    }();
    return idx;
}

}  // namespace

std::string group_element_name(GroupElement g) {
    switch (g) {
        case GroupElement::id: return "id";
        case GroupElement::spade: return "spade";
        case GroupElement::club: return "club";
        case GroupElement::lozenge: return "lozenge";
        case GroupElement::rot120: return "rot120";
        case GroupElement::rot240: return "rot240";
        case GroupElement::rho: return "rho";
        case GroupElement::rho1: return "rho1";
        case GroupElement::rho2: return "rho2";
        case GroupElement::varrho: return "varrho";
        case GroupElement::spade_rho: return "spade_rho";
        case GroupElement::club_rho: return "club_rho";
    }
    throw std::logic_error("unknown group element");
}

GroupElement group_element_from_name(const std::string& name) {
    for (GroupElement g : kAllGroupElements)
        if (group_element_name(g) == name) return g;
    throw std::invalid_argument("unknown op tag: " + name);
}

GroupElement group_multiply(GroupElement g, GroupElement h) {
    Action a = action_of(g), b = action_of(h);
    Action c;
    for (int k = 0; k < 3; ++k) c.perm[k] = b.perm[a.perm[k] - 1];
    c.flip = a.flip != b.flip;
    return action_index().at(c);
}

BoundaryTriple boundary_action(GroupElement g, const BoundaryTriple& b) {
    Action a = action_of(g);
    std::array<const Partition*, 3> in{&b.mu, &b.nu, &b.lam};
    std::array<Partition, 3> out;
    for (int k = 0; k < 3; ++k) out[k] = a.flip ? transpose(*in[a.perm[k] - 1]) : *in[a.perm[k] - 1];
    return {out[0], out[1], out[2]};
}

namespace {

// Symmetry maps act on LR tableaux over the ambient alphabet [d].
SkewTableau with_box_alphabet(const SkewTableau& t) {
    if (t.alphabet_size == t.box().d) return t;
    return SkewTableau(t.shape, t.rows, t.box().d, t.row_strict);
}

}  // namespace

Word lozenge_word(const Word& w) {
    auto m = w.weight();
    std::vector<int> out(w.length());
    if (is_yamanouchi(w)) {
        // occurrences of i become 1..nu_i left to right
        std::vector<int> seen(w.alphabet_size + 1, 0);
        for (int k = 0; k < w.length(); ++k) out[k] = ++seen[w.letters[k]];
        int nu1 = static_cast<int>(m[1]);
        return Word(out, std::max(nu1, 1));
    }
    if (is_opposite_yamanouchi(w)) {
        // occurrences of d-i+1 become (nu_1 - nu_i + 1)..nu_1 left to right
        const int d = w.alphabet_size;
        int nu1 = static_cast<int>(m[d]);
        std::vector<int> seen(w.alphabet_size + 1, 0);
        for (int k = 0; k < w.length(); ++k) {
            int letter = w.letters[k];
            long long nui = m[letter];  // nu_i for i = d-letter+1
            out[k] = static_cast<int>(nu1 - nui) + (++seen[letter]);
        }
        return Word(out, std::max(nu1, 1));
    }
    throw std::invalid_argument("lozenge_word requires a ballot or anti-ballot word");
}

SkewTableau lozenge_via_word(const SkewTableau& in) {
    SkewTableau t = with_box_alphabet(in);
    Word w = row_word(t);
    Word wl = lozenge_word(w);
    SkewShape target = rotate_transpose_shape(t.shape);
    Word embedded(wl.letters, std::max(target.box().d, wl.alphabet_size));
    return tableau_from_column_word(embedded, target);
}

SkewTableau lozenge_via_matrix(const SkewTableau& in) {
    SkewTableau t = with_box_alphabet(in);
    if (!is_lr_tableau(t)) throw std::invalid_argument("matrix route expects an LR tableau");
    const int d = t.box().d;
    const auto& lam = t.shape.outer;  // outer shape of the input
    const long long lam1 = lam.part(1);
    // recording matrix, lower triangular for LR input
    Matrix a(d, std::vector<long long>(d, 0));
    for (int r = 1; r <= d; ++r)
        for (int x : t.rows[r - 1]) ++a[r - 1][x - 1];
    Matrix at = a;
    for (int j = d; j >= 1; --j)
        for (int i = 1; i <= d; ++i) {
            if (i == j)
                at[i - 1][i - 1] += lam1 - lam.part(i);
            else if (j > i)
                at[i - 1][j - 1] = 0;
            else
                at[i - 1][j - 1] += at[i - 1][j];
        }
    // runtime check of the prefix-sum inequality the construction relies on
    for (int i = 1; i <= d; ++i)
        for (int k = i; k + 1 <= d; ++k)
            if (at[k][i - 1] - at[k - 1][i - 1] < a[k][i - 1])
                throw std::logic_error("prefix-sum inequality violated in the lozenge algorithm");
    Matrix b(lam1, std::vector<long long>(lam1, 0));
    for (int i = 1; i <= d; ++i) {
        long long c = 0;
        for (int j = 0; i + j <= d; ++j) {
            long long r = at[i + j - 1][i - 1] - a[i + j - 1][i - 1];
            for (long long tt = 1; tt <= a[i + j - 1][i - 1]; ++tt) b[r + tt - 1][c + tt - 1] += 1;
            c += a[i + j - 1][i - 1];
        }
    }
    // b lives in the lam1 x lam1 bounding frame of the outer shape; embed
    // it in the ambient rectangle by shifting rows up by width - lam1
    SkewShape target = rotate_transpose_shape(t.shape);
    const long long offset = t.box().width - lam1;
    Matrix shifted(t.box().width, std::vector<long long>(t.box().width, 0));
    for (long long r = 0; r < lam1; ++r)
        for (long long q = 0; q < lam1; ++q) shifted[r + offset][q] = b[r][q];
    return tableau_from_matrix(shifted, target, target.box().d);
}

SkewTableau lozenge(const SkewTableau& t) {
    if (is_lr_tableau(t)) return lozenge_via_matrix(t);
    return lozenge_via_word(t);
}

namespace {

// Content of an LR tableau as a partition in its rectangle.
Partition content_partition(const SkewTableau& t) {
    auto m = t.content();
    std::vector<int> nu;
    for (int i = 1; i <= t.box().d; ++i) nu.push_back(i <= t.alphabet_size ? static_cast<int>(m[i]) : 0);
    return Partition(nu, t.box());
}

}  // namespace

SkewTableau spade(const SkewTableau& in) {
    SkewTableau t = with_box_alphabet(in);
    if (!is_lr_tableau(t)) throw std::invalid_argument("spade expects an LR tableau");
    const int d = t.box().d, width = t.box().width;
    const Partition& outer = t.shape.outer;
    const Partition& mu = t.shape.inner;
    Partition nu = content_partition(t);
    // grid: 0 empty, >0 numeric, <0 marker with index -value
    std::vector<std::vector<int>> grid(d + 1, std::vector<int>(width + 1, 0));
    for (int r = 1; r <= d; ++r)
        for (int c = 1; c <= mu.part(r); ++c) grid[r][c] = -c;
    for (int r = 1; r <= d; ++r)
        for (int c = t.shape.row_begin(r); c <= t.shape.row_end(r); ++c) grid[r][c] = t.at(r, c);
    // drop every numeric i to row i within its column
    Partition outer_t = transpose(outer);
    for (int c = 1; c <= width; ++c) {
        int h = outer_t.part(c);
        if (h == 0) continue;
        std::vector<char> numeric_row(h + 1, 0);
        for (int r = 1; r <= h; ++r)
            if (grid[r][c] > 0) {
                int v = grid[r][c];
                if (v > r) throw std::logic_error("entry above its target row");
                numeric_row[v] = 1;
            }
        for (int r = 1; r <= h; ++r) grid[r][c] = numeric_row[r] ? r : -c;
    }
    // left-justify the i's in row i; markers keep their order to the right
    for (int r = 1; r <= d; ++r) {
        int len = outer.part(r);
        std::vector<int> markers;
        for (int c = 1; c <= len; ++c)
            if (grid[r][c] < 0) markers.push_back(grid[r][c]);
        int nr = nu.part(r);
        if (static_cast<int>(markers.size()) != len - nr) throw std::logic_error("row repack mismatch");
        for (int c = 1; c <= nr; ++c) grid[r][c] = r;
        for (int c = nr + 1; c <= len; ++c) grid[r][c] = markers[c - nr - 1];
    }
    // erase the numeric filling and transpose the markers
    AmbientRectangle tbox = t.box().transposed();
    Partition new_outer = transpose(outer);
    Partition new_inner = transpose(nu);
    std::vector<std::vector<int>> rows(tbox.d);
    for (int rp = 1; rp <= tbox.d; ++rp)
        for (int cp = new_inner.part(rp) + 1; cp <= new_outer.part(rp); ++cp) {
            int v = grid[cp][rp];
            if (v >= 0) throw std::logic_error("expected a marker cell");
            rows[rp - 1].push_back(-v);
        }
    return SkewTableau(SkewShape(new_outer, new_inner), rows, tbox.d);
}

SkewTableau club(const SkewTableau& in) {
    SkewTableau t = with_box_alphabet(in);
    if (!is_lr_tableau(t)) throw std::invalid_argument("club expects an LR tableau");
    const int d = t.box().d, width = t.box().width;
    const Partition& outer = t.shape.outer;
    const Partition& mu = t.shape.inner;
    Partition nu = content_partition(t);
    Partition nut = transpose(nu);
    std::vector<std::vector<int>> grid(d + 1, std::vector<int>(width + 1, 0));
    for (int r = 1; r <= d; ++r) {
        for (int c = t.shape.row_begin(r); c <= t.shape.row_end(r); ++c) grid[r][c] = t.at(r, c);
        for (int c = outer.part(r) + 1; c <= width; ++c) grid[r][c] = -(c - outer.part(r));
    }
    // passes j = 1..nu_1: the rightmost unmoved i within the first
    // width-j+1 columns slides to column width-j+1, for i = 1..nu^t_j
    std::vector<std::vector<std::pair<int, int>>> occ(d + 1);  // per value: (col, row), right to left
    for (int r = 1; r <= d; ++r)
        for (int c = t.shape.row_begin(r); c <= t.shape.row_end(r); ++c)
            occ[t.at(r, c)].push_back({c, r});
    for (int v = 1; v <= d; ++v)
        std::sort(occ[v].begin(), occ[v].end(), [](auto& x, auto& y) { return x.first > y.first; });
    std::vector<size_t> ptr(d + 1, 0);
    std::vector<std::vector<std::pair<int, int>>> moves(d + 1);  // per row: (from col, to col)
    for (int j = 1; j <= nu.part(1); ++j) {
        int q = width - j + 1;
        for (int i = 1; i <= nut.part(j); ++i) {
            if (ptr[i] >= occ[i].size()) throw std::logic_error("ran out of occurrences in club");
            auto [c, r] = occ[i][ptr[i]++];
            if (c > q) throw std::logic_error("club scan order violated");
            moves[r].push_back({c, q});
        }
    }
    // apply the horizontal moves row by row: numerics pinned at their target
    // columns, markers fill the rest preserving order
    for (int r = 1; r <= d; ++r) {
        int lo = mu.part(r) + 1;
        std::vector<int> markers;
        std::vector<int> target(width + 1, 0);
        for (auto [from, to] : moves[r]) target[to] = grid[r][from];
        std::vector<char> is_target(width + 1, 0);
        for (auto [from, to] : moves[r]) is_target[to] = 1;
        for (int c = lo; c <= width; ++c)
            if (grid[r][c] < 0) markers.push_back(grid[r][c]);
        size_t k = 0;
        for (int c = lo; c <= width; ++c) {
            if (is_target[c])
                grid[r][c] = target[c];
            else {
                if (k >= markers.size()) throw std::logic_error("club row repack mismatch");
                grid[r][c] = markers[k++];
            }
        }
        if (k != markers.size()) throw std::logic_error("club row repack leftover");
    }
    // slide the numbers up each column so they form the anti-normal Y(nu)
    for (int j = 1; j <= nu.part(1); ++j) {
        int q = width - j + 1;
        int hi = d, lo = 0;
        for (int r = 1; r <= d; ++r)
            if (mu.part(r) < q && lo == 0) lo = r;
        std::vector<int> markers;
        for (int r = lo; r <= hi; ++r)
            if (grid[r][q] < 0) markers.push_back(grid[r][q]);
        int cnt = nut.part(j);
        size_t k = 0;
        for (int r = lo; r <= hi; ++r) {
            if (r > d - cnt)
                grid[r][q] = cnt - (d - r);
            else {
                if (k >= markers.size()) throw std::logic_error("club column repack mismatch");
                grid[r][q] = markers[k++];
            }
        }
    }
    // markers now occupy nu^v / mu; transpose them
    Partition nuv = complement(nu);
    AmbientRectangle tbox = t.box().transposed();
    Partition new_outer = transpose(nuv);
    Partition new_inner = transpose(mu);
    std::vector<std::vector<int>> rows(tbox.d);
    for (int rp = 1; rp <= tbox.d; ++rp)
        for (int cp = new_inner.part(rp) + 1; cp <= new_outer.part(rp); ++cp) {
            int v = grid[cp][rp];
            if (v >= 0) throw std::logic_error("expected a marker cell in club");
            rows[rp - 1].push_back(-v);
        }
    return SkewTableau(SkewShape(new_outer, new_inner), rows, tbox.d);
}

SkewTableau rotate120(const SkewTableau& t) { return spade(lozenge(t)); }
SkewTableau rotate240(const SkewTableau& t) { return lozenge(spade(t)); }

SkewTableau rho(const SkewTableau& t) { return rotate_tableau(reversal(with_box_alphabet(t))); }
SkewTableau varrho(const SkewTableau& t) { return lozenge(rho(t)); }

SkewTableau rho1(const SkewTableau& in) {
    SkewTableau t = with_box_alphabet(in);
    if (!is_lr_tableau(t)) throw std::invalid_argument("rho1 expects an LR tableau");
    SkewTableau y = yamanouchi_tableau(t.shape.inner, t.alphabet_size);
    return switch_tableaux(y, t).second;
}

SkewTableau rho2(const SkewTableau& in) {
    SkewTableau t = with_box_alphabet(in);
    if (!is_lr_tableau(t)) throw std::invalid_argument("rho2 expects an LR tableau");
    Partition lam = complement(t.shape.outer);
    SkewTableau ya = antinormal_yamanouchi(lam, t.alphabet_size);
    return switch_tableaux(t, ya).first;
}

SkewTableau antinormal_yamanouchi(const Partition& lam, int alphabet_size) {
    const auto& box = lam.box;
    Partition lamt = transpose(lam);
    Partition inner = complement(lam);
    std::vector<std::vector<int>> rows(box.d);
    for (int r = 1; r <= box.d; ++r)
        for (int c = inner.part(r) + 1; c <= box.width; ++c) {
            int j = box.width - c + 1;  // column index from the right
            int h = lamt.part(j);
            rows[r - 1].push_back(h - (box.d - r));
        }
    Partition outer(std::vector<int>(box.d, box.width), box);
    return SkewTableau(SkewShape(outer, inner), rows, alphabet_size);
}

SkewTableau apply(GroupElement g, const SkewTableau& t) {
    switch (g) {
        case GroupElement::id: return t;
        case GroupElement::spade: return spade(t);
        case GroupElement::club: return club(t);
        case GroupElement::lozenge: return lozenge(t);
        case GroupElement::rot120: return rotate120(t);
        case GroupElement::rot240: return rotate240(t);
        case GroupElement::rho: return rho(t);
        case GroupElement::rho1: return spade(lozenge(rho(t)));
        case GroupElement::rho2: return lozenge(spade(rho(t)));
        case GroupElement::varrho: return varrho(t);
        case GroupElement::spade_rho: return spade(rho(t));
        case GroupElement::club_rho: return club(rho(t));
    }
    throw std::logic_error("unknown group element");
}

}  // namespace lrkit
