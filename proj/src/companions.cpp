#include "lrkit/companions.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "lrkit/crystal.hpp"
#include "lrkit/plactic.hpp"

namespace lrkit {

namespace {

Matrix square_recording_matrix(const SkewTableau& t) {
    const int d = t.box().d;
    Matrix m(d, std::vector<long long>(d, 0));
    for (int r = 1; r <= d; ++r)
        for (int x : t.rows[r - 1]) {
            if (x > d) throw std::invalid_argument("entry outside the ambient alphabet");
            ++m[r - 1][x - 1];
        }
    return m;
}

}  // namespace

SkewTableau right_companion(const SkewTableau& t) {
    const int d = t.box().d;
    Matrix m = square_recording_matrix(t);
    std::vector<std::vector<int>> rows(d);
    std::vector<int> shape(d, 0);
    for (int j = 1; j <= d; ++j) {
        for (int i = 1; i <= d; ++i)
            for (long long k = 0; k < m[i - 1][j - 1]; ++k) rows[j - 1].push_back(i);
        shape[j - 1] = static_cast<int>(rows[j - 1].size());
    }
    Partition outer(shape, t.box());
    return SkewTableau(SkewShape(outer, Partition({}, t.box())), rows, d);
}

SkewTableau left_companion(const SkewTableau& t) {
    const int d = t.box().d;
    Matrix m = square_recording_matrix(t);
    const Partition& mu = t.shape.inner;
    // rho^(i)_k = mu_{k+d-i} + sum_{j<=d-i} m_{k+d-i, j}, for k = 1..i
    auto rho_part = [&](int i, int k) -> long long {
        int row = k + d - i;
        if (k < 1 || k > i) return 0;
        long long s = mu.part(row);
        for (int j = 1; j <= d - i; ++j) s += m[row - 1][j - 1];
        return s;
    };
    std::vector<std::vector<int>> rows(d);
    for (int k = 1; k <= d; ++k)
        for (int c = 1; c <= mu.part(k); ++c) {
            int v = 0;
            for (int i = 1; i <= d; ++i)
                if (k <= i && c <= rho_part(i, k)) {
                    v = i;
                    break;
                }
            if (v == 0) throw std::logic_error("left companion cell not covered");
            rows[k - 1].push_back(v);
        }
    return SkewTableau(SkewShape(mu, Partition({}, t.box())), rows, d);
}

SkewTableau companion_inverse(const SkewTableau& g, const BoundaryTriple& b) {
    Matrix m = square_recording_matrix(g);
    SkewShape shape(complement(b.lam), b.mu);
    return tableau_from_matrix(transpose_matrix(m), shape, g.box().d);
}

std::vector<std::vector<int>> gt_rows(const SkewTableau& g) {
    if (!g.shape.inner.empty()) throw std::invalid_argument("GT view expects a straight shape");
    const int d = g.box().d;
    std::vector<std::vector<int>> out(d + 1);
    for (int i = 0; i <= d; ++i) {
        out[i].resize(d, 0);
        for (int r = 1; r <= d; ++r) {
            int cnt = 0;
            for (int x : g.rows[r - 1])
                if (x <= i) ++cnt;
            out[i][r - 1] = cnt;
        }
    }
    return out;
}

bool validate_right(const SkewTableau& g, const Partition& mu) {
    const int d = g.box().d;
    // crystal route: eps_i(w(G)) <= mu_i - mu_{i+1}
    Word w = row_word(g);
    Word wd(w.letters, d);
    bool crystal_ok = true;
    for (int i = 1; i < d; ++i)
        if (epsilon(wd, i) > mu.part(i) - mu.part(i + 1)) crystal_ok = false;
    // betweenness route
    auto nu = gt_rows(g);
    auto nu_part = [&](int level, int k) -> long long {
        if (level < 0 || k < 1 || k > d) return 0;
        return nu[level][k - 1];
    };
    bool ineq_ok = true;
    for (int j = 2; j <= d; ++j)
        for (int i = 1; i < j; ++i) {
            long long lhs = 0;
            for (int k = 1; k <= i; ++k) lhs += nu_part(j, k) - nu_part(j - 1, k);
            for (int k = 1; k <= i - 1; ++k) lhs -= nu_part(j - 1, k) - nu_part(j - 2, k);
            if (lhs > mu.part(j - 1) - mu.part(j)) ineq_ok = false;
        }
    if (crystal_ok != ineq_ok) throw std::logic_error("right-validity routes disagree");
    return crystal_ok;
}

bool validate_left(const SkewTableau& l, const Partition& nu) {
    const int d = l.box().d;
    Word w = row_word(l);
    Word wd(w.letters, d);
    bool crystal_ok = true;
    for (int i = 1; i < d; ++i)
        if (phi(wd, d - i) > nu.part(i) - nu.part(i + 1)) crystal_ok = false;
    auto mus = gt_rows(l);
    auto mu_part = [&](int level, int k) -> long long {
        if (level < 0 || level > d || k < 1 || k > d) return 0;
        return mus[level][k - 1];
    };
    bool ineq_ok = true;
    for (int i = 1; i < d; ++i)
        for (int j = i + 1; j <= d; ++j) {
            long long lhs = 0;
            for (int k = j; k <= d; ++k) lhs += mu_part(d - i, k - i) - mu_part(d - i + 1, k - i + 1);
            for (int k = j + 1; k <= d; ++k) lhs -= mu_part(d - i - 1, k - i - 1) - mu_part(d - i, k - i);
            if (lhs > nu.part(i) - nu.part(i + 1)) ineq_ok = false;
        }
    if (crystal_ok != ineq_ok) throw std::logic_error("left-validity routes disagree");
    return crystal_ok;
}

SkewTableau companion_lozenge(const SkewTableau& g, const Partition& mu) {
    const int d = g.box().d;
    auto content = g.content();
    std::vector<int> lamv(d, 0);
    for (int i = 1; i <= d; ++i) lamv[i - 1] = mu.part(i) + static_cast<int>(content[i]);
    Partition outer(lamv, g.box());  // lam^v of the underlying tableau
    // step 1: transpose the filling
    SkewTableau gt = transpose_tableau(g);
    // step 2: replace the i-strip, southeast to northwest, with
    // (width - lamv_i) + 1 .. (width - lamv_i) + (lamv_i - mu_i)
    struct Cell {
        int r, c, v;
    };
    std::vector<std::vector<Cell>> strips(d + 1);
    for (int r = 1; r <= gt.box().d; ++r)
        for (int c = gt.shape.row_begin(r); c <= gt.shape.row_end(r); ++c)
            strips[gt.at(r, c)].push_back({r, c, 0});
    std::vector<std::vector<int>> rows(gt.box().d);
    for (int r = 0; r < gt.box().d; ++r) rows[r].resize(gt.rows[r].size(), 0);
    const int width = g.box().width;
    for (int i = 1; i <= d; ++i) {
        auto& cells = strips[i];
        std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
            return a.r != b.r ? a.r < b.r : a.c > b.c;
        });
        int base = width - lamv[i - 1];
        for (size_t k = 0; k < cells.size(); ++k)
            rows[cells[k].r - 1][cells[k].c - gt.shape.row_begin(cells[k].r)] = base + 1 + static_cast<int>(k);
    }
    return SkewTableau(gt.shape, rows, gt.box().d);
}

SkewTableau companion_spade(const SkewTableau& g, const Partition& mu) {
    const int d = g.box().d;
    auto content = g.content();
    std::vector<int> lamv(d, 0);
    for (int i = 1; i <= d; ++i) lamv[i - 1] = mu.part(i) + static_cast<int>(content[i]);
    Partition outer(lamv, g.box());
    Partition outer_t = transpose(outer);
    Partition mu_t = transpose(mu);
    const Partition& nu = g.shape.outer;
    // step 1: replace the i-strip with mu_i+1..lamv_i scanned SE to NW, then
    // sort rows decreasingly to obtain the companion plane partition C
    struct Cell {
        int r, c;
    };
    std::vector<std::vector<Cell>> strips(d + 1);
    for (int r = 1; r <= d; ++r)
        for (int c = g.shape.row_begin(r); c <= g.shape.row_end(r); ++c) strips[g.at(r, c)].push_back({r, c});
    std::vector<std::vector<int>> crows(d);
    for (int r = 0; r < d; ++r) crows[r].resize(g.rows[r].size(), 0);
    for (int i = 1; i <= d; ++i) {
        auto& cells = strips[i];
        std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
            return a.r != b.r ? a.r < b.r : a.c > b.c;
        });
        for (size_t k = 0; k < cells.size(); ++k)
            crows[cells[k].r - 1][cells[k].c - g.shape.row_begin(cells[k].r)] = mu.part(i) + 1 + static_cast<int>(k);
    }
    for (auto& row : crows) std::sort(row.begin(), row.end(), std::greater<int>());
    // step 2: R_k = rows of C containing k; F_k = [lamv^t_k] \ R_k
    const int td = g.box().transposed().d;
    std::vector<std::vector<int>> f(td + 1);
    for (int k = 1; k <= td; ++k) {
        std::vector<char> in_r(d + 1, 0);
        for (int r = 1; r <= d; ++r)
            for (int x : crows[r - 1])
                if (x == k) in_r[r] = 1;
        for (int v = outer_t.part(k); v >= 1; --v)
            if (!in_r[v]) f[k].push_back(v);  // decreasing order
        if (static_cast<int>(f[k].size()) != mu_t.part(k))
            throw std::logic_error("companion spade: |F_k| differs from mu^t_k");
    }
    // step 3: shape mu^t filled with F_i, then relabel the j-strips bottom
    // to top with nu_j+1..nu_j+eps_j
    std::vector<std::vector<int>> rows(g.box().transposed().d);
    for (int i = 1; i <= g.box().transposed().d; ++i) rows[i - 1] = f[i];
    // the intermediate entries are column heights of the outer shape, so
    // they are bounded by the number of rows d
    std::vector<std::vector<Cell>> jstrips(d + 1);
    for (int r = 1; r <= g.box().transposed().d; ++r)
        for (size_t c = 0; c < rows[r - 1].size(); ++c) jstrips[rows[r - 1][c]].push_back({r, static_cast<int>(c)});
    for (int j = 1; j <= d; ++j) {
        auto& cells = jstrips[j];
        std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) { return a.r < b.r; });
        for (size_t k = 0; k < cells.size(); ++k)
            rows[cells[k].r - 1][cells[k].c] = nu.part(j) + 1 + static_cast<int>(k);
    }
    AmbientRectangle tbox = g.box().transposed();
    return SkewTableau(SkewShape(mu_t, Partition({}, tbox)), rows, tbox.d);
}

CompanionFilling to_filling(const SkewTableau& g) {
    CompanionFilling f;
    f.rows = g.rows;
    while (!f.rows.empty() && f.rows.back().empty()) f.rows.pop_back();
    return f;
}

Matrix filling_matrix(const CompanionFilling& f, int dim) {
    Matrix m(dim, std::vector<long long>(dim, 0));
    for (size_t r = 0; r < f.rows.size(); ++r)
        for (int x : f.rows[r]) ++m[r][x - 1];
    return m;
}

CompanionFilling theta(const CompanionFilling& f, int i, int alphabet) {
    // reorder the biletters (row of T, letter of T) so the rows weakly
    // increase and the letters weakly decrease within a row block; the
    // letter line is then the word of the underlying tableau, on which
    // sigma_i acts
    struct Biletter {
        int trow, letter;
    };
    std::vector<Biletter> bl;
    for (size_t r = 0; r < f.rows.size(); ++r)
        for (int v : f.rows[r]) bl.push_back({v, static_cast<int>(r + 1)});
    std::sort(bl.begin(), bl.end(), [](const Biletter& a, const Biletter& b) {
        return a.trow != b.trow ? a.trow < b.trow : a.letter > b.letter;
    });
    std::vector<int> letters;
    letters.reserve(bl.size());
    for (const auto& x : bl) letters.push_back(x.letter);
    Word moved = sigma(Word(letters, alphabet), i);
    CompanionFilling out;
    out.rows.resize(alphabet);
    for (size_t k = 0; k < moved.letters.size(); ++k) out.rows[moved.letters[k] - 1].push_back(bl[k].trow);
    for (auto& row : out.rows) std::sort(row.begin(), row.end());
    while (!out.rows.empty() && out.rows.back().empty()) out.rows.pop_back();
    return out;
}

SkewTableau theta_zero(const SkewTableau& g) {
    const int d = g.box().d;
    CompanionFilling f = to_filling(g);
    for (int round = 1; round <= d - 1; ++round)
        for (int i = 1; i <= d - round; ++i) f = theta(f, i, d);
    SkewTableau anti = arectify(g);
    CompanionFilling check;
    for (const auto& row : anti.rows) check.rows.push_back(row);
    while (!check.rows.empty() && check.rows.back().empty()) check.rows.pop_back();
    if (!(check == f)) throw std::logic_error("theta ladder does not land on the anti-normal form");
    return anti;
}

CompanionPair companion_pair(const SkewTableau& t) {
    return {left_companion(t), right_companion(t)};
}

bool validate_pair(const CompanionPair& p, const BoundaryTriple& b) {
    Partition lamv = complement(b.lam);
    // shapes and weights
    if (!(p.right.shape.outer == b.nu) || !(p.left.shape.outer == b.mu)) return false;
    auto gw = p.right.content(), lw = p.left.content();
    for (int i = 1; i <= b.mu.box.d; ++i) {
        if (gw[i] != lamv.part(i) - b.mu.part(i)) return false;
        if (lw[i] != lamv.part(b.mu.box.d - i + 1) - b.nu.part(b.mu.box.d - i + 1)) return false;
    }
    if (!validate_right(p.right, b.mu)) return false;
    if (!validate_left(p.left, b.nu)) return false;
    // pair identity: L = lozenge(spade(G))
    SkewTableau sg = companion_spade(p.right, b.mu);
    BoundaryTriple bs = boundary_action(GroupElement::spade, b);
    SkewTableau lsg = companion_lozenge(sg, bs.mu);
    return same_filling(lsg, p.left);
}

Hive hive_from_pair(const CompanionPair& p, const BoundaryTriple& b) {
    if (!validate_pair(p, b)) throw std::invalid_argument("not a valid companion pair for the boundary");
    return {p, b};
}

Hive hive_from_tableau(const SkewTableau& t) {
    return {companion_pair(t), boundary_data(t)};
}

SkewTableau hive_to_tableau(const Hive& h) { return companion_inverse(h.pair.right, h.boundary); }

namespace {

struct BoundCompanion {
    SkewTableau g;
    BoundaryTriple b;
};

BoundCompanion c_spade(const BoundCompanion& x) {
    return {companion_spade(x.g, x.b.mu), boundary_action(GroupElement::spade, x.b)};
}

BoundCompanion c_lozenge(const BoundCompanion& x) {
    return {companion_lozenge(x.g, x.b.mu), boundary_action(GroupElement::lozenge, x.b)};
}

BoundCompanion c_evac(const BoundCompanion& x) {
    return {evacuate(x.g), boundary_action(GroupElement::rho, x.b)};
}

}  // namespace

Hive symmetry_on_hive(GroupElement g, const Hive& h) {
    BoundCompanion G{h.pair.right, h.boundary};
    BoundCompanion L{h.pair.left, boundary_action(GroupElement::rot240, h.boundary)};
    auto pair_of = [&](const BoundCompanion& left, const BoundCompanion& right) {
        return Hive{{left.g, right.g}, boundary_action(g, h.boundary)};
    };
    switch (g) {
        case GroupElement::id: return pair_of(L, G);
        case GroupElement::spade: return pair_of(c_lozenge(G), c_spade(G));
        case GroupElement::lozenge: return pair_of(c_lozenge(c_spade(c_lozenge(G))), c_lozenge(G));
        case GroupElement::club: return pair_of(c_spade(G), c_lozenge(c_spade(c_lozenge(G))));
        case GroupElement::rot240: return pair_of(c_spade(c_lozenge(G)), c_lozenge(c_spade(G)));
        case GroupElement::rot120: return pair_of(G, c_spade(c_lozenge(G)));
        case GroupElement::rho: return pair_of(c_lozenge(c_spade(c_evac(G))), c_evac(G));
        case GroupElement::rho1: return pair_of(c_evac(G), c_spade(c_lozenge(c_evac(G))));
        case GroupElement::rho2: return pair_of(c_spade(c_lozenge(c_evac(G))), c_lozenge(c_spade(c_evac(G))));
        case GroupElement::varrho: return pair_of(c_lozenge(c_evac(L)), c_lozenge(c_evac(G)));
        case GroupElement::spade_rho: return pair_of(c_lozenge(c_evac(G)), c_spade(c_evac(G)));
        case GroupElement::club_rho: return pair_of(c_spade(c_evac(G)), c_lozenge(c_evac(L)));
    }
    throw std::logic_error("unknown group element");
}

std::string hive_to_json(const Hive& h) {
    nlohmann::json j;
    j["left"] = nlohmann::json::parse(to_json(h.pair.left));
    j["right"] = nlohmann::json::parse(to_json(h.pair.right));
    j["boundary"] = {h.boundary.mu.trimmed(), h.boundary.nu.trimmed(), h.boundary.lam.trimmed()};
    return j.dump();
}

Hive hive_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    SkewTableau left = tableau_from_json(j.at("left").dump());
    SkewTableau right = tableau_from_json(j.at("right").dump());
    auto b = j.at("boundary");
    const AmbientRectangle box = left.box();
    BoundaryTriple triple{Partition(b.at(0).get<std::vector<int>>(), box),
                          Partition(b.at(1).get<std::vector<int>>(), box),
                          Partition(b.at(2).get<std::vector<int>>(), box)};
    return hive_from_pair({left, right}, triple);
}

}  // namespace lrkit
