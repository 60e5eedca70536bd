#include "lrkit/tableaux.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace lrkit {

Word::Word(std::vector<int> ls, int alpha) : letters(std::move(ls)), alphabet_size(alpha) {
    for (int x : letters)
        if (x < 1 || x > alphabet_size) throw std::invalid_argument("letter outside alphabet");
}

std::vector<long long> Word::weight() const {
    std::vector<long long> m(alphabet_size + 1, 0);
    for (int x : letters) ++m[x];
    return m;
}

SkewTableau::SkewTableau(SkewShape sh, std::vector<std::vector<int>> rs, int alpha, bool rstrict)
    : shape(std::move(sh)), rows(std::move(rs)), alphabet_size(alpha), row_strict(rstrict) {
    const int d = box().d;
    if (static_cast<int>(rows.size()) != d) throw std::invalid_argument("row count mismatch");
    for (int r = 1; r <= d; ++r) {
        if (static_cast<int>(rows[r - 1].size()) != shape.row_end(r) - shape.row_begin(r) + 1)
            throw std::invalid_argument("row length does not match shape");
        for (int x : rows[r - 1])
            if (x < 1 || x > alphabet_size) throw std::invalid_argument("entry outside alphabet");
    }
    for (int r = 1; r <= d; ++r) {
        const auto& row = rows[r - 1];
        for (size_t k = 0; k + 1 < row.size(); ++k) {
            bool ok = row_strict ? row[k] < row[k + 1] : row[k] <= row[k + 1];
            if (!ok) throw std::invalid_argument("row condition violated");
        }
    }
    for (int r = 1; r < d; ++r) {
        for (int c = shape.row_begin(r + 1); c <= shape.row_end(r + 1); ++c) {
            if (!shape.contains(r, c)) continue;
            bool ok = row_strict ? at(r, c) <= at(r + 1, c) : at(r, c) < at(r + 1, c);
            if (!ok) throw std::invalid_argument("column condition violated");
        }
    }
}

int SkewTableau::at(int r, int c) const {
    if (!shape.contains(r, c)) throw std::out_of_range("cell outside shape");
    return rows[r - 1][c - shape.row_begin(r)];
}

std::vector<long long> SkewTableau::content() const {
    std::vector<long long> m(alphabet_size + 1, 0);
    for (const auto& row : rows)
        for (int x : row) ++m[x];
    return m;
}

Word row_word(const SkewTableau& t) {
    std::vector<int> letters;
    letters.reserve(t.size());
    for (const auto& row : t.rows)
        for (auto it = row.rbegin(); it != row.rend(); ++it) letters.push_back(*it);
    return Word(letters, t.alphabet_size);
}

// Columns from rightmost to leftmost, each read bottom to top.  This is the
// traversal that reproduces w_col(T) = 1112123132 on the standard example.
Word column_word(const SkewTableau& t) {
    std::vector<int> letters;
    letters.reserve(t.size());
    const int d = t.box().d;
    for (int c = t.box().width; c >= 1; --c)
        for (int r = 1; r <= d; ++r)
            if (t.shape.contains(r, c)) letters.push_back(t.at(r, c));
    return Word(letters, t.alphabet_size);
}

bool is_yamanouchi(const Word& w) {
    std::vector<long long> cnt(w.alphabet_size + 2, 0);
    for (int x : w.letters) {
        ++cnt[x];
        if (x > 1 && cnt[x] > cnt[x - 1]) return false;
    }
    return true;
}

bool is_opposite_yamanouchi(const Word& w) {
    std::vector<long long> cnt(w.alphabet_size + 2, 0);
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        ++cnt[*it];
        if (*it < w.alphabet_size && cnt[*it] > cnt[*it + 1]) return false;
    }
    return true;
}

bool is_lr_tableau(const SkewTableau& t) { return !t.row_strict && is_yamanouchi(row_word(t)); }

bool is_opposite_lr_tableau(const SkewTableau& t) {
    return !t.row_strict && is_opposite_yamanouchi(row_word(t));
}

BoundaryTriple boundary_data(const SkewTableau& t) {
    auto m = t.content();
    std::vector<int> nu;
    for (int i = 1; i <= t.alphabet_size; ++i) nu.push_back(static_cast<int>(m[i]));
    for (size_t i = 0; i + 1 < nu.size(); ++i)
        if (nu[i] < nu[i + 1]) throw std::invalid_argument("content is not a partition");
    Partition content(nu, t.box());
    return {t.shape.inner, content, complement(t.shape.outer)};
}

Word standardize(const Word& w) {
    // equal letters are numbered left to right (right-to-left reading of a
    // tableau row makes this the standard order northwest < southeast)
    const int s = w.length();
    std::vector<int> order(s);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return w.letters[a] < w.letters[b]; });
    std::vector<int> letters(s);
    for (int k = 0; k < s; ++k) letters[order[k]] = k + 1;
    return Word(letters, s);
}

SkewTableau standardize(const SkewTableau& t) {
    // standard order: by letter, ties broken northwest before southeast,
    // i.e. higher rows first and, within a row, left to right
    struct Cell {
        int r, c, v;
    };
    std::vector<Cell> cells;
    const int d = t.box().d;
    for (int r = 1; r <= d; ++r)
        for (int c = t.shape.row_begin(r); c <= t.shape.row_end(r); ++c)
            cells.push_back({r, c, t.at(r, c)});
    std::stable_sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
        if (a.v != b.v) return a.v < b.v;
        if (a.r != b.r) return a.r > b.r;
        return a.c < b.c;
    });
    std::vector<std::vector<int>> rows(d);
    for (int r = 1; r <= d; ++r)
        rows[r - 1].resize(t.shape.row_end(r) - t.shape.row_begin(r) + 1, 0);
    int label = 1;
    for (const auto& cl : cells) rows[cl.r - 1][cl.c - t.shape.row_begin(cl.r)] = label++;
    return SkewTableau(t.shape, rows, static_cast<int>(cells.size()), t.row_strict);
}

Matrix recording_matrix(const SkewTableau& t) {
    const int d = t.box().d;
    const int m = std::max(d, t.alphabet_size);
    Matrix mat(m, std::vector<long long>(m, 0));
    for (int r = 1; r <= d; ++r)
        for (int x : t.rows[r - 1]) ++mat[r - 1][x - 1];
    return mat;
}

SkewTableau tableau_from_matrix(const Matrix& m, const SkewShape& shape, int alphabet_size) {
    const int d = shape.box().d;
    std::vector<std::vector<int>> rows(d);
    for (int r = 1; r <= d; ++r) {
        long long want = shape.row_end(r) - shape.row_begin(r) + 1;
        long long got = 0;
        if (r <= static_cast<int>(m.size()))
            for (size_t j = 0; j < m[r - 1].size(); ++j) {
                for (long long k = 0; k < m[r - 1][j]; ++k) rows[r - 1].push_back(static_cast<int>(j + 1));
                got += m[r - 1][j];
            }
        if (got != want) throw std::invalid_argument("matrix row sums do not match shape");
    }
    return SkewTableau(shape, rows, alphabet_size);
}

Word dual_word(const Word& w) {
    std::vector<int> letters(w.letters.rbegin(), w.letters.rend());
    for (int& x : letters) x = w.alphabet_size - x + 1;
    return Word(letters, w.alphabet_size);
}

SkewTableau rotate_tableau(const SkewTableau& t) {
    SkewShape rsh = rotate_shape(t.shape);
    const int d = t.box().d;
    std::vector<std::vector<int>> rows(d);
    for (int r = 1; r <= d; ++r) {
        int src = d - r + 1;
        const auto& s = t.rows[src - 1];
        auto& dst = rows[r - 1];
        dst.assign(s.rbegin(), s.rend());
        for (int& x : dst) x = t.alphabet_size - x + 1;
    }
    return SkewTableau(rsh, rows, t.alphabet_size, t.row_strict);
}

SkewTableau transpose_tableau(const SkewTableau& t) {
    SkewShape tsh = transpose_shape(t.shape);
    const int td = tsh.box().d;
    std::vector<std::vector<int>> rows(td);
    for (int r = 1; r <= td; ++r)
        for (int c = tsh.row_begin(r); c <= tsh.row_end(r); ++c) rows[r - 1].push_back(t.at(c, r));
    return SkewTableau(tsh, rows, t.alphabet_size, !t.row_strict);
}

SkewTableau yamanouchi_tableau(const Partition& nu, int alphabet_size) {
    SkewShape sh(nu, Partition(std::vector<int>{}, nu.box));
    std::vector<std::vector<int>> rows(nu.box.d);
    for (int r = 1; r <= nu.box.d; ++r) rows[r - 1].assign(nu.part(r), r);
    return SkewTableau(sh, rows, alphabet_size);
}

SkewTableau yamanouchi_tableau(const Partition& nu) {
    return yamanouchi_tableau(nu, std::max(1, nu.box.d));
}

SkewTableau opposite_yamanouchi_tableau(const Partition& nu, int alphabet_size) {
    // column c holds the consecutive letters alphabet-h_c+1..alphabet bottom
    // to top, where h_c is the height of column c
    Partition nut = transpose(nu);
    std::vector<std::vector<int>> rows(nu.box.d);
    for (int r = 1; r <= nu.box.d; ++r)
        for (int c = 1; c <= nu.part(r); ++c)
            rows[r - 1].push_back(alphabet_size - nut.part(c) + r);
    SkewShape sh(nu, Partition(std::vector<int>{}, nu.box));
    return SkewTableau(sh, rows, alphabet_size);
}

SkewTableau tableau_from_row_word(const Word& w, const SkewShape& shape) {
    const int d = shape.box().d;
    std::vector<std::vector<int>> rows(d);
    size_t k = 0;
    for (int r = 1; r <= d; ++r) {
        int len = shape.row_end(r) - shape.row_begin(r) + 1;
        if (k + len > w.letters.size()) throw std::invalid_argument("word shorter than shape");
        rows[r - 1].assign(w.letters.begin() + k, w.letters.begin() + k + len);
        std::reverse(rows[r - 1].begin(), rows[r - 1].end());
        k += len;
    }
    if (k != w.letters.size()) throw std::invalid_argument("word longer than shape");
    return SkewTableau(shape, rows, w.alphabet_size);
}

SkewTableau tableau_from_column_word(const Word& w, const SkewShape& shape) {
    const int d = shape.box().d;
    std::vector<std::vector<int>> rows(d);
    for (int r = 1; r <= d; ++r)
        rows[r - 1].resize(shape.row_end(r) - shape.row_begin(r) + 1, 0);
    size_t k = 0;
    for (int c = shape.box().width; c >= 1; --c)
        for (int r = 1; r <= d; ++r)
            if (shape.contains(r, c)) {
                if (k >= w.letters.size()) throw std::invalid_argument("word shorter than shape");
                rows[r - 1][c - shape.row_begin(r)] = w.letters[k++];
            }
    if (k != w.letters.size()) throw std::invalid_argument("word longer than shape");
    return SkewTableau(shape, rows, w.alphabet_size);
}

std::string to_ascii(const SkewTableau& t) {
    std::ostringstream out;
    const int d = t.box().d;
    for (int r = d; r >= 1; --r) {
        for (int c = 1; c <= t.box().width; ++c) {
            if (t.shape.contains(r, c)) {
                int v = t.at(r, c);
                out << (v < 10 ? " " : "") << v << " ";
            } else if (c <= t.shape.row_end(r)) {
                out << " . ";
            } else {
                out << "   ";
            }
        }
        out << "\n";
    }
    return out.str();
}

std::string to_json(const SkewTableau& t) {
    nlohmann::json j;
    j["n"] = t.box().n();
    j["d"] = t.box().d;
    j["inner"] = t.shape.inner.trimmed();
    j["outer"] = t.shape.outer.trimmed();
    j["rows"] = t.rows;
    if (t.alphabet_size != t.box().d) j["alphabet"] = t.alphabet_size;
    if (t.row_strict) j["row_strict"] = true;
    return j.dump();
}

SkewTableau tableau_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    int n = j.at("n").get<int>();
    int d = j.at("d").get<int>();
    AmbientRectangle box{d, n - d};
    Partition outer(j.at("outer").get<std::vector<int>>(), box);
    Partition inner(j.at("inner").get<std::vector<int>>(), box);
    auto rows = j.at("rows").get<std::vector<std::vector<int>>>();
    int alpha = j.contains("alphabet") ? j.at("alphabet").get<int>() : d;
    bool rstrict = j.contains("row_strict") && j.at("row_strict").get<bool>();
    return SkewTableau(SkewShape(outer, inner), rows, alpha, rstrict);
}

Matrix rotate_matrix(const Matrix& m) {
    const size_t k = m.size();
    Matrix out(k, std::vector<long long>(k, 0));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) out[i][j] = m[k - 1 - i][k - 1 - j];
    return out;
}

Matrix transpose_matrix(const Matrix& m) {
    const size_t k = m.size();
    Matrix out(m.empty() ? 0 : m[0].size(), std::vector<long long>(k, 0));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < m[i].size(); ++j) out[j][i] = m[i][j];
    return out;
}

}  // namespace lrkit
