#include "lrkit/puzzles.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "lrkit/symmetries.hpp"

namespace lrkit {

namespace {

enum UpType { U_NONE, U_ZERO, U_ONE, U_R1, U_R2, U_R3 };
enum DownType { D_NONE, D_ZERO, D_ONE, D_R1, D_R2, D_R3 };

// canonical patterns; the interior edge of every rhombus carries 0
UpType up_type(int b, int le, int re) {
    if (b == 0 && le == 0 && re == 0) return U_ZERO;
    if (b == 1 && le == 1 && re == 1) return U_ONE;
    if (b == 1 && le == 0 && re == 0) return U_R1;
    if (b == 0 && le == 0 && re == 1) return U_R2;
    if (b == 0 && le == 1 && re == 0) return U_R3;
    return U_NONE;
}

DownType down_type(int t, int le, int re) {
    if (t == 0 && le == 0 && re == 0) return D_ZERO;
    if (t == 1 && le == 1 && re == 1) return D_ONE;
    if (t == 1 && le == 0 && re == 0) return D_R1;
    if (t == 0 && le == 1 && re == 0) return D_R2;
    if (t == 0 && le == 0 && re == 1) return D_R3;
    return D_NONE;
}

UpType up_at(const Puzzle& p, int y, int x) { return up_type(p.h[y][x], p.l[y][x], p.r[y][x]); }

DownType down_at(const Puzzle& p, int y, int x) {
    return down_type(p.h[y + 1][x], p.r[y][x], p.l[y][x + 1]);
}

}  // namespace

Puzzle empty_puzzle(int n) {
    Puzzle p;
    p.n = n;
    p.h.resize(n);
    p.l.resize(n);
    p.r.resize(n);
    for (int y = 0; y < n; ++y) {
        p.h[y].assign(n - y, 0);
        p.l[y].assign(n - y, 0);
        p.r[y].assign(n - y, 0);
    }
    return p;
}

PuzzleBoundary boundary(const Puzzle& p) {
    std::vector<int> nw, ne, south;
    for (int y = 0; y < p.n; ++y) nw.push_back(p.l[y][0]);
    for (int k = 1; k <= p.n; ++k) ne.push_back(p.r[p.n - k][k - 1]);
    for (int j = 1; j <= p.n; ++j) south.push_back(p.h[0][p.n - j]);
    return {BinaryWord{nw}, BinaryWord{ne}, BinaryWord{south}};
}

PuzzleBoundary boundary_from_partitions(const Partition& mu, const Partition& nu, const Partition& lam) {
    if (!(mu.box == nu.box) || !(mu.box == lam.box))
        throw std::invalid_argument("boundary partitions live in different rectangles");
    return {partition_to_word(mu), partition_to_word(nu), partition_to_word(lam)};
}

bool validate(const Puzzle& p) {
    const int n = p.n;
    if (n <= 0) return false;
    if (static_cast<int>(p.h.size()) != n || static_cast<int>(p.l.size()) != n ||
        static_cast<int>(p.r.size()) != n)
        return false;
    for (int y = 0; y < n; ++y)
        if (static_cast<int>(p.h[y].size()) != n - y || static_cast<int>(p.l[y].size()) != n - y ||
            static_cast<int>(p.r[y].size()) != n - y)
            return false;
    for (int y = 0; y < n; ++y)
        for (int x = 0; x <= n - 1 - y; ++x) {
            if ((p.h[y][x] & ~1) || (p.l[y][x] & ~1) || (p.r[y][x] & ~1)) return false;
            if (up_at(p, y, x) == U_NONE) return false;
        }
    for (int y = 0; y + 2 <= n; ++y)
        for (int x = 0; x <= n - 2 - y; ++x)
            if (down_at(p, y, x) == D_NONE) return false;
    // mutual rhombus pairing
    for (int y = 0; y < n; ++y)
        for (int x = 0; x <= n - 1 - y; ++x) {
            UpType u = up_at(p, y, x);
            if (u == U_R1 && !(x <= n - 2 - y && down_at(p, y, x) == D_R1)) return false;
            if (u == U_R2 && !(x >= 1 && down_at(p, y, x - 1) == D_R2)) return false;
            if (u == U_R3 && !(y >= 1 && down_at(p, y - 1, x) == D_R3)) return false;
        }
    for (int y = 0; y + 2 <= n; ++y)
        for (int x = 0; x <= n - 2 - y; ++x) {
            DownType dt = down_at(p, y, x);
            if (dt == D_R1 && up_at(p, y, x) != U_R1) return false;
            if (dt == D_R2 && up_at(p, y, x + 1) != U_R2) return false;
            if (dt == D_R3 && up_at(p, y + 1, x) != U_R3) return false;
        }
    return true;
}

PieceCounts piece_counts(const Puzzle& p) {
    PieceCounts c;
    for (int y = 0; y < p.n; ++y)
        for (int x = 0; x <= p.n - 1 - y; ++x) {
            UpType u = up_at(p, y, x);
            if (u == U_ONE) ++c.ones;
            if (u == U_ZERO) ++c.zeros;
            if (u == U_R1 || u == U_R2 || u == U_R3) ++c.rhombi;
        }
    for (int y = 0; y + 2 <= p.n; ++y)
        for (int x = 0; x <= p.n - 2 - y; ++x) {
            DownType dt = down_at(p, y, x);
            if (dt == D_ONE) ++c.ones;
            if (dt == D_ZERO) ++c.zeros;
        }
    return c;
}

std::vector<Puzzle> enumerate_puzzles(const PuzzleBoundary& b) {
    const int n = b.south.n();
    if (b.nw.n() != n || b.ne.n() != n) throw std::invalid_argument("boundary words differ in length");
    if (b.nw.ones != b.ne.ones || b.nw.ones != b.south.ones)
        throw std::invalid_argument("boundary words have different numbers of ones");
    std::vector<Puzzle> out;
    Puzzle p = empty_puzzle(n);
    for (int j = 1; j <= n; ++j) p.h[0][n - j] = b.south.bits[j - 1];
    for (int y = 0; y < n; ++y) p.l[y][0] = b.nw.bits[y];
    std::vector<int> ne_pin(n, 0);
    for (int k = 1; k <= n; ++k) ne_pin[n - k] = b.ne.bits[k - 1];  // ne_pin[y] = r[y][n-1-y]

    // r3_need marks columns whose next upward cell must close a vertical
    // rhombus opened in the previous row
    auto rec = [&](auto&& self, int y, int x, bool r2_force, bool r1_pending, std::vector<char>& r3_need,
                   std::vector<char>& r3_next) -> void {
        const int last = n - 1 - y;
        if (x > last) {
            if (r1_pending) return;
            if (y + 1 == n) {
                out.push_back(p);
                return;
            }
            std::vector<char> fresh(n, 0);
            self(self, y + 1, 0, false, false, r3_next, fresh);
            return;
        }
        int base = p.h[y][x];
        int left = p.l[y][x];
        int want_r;
        bool new_r1 = false;
        if (r2_force) {
            if (base != 0 || left != 0) return;
            want_r = 1;
        } else if (r3_need[x]) {
            if (base != 0 || left != 1) return;
            want_r = 0;
        } else if (base == 0 && left == 1) {
            return;  // R3 top with no matching bottom half below
        } else if (base == 1 && left == 1) {
            want_r = 1;
        } else if (base == 1 && left == 0) {
            want_r = 0;
            new_r1 = true;
        } else {
            want_r = 0;
        }
        if (x == last) {
            if (ne_pin[y] != want_r) return;
            p.r[y][x] = want_r;
            self(self, y, x + 1, false, r1_pending || new_r1, r3_need, r3_next);
            return;
        }
        p.r[y][x] = want_r;
        int ell = want_r;
        auto try_down = [&](int top, int right, bool next_r2, bool mark_r3) {
            p.h[y + 1][x] = top;
            p.l[y][x + 1] = right;
            if (mark_r3) r3_next[x] = 1;
            self(self, y, x + 1, next_r2, false, r3_need, r3_next);
            if (mark_r3) r3_next[x] = 0;
        };
        if (r1_pending || new_r1) {
            if (ell != 0) return;
            try_down(1, 0, false, false);  // right-leaned rhombus, bottom half
        } else if (ell == 1) {
            try_down(1, 1, false, false);  // all-one triangle
            try_down(0, 0, true, false);   // left-leaned rhombus, bottom half
        } else {
            try_down(0, 0, false, false);  // all-zero triangle
            try_down(0, 1, false, true);   // vertical rhombus, bottom half
        }
    };
    std::vector<char> need(n, 0), next(n, 0);
    rec(rec, 0, 0, false, false, need, next);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

Puzzle renormalize(Puzzle p) {
    // re-zero the interior edge of every rhombus, classifying each upward
    // cell by its two non-interior coordinates
    for (int y = 0; y < p.n; ++y)
        for (int x = 0; x <= p.n - 1 - y; ++x) {
            int b = p.h[y][x], le = p.l[y][x], re = p.r[y][x];
            if (b == 1 && le == 0)
                p.r[y][x] = 0;  // upper half of a right-leaned rhombus
            else if (b == 0 && re == 1)
                p.l[y][x] = 0;  // upper half of a left-leaned rhombus
            else if (le == 1 && re == 0)
                p.h[y][x] = 0;  // top half of a vertical rhombus
        }
    return p;
}

Puzzle rotate_cw(const Puzzle& p) {
    Puzzle q = empty_puzzle(p.n);
    const int n = p.n;
    for (int y = 0; y < n; ++y)
        for (int x = 0; x <= n - 1 - y; ++x) {
            int yy = n - 1 - y - x, xx = y;
            q.h[yy][xx] = p.r[y][x];
            q.l[yy][xx] = p.h[y][x];
            q.r[yy][xx] = p.l[y][x];
        }
    return q;
}

Puzzle mirror_swap(const Puzzle& p) {
    Puzzle q = empty_puzzle(p.n);
    const int n = p.n;
    for (int y = 0; y < n; ++y)
        for (int x = 0; x <= n - 1 - y; ++x) {
            int xx = n - 1 - y - x;
            q.h[y][xx] = 1 - p.h[y][x];
            q.l[y][xx] = 1 - p.r[y][x];
            q.r[y][xx] = 1 - p.l[y][x];
        }
    return renormalize(q);
}

}  // namespace

Puzzle rotation(const Puzzle& p, int thirds) {
    Puzzle q = p;
    thirds = ((thirds % 3) + 3) % 3;
    for (int k = 0; k < thirds; ++k) q = rotate_cw(q);
    return q;
}

Puzzle duality(const Puzzle& p, PuzzleDuality which) {
    switch (which) {
        case PuzzleDuality::spade: return mirror_swap(p);
        case PuzzleDuality::lozenge: return rotation(mirror_swap(rotation(p, 1)), 2);
        case PuzzleDuality::club: return rotation(mirror_swap(rotation(p, 2)), 1);
    }
    throw std::logic_error("unknown duality");
}

namespace {

// order of each left-leaned rhombus along the zero trail that passes
// through it vertically, keyed by its lower cell D(y,x)
std::map<std::pair<int, int>, int> walk_zero_trails(const Puzzle& p) {
    std::map<std::pair<int, int>, int> order;
    const int n = p.n;
    for (int door = 0; door < n; ++door) {
        if (p.h[0][door] != 0) continue;
        int y = 0, x = door, passes = 0;
        bool alive = true;
        while (alive) {
            UpType u = up_at(p, y, x);
            if (u == U_R2) {
                order[{y, x - 1}] = ++passes;
                ++y;
                --x;
                continue;
            }
            if (u != U_ZERO) throw std::invalid_argument("zero trail entered a non-zero piece");
            if (x == 0) break;  // exits through the north-west side
            int cx = x - 1;
            for (;;) {
                DownType dt = down_at(p, y, cx);
                if (dt == D_R1) {
                    if (cx == 0) {
                        alive = false;
                        break;
                    }
                    --cx;
                    continue;
                }
                if (dt == D_ZERO) {
                    ++y;
                    x = cx;
                    break;
                }
                throw std::invalid_argument("zero trail crossed an unexpected piece");
            }
        }
    }
    return order;
}

}  // namespace

SkewTableau tao_to_tableau(const Puzzle& p) {
    if (!validate(p)) throw std::invalid_argument("malformed puzzle");
    const int n = p.n;
    PuzzleBoundary b = boundary(p);
    const int d = b.south.ones;
    if (d == 0 || d == n) throw std::invalid_argument("degenerate boundary");
    Partition mu = word_to_partition(b.nw);
    Partition nu = word_to_partition(b.ne);
    Partition lam = word_to_partition(b.south);
    auto r2_order = walk_zero_trails(p);
    // the door of the i-th one of the south word carries row i
    std::vector<std::vector<int>> rows(d);
    int row = 0;
    for (int j = 1; j <= n; ++j) {
        if (b.south.bits[j - 1] != 1) continue;
        ++row;
        int y = 0, x = n - j;
        bool alive = true;
        while (alive) {
            UpType u = up_at(p, y, x);
            if (u == U_R1) {
                ++y;
                continue;
            }
            if (u != U_ONE) throw std::invalid_argument("one trail entered a non-one piece");
            if (x + y == n - 1) break;  // exits through the north-east side
            for (;;) {
                DownType dt = down_at(p, y, x);
                if (dt == D_ONE) {
                    ++y;
                    break;
                }
                if (dt == D_R2) {
                    auto it = r2_order.find({y, x});
                    if (it == r2_order.end())
                        throw std::invalid_argument("left-leaned rhombus missed by the zero trails");
                    rows[row - 1].push_back(it->second);
                    ++x;
                    if (x + y == n - 1) {
                        alive = false;
                        break;
                    }
                    continue;
                }
                throw std::invalid_argument("one trail crossed an unexpected piece");
            }
        }
    }
    SkewShape shape(complement(nu), lam);
    SkewTableau t(shape, rows, d);
    if (!is_lr_tableau(t)) throw std::invalid_argument("trail words do not form an LR tableau");
    if (!(boundary_data(t).nu == mu)) throw std::invalid_argument("trail content mismatch");
    return t;
}

std::string puzzle_to_text(const Puzzle& p) {
    PuzzleBoundary b = boundary(p);
    std::ostringstream out;
    out << p.n << "\n"
        << word_to_string(b.nw) << " " << word_to_string(b.ne) << " " << word_to_string(b.south) << "\n";
    auto emit = [&](const std::vector<std::vector<int>>& arr, const char* name) {
        out << name << "\n";
        for (const auto& row : arr) {
            for (int v : row) out << v;
            out << "\n";
        }
    };
    emit(p.h, "h");
    emit(p.l, "l");
    emit(p.r, "r");
    return out.str();
}

Puzzle puzzle_from_text(const std::string& text) {
    std::istringstream in(text);
    int n;
    if (!(in >> n) || n <= 0) throw std::invalid_argument("bad puzzle size");
    std::string nw, ne, south;
    in >> nw >> ne >> south;
    Puzzle p = empty_puzzle(n);
    auto read = [&](std::vector<std::vector<int>>& arr, const std::string& name) {
        std::string tag;
        in >> tag;
        if (tag != name) throw std::invalid_argument("bad puzzle section: " + tag);
        for (int y = 0; y < n; ++y) {
            std::string row;
            in >> row;
            if (static_cast<int>(row.size()) != n - y) throw std::invalid_argument("bad puzzle row length");
            for (int x = 0; x < n - y; ++x) {
                if (row[x] != '0' && row[x] != '1') throw std::invalid_argument("bad puzzle label");
                arr[y][x] = row[x] - '0';
            }
        }
    };
    read(p.h, "h");
    read(p.l, "l");
    read(p.r, "r");
    PuzzleBoundary b = boundary(p);
    if (word_to_string(b.nw) != nw || word_to_string(b.ne) != ne || word_to_string(b.south) != south)
        throw std::invalid_argument("stated boundary disagrees with the edge labels");
    if (!validate(p)) throw std::invalid_argument("edge labels do not tile the triangle");
    return p;
}

std::string puzzle_to_svg(const Puzzle& p) {
    const double s = 40.0;
    const double hgt = s * 0.8660254037844386;
    const int n = p.n;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << (n + 1) * s << "\" height=\""
        << (n + 1) * hgt << "\">\n";
    auto px = [&](int y, int x) { return (x + 0.5 * y + 0.5) * s; };
    auto py = [&](int y) { return (n - y + 0.5) * hgt; };
    auto tri = [&](double x1, double y1, double x2, double y2, double x3, double y3, const char* fill) {
        out << "<polygon points=\"" << x1 << "," << y1 << " " << x2 << "," << y2 << " " << x3 << "," << y3
            << "\" fill=\"" << fill << "\" stroke=\"#555\" stroke-width=\"1\"/>\n";
    };
    for (int y = 0; y < n; ++y)
        for (int x = 0; x <= n - 1 - y; ++x) {
            UpType u = up_at(p, y, x);
            const char* fill = u == U_ONE ? "#9ecbff" : (u == U_ZERO ? "#ffd1dc" : "#ffffff");
            tri(px(y, x), py(y), px(y, x + 1), py(y), px(y + 1, x), py(y + 1), fill);
        }
    for (int y = 0; y + 2 <= n; ++y)
        for (int x = 0; x <= n - 2 - y; ++x) {
            DownType dt = down_at(p, y, x);
            const char* fill = dt == D_ONE ? "#9ecbff" : (dt == D_ZERO ? "#ffd1dc" : "#ffffff");
            tri(px(y, x + 1), py(y), px(y + 1, x), py(y + 1), px(y + 1, x + 1), py(y + 1), fill);
        }
    out << "</svg>\n";
    return out.str();
}

namespace {

// Guided reconstruction of the puzzle from its Tao tableau.  The one trails
// are read off the rows of t, the zero trails off the rows of club(t); the
// sweep fills the triangle row by row with backtracking on the rare
// genuinely ambiguous cell.
struct Reconstructor {
    int n = 0;
    Puzzle p;
    std::vector<int> ne_pin;
    std::vector<std::vector<int>> one_rows;   // letters per one trail
    std::vector<std::vector<int>> zero_rows;  // dual letters per zero trail

    struct Trail {
        int col = -1;
        size_t ptr = 0;
        int passes = 0;  // R1 passes for one trails, R2 passes for zero trails
        bool active = false;
        int row_index = 0;
    };
    std::vector<Trail> ones, zeros;
    std::vector<char> r3_need, r3_next;

    bool done = false;
    Puzzle result;

    int one_at(int col) const {
        for (size_t i = 0; i < ones.size(); ++i)
            if (ones[i].active && ones[i].col == col) return static_cast<int>(i);
        return -1;
    }
    int zero_at(int col) const {
        for (size_t i = 0; i < zeros.size(); ++i)
            if (zeros[i].active && zeros[i].col == col) return static_cast<int>(i);
        return -1;
    }

    void row(int y) {
        if (done) return;
        if (y == n) {
            for (const auto& t : ones)
                if (t.active || t.ptr != one_rows[t.row_index].size()) return;
            for (const auto& t : zeros)
                if (t.active || t.ptr != zero_rows[t.row_index].size()) return;
            if (validate(p)) {
                result = p;
                done = true;
            }
            return;
        }
        for (const auto& t : ones)
            if (t.active && (t.col > n - 1 - y || p.h[y][t.col] != 1)) return;
        for (const auto& t : zeros)
            if (t.active && (t.col > n - 1 - y || p.h[y][t.col] != 0)) return;
        for (int x = 0; x <= n - 1 - y; ++x)
            if (p.h[y][x] == 1 && one_at(x) < 0) return;
        cell(y, 0, false, false);
    }

    void cell(int y, int x, bool r2_force, bool r1_open) {
        if (done) return;
        const int last = n - 1 - y;
        if (x > last) {
            if (r1_open) return;
            std::vector<char> saved_need = r3_need, saved_next = r3_next;
            r3_need = saved_next;
            r3_next.assign(n, 0);
            row(y + 1);
            r3_need = saved_need;
            r3_next = saved_next;
            return;
        }
        const int base = p.h[y][x];
        const int left = p.l[y][x];
        const int ti = one_at(x);
        const int zi = zero_at(x);
        int want_r;
        bool new_r1 = false;
        if (r2_force) {
            // upper half of the left-leaned rhombus decided at the previous
            // cell; the vertical zero pass was accounted for there
            if (base != 0 || left != 0) return;
            want_r = 1;
        } else if (r3_need[x]) {
            if (base != 0 || left != 1 || zi >= 0 || ti >= 0) return;
            want_r = 0;
        } else if (base == 0 && left == 1) {
            return;  // a vertical-rhombus top with no bottom half below
        } else if (base == 1) {
            if (ti < 0) return;
            want_r = left;
            new_r1 = left == 0;
        } else {
            want_r = 0;
        }
        if (x == last && ne_pin[y] != want_r) return;
        p.r[y][x] = want_r;

        // a zero trail sitting on an all-zero cell exits west immediately,
        // crossing the already decided cells of this row
        bool zero_walks = !r2_force && !r3_need[x] && base == 0 && left == 0 && zi >= 0 && want_r == 0;
        std::vector<int> crossed;  // one-trail indices, east to west
        int zexit = -2;            // -1 NW exit, >=0 landing column, -3 fail
        if (zero_walks) {
            auto& zt = zeros[zi];
            if (x == 0) {
                zexit = -1;
            } else {
                int cx = x - 1;
                for (;;) {
                    DownType dt = down_at(p, y, cx);
                    if (dt == D_R1) {
                        int oi = one_at(cx);
                        if (oi < 0 || zt.ptr + crossed.size() >= zero_rows[zt.row_index].size() ||
                            zero_rows[zt.row_index][zt.ptr + crossed.size()] != ones[oi].passes + 1) {
                            zexit = -3;
                            break;
                        }
                        ++ones[oi].passes;
                        crossed.push_back(oi);
                        if (cx == 0) {
                            zexit = -1;
                            break;
                        }
                        --cx;
                        continue;
                    }
                    if (dt == D_ZERO) {
                        zexit = cx;
                        break;
                    }
                    zexit = -3;
                    break;
                }
            }
            if (zexit != -3) {
                zt.ptr += crossed.size();
                if (zexit == -1) {
                    if (zt.ptr != zero_rows[zt.row_index].size()) zexit = -3;
                }
            }
            if (zexit == -3) {
                for (int oi : crossed) --ones[oi].passes;
                return;
            }
            if (zexit == -1)
                zt.active = false;
            else
                zt.col = zexit;
        }
        auto undo_zero = [&]() {
            if (!zero_walks) return;
            auto& zt = zeros[zi];
            zt.ptr -= crossed.size();
            for (int oi : crossed) --ones[oi].passes;
            if (zexit == -1)
                zt.active = true;
            else
                zt.col = x;
        };

        if (x == last) {
            if (ti >= 0) {
                auto& ot = ones[ti];
                // the trail exits east through the boundary door
                if (new_r1 || want_r != 1 || ot.ptr != one_rows[ot.row_index].size()) {
                    undo_zero();
                    return;
                }
                ot.active = false;
                cell(y, x + 1, false, false);
                ot.active = true;
            } else {
                cell(y, x + 1, false, new_r1);
            }
            undo_zero();
            return;
        }

        auto try_down = [&](int top, int right, bool next_r2, bool mark_r3) {
            int sh = p.h[y + 1][x], sl = p.l[y][x + 1];
            p.h[y + 1][x] = top;
            p.l[y][x + 1] = right;
            if (mark_r3) r3_next[x] = 1;
            cell(y, x + 1, next_r2, false);
            if (mark_r3) r3_next[x] = 0;
            p.h[y + 1][x] = sh;
            p.l[y][x + 1] = sl;
        };

        if (new_r1) {
            // D(y,x) completes the right-leaned rhombus; the one trail
            // ascends in place
            try_down(1, 0, false, false);
            undo_zero();
            return;
        }
        if (want_r == 1) {
            // the one trail leaves U(y,x) east: it either turns up through an
            // all-one lower cell or crosses a left-leaned rhombus
            if (ti < 0 && !r2_force) {
                undo_zero();
                return;
            }
            int oi = r2_force ? one_at(x) : ti;
            if (oi < 0) {
                undo_zero();
                return;
            }
            try_down(1, 1, false, false);
            auto& ot = ones[oi];
            int zj = zero_at(x + 1);
            if (zj >= 0 && ot.ptr < one_rows[ot.row_index].size() &&
                one_rows[ot.row_index][ot.ptr] == zeros[zj].passes + 1) {
                ++ot.ptr;
                ot.col = x + 1;
                ++zeros[zj].passes;
                zeros[zj].col = x;
                try_down(0, 0, true, false);
                --ot.ptr;
                ot.col = x;
                --zeros[zj].passes;
                zeros[zj].col = x + 1;
            }
            undo_zero();
            return;
        }
        try_down(0, 0, false, false);
        try_down(0, 1, false, true);
        undo_zero();
    }
};

}  // namespace

Puzzle tao_from_tableau(const SkewTableau& t) {
    if (!is_lr_tableau(t)) throw std::invalid_argument("tao inverse expects an LR tableau");
    BoundaryTriple bd = boundary_data(t);  // tableau boundary (lam, mu, nu) of the puzzle
    const int n = t.box().n();
    const int d = t.box().d;
    Reconstructor rec;
    rec.n = n;
    rec.p = empty_puzzle(n);
    rec.r3_need.assign(n, 0);
    rec.r3_next.assign(n, 0);
    PuzzleBoundary pb = boundary_from_partitions(bd.nu, bd.lam, bd.mu);
    for (int j = 1; j <= n; ++j) rec.p.h[0][n - j] = pb.south.bits[j - 1];
    for (int y = 0; y < n; ++y) rec.p.l[y][0] = pb.nw.bits[y];
    rec.ne_pin.assign(n, 0);
    for (int k = 1; k <= n; ++k) rec.ne_pin[n - k] = pb.ne.bits[k - 1];
    rec.one_rows.resize(d);
    for (int i = 0; i < d; ++i) rec.one_rows[i] = t.rows[i];
    {
        int row = 0;
        for (int j = 1; j <= n; ++j)
            if (pb.south.bits[j - 1] == 1) {
                Reconstructor::Trail ot;
                ot.col = n - j;
                ot.active = true;
                ot.row_index = row++;
                rec.ones.push_back(ot);
            }
    }
    // zero trails: the j-th zero of the south word from the right carries
    // row j of club(t)
    SkewTableau ct = club(t);
    rec.zero_rows.resize(n - d);
    for (int j = 0; j < n - d; ++j)
        rec.zero_rows[j] = j < ct.box().d ? ct.rows[j] : std::vector<int>{};
    {
        int row = 0;
        for (int j = n; j >= 1; --j)
            if (pb.south.bits[j - 1] == 0) {
                Reconstructor::Trail zt;
                zt.col = n - j;
                zt.active = true;
                zt.row_index = row++;
                rec.zeros.push_back(zt);
            }
    }
    rec.row(0);
    if (!rec.done) throw std::invalid_argument("no puzzle reconstructs the tableau");
    return rec.result;
}

}  // namespace lrkit
