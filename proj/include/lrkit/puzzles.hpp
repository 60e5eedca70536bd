#pragma once

#include <string>
#include <tuple>

#include "lrkit/tableaux.hpp"

namespace lrkit {

// Edge labeling of the side-n triangular lattice.  Rows are indexed by the
// height y; within a row, cells and edges are indexed left to right.
//   h[y][x], y = 0..n-1: base edge of the upward cell U(y,x), x = 0..n-1-y
//   l[y][x]: left edge of U(y,x);  r[y][x]: right edge of U(y,x)
// The downward cell D(y,x), x = 0..n-2-y, has top edge h[y+1][x], left edge
// r[y][x] and right edge l[y][x+1].  Canonical form: the interior edge of
// every rhombus carries the label 0.
struct Puzzle {
    int n = 0;
    std::vector<std::vector<int>> h, l, r;

    bool operator==(const Puzzle&) const = default;
    bool operator<(const Puzzle& o) const { return std::tie(h, l, r) < std::tie(o.h, o.l, o.r); }
};

Puzzle empty_puzzle(int n);

struct PuzzleBoundary {
    BinaryWord nw, ne, south;
    bool operator==(const PuzzleBoundary&) const = default;
};

// Boundary words read clockwise from the lower-left corner.
PuzzleBoundary boundary(const Puzzle& p);
PuzzleBoundary boundary_from_partitions(const Partition& mu, const Partition& nu, const Partition& lam);

bool validate(const Puzzle& p);

std::vector<Puzzle> enumerate_puzzles(const PuzzleBoundary& b);

enum class PuzzleDuality { spade, club, lozenge };

// Diagonal reflection with 0/1 label swap; boundary transforms are
// (mu,nu,lam) -> (nu^t,mu^t,lam^t), (mu^t,lam^t,nu^t), (lam^t,nu^t,mu^t).
Puzzle duality(const Puzzle& p, PuzzleDuality which);

// Clockwise rotation by thirds * 2pi/3.
Puzzle rotation(const Puzzle& p, int thirds);

// Tao's trail walk: puzzle with boundary (mu,nu,lam) corresponds to the LR
// tableau with boundary (lam,mu,nu), i.e. shape nu^v / lam and content mu.
SkewTableau tao_to_tableau(const Puzzle& p);
Puzzle tao_from_tableau(const SkewTableau& t);

std::string puzzle_to_text(const Puzzle& p);
Puzzle puzzle_from_text(const std::string& text);
std::string puzzle_to_svg(const Puzzle& p);

// Piece census: (all-one triangles, all-zero triangles, rhombi).
struct PieceCounts {
    long long ones = 0, zeros = 0, rhombi = 0;
};
PieceCounts piece_counts(const Puzzle& p);

}  // namespace lrkit
