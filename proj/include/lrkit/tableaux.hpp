#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lrkit/shapes.hpp"

namespace lrkit {

struct Word {
    std::vector<int> letters;
    int alphabet_size = 0;

    Word() = default;
    Word(std::vector<int> ls, int alpha);
    int length() const { return static_cast<int>(letters.size()); }
    std::vector<long long> weight() const;  // indexed 1..alphabet_size
    bool operator==(const Word&) const = default;
};

// Skew semistandard tableau in French convention.  rows[r] holds row r+1
// (bottom to top), left to right; row r occupies columns inner_r+1..outer_r.
// A row_strict tableau is the transpose of a semistandard one: strictly
// increasing along rows, weakly increasing up columns.
struct SkewTableau {
    SkewShape shape;
    std::vector<std::vector<int>> rows;
    int alphabet_size = 0;
    bool row_strict = false;

    SkewTableau() = default;
    SkewTableau(SkewShape sh, std::vector<std::vector<int>> rs, int alpha, bool rstrict = false);

    const AmbientRectangle& box() const { return shape.box(); }
    long long size() const { return shape.size(); }
    int at(int r, int c) const;  // 1-based row/column inside the shape
    std::vector<long long> content() const;
    bool operator==(const SkewTableau&) const = default;
};

using Matrix = std::vector<std::vector<long long>>;

Word row_word(const SkewTableau& t);
Word column_word(const SkewTableau& t);

bool is_yamanouchi(const Word& w);
bool is_opposite_yamanouchi(const Word& w);

bool is_lr_tableau(const SkewTableau& t);
bool is_opposite_lr_tableau(const SkewTableau& t);

// (inner shape, content, complement of outer shape); content must be a
// partition, which holds for LR tableaux.
struct BoundaryTriple {
    Partition mu, nu, lam;
    bool operator==(const BoundaryTriple&) const = default;
};
BoundaryTriple boundary_data(const SkewTableau& t);

SkewTableau standardize(const SkewTableau& t);
Word standardize(const Word& w);

Matrix recording_matrix(const SkewTableau& t);
SkewTableau tableau_from_matrix(const Matrix& m, const SkewShape& shape, int alphabet_size);

// The rotation involution: rotate the shape by pi radians and replace every
// entry i with alphabet_size - i + 1.
SkewTableau rotate_tableau(const SkewTableau& t);
Word dual_word(const Word& w);

// Transpose the filling; swaps the row_strict flag.
SkewTableau transpose_tableau(const SkewTableau& t);

// Unique tableau of shape and weight nu.
SkewTableau yamanouchi_tableau(const Partition& nu);
SkewTableau yamanouchi_tableau(const Partition& nu, int alphabet_size);
// Opposite Yamanouchi tableau of shape nu and reversed weight.
SkewTableau opposite_yamanouchi_tableau(const Partition& nu, int alphabet_size);

// Rebuild a tableau of the given shape from its row word (inverse of
// row_word) or from its column word.
SkewTableau tableau_from_row_word(const Word& w, const SkewShape& shape);
SkewTableau tableau_from_column_word(const Word& w, const SkewShape& shape);

std::string to_ascii(const SkewTableau& t);
std::string to_json(const SkewTableau& t);
SkewTableau tableau_from_json(const std::string& text);

Matrix rotate_matrix(const Matrix& m);     // P_rev * M * P_rev
Matrix transpose_matrix(const Matrix& m);

}  // namespace lrkit
