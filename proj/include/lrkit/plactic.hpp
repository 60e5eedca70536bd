#pragma once

#include <utility>

#include "lrkit/tableaux.hpp"

namespace lrkit {

struct TableauPair {
    SkewTableau p;  // insertion tableau
    SkewTableau q;  // recording tableau
};

// Burge array: top weakly increases and, within equal top letters, the
// bottom letters weakly decrease.
struct BurgeArray {
    Word top;
    Word bottom;

    BurgeArray() = default;
    BurgeArray(Word t, Word b);
    bool operator==(const BurgeArray&) const = default;
};

// Shape-and-filling equality that ignores the ambient rectangle.
bool same_filling(const SkewTableau& a, const SkewTableau& b);

SkewTableau contracting_slide(const SkewTableau& t, int row, int col);
SkewTableau expanding_slide(const SkewTableau& t, int row, int col);

SkewTableau rectify(const SkewTableau& t);
SkewTableau arectify(const SkewTableau& t);

TableauPair burge_insert(const Word& w);
TableauPair burge_insert_biword(const BurgeArray& b);
BurgeArray burge_inverse(const TableauPair& pair);

// Standard tableau of shape content(w) whose row i lists the positions of
// the letter i in the Yamanouchi word w.
SkewTableau u_of_w(const Word& w);

bool knuth_equivalent(const SkewTableau& a, const SkewTableau& b);
bool dual_knuth_equivalent(const SkewTableau& a, const SkewTableau& b);

// Tableau switching: t extends s; returns (a, b) with a Knuth equivalent to
// t, b Knuth equivalent to s and b extending a.  Hybrid pairs (one member
// row-strict) are supported; slides use the moving member's strictness.
std::pair<SkewTableau, SkewTableau> switch_tableaux(const SkewTableau& s, const SkewTableau& t);

// The unique tableau dual Knuth equivalent to dual_rep and Knuth equivalent
// to knuth_rep, computed by a two-switch circuit.
SkewTableau haiman_intersection(const SkewTableau& dual_rep, const SkewTableau& knuth_rep);

// Three-fold multitableaux: b extends a and c extends b.  s1 switches the
// first two members, s2 the last two.
struct ThreeFold {
    SkewTableau a, b, c;
};
ThreeFold s1(const ThreeFold& f);
ThreeFold s2(const ThreeFold& f);

}  // namespace lrkit
