#pragma once

#include "lrkit/symmetries.hpp"
#include "lrkit/tableaux.hpp"

namespace lrkit {

// Right companion (Gelfand-Tsetlin pattern of shape nu): row j lists the
// rows of t that contain the letter j.  Stored as a straight tableau.
SkewTableau right_companion(const SkewTableau& t);

// Left companion: shape mu, weight rev(lam^v / nu), read off the nested
// partition sequence of the recording matrix.
SkewTableau left_companion(const SkewTableau& t);

// Inverse of the right companion map given the boundary (mu, nu, lam).
SkewTableau companion_inverse(const SkewTableau& g, const BoundaryTriple& b);

// GT pattern view: row i is the shape occupied by the entries <= i.
std::vector<std::vector<int>> gt_rows(const SkewTableau& g);

// Validity of a companion for a boundary.  Both the crystal-length route
// and the betweenness-inequality route are evaluated; they must agree.
bool validate_right(const SkewTableau& g, const Partition& mu);
bool validate_left(const SkewTableau& l, const Partition& nu);

// Companion-level orthogonal transpose and duality; mu is the inner shape
// of the underlying LR tableau (the outer shape is mu + content(g)).
SkewTableau companion_lozenge(const SkewTableau& g, const Partition& mu);
SkewTableau companion_spade(const SkewTableau& g, const Partition& mu);

// Vertices of the double crystal ladder: row j lists, weakly increasing,
// the rows of sigma...sigma T that contain j.  Intermediate vertices need
// not satisfy the betweenness conditions, so they are plain fillings.
struct CompanionFilling {
    std::vector<std::vector<int>> rows;
    bool operator==(const CompanionFilling&) const = default;
};
CompanionFilling to_filling(const SkewTableau& g);
Matrix filling_matrix(const CompanionFilling& f, int dim);
CompanionFilling theta(const CompanionFilling& f, int i, int alphabet);

// theta_0 = the full staircase; lands on the anti-normal form of g.
SkewTableau theta_zero(const SkewTableau& g);

struct CompanionPair {
    SkewTableau left;
    SkewTableau right;
    bool operator==(const CompanionPair&) const = default;
};

CompanionPair companion_pair(const SkewTableau& t);
bool validate_pair(const CompanionPair& p, const BoundaryTriple& b);

// A hive is specified by a companion pair together with its boundary.
struct Hive {
    CompanionPair pair;
    BoundaryTriple boundary;
    bool operator==(const Hive&) const = default;
};

Hive hive_from_pair(const CompanionPair& p, const BoundaryTriple& b);
Hive hive_from_tableau(const SkewTableau& t);
SkewTableau hive_to_tableau(const Hive& h);
Hive symmetry_on_hive(GroupElement g, const Hive& h);

std::string hive_to_json(const Hive& h);
Hive hive_from_json(const std::string& text);

}  // namespace lrkit
