#pragma once

#include <string>

#include "lrkit/tableaux.hpp"

namespace lrkit {

// The twelve elements of the symmetry group acting on LR tableaux, named by
// their canonical factorizations into the generators spade, lozenge, e and
// rotation.
enum class GroupElement {
    id,
    spade,      // (mu,nu,lam) -> (nu^t, mu^t, lam^t)
    club,       // -> (mu^t, lam^t, nu^t)
    lozenge,    // -> (lam^t, nu^t, mu^t)
    rot120,     // spade . lozenge: -> (nu, lam, mu)
    rot240,     // lozenge . spade: -> (lam, mu, nu)
    rho,        // rotation . reversal: -> (lam, nu, mu)
    rho1,       // -> (nu, mu, lam)
    rho2,       // -> (mu, lam, nu)
    varrho,     // lozenge . rho: -> (mu^t, nu^t, lam^t)
    spade_rho,  // -> (nu^t, lam^t, mu^t)
    club_rho,   // -> (lam^t, mu^t, nu^t)
};

constexpr GroupElement kAllGroupElements[] = {
    GroupElement::id,     GroupElement::spade,  GroupElement::club,   GroupElement::lozenge,
    GroupElement::rot120, GroupElement::rot240, GroupElement::rho,    GroupElement::rho1,
    GroupElement::rho2,   GroupElement::varrho, GroupElement::spade_rho, GroupElement::club_rho,
};

std::string group_element_name(GroupElement g);
GroupElement group_element_from_name(const std::string& name);
GroupElement group_multiply(GroupElement g, GroupElement h);  // apply h first
BoundaryTriple boundary_action(GroupElement g, const BoundaryTriple& b);

// The orthogonal transpose on ballot / anti-ballot words.
Word lozenge_word(const Word& w);

// Orthogonal transpose on LR and opposite LR tableaux.  The default route
// is the linear recording-matrix algorithm for LR inputs; the word
// substitution route is kept as an independent oracle.
SkewTableau lozenge(const SkewTableau& t);
SkewTableau lozenge_via_matrix(const SkewTableau& t);
SkewTableau lozenge_via_word(const SkewTableau& t);

SkewTableau spade(const SkewTableau& t);
SkewTableau club(const SkewTableau& t);

SkewTableau rotate120(const SkewTableau& t);
SkewTableau rotate240(const SkewTableau& t);

SkewTableau rho(const SkewTableau& t);
SkewTableau varrho(const SkewTableau& t);

// Switching-based commuters.
SkewTableau rho1(const SkewTableau& t);
SkewTableau rho2(const SkewTableau& t);

SkewTableau apply(GroupElement g, const SkewTableau& t);

// Anti-normal form of the Yamanouchi tableau: column j from the right is
// filled with 1..lam^t_j bottom to top against the top edge.
SkewTableau antinormal_yamanouchi(const Partition& lam, int alphabet_size);

}  // namespace lrkit
