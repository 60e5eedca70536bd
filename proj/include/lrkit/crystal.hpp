#pragma once

#include <optional>

#include "lrkit/tableaux.hpp"

namespace lrkit {

// Result of the i-signature scan: positions (0-based) of the unbracketed
// minus letters (i+1) and plus letters (i); all minus positions precede all
// plus positions.
struct SignatureScan {
    std::vector<int> unbracketed_minus_positions;
    std::vector<int> unbracketed_plus_positions;

    int epsilon() const { return static_cast<int>(unbracketed_minus_positions.size()); }
    int phi() const { return static_cast<int>(unbracketed_plus_positions.size()); }
};

SignatureScan signature_scan(const Word& w, int i);

std::optional<Word> raise(const Word& w, int i);  // e_i
std::optional<Word> lower(const Word& w, int i);  // f_i

int epsilon(const Word& w, int i);
int phi(const Word& w, int i);

// Kashiwara reflection: replaces the unbracketed block (i+1)^a i^b by
// (i+1)^b i^a in place.
Word sigma(const Word& w, int i);

// Longest-element action along the staircase reduced word
// s1 . s2 s1 . s3 s2 s1 . ... of the reverse permutation of S_alphabet.
Word sigma_zero(const Word& w);

// Benkart-Sottile-Stroomer reversal: sigma_zero applied to the row word
// inside the skew shape.  Preserves the shape, reverses the weight.
SkewTableau reversal(const SkewTableau& t);

// Schutzenberger evacuation of a straight-shape tableau.
SkewTableau evacuate(const SkewTableau& t);

}  // namespace lrkit
