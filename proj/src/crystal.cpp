#include "lrkit/crystal.hpp"

#include <stdexcept>

#include "lrkit/plactic.hpp"

namespace lrkit {

SignatureScan signature_scan(const Word& w, int i) {
    if (i < 1 || i >= w.alphabet_size) throw std::invalid_argument("reflection index out of range");
    SignatureScan out;
    std::vector<int> plus_stack;
    for (int k = 0; k < w.length(); ++k) {
        if (w.letters[k] == i) {
            plus_stack.push_back(k);
        } else if (w.letters[k] == i + 1) {
            if (!plus_stack.empty())
                plus_stack.pop_back();
            else
                out.unbracketed_minus_positions.push_back(k);
        }
    }
    out.unbracketed_plus_positions = plus_stack;
    return out;
}

int epsilon(const Word& w, int i) { return signature_scan(w, i).epsilon(); }
int phi(const Word& w, int i) { return signature_scan(w, i).phi(); }

std::optional<Word> raise(const Word& w, int i) {
    SignatureScan s = signature_scan(w, i);
    if (s.epsilon() == 0) return std::nullopt;
    Word out = w;
    out.letters[s.unbracketed_minus_positions.back()] = i;
    return out;
}

std::optional<Word> lower(const Word& w, int i) {
    SignatureScan s = signature_scan(w, i);
    if (s.phi() == 0) return std::nullopt;
    Word out = w;
    out.letters[s.unbracketed_plus_positions.front()] = i + 1;
    return out;
}

Word sigma(const Word& w, int i) {
    SignatureScan s = signature_scan(w, i);
    std::vector<int> pos = s.unbracketed_minus_positions;
    pos.insert(pos.end(), s.unbracketed_plus_positions.begin(), s.unbracketed_plus_positions.end());
    Word out = w;
    const int b = s.phi();
    for (size_t k = 0; k < pos.size(); ++k)
        out.letters[pos[k]] = static_cast<int>(k) < b ? i + 1 : i;
    return out;
}

Word sigma_zero(const Word& w) {
    Word out = w;
    const int m = w.alphabet_size;
    for (int round = 1; round <= m - 1; ++round)
        for (int i = 1; i <= m - round; ++i) out = sigma(out, i);
    return out;
}

SkewTableau reversal(const SkewTableau& t) {
    if (t.row_strict) throw std::invalid_argument("reversal expects a column-strict tableau");
    return tableau_from_row_word(sigma_zero(row_word(t)), t.shape);
}

SkewTableau evacuate(const SkewTableau& t) {
    if (!t.shape.inner.empty()) throw std::invalid_argument("evacuation expects a straight shape");
    return rectify(rotate_tableau(t));
}

}  // namespace lrkit
